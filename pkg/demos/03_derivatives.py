"""Exact directional derivatives of density functionals, their
finite-difference cross-check, and the star-density inequality."""

from fractions import Fraction

from graphoncalc import (DerivativeRequest, QuantumGraph, StepKernel,
                         complete_graph, gateaux_exact, gateaux_numeric,
                         parallel_edges, sidorenko_star_check, single_edge,
                         star_graph)

base = StepKernel([["1/2", "1/4"], ["1/4", "3/4"]])
direction = StepKernel([["1/8", "1/2"], ["1/2", "1/4"]])

edge = QuantumGraph.from_graph(single_edge())
print("The edge density is linear: its derivative is the direction's mean.")
print("  d t(K2)(f; g) =",
      gateaux_exact(edge, DerivativeRequest(base, (direction,))))

double = QuantumGraph.from_graph(parallel_edges(2))
zero = StepKernel.zero(2)
print("\nSecond derivative of the doubled edge at the zero kernel:")
print("  d^2 t(D2)(0; g, g) =",
      gateaux_exact(double, DerivativeRequest(zero, (direction, direction))),
      " (twice the mean of g^2)")

triangle = QuantumGraph.from_graph(complete_graph(3))
req = DerivativeRequest(base, (direction, direction))
exact = gateaux_exact(triangle, req)
approx = gateaux_numeric(triangle, req, Fraction(1, 10 ** 4))
print("\nCentral differences agree with the closed formula:")
print(f"  exact   {float(exact):.12f}")
print(f"  stencil {approx:.12f}")

over = DerivativeRequest(base, (direction,) * 4)
print("\nDerivatives beyond the edge count vanish identically:")
print("  d^4 t(K3) =", gateaux_exact(triangle, over))

print("\nStar densities dominate the same-edge-density constant:")
balanced = StepKernel([["1/4", "3/4"], ["3/4", "1/4"]])
lopsided = StepKernel([["3/4", "1/2"], ["1/2", "0"]])
for name, f in (("balanced rows", balanced), ("lopsided rows", lopsided)):
    r = sidorenko_star_check(3, f)
    print(f"  {name}: t(S3) = {r.star_density}, c^3 = {r.edge_density_power}, "
          f"equality: {r.equality}")
print("  equality holds exactly when every row mean equals the edge density.")
print("  (second kernel's rows average", "5/8 and 1/4", "- strict inequality)")
print("  star used:", star_graph(3).vertex_count, "vertices,",
      star_graph(3).edge_count, "edges")
