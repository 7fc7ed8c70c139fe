"""Step kernels and exact homomorphism densities: norms, refinement,
tensor products, and the bridge to finite graph counting."""

from fractions import Fraction

from graphoncalc import (StepKernel, basis_edge, complete_graph, count_hom,
                         cut_norm, density, from_graph, is_admissible,
                         l1_norm, labelled_density, Multigraph, path_graph,
                         permute_parts, refine, single_edge, star_graph,
                         tensor_product)

half = StepKernel.constant(Fraction(1, 2))
print("Densities against the constant-1/2 kernel are powers of 1/2:")
for h in (single_edge(), path_graph(2), complete_graph(3)):
    print(f"  {h.edge_count} edges -> {density(h, half)}")

print("\nThe kernel of a finite graph reproduces its counting densities:")
g = Multigraph(3, [(0, 1), (1, 2), (0, 1)])  # path with one doubled edge
kernel = from_graph(g)
for h in (single_edge(), path_graph(2), star_graph(3)):
    direct = Fraction(count_hom(h, g), g.vertex_count ** h.vertex_count)
    print(f"  t({h.edge_count}-edge graph) = {density(h, kernel)} "
          f"= hom/{g.vertex_count}^{h.vertex_count} = {direct}")

f = StepKernel([["1/4", "3/4"], ["3/4", "1/8"]])
print("\nRefining a kernel never changes a density or a norm:")
print("  t(P3, f) =", density(path_graph(2), f),
      "=", density(path_graph(2), refine(f, 3)))
print("  l1 norm:", l1_norm(f), "=", l1_norm(refine(f, 4)))
print("  relabelling parts is also invisible:",
      density(path_graph(2), permute_parts(f, [2, 1])))

signed = StepKernel([[1, -1], [-1, 1]])
print("\nCut norm (exact supremum over rectangles):")
print("  checkerboard kernel:", cut_norm(signed))
print("  nonnegative kernels: cut norm = mean =", cut_norm(f))

print("\nTensor products multiply densities exactly:")
gk = StepKernel([["1/3", "2/3"], ["2/3", "0"]])
prod = tensor_product(f, gk)
h = path_graph(2)
print(f"  t(P3, f (x) g) = {density(h, prod)}")
print(f"  t(P3, f) t(P3, g) = {density(h, f) * density(h, gk)}")

print("\nPinned densities fix labelled vertices to points:")
pinned_edge = Multigraph(2, [(0, 1)], {1: 0, 2: 1})
pins = {1: Fraction(1, 8), 2: Fraction(7, 8)}
print("  fully pinned edge reads one cell:",
      labelled_density(pinned_edge, f, pins))

print("\nAdmissible movement directions at the boundary of the unit square:")
print("  at the zero kernel, a basis edge points inward:",
      is_admissible(StepKernel.zero(2), basis_edge(2, 1, 2)))
print("  ... but its negative does not:",
      is_admissible(StepKernel.zero(2), basis_edge(2, 1, 2).scaled(-1)))
