"""Walk through the combinatorial layer: isomorphism classes of loop-free
multigraphs, canonical keys, and exact morphism counting."""

from graphoncalc import (Multigraph, canonical_key, complete_graph, count_aut,
                         count_hom, count_surj, enumerate_Hn, enumerate_Hnp,
                         glue_product, graph_signature, matching,
                         parallel_edges, path_graph, simplify, single_edge,
                         strip_isolated, t_combinatorial)

print("Isomorphism classes with n edges and no isolated vertices:")
for n in range(5):
    classes = enumerate_Hn(n)
    print(f"  n={n}: {len(classes)} classes")
    if n <= 3:
        for g in classes:
            print(f"       {graph_signature(g)}")

print("\nCanonical keys ignore vertex names but respect labels:")
a = Multigraph(3, [(0, 1), (1, 2)])
b = Multigraph(3, [(2, 1), (0, 1)])
print("  two path drawings agree:", canonical_key(a) == canonical_key(b))
print("  path vs double edge differ:",
      canonical_key(path_graph(2)) != canonical_key(parallel_edges(2)))

print("\nClasses with a fixed vertex count keep their isolated vertices:")
for g in enumerate_Hnp(2, 4):
    print(f"  {graph_signature(g)}  ->  strips to "
          f"{graph_signature(strip_isolated(g))}")

print("\nGluing identifies equally labelled vertices:")
e = Multigraph(2, [(0, 1)], {1: 0})
print(f"  edge-with-label glued to itself: {graph_signature(glue_product(e, e))}")
print(f"  unlabelled gluing is disjoint union: "
      f"{graph_signature(glue_product(single_edge(), single_edge()))}")

print("\nMorphism counts (vertex map plus edge map, multiplicities matter):")
print("  hom(K2, K2) =", count_hom(single_edge(), single_edge()))
print("  hom(K3, K3) =", count_hom(complete_graph(3), complete_graph(3)))
print("  hom(D2, D3) =", count_hom(parallel_edges(2), parallel_edges(3)),
      " (each parallel copy picks a target copy)")
print("  surjections D2 ->> K2:", count_surj(parallel_edges(2), single_edge()))
print("  |Aut(D2)| =", count_aut(parallel_edges(2)),
      " (vertex swap times edge swap)")
for n in (1, 2, 3):
    print(f"  |Aut({n} disjoint edges)| =", count_aut(matching(n)))

print("\nNormalized counts are exact rationals:")
print("  t(K2, K2) =", t_combinatorial(single_edge(), single_edge()))
print("  t(K3, K3) =", t_combinatorial(complete_graph(3), complete_graph(3)))
print("  collapsing parallel edges:",
      graph_signature(simplify(parallel_edges(3))))
