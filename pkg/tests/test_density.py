import random
from fractions import Fraction

import pytest

from graphoncalc import (ARG, DecoratedDensity, Multigraph, StepKernel,
                         basis_edge, density, enumerate_Hn, eval_decorated,
                         from_graph, glue_product, labelled_density, l1_norm,
                         multiplicativity_check, parallel_edges, path_graph,
                         permute_parts, pins_from_json, refine, simplify,
                         single_edge, star_graph, t_combinatorial)
from graphoncalc.limits import CapExceeded, Limits

from .bruteforce import random_kernel, random_multigraph


class TestUnlabelledDensity:
    def test_constant_kernel(self):
        rng = random.Random(0)
        for n in (1, 2, 3):
            for h in enumerate_Hn(n):
                c = Fraction(rng.randint(0, 8), 8)
                assert density(h, StepKernel.constant(c)) == c ** h.edge_count

    def test_empty_graph(self):
        f = random_kernel(random.Random(1), 3)
        assert density(Multigraph(0), f) == 1

    def test_graph_kernel_examples(self):
        fk2 = from_graph(single_edge())
        assert density(single_edge(), fk2) == Fraction(1, 2)
        assert density(star_graph(3), fk2) == Fraction(1, 8)

    def test_combinatorial_bridge(self):
        rng = random.Random(2)
        graphs = [g for n in (1, 2, 3) for g in enumerate_Hn(n)]
        for _ in range(25):
            h = rng.choice(graphs)
            g = random_multigraph(rng, max_vertices=4, max_edges=4)
            assert density(h, from_graph(g)) == t_combinatorial(h, g)

    def test_refine_and_permute_invariance(self):
        rng = random.Random(3)
        graphs = [g for n in (1, 2, 3) for g in enumerate_Hn(n)]
        for _ in range(10):
            f = random_kernel(rng, 3)
            h = rng.choice(graphs)
            value = density(h, f)
            assert density(h, refine(f, 2)) == value
            sigma = [1, 2, 3]
            rng.shuffle(sigma)
            assert density(h, permute_parts(f, sigma)) == value

    def test_zero_one_kernels_see_simple_graph(self):
        rng = random.Random(4)
        graphs = [g for n in (2, 3) for g in enumerate_Hn(n)]
        for _ in range(15):
            f = random_kernel(rng, 3, denominator=1)  # 0/1-valued
            h = rng.choice(graphs)
            assert density(h, f) == density(simplify(h), f)

    def test_l1_lipschitz_bound(self):
        rng = random.Random(5)
        graphs = [g for n in (1, 2, 3) for g in enumerate_Hn(n)]
        for _ in range(25):
            f = random_kernel(rng, 3)
            g = random_kernel(rng, 3)
            h = rng.choice(graphs)
            lhs = abs(density(h, f) - density(h, g))
            assert lhs <= h.edge_count * l1_norm(f - g)

    def test_vertex_cap(self):
        with pytest.raises(CapExceeded):
            density(star_graph(9), StepKernel.constant(Fraction(1, 2)))
        density(star_graph(9), StepKernel.constant(Fraction(1, 2)),
                limits=Limits(max_vertices=10))

    def test_parts_cap(self):
        big = StepKernel.zero(13)
        with pytest.raises(CapExceeded):
            density(single_edge(), big)


class TestLabelledDensity:
    def test_no_labels_reduces_to_density(self):
        f = random_kernel(random.Random(6), 3)
        h = path_graph(2)
        assert labelled_density(h, f, {}) == density(h, f)

    def test_fully_pinned_edge_reads_cell(self):
        f = random_kernel(random.Random(7), 4)
        h = Multigraph(2, [(0, 1)], {1: 0, 2: 1})
        pins = {1: Fraction(1, 8), 2: Fraction(5, 8)}  # parts 1 and 3
        assert labelled_density(h, f, pins) == f.matrix[0][2]

    def test_pin_representative_independence(self):
        f = random_kernel(random.Random(8), 4)
        h = Multigraph(2, [(0, 1)], {1: 0})
        v1 = labelled_density(h, f, {1: Fraction(1, 8)})
        v2 = labelled_density(h, f, {1: Fraction(3, 16)})  # same part
        assert v1 == v2

    def test_boundary_pin_rejected(self):
        f = random_kernel(random.Random(9), 4)
        h = Multigraph(2, [(0, 1)], {1: 0})
        with pytest.raises(ValueError):
            labelled_density(h, f, {1: Fraction(1, 4)})
        with pytest.raises(ValueError):
            labelled_density(h, f, {1: Fraction(0)})

    def test_missing_pin_rejected(self):
        f = random_kernel(random.Random(10), 4)
        h = Multigraph(2, [(0, 1)], {1: 0})
        with pytest.raises(ValueError):
            labelled_density(h, f, {})

    def test_pinned_product_identity(self):
        rng = random.Random(11)
        pins = {1: Fraction(1, 8), 2: Fraction(7, 16)}
        h1 = Multigraph(3, [(0, 1), (1, 2)], {1: 0, 2: 2})
        h2 = Multigraph(3, [(0, 2, 2)], {1: 0, 2: 1})
        for _ in range(10):
            f = random_kernel(rng, 4)
            lhs = labelled_density(h1, f, pins) * labelled_density(h2, f, pins)
            rhs = labelled_density(glue_product(h1, h2), f, pins)
            assert lhs == rhs

    def test_labelled_isolated_vertex_is_free(self):
        f = random_kernel(random.Random(12), 4)
        h = Multigraph(3, [(1, 2)], {1: 0})
        assert labelled_density(h, f, {1: Fraction(1, 8)}) == \
            density(path_graph(1), f)


class TestDecorated:
    def test_all_arg_slots_reduce_to_density(self):
        f = random_kernel(random.Random(13), 3)
        h = path_graph(2)
        d = DecoratedDensity.build(h, {(0, 1, 0): ARG, (1, 2, 0): ARG})
        assert eval_decorated(d, f) == density(h, f)

    def test_all_concrete_is_constant_in_argument(self):
        rng = random.Random(14)
        g1 = random_kernel(rng, 3)
        g2 = random_kernel(rng, 3)
        h = path_graph(2)
        d = DecoratedDensity.build(h, {(0, 1, 0): g1, (1, 2, 0): g2})
        v1 = eval_decorated(d, random_kernel(rng, 3))
        v2 = eval_decorated(d, random_kernel(rng, 2))
        assert v1 == v2

    def test_single_decorated_edge_integrates_direction(self):
        rng = random.Random(15)
        g = random_kernel(rng, 3)
        d = DecoratedDensity.build(single_edge(), {(0, 1, 0): g})
        mean = Fraction(sum(sum(row) for row in g.matrix), 9)
        assert eval_decorated(d, random_kernel(rng, 2)) == mean

    def test_parallel_slots_can_differ(self):
        rng = random.Random(16)
        g1 = basis_edge(2, 1, 2)
        g2 = StepKernel.constant(Fraction(1, 2), 2)
        d = DecoratedDensity.build(parallel_edges(2),
                                   {(0, 1, 0): g1, (0, 1, 1): g2})
        # integrand is g1(x,y) * g2(x,y): mean of the entrywise product
        assert eval_decorated(d, StepKernel.zero(2)) == Fraction(1, 4)

    def test_slot_cover_validation(self):
        with pytest.raises(ValueError):
            DecoratedDensity.build(parallel_edges(2), {(0, 1, 0): ARG})
        with pytest.raises(ValueError):
            DecoratedDensity.build(single_edge(),
                                   {(0, 1, 0): ARG, (0, 1, 1): ARG})

    def test_pinned_decorated(self):
        f = random_kernel(random.Random(17), 4)
        g = random_kernel(random.Random(18), 4)
        h = Multigraph(2, [(0, 1)], {1: 0})
        d = DecoratedDensity.build(h, {(0, 1, 0): g}, {1: Fraction(1, 8)})
        expect = Fraction(sum(g.matrix[0]), 4)
        assert eval_decorated(d, f) == expect


class TestMultiplicativity:
    def test_disjoint_union_identity(self):
        rng = random.Random(19)
        graphs = [g for n in (1, 2) for g in enumerate_Hn(n)]
        for _ in range(15):
            f = random_kernel(rng, 3)
            assert multiplicativity_check(rng.choice(graphs),
                                          rng.choice(graphs), f)

    def test_empty_factor(self):
        f = random_kernel(random.Random(20), 3)
        assert multiplicativity_check(Multigraph(0), path_graph(2), f)


def test_pins_json_round_trip():
    pins = pins_from_json({"1": "1/3", "2": "0.5"})
    assert pins == {1: Fraction(1, 3), 2: Fraction(1, 2)}
    with pytest.raises(ValueError):
        pins_from_json({"1": "not-a-number"})
