"""Exact homomorphism densities against step kernels.

The unlabelled density of a multigraph h in a kernel f with p parts is the
average over all vertex-to-part maps of the product of cell values along the
edges, each parallel copy contributing one factor.  Labelled vertices can be
pinned to points of [0,1]; pinned vertices are not integrated.  A decorated
density carries an individual kernel on every edge copy, which is the shape
produced by differentiating densities, so the evaluator here is the single
computational core for the whole calculus.

Evaluation runs over integer matrices (one common denominator per kernel)
with backtracking and zero-pruning, so sparse kernels such as basis edges
cost almost nothing.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .limits import DEFAULT_LIMITS, CapExceeded, Limits
from .multigraph import Multigraph, glue_product
from .stepkernel import StepKernel, common_refinement, _to_fraction

Pins = Mapping[int, Fraction]


class _ArgSlot:
    """Marker for an edge that evaluates the kernel the density is applied to."""

    def __repr__(self):
        return "ARG"


ARG = _ArgSlot()

Slot = tuple[int, int, int]  # (u, v, copy index)


@dataclass(frozen=True)
class DecoratedDensity:
    """A multigraph whose edge copies carry individual kernels and whose
    labelled vertices are pinned to points."""

    graph: Multigraph
    edge_kernels: tuple[tuple[Slot, object], ...]
    pins: tuple[tuple[int, Fraction], ...] = ()

    @classmethod
    def build(cls, graph: Multigraph, edge_kernels: Mapping[Slot, object],
              pins: Pins | None = None) -> "DecoratedDensity":
        slots = [(u, v, i) for (u, v), m in graph.pairs for i in range(m)]
        missing = [s for s in slots if s not in edge_kernels]
        extra = [s for s in edge_kernels if s not in slots]
        if missing or extra:
            raise ValueError(f"edge kernels must cover each edge copy exactly "
                             f"(missing {missing}, extra {extra})")
        pin_items = tuple(sorted((int(lab), _to_fraction(x))
                                 for lab, x in (pins or {}).items()))
        label_set = {lab for lab, _ in graph.labels}
        if not {lab for lab, _ in pin_items} <= label_set:
            raise ValueError("pinned labels must be labels of the graph")
        return cls(graph, tuple(sorted(edge_kernels.items())), pin_items)


def part_of(x: Fraction, p: int) -> int:
    """1-based part containing x; points on part boundaries are rejected."""
    x = _to_fraction(x)
    scaled = x * p
    if scaled.denominator == 1:
        raise ValueError(f"pin {x} sits on a part boundary at {p} parts")
    if not (0 < x < 1):
        raise ValueError(f"pin {x} is outside (0, 1)")
    return math.ceil(scaled)


def _resolve_pins(g: Multigraph, pins: Pins, p: int) -> dict[int, int]:
    """0-based part index for every labelled vertex."""
    label_map = g.label_map
    missing = [lab for lab in label_map if lab not in pins]
    if missing:
        raise ValueError(f"pins must cover all labels; missing {missing}")
    return {label_map[lab]: part_of(_to_fraction(pins[lab]), p) - 1
            for lab in label_map}


def _integrate(vertex_count: int, p: int,
               factors: list[tuple[int, int, tuple, int]],
               fixed: dict[int, int], *, limits: Limits) -> int:
    """Integer part of sum over maps tau of prod factor_matrix[tau u][tau v]^e.

    `factors` entries are (u, v, integer matrix, exponent); `fixed` maps a
    vertex to its forced part (0-based).  Vertices are placed in a
    connectivity-first order and a branch dies as soon as a factor hits zero.
    """
    if p > limits.max_parts:
        raise CapExceeded(f"kernel has {p} parts, cap is {limits.max_parts}")
    free = [v for v in range(vertex_count) if v not in fixed]
    if len(free) > limits.max_vertices:
        raise CapExceeded(f"{len(free)} integrated vertices, cap is "
                          f"{limits.max_vertices}")

    touching: dict[int, list[int]] = {v: [] for v in range(vertex_count)}
    for idx, (u, v, _, _) in enumerate(factors):
        touching[u].append(idx)
        touching[v].append(idx)

    placed = set(fixed)
    order: list[int] = []
    pending = list(free)
    while pending:
        best = max(pending, key=lambda w: (
            sum(1 for idx in touching[w]
                if (factors[idx][0] if factors[idx][1] == w else factors[idx][1])
                in placed), -w))
        order.append(best)
        placed.add(best)
        pending.remove(best)

    assign = dict(fixed)
    prefactor = 1
    ready: list[list[tuple[int, tuple, int]]] = []
    seen = set(fixed)
    consumed = set()
    for v in order:
        here = []
        for idx in touching[v]:
            if idx in consumed:
                continue
            u, w, mat, e = factors[idx]
            other = u if w == v else w
            if other in seen:
                here.append((other, mat, e))
                consumed.add(idx)
        ready.append(here)
        seen.add(v)
    for idx, (u, v, mat, e) in enumerate(factors):
        if idx not in consumed:  # both endpoints fixed
            prefactor *= mat[assign[u]][assign[v]] ** e
    if prefactor == 0:
        return 0

    n_free = len(order)

    def rec(i: int, partial: int) -> int:
        if i == n_free:
            return partial
        v = order[i]
        total = 0
        for c in range(p):
            prod = partial
            for other, mat, e in ready[i]:
                val = mat[c][assign[other]]
                if val == 0:
                    prod = 0
                    break
                prod *= val ** e
            if prod:
                assign[v] = c
                total += rec(i + 1, prod)
        return total

    return prefactor * rec(0, 1)


def _evaluate(graph: Multigraph, slot_kernels: Mapping[Slot, StepKernel],
              pins: Pins, *, limits: Limits) -> Fraction:
    """Shared exact evaluator: every edge copy carries its own kernel."""
    kernels = list(slot_kernels.values())
    if kernels:
        refined = common_refinement(*kernels)
        p = refined[0].parts
        slot_kernels = dict(zip(slot_kernels.keys(), refined))
    else:
        p = 1
    fixed = _resolve_pins(graph, pins, p) if graph.labels else {}

    factors = []
    denominator = 1
    for (u, v, _copy), kernel in slot_kernels.items():
        denom, ints = kernel.integerized()
        factors.append((u, v, ints, 1))
        denominator *= denom
    numerator = _integrate(graph.vertex_count, p, factors, fixed, limits=limits)
    n_free = graph.vertex_count - len(fixed)
    return Fraction(numerator, denominator * p ** n_free)


# -- public operations ---------------------------------------------------------


def density(h: Multigraph, f: StepKernel, *,
            limits: Limits = DEFAULT_LIMITS) -> Fraction:
    """t(h, f) for an unlabelled multigraph; the empty graph has density 1."""
    if h.k:
        raise ValueError("density is for unlabelled graphs; use labelled_density")
    denom, ints = f.integerized()
    factors = [(u, v, ints, m) for (u, v), m in h.pairs]
    numerator = _integrate(h.vertex_count, f.parts, factors, {}, limits=limits)
    return Fraction(numerator,
                    denom ** h.edge_count * f.parts ** h.vertex_count)


def labelled_density(h: Multigraph, f: StepKernel, pins: Pins, *,
                     limits: Limits = DEFAULT_LIMITS) -> Fraction:
    """Density with the labelled vertices pinned to points; only unlabelled
    vertices are integrated."""
    fixed = _resolve_pins(h, pins, f.parts)
    denom, ints = f.integerized()
    factors = [(u, v, ints, m) for (u, v), m in h.pairs]
    numerator = _integrate(h.vertex_count, f.parts, factors, fixed,
                           limits=limits)
    n_free = h.vertex_count - len(fixed)
    return Fraction(numerator, denom ** h.edge_count * f.parts ** n_free)


def eval_decorated(d: DecoratedDensity, f: StepKernel, *,
                   limits: Limits = DEFAULT_LIMITS) -> Fraction:
    """Evaluate a decorated density: ARG edges read f, concrete edges read
    their own kernel."""
    slot_kernels = {slot: (f if kernel is ARG else kernel)
                    for slot, kernel in d.edge_kernels}
    return _evaluate(d.graph, slot_kernels, dict(d.pins), limits=limits)


def multiplicativity_check(h1: Multigraph, h2: Multigraph, f: StepKernel, *,
                           limits: Limits = DEFAULT_LIMITS) -> bool:
    """Exact test of t(h1 ⊔ h2, f) == t(h1, f) * t(h2, f)."""
    product = glue_product(h1, h2)
    return density(product, f, limits=limits) == \
        density(h1, f, limits=limits) * density(h2, f, limits=limits)


def pins_from_json(obj: Mapping) -> dict[int, Fraction]:
    try:
        return {int(lab): Fraction(str(x)) for lab, x in obj.items()}
    except (TypeError, ValueError) as exc:
        raise ValueError(f"malformed pins object: {exc}") from exc


def pins_to_json(pins: Pins) -> dict:
    return {str(lab): str(x) for lab, x in pins.items()}
