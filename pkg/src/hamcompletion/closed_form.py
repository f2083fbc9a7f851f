"""Closed-form Hamiltonian completion numbers for the caterpillar families."""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .caterpillar import (
    CaterpillarSpec,
    ClassLabel,
    Family,
    SegmentDecomposition,
    classify,
    decompose_segments,
    leaf_total,
)
from .errors import Inconsistent, TooSmallForCycle


class Formula(enum.Enum):
    HALF_SPINE = "ceil(n/2)"
    SPINE = "n"
    N_K_MINUS_1 = "n(k-1)"
    STAR = "l-1"
    LEAVES_MINUS_SPINE = "sum(l)-n"
    ZERO_SEGMENTS = "P0+sum(l-1)"
    DESERTED = "sum(l-1)+gamma+tau"


@dataclass(frozen=True)
class LambdaResult:
    value: int
    class_used: ClassLabel
    formula_name: Formula


def lambda_lower_bound(leaf_count: int) -> int:
    """Any graph with ``leaf_count`` degree-1 vertices needs at least half that many new edges."""
    if leaf_count < 0:
        raise ValueError("leaf_count must be non-negative")
    return -(-leaf_count // 2)


def lambda_star(num_leaves: int) -> int:
    if num_leaves <= 1:
        raise TooSmallForCycle(f"star with {num_leaves} leaves has fewer than three vertices")
    return num_leaves - 1


def lemma_lower_bound_01(spec: CaterpillarSpec) -> int:
    return lambda_lower_bound(leaf_total(spec))


def graph_leaf_count(spec: CaterpillarSpec) -> int:
    """Degree-1 vertices of the built caterpillar (spine ends with no leaves count too)."""
    ls = spec.leaf_counts
    if spec.n == 1:
        return 2 if ls[0] == 1 else ls[0]
    return sum(ls) + (ls[0] == 0) + (ls[-1] == 0)


def lambda_closed_form(
    spec: CaterpillarSpec, decomp: SegmentDecomposition | None = None
) -> LambdaResult | None:
    """Formula value for the spec's family, or None when no formula applies."""
    if spec.vertex_count < 3:
        raise TooSmallForCycle(f"{spec} has {spec.vertex_count} vertices")
    label = classify(spec)
    ls = spec.leaf_counts
    n = spec.n
    fam = label.family
    if fam is Family.REGULAR1:
        return LambdaResult(-(-n // 2), label, Formula.HALF_SPINE)
    if fam is Family.REGULAR2:
        return LambdaResult(n, label, Formula.SPINE)
    if fam is Family.REGULAR_K:
        if n == 1:
            return LambdaResult(lambda_star(ls[0]), label, Formula.STAR)
        return LambdaResult(n * (label.k - 1), label, Formula.N_K_MINUS_1)
    if fam is Family.ALL_AT_LEAST_THREE:
        return LambdaResult(sum(ls) - n, label, Formula.LEAVES_MINUS_SPINE)

    decomp = decomp or decompose_segments(spec)
    heavy_part = sum(ls[i] - 1 for i in decomp.heavy_vertices)
    if fam is Family.ZERO_OR_AT_LEAST_TWO:
        return LambdaResult(decomp.zero_leaf_segment_count + heavy_part, label, Formula.ZERO_SEGMENTS)
    if fam is Family.DESERTED_SEGMENTS:
        value = heavy_part + decomp.deserted_segment_count + decomp.deserted_pendant_count
        return LambdaResult(value, label, Formula.DESERTED)
    return None


def delta_from_lambda(lam: int, already_hamiltonian: bool) -> int:
    """Edges needed for a spanning path, given the count needed for a spanning cycle."""
    if lam < 0:
        raise ValueError("lambda must be non-negative")
    if already_hamiltonian:
        if lam != 0:
            raise Inconsistent("a Hamiltonian graph needs no added edges")
        return 0
    if lam == 0:
        raise Inconsistent("lambda = 0 means the graph is already Hamiltonian")
    return lam - 1
