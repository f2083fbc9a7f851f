"""Explicit completing edge sets with witness cycles, one builder per family.

Every builder lays out an ordered list of vertex-disjoint paths covering the
caterpillar, then joins the end of each path to the start of the next
(cyclically). The joining edges are the added set, and the concatenated
paths are the witness cycle.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Sequence

from .caterpillar import (
    CaterpillarSpec,
    Family,
    SegmentKind,
    VertexLabeling,
    build_graph,
    classify,
    decompose_segments,
)
from .errors import TooSmallForCycle, UnsupportedClass, ValidationFailure
from .graph import Edge, Graph
from .hamcheck import verify_cycle


@dataclass(frozen=True)
class AugmentationPlan:
    added_edges: tuple[Edge, ...]
    witness_cycle: tuple[int, ...]

    def to_dict(self) -> dict:
        return {
            "added_edges": [list(e) for e in self.added_edges],
            "witness_cycle": list(self.witness_cycle),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> "AugmentationPlan":
        edges = tuple(sorted(Edge.of(int(a), int(b)) for a, b in data["added_edges"]))
        return cls(edges, tuple(int(v) for v in data["witness_cycle"]))


def check_plan(g: Graph, added: Sequence[Edge], witness: Sequence[int]) -> list[str]:
    """Problems with a proposed plan; an empty list means it is valid."""
    problems = []
    normalized = []
    for e in added:
        try:
            a, b = int(e[0]), int(e[1])
            ne = Edge.of(a, b)
        except Exception:
            problems.append(f"malformed edge {e!r}")
            continue
        if not (0 <= ne.u and ne.v < g.vertex_count):
            problems.append(f"edge {tuple(ne)} out of range")
            continue
        normalized.append(ne)
    if len(set(normalized)) != len(normalized):
        problems.append("duplicate added edge")
    reused = sorted(e for e in set(normalized) if e in g.edges)
    if reused:
        problems.append(f"added edges already present: {[tuple(e) for e in reused]}")
    if problems:
        return problems
    augmented = g.with_edges(normalized)
    if not verify_cycle(augmented, witness):
        problems.append("witness is not a spanning cycle of the augmented graph")
    return problems


def _join_paths(g: Graph, paths: list[list[int]]) -> AugmentationPlan:
    added = []
    for i, p in enumerate(paths):
        nxt = paths[(i + 1) % len(paths)]
        added.append(Edge.of(p[-1], nxt[0]))
    witness = tuple(v for p in paths for v in p)
    problems = check_plan(g, added, witness)
    if problems:
        raise ValidationFailure("; ".join(problems))
    return AugmentationPlan(tuple(sorted(added)), witness)


def _star_paths(lab: VertexLabeling, i: int) -> list[list[int]]:
    # u_i(1) -> v_i -> u_i(2), then the remaining leaves on their own
    group = lab.leaf_groups[i]
    return [[group[0], i, group[1]]] + [[u] for u in group[2:]]


def _require(spec: CaterpillarSpec, *families: Family) -> tuple[Graph, VertexLabeling]:
    if spec.vertex_count < 3:
        raise TooSmallForCycle(f"{spec} has {spec.vertex_count} vertices")
    label = classify(spec)
    if label.family not in families:
        raise UnsupportedClass(f"{spec} is {label}, expected one of {[f.value for f in families]}")
    return build_graph(spec)


def construct_regular1(spec: CaterpillarSpec) -> AugmentationPlan:
    g, lab = _require(spec, Family.REGULAR1)
    n = spec.n
    u = [group[0] for group in lab.leaf_groups]
    if n % 2 == 0:
        # pairs (v1 v2), (v3 v4), ...; joins u2u3, u4u5, ..., u_n u1
        paths = [[u[p], p, p + 1, u[p + 1]] for p in range(0, n, 2)]
    else:
        # v1 u1 on its own, then pairs (v2 v3), ...; joins u1u2, ..., u_n v1
        paths = [[0, u[0]]] + [[u[p], p, p + 1, u[p + 1]] for p in range(1, n, 2)]
    return _join_paths(g, paths)


def construct_regular2(spec: CaterpillarSpec) -> AugmentationPlan:
    g, lab = _require(spec, Family.REGULAR2)
    paths = [[grp[0], i, grp[1]] for i, grp in enumerate(lab.leaf_groups)]
    return _join_paths(g, paths)


def construct_regular_k(spec: CaterpillarSpec) -> AugmentationPlan:
    g, lab = _require(spec, Family.REGULAR_K)
    return _join_paths(g, [p for i in range(spec.n) for p in _star_paths(lab, i)])


def construct_all_atleast3(spec: CaterpillarSpec) -> AugmentationPlan:
    g, lab = _require(spec, Family.ALL_AT_LEAST_THREE, Family.REGULAR_K)
    return _join_paths(g, [p for i in range(spec.n) for p in _star_paths(lab, i)])


def _spine_walk(spec: CaterpillarSpec, lab: VertexLabeling, thread_pendants: bool) -> list[list[int]]:
    """Paths in spine order: star paths for heavy vertices, spine runs for segments.

    With ``thread_pendants`` a run is cut after each deserted pendant, so the
    walk goes v_t -> u_t and the next path starts at v_{t+1}.
    """
    decomp = decompose_segments(spec)
    lonely = set(decomp.deserted_pendants)
    starts = {s.start: s for s in decomp.segments}
    paths: list[list[int]] = []
    i = 0
    while i < spec.n:
        if i not in starts:
            paths.extend(_star_paths(lab, i))
            i += 1
            continue
        seg = starts[i]
        run: list[int] = []
        for t in seg.indices():
            run.append(t)
            if thread_pendants and t in lonely:
                run.append(lab.leaf(t, 0))
                paths.append(run)
                run = []
        if run:
            paths.append(run)
        i = seg.end + 1
    return paths


def construct_zero_or_atleast2(spec: CaterpillarSpec) -> AugmentationPlan:
    g, lab = _require(spec, Family.ZERO_OR_AT_LEAST_TWO)
    return _join_paths(g, _spine_walk(spec, lab, thread_pendants=False))


def construct_deserted(spec: CaterpillarSpec) -> AugmentationPlan:
    g, lab = _require(spec, Family.DESERTED_SEGMENTS)
    decomp = decompose_segments(spec)
    assert all(s.kind is SegmentKind.ZERO_ONE and s.deserted for s in decomp.segments)
    return _join_paths(g, _spine_walk(spec, lab, thread_pendants=True))


_BUILDERS = {
    Family.REGULAR1: construct_regular1,
    Family.REGULAR2: construct_regular2,
    Family.REGULAR_K: construct_regular_k,
    Family.ALL_AT_LEAST_THREE: construct_all_atleast3,
    Family.ZERO_OR_AT_LEAST_TWO: construct_zero_or_atleast2,
    Family.DESERTED_SEGMENTS: construct_deserted,
}


def construct(spec: CaterpillarSpec) -> AugmentationPlan:
    """Completing edge set and witness for any supported spec.

    Raises UnsupportedClass for specs outside the known families and
    TooSmallForCycle below three vertices.
    """
    if spec.vertex_count < 3:
        raise TooSmallForCycle(f"{spec} has {spec.vertex_count} vertices")
    label = classify(spec)
    if not label.supported:
        raise UnsupportedClass(f"no construction for {spec}")
    return _BUILDERS[label.family](spec)
