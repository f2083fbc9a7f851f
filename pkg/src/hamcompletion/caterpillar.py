"""Caterpillar instances: description, labeling, family classification and
the spine segment analysis that the irregular formulas depend on."""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from typing import Sequence

from .errors import InvalidSpec, ParseError
from .graph import Graph


@dataclass(frozen=True)
class CaterpillarSpec:
    """Leaf counts ``l(v_1) .. l(v_n)`` along the spine."""

    leaf_counts: tuple[int, ...]

    def __init__(self, leaf_counts: Sequence[int]):
        counts = tuple(leaf_counts)
        if not counts:
            raise InvalidSpec("spine must have at least one vertex")
        for c in counts:
            if isinstance(c, bool) or not isinstance(c, int) or c < 0:
                raise InvalidSpec(f"leaf counts must be non-negative integers, got {c!r}")
        object.__setattr__(self, "leaf_counts", counts)

    @property
    def n(self) -> int:
        return len(self.leaf_counts)

    @property
    def vertex_count(self) -> int:
        return self.n + sum(self.leaf_counts)

    def __str__(self) -> str:
        return "[" + ",".join(map(str, self.leaf_counts)) + "]"

    def to_json(self) -> str:
        return json.dumps({"leaves": list(self.leaf_counts)})

    @classmethod
    def from_json(cls, text: str) -> "CaterpillarSpec":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"malformed spec JSON: {exc}") from exc
        if not isinstance(data, dict) or not isinstance(data.get("leaves"), list):
            raise ParseError('spec JSON must be an object with a "leaves" list')
        try:
            return cls(data["leaves"])
        except InvalidSpec as exc:
            raise ParseError(str(exc)) from exc


@dataclass(frozen=True)
class VertexLabeling:
    spine: tuple[int, ...]
    leaf_groups: tuple[tuple[int, ...], ...]

    def leaf(self, i: int, j: int) -> int:
        """Vertex id of the j-th leaf (0-based) of spine vertex i (0-based)."""
        return self.leaf_groups[i][j]


def build_graph(spec: CaterpillarSpec) -> tuple[Graph, VertexLabeling]:
    n = spec.n
    pairs = [(i, i + 1) for i in range(n - 1)]
    groups = []
    nxt = n
    for i, count in enumerate(spec.leaf_counts):
        group = tuple(range(nxt, nxt + count))
        pairs.extend((i, u) for u in group)
        groups.append(group)
        nxt += count
    return Graph.from_edges(nxt, pairs), VertexLabeling(tuple(range(n)), tuple(groups))


def leaf_total(spec: CaterpillarSpec) -> int:
    return sum(spec.leaf_counts)


class Family(enum.Enum):
    REGULAR1 = "Regular1"
    REGULAR2 = "Regular2"
    REGULAR_K = "RegularK"
    ALL_AT_LEAST_THREE = "AllAtLeastThree"
    ZERO_OR_AT_LEAST_TWO = "ZeroOrAtLeastTwo"
    DESERTED_SEGMENTS = "DesertedSegments"
    UNSUPPORTED = "Unsupported"


@dataclass(frozen=True)
class ClassLabel:
    family: Family
    k: int | None = None

    def __post_init__(self) -> None:
        if (self.family is Family.REGULAR_K) != (self.k is not None):
            raise ValueError("k is carried by RegularK only")
        if self.k is not None and self.k < 3:
            raise ValueError("RegularK needs k >= 3")

    @property
    def supported(self) -> bool:
        return self.family is not Family.UNSUPPORTED

    def __str__(self) -> str:
        if self.family is Family.REGULAR_K:
            return f"RegularK({self.k})"
        return self.family.value


class SegmentKind(enum.Enum):
    ZERO_LEAF = "ZeroLeaf"
    ZERO_ONE = "ZeroOne"


@dataclass(frozen=True)
class Segment:
    start: int
    end: int  # inclusive
    kind: SegmentKind
    # True when both neighbours beyond the run are heavy spine vertices
    # (rather than a spine end).
    bounded: bool
    deserted: bool

    def indices(self) -> range:
        return range(self.start, self.end + 1)


@dataclass(frozen=True)
class SegmentDecomposition:
    zero_leaf_segment_count: int
    deserted_pendant_count: int
    deserted_segment_count: int
    heavy_vertices: tuple[int, ...]
    segments: tuple[Segment, ...]
    deserted_pendants: tuple[int, ...]
    # Same counts restricted to runs with heavy vertices on both sides.
    bounded_zero_leaf_segment_count: int
    bounded_deserted_segment_count: int


def deserted_pendants(spec: CaterpillarSpec) -> list[int]:
    """Spine indices t with l(t) = 1 whose two spine neighbours exist and carry no leaves."""
    ls = spec.leaf_counts
    return [t for t in range(1, spec.n - 1) if ls[t] == 1 and ls[t - 1] == 0 and ls[t + 1] == 0]


def decompose_segments(spec: CaterpillarSpec) -> SegmentDecomposition:
    ls = spec.leaf_counts
    n = spec.n
    heavy = tuple(i for i, c in enumerate(ls) if c >= 2)
    lonely = set(deserted_pendants(spec))

    segments = []
    i = 0
    while i < n:
        if ls[i] >= 2:
            i += 1
            continue
        j = i
        while j + 1 < n and ls[j + 1] <= 1:
            j += 1
        ones = [t for t in range(i, j + 1) if ls[t] == 1]
        kind = SegmentKind.ZERO_ONE if ones else SegmentKind.ZERO_LEAF
        bounded = i > 0 and j < n - 1
        deserted = bool(ones) and all(t in lonely for t in ones)
        segments.append(Segment(i, j, kind, bounded, deserted))
        i = j + 1

    zero = [s for s in segments if s.kind is SegmentKind.ZERO_LEAF]
    des = [s for s in segments if s.deserted]
    return SegmentDecomposition(
        zero_leaf_segment_count=len(zero),
        deserted_pendant_count=len(lonely),
        deserted_segment_count=len(des),
        heavy_vertices=heavy,
        segments=tuple(segments),
        deserted_pendants=tuple(sorted(lonely)),
        bounded_zero_leaf_segment_count=sum(s.bounded for s in zero),
        bounded_deserted_segment_count=sum(s.bounded for s in des),
    )


def classify(spec: CaterpillarSpec) -> ClassLabel:
    """Most specific family first; see README for the precedence table."""
    ls = spec.leaf_counts
    first = ls[0]
    if all(c == first for c in ls) and first >= 1:
        if first == 1:
            return ClassLabel(Family.REGULAR1)
        if first == 2:
            return ClassLabel(Family.REGULAR2)
        return ClassLabel(Family.REGULAR_K, first)
    if all(c >= 3 for c in ls):
        return ClassLabel(Family.ALL_AT_LEAST_THREE)
    if all(c == 0 or c >= 2 for c in ls) and 0 in ls:
        return ClassLabel(Family.ZERO_OR_AT_LEAST_TWO)
    if 1 in ls:
        decomp = decompose_segments(spec)
        ones = sum(1 for c in ls if c == 1)
        # Leafless runs are excluded: the deserted-segment total has no term for them.
        if decomp.deserted_pendant_count == ones and decomp.zero_leaf_segment_count == 0:
            return ClassLabel(Family.DESERTED_SEGMENTS)
    return ClassLabel(Family.UNSUPPORTED)
