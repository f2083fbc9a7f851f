import pytest
from hypothesis import given

from hamcompletion.caterpillar import (
    CaterpillarSpec,
    ClassLabel,
    Family,
    SegmentKind,
    build_graph,
    classify,
    decompose_segments,
    leaf_total,
)
from hamcompletion.errors import InvalidSpec, ParseError
from hamcompletion.graph import is_connected, leaves

from .conftest import specs


def S(*ls):
    return CaterpillarSpec(ls)


class TestSpec:
    def test_validation(self):
        with pytest.raises(InvalidSpec):
            CaterpillarSpec([])
        with pytest.raises(InvalidSpec):
            CaterpillarSpec([1, -1])
        with pytest.raises(InvalidSpec):
            CaterpillarSpec([1.5])

    def test_json(self):
        spec = S(1, 0, 2)
        assert spec.to_json() == '{"leaves": [1, 0, 2]}'
        assert CaterpillarSpec.from_json(spec.to_json()) == spec
        for bad in ("{", "[1,2]", '{"leaves": 3}', '{"leaves": [-1]}', '{"leaves": []}'):
            with pytest.raises(ParseError):
                CaterpillarSpec.from_json(bad)


class TestBuildGraph:
    def test_comb(self):
        g, lab = build_graph(S(1, 1, 1))
        assert g.vertex_count == 6 and len(g.edges) == 5
        assert leaves(g) == {3, 4, 5}
        assert lab.spine == (0, 1, 2)
        assert lab.leaf_groups == ((3,), (4,), (5,))

    def test_star(self):
        g, _ = build_graph(S(4))
        assert g.vertex_count == 5 and len(g.edges) == 4
        assert g.degree(0) == 4

    def test_bare_path(self):
        g, _ = build_graph(S(0, 0, 0))
        assert g.sorted_edges() == [(0, 1), (1, 2)]

    @given(specs(max_n=8))
    def test_invariants(self, spec):
        g, lab = build_graph(spec)
        n = spec.n
        assert g.vertex_count == spec.vertex_count
        assert len(g.edges) == n - 1 + leaf_total(spec)
        assert is_connected(g)
        every = list(lab.spine) + [u for grp in lab.leaf_groups for u in grp]
        assert sorted(every) == list(range(g.vertex_count))
        for i, grp in enumerate(lab.leaf_groups):
            spine_deg = (i > 0) + (i < n - 1)
            assert g.degree(i) == spine_deg + len(grp)
            assert all(g.degree(u) == 1 for u in grp)
        if n >= 2:
            ls = spec.leaf_counts
            assert len(leaves(g)) == sum(ls) + (ls[0] == 0) + (ls[-1] == 0)


class TestClassify:
    @pytest.mark.parametrize(
        "ls, expected",
        [
            ((1, 1, 1), "Regular1"),
            ((2, 2, 2), "Regular2"),
            ((3, 3), "RegularK(3)"),
            ((5,), "RegularK(5)"),
            ((2,), "Regular2"),
            ((3, 4, 3), "AllAtLeastThree"),
            ((2, 0, 0, 2), "ZeroOrAtLeastTwo"),
            ((0, 0, 0), "ZeroOrAtLeastTwo"),
            ((3, 0, 1, 0, 3), "DesertedSegments"),
            ((0, 1, 0), "DesertedSegments"),
            ((1, 2, 3), "Unsupported"),
            ((3, 2, 3), "Unsupported"),
            ((1, 1, 2), "Unsupported"),
            # a leafless run next to a deserted segment has no term in the deserted total
            ((3, 0, 3, 0, 1, 0, 3), "Unsupported"),
        ],
    )
    def test_labels(self, ls, expected):
        assert str(classify(CaterpillarSpec(ls))) == expected

    def test_label_type(self):
        assert classify(S(4, 4)) == ClassLabel(Family.REGULAR_K, 4)
        with pytest.raises(ValueError):
            ClassLabel(Family.REGULAR_K, 2)

    @given(specs())
    def test_total_and_deterministic(self, spec):
        assert classify(spec) == classify(spec)


class TestSegments:
    def test_zero_leaf_segment(self):
        d = decompose_segments(S(2, 0, 0, 2))
        assert d.zero_leaf_segment_count == 1
        assert d.deserted_pendant_count == 0
        assert d.deserted_segment_count == 0
        assert d.heavy_vertices == (0, 3)
        assert [(s.start, s.end, s.kind) for s in d.segments] == [(1, 2, SegmentKind.ZERO_LEAF)]

    def test_deserted(self):
        d = decompose_segments(S(3, 0, 1, 0, 3))
        assert (d.zero_leaf_segment_count, d.deserted_pendant_count, d.deserted_segment_count) == (0, 1, 1)
        assert d.deserted_pendants == (2,)

    def test_comb_has_no_heavy(self):
        d = decompose_segments(S(1, 1, 1))
        assert d.heavy_vertices == ()
        assert d.zero_leaf_segment_count == 0 and d.deserted_pendant_count == 0
        # the whole spine is one run of 0/1 vertices, touching both ends
        assert [(s.start, s.end, s.bounded) for s in d.segments] == [(0, 2, False)]

    def test_end_segments_counted_separately(self):
        d = decompose_segments(S(0, 2, 0, 0))
        assert d.zero_leaf_segment_count == 2
        assert d.bounded_zero_leaf_segment_count == 0

    @given(specs(max_n=10))
    def test_segments_tile_light_positions(self, spec):
        d = decompose_segments(spec)
        covered = [i for s in d.segments for i in s.indices()]
        light = [i for i, c in enumerate(spec.leaf_counts) if c <= 1]
        assert covered == light
        for s in d.segments:
            kind = SegmentKind.ZERO_LEAF if all(spec.leaf_counts[i] == 0 for i in s.indices()) else SegmentKind.ZERO_ONE
            assert s.kind is kind
            # maximal: neighbours beyond the run are heavy or missing
            assert s.start == 0 or spec.leaf_counts[s.start - 1] >= 2
            assert s.end == spec.n - 1 or spec.leaf_counts[s.end + 1] >= 2


def test_leaf_total():
    assert leaf_total(S(3, 4, 3)) == 10
    assert leaf_total(S(0, 0, 0)) == 0
    assert leaf_total(S(1, 1, 1, 1)) == 4
