"""Seeded instance generators.

Randomness comes from SplitMix64 so a seed names the same instance in any
language: state advances by 0x9E3779B97F4A7C15, output is the usual
xor-shift/multiply finaliser, and an integer in [lo, hi] is
``lo + next() % (hi - lo + 1)``.
"""

from __future__ import annotations

from .caterpillar import CaterpillarSpec, Family, classify
from .graph import Graph

MASK64 = (1 << 64) - 1

CONSTRAINTS = ("any", "supported", "regular1", "regular2", "regularK", "atleast3", "zero2", "deserted")


class Unsatisfiable(ValueError):
    pass


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def randint(self, lo: int, hi: int) -> int:
        if hi < lo:
            raise ValueError("empty range")
        return lo + self.next() % (hi - lo + 1)

    def choice(self, items):
        return items[self.randint(0, len(items) - 1)]

    def chance(self, percent: int) -> bool:
        return self.randint(0, 99) < percent


def random_connected_graph(rng: SplitMix64, n: int, extra_percent: int = 20) -> Graph:
    """Random labelled tree plus each remaining pair with probability ``extra_percent``%."""
    pairs = {(rng.randint(0, v - 1), v) for v in range(1, n)}
    for a in range(n):
        for b in range(a + 1, n):
            if (a, b) not in pairs and rng.chance(extra_percent):
                pairs.add((a, b))
    return Graph.from_edges(n, sorted(pairs))


_FAMILY_OF = {
    "regular1": Family.REGULAR1,
    "regular2": Family.REGULAR2,
    "atleast3": Family.ALL_AT_LEAST_THREE,
    "zero2": Family.ZERO_OR_AT_LEAST_TWO,
    "deserted": Family.DESERTED_SEGMENTS,
}
_SUPPORTED_PICKS = ("regular1", "regular2", "regularK", "atleast3", "zero2", "deserted")


def _values(lo: int, hi: int, keep) -> list[int]:
    return [x for x in range(lo, hi + 1) if keep(x)]


def _draw(rng: SplitMix64, constraint: str, n: int, lo: int, hi: int) -> list[int] | None:
    if constraint == "any":
        return [rng.randint(lo, hi) for _ in range(n)]
    if constraint in ("regular1", "regular2"):
        k = 1 if constraint == "regular1" else 2
        return [k] * n if lo <= k <= hi else None
    if constraint == "regularK":
        ks = _values(lo, hi, lambda x: x >= 3)
        return [rng.choice(ks)] * n if ks else None
    if constraint == "atleast3":
        ks = _values(lo, hi, lambda x: x >= 3)
        return [rng.choice(ks) for _ in range(n)] if ks else None
    if constraint == "zero2":
        ks = _values(lo, hi, lambda x: x == 0 or x >= 2)
        if 0 not in ks:
            return None
        ls = [rng.choice(ks) for _ in range(n)]
        ls[rng.randint(0, n - 1)] = 0
        return ls
    if constraint == "deserted":
        heavy = _values(lo, hi, lambda x: x >= 2)
        if not (lo <= 0 and hi >= 1):
            return None
        ls: list[int] = []
        while len(ls) < n:
            if heavy and rng.chance(40):
                ls.append(rng.choice(heavy))
            else:
                ls.append(0)
                for _ in range(rng.randint(1, 2)):
                    ls.extend([1, 0])
        return ls[:n]
    raise ValueError(f"unknown constraint {constraint!r}")


def _accepts(constraint: str, spec: CaterpillarSpec) -> bool:
    if constraint == "any":
        return True
    if spec.vertex_count < 3:
        return False
    fam = classify(spec).family
    if constraint == "regularK":
        return fam is Family.REGULAR_K
    if constraint == "atleast3":
        return fam in (Family.ALL_AT_LEAST_THREE, Family.REGULAR_K)
    return fam is _FAMILY_OF[constraint]


def random_spec(
    rng: SplitMix64,
    n_range: tuple[int, int],
    l_range: tuple[int, int],
    constraint: str = "any",
    attempts: int = 1000,
) -> CaterpillarSpec:
    """Draw a spec satisfying ``constraint``; raises Unsatisfiable after ``attempts`` misses."""
    n_lo, n_hi = n_range
    l_lo, l_hi = l_range
    if n_lo < 1 or n_hi < n_lo or l_lo < 0 or l_hi < l_lo:
        raise Unsatisfiable("bad ranges")
    if constraint not in CONSTRAINTS:
        raise ValueError(f"unknown constraint {constraint!r}")
    for _ in range(attempts):
        pick = rng.choice(_SUPPORTED_PICKS) if constraint == "supported" else constraint
        ls = _draw(rng, pick, rng.randint(n_lo, n_hi), l_lo, l_hi)
        if ls is None:
            if constraint != "supported":
                raise Unsatisfiable(f"{constraint} impossible with leaf counts in [{l_lo}, {l_hi}]")
            continue
        spec = CaterpillarSpec(ls)
        if _accepts(pick, spec):
            return spec
    raise Unsatisfiable(f"no {constraint} spec found in {attempts} draws")
