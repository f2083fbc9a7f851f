"""Exact minimum edge augmentation by exhaustive search.

For ``k = L, L+1, ...`` every k-subset of the graph's non-edges is visited in
lexicographic order until one makes the graph Hamiltonian (or traceable, for
the path target). The first hit is therefore both a minimum and the
lexicographically least minimum.

Pruning never removes a solution of the current level:

* degree deficit: every new edge raises at most two degrees by one;
* vertex-cut bound: deleting a vertex set X from a Hamiltonian graph leaves at
  most |X| components (|X| + 1 for a spanning path), and an added edge merges
  at most two of them;
* minimality: levels below ``k`` hold no solution, so every edge of a level-k
  solution lies on the spanning cycle/path. The added edges then form a
  linear forest (or the whole cycle) and touch each vertex at most twice.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Sequence

from .closed_form import lambda_lower_bound
from .errors import BudgetExceeded, TooSmallForCycle
from .graph import Edge, Graph, count_components, leaves, non_edges
from .hamcheck import cycle_in_adjacency, path_in_adjacency

CYCLE = "cycle"
PATH = "path"
DEFAULT_BUDGET = 8


@dataclass(frozen=True)
class OracleResult:
    minimum: int
    optimal_edges: tuple[Edge, ...]
    witness: tuple[int, ...]
    target: str = CYCLE
    nodes_explored: int = field(default=0, compare=False)

    def to_dict(self) -> dict:
        return {
            "target": self.target,
            "minimum": self.minimum,
            "optimal_edges": [list(e) for e in self.optimal_edges],
            "witness": list(self.witness),
        }


def _cut_sets(n: int, adj: Sequence[int]) -> list[int]:
    """Vertex sets (bitmasks) whose deletion bound is tracked during search."""
    sets = [0]
    sets.extend(1 << v for v in range(n))
    support = 0
    for v in range(n):
        if adj[v].bit_count() == 1:
            support |= adj[v]
    base = count_components(adj, n)
    cuts = 0
    for v in range(n):
        if count_components(adj, n, 1 << v) > base:
            cuts |= 1 << v
    for extra in (support, cuts, support | cuts):
        if extra and extra not in sets:
            sets.append(extra)
    return sets


def _labels(adj: Sequence[int], n: int, removed: int) -> tuple[list[int], int]:
    lab = [-1] * n
    count = 0
    for s in range(n):
        if removed >> s & 1 or lab[s] >= 0:
            continue
        count += 1
        stack = [s]
        lab[s] = s
        while stack:
            x = stack.pop()
            nb = adj[x] & ~removed
            while nb:
                low = nb & -nb
                nb ^= low
                y = low.bit_length() - 1
                if lab[y] < 0:
                    lab[y] = s
                    stack.append(y)
    return lab, count


class _LevelSearch:
    def __init__(self, n: int, adj: Sequence[int], cands: Sequence[Edge], target: str):
        self.n = n
        self.base_adj = tuple(adj)
        self.cands = [tuple(e) for e in cands]
        self.target = target
        self.last_idx = [-1] * n
        for i, (a, b) in enumerate(self.cands):
            self.last_idx[a] = i
            self.last_idx[b] = i
        self.sets = _cut_sets(n, adj)
        self.thresholds = [
            (max(x.bit_count(), 1) if target == CYCLE else x.bit_count() + 1) for x in self.sets
        ]
        self.base_labels = [_labels(adj, n, x) for x in self.sets]
        self.nodes = 0

    def _reset(self) -> None:
        n = self.n
        self.adj = list(self.base_adj)
        self.deg = [m.bit_count() for m in self.adj]
        self.added = [0] * n
        self.end = list(range(n))
        self.labs = [lab[:] for lab, _ in self.base_labels]
        self.comps = [c for _, c in self.base_labels]
        self.chosen: list[int] = []

    def _viable(self, pos: int, r: int) -> bool:
        deficit = 0
        for v, d in enumerate(self.deg):
            if d < 2:
                deficit += 2 - d
                if self.target == CYCLE and self.last_idx[v] < pos:
                    return False
        if self.target == PATH:
            deficit -= 2
        if deficit > 2 * r:
            return False
        for c, t in zip(self.comps, self.thresholds):
            if c - t > r:
                return False
        return True

    def _apply(self, i: int) -> tuple:
        a, b = self.cands[i]
        self.adj[a] |= 1 << b
        self.adj[b] |= 1 << a
        self.deg[a] += 1
        self.deg[b] += 1
        self.added[a] += 1
        self.added[b] += 1
        ea, eb = self.end[a], self.end[b]
        saved_end = (ea, self.end[ea], eb, self.end[eb])
        self.end[ea] = eb
        self.end[eb] = ea
        merged = []
        for j, x in enumerate(self.sets):
            if x >> a & 1 or x >> b & 1:
                continue
            lab = self.labs[j]
            la, lb = lab[a], lab[b]
            if la == lb:
                continue
            merged.append((j, lab))
            new = lab[:]
            for v in range(self.n):
                if new[v] == lb:
                    new[v] = la
            self.labs[j] = new
            self.comps[j] -= 1
        self.chosen.append(i)
        return saved_end, merged

    def _undo(self, i: int, token: tuple) -> None:
        a, b = self.cands[i]
        saved_end, merged = token
        self.adj[a] &= ~(1 << b)
        self.adj[b] &= ~(1 << a)
        self.deg[a] -= 1
        self.deg[b] -= 1
        self.added[a] -= 1
        self.added[b] -= 1
        ea, va, eb, vb = saved_end
        self.end[eb] = vb
        self.end[ea] = va
        for j, lab in merged:
            self.labs[j] = lab
            self.comps[j] += 1
        self.chosen.pop()

    def _admissible(self, i: int, r: int) -> bool:
        a, b = self.cands[i]
        if self.added[a] == 2 or self.added[b] == 2:
            return False
        if self.end[a] == b:
            # closing a cycle of added edges is only allowed as the full tour
            return self.target == CYCLE and r == 1 and len(self.chosen) == self.n - 1
        return True

    def _check(self) -> tuple[int, ...] | None:
        if self.target == CYCLE:
            return cycle_in_adjacency(self.n, self.adj)
        return path_in_adjacency(self.n, self.adj)

    def _dfs(self, pos: int, r: int) -> tuple[int, ...] | None:
        self.nodes += 1
        if r == 0:
            return self._check()
        m = len(self.cands)
        for i in range(pos, m - r + 1):
            if not self._admissible(i, r):
                continue
            token = self._apply(i)
            if self._viable(i + 1, r - 1):
                found = self._dfs(i + 1, r - 1)
                if found is not None:
                    return found
            self._undo(i, token)
        return None

    def root_viable(self, k: int) -> bool:
        self._reset()
        return self._viable(0, k)

    def from_first(self, k: int, i: int) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
        """Search level k restricted to subsets whose smallest edge index is i."""
        self._reset()
        self.nodes += 1
        if not self._admissible(i, k):
            return None
        self._apply(i)
        if not self._viable(i + 1, k - 1):
            return None
        found = self._dfs(i + 1, k - 1)
        if found is None:
            return None
        return tuple(self.chosen), found

    def level(self, k: int) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
        if k == 0:
            self._reset()
            self.nodes += 1
            w = self._check()
            return ((), w) if w is not None else None
        if not self.root_viable(k):
            self.nodes += 1
            return None
        for i in range(len(self.cands) - k + 1):
            hit = self.from_first(k, i)
            if hit is not None:
                return hit
        return None


_WORKER: _LevelSearch | None = None


def _init_worker(n: int, adj: tuple[int, ...], cands: list[Edge], target: str) -> None:
    global _WORKER
    _WORKER = _LevelSearch(n, adj, cands, target)


def _run_first(args: tuple[int, int]):
    k, i = args
    assert _WORKER is not None
    _WORKER.nodes = 0
    hit = _WORKER.from_first(k, i)
    return hit, _WORKER.nodes


def _search(g: Graph, budget: int, target: str, start: int, workers: int) -> OracleResult:
    if budget < 0:
        raise ValueError("budget must be non-negative")
    n = g.vertex_count
    cands = non_edges(g)
    searcher = _LevelSearch(n, g.adjacency, cands, target)
    pool = None
    try:
        for k in range(start, budget + 1):
            if k > len(cands):
                break
            hit = None
            if workers > 1 and k > 0 and searcher.root_viable(k):
                if pool is None:
                    pool = ProcessPoolExecutor(
                        max_workers=workers,
                        initializer=_init_worker,
                        initargs=(n, g.adjacency, cands, target),
                    )
                jobs = [(k, i) for i in range(len(cands) - k + 1)]
                # results arrive in submission order, so the first hit is the lexicographic least
                for res, nodes in pool.map(_run_first, jobs, chunksize=max(1, len(jobs) // (4 * workers))):
                    searcher.nodes += nodes
                    if res is not None:
                        hit = res
                        break
            elif workers <= 1 or k == 0:
                hit = searcher.level(k)
            if hit is not None:
                chosen, witness = hit
                edges = tuple(cands[i] for i in chosen)
                return OracleResult(k, edges, witness, target, searcher.nodes)
    finally:
        if pool is not None:
            pool.shutdown(cancel_futures=True)
    raise BudgetExceeded(budget)


def cycle_lower_bound(g: Graph) -> int:
    deficit = sum(max(0, 2 - d) for d in g.degrees())
    return max(lambda_lower_bound(len(leaves(g))), -(-deficit // 2))


def min_cycle_augmentation(g: Graph, budget: int = DEFAULT_BUDGET, workers: int = 1) -> OracleResult:
    """Fewest non-edges whose addition makes ``g`` Hamiltonian.

    Raises BudgetExceeded when more than ``budget`` edges would be needed.
    """
    if g.vertex_count < 3:
        raise TooSmallForCycle(f"graph has {g.vertex_count} vertices")
    return _search(g, budget, CYCLE, cycle_lower_bound(g), workers)


def min_path_augmentation(g: Graph, budget: int = DEFAULT_BUDGET, workers: int = 1) -> OracleResult:
    """Fewest non-edges whose addition gives ``g`` a spanning path."""
    if g.vertex_count < 1:
        return OracleResult(0, (), (), PATH)
    return _search(g, budget, PATH, 0, workers)


def already_hamiltonian(g: Graph) -> bool:
    return cycle_in_adjacency(g.vertex_count, g.adjacency) is not None
