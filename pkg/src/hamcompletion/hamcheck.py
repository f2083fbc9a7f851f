"""Exact Hamiltonian cycle / path search and witness validation.

Small graphs (up to ``DP_LIMIT`` vertices) go through a subset dynamic
programme that keeps, for every reachable vertex set, the bitmask of
possible path endpoints. Larger graphs use depth-first backtracking with
a look-ahead degree check. Both are exact.
"""

from __future__ import annotations

from typing import Sequence

from .graph import Graph, biconnected_adjacency, count_components

DP_LIMIT = 24

CycleWitness = tuple[int, ...]
PathWitness = tuple[int, ...]


def _lowest(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


# ---------------------------------------------------------------------------
# validation


def verify_path(g: Graph, w: Sequence[int]) -> bool:
    try:
        order = [int(x) for x in w]
    except (TypeError, ValueError):
        return False
    n = g.vertex_count
    if len(order) != n or sorted(order) != list(range(n)):
        return False
    return all(g.has_edge(a, b) for a, b in zip(order, order[1:]))


def verify_cycle(g: Graph, w: Sequence[int]) -> bool:
    if g.vertex_count < 3 or not verify_path(g, w):
        return False
    return g.has_edge(int(w[-1]), int(w[0]))


# ---------------------------------------------------------------------------
# subset dynamic programme


def _dp_layers(adj: Sequence[int], n: int, starts: int) -> list[dict[int, int]]:
    """layers[k] maps each reachable vertex set of size k+1 to its endpoint bitmask.

    Paths start at any vertex in ``starts``.
    """
    first: dict[int, int] = {}
    for s in _bits(starts):
        first[1 << s] = 1 << s
    layers = [first]
    for _ in range(n - 1):
        nxt: dict[int, int] = {}
        for mask, ends in layers[-1].items():
            for v in _bits(ends):
                free = adj[v] & ~mask
                for w in _bits(free):
                    key = mask | (1 << w)
                    nxt[key] = nxt.get(key, 0) | (1 << w)
        if not nxt:
            break
        layers.append(nxt)
    return layers


def _walk_back(adj: Sequence[int], layers: list[dict[int, int]], mask: int, end: int) -> list[int]:
    order = [end]
    for k in range(len(layers) - 2, -1, -1):
        mask ^= 1 << end
        ends = layers[k][mask] & adj[end]
        end = _lowest(ends)
        order.append(end)
    order.reverse()
    return order


def _cycle_dp(n: int, adj: Sequence[int]) -> CycleWitness | None:
    layers = _dp_layers(adj, n, 1)
    full = (1 << n) - 1
    if len(layers) < n or full not in layers[n - 1]:
        return None
    closing = layers[n - 1][full] & adj[0]
    if not closing:
        return None
    return tuple(_walk_back(adj, layers, full, _lowest(closing)))


def _path_dp(n: int, adj: Sequence[int]) -> PathWitness | None:
    full = (1 << n) - 1
    layers = _dp_layers(adj, n, full)
    if len(layers) < n or full not in layers[n - 1]:
        return None
    ends = layers[n - 1][full]
    return tuple(_walk_back(adj, layers, full, _lowest(ends)))


# ---------------------------------------------------------------------------
# backtracking


def _feasible(adj: Sequence[int], unvisited: int, cur: int, anchor: int) -> bool:
    # Every unvisited vertex still needs two usable neighbours among the
    # unvisited ones plus the current endpoint and the anchor. Without an
    # anchor (open path) one vertex may be the final endpoint and need one.
    pool = unvisited | (1 << cur) | anchor
    spare = 0 if anchor else 1
    for w in _bits(unvisited):
        usable = adj[w] & pool
        if usable & (usable - 1):
            continue
        if usable and spare:
            spare -= 1
            continue
        return False
    return True


def _extend(adj: Sequence[int], order: list[int], unvisited: int, close_to: int | None) -> bool:
    cur = order[-1]
    if not unvisited:
        return close_to is None or bool(adj[cur] >> close_to & 1)
    anchor = 0 if close_to is None else 1 << close_to
    for w in _bits(adj[cur] & unvisited):
        rest = unvisited & ~(1 << w)
        if rest and not _feasible(adj, rest, w, anchor):
            continue
        order.append(w)
        if _extend(adj, order, rest, close_to):
            return True
        order.pop()
    return False


def _cycle_backtrack(n: int, adj: Sequence[int]) -> CycleWitness | None:
    order = [0]
    if _extend(adj, order, ((1 << n) - 1) ^ 1, 0):
        return tuple(order)
    return None


def _path_backtrack(n: int, adj: Sequence[int]) -> PathWitness | None:
    full = (1 << n) - 1
    for s in range(n):
        order = [s]
        if _extend(adj, order, full ^ (1 << s), None):
            return tuple(order)
    return None


# ---------------------------------------------------------------------------
# public entry points


def _pick(method: str, n: int) -> str:
    if method == "auto":
        return "dp" if n <= DP_LIMIT else "backtrack"
    if method not in ("dp", "backtrack"):
        raise ValueError(f"unknown method {method!r}")
    return method


def cycle_in_adjacency(n: int, adj: Sequence[int], method: str = "auto") -> CycleWitness | None:
    """Spanning cycle search on a bitmask adjacency list."""
    if n < 3:
        return None
    if min(m.bit_count() for m in adj) < 2 or not biconnected_adjacency(adj, n):
        return None
    w = _cycle_dp(n, adj) if _pick(method, n) == "dp" else _cycle_backtrack(n, adj)
    if w is not None and w[1] > w[-1]:
        w = (w[0],) + tuple(reversed(w[1:]))
    return w


def path_in_adjacency(n: int, adj: Sequence[int], method: str = "auto") -> PathWitness | None:
    if n == 0:
        return ()
    if n == 1:
        return (0,)
    degs = [m.bit_count() for m in adj]
    if min(degs) == 0 or sum(d == 1 for d in degs) > 2 or count_components(adj, n) != 1:
        return None
    w = _path_dp(n, adj) if _pick(method, n) == "dp" else _path_backtrack(n, adj)
    if w is not None and w[0] > w[-1]:
        w = w[::-1]
    return w


def hamiltonian_cycle(g: Graph, method: str = "auto") -> CycleWitness | None:
    """A spanning cycle as a vertex order starting at 0, or None if none exists.

    The cycle is oriented so that its second vertex is smaller than its last.

    Graphs on fewer than three vertices never have one.
    """
    return cycle_in_adjacency(g.vertex_count, g.adjacency, method)


def hamiltonian_path(g: Graph, method: str = "auto") -> PathWitness | None:
    return path_in_adjacency(g.vertex_count, g.adjacency, method)
