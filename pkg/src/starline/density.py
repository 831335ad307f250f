"""Exact density invariants: maximum average degree and girth.

Every verdict here is computed in exact rational arithmetic (stdlib
``fractions.Fraction``); no floating point enters any comparison.

``mad`` is decided by integer max-flow threshold tests plus a rational
binary search, and ``mad_brute`` re-derives the same value by scanning
all vertex subsets.  Keeping both routes lets the tests check one
implementation against the other on every enumerated graph.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .multigraph import Multigraph

Rational = Fraction

# density regime in which five colors are guaranteed (see atlas checks)
MAD_FIVE_COLOR_BOUND = Fraction(12, 5)

BRUTE_MAX_N = 20
BRUTE_EXACT_N = 12  # scale at which the subset scan is the reference oracle


class _MaxFlow:
    """Dinic max-flow on integer capacities (exact with Python ints)."""

    def __init__(self, size: int):
        self.size = size
        self.adj: list[list[list[int]]] = [[] for _ in range(size)]

    def add_edge(self, u: int, v: int, cap: int) -> None:
        self.adj[u].append([v, cap, len(self.adj[v])])
        self.adj[v].append([u, 0, len(self.adj[u]) - 1])

    def _levels(self, s: int, t: int) -> list[int] | None:
        level = [-1] * self.size
        level[s] = 0
        queue = [s]
        for v in queue:
            for arc in self.adj[v]:
                if arc[1] > 0 and level[arc[0]] < 0:
                    level[arc[0]] = level[v] + 1
                    queue.append(arc[0])
        return level if level[t] >= 0 else None

    def _push(self, v: int, t: int, limit: int, level: list[int], it: list[int]) -> int:
        if v == t:
            return limit
        while it[v] < len(self.adj[v]):
            arc = self.adj[v][it[v]]
            to, cap, rev = arc
            if cap > 0 and level[to] == level[v] + 1:
                got = self._push(to, t, min(limit, cap), level, it)
                if got > 0:
                    arc[1] -= got
                    self.adj[to][rev][1] += got
                    return got
            it[v] += 1
        return 0

    def max_flow(self, s: int, t: int) -> int:
        total = 0
        while True:
            level = self._levels(s, t)
            if level is None:
                return total
            it = [0] * self.size
            while True:
                got = self._push(s, t, 1 << 62, level, it)
                if got == 0:
                    break
                total += got

    def source_side(self, s: int) -> set[int]:
        """Vertices reachable from ``s`` in the residual network; call after
        :meth:`max_flow` to read off a minimum cut."""
        seen = {s}
        stack = [s]
        while stack:
            v = stack.pop()
            for to, cap, _ in self.adj[v]:
                if cap > 0 and to not in seen:
                    seen.add(to)
                    stack.append(to)
        return seen


def _density_network(g: Multigraph, p: int, q: int) -> tuple[_MaxFlow, int, int]:
    """Network whose min cut decides whether some nonempty S has
    ``e(G[S]) * q > p * |S|``.

    For the cut with source side ``{s} | S`` the capacity works out to
    ``n*m*q - 2*(q*e(S) - p*|S|)``, so a cut below ``n*m*q`` certifies a
    subset denser than ``p/q`` and the residual source side names it.
    """
    n, m = g.n, g.m
    net = _MaxFlow(n + 2)
    s, t = n, n + 1
    for v in range(n):
        net.add_edge(s, v, m * q)
        net.add_edge(v, t, m * q + 2 * p - g.degree(v) * q)
    for u, v in g.edges:
        net.add_edge(u, v, q)
        net.add_edge(v, u, q)
    return net, s, t


def _denser_subset(g: Multigraph, density: Fraction) -> set[int] | None:
    """A nonempty vertex set with ``e(G[S]) / |S| > density``, else None."""
    p, q = density.numerator, density.denominator
    net, s, t = _density_network(g, p, q)
    if net.max_flow(s, t) >= g.n * g.m * q:
        return None
    side = net.source_side(s)
    side.discard(s)
    return side


def mad(g: Multigraph) -> tuple[Fraction, tuple[int, ...]]:
    """Maximum average degree ``max 2 e(G[S]) / |S|`` over nonempty S.

    Ranging over induced subgraphs suffices: on a fixed vertex set,
    dropping edges never raises ``2 e / |S|``.  The value is located by
    binary search over the finite candidate set ``{2a/b}`` (``0 <= a <= m``,
    ``1 <= b <= n``), each threshold decided exactly by an integer max-flow
    cut.  Returns ``(value, witness)`` with one subset attaining the value.
    """
    if g.n == 0:
        raise ValueError("mad requires at least one vertex")
    if g.m == 0:
        return Fraction(0), tuple(range(g.n))
    candidates = sorted({Fraction(2 * a, b) for a in range(g.m + 1) for b in range(1, g.n + 1)})
    lo, hi = 0, len(candidates) - 1
    # invariant: the answer lies in candidates[lo..hi]
    while lo < hi:
        mid = (lo + hi) // 2
        if _denser_subset(g, candidates[mid] / 2) is not None:
            lo = mid + 1
        else:
            hi = mid
    value = candidates[lo]
    # witness: the cut at the predecessor threshold is denser than every
    # candidate below the answer, hence attains the answer exactly
    witness = _denser_subset(g, candidates[lo - 1] / 2)
    assert witness, "flow witness missing below the located maximum"
    return value, tuple(sorted(witness))


def mad_brute(g: Multigraph, *, max_n: int = BRUTE_MAX_N) -> tuple[Fraction, tuple[int, ...]]:
    """Subset-scan reference for :func:`mad`; identical contract.

    Authoritative at small scale (exhaustive over all ``2^n - 1`` subsets);
    guarded at ``max_n`` vertices.
    """
    if g.n == 0:
        raise ValueError("mad requires at least one vertex")
    if g.n > max_n:
        raise ValueError(f"subset scan guarded at n <= {max_n}, got n = {g.n}")
    n = g.n
    mult = [[0] * n for _ in range(n)]
    for u, v in g.edges:
        mult[u][v] += 1
        mult[v][u] += 1
    edge_count = [0] * (1 << n)
    best: Fraction | None = None
    best_mask = 0
    for mask in range(1, 1 << n):
        low = mask & -mask
        v = low.bit_length() - 1
        rest = mask ^ low
        count = edge_count[rest]
        row = mult[v]
        r = rest
        while r:
            ulow = r & -r
            count += row[ulow.bit_length() - 1]
            r ^= ulow
        edge_count[mask] = count
        density = Fraction(2 * count, mask.bit_count())
        if best is None or density > best:
            best = density
            best_mask = mask
    assert best is not None
    return best, tuple(v for v in range(n) if best_mask >> v & 1)


def girth(g: Multigraph) -> int | float:
    """Length of a shortest cycle; a parallel pair is a 2-cycle; ``inf``
    for forests."""
    for u, v in set(g.edges):
        if g.multiplicity(u, v) >= 2:
            return 2
    n = g.n
    nbrs = [sorted({u for u, _ in g.adjacency[v]}) for v in range(n)]
    best: int | float = math.inf
    for s in range(n):
        dist = [-1] * n
        parent = [-1] * n
        dist[s] = 0
        queue = [s]
        for u in queue:
            if 2 * dist[u] >= best - 1:
                break
            for w in nbrs[u]:
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif w != parent[u]:
                    # closed walk through s; never shorter than the girth
                    cand = dist[u] + dist[w] + 1
                    if cand < best:
                        best = cand
    return best


def mad_girth_bound(girth_value: int) -> Fraction:
    """The density bound ``2g / (g - 2)`` forced by girth ``g >= 3``."""
    if not isinstance(girth_value, int) or girth_value < 3:
        raise ValueError(f"girth bound needs an integer girth >= 3, got {girth_value!r}")
    return Fraction(2 * girth_value, girth_value - 2)
