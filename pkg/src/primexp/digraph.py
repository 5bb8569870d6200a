"""Digraph structure and cycle analysis.

Vertices are labelled 1..n throughout.  Loops are allowed, multi-arcs are
not.  Everything here is a pure function over immutable values; the cycle
enumerator keeps only local state.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .boolmat import BoolMatrix, pow_rows, rows_all_positive, transpose_rows

DEFAULT_CYCLE_CAP = 10**6


@dataclass(frozen=True)
class Digraph:
    """Directed graph on vertices 1..order with a duplicate-free arc set."""

    order: int
    arcs: frozenset[tuple[int, int]]

    def __post_init__(self):
        if not 2 <= self.order <= 64:
            raise ValueError(f"order must be in [2, 64], got {self.order}")
        for i, j in self.arcs:
            if not (1 <= i <= self.order and 1 <= j <= self.order):
                raise ValueError(f"arc ({i}, {j}) out of range for order {self.order}")

    def successor_rows(self) -> tuple[int, ...]:
        """Adjacency as row bit-sets: bit j-1 of row i-1 set iff arc i -> j."""
        rows = [0] * self.order
        for i, j in self.arcs:
            rows[i - 1] |= 1 << (j - 1)
        return tuple(rows)

    def has_arc(self, i: int, j: int) -> bool:
        return (i, j) in self.arcs


def digraph(order: int, arcs) -> Digraph:
    return Digraph(order, frozenset(arcs))


@dataclass(frozen=True)
class CycleProfile:
    """Cycle length set plus, per vertex, the lengths of simple cycles through it.

    When the enumeration cap was hit, lengths/per_vertex are lower
    approximations and consumers must refuse to certify anything from them.
    """

    lengths: tuple[int, ...]
    per_vertex: tuple[frozenset[int], ...]
    cap_hit: bool

    def vertex_lengths(self, v: int) -> frozenset[int]:
        return self.per_vertex[v - 1]


# -- matrix conversion ---------------------------------------------------

def from_matrix(a: BoolMatrix) -> Digraph:
    arcs = set()
    for i in range(a.order):
        row = a.rows[i]
        while row:
            low = row & -row
            arcs.add((i + 1, low.bit_length()))
            row ^= low
    return Digraph(a.order, frozenset(arcs))


def to_matrix(d: Digraph) -> BoolMatrix:
    return BoolMatrix(d.order, d.successor_rows())


# -- adjacency helpers ----------------------------------------------------

def _adj_lists(rows: tuple[int, ...], n: int) -> list[list[int]]:
    adj: list[list[int]] = []
    for i in range(n):
        row = rows[i]
        out = []
        while row:
            low = row & -row
            out.append(low.bit_length() - 1)
            row ^= low
        adj.append(out)
    return adj


def _reachable_all(rows: tuple[int, ...], n: int, start: int) -> bool:
    seen = 1 << start
    frontier = seen
    full = (1 << n) - 1
    while frontier:
        nxt = 0
        r = frontier
        while r:
            low = r & -r
            nxt |= rows[low.bit_length() - 1]
            r ^= low
        frontier = nxt & ~seen
        seen |= nxt
        if seen == full:
            return True
    return seen == full


def rows_strongly_connected(rows: tuple[int, ...], n: int) -> bool:
    return _reachable_all(rows, n, 0) and _reachable_all(transpose_rows(rows, n), n, 0)


def is_strongly_connected(d: Digraph) -> bool:
    """True iff every ordered vertex pair is joined by a directed path."""
    return rows_strongly_connected(d.successor_rows(), d.order)


def _bfs_dist(rows: tuple[int, ...], n: int, start: int) -> list[int]:
    """Distances from start (0-based); -1 marks unreachable."""
    dist = [-1] * n
    dist[start] = 0
    frontier = 1 << start
    seen = frontier
    level = 0
    while frontier:
        nxt = 0
        r = frontier
        while r:
            low = r & -r
            nxt |= rows[low.bit_length() - 1]
            r ^= low
        nxt &= ~seen
        level += 1
        r = nxt
        while r:
            low = r & -r
            dist[low.bit_length() - 1] = level
            r ^= low
        seen |= nxt
        frontier = nxt
    return dist


def distance(d: Digraph, source: int, target: int) -> int | None:
    """Shortest directed path length, None when unreachable; d(v, v) = 0."""
    n = d.order
    if not (1 <= source <= n and 1 <= target <= n):
        raise ValueError(f"vertex out of range for order {n}")
    dist = _bfs_dist(d.successor_rows(), n, source - 1)
    value = dist[target - 1]
    return None if value < 0 else value


def rows_girth(rows: tuple[int, ...], n: int) -> int | None:
    """Minimum cycle length by per-vertex BFS; None for acyclic digraphs.

    The shortest cycle through v is 1 + the shortest path from a successor
    of v back to v, so one BFS per vertex suffices.  Independent of the
    simple-cycle enumerator, so the two cross-validate.
    """
    best: int | None = None
    for v in range(n):
        if (rows[v] >> v) & 1:
            return 1
        dist = _bfs_dist(rows, n, v)
        for u in range(n):
            if dist[u] >= 0 and (rows[u] >> v) & 1:
                length = dist[u] + 1
                if best is None or length < best:
                    best = length
    return best


def girth(d: Digraph) -> int | None:
    return rows_girth(d.successor_rows(), d.order)


# -- primitivity -----------------------------------------------------------

def rows_period(rows: tuple[int, ...], n: int) -> int:
    """gcd of all cycle lengths of a strongly connected digraph.

    Uses BFS levels from vertex 0: every arc (u, v) contributes
    |level(u) + 1 - level(v)| to the gcd.
    """
    level = [-1] * n
    level[0] = 0
    queue = [0]
    head = 0
    while head < len(queue):
        u = queue[head]
        head += 1
        row = rows[u]
        while row:
            low = row & -row
            v = low.bit_length() - 1
            row ^= low
            if level[v] < 0:
                level[v] = level[u] + 1
                queue.append(v)
    g = 0
    for u in range(n):
        row = rows[u]
        while row:
            low = row & -row
            v = low.bit_length() - 1
            row ^= low
            g = math.gcd(g, abs(level[u] + 1 - level[v]))
    return g


def rows_primitive(rows: tuple[int, ...], n: int) -> bool:
    return rows_strongly_connected(rows, n) and rows_period(rows, n) == 1


def is_primitive(d: Digraph) -> bool:
    """True iff strongly connected with cycle-length gcd 1."""
    return rows_primitive(d.successor_rows(), d.order)


def is_spanning_subgraph(sub: Digraph, sup: Digraph) -> bool:
    return sub.order == sup.order and sub.arcs <= sup.arcs


def relabel(d: Digraph, perm: tuple[int, ...]) -> Digraph:
    """Apply the vertex bijection perm (perm[i-1] is the image of vertex i)."""
    if sorted(perm) != list(range(1, d.order + 1)):
        raise ValueError("perm must be a permutation of 1..order")
    return Digraph(d.order, frozenset((perm[i - 1], perm[j - 1]) for i, j in d.arcs))


# -- simple-cycle enumeration (Johnson) ------------------------------------

def _scc_decompose(adj: list[list[int]], vertices: list[int]) -> list[list[int]]:
    """Strongly connected components of the induced subgraph (iterative Kosaraju)."""
    inset = set(vertices)
    order: list[int] = []
    seen: set[int] = set()
    for root in vertices:
        if root in seen:
            continue
        stack: list[tuple[int, int]] = [(root, 0)]
        seen.add(root)
        while stack:
            v, idx = stack[-1]
            nxt = None
            out = adj[v]
            while idx < len(out):
                w = out[idx]
                idx += 1
                if w in inset and w not in seen:
                    nxt = w
                    break
            stack[-1] = (v, idx)
            if nxt is None:
                order.append(v)
                stack.pop()
            else:
                seen.add(nxt)
                stack.append((nxt, 0))
    radj: dict[int, list[int]] = {v: [] for v in vertices}
    for v in vertices:
        for w in adj[v]:
            if w in inset:
                radj[w].append(v)
    comps: list[list[int]] = []
    assigned: set[int] = set()
    for root in reversed(order):
        if root in assigned:
            continue
        comp = [root]
        assigned.add(root)
        stack2 = [root]
        while stack2:
            v = stack2.pop()
            for w in radj[v]:
                if w not in assigned:
                    assigned.add(w)
                    comp.append(w)
                    stack2.append(w)
        comps.append(sorted(comp))
    return comps


def _johnson_cycles_through(adj: dict[int, list[int]], start: int):
    """Yield all simple cycles through start inside adj (Johnson's search)."""
    blocked = {start}
    closure: dict[int, set[int]] = {v: set() for v in adj}
    path = [start]
    stack = [iter(adj[start])]
    closed = [False]
    while stack:
        advanced = False
        for w in stack[-1]:
            if w == start:
                yield list(path)
                closed[-1] = True
            elif w not in blocked:
                path.append(w)
                blocked.add(w)
                stack.append(iter(adj[w]))
                closed.append(False)
                advanced = True
                break
        if advanced:
            continue
        stack.pop()
        v = path.pop()
        if closed.pop():
            if closed:
                closed[-1] = True
            unblock = [v]
            while unblock:
                u = unblock.pop()
                if u in blocked:
                    blocked.remove(u)
                    unblock.extend(closure[u])
                    closure[u].clear()
        else:
            for w in adj[v]:
                closure[w].add(v)


def simple_cycles(d: Digraph, cap: int = DEFAULT_CYCLE_CAP) -> tuple[list[list[int]], CycleProfile]:
    """Enumerate simple directed cycles and build the cycle profile.

    Cycles are vertex lists (1-based, no repeated closing vertex).  When cap
    cycles have been produced the enumeration stops and cap_hit is set.
    """
    if cap < 1:
        raise ValueError(f"cap must be >= 1, got {cap}")
    n = d.order
    rows = d.successor_rows()
    cycles: list[list[int]] = []
    cap_hit = False

    for v in range(n):
        if (rows[v] >> v) & 1:
            if len(cycles) >= cap:
                cap_hit = True
                break
            cycles.append([v + 1])

    if not cap_hit:
        base_adj = _adj_lists(rows, n)
        loopless = [[w for w in base_adj[v] if w != v] for v in range(n)]
        components = [c for c in _scc_decompose(loopless, list(range(n))) if len(c) >= 2]
        while components and not cap_hit:
            comp = components.pop()
            root = comp[0]
            compset = set(comp)
            sub = {v: [w for w in loopless[v] if w in compset] for v in comp}
            for cycle in _johnson_cycles_through(sub, root):
                if len(cycles) >= cap:
                    cap_hit = True
                    break
                cycles.append([v + 1 for v in cycle])
            rest = [v for v in comp if v != root]
            components.extend(c for c in _scc_decompose(loopless, rest) if len(c) >= 2)

    per_vertex = [set() for _ in range(n)]
    lengths: set[int] = set()
    for cycle in cycles:
        length = len(cycle)
        lengths.add(length)
        for v in cycle:
            per_vertex[v - 1].add(length)
    profile = CycleProfile(
        lengths=tuple(sorted(lengths)),
        per_vertex=tuple(frozenset(s) for s in per_vertex),
        cap_hit=cap_hit,
    )
    return cycles, profile


# -- matrix-backed reachability oracle -------------------------------------

def closure_strongly_connected(d: Digraph) -> bool:
    """Strong connectivity via the (A OR I)^(n-1) all-positive criterion."""
    n = d.order
    rows = tuple(r | (1 << i) for i, r in enumerate(d.successor_rows()))
    return rows_all_positive(pow_rows(rows, n - 1, n), n)
