"""Exact digraph isomorphism, automorphism counting and canonical forms.

Backtracking over vertex bijections with cheap invariant pruning
(in/out-degrees and the multiset of simple-cycle lengths through each
vertex); practical for the near-cycle digraphs this package works with.
Canonical forms are the lexicographically minimal row-major adjacency
bit-string over all relabelings, found by branch-and-bound.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass

from .digraph import Digraph, simple_cycles
from .boolmat import transpose_rows

ISO_ORDER_CAP = 14
CANONICAL_ORDER_CAP = 12
_INVARIANT_CYCLE_CAP = 200_000


class OrderCapError(ValueError):
    """Input order exceeds the supported backtracking size."""


@dataclass(frozen=True)
class CanonicalForm:
    """Minimal row-major adjacency bit-string over all vertex relabelings."""

    order: int
    canonical_bits: str


def _vertex_invariants(d: Digraph) -> list[tuple]:
    rows = d.successor_rows()
    cols = transpose_rows(rows, d.order)
    _, profile = simple_cycles(d, cap=_INVARIANT_CYCLE_CAP)
    if profile.cap_hit:
        # degree-only pruning still sound; cycle membership just unavailable
        through = [()] * d.order
    else:
        through = [tuple(sorted(s)) for s in profile.per_vertex]
    return [
        (bin(rows[v]).count("1"), bin(cols[v]).count("1"), through[v])
        for v in range(d.order)
    ]


def _search_isomorphisms(a: Digraph, b: Digraph):
    """Backtracking core: yields every arc-preserving bijection a -> b.

    Vertices of a are processed in invariant order; candidates in b are
    restricted to the matching invariant class.  Callers stop consuming
    after the first witness when one suffices.
    """
    n = a.order
    rows_a = a.successor_rows()
    rows_b = b.successor_rows()
    inv_a = _vertex_invariants(a)
    inv_b = _vertex_invariants(b)
    if sorted(inv_a) != sorted(inv_b):
        return
    order = sorted(range(n), key=lambda v: (inv_a[v], v))
    candidates = [
        [w for w in range(n) if inv_b[w] == inv_a[v]]
        for v in order
    ]
    mapping = [-1] * n  # a-vertex (0-based) -> b-vertex
    used = [False] * n

    def consistent(x: int, y: int, depth: int) -> bool:
        if (rows_a[x] >> x) & 1 != (rows_b[y] >> y) & 1:
            return False
        for d_idx in range(depth):
            xp = order[d_idx]
            yp = mapping[xp]
            if (rows_a[x] >> xp) & 1 != (rows_b[y] >> yp) & 1:
                return False
            if (rows_a[xp] >> x) & 1 != (rows_b[yp] >> y) & 1:
                return False
        return True

    def backtrack(depth: int):
        if depth == n:
            yield tuple(mapping[v] + 1 for v in range(n))
            return
        x = order[depth]
        for y in candidates[depth]:
            if used[y] or not consistent(x, y, depth):
                continue
            mapping[x] = y
            used[y] = True
            yield from backtrack(depth + 1)
            mapping[x] = -1
            used[y] = False

    yield from backtrack(0)


def find_isomorphism(a: Digraph, b: Digraph) -> tuple[int, ...] | None:
    """Witness permutation pi (pi[i-1] = image of vertex i), or None.

    Equal-order inputs only make sense; unequal orders are simply not
    isomorphic.
    """
    if max(a.order, b.order) > ISO_ORDER_CAP:
        raise OrderCapError(f"order exceeds the cap {ISO_ORDER_CAP}")
    if a.order != b.order or len(a.arcs) != len(b.arcs):
        return None
    for witness in _search_isomorphisms(a, b):
        return witness
    return None


def are_isomorphic(a: Digraph, b: Digraph) -> bool:
    return find_isomorphism(a, b) is not None


def automorphism_count(d: Digraph) -> int:
    """Number of arc-preserving self-bijections."""
    if d.order > ISO_ORDER_CAP:
        raise OrderCapError(f"order exceeds the cap {ISO_ORDER_CAP}")
    return sum(1 for _ in _search_isomorphisms(d, d))


def canonical_form(d: Digraph) -> CanonicalForm:
    """Branch-and-bound minimization of the row-major adjacency bit-string.

    A partial relabeling fixes the leading k x k block; filling the unknown
    positions with zeros lower-bounds every completion, so any partial value
    already above the incumbent is pruned.
    """
    n = d.order
    if n > CANONICAL_ORDER_CAP:
        raise OrderCapError(f"order exceeds the cap {CANONICAL_ORDER_CAP}")
    rows = d.successor_rows()
    total = n * n

    def bit(i: int, j: int) -> int:
        return (rows[i] >> j) & 1

    def full_value(perm: list[int]) -> int:
        value = 0
        for i in range(n):
            for j in range(n):
                value = (value << 1) | bit(perm[i], perm[j])
        return value

    best = full_value(list(range(n)))
    perm: list[int] = []
    used = [False] * n

    def added_bits(v: int) -> int:
        """Newly determined positions when v becomes image index k = len(perm)."""
        k = len(perm)
        value = 0
        for j in range(k):
            value |= bit(v, perm[j]) << (total - 1 - (k * n + j))
        value |= bit(v, v) << (total - 1 - (k * n + k))
        for i in range(k):
            value |= bit(perm[i], v) << (total - 1 - (i * n + k))
        return value

    def descend(partial: int):
        nonlocal best
        k = len(perm)
        if k == n:
            if partial < best:
                best = partial
            return
        options = []
        for v in range(n):
            if not used[v]:
                options.append((partial | added_bits(v), v))
        options.sort()
        for value, v in options:
            if value > best:
                break
            used[v] = True
            perm.append(v)
            descend(value)
            perm.pop()
            used[v] = False

    descend(0)
    bits = format(best, f"0{total}b")
    return CanonicalForm(order=n, canonical_bits=bits)


def classify_against(d: Digraph, family: Iterable[Digraph]) -> int | None:
    """Index of the first family member isomorphic to d, or None."""
    for index, member in enumerate(family):
        if find_isomorphism(d, member) is not None:
            return index
    return None


def perm_cycle_notation(perm: tuple[int, ...]) -> str:
    """One-line cycle notation for a 1-based permutation tuple."""
    seen = [False] * len(perm)
    parts = []
    for start in range(1, len(perm) + 1):
        if seen[start - 1]:
            continue
        cycle = [start]
        seen[start - 1] = True
        v = perm[start - 1]
        while v != start:
            cycle.append(v)
            seen[v - 1] = True
            v = perm[v - 1]
        if len(cycle) > 1:
            parts.append("(" + " ".join(str(x) for x in cycle) + ")")
    return "".join(parts) if parts else "()"
