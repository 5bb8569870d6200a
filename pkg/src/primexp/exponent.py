"""Exact exponent computation, walk witnesses, cycle-meeting walk distances
and the closed-form bound/prediction evaluators.

The exponent of a primitive digraph is the least k >= 1 whose k-th Boolean
matrix power is entirely positive.  ``c_walk_distances`` computes, for every
ordered vertex pair, the length of the shortest walk that shares a vertex
with at least one simple cycle of each length occurring in the digraph.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass

from .boolmat import mul_rows, pow_rows, rows_all_positive
from .digraph import (
    DEFAULT_CYCLE_CAP,
    CycleProfile,
    Digraph,
    rows_primitive,
    simple_cycles,
)
from .semigroup import frobenius

MAX_CYCLE_LENGTHS = 20


class NotPrimitiveError(ValueError):
    """The operation is defined for primitive digraphs only."""


class TruncatedProfileError(ValueError):
    """The cycle profile hit its enumeration cap; refusing to certify."""


class TooManyCycleLengthsError(ValueError):
    """More distinct cycle lengths than the product-state search supports."""


def wielandt_bound(n: int) -> int:
    """Maximum exponent over primitive digraphs of order n: (n-1)^2 + 1."""
    return (n - 1) ** 2 + 1


@dataclass(frozen=True)
class ExponentResult:
    """Exponent value plus the witness pair missing a walk of length value-1.

    The witness is the lexicographically least ordered pair (u, v) with no
    u -> v walk of length value - 1; None only when the caller suppressed it.
    """

    value: int
    certificate_pair: tuple[int, int] | None
    certificate_length: int


@dataclass(frozen=True)
class CWalkResult:
    """All-pairs cycle-meeting walk distances and their maximum.

    max is taken over every ordered pair including the diagonal; arg_max is
    the lexicographically least attaining pair.
    """

    per_pair: tuple[tuple[int, ...], ...]
    max: int
    arg_max: tuple[int, int]

    def pair(self, i: int, j: int) -> int:
        return self.per_pair[i - 1][j - 1]


def exponent_of_rows(rows: tuple[int, ...], n: int) -> int | None:
    """Smallest k >= 1 with rows^k all-positive, or None past the Wielandt cap.

    Linear scan with early exit: the all-positive predicate is monotone in k
    for primitive matrices, and the scan keeps the last failing power on
    hand for witness extraction.
    """
    cap = wielandt_bound(n)
    power = rows
    for k in range(1, cap + 1):
        if rows_all_positive(power, n):
            return k
        power = mul_rows(power, rows)
    return None


def exponent(d: Digraph) -> ExponentResult:
    """Exponent with a lower-bound witness; raises on non-primitive input."""
    n = d.order
    rows = d.successor_rows()
    if not rows_primitive(rows, n):
        raise NotPrimitiveError(f"digraph of order {n} is not primitive")
    cap = wielandt_bound(n)
    prev = tuple(1 << i for i in range(n))
    power = rows
    for k in range(1, cap + 1):
        if rows_all_positive(power, n):
            pair = _least_zero_entry(prev, n)
            return ExponentResult(value=k, certificate_pair=pair, certificate_length=k - 1)
        prev = power
        power = mul_rows(power, rows)
    raise NotPrimitiveError(f"no all-positive power up to the cap {cap}; input not primitive")


def _least_zero_entry(rows: tuple[int, ...], n: int) -> tuple[int, int] | None:
    full = (1 << n) - 1
    for i in range(n):
        missing = full & ~rows[i]
        if missing:
            return (i + 1, (missing & -missing).bit_length())
    return None


def walk_exists(d: Digraph, source: int, target: int, length: int) -> bool:
    """True iff some directed walk of exactly the given length joins the pair."""
    n = d.order
    if not (1 <= source <= n and 1 <= target <= n):
        raise ValueError(f"vertex out of range for order {n}")
    if length < 0:
        raise ValueError(f"length must be >= 0, got {length}")
    rows = pow_rows(d.successor_rows(), length, n)
    return bool((rows[source - 1] >> (target - 1)) & 1)


def c_walk_distances(
    d: Digraph,
    profile: CycleProfile | None = None,
    cap: int = DEFAULT_CYCLE_CAP,
) -> CWalkResult:
    """All-pairs shortest walks meeting one cycle of every occurring length.

    BFS over product states (vertex, subset of cycle lengths already met).
    A walk meets a p-cycle when it shares a vertex with some simple cycle of
    length p; the zero-length walk at v meets every cycle through v.
    """
    n = d.order
    rows = d.successor_rows()
    if not rows_primitive(rows, n):
        raise NotPrimitiveError(f"digraph of order {n} is not primitive")
    if profile is None:
        _, profile = simple_cycles(d, cap=cap)
    if profile.cap_hit:
        raise TruncatedProfileError("cycle profile truncated at its cap")
    lengths = profile.lengths
    u = len(lengths)
    if u > MAX_CYCLE_LENGTHS:
        raise TooManyCycleLengthsError(f"{u} distinct cycle lengths exceeds {MAX_CYCLE_LENGTHS}")
    index = {length: i for i, length in enumerate(lengths)}
    met = [0] * n
    for v in range(n):
        for length in profile.per_vertex[v]:
            met[v] |= 1 << index[length]
    full = (1 << u) - 1

    per_pair: list[tuple[int, ...]] = []
    for start in range(n):
        dist: list[int] = [-1] * n
        seen = {(start, met[start])}
        queue = deque([(start, met[start], 0)])
        remaining = n
        while queue and remaining:
            v, mask, steps = queue.popleft()
            if mask == full and dist[v] < 0:
                dist[v] = steps
                remaining -= 1
            row = rows[v]
            while row:
                low = row & -row
                w = low.bit_length() - 1
                row ^= low
                state = (w, mask | met[w])
                if state not in seen:
                    seen.add(state)
                    queue.append((w, state[1], steps + 1))
        if remaining:
            raise NotPrimitiveError("product-state search could not reach every pair")
        per_pair.append(tuple(dist))

    best = -1
    arg = (1, 1)
    for i in range(n):
        for j in range(n):
            if per_pair[i][j] > best:
                best = per_pair[i][j]
                arg = (i + 1, j + 1)
    return CWalkResult(per_pair=tuple(per_pair), max=best, arg_max=arg)


# -- closed-form evaluators -------------------------------------------------
#
# Each evaluator returns the stated expression after validating its
# parameter window; none of them asserts anything about actual exponents.

def lemma22_bound(d: Digraph, profile: CycleProfile | None = None) -> int:
    """Cycle-meeting diameter plus the conductor of the cycle length set."""
    if profile is None:
        _, profile = simple_cycles(d)
    result = c_walk_distances(d, profile=profile)
    return result.max + frobenius(profile.lengths)


def lemma23_bound(n: int, g: int) -> int:
    """n + g(n-2) for a primitive digraph of order n and girth g."""
    if not 1 <= g <= n - 1:
        raise ValueError(f"need 1 <= g <= n-1, got g={g}, n={n}")
    return n + g * (n - 2)


def lemma25_bound(n: int) -> int:
    """floor((n-2)^2 / 2) + n; applies when at least 3 cycle lengths occur."""
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    return (n - 2) ** 2 // 2 + n


def lemma26_bound(n: int, g: int, q: int) -> int:
    """2n - g - 1 + (g-1)(q-1) for cycle length set {g, q}, g <= q."""
    if not 1 <= g <= q <= n:
        raise ValueError(f"need 1 <= g <= q <= n, got g={g}, q={q}, n={n}")
    return 2 * n - g - 1 + (g - 1) * (q - 1)


def lemma32_bound(n: int, g: int) -> int:
    """2n - 2 + (g-1)(n-3) for cycle length set {g, q} with q <= n-1."""
    if n < 6:
        raise ValueError(f"need n >= 6, got {n}")
    if not 1 <= g <= n - 2:
        raise ValueError(f"need 1 <= g <= n-2, got g={g}, n={n}")
    return 2 * n - 2 + (g - 1) * (n - 3)


def lemma34_bound(n: int, g: int) -> int:
    """(n-1)g + n - 2g for the two-disjoint-g-cycle construction."""
    if n < 2 * g:
        raise ValueError(f"need n >= 2g, got n={n}, g={g}")
    if math.gcd(n, g) != 1:
        raise ValueError(f"need gcd(n, g) = 1, got gcd({n}, {g}) = {math.gcd(n, g)}")
    return (n - 1) * g + n - 2 * g


def formula_thm33(n: int, g: int, r: int) -> int:
    """Predicted exponent (n-2)g + 1 - r + n for a chord set with maximum r.

    Pure prediction: the verification harness owns the comparison against
    oracle exponents.
    """
    if math.gcd(n, g) != 1:
        raise ValueError(f"need gcd(n, g) = 1, got gcd({n}, {g}) = {math.gcd(n, g)}")
    t = min(n - g + 1, g)
    if not 1 <= r <= t:
        raise ValueError(f"need 1 <= r <= {t}, got r={r}")
    return (n - 2) * g + 1 - r + n


def thm36_range(n: int, g: int) -> tuple[int, int]:
    """Exponent window (low_exclusive, high_inclusive) of the characterization."""
    low = 2 * n - 2 + (g - 1) * (n - 3)
    high = n + g * (n - 2)
    return (low, high)


def z_of_w(n: int, g: int, w: int) -> int:
    """Chord-maximum index z = (n-2)g + 1 + n - w for w inside the window."""
    low, high = thm36_range(n, g)
    if not low < w <= high:
        raise ValueError(f"w={w} outside window ({low}, {high}]")
    return (n - 2) * g + 1 + n - w
