"""Constructors and enumerators for the named chord-on-a-cycle digraph families.

The base object is the standard descending n-cycle
C = (v_n, v_{n-1}, ..., v_2, v_1, v_n); chords of span g are added on top of
it.  The two-disjoint-g-cycle family H rides on an ascending n-cycle
instead, exactly as constructed.  Enumeration streams are deterministic
(subset bitmasks ascending) so verification runs are reproducible and
resumable by index.
"""

from __future__ import annotations

import math
from collections.abc import Iterator
from dataclasses import dataclass, field

from .digraph import Digraph


def _chord_target(n: int, g: int, i: int) -> int:
    """Target of the span-g chord leaving v_i, with cyclic wraparound."""
    return (g + i - 2) % n + 1


@dataclass(frozen=True)
class FamilySpec:
    """Parameters selecting one constructed digraph.

    kind is one of standard_cycle/d1/d2/d_gN/q1/q2/h/chord; only the fields
    meaningful for that kind are set.  chord_mask is a bitmask over cyclic
    chord positions 1..n (bit i-1 for position i).
    """

    kind: str
    n: int
    g: int | None = None
    N: tuple[int, ...] = field(default=())
    k: int | None = None
    chord_mask: int | None = None

    @property
    def r(self) -> int | None:
        return max(self.N) if self.N else None

    def build(self) -> Digraph:
        if self.kind == "standard_cycle":
            return standard_cycle(self.n)
        if self.kind == "d1":
            return d1(self.n)
        if self.kind == "d2":
            return d2(self.n)
        if self.kind == "d_gN":
            return d_gN(self.n, self.g, set(self.N))
        if self.kind == "q1":
            return q1(self.n, self.g)
        if self.kind == "q2":
            return q2(self.n, self.g)
        if self.kind == "h":
            return h_graph(self.n, self.g, self.k)
        if self.kind == "chord":
            return chord_member(self.n, self.g, self.chord_mask)
        raise ValueError(f"unknown family kind {self.kind!r}")

    def label(self) -> str:
        parts = [f"n={self.n}"]
        if self.g is not None:
            parts.append(f"g={self.g}")
        if self.N:
            parts.append("N=" + ",".join(str(i) for i in self.N))
        if self.k is not None:
            parts.append(f"k={self.k}")
        if self.chord_mask is not None:
            parts.append(f"mask={self.chord_mask}")
        return f"{self.kind}:" + ",".join(parts)


def standard_cycle(n: int) -> Digraph:
    """Descending n-cycle: arcs v_j -> v_{j-1} for j = 2..n plus v_1 -> v_n."""
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    arcs = {(j, j - 1) for j in range(2, n + 1)}
    arcs.add((1, n))
    return Digraph(n, frozenset(arcs))


def d1(n: int) -> Digraph:
    """Standard cycle plus the chord (v_1, v_{n-1})."""
    if n < 3:
        raise ValueError(f"need n >= 3, got {n}")
    return Digraph(n, standard_cycle(n).arcs | {(1, n - 1)})


def d2(n: int) -> Digraph:
    """d1 plus the chord (v_2, v_n)."""
    if n < 3:
        raise ValueError(f"need n >= 3, got {n}")
    return Digraph(n, d1(n).arcs | {(2, n)})


def chord_position_cap(n: int, g: int) -> int:
    """t = min(n-g+1, g): highest admissible chord position index."""
    return min(n - g + 1, g)


def d_gN(n: int, g: int, N) -> Digraph:
    """Standard cycle plus the chord (v_i, v_{g+i-1}) for every i in N.

    Each chord closes a g-cycle v_i -> v_{g+i-1} -> v_{g+i-2} -> ... -> v_i.
    """
    if math.gcd(n, g) != 1:
        raise ValueError(f"gcd violation: gcd({n}, {g}) = {math.gcd(n, g)}, need 1")
    positions = sorted(set(N))
    if not positions:
        raise ValueError("emptiness violation: chord set N must be nonempty")
    t = chord_position_cap(n, g)
    if positions[0] < 1 or positions[-1] > t:
        raise ValueError(f"range violation: N must lie in 1..{t}, got {positions}")
    arcs = set(standard_cycle(n).arcs)
    for i in positions:
        arcs.add((i, g + i - 1))
    return Digraph(n, frozenset(arcs))


def q1(n: int, g: int) -> Digraph:
    return d_gN(n, g, {1})


def q2(n: int, g: int) -> Digraph:
    return d_gN(n, g, {1, 2})


def h_graph(n: int, g: int, k: int) -> Digraph:
    """Ascending n-cycle carrying two vertex-disjoint g-cycles.

    Arcs v_j -> v_{j+1} and v_n -> v_1 (note the opposite orientation from
    the standard cycle) plus the chords (v_g, v_1) and (v_{k+g-1}, v_k).
    The construction itself does not require gcd(n, g) = 1; without it the
    result is simply not primitive.
    """
    if g < 1:
        raise ValueError(f"need g >= 1, got {g}")
    if n < 2 * g:
        raise ValueError(f"need n >= 2g, got n={n}, g={g}")
    if not g + 1 <= k:
        raise ValueError(f"need k >= g+1, got k={k}, g={g}")
    if not g + k - 1 <= n:
        raise ValueError(f"need g+k-1 <= n, got g={g}, k={k}, n={n}")
    arcs = {(j, j + 1) for j in range(1, n)}
    arcs.add((n, 1))
    arcs.add((g, 1))
    arcs.add((k + g - 1, k))
    return Digraph(n, frozenset(arcs))


def chord_member(n: int, g: int, mask: int) -> Digraph:
    """Standard cycle plus the rotational span-g chord at each masked position."""
    if not 2 <= g <= n - 1:
        raise ValueError(f"need 2 <= g <= n-1, got g={g}, n={n}")
    if not 1 <= mask < (1 << n):
        raise ValueError(f"mask must be in 1..{(1 << n) - 1}, got {mask}")
    arcs = set(standard_cycle(n).arcs)
    m = mask
    while m:
        low = m & -m
        i = low.bit_length()
        m ^= low
        arcs.add((i, _chord_target(n, g, i)))
    return Digraph(n, frozenset(arcs))


def _mask_positions(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length())
        mask ^= low
    return tuple(out)


def enumerate_DgN(n: int, g: int) -> Iterator[FamilySpec]:
    """All nonempty chord sets N within 1..t, as ascending subset bitmasks."""
    if math.gcd(n, g) != 1:
        raise ValueError(f"gcd violation: gcd({n}, {g}) = {math.gcd(n, g)}, need 1")
    t = chord_position_cap(n, g)
    for mask in range(1, 1 << t):
        yield FamilySpec(kind="d_gN", n=n, g=g, N=_mask_positions(mask))


def enumerate_Dr(n: int, g: int, r: int) -> Iterator[FamilySpec]:
    """Chord sets with maximum exactly r, in ascending subset-bitmask order."""
    if math.gcd(n, g) != 1:
        raise ValueError(f"gcd violation: gcd({n}, {g}) = {math.gcd(n, g)}, need 1")
    t = chord_position_cap(n, g)
    if not 1 <= r <= t:
        raise ValueError(f"need 1 <= r <= {t}, got r={r}")
    top = 1 << (r - 1)
    for low in range(top):
        yield FamilySpec(kind="d_gN", n=n, g=g, N=_mask_positions(low | top))


def chord_family(n: int, g: int) -> Iterator[FamilySpec]:
    """Every nonempty subset of the n rotational span-g chord positions.

    A strict superset of the d_gN family: positions beyond t are included,
    so converse searches cover every single-span chord placement.
    """
    if not 2 <= g <= n - 1:
        raise ValueError(f"need 2 <= g <= n-1, got g={g}, n={n}")
    for mask in range(1, 1 << n):
        yield FamilySpec(kind="chord", n=n, g=g, chord_mask=mask)
