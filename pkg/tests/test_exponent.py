from __future__ import annotations

import random

import pytest

from primexp.boolmat import all_ones, is_all_positive, power
from primexp.digraph import Digraph, digraph, distance, from_matrix, relabel, simple_cycles, to_matrix
from primexp.exponent import (
    NotPrimitiveError,
    TooManyCycleLengthsError,
    TruncatedProfileError,
    c_walk_distances,
    exponent,
    formula_thm33,
    lemma22_bound,
    lemma23_bound,
    lemma25_bound,
    lemma26_bound,
    lemma32_bound,
    lemma34_bound,
    thm36_range,
    walk_exists,
    wielandt_bound,
    z_of_w,
)
from primexp.families import d1, d2, d_gN, q1, standard_cycle
from primexp.verify import random_primitive_digraph


def exponent_by_all_pairs_walks(d: Digraph) -> int:
    """Oracle: smallest k such that every ordered pair has a length-k walk."""
    a = to_matrix(d)
    for k in range(1, wielandt_bound(d.order) + 1):
        if is_all_positive(power(a, k)):
            return k
    raise AssertionError("no all-positive power within the maximum")


def cwalk_by_length_dp(d: Digraph):
    """Oracle: exact-length walk DP over (vertex, met-set) states.

    Level L holds the states reachable by walks of length exactly L; no
    first-visit bookkeeping, so it is computed independently of the BFS.
    """
    n = d.order
    _, profile = simple_cycles(d)
    lengths = profile.lengths
    index = {length: i for i, length in enumerate(lengths)}
    met = [0] * n
    for v in range(n):
        for length in profile.per_vertex[v]:
            met[v] |= 1 << index[length]
    full = (1 << len(lengths)) - 1
    rows = d.successor_rows()
    limit = 2 * n * n
    result = []
    for start in range(n):
        found: dict[int, int] = {}
        current = {(start, met[start])}
        for level in range(limit + 1):
            for v, mask in current:
                if mask == full and v not in found:
                    found[v] = level
            if len(found) == n:
                break
            nxt = set()
            for v, mask in current:
                row = rows[v]
                while row:
                    low = row & -row
                    w = low.bit_length() - 1
                    row ^= low
                    nxt.add((w, mask | met[w]))
            current = nxt
        assert len(found) == n
        result.append(tuple(found[v] for v in range(n)))
    return tuple(result)


def complete_with_loops(n: int) -> Digraph:
    return from_matrix(all_ones(n))


# -- exponent --------------------------------------------------------------

def test_exponent_anchors():
    assert exponent(d1(5)).value == 17
    assert exponent(d2(5)).value == 16
    assert exponent(complete_with_loops(3)).value == 1


def test_exponent_rejects_nonprimitive():
    with pytest.raises(NotPrimitiveError):
        exponent(standard_cycle(6))


def test_certificate_is_least_failing_pair():
    result = exponent(d1(4))
    assert result.certificate_length == result.value - 1
    a = to_matrix(d1(4))
    prev = power(a, result.value - 1)
    u, v = result.certificate_pair
    assert prev.entry(u, v) == 0
    for i in range(1, 5):
        for j in range(1, 5):
            if (i, j) < (u, v):
                assert prev.entry(i, j) == 1
            else:
                return


def test_exponent_equals_all_pairs_walk_oracle_on_random_instances():
    rng = random.Random(101)
    for _ in range(60):
        n = rng.randint(2, 8)
        d = random_primitive_digraph(rng, n, rng.choice([0.05, 0.1, 0.2]))
        assert exponent(d).value == exponent_by_all_pairs_walks(d)


def test_exponent_brackets_the_all_positive_transition():
    rng = random.Random(211)
    for _ in range(30):
        d = random_primitive_digraph(rng, rng.randint(2, 7), 0.15)
        a = to_matrix(d)
        value = exponent(d).value
        assert is_all_positive(power(a, value))
        if value >= 2:
            assert not is_all_positive(power(a, value - 1))


def test_exponent_is_relabeling_invariant():
    rng = random.Random(103)
    for _ in range(30):
        d = random_primitive_digraph(rng, rng.randint(3, 7), 0.15)
        perm = list(range(1, d.order + 1))
        rng.shuffle(perm)
        assert exponent(relabel(d, tuple(perm))).value == exponent(d).value


def test_spanning_subgraph_monotonicity():
    rng = random.Random(107)
    checked = 0
    while checked < 40:
        d = random_primitive_digraph(rng, rng.randint(3, 7), 0.1)
        n = d.order
        extra = {
            (rng.randint(1, n), rng.randint(1, n))
            for _ in range(rng.randint(1, 4))
        }
        g = Digraph(n, d.arcs | frozenset(extra))
        assert exponent(g).value <= exponent(d).value
        checked += 1


# -- walk existence ------------------------------------------------------------

def test_walks_on_pure_cycle_fixed_length_classes():
    c = standard_cycle(10)
    assert walk_exists(c, 10, 4, 6)
    assert not walk_exists(c, 10, 4, 7)
    assert walk_exists(c, 10, 4, 16)


def test_no_walk_at_one_below_the_chord_family_exponent():
    d = d_gN(10, 3, {1})
    assert not walk_exists(d, 10, 4, formula_thm33(10, 3, 1) - 1)
    assert walk_exists(d, 10, 4, formula_thm33(10, 3, 1))


def test_walk_argument_validation():
    with pytest.raises(ValueError):
        walk_exists(standard_cycle(4), 5, 1, 2)
    with pytest.raises(ValueError):
        walk_exists(standard_cycle(4), 1, 1, -1)


# -- cycle-meeting walks ----------------------------------------------------------

def test_full_coverage_reduces_to_plain_distances():
    d = complete_with_loops(4)
    result = c_walk_distances(d)
    for i in range(1, 5):
        for j in range(1, 5):
            assert result.pair(i, j) == distance(d, i, j)
        assert result.pair(i, i) == 0


def test_chord_family_attains_claimed_maximum():
    result = c_walk_distances(q1(10, 3))
    assert result.pair(10, 4) == 16
    assert result.max == 16
    assert result.arg_max == (10, 4)


def test_per_pair_dominates_distance():
    rng = random.Random(109)
    for _ in range(40):
        d = random_primitive_digraph(rng, rng.randint(2, 7), 0.15)
        result = c_walk_distances(d)
        for i in range(1, d.order + 1):
            for j in range(1, d.order + 1):
                assert result.pair(i, j) >= distance(d, i, j)


def test_cwalk_matches_length_dp_oracle():
    rng = random.Random(113)
    for _ in range(80):
        d = random_primitive_digraph(rng, rng.randint(2, 8), rng.choice([0.1, 0.2]))
        assert c_walk_distances(d).per_pair == cwalk_by_length_dp(d)


def test_cwalk_rejects_nonprimitive_and_truncated():
    with pytest.raises(NotPrimitiveError):
        c_walk_distances(standard_cycle(5))
    d = d2(7)
    _, truncated = simple_cycles(d, cap=2)
    with pytest.raises(TruncatedProfileError):
        c_walk_distances(d, profile=truncated)


def test_cwalk_rejects_too_many_lengths():
    d = complete_with_loops(4)
    _, profile = simple_cycles(d)
    fake = type(profile)(
        lengths=tuple(range(1, 26)),
        per_vertex=(frozenset(range(1, 26)),) * 4,
        cap_hit=False,
    )
    with pytest.raises(TooManyCycleLengthsError):
        c_walk_distances(d, profile=fake)


# -- bound evaluators ----------------------------------------------------------------

def test_lemma22_bound_on_chord_family():
    assert lemma22_bound(q1(10, 3)) == 34
    assert exponent(q1(10, 3)).value == 34


def test_lemma22_with_a_loop_equals_cwalk_max():
    d = digraph(3, [(1, 2), (2, 3), (3, 1), (1, 1)])
    assert lemma22_bound(d) == c_walk_distances(d).max


def test_lemma22_holds_on_random_instances():
    rng = random.Random(127)
    for _ in range(150):
        d = random_primitive_digraph(rng, rng.randint(2, 8), rng.choice([0.05, 0.1, 0.2]))
        assert exponent(d).value <= lemma22_bound(d)


def test_lemma23_values_and_random_instances():
    assert lemma23_bound(10, 3) == 34
    for n in range(3, 12):
        assert lemma23_bound(n, n - 1) == (n - 1) ** 2 + 1
    rng = random.Random(131)
    for _ in range(150):
        d = random_primitive_digraph(rng, rng.randint(2, 8), 0.15)
        _, profile = simple_cycles(d)
        assert exponent(d).value <= lemma23_bound(d.order, profile.lengths[0])


def test_lemma23_range_check():
    with pytest.raises(ValueError):
        lemma23_bound(5, 5)


def test_lemma25_values():
    assert lemma25_bound(10) == 42
    assert lemma25_bound(4) == 6
    with pytest.raises(ValueError):
        lemma25_bound(1)


def test_lemma26_values():
    assert lemma26_bound(10, 3, 10) == 34 == lemma23_bound(10, 3)
    assert lemma26_bound(4, 3, 4) == 10 == exponent(d1(4)).value
    with pytest.raises(ValueError):
        lemma26_bound(4, 3, 2)


def test_lemma26_on_two_length_chord_instances():
    for n, g in ((7, 3), (8, 3), (9, 4), (10, 7)):
        d = q1(n, g)
        _, profile = simple_cycles(d)
        assert profile.lengths == (g, n)
        assert exponent(d).value <= lemma26_bound(n, g, n)


def test_lemma32_values_and_window():
    assert lemma32_bound(10, 3) == 32
    assert lemma32_bound(10, 7) == 60
    with pytest.raises(ValueError):
        lemma32_bound(5, 2)
    with pytest.raises(ValueError):
        lemma32_bound(10, 9)


def test_lemma34_values():
    assert lemma34_bound(10, 3) == 31
    assert lemma34_bound(7, 3) == 19
    with pytest.raises(ValueError):
        lemma34_bound(5, 3)
    with pytest.raises(ValueError):
        lemma34_bound(6, 3)


def test_formula_thm33_values():
    assert formula_thm33(10, 3, 1) == 34
    assert formula_thm33(10, 3, 2) == 33
    for n in range(4, 10):
        assert formula_thm33(n, n - 1, 2) == (n - 1) ** 2
    with pytest.raises(ValueError):
        formula_thm33(10, 5, 1)  # gcd violation
    with pytest.raises(ValueError):
        formula_thm33(10, 3, 4)  # above the position cap


def test_thm36_window_and_index():
    assert thm36_range(10, 3) == (32, 34)
    assert thm36_range(10, 7) == (60, 66)
    assert z_of_w(10, 3, 34) == 1
    assert z_of_w(10, 3, 33) == 2
    with pytest.raises(ValueError):
        z_of_w(10, 3, 32)
    with pytest.raises(ValueError):
        z_of_w(10, 3, 35)


def test_z_at_the_top_of_the_window_is_one():
    for n, g in ((10, 3), (10, 7), (11, 4), (12, 5)):
        assert z_of_w(n, g, lemma23_bound(n, g)) == 1
