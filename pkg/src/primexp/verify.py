"""Claim-by-claim verification against independent oracles.

Established upper bounds are hard assertions (any violation is an
implementation bug); the exact-formula and window-characterization claims
are report-only: every instance is compared against the oracle and the
agreement pattern is itself the deliverable.  All randomness is seeded and
all row streams are sorted, so identical parameters reproduce identical
reports byte for byte.
"""

from __future__ import annotations

import hashlib
import math
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .boolmat import BoolMatrix, serialize_matrix
from .digraph import (
    Digraph,
    from_matrix,
    rows_girth,
    rows_primitive,
    simple_cycles,
)
from .exponent import (
    TooManyCycleLengthsError,
    TruncatedProfileError,
    c_walk_distances,
    exponent,
    exponent_of_rows,
    formula_thm33,
    lemma23_bound,
    lemma25_bound,
    lemma26_bound,
    lemma32_bound,
    lemma34_bound,
    thm36_range,
    z_of_w,
)
from .families import (
    chord_family,
    chord_position_cap,
    d1,
    d2,
    enumerate_DgN,
    enumerate_Dr,
    h_graph,
    q1,
    q2,
)
from .iso import automorphism_count, canonical_form, classify_against, find_isomorphism
from .report import CensusRow, Report, make_row
from .semigroup import frobenius

BERNOULLI_SWEEP = (0.05, 0.1, 0.2)
DEFAULT_CHORD_PAIRS = ((10, 3), (10, 7), (10, 9), (11, 3))


# -- random instance generation --------------------------------------------

def random_primitive_digraph(rng: random.Random, n: int, p: float, max_tries: int = 100_000) -> Digraph:
    """Random Hamiltonian cycle plus Bernoulli(p) arcs, retained if primitive."""
    for _ in range(max_tries):
        perm = list(range(1, n + 1))
        rng.shuffle(perm)
        arcs = {(perm[i], perm[(i + 1) % n]) for i in range(n)}
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                if (i, j) not in arcs and rng.random() < p:
                    arcs.add((i, j))
        d = Digraph(n, frozenset(arcs))
        if rows_primitive(d.successor_rows(), n):
            return d
    raise RuntimeError(f"no primitive digraph found in {max_tries} tries (n={n}, p={p})")


def random_instances(seed: int, samples: int, n_max: int):
    """Deterministic stream of (index, n, p, digraph) primitive instances."""
    if n_max > 10:
        raise ValueError(f"random sampling is capped at order 10, got n_max={n_max}")
    rng = random.Random(seed)
    for idx in range(samples):
        p = BERNOULLI_SWEEP[idx % len(BERNOULLI_SWEEP)]
        n = rng.randint(2, n_max)
        yield idx, n, p, random_primitive_digraph(rng, n, p)


def matrix_digest(d: Digraph) -> str:
    text = serialize_matrix(BoolMatrix(d.order, d.successor_rows()))
    return hashlib.sha256(text.encode()).hexdigest()[:12]


# -- bound suite -------------------------------------------------------------

def bound_rows_for(d: Digraph, instance: str, report: Report, **params) -> None:
    """Append one row per applicable established bound for one primitive digraph.

    The instance must be primitive.  A truncated cycle profile excludes the
    cycle-set-dependent checks (logged as a skip row, not fatal).
    """
    n = d.order
    _, profile = simple_cycles(d)
    exp = exponent(d).value
    if profile.cap_hit:
        report.add(make_row(
            "L2.2", instance, None, None, asserted=False,
            notes="skipped: cycle profile truncated at its cap", **params,
        ))
        return
    lengths = profile.lengths
    g = lengths[0]

    try:
        cw = c_walk_distances(d, profile=profile)
        bound22 = cw.max + frobenius(lengths)
        report.add(make_row(
            "L2.2", instance, bound22, exp, asserted=True, rule="le", **params,
        ))
    except (TruncatedProfileError, TooManyCycleLengthsError) as exc:
        report.add(make_row(
            "L2.2", instance, None, None, asserted=False,
            notes=f"skipped: {exc}", **params,
        ))

    report.add(make_row(
        "L2.3", instance, lemma23_bound(n, g), exp, asserted=True, rule="le", **params,
    ))
    if len(lengths) >= 3:
        report.add(make_row(
            "L2.5", instance, lemma25_bound(n), exp, asserted=True, rule="le", **params,
        ))
    if exp > lemma25_bound(n):
        report.add(make_row(
            "C2.1", instance, 2, len(lengths), asserted=True, **params,
        ))
    if len(lengths) == 2:
        q = lengths[1]
        report.add(make_row(
            "L2.6", instance, lemma26_bound(n, g, q), exp, asserted=True, rule="le", **params,
        ))
        if n >= 6 and q <= n - 1:
            report.add(make_row(
                "L3.2", instance, lemma32_bound(n, g), exp, asserted=True, rule="le", **params,
            ))


def verify_bounds(
    n_max: int = 8,
    samples: int = 1000,
    seed: int = 0,
    chord_pairs=DEFAULT_CHORD_PAIRS,
) -> Report:
    """Bound suite over exhaustive chord families plus a seeded random sweep."""
    report = Report()
    for n, g in chord_pairs:
        for spec in chord_family(n, g):
            d = spec.build()
            if not rows_primitive(d.successor_rows(), n):
                continue
            bound_rows_for(d, spec.label(), report, n=n, g=g, mask=spec.chord_mask)
    for idx, n, p, d in random_instances(seed, samples, n_max):
        instance = f"rand:{idx:06d}:{matrix_digest(d)}"
        bound_rows_for(d, instance, report, n=n, p=p, seed=seed)
    return report


# -- exhaustive extremal-class check ----------------------------------------

def _decode_rows(code: int, n: int) -> tuple[int, ...]:
    mask = (1 << n) - 1
    return tuple((code >> (i * n)) & mask for i in range(n))


def _extremal_scan_block(args: tuple[int, int, int, tuple[int, ...]]):
    """Scan matrix codes [start, end): exponent histogram + target matches."""
    n, start, end, targets = args
    full = (1 << n) - 1
    counts: dict[int, int] = {}
    hits: dict[int, list[int]] = {t: [] for t in targets}
    for code in range(start, end):
        rows = _decode_rows(code, n)
        union = 0
        ok = True
        for row in rows:
            if row == 0:
                ok = False
                break
            union |= row
        if not ok or union != full:
            continue
        if not rows_primitive(rows, n):
            continue
        exp = exponent_of_rows(rows, n)
        counts[exp] = counts.get(exp, 0) + 1
        if exp in hits:
            hits[exp].append(code)
    return counts, hits


def _run_blocks(worker, argses, jobs: int):
    if jobs <= 1 or len(argses) <= 1:
        return [worker(a) for a in argses]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(worker, argses))


def _block_ranges(total: int, blocks: int) -> list[tuple[int, int]]:
    if total <= 0:
        return []
    size = (total + blocks - 1) // blocks
    return [(lo, min(lo + size, total)) for lo in range(0, total, size)]


def verify_lemma24(n: int = 4, jobs: int = 1) -> Report:
    """Exhaustive check that the two highest exponent classes are exactly the
    isomorphism classes of d1(n) and d2(n), over all 2^(n^2) matrices."""
    if n not in (4, 5):
        raise ValueError(f"supported orders are 4 (full) and 5 (long mode), got {n}")
    t1 = (n - 1) ** 2 + 1
    t2 = (n - 1) ** 2
    total = 1 << (n * n)
    blocks = max(jobs * 4, 1)
    argses = [(n, lo, hi, (t1, t2)) for lo, hi in _block_ranges(total, blocks)]
    results = _run_blocks(_extremal_scan_block, argses, jobs)

    counts: dict[int, int] = {}
    hits: dict[int, list[int]] = {t1: [], t2: []}
    for block_counts, block_hits in results:
        for k, v in block_counts.items():
            counts[k] = counts.get(k, 0) + v
        for t, codes in block_hits.items():
            hits[t].extend(codes)

    report = Report()
    for target, reference in ((t1, d1(n)), (t2, d2(n))):
        offenders = 0
        for code in hits[target]:
            d = from_matrix(BoolMatrix(n, _decode_rows(code, n)))
            if find_isomorphism(d, reference) is None:
                offenders += 1
        orbit = math.factorial(n) // automorphism_count(reference)
        report.add(make_row(
            "L2.4", f"n={n}:exp={target}:membership", 0, offenders,
            asserted=True, n=n, target=target,
            notes="count of matrices at this exponent not isomorphic to the reference",
        ))
        report.add(make_row(
            "L2.4", f"n={n}:exp={target}:class-size", orbit, len(hits[target]),
            asserted=True, n=n, target=target,
            notes="labeled matrices at this exponent vs n!/|Aut| of the reference",
        ))
    report.add(make_row(
        "L2.4", f"n={n}:max-exponent", t1, max(counts), asserted=True, n=n,
        notes="largest exponent over the census equals the order-n maximum",
    ))
    return report


# -- chord-family exact formula ----------------------------------------------

def _attainment_note(n: int, g: int, r: int, d: Digraph, profile) -> str:
    if r < n - g + 1:
        claimed_pair = (n, g + r)
        claimed = 2 * n - g - r
    else:
        claimed_pair = (n, 1)
        claimed = n - 1
    cw = c_walk_distances(d, profile=profile)
    mark = "match" if (cw.max == claimed and cw.arg_max == claimed_pair) else "differ"
    return (
        f"claimed dC={claimed}@{claimed_pair}; "
        f"computed dC={cw.max}@{cw.arg_max} [{mark}]"
    )


def verify_thm33(n_min: int = 5, n_max: int = 12) -> Report:
    """Exact-formula report over every chord set; asserted for N={1} and N={1,2}.

    Also records the claimed cycle-meeting-diameter attaining pair against
    the computed one, and summarizes the agreement pattern split by whether
    N contains position 1 and whether it is a prefix 1..r.
    """
    report = Report()
    stats = {"prefix": [0, 0], "has-1": [0, 0], "no-1": [0, 0]}
    for n in range(n_min, n_max + 1):
        for g in range(2, n):
            if math.gcd(n, g) != 1:
                continue
            for spec in enumerate_DgN(n, g):
                d = spec.build()
                r = spec.r
                predicted = formula_thm33(n, g, r)
                oracle = exponent(d).value
                _, profile = simple_cycles(d)
                anchored = spec.N in ((1,), (1, 2))
                notes = _attainment_note(n, g, r, d, profile)
                row = make_row(
                    "T3.3", spec.label(), predicted, oracle,
                    asserted=anchored, notes=notes,
                    n=n, g=g, N=list(spec.N), r=r,
                )
                report.add(row)
                if spec.N == tuple(range(1, r + 1)):
                    stats["prefix"][0] += row.agree
                    stats["prefix"][1] += 1
                key = "has-1" if 1 in spec.N else "no-1"
                stats[key][0] += row.agree
                stats[key][1] += 1
    report.add(make_row(
        "T3.3", "summary:agreement-pattern", None, None, asserted=False,
        notes=(
            f"chord sets containing position 1 agree {stats['has-1'][0]}/{stats['has-1'][1]}; "
            f"sets without position 1 agree {stats['no-1'][0]}/{stats['no-1'][1]}; "
            f"prefix sets 1..r agree {stats['prefix'][0]}/{stats['prefix'][1]} "
            "(cyclic rotation maps a chord set onto its translate, so isomorphic "
            "instances share an exponent while max(N) shifts; a max-position "
            "formula can therefore only track sets anchored at position 1)"
        ),
    ))
    return report


# -- two-disjoint-cycle bound --------------------------------------------------

def valid_h_triples(n_max: int):
    for n in range(2, n_max + 1):
        for g in range(1, n // 2 + 1):
            if math.gcd(n, g) != 1:
                continue
            for k in range(g + 1, n - g + 2):
                yield n, g, k


def verify_lemma34(n_max: int = 12) -> Report:
    """Assert the (n-1)g + n - 2g bound on every valid two-cycle construction."""
    report = Report()
    for n, g, k in valid_h_triples(n_max):
        d = h_graph(n, g, k)
        bound = lemma34_bound(n, g)
        oracle = exponent(d).value
        report.add(make_row(
            "L3.4", f"h:n={n},g={g},k={k}", bound, oracle,
            asserted=True, rule="le", n=n, g=g, k=k,
            notes="tight" if oracle == bound else "",
        ))
    return report


# -- characterization window -----------------------------------------------

def printed_threshold_min_g(n: int) -> int:
    """Smallest integer girth above the printed threshold (n^2-4n)/(4(n-3))."""
    if n <= 3:
        raise ValueError(f"threshold undefined for n <= 3, got {n}")
    return (n * n - 4 * n) // (4 * (n - 3)) + 1


def proof_threshold_min_g(n: int) -> int:
    """Smallest girth with 2n-1 + (g-1)(n-3) > floor((n-2)^2/2) + n."""
    g = 1
    while not 2 * n - 1 + (g - 1) * (n - 3) > lemma25_bound(n):
        g += 1
    return g


def verify_thm36(n: int, g: int) -> Report:
    """Window characterization over the full rotational chord universe.

    Phase a (forward): oracle exponents of every admissible-position chord
    set with maximum z, against the window value w(z).  Phase b (converse):
    every primitive girth-g chord member with exponent inside the window is
    classified against the corresponding max-z family.  Phase c: audit of
    the two competing girth thresholds.  Only the forced cycle-set condition
    is asserted; everything else is reported.
    """
    if math.gcd(n, g) != 1:
        raise ValueError(f"need gcd(n, g) = 1, got gcd({n}, {g})")
    report = Report()
    t = chord_position_cap(n, g)
    low, high = thm36_range(n, g)

    # Phase a: forward sweep over D^z, z = 1..t.
    for z in range(1, t + 1):
        w = (n - 2) * g + 1 + n - z
        for spec in enumerate_Dr(n, g, z):
            oracle = exponent(spec.build()).value
            report.add(make_row(
                "T3.6", f"forward:z={z}:{spec.label()}", w, oracle,
                asserted=False, n=n, g=g, N=list(spec.N), z=z,
            ))
    report.add(make_row(
        "C3.8", f"q1:n={n},g={g}", (n - 2) * g + n, exponent(q1(n, g)).value,
        asserted=True, n=n, g=g,
    ))
    if t >= 2:
        report.add(make_row(
            "C3.8", f"q2:n={n},g={g}", (n - 2) * g + n - 1, exponent(q2(n, g)).value,
            asserted=True, n=n, g=g,
        ))

    # Phase b: converse classification over the whole chord universe.
    reference_families: dict[int, list[Digraph]] = {}
    processed = 0
    eligible = 0
    in_window = 0
    for spec in chord_family(n, g):
        processed += 1
        d = spec.build()
        rows = d.successor_rows()
        if not rows_primitive(rows, n):
            continue
        if rows_girth(rows, n) != g:
            continue
        eligible += 1
        oracle = exponent(d).value
        mask = spec.chord_mask
        if oracle > low:
            _, profile = simple_cycles(d)
            report.add(make_row(
                "T3.6", f"cycleset:mask={mask:05d}", [g, n], list(profile.lengths),
                asserted=True, n=n, g=g, mask=mask,
                notes="cycle set forced to {girth, order} above the window floor",
            ))
        if low < oracle <= high:
            in_window += 1
            z = z_of_w(n, g, oracle)
            if z not in reference_families:
                reference_families[z] = [s.build() for s in enumerate_Dr(n, g, z)]
            match = classify_against(d, reference_families[z])
            report.add(make_row(
                "C3.7", f"converse:mask={mask:05d}",
                f"member-of-D^{z}", "none" if match is None else match,
                asserted=False, rule="member", n=n, g=g, mask=mask,
                notes=f"exponent {oracle} = w(z={z})",
            ))
    report.add(make_row(
        "T3.6", "summary:universe", None, None, asserted=False, n=n, g=g,
        notes=(
            f"processed {processed} chord subsets; {eligible} primitive with "
            f"girth {g}; {in_window} with exponent in ({low}, {high}]"
        ),
    ))

    # Phase c: girth-threshold audit.
    report.add(make_row(
        "T3.6", "audit:girth-threshold",
        printed_threshold_min_g(n), proof_threshold_min_g(n),
        asserted=False, n=n, g=g,
        notes=(
            "minimal girth admitted by the printed threshold vs by the "
            "slack inequality used in the argument; discrepancy recorded, not resolved"
        ),
    ))
    return report


# -- census -------------------------------------------------------------------

@dataclass(frozen=True)
class _ClassData:
    girth: int
    lengths: tuple[int, ...]
    exponent: int


def _census_block(args: tuple[int, int, int]):
    n, start, end = args
    full = (1 << n) - 1
    classes: dict[str, list] = {}
    for code in range(start, end):
        rows = _decode_rows(code, n)
        union = 0
        ok = True
        for row in rows:
            if row == 0:
                ok = False
                break
            union |= row
        if not ok or union != full:
            continue
        if not rows_primitive(rows, n):
            continue
        exp = exponent_of_rows(rows, n)
        d = from_matrix(BoolMatrix(n, rows))
        form = canonical_form(d).canonical_bits
        entry = classes.get(form)
        if entry is None:
            girth = rows_girth(rows, n)
            _, profile = simple_cycles(d)
            classes[form] = [_ClassData(girth, profile.lengths, exp), 1]
        else:
            if entry[0].exponent != exp:
                raise RuntimeError(f"canonical class {form} saw exponents {entry[0].exponent} and {exp}")
            entry[1] += 1
    return classes


def census(n: int, long_mode: bool = False, jobs: int = 1,
           start: int = 0, end: int | None = None) -> list[CensusRow]:
    """Exhaustive isomorphism-class table of primitive digraphs of order n.

    Index range [start, end) makes partial runs resumable; the full range is
    the default.  Order 5 is gated behind long_mode.
    """
    if n not in (2, 3, 4, 5):
        raise ValueError(f"census supports orders 2..5, got {n}")
    if n == 5 and not long_mode:
        raise ValueError("order 5 census requires long mode")
    total = 1 << (n * n)
    if end is None:
        end = total
    if not 0 <= start <= end <= total:
        raise ValueError(f"invalid index range [{start}, {end}) for total {total}")
    blocks = max(jobs * 4, 1)
    argses = [(n, start + lo, start + hi) for lo, hi in _block_ranges(end - start, blocks)]
    results = _run_blocks(_census_block, argses, jobs)

    merged: dict[str, list] = {}
    for classes in results:
        for form, (data, count) in classes.items():
            entry = merged.get(form)
            if entry is None:
                merged[form] = [data, count]
            else:
                if entry[0] != data:
                    raise RuntimeError(f"canonical class {form} disagrees across blocks")
                entry[1] += count
    rows = [
        CensusRow(
            order=n,
            canonical_bits=form,
            girth=data.girth,
            cycle_lengths=data.lengths,
            exponent=data.exponent,
            labeled_count=count,
        )
        for form, (data, count) in merged.items()
    ]
    return sorted(rows, key=lambda r: (r.order, r.canonical_bits))
