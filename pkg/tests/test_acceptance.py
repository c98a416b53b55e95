"""Acceptance gate: one test per criterion, each printing a PASS/FAIL line.

Run with:  pytest tests/test_acceptance.py -v -s

Criteria are zero-tolerance unless a numeric window is stated inline.
Failures are collected and reported together so the verdict line always
prints.
"""

import itertools
import math
import random
import time

from _support import divisor_count, groups_up_to
from autorbit import bench
from autorbit.equivalence import are_automorphic, quotient_key
from autorbit.groups import element_order, make_group
from autorbit.oracle import (
    aut_order_homocyclic,
    brute_orbits,
    brute_quotient_keys,
    enumerate_automorphisms,
)
from autorbit.orbits import enumerate_orbits, reduced_form

ORACLE_CAP = 10**7

# one line per criterion; echoed into the terminal summary by conftest so the
# verdicts survive output capture
VERDICTS: list[str] = []


def _verdict(criterion: str, failures: list, extra: str = ""):
    status = "PASS" if not failures else "FAIL"
    suffix = f" ({extra})" if extra else ""
    line = f"[acceptance] {criterion}: {status}{suffix}"
    VERDICTS.append(line)
    print(line)
    assert not failures, f"{criterion}: {len(failures)} failures, first: {failures[:3]}"


def _eligible_for_oracle(max_order):
    for G in groups_up_to(max_order):
        if G.order**G.rank <= ORACLE_CAP:
            yield G


def test_criterion_1_worked_example_exact():
    failures = []
    G = make_group([2, 4, 8, 8])
    x = G.element([2, 1, 2, 4])
    timings = {}
    for method in ("fast", "snf"):
        quotient_key(G, x, method)  # warm caches
        best = min(
            _timed(lambda: quotient_key(G, x, method)) for _ in range(5)
        )
        timings[method] = best
        key = quotient_key(G, x, method)
        if key.primary_parts != {2: (3, 3, 1)}:
            failures.append((method, key))
        if key.describe_invariant() != "C2 x C8 x C8":
            failures.append((method, key.describe_invariant()))
        if best >= 1e-3:
            failures.append((method, f"{best * 1e3:.3f} ms"))
    _verdict(
        "criterion 1 (worked example, both methods, < 1 ms)",
        failures,
        f"fast {timings['fast']*1e6:.0f} us, snf {timings['snf']*1e6:.0f} us",
    )


def _timed(fn):
    t0 = time.perf_counter()
    fn()
    return time.perf_counter() - t0


def test_criterion_2_oracle_equivalence_up_to_64():
    failures = []
    groups = pairs = 0
    rng = random.Random(20260808)
    for G in _eligible_for_oracle(64):
        groups += 1
        orbit_id = {}
        for i, orbit in enumerate(brute_orbits(G, cap=ORACLE_CAP)):
            for e in orbit:
                orbit_id[e.coords] = i
        elems = list(G.elements())
        keys = {x.coords: quotient_key(G, x) for x in elems}
        for x, y in itertools.combinations_with_replacement(elems, 2):
            pairs += 1
            decided = keys[x.coords] == keys[y.coords]
            truth = orbit_id[x.coords] == orbit_id[y.coords]
            if decided != truth:
                failures.append((tuple(G.moduli), x.coords, y.coords))
        # exercise the public decision surface on sampled pairs
        for _ in range(min(100, len(elems) ** 2)):
            x = rng.choice(elems)
            y = rng.choice(elems)
            if are_automorphic(G, x, y) != (orbit_id[x.coords] == orbit_id[y.coords]):
                failures.append(("api", tuple(G.moduli), x.coords, y.coords))
    _verdict(
        "criterion 2 (decision == exhaustive Aut search, |G| <= 64)",
        failures,
        f"{groups} groups, {pairs} pairs",
    )


def test_criterion_3_tri_method_agreement():
    failures = []
    elements = 0
    for G in groups_up_to(256):
        brute = brute_quotient_keys(G)
        for x in G.elements():
            elements += 1
            fast = quotient_key(G, x, "fast")
            snf = quotient_key(G, x, "snf")
            oracle_key = brute[x.coords]
            if not (fast == snf == oracle_key):
                failures.append((tuple(G.moduli), x.coords, fast, snf, oracle_key))
            if fast.order() != G.order // element_order(x):
                failures.append(("order", tuple(G.moduli), x.coords))
    # larger random instances: fast vs snf only
    rng = random.Random(20260808)
    randoms = 0
    while randoms < 10_000:
        rank = rng.randint(1, 5)
        moduli = [rng.randint(2, 400) for _ in range(rank)]
        if math.prod(moduli) > 10**9:
            continue
        randoms += 1
        G = make_group(moduli)
        x = G.element([rng.randrange(d) for d in moduli])
        if quotient_key(G, x, "fast") != quotient_key(G, x, "snf"):
            failures.append(("random", tuple(moduli), x.coords))
    _verdict(
        "criterion 3 (fast == snf == brute oracle)",
        failures,
        f"{elements} exhaustive elements + {randoms} random instances",
    )


def test_criterion_4_orbit_correctness():
    failures = []
    # (a) partition matches the exhaustive automorphism action
    matched = 0
    for G in _eligible_for_oracle(64):
        matched += 1
        summaries = enumerate_orbits(G)
        lookup = {}
        for i, s in enumerate(summaries):
            for rf in s.representatives:
                lookup[rf] = i
        ours: dict[int, set] = {}
        for x in G.elements():
            ours.setdefault(lookup[reduced_form(G, x)], set()).add(x.coords)
        brute = {frozenset(e.coords for e in o) for o in brute_orbits(G, cap=ORACLE_CAP)}
        mine = {frozenset(v) for v in ours.values()}
        if mine != brute:
            failures.append(("partition", tuple(G.moduli)))
        if len(summaries) != len(brute):
            failures.append(("count", tuple(G.moduli)))
        for i, s in enumerate(summaries):
            if len(ours.get(i, ())) != s.size:
                failures.append(("size", tuple(G.moduli), i))
    # (b) sizes sum to |G| for every group of order <= 10^4
    summed = 0
    for G in groups_up_to(10_000):
        summed += 1
        if sum(o.size for o in enumerate_orbits(G)) != G.order:
            failures.append(("sum", tuple(G.moduli)))
    # (c) cyclic groups have tau(n) orbits
    for n in range(1, 1001):
        if len(enumerate_orbits(make_group([n]))) != divisor_count(n):
            failures.append(("tau", n))
    _verdict(
        "criterion 4 (orbits: brute match <= 64, sizes <= 10^4, tau <= 1000)",
        failures,
        f"{matched} brute-matched groups, {summed} summed groups",
    )


def test_criterion_5_maximal_order_elements_equivalent():
    failures = []
    groups = 0
    for G in groups_up_to(256):
        groups += 1
        exp = G.exponent
        witnesses = [x for x in G.elements() if element_order(x) == exp]
        keys = {quotient_key(G, x) for x in witnesses}
        if len(keys) != 1:
            failures.append((tuple(G.moduli), len(keys)))
            continue
        first = witnesses[0]
        for other in witnesses[:: max(1, len(witnesses) // 8)]:
            if not are_automorphic(G, first, other):
                failures.append((tuple(G.moduli), first.coords, other.coords))
    _verdict(
        "criterion 5 (maximal-order elements share one orbit, |G| <= 256)",
        failures,
        f"{groups} groups",
    )


def test_criterion_6_aut_order_formula_and_bound():
    failures = []
    cases = {(2, 1, 2): 6, (2, 2, 2): 96, (3, 1, 2): 48, (2, 1, 3): 168}
    for (p, m, n), expected in cases.items():
        closed = aut_order_homocyclic(p, m, n)
        enumerated = len(enumerate_automorphisms(make_group([p**m] * n)))
        if closed != expected or enumerated != expected:
            failures.append(((p, m, n), closed, enumerated, expected))
    checked = 0
    for G in _eligible_for_oracle(64):
        if len(G.primes()) != 1 or G.rank == 0:
            continue
        checked += 1
        p = G.primes()[0]
        if len(enumerate_automorphisms(G, cap=ORACLE_CAP)) < (p / 2) ** G.rank:
            failures.append(("bound", tuple(G.moduli)))
    _verdict(
        "criterion 6 (|Aut| closed form + (p/2)^rank lower bound)",
        failures,
        f"4 closed-form cases, {checked} p-groups",
    )


def test_criterion_7_scaling_exponent_window():
    ranks = [4, 8, 16, 32, 64, 128, 256, 512]
    t0 = time.perf_counter()
    rows = bench.run_scaling(ranks, methods=("fast",), trials=3)
    elapsed = time.perf_counter() - t0
    fit = bench.fit_power_law(bench.method_points(rows, "fast"))
    failures = []
    if not (1.0 <= fit.exponent <= 1.6):
        failures.append(("exponent", round(fit.exponent, 4)))
    if elapsed > 600:
        failures.append(("bench seconds", round(elapsed, 1)))
    _verdict(
        "criterion 7 (fast-path log-log exponent in [1.0, 1.6])",
        failures,
        f"measured exponent {fit.exponent:.4f}, r2 {fit.r_squared:.4f}, "
        f"bench {elapsed:.1f}s",
    )


def test_criterion_8_model_crossover_window():
    failures = []
    crossover = bench.model_crossover()
    if not (300 <= crossover <= 500):
        failures.append(("crossover", crossover))
    fast_below, snf_below = bench.model_operation_counts(crossover - 1)
    if fast_below <= snf_below:
        failures.append(("matrix path should win below crossover", crossover - 1))
    fast_at, snf_at = bench.model_operation_counts(crossover)
    if fast_at > snf_at:
        failures.append(("sweep path should win at crossover", crossover))
    _verdict(
        "criterion 8 (model curves cross in rank [300, 500])",
        failures,
        f"crossover at rank {crossover}",
    )
