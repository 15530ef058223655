"""Acceptance criteria, one test each; every test prints a single pass/fail line."""

import time
from itertools import combinations
from math import comb, prod

import pytest

from extspringer.character_theory import (
    coinvariant_graded_multiplicity, conjugacy_classes, exterior_character, sign_character,
    solomon_check, trivial_character, two_power_check,
)
from extspringer.invariant_theory import DEGREE_OBSTRUCTION, fundamental_degrees, invariant_space, search_condition1
from extspringer.nilpotent_orbits import jordan_type_of, levi_decompositions, parabolic_catalogue, realize
from extspringer.root_data import weyl_group
from extspringer.type_a_springer import fake_degree_crosscheck, hook_identity_check, partitions
from extspringer.verifier import run_decomposition

PIPELINE = ("condition1", "condition2", "delta")

SOLOMON_GROUPS = ([("A", l) for l in range(1, 6)] + [("B", l) for l in range(2, 5)]
                  + [("C", l) for l in range(2, 5)] + [("D", l) for l in range(3, 6)])
TWO_POWER_GROUPS = ([("A", l) for l in range(1, 6)] + [("B", l) for l in range(2, 6)]
                    + [("C", l) for l in range(2, 6)] + [("D", l) for l in range(3, 6)])


@pytest.fixture
def report(capsys):
    def emit(n, ok, detail):
        with capsys.disabled():
            print(f"\n[criterion {n}] {'PASS' if ok else 'FAIL'}: {detail}")
    return emit


def _pipeline_failures(decomps):
    bad = []
    for d in decomps:
        rep = run_decomposition(d, PIPELINE)
        c1, c2, de = (rep.checks[k] for k in PIPELINE)
        ok = (c1["verdict"] == "pass" and c1["source"] == "standard"
              and c2["verdict"] == "pass" and de["verdict"] == "pass" and de["c"] != 0)
        if not ok:
            bad.append((d.family, d.rank, d.jordan_type, {k: v["verdict"] for k, v in rep.checks.items()}))
    return bad


def test_criterion_1_solomon_product_formula(report):
    t0 = time.perf_counter()
    failed = [g for g in SOLOMON_GROUPS if solomon_check(weyl_group(*g)).verdict != "pass"]
    elapsed = time.perf_counter() - t0
    ok = not failed and elapsed < 300
    report(1, ok, f"Molien table = prod(1 + t q^m_k) for {len(SOLOMON_GROUPS)} groups "
                  f"A1-A5, B2-B4, C2-C4, D3-D5 in {elapsed:.1f}s; failures {failed}")
    assert ok


def test_criterion_2_type_A_pipeline(report):
    t0 = time.perf_counter()
    decomps = [d for n in range(2, 8) for lam in partitions(n)
               for d in levi_decompositions("A", lam, n - 1)]
    bad = _pipeline_failures(decomps)
    elapsed = time.perf_counter() - t0
    ok = not bad and elapsed < 300 and len(decomps) == sum(len(list(partitions(n))) for n in range(2, 8))
    report(2, ok, f"{len(decomps)} partitions of n = 2..7: conditions (1), (2) and "
                  f"Delta = c pi_K, c != 0, in {elapsed:.1f}s; failures {bad}")
    assert ok


def test_criterion_3_types_B_C_pipeline(report):
    t0 = time.perf_counter()
    decomps = [d for f in "BC" for l in range(2, 5) for d in parabolic_catalogue(f, l)]
    bad = _pipeline_failures(decomps)
    elapsed = time.perf_counter() - t0
    ok = not bad and elapsed < 600
    report(3, ok, f"{len(decomps)} (lambda, m) decompositions in B2-B4, C2-C4 in {elapsed:.1f}s; "
                  f"failures {bad}")
    assert ok


def test_criterion_4_hook_identity(report):
    t0 = time.perf_counter()
    lams = [lam for n in range(1, 9) for lam in partitions(n)]
    bad = [lam for lam in lams if hook_identity_check(lam).verdict != "pass"]
    elapsed = time.perf_counter() - t0
    ok = not bad and elapsed < 300
    report(4, ok, f"K~_(n-i,1^i),lam = e_i(q..q^s) for all {len(lams)} partitions of n <= 8 "
                  f"in {elapsed:.1f}s; failures {bad}")
    assert ok


def test_criterion_5_D4_obstruction(report):
    W = weyl_group("D", 4)
    (d,) = levi_decompositions("D", (3, 3, 1, 1), 4)
    rep = search_condition1(W, d.K, d.coexponents)
    dim3 = len(invariant_space(W, 3))
    ok = rep.verdict == DEGREE_OBSTRUCTION and rep.obstruction_degree == 3 and dim3 == 0
    report(5, ok, f"D4 (3,3,1,1): search verdict {rep.verdict} at degree {rep.obstruction_degree}, "
                  f"dim of degree-3 invariants {dim3}")
    assert ok


def test_criterion_6_two_power(report):
    t0 = time.perf_counter()
    bad, count = [], 0
    for g in TWO_POWER_GROUPS:
        W = weyl_group(*g)
        for k in range(W.rank + 1):
            for J in combinations(range(1, W.rank + 1), k):
                count += 1
                rep = two_power_check(W, J)
                s = W.rank - k
                if rep.total != 2**s or rep.per_i[: s + 1] != tuple(comb(s, i) for i in range(s + 1)) \
                        or any(rep.per_i[s + 1:]):
                    bad.append((g, J))
    elapsed = time.perf_counter() - t0
    ok = not bad
    report(6, ok, f"sum_i <Ind 1 x Lambda^i V, 1> = 2^s with binomial parts for {count} subsets J "
                  f"across A1-A5, B2-B5, C2-C5, D3-D5 in {elapsed:.1f}s; failures {bad}")
    assert ok


def test_criterion_7_crosscheck(report):
    bad = [n for n in range(2, 7) if fake_degree_crosscheck(n).verdict != "pass"]
    ok = not bad
    report(7, ok, f"tableau and Molien fake degrees agree on all hooks for n = 2..6; failures {bad}")
    assert ok


def test_criterion_8_structural(report):
    problems = []
    groups = sorted(set(SOLOMON_GROUPS + TWO_POWER_GROUPS + [("A", l) for l in range(1, 8)]))
    for g in groups:
        W = weyl_group(*g)
        d = fundamental_degrees(W).degrees
        if prod(d) != W.order or sum(x - 1 for x in d) != len(W.root_system.positive_roots):
            problems.append(("degrees", g))
    molien = 0
    for g in SOLOMON_GROUPS:
        W = weyl_group(*g)
        chars = [trivial_character(W), sign_character(W)] + [exterior_character(W, i) for i in range(W.rank + 1)]
        for chi in chars:
            try:
                p = coinvariant_graded_multiplicity(W, chi)
            except ArithmeticError as exc:
                problems.append(("molien", g, str(exc)))
                continue
            molien += 1
            if any(not isinstance(c, int) or c < 0 for c in p.terms.values()):
                problems.append(("molien", g))
    realized = 0
    for f in "ABC":
        for l in range(1, 7 if f == "A" else 5):
            for dec in parabolic_catalogue(f, l):
                realized += 1
                if jordan_type_of(realize(dec).e) != dec.jordan_type:
                    problems.append(("jordan", f, l, dec.jordan_type))
    ok = not problems
    report(8, ok, f"degree identities on {len(groups)} groups, {molien} Molien series polynomial "
                  f"with nonnegative integer coefficients, {realized} realizations round-trip; "
                  f"problems {problems}")
    assert ok
