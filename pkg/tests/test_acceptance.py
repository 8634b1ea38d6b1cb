"""Acceptance criteria, one test per criterion.

Each test prints a single ``criterion N ... PASS|FAIL`` line (also repeated in
the pytest terminal summary).  Run standalone with

    python tests/test_acceptance.py
"""

import os
import sys
import time

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from oracles import BruteSemigroup, socle  # noqa: E402
from semigroup_rings.canonical import canonical_generators, canonical_hilbert_check  # noqa: E402
from semigroup_rings.cli import classify, classify_document, sample_vectors  # noqa: E402
from semigroup_rings.families import corpus_generate, family_document, fixture_catalog  # noqa: E402
from semigroup_rings.invariants import (  # noqa: E402
    HVector,
    artinian_counts,
    cokernel_data,
    h_vector,
    is_almost_gorenstein,
)
from semigroup_rings.semigroup import member, semigroup_from_document  # noqa: E402
from semigroup_rings.staircase import certified_staircase, staircase_member  # noqa: E402

FIXTURE_DIR = os.path.join(os.path.dirname(os.path.abspath(__file__)), os.pardir, "data", "fixtures")
CATALOG = {f.name: f for f in fixture_catalog()}

# socle sizes of the two curve examples, frozen from the brute-force socle computation
ORACLE_TYPES = {"curve_even_spacing": 2, "curve_triple_spacing": 4}


def _line(n, title, ok, detail):
    return f"criterion {n} {title}: {'PASS' if ok else 'FAIL'} ({detail})"


def criterion_1():
    """Family reproduction over the full parameter grid, exact, < 10 s each."""
    bad, slowest = [], 0.0
    for n in range(2, 5):
        for k in range(1, n + 2):
            t0 = time.perf_counter()
            rep = classify_document(family_document(n, k))
            slowest = max(slowest, time.perf_counter() - t0)
            got = (rep.is_cohen_macaulay, rep.h_vector, rep.cm_type, rep.is_level,
                   rep.is_nearly_gorenstein, rep.is_almost_gorenstein)
            want = (True, [1, n - 1, n], 2 * n - 1, False, True, True)
            if got != want:
                bad.append(f"n={n} k={k} got {got}")
    ok = not bad and slowest < 10
    return ok, f"12 instances, slowest {slowest:.2f}s" + (f"; mismatches {bad}" if bad else "")


def _oracle_type(name):
    S = semigroup_from_document(CATALOG[name].document)
    T = certified_staircase(S)
    B = BruteSemigroup(S.generators, S.degrees, 12)
    return len(socle(B, T.rays, 10))


def criterion_2():
    """Worked examples reproduce their stated properties exactly."""
    reps = {name: classify_document(CATALOG[name].document) for name in [
        "level_not_almost", "almost_not_nearly_dim2", "almost_not_nearly_dim3",
        "curve_even_spacing", "curve_triple_spacing"]}
    checks = [
        ("level_not_almost", "h_vector", [1, 2, 3]),
        ("level_not_almost", "is_level", True),
        ("level_not_almost", "is_almost_gorenstein", False),
        ("almost_not_nearly_dim2", "h_top", 1),
        ("almost_not_nearly_dim2", "is_almost_gorenstein", True),
        ("almost_not_nearly_dim2", "is_nearly_gorenstein", False),
        ("almost_not_nearly_dim3", "h_vector", [1, 1, 2]),
        ("almost_not_nearly_dim3", "is_almost_gorenstein", True),
        ("almost_not_nearly_dim3", "is_nearly_gorenstein", False),
        ("almost_not_nearly_dim3", "cm_experimental", True),
        ("curve_even_spacing", "is_nearly_gorenstein", True),
        ("curve_even_spacing", "is_level", False),
        ("curve_triple_spacing", "is_nearly_gorenstein", True),
        ("curve_triple_spacing", "is_level", False),
    ]
    for name, frozen in ORACLE_TYPES.items():
        assert _oracle_type(name) == frozen
        checks.append((name, "cm_type", frozen))
    bad = []
    for name, key, want in checks:
        rep = reps[name]
        got = rep.h_vector[-1] if key == "h_top" else getattr(rep, key)
        if got != want:
            bad.append(f"{name}.{key} = {got}, expected {want}")
    return not bad, f"{len(checks)} checks" + (f"; mismatches: {'; '.join(bad)}" if bad else "")


CRITERION_3_CHECKS = ["trace_degree_bound", "nearly_gorenstein_top_h", "type_two_level",
                      "ag_level_socle_one", "ag_implies_ng"]


def criterion_3():
    """Implication checks report no FAIL over fixtures and the seeded corpus, < 5 min."""
    t0 = time.perf_counter()
    reports = [classify_document(f.document) for f in fixture_catalog()]
    reports += [classify_document(S.to_document()) for S in corpus_generate(1, 12, 7, 100)]
    tally = {c: {"PASS": 0, "FAIL": 0, "VACUOUS": 0} for c in CRITERION_3_CHECKS}
    for rep in reports:
        for c in CRITERION_3_CHECKS:
            tally[c][rep.validator_results[c]] += 1
    elapsed = time.perf_counter() - t0
    fails = sum(t["FAIL"] for t in tally.values())
    summary = ", ".join(f"{c} {t['PASS']}/{t['FAIL']}/{t['VACUOUS']}" for c, t in tally.items())
    return fails == 0 and elapsed < 300, f"{len(reports)} instances in {elapsed:.1f}s, pass/fail/vacuous: {summary}"


def criterion_4():
    """Staircase membership equals direct membership on 1000 seeded vectors per fixture."""
    mismatches, covered, skipped = 0, 0, []
    for i, f in enumerate(fixture_catalog()):
        S = semigroup_from_document(f.document)
        if len(S.cone.extremal_rays) != S.dim:
            skipped.append(f.name)  # no staircase without a simplicial cone
            continue
        T = certified_staircase(S)
        vs = sample_vectors(S, 1000, seed=i)
        mismatches += sum(member(S, v) != staircase_member(T, v) for v in vs)
        covered += 1
    return mismatches == 0, f"{covered} fixtures x 1000 vectors, {mismatches} mismatches, non-simplicial skipped: {skipped}"


def criterion_5():
    """Cross-identities on every Cohen-Macaulay fixture."""
    bad, count = [], 0
    for f in fixture_catalog():
        rep = classify_document(f.document)
        if rep.is_cohen_macaulay is not True:
            continue
        count += 1
        S = semigroup_from_document(f.document)
        T = certified_staircase(S)
        h = h_vector(S)
        M = canonical_generators(T, h)
        s, d = h.socle_degree, S.dim
        conds = {
            "a = s - d": rep.a_invariant == s - d,
            "artinian counts": artinian_counts(T, s + 1) == list(h.entries) + [0],
            "canonical series": canonical_hilbert_check(M, T, h),
            "canonical bottom = h_s": sum(1 for g in M.degrees if g == d - s) == h.top,
            "level => r = h_s": (not rep.is_level) or rep.cm_type == h.top,
            "gorenstein => symmetric": (not rep.is_gorenstein) or h.is_symmetric(),
            "stanley": all(rep.stanley_inequalities),
        }
        bad += [f"{f.name}: {k}" for k, v in conds.items() if not v]
    return not bad, f"{count} CM fixtures" + (f"; broken: {bad}" if bad else "")


def criterion_6():
    """Almost Gorenstein formula spot values."""
    a = cokernel_data(HVector((1, 1, 2), 2), 3)
    b = cokernel_data(HVector((1, 2, 3), 2), 3)
    ok = (
        list(a.numerator) == [1, 1] and a.multiplicity == 2 == a.expected_mu
        and is_almost_gorenstein(HVector((1, 1, 2), 2), 3)
        and b.multiplicity == 4 and b.expected_mu == 2
        and not is_almost_gorenstein(HVector((1, 2, 3), 2), 3)
    )
    return ok, f"(1,1,2),r=3 -> c={list(a.numerator)} e={a.multiplicity}; (1,2,3),r=3 -> e={b.multiplicity} vs {b.expected_mu}"


def criterion_7():
    """Two classify runs per fixture file give byte-identical JSON."""
    files = sorted(f for f in os.listdir(FIXTURE_DIR) if f.endswith(".json"))
    diff = [f for f in files
            if classify(os.path.join(FIXTURE_DIR, f)).to_json() != classify(os.path.join(FIXTURE_DIR, f)).to_json()]
    return bool(files) and not diff, f"{len(files)} fixture files, {len(diff)} differ"


CRITERIA = [
    (1, "family reproduction", criterion_1),
    (2, "worked examples", criterion_2),
    (3, "implication checks", criterion_3),
    (4, "staircase oracle", criterion_4),
    (5, "cross identities", criterion_5),
    (6, "almost Gorenstein spot values", criterion_6),
    (7, "determinism", criterion_7),
]


def _run(n, report_line):
    _, title, fn = CRITERIA[n - 1]
    ok, detail = fn()
    report_line(_line(n, title, ok, detail))
    assert ok, detail


def test_criterion_1_family_reproduction(report_line):
    _run(1, report_line)


def test_criterion_2_worked_examples(report_line):
    _run(2, report_line)


def test_criterion_3_implication_checks(report_line):
    _run(3, report_line)


def test_criterion_4_staircase_oracle(report_line):
    _run(4, report_line)


def test_criterion_5_cross_identities(report_line):
    _run(5, report_line)


def test_criterion_6_almost_gorenstein_spot_values(report_line):
    _run(6, report_line)


def test_criterion_7_determinism(report_line):
    _run(7, report_line)


if __name__ == "__main__":
    failed = 0
    for n, title, fn in CRITERIA:
        ok, detail = fn()
        failed += not ok
        print(_line(n, title, ok, detail))
    sys.exit(1 if failed else 0)
