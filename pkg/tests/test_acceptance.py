"""
Acceptance battery: the exact identities and worked examples the library
must reproduce, each at fixed scale and with a hard time budget.  Every
check is exact integer arithmetic with zero tolerance.  Each test prints
one PASS/FAIL line.
"""

import time

from affine_schubert import verify


def _report(k, name, results, elapsed, budget):
    failed = [r for r in results if not r.passed]
    status = "FAIL" if failed else "PASS"
    print(f"criterion {k:02d} ({name}): {status} [{elapsed:.1f}s / {budget}s]")
    for r in failed:
        assert r.passed, f"{r.name}: {r.counterexample}"
    assert elapsed < budget, f"criterion {k} took {elapsed:.1f}s, budget {budget}s"


def test_criterion_01_example_reproduction():
    t0 = time.monotonic()
    results = [verify.check_example_expansions()]
    _report(1, "example expansions, n=3", results, time.monotonic() - t0, 1)


def test_criterion_02_annihilation():
    t0 = time.monotonic()
    results = [verify.check_annihilation(n) for n in (2, 3, 4, 5)]
    _report(2, "phi0(h_i alpha_j) = 0", results, time.monotonic() - t0, 10)


def test_criterion_03_commutativity():
    t0 = time.monotonic()
    results = [verify.check_commutativity(n) for n in (2, 3, 4, 5)]
    _report(3, "h_i h_j = h_j h_i", results, time.monotonic() - t0, 10)


def test_criterion_04_coproduct():
    t0 = time.monotonic()
    results = []
    for n in (2, 3, 4):
        results.append(verify.check_coproduct_h(n))
        results.append(verify.check_coproduct_multiplicative(n, cap=6))
    _report(4, "coproduct of h", results, time.monotonic() - t0, 60)


def test_criterion_05_duality():
    t0 = time.monotonic()
    results = [verify.check_duality(n, 6) for n in (3, 4)]
    _report(5, "kschur/affine-Schur duality", results, time.monotonic() - t0, 60)


def test_criterion_06_dual_routes():
    t0 = time.monotonic()
    results = [verify.check_dual_routes(n, 5) for n in (3, 4)]
    _report(6, "two routes to s_w agree", results, time.monotonic() - t0, 120)


def test_criterion_07_positivity():
    t0 = time.monotonic()
    results = [verify.check_positivity(n, 6) for n in (3, 4)]
    _report(7, "structure-constant positivity", results, time.monotonic() - t0, 120)


def test_criterion_08_factorization():
    t0 = time.monotonic()
    results = [verify.check_factorization(n, t_cap=4, total_cap=7) for n in (2, 3)]
    _report(8, "translation factorization", results, time.monotonic() - t0, 60)


def test_criterion_09_center():
    t0 = time.monotonic()
    results = [verify.check_center(n, bound=2) for n in (2, 3, 4)]
    _report(9, "orbit sums central, t_lambda scalar", results, time.monotonic() - t0, 60)


def test_criterion_10_well_definedness():
    t0 = time.monotonic()
    results = [verify.check_well_defined(3, 5, divisions=1000)]
    _report(10, "well-definedness battery", results, time.monotonic() - t0, 60)


def test_criterion_11_stanley_symmetry():
    t0 = time.monotonic()
    results = [verify.check_symmetry(3, 5)]
    _report(11, "affine Stanley symmetry", results, time.monotonic() - t0, 30)
