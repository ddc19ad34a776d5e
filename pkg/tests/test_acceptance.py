"""Acceptance suite: the full-scale exact verification sweeps.

Each test covers one acceptance criterion, runs it at full scale, and
prints a single pass/fail line (visible with ``pytest -s``).  All
comparisons are exact; the only tolerances are the stated wall-clock
budgets of the three big sweeps.

Run with:  pytest tests/test_acceptance.py -v -s
"""

import time
from fractions import Fraction
from itertools import permutations

from harmonum import cli, identities, sequences, series


def _announce(number: int, ok: bool, text: str) -> None:
    print(f"criterion {number:2d} {'PASS' if ok else 'FAIL'}: {text}")


def test_criterion_01_derangement_recurrence_sweep():
    start = time.monotonic()
    failures = [
        (m, n)
        for m in range(41)
        for n in range(41)
        if not identities.derangement_recurrence_check(m, n).passed
    ]
    elapsed = time.monotonic() - start
    ok = not failures and elapsed < 60
    _announce(1, ok, f"derangement recurrence, 41x41 grid, {elapsed:.1f}s")
    assert not failures
    assert elapsed < 60


def test_criterion_02_harmonic_recurrence_sweep():
    start = time.monotonic()
    failures = [
        (m, n)
        for m in range(201)
        for n in range(201)
        if not identities.harmonic_recurrence_check(m, n).passed
    ]
    elapsed = time.monotonic() - start
    ok = not failures and elapsed < 60
    _announce(2, ok, f"harmonic recurrence, 201x201 grid, {elapsed:.1f}s")
    assert not failures
    assert elapsed < 60


def test_criterion_03_deg_harmonic_recurrence_sweep():
    start = time.monotonic()
    failures = [
        (m, n)
        for m in range(41)
        for n in range(41)
        if not identities.degenerate_harmonic_recurrence_check(m, n).passed
    ]
    elapsed = time.monotonic() - start
    ok = not failures and elapsed < 120
    _announce(3, ok, f"deformed harmonic recurrence, 41x41 grid, {elapsed:.1f}s")
    assert not failures
    assert elapsed < 120


def test_criterion_04_closed_forms():
    failures = [
        (n, m)
        for n in range(101)
        for m in range(11)
        if not identities.hyperharmonic_closed_form_check(n, m).passed
    ]
    failures += [
        ("deg-closed", n, m)
        for n in range(41)
        for m in range(41)
        if not identities.degenerate_hyperharmonic_closed_form_check(n, m).passed
    ]
    failures += [
        ("deg-sum", n, m)
        for n in range(41)
        for m in range(41)
        if not identities.degenerate_hyperharmonic_sum_check(n, m).passed
    ]
    ok = not failures
    _announce(4, ok, "hyperharmonic closed forms incl. exact divisibility")
    assert not failures


def test_criterion_05_hyperharmonic_sum_form():
    failures = [
        (n, m)
        for n in range(101)
        for m in range(11)
        if not identities.hyperharmonic_sum_check(n, m).passed
    ]
    ok = not failures
    _announce(5, ok, "hyperharmonic weighted-sum form, n<=100 m<=10")
    assert not failures


def test_criterion_06_generating_functions():
    reports = [
        series.gf_derangement_check(60),
        series.gf_harmonic_check(200),
        *(series.gf_hyperharmonic_check(100, r) for r in range(6)),
        series.gf_deg_harmonic_check(60),
        *(series.gf_deg_hyperharmonic_check(40, r) for r in range(5)),
    ]
    bad = [r.identity for r in reports if not r.passed]
    ok = not bad
    _announce(6, ok, f"generating functions, {len(reports)} series checks")
    assert not bad


def test_criterion_07_bivariate_series():
    reports = [
        series.bivariate_derangement_check(20),
        series.bivariate_harmonic_check(20),
        series.bivariate_deg_harmonic_check(12),
    ]
    bad = [r.identity for r in reports if not r.passed]
    ok = not bad
    _announce(7, ok, "bivariate series derivations at orders 20/20/12")
    assert not bad


def test_criterion_08_derangement_oracles():
    d = sequences.derangements(200)
    brute_ok = all(
        d[n]
        == sum(
            1 for p in permutations(range(n)) if all(p[i] != i for i in range(n))
        )
        for n in range(9)
    )
    recurrence_ok = all(d[n] == n * d[n - 1] + (-1) ** n for n in range(1, 201))
    ok = brute_ok and recurrence_ok
    _announce(8, ok, "derangements vs brute force (n<=8) and recurrence (n<=200)")
    assert brute_ok
    assert recurrence_ok


def test_criterion_09_degeneration_to_plain_families():
    dh = sequences.degenerate_harmonics(60)
    h = sequences.harmonics(60)
    harmonic_ok = all(dh[n].constant_term == h[n] for n in range(61))
    hyper_ok = True
    for r in range(5):
        dt = sequences.degenerate_hyperharmonic_table(40, r)
        ht = sequences.hyperharmonic_table(40, r)
        hyper_ok = hyper_ok and all(
            dt[n].constant_term == ht[n] for n in range(41)
        )
    ok = harmonic_ok and hyper_ok
    _announce(9, ok, "constant terms recover plain families (n<=60; n<=40 r<=4)")
    assert harmonic_ok
    assert hyper_ok


def test_criterion_10_log_product_rule():
    cases = list(identities.random_log_product_cases(200, seed=2025))
    assert len(cases) == 200
    domain_ok = all(
        0 < x <= 10 and 0 < y <= 10 and lam != 0 and -5 <= lam <= 5
        for x, y, lam in cases
    )
    failures = [
        (x, y, lam)
        for x, y, lam in cases
        if not identities.deg_log_product_check(x, y, lam).passed
    ]
    ok = domain_ok and not failures
    _announce(10, ok, "deformed-log product rule, 200 random rational cases")
    assert domain_ok
    assert not failures


def test_criterion_11_cli_contract(tmp_path, capsys):
    def run(*argv):
        try:
            code = cli.main(list(argv))
        except SystemExit as exc:
            code = exc.code
        return code, capsys.readouterr().out

    jobs = [
        ("derangement", None),
        ("harmonic", None),
        ("deg-harmonic", None),
        ("hyperharmonic", 0),
        ("hyperharmonic", 1),
        ("hyperharmonic", 4),
        ("deg-hyperharmonic", 0),
        ("deg-hyperharmonic", 1),
        ("deg-hyperharmonic", 4),
    ]
    roundtrip_ok = True
    for kind, r in jobs:
        argv = ["table", kind, "50"]
        if r is not None:
            argv += ["--r", str(r)]
        code, out = run(*argv)
        roundtrip_ok = roundtrip_ok and code == 0
        path = tmp_path / f"{kind}-{r}.csv"
        path.write_text(out, encoding="utf-8")
        code, out = run("check-reference", str(path))
        roundtrip_ok = roundtrip_ok and code == 0

    bad = tmp_path / "corrupted.csv"
    bad.write_text("kind,n,r,value\nharmonic,4,,25/13\n", encoding="utf-8")
    corrupted_code, _ = run("check-reference", str(bad))

    mal = tmp_path / "malformed.csv"
    mal.write_text("kind;n;r;value\n", encoding="utf-8")
    malformed_code, _ = run("check-reference", str(mal))

    ok = roundtrip_ok and corrupted_code == 1 and malformed_code == 2
    _announce(11, ok, "CLI round-trip (n<=50, all kinds), exit codes 0/1/2")
    assert roundtrip_ok
    assert corrupted_code == 1
    assert malformed_code == 2
