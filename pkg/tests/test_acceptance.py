"""Acceptance gate: one test per criterion, each at its stated tolerance.

Every criterion prints an ``ACCEPTANCE Cn PASS`` line on success (visible
with ``pytest -s``); a violated criterion fails its test.  All value
comparisons are exact; the only tolerances are the stated wall-clock
budgets.
"""

import time

from knomial import (
    CoefficientQuery,
    closed_form_coefficient,
    coefficient,
    expand_power_oracle,
    row,
    verify_all,
)
from knomial.cli import main

GOLDEN_K5 = [
    (1,),
    (1, 1, 1, 1, 1),
    (1, 2, 3, 4, 5, 4, 3, 2, 1),
    (1, 3, 6, 10, 15, 18, 19, 18, 15, 10, 6, 3, 1),
    (1, 4, 10, 20, 35, 52, 68, 80, 85, 80, 68, 52, 35, 20, 10, 4, 1),
]


def _report(line):
    print(f"ACCEPTANCE {line}")


def test_c1_golden_triangle():
    start = time.perf_counter()
    for n, expected in enumerate(GOLDEN_K5):
        assert row(5, n).coefficients == expected
    elapsed = time.perf_counter() - start
    assert len(GOLDEN_K5[3]) == 13
    assert len(GOLDEN_K5[4]) == 17
    assert GOLDEN_K5[4][8] == 85
    assert elapsed < 1.0
    _report(f"C1 PASS: lines 0..4 of order 5 exact ({elapsed:.3f}s)")


def test_c2_worked_example():
    assert coefficient(CoefficientQuery(k=5, n=3, h=7)) == 18
    line2 = row(5, 2).coefficients
    window = [line2[7 - i] if 0 <= 7 - i < len(line2) else 0 for i in range(5)]
    assert window == [2, 3, 4, 5, 4]  # read back: 4 + 5 + 4 + 3 + 2
    assert sum(window) == 18
    _report("C2 PASS: C(5,3,7) = 18 and its window over line 2 sums 4+5+4+3+2")


def test_c3_triple_agreement():
    start = time.perf_counter()
    for k in range(2, 7):
        for n in range(13):
            line = row(k, n).coefficients
            assert line == expand_power_oracle(k, n).coefficients
            for h, value in enumerate(line):
                assert closed_form_coefficient(k, n, h) == value
    elapsed = time.perf_counter() - start
    assert elapsed < 30.0
    _report(f"C3 PASS: recurrence = oracle = closed form, k=2..6, n<=12 ({elapsed:.1f}s)")


def test_c4_property_suite():
    start = time.perf_counter()
    for k in range(2, 9):
        report = verify_all(k, 25, 12)
        assert report.all_passed, f"k={k}: {report.failures()}"
    elapsed = time.perf_counter() - start
    assert elapsed < 120.0
    _report(f"C4 PASS: P1-P9 (+oracle, closed form) for k=2..8, n<=25, pairs<=12 ({elapsed:.1f}s)")


def test_c5_spot_values():
    line4 = row(5, 4).coefficients
    assert sum(line4) == 625 == 5**4
    line2 = row(5, 2).coefficients
    assert sum(c * c for c in line2) == 85 == line4[8]
    _report("C5 PASS: line-4 sum 625 = 5^4; line-2 squares sum 85 = central entry of line 4")


def test_c6_performance():
    start = time.perf_counter()
    deep = row(3, 5000)
    window_deep = time.perf_counter() - start
    assert len(deep.coefficients) == 2 * 5000 + 1
    assert window_deep < 10.0

    start = time.perf_counter()
    window_line = row(3, 500)
    window_mid = time.perf_counter() - start
    start = time.perf_counter()
    oracle_poly = expand_power_oracle(3, 500)
    oracle_mid = time.perf_counter() - start
    assert window_line.coefficients == oracle_poly.coefficients
    assert window_mid < oracle_mid
    _report(
        f"C6 PASS: line 5000 in {window_deep:.2f}s; "
        f"at line 500 window {window_mid:.3f}s beats oracle {oracle_mid:.3f}s, results equal"
    )


def test_c7_cli_contract(capsys):
    code = main(["row", "--k", "5", "--n", "2", "--format", "csv"])
    out, _ = capsys.readouterr()
    assert code == 0
    assert out == "1,2,3,4,5,4,3,2,1\n"

    code = main(["row", "--k", "3", "--n", "2", "--format", "json"])
    out, _ = capsys.readouterr()
    assert code == 0
    assert out == '{"k":3,"n":2,"coefficients":["1","2","3","2","1"]}\n'

    code = main(["verify", "--k", "5", "--n-max", "6", "--m-max", "3"])
    capsys.readouterr()
    assert code == 0

    code = main(["verify", "--k", "5", "--n-max", "4", "--m-max", "2", "--corrupt", "P6"])
    out, _ = capsys.readouterr()
    assert code == 1
    assert "FAIL" in out

    try:
        code = main(["row", "--k", "5", "--n", "2", "--bogus"])
    except SystemExit as exc:
        code = exc.code
    capsys.readouterr()
    assert code == 2
    _report("C7 PASS: csv/json bit-exact; exit codes 0 (all-pass), 1 (corrupted verify), 2 (bad flag)")
