"""Independent verification of order-k triangle identities.

Every check recomputes its expectation without the running-window recurrence:
line contents come from naive polynomial expansion, sums from direct integer
powers, and single entries from an inclusion-exclusion closed form.  Three
routes to the same numbers means a bug in any one of them gets caught.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterable, Sequence

from .triangle import CoefficientQuery, _check_line_index, make_params, row, triangle

PROPERTY_IDS = (
    "P1",
    "P2",
    "P3",
    "P4",
    "P5",
    "P6",
    "P7",
    "P8",
    "P9",
    "ORACLE",
    "CLOSED_FORM",
)


@dataclass(frozen=True)
class DensePolynomial:
    """Exact dense polynomial; index = degree.

    Trailing coefficient is nonzero except for the constant 0, written (0,).
    """

    coefficients: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.coefficients:
            raise ValueError("a dense polynomial needs at least the constant term")
        if len(self.coefficients) > 1 and self.coefficients[-1] == 0:
            raise ValueError("trailing coefficient must be nonzero")

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one property check; truthiness mirrors ``passed``.

    On failure, ``counterexample`` locates the first offending position (for
    whole-line aggregates h is 0 and expected/actual hold the aggregates).
    """

    passed: bool
    counterexample: CoefficientQuery | None = None
    expected: int | None = None
    actual: int | None = None

    def __bool__(self) -> bool:
        return self.passed


@dataclass(frozen=True)
class VerificationReport:
    """Per-property results for one order, first counterexample included on failure."""

    k: int
    n_max: int
    results: dict[str, CheckResult]

    @property
    def all_passed(self) -> bool:
        return all(res.passed for res in self.results.values())

    def failures(self) -> dict[str, CheckResult]:
        return {pid: res for pid, res in self.results.items() if not res.passed}


_PASS = CheckResult(passed=True)


def _fail(k: int, n: int, h: int, expected: int, actual: int) -> CheckResult:
    return CheckResult(False, CoefficientQuery(k=k, n=n, h=h), expected, actual)


def _entry(coeffs: Sequence[int], h: int) -> int:
    return coeffs[h] if 0 <= h < len(coeffs) else 0


def _convolve(a: Sequence[int], b: Sequence[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def expand_power_oracle(k: int, n: int) -> DensePolynomial:
    """(1 + x + ... + x**(k-1))**n by n successive naive convolutions.

    Ground truth for the triangle: deliberately simple, no running-window
    shortcut, so it cannot share a bug with the row recurrence.
    """
    make_params(k)
    _check_line_index(n)
    base = [1] * k
    coeffs: list[int] = [1]
    for _ in range(n):
        coeffs = _convolve(coeffs, base)
    return DensePolynomial(tuple(coeffs))


def _oracle_chain(k: int, n_max: int) -> list[tuple[int, ...]]:
    base = [1] * k
    coeffs: list[int] = [1]
    chain = [tuple(coeffs)]
    for _ in range(n_max):
        coeffs = _convolve(coeffs, base)
        chain.append(tuple(coeffs))
    return chain


def closed_form_coefficient(k: int, n: int, h: int) -> int:
    """Entry (k, n, h) by inclusion-exclusion over binomials.

    sum_j (-1)**j * C(n, j) * C(n-1+h-k*j, n-1), terms with a negative upper
    argument dropped.  Line 0 is the empty product, hence 1.  Third route to
    the same numbers, sharing nothing with recurrence or expansion.
    """
    make_params(k)
    _check_line_index(n)
    if h < 0 or h > (k - 1) * n:
        raise ValueError(f"h must lie in 0..{(k - 1) * n} for line {n}, got {h}")
    if n == 0:
        return 1
    total = 0
    for j in range(n + 1):
        upper = n - 1 + h - k * j
        if upper < 0:
            break
        total += (-1) ** j * comb(n, j) * comb(upper, n - 1)
    return total


# Core comparisons.  Each takes line contents that were computed elsewhere
# and recomputes the expected side on its own; `bias` shifts the expectation
# and exists purely to exercise the failure path (see verify_all).


def _width_result(k: int, n: int, coeffs: Sequence[int], bias: int = 0) -> CheckResult:
    expected = (k - 1) * n + 1 + bias
    if len(coeffs) != expected:
        return _fail(k, n, 0, expected, len(coeffs))
    return _PASS


def _recurrence_result(
    k: int, n: int, prev: Sequence[int], coeffs: Sequence[int], bias: int = 0
) -> CheckResult:
    for h, actual in enumerate(coeffs):
        expected = sum(_entry(prev, h - i) for i in range(k)) + bias
        if actual != expected:
            return _fail(k, n, h, expected, actual)
    return _PASS


def _symmetry_result(k: int, n: int, coeffs: Sequence[int], bias: int = 0) -> CheckResult:
    top = len(coeffs) - 1
    for h in range(top // 2 + 1):
        expected = coeffs[top - h] + bias
        if coeffs[h] != expected:
            return _fail(k, n, h, expected, coeffs[h])
    return _PASS


def _first_elements_result(k: int, n: int, coeffs: Sequence[int], bias: int = 0) -> CheckResult:
    if coeffs[0] != 1 + bias:
        return _fail(k, n, 0, 1 + bias, coeffs[0])
    if coeffs[1] != n + bias:
        return _fail(k, n, 1, n + bias, coeffs[1])
    return _PASS


def _expansion_match_result(
    k: int, n: int, oracle: Sequence[int], coeffs: Sequence[int], bias: int = 0
) -> CheckResult:
    if len(oracle) != len(coeffs):
        return _fail(k, n, 0, len(oracle), len(coeffs))
    for h, value in enumerate(oracle):
        if coeffs[h] != value + bias:
            return _fail(k, n, h, value + bias, coeffs[h])
    return _PASS


def _row_sum_result(k: int, n: int, coeffs: Sequence[int], bias: int = 0) -> CheckResult:
    expected = k**n + bias
    actual = sum(coeffs)
    if actual != expected:
        return _fail(k, n, 0, expected, actual)
    return _PASS


def _alternating_result(k: int, n: int, coeffs: Sequence[int], bias: int = 0) -> CheckResult:
    # P(-1)**n: 1 for odd k, 0**n for even k.
    expected = (1 if k % 2 or n == 0 else 0) + bias
    actual = sum(c if h % 2 == 0 else -c for h, c in enumerate(coeffs))
    if actual != expected:
        return _fail(k, n, 0, expected, actual)
    return _PASS


def _vandermonde_pair_result(
    k: int,
    n: int,
    m: int,
    line_n: Sequence[int],
    line_m: Sequence[int],
    line_nm: Sequence[int],
    bias: int = 0,
) -> CheckResult:
    # Convolving lines n and m evaluates sum_i C(n,i)*C(m,h-i) for every h at
    # once; beyond the arrays both sides are structurally 0.
    lhs = _convolve(line_n, line_m)
    for h, value in enumerate(lhs):
        expected = value + bias
        if line_nm[h] != expected:
            return _fail(k, n + m, h, expected, line_nm[h])
    return _PASS


def _sum_of_squares_result(
    k: int, n: int, coeffs: Sequence[int], line_2n: Sequence[int], bias: int = 0
) -> CheckResult:
    # (k-1)*n is the exact midpoint of line 2n for either parity.
    expected = sum(c * c for c in coeffs) + bias
    actual = line_2n[(k - 1) * n]
    if actual != expected:
        return _fail(k, 2 * n, (k - 1) * n, expected, actual)
    return _PASS


def _oracle_sanity_result(k: int, n: int, oracle: Sequence[int], bias: int = 0) -> CheckResult:
    expected_degree = (k - 1) * n + bias
    if len(oracle) - 1 != expected_degree:
        return _fail(k, n, 0, expected_degree, len(oracle) - 1)
    for h, value in enumerate(oracle):
        if value < 1:
            return _fail(k, n, h, 1, value)
    return _PASS


def _closed_form_result(k: int, n: int, coeffs: Sequence[int], bias: int = 0) -> CheckResult:
    for h, actual in enumerate(coeffs):
        expected = closed_form_coefficient(k, n, h) + bias
        if actual != expected:
            return _fail(k, n, h, expected, actual)
    return _PASS


# Per-property operations over freshly generated lines.


def check_width(k: int, n: int) -> CheckResult:
    """P1: line n has (k-1)*n + 1 entries."""
    return _width_result(k, n, row(k, n).coefficients)


def check_recurrence(k: int, n: int) -> CheckResult:
    """P2: every entry of line n is the naive k-fold sum over line n-1."""
    if n < 1:
        raise ValueError("recurrence check needs n >= 1")
    prev = row(k, n - 1).coefficients
    return _recurrence_result(k, n, prev, row(k, n).coefficients)


def check_symmetry(k: int, n: int) -> CheckResult:
    """P3: line n reads the same in both directions."""
    return _symmetry_result(k, n, row(k, n).coefficients)


def check_first_elements(k: int, n: int) -> CheckResult:
    """P4: line n starts with 1, n."""
    if n < 1:
        raise ValueError("first-elements check needs n >= 1")
    return _first_elements_result(k, n, row(k, n).coefficients)


def check_oracle_equivalence(k: int, n: int) -> CheckResult:
    """P5: line n equals the coefficients of (1 + x + ... + x**(k-1))**n."""
    oracle = expand_power_oracle(k, n).coefficients
    return _expansion_match_result(k, n, oracle, row(k, n).coefficients)


def check_row_sum(k: int, n: int) -> CheckResult:
    """P6: the entries of line n sum to k**n."""
    return _row_sum_result(k, n, row(k, n).coefficients)


def check_alternating_sum(k: int, n: int) -> CheckResult:
    """P7: the h-alternating sum of line n equals P(-1)**n (1 odd k, 0**n even k)."""
    return _alternating_result(k, n, row(k, n).coefficients)


def check_vandermonde(k: int, n: int, m: int, h: int) -> CheckResult:
    """P8 at one position: sum_i C(n,i)*C(m,h-i) == C(n+m,h) for any integer h."""
    line_n = row(k, n).coefficients
    line_m = row(k, m).coefficients
    line_nm = row(k, n + m).coefficients
    lhs = sum(_entry(line_n, i) * _entry(line_m, h - i) for i in range(max(h + 1, 0)))
    rhs = _entry(line_nm, h)
    if lhs != rhs:
        return _fail(k, n + m, h, lhs, rhs)
    return _PASS


def check_sum_of_squares(k: int, n: int) -> CheckResult:
    """P9: squares of line n sum to the central entry of line 2n."""
    coeffs = row(k, n).coefficients
    return _sum_of_squares_result(k, n, coeffs, row(k, 2 * n).coefficients)


def check_oracle_sanity(k: int, n: int) -> CheckResult:
    """Expansion oracle self-check: degree exactly (k-1)*n, all entries positive."""
    return _oracle_sanity_result(k, n, expand_power_oracle(k, n).coefficients)


def check_closed_form(k: int, n: int) -> CheckResult:
    """Closed-form cross-check: inclusion-exclusion agrees with line n everywhere."""
    return _closed_form_result(k, n, row(k, n).coefficients)


def _first_failure(results: Iterable[CheckResult]) -> CheckResult:
    for res in results:
        if not res.passed:
            return res
    return _PASS


def verify_all(
    k: int, n_max: int, m_max: int, corrupt: str | None = None
) -> VerificationReport:
    """Run every property check for lines 0..n_max of the order-k triangle.

    The convolution identity (P8) sweeps all pairs n, m <= m_max.  Each
    property reports pass or its first counterexample (smallest n, then h).

    ``corrupt`` names a property whose expected values get biased by +1,
    forcing a recorded failure; it exists so the failure path can be
    exercised on demand and never touches the computed data.
    """
    make_params(k)
    _check_line_index(n_max)
    _check_line_index(m_max)
    if corrupt is not None and corrupt not in PROPERTY_IDS:
        raise ValueError(f"unknown property {corrupt!r}, expected one of {PROPERTY_IDS}")

    # P9 reaches line 2*n_max and P8 reaches line 2*m_max; cache everything once.
    lines = [r.coefficients for r in triangle(k, 2 * max(n_max, m_max))]
    oracle = _oracle_chain(k, n_max)

    def bias(pid: str) -> int:
        return 1 if corrupt == pid else 0

    all_n = range(n_max + 1)
    results: dict[str, CheckResult] = {
        "P1": _first_failure(
            _width_result(k, n, lines[n], bias("P1")) for n in all_n
        ),
        "P2": _first_failure(
            _recurrence_result(k, n, lines[n - 1], lines[n], bias("P2"))
            for n in range(1, n_max + 1)
        ),
        "P3": _first_failure(
            _symmetry_result(k, n, lines[n], bias("P3")) for n in all_n
        ),
        "P4": _first_failure(
            _first_elements_result(k, n, lines[n], bias("P4"))
            for n in range(1, n_max + 1)
        ),
        "P5": _first_failure(
            _expansion_match_result(k, n, oracle[n], lines[n], bias("P5")) for n in all_n
        ),
        "P6": _first_failure(
            _row_sum_result(k, n, lines[n], bias("P6")) for n in all_n
        ),
        "P7": _first_failure(
            _alternating_result(k, n, lines[n], bias("P7")) for n in all_n
        ),
        "P8": _first_failure(
            _vandermonde_pair_result(
                k, n, m, lines[n], lines[m], lines[n + m], bias("P8")
            )
            for n in range(m_max + 1)
            for m in range(m_max + 1)
        ),
        "P9": _first_failure(
            _sum_of_squares_result(k, n, lines[n], lines[2 * n], bias("P9"))
            for n in all_n
        ),
        "ORACLE": _first_failure(
            _oracle_sanity_result(k, n, oracle[n], bias("ORACLE")) for n in all_n
        ),
        "CLOSED_FORM": _first_failure(
            _closed_form_result(k, n, lines[n], bias("CLOSED_FORM")) for n in all_n
        ),
    }
    return VerificationReport(k=k, n_max=n_max, results=results)
