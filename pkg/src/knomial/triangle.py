"""Order-k number triangles and exact k-nomial coefficients.

Line n of the order-k triangle lists the coefficients of
``(1 + x + x**2 + ... + x**(k-1)) ** n``; order 2 is the classical Pascal
triangle.  Entries grow like ``k**n``, so all arithmetic is exact and
arbitrary precision: gmpy2's mpz when available (they compare, hash, and
print exactly like built-in ints), plain ints otherwise.  Lines are
generated by a running-window recurrence costing one addition and one
subtraction per entry.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import accumulate, chain, islice
from operator import neg, sub
from typing import Iterator, Literal, Sequence

try:  # GMP-backed ints roughly triple deep-line generation speed
    from gmpy2 import mpz as _int
except ImportError:  # pragma: no cover - plain ints are a correct fallback
    _int = int

Parity = Literal["odd", "even"]


@dataclass(frozen=True)
class KNomialParams:
    """Validated order k with its parity split: k = 2p + 1 or k = 2p."""

    k: int
    half_width: int
    parity: Parity

    def __post_init__(self) -> None:
        if not isinstance(self.k, int) or self.k < 2:
            raise ValueError(f"order k must be an integer >= 2, got {self.k!r}")
        if self.half_width != self.k // 2:
            raise ValueError(
                f"half_width must be {self.k // 2} for k={self.k}, got {self.half_width}"
            )
        expected = "odd" if self.k % 2 else "even"
        if self.parity != expected:
            raise ValueError(f"k={self.k} has {expected} parity, got {self.parity!r}")


@dataclass(frozen=True)
class Row:
    """One line of an order-k triangle.

    ``coefficients[h]`` is the coefficient of x**h, h = 0 .. (k-1)*n, so the
    line has exactly (k-1)*n + 1 entries and starts and ends with 1.
    """

    k: int
    n: int
    coefficients: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.k < 2:
            raise ValueError(f"order k must be >= 2, got {self.k}")
        if self.n < 0:
            raise ValueError(f"line index must be >= 0, got {self.n}")
        width = (self.k - 1) * self.n + 1
        if len(self.coefficients) != width:
            raise ValueError(
                f"line {self.n} of order {self.k} needs {width} entries, "
                f"got {len(self.coefficients)}"
            )
        if self.coefficients[0] != 1 or self.coefficients[-1] != 1:
            raise ValueError("a triangle line starts and ends with 1")


@dataclass(frozen=True)
class CoefficientQuery:
    """Addresses the coefficient of x**h in (1 + x + ... + x**(k-1))**n.

    h may be any integer; positions outside line n resolve to 0.
    """

    k: int
    n: int
    h: int


def make_params(k: int) -> KNomialParams:
    """Validate an order and derive p = k // 2 and the parity."""
    if not isinstance(k, int) or k < 2:
        raise ValueError(f"order k must be an integer >= 2, got {k!r}")
    return KNomialParams(k=k, half_width=k // 2, parity="odd" if k % 2 else "even")


def row_width(params: KNomialParams, n: int) -> int:
    """Number of entries on line n: (k-1)*n + 1."""
    return (params.k - 1) * n + 1


def _check_line_index(n: int) -> None:
    if not isinstance(n, int) or n < 0:
        raise ValueError(f"line index must be a non-negative integer, got {n!r}")


def _line_zero(k: int) -> Row:
    return Row(k=k, n=0, coefficients=(_int(1),))


def _window_step(k: int, old: Sequence[int]) -> list[int]:
    """One running-window step on raw line contents.

    The next line is the prefix sums of delta[h] = old[h] - old[h-k]
    (positions outside the line reading as 0), which costs one addition and
    one subtraction per entry regardless of k.  Everything runs inside
    C-level iterators so line 5000 stays cheap.
    """
    width = len(old)
    if width < k:  # line 0: every window sees just the single 1
        return [old[0]] * (width + k - 1)
    delta = chain(
        islice(old, k),
        map(sub, islice(old, k, None), old),
        map(neg, islice(old, width - k, width - 1)),
    )
    return list(accumulate(delta))


def next_row(params: KNomialParams, current: Row) -> Row:
    """Produce line n+1 from line n.

    Entry h of the new line is the sum of entries h-(k-1) .. h of the current
    line, with positions outside the line reading as 0, computed as a running
    window rather than k separate additions.
    """
    k = params.k
    if current.k != k:
        raise ValueError(f"line has order {current.k}, params have order {k}")
    return Row(k=k, n=current.n + 1, coefficients=tuple(_window_step(k, current.coefficients)))


def row(k: int, n: int) -> Row:
    """Line n of the order-k triangle, keeping at most two lines in memory."""
    params = make_params(k)
    _check_line_index(n)
    coeffs: Sequence[int] = (_int(1),)
    for _ in range(n):
        coeffs = _window_step(params.k, coeffs)
    return Row(k=k, n=n, coefficients=tuple(coeffs))


def coefficient(query: CoefficientQuery) -> int:
    """The exact value addressed by (k, n, h); 0 whenever h falls outside line n."""
    make_params(query.k)
    _check_line_index(query.n)
    if query.h < 0 or query.h > (query.k - 1) * query.n:
        return 0
    return int(row(query.k, query.n).coefficients[query.h])


def triangle(k: int, n_max: int) -> Iterator[Row]:
    """Yield lines 0 .. n_max in order.

    Lazy: consumers may stop early, and memory stays bounded by two lines.
    Invalid arguments raise immediately, not on first iteration.
    """
    params = make_params(k)
    _check_line_index(n_max)

    def lines() -> Iterator[Row]:
        current = _line_zero(k)
        yield current
        for _ in range(n_max):
            current = next_row(params, current)
            yield current

    return lines()
