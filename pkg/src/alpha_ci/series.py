"""Truncated power series with exact integer coefficients.

A :class:`TruncatedIntSeries` of order ``N`` keeps the coefficients of
``t^0 .. t^N``; every operation discards higher exponents.  The same type is
used for the Hilbert series (variable ``t``) and for classes in
``Q[x]/(x^(n+1))`` (variable ``x``).  Division is never performed: inverses
such as ``(1 + d x)^-1`` are expanded as truncated geometric series.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .numtheory import binomial


class OrderMismatchError(ValueError):
    pass


class TruncationError(IndexError):
    """Coefficient requested beyond the truncation order."""


@dataclass(frozen=True)
class TruncatedIntSeries:
    order: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if self.order < 0:
            raise ValueError(f"order must be >= 0, got {self.order}")
        if len(self.coeffs) != self.order + 1:
            raise ValueError(
                f"expected {self.order + 1} coefficients, got {len(self.coeffs)}"
            )

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[int], order: int) -> TruncatedIntSeries:
        """Build a series from leading coefficients, zero-padding or truncating."""
        cs = list(coeffs)[: order + 1]
        cs.extend([0] * (order + 1 - len(cs)))
        return cls(order, tuple(int(c) for c in cs))

    @classmethod
    def one(cls, order: int) -> TruncatedIntSeries:
        return cls.from_coeffs([1], order)

    def coefficient(self, j: int) -> int:
        if j < 0:
            return 0
        if j > self.order:
            raise TruncationError(
                f"coefficient t^{j} requested from a series truncated at t^{self.order}"
            )
        return self.coeffs[j]

    def __getitem__(self, j: int) -> int:
        return self.coefficient(j)

    def __iter__(self):
        return iter(self.coeffs)

    def _check(self, other: TruncatedIntSeries) -> None:
        if not isinstance(other, TruncatedIntSeries):
            raise TypeError(f"cannot combine series with {type(other).__name__}")
        if other.order != self.order:
            raise OrderMismatchError(
                f"series orders differ: {self.order} vs {other.order}"
            )

    def __add__(self, other: TruncatedIntSeries) -> TruncatedIntSeries:
        self._check(other)
        return TruncatedIntSeries(
            self.order, tuple(a + b for a, b in zip(self.coeffs, other.coeffs))
        )

    def __sub__(self, other: TruncatedIntSeries) -> TruncatedIntSeries:
        self._check(other)
        return TruncatedIntSeries(
            self.order, tuple(a - b for a, b in zip(self.coeffs, other.coeffs))
        )

    def __neg__(self) -> TruncatedIntSeries:
        return TruncatedIntSeries(self.order, tuple(-c for c in self.coeffs))

    def scale(self, c: int) -> TruncatedIntSeries:
        return TruncatedIntSeries(self.order, tuple(c * a for a in self.coeffs))

    def __mul__(self, other: TruncatedIntSeries) -> TruncatedIntSeries:
        return mul(self, other)

    def times_one_minus_power(self, d: int) -> TruncatedIntSeries:
        """Multiply by ``1 - t^d`` (``d >= 1``) with a single shifted pass."""
        if d < 1:
            raise ValueError(f"degree must be >= 1, got {d}")
        cs = list(self.coeffs)
        for j in range(self.order, d - 1, -1):
            cs[j] -= cs[j - d]
        return TruncatedIntSeries(self.order, tuple(cs))

    def substitute_power(self, e: int, order: int) -> TruncatedIntSeries:
        """Return ``s(t^e)`` truncated at ``order``."""
        if e < 1:
            raise ValueError(f"exponent must be >= 1, got {e}")
        cs = [0] * (order + 1)
        for j, c in enumerate(self.coeffs):
            if j * e > order:
                break
            cs[j * e] = c
        return TruncatedIntSeries(order, tuple(cs))

    def mod2(self) -> int:
        """Coefficients reduced mod 2, packed into an int (bit ``j`` is ``t^j``)."""
        bits = 0
        for j, c in enumerate(self.coeffs):
            if c & 1:
                bits |= 1 << j
        return bits


def mul(a: TruncatedIntSeries, b: TruncatedIntSeries) -> TruncatedIntSeries:
    """Cauchy product truncated at the common order."""
    a._check(b)
    n = a.order
    out = [0] * (n + 1)
    for i, ai in enumerate(a.coeffs):
        if ai == 0:
            continue
        for j in range(n + 1 - i):
            bj = b.coeffs[j]
            if bj:
                out[i + j] += ai * bj
    return TruncatedIntSeries(n, tuple(out))


def coefficient(s: TruncatedIntSeries, j: int) -> int:
    return s.coefficient(j)


def geom_inverse_pow(e: int, order: int) -> TruncatedIntSeries:
    """``(1 - t)^-e`` truncated at ``order``; the ``t^j`` coefficient is C(j+e-1, j)."""
    if e < 0:
        raise ValueError(f"exponent must be >= 0, got {e}")
    if order < 0:
        raise ValueError(f"order must be >= 0, got {order}")
    if e == 0:
        return TruncatedIntSeries.one(order)
    cs = [1] * (order + 1)
    # C(j+e-1, j) = C(j+e-2, j-1) * (j+e-1) / j
    for j in range(1, order + 1):
        cs[j] = cs[j - 1] * (j + e - 1) // j
    return TruncatedIntSeries(order, tuple(cs))


def alternating_geometric(c: int, order: int) -> TruncatedIntSeries:
    """``(1 + c t)^-1 = sum_j (-c)^j t^j`` truncated at ``order``."""
    cs = [1] * (order + 1)
    for j in range(1, order + 1):
        cs[j] = -c * cs[j - 1]
    return TruncatedIntSeries(order, tuple(cs))


def binomial_power(e: int, order: int) -> TruncatedIntSeries:
    """``(1 + t)^e`` for ``e >= 0``, truncated."""
    return TruncatedIntSeries.from_coeffs(
        (binomial(e, j) for j in range(order + 1)), order
    )


def hilbert_series(n: int, d: Sequence[int], order: int) -> TruncatedIntSeries:
    """Hilbert series ``(1 - t)^-(n+k+1) * prod_i (1 - t^d_i)`` of ``X_n(d)``.

    The ``t^j`` coefficient is ``dim H^0(X; O(j))``.
    """
    if n < 1:
        raise ValueError(f"dimension must be >= 1, got {n}")
    if any(di < 1 for di in d):
        raise ValueError(f"degrees must be >= 1, got {tuple(d)}")
    s = geom_inverse_pow(n + len(d) + 1, order)
    for di in d:
        s = s.times_one_minus_power(di)
    return s
