"""Exact integer number theory: p-adic valuations and binomial coefficients.

``binomial`` uses the falling-factorial definition, so the upper argument may
be any integer.  ``binomial_mod2`` computes the same value modulo 2 using only
bit operations (Lucas' theorem), which keeps it cheap for arbitrarily large
arguments.
"""

from __future__ import annotations

from math import comb


class InfiniteValuationError(ValueError):
    """Raised when asking for the valuation of zero."""


def nu_p(p: int, m: int) -> int:
    """Return the exponent of the prime ``p`` in ``|m|``.

    >>> nu_p(2, 720)
    4
    """
    if p < 2:
        raise ValueError(f"p must be a prime >= 2, got {p}")
    if m == 0:
        raise InfiniteValuationError("valuation of 0 is infinite")
    m = abs(m)
    if p == 2:
        return (m & -m).bit_length() - 1
    v = 0
    while m % p == 0:
        m //= p
        v += 1
    return v


def nu2_factorial(m: int) -> int:
    """2-adic valuation of ``m!`` by Legendre's floor sum.

    Equivalent to ``m - popcount(m)``, but kept in the floor-sum form.
    """
    if m < 0:
        raise ValueError(f"factorial of negative integer {m}")
    v = 0
    m >>= 1
    while m:
        v += m
        m >>= 1
    return v


def binomial(a: int, b: int) -> int:
    """Generalized binomial coefficient ``a (a-1) ... (a-b+1) / b!``.

    Valid for every integer ``a``; ``b < 0`` gives 0.  Negative ``a`` is
    handled through ``C(a, b) = (-1)^b C(b - a - 1, b)``.
    """
    if b < 0:
        return 0
    if a >= 0:
        return comb(a, b)
    value = comb(b - a - 1, b)
    return -value if b & 1 else value


def binomial_mod2(a: int, b: int) -> int:
    """``binomial(a, b) mod 2`` without forming the binomial.

    For ``a >= 0`` this is Lucas' theorem: the coefficient is odd iff the bits
    of ``b`` are a subset of the bits of ``a``.  Negative ``a`` is reflected
    to ``b - a - 1`` first.
    """
    if b < 0:
        return 0
    if a < 0:
        a = b - a - 1
    return 1 if b & ~a == 0 else 0
