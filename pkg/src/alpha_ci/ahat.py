"""Exact A-hat genus of even-dimensional spin complete intersections."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import BackendDisagreementError, NotSpinError
from .numtheory import binomial
from .series import hilbert_series
from .topology import even_degree_count


@dataclass(frozen=True)
class AhatValue:
    value: int
    backend: str

    def __int__(self) -> int:
        return self.value


def _check(n: int, d: Sequence[int]) -> int:
    """Validate inputs and return ``2m``."""
    if n < 2 or n % 2:
        raise ValueError(f"A-hat formulas need even n >= 2, got n={n}")
    if any(di < 1 for di in d):
        raise ValueError(f"degrees must be >= 1, got {tuple(d)}")
    if even_degree_count(d) % 2 == 0:
        raise NotSpinError(
            f"X_{n}{tuple(d)} is not spin: an even number of degrees are even"
        )
    return -n - len(d) - 1 + sum(d)


def ahat_sign_sum(n: int, d: Sequence[int]) -> AhatValue:
    """``sum_eps sgn(eps) C((n+k-1 + eps.d)/2, n+k)`` over all ``2^k`` signs."""
    _check(n, d)
    k = len(d)
    top = n + k
    total = 0
    for mask in range(1 << k):
        s = 0
        sign = 1
        for i, di in enumerate(d):
            if (mask >> i) & 1:
                s -= di
                sign = -sign
            else:
                s += di
        total += sign * binomial((top - 1 + s) // 2, top)
    return AhatValue(total, "sign_sum")


def ahat_hilbert(n: int, d: Sequence[int]) -> AhatValue:
    """Twice ``dim H^0(X; O(m))``, read from the Hilbert series."""
    two_m = _check(n, d)
    m = two_m // 2
    if m < 0:
        return AhatValue(0, "hilbert")
    return AhatValue(2 * hilbert_series(n, d, m).coefficient(m), "hilbert")


def ahat(n: int, d: Sequence[int]) -> AhatValue:
    """A-hat genus from both formulas; raises if they differ."""
    a = ahat_sign_sum(n, d)
    b = ahat_hilbert(n, d)
    if a.value != b.value:
        raise BackendDisagreementError(
            "A-hat", n, d, {a.backend: a.value, b.backend: b.value}
        )
    return AhatValue(a.value, "sign_sum+hilbert")
