"""Complete intersections ``X_n(d_1, ..., d_k)`` and their characteristic data."""

from __future__ import annotations

from dataclasses import dataclass
from math import prod
from typing import Iterable, NamedTuple

from .series import (
    TruncatedIntSeries,
    alternating_geometric,
    binomial_power,
    mul,
)


@dataclass(frozen=True)
class CompleteIntersection:
    """An ``n``-dimensional complete intersection in ``CP^(n+k)``.

    Degrees are stored as a sorted tuple; degree-1 entries are kept as given.
    """

    n: int
    degrees: tuple[int, ...] = ()

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"dimension must be >= 1, got {self.n}")
        degrees = tuple(sorted(int(d) for d in self.degrees))
        if degrees and degrees[0] < 1:
            raise ValueError(f"degrees must be >= 1, got {degrees}")
        object.__setattr__(self, "degrees", degrees)

    @property
    def k(self) -> int:
        return len(self.degrees)

    def padded(self, k: int) -> CompleteIntersection:
        """Append degree-1 equations until there are ``k`` of them."""
        if k < self.k:
            raise ValueError(f"cannot pad {self.k} degrees down to {k}")
        return CompleteIntersection(self.n, (1,) * (k - self.k) + self.degrees)

    def stripped(self) -> CompleteIntersection:
        """Drop degree-1 equations (they do not change the manifold)."""
        return CompleteIntersection(self.n, tuple(d for d in self.degrees if d != 1))

    def __str__(self) -> str:
        return f"X_{self.n}({','.join(map(str, self.degrees))})"


class SpinData(NamedTuple):
    spin: bool
    m: int | None


def canonical_twist_doubled(X: CompleteIntersection) -> int:
    """``2m = -n - k - 1 + sum(d)``: the canonical bundle is ``O(2m)``."""
    return -X.n - X.k - 1 + sum(X.degrees)


def is_spin(X: CompleteIntersection) -> SpinData:
    """Spin iff the canonical twist is even; then ``O(m)`` is the square root."""
    two_m = canonical_twist_doubled(X)
    if two_m % 2:
        return SpinData(False, None)
    return SpinData(True, two_m // 2)


def even_degree_count(degrees: Iterable[int]) -> int:
    return sum(1 for d in degrees if d % 2 == 0)


def total_degree(X: CompleteIntersection) -> int:
    return prod(X.degrees)


def power_sum(X: CompleteIntersection, j: int) -> int:
    if j < 1:
        raise ValueError(f"power sum index must be >= 1, got {j}")
    return sum(d**j for d in X.degrees)


def chern_series(X: CompleteIntersection) -> TruncatedIntSeries:
    """Total Chern class ``(1+x)^(n+k+1) prod (1 + d_i x)^-1`` in ``Q_n``."""
    n = X.n
    c = binomial_power(n + X.k + 1, n)
    for d in X.degrees:
        c = mul(c, alternating_geometric(d, n))
    return c


def pontryagin_series(X: CompleteIntersection) -> TruncatedIntSeries:
    """Total Pontryagin class ``(1+x^2)^(n+k+1) prod (1 + d_i^2 x^2)^-1`` in ``Q_n``."""
    half = X.n // 2
    p = binomial_power(X.n + X.k + 1, half)
    for d in X.degrees:
        p = mul(p, alternating_geometric(d * d, half))
    return p.substitute_power(2, X.n)


def euler_characteristic(X: CompleteIntersection) -> int:
    """Top Chern number: ``d_tot`` times the ``x^n`` coefficient of ``c(TX)``."""
    return total_degree(X) * chern_series(X).coefficient(X.n)


def euler_characteristic_curve(X: CompleteIntersection) -> int:
    """Closed form ``(2 + k - sigma_1) d_tot`` for curves."""
    if X.n != 1:
        raise ValueError("closed form only applies to curves (n = 1)")
    return (2 + X.k - sum(X.degrees)) * total_degree(X)


@dataclass(frozen=True, order=True)
class InvariantProfile:
    """Dimension, total degree and the normalized even power sums ``sigma_2j - k``.

    For ``n >= 3`` two complete intersections of the same dimension share
    their Pontryagin classes and total degree exactly when their profiles are
    equal.  Padding a multi-degree with 1s leaves the profile unchanged.
    """

    n: int
    d_tot: int
    normalized_power_sums: tuple[int, ...]

    @property
    def diffeomorphism_invariant(self) -> bool:
        return self.n >= 3

    def key(self) -> str:
        sums = ",".join(str(s) for s in self.normalized_power_sums)
        return f"{self.n}:{self.d_tot}:{sums}"

    @classmethod
    def from_key(cls, key: str) -> InvariantProfile:
        n, d_tot, sums = key.split(":")
        values = tuple(int(s) for s in sums.split(",")) if sums else ()
        return cls(int(n), int(d_tot), values)

    def __str__(self) -> str:
        return self.key()


def invariant_profile(X: CompleteIntersection) -> InvariantProfile:
    k = X.k
    sums = tuple(power_sum(X, 2 * j) - k for j in range(1, X.n // 2 + 1))
    return InvariantProfile(X.n, total_degree(X), sums)
