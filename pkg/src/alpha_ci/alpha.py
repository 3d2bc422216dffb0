"""The alpha invariant ``alpha_n(d)`` in Z/2.

Four independent formulas are implemented, each as a separate backend:

``sign_sum``
    ``sum over eps in {+-1}^k of C((n+k+1 + eps.d)/2, n+k+1) mod 2``.
``hilbert``
    parity of the ``t^m`` coefficient of ``(1-t)^-(n+k+1) prod (1 - t^d_i)``,
    where ``2m = -n-k-1 + sum d_i``, computed directly over GF(2).
``partition_sum``
    sum over compositions ``j_1 + ... + j_k = n+1`` of products of binomials.
``fr``
    the ``T^(n+1)`` coefficient of ``f_d1(T) ... f_dk(T)`` in GF(2)[T].

:func:`alpha_abstract` extends the invariant to arbitrary integers ``n`` and
``d_i``; :func:`alpha` is the dispatcher that runs several backends and
refuses to answer if they disagree.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterator, Sequence

from .errors import BackendDisagreementError, NotSpinError
from .numtheory import binomial_mod2, nu_p
from .topology import even_degree_count

GEOMETRIC_BACKENDS = ("sign_sum", "hilbert", "partition_sum", "fr")
ABSTRACT_BACKENDS = ("abstract", "sign_sum", "partition_sum", "fr")

# Practical ceiling for the 2^k sign enumeration.
MAX_SIGN_SUM_K = 24


@dataclass(frozen=True)
class AlphaValue:
    value: int
    backend: str

    def __post_init__(self):
        if self.value not in (0, 1):
            raise ValueError(f"alpha lives in Z/2, got {self.value}")

    def __int__(self) -> int:
        return self.value

    def __eq__(self, other):
        if isinstance(other, AlphaValue):
            return self.value == other.value
        if isinstance(other, int):
            return self.value == other
        return NotImplemented

    def __hash__(self):
        return hash(self.value)


# -- f_r(T) over GF(2) -------------------------------------------------------


def clmul(a: int, b: int, max_degree: int | None = None) -> int:
    """Carry-less product of bit-packed GF(2) polynomials, optionally truncated."""
    if a.bit_length() > b.bit_length():
        a, b = b, a
    mask = -1 if max_degree is None else (1 << (max_degree + 1)) - 1
    b &= mask
    out = 0
    shift = 0
    while a:
        if a & 1:
            out ^= b << shift
        a >>= 1
        shift += 1
        if max_degree is not None and shift > max_degree:
            break
    return out & mask


@dataclass(frozen=True)
class FrPolynomial:
    """Polynomial over GF(2) in the shift variable ``T``; bit ``j`` is ``T^j``."""

    bits: int

    def coefficient(self, j: int) -> int:
        if j < 0:
            return 0
        return (self.bits >> j) & 1

    @property
    def degree(self) -> int:
        return self.bits.bit_length() - 1

    def exponents(self) -> list[int]:
        return [j for j in range(self.bits.bit_length()) if (self.bits >> j) & 1]

    def __mul__(self, other: FrPolynomial) -> FrPolynomial:
        return FrPolynomial(clmul(self.bits, other.bits))

    def __add__(self, other: FrPolynomial) -> FrPolynomial:
        return FrPolynomial(self.bits ^ other.bits)

    def __str__(self) -> str:
        if not self.bits:
            return "0"
        terms = []
        for j in reversed(self.exponents()):
            terms.append("1" if j == 0 else "T" if j == 1 else f"T^{j}")
        return " + ".join(terms)


@lru_cache(maxsize=None)
def _fr_bits(r: int) -> int:
    prev, cur = 0, 1
    if r == 0:
        return 0
    for _ in range(r - 1):
        prev, cur = cur, (cur << 1) ^ prev
    return cur


def fr_polynomial(r: int) -> FrPolynomial:
    """``f_0 = 0``, ``f_1 = 1``, ``f_r = T f_(r-1) + f_(r-2)`` over GF(2)."""
    if r < 0:
        raise ValueError(f"r must be >= 0, got {r}")
    return FrPolynomial(_fr_bits(r))


def fr_polynomial_closed(r: int) -> FrPolynomial:
    """Closed form: the ``T^j`` coefficient is ``C(r + j, 2j + 1) mod 2``."""
    if r < 0:
        raise ValueError(f"r must be >= 0, got {r}")
    bits = 0
    for j in range(r):
        if binomial_mod2(r + j, 2 * j + 1):
            bits |= 1 << j
    return FrPolynomial(bits)


# -- backends ----------------------------------------------------------------


def _twice_m(n: int, d: Sequence[int]) -> int:
    return -n - len(d) - 1 + sum(d)


def _gray_dot_products(d: Sequence[int]) -> Iterator[int]:
    """Yield ``eps . d`` for every sign vector, one sign flip per step."""
    k = len(d)
    if k > MAX_SIGN_SUM_K:
        raise ValueError(f"sign enumeration limited to k <= {MAX_SIGN_SUM_K}, got {k}")
    s = sum(d)
    signs = [1] * k
    yield s
    for i in range(1, 1 << k):
        b = (i & -i).bit_length() - 1
        s -= 2 * signs[b] * d[b]
        signs[b] = -signs[b]
        yield s


def alpha_sign_sum(n: int, d: Sequence[int]) -> AlphaValue:
    """Symmetric sign sum of binomials ``C((N + eps.d)/2, N)``, ``N = n+k+1``."""
    if n < -1 or _twice_m(n, d) % 2:
        return AlphaValue(0, "sign_sum")
    top = n + len(d) + 1
    acc = 0
    for s in _gray_dot_products(d):
        acc ^= binomial_mod2((top + s) // 2, top)
    return AlphaValue(acc, "sign_sum")


def alpha_sign_sum_half(n: int, d: Sequence[int]) -> AlphaValue:
    """Sign sum with ``eps_1 = +1`` fixed: ``C((n+k-1 + eps.d)/2, n+k)``."""
    if not d:
        return AlphaValue(alpha_sign_sum(n, d).value, "sign_sum_half")
    if n < -1 or _twice_m(n, d) % 2:
        return AlphaValue(0, "sign_sum_half")
    top = n + len(d)
    first, rest = d[0], d[1:]
    acc = 0
    for s in _gray_dot_products(rest):
        acc ^= binomial_mod2((top - 1 + first + s) // 2, top)
    return AlphaValue(acc, "sign_sum_half")


def _inverse_geometric_bits(e: int, order: int) -> int:
    """``(1-t)^-e mod 2`` up to ``t^order`` as a bitmask.

    ``C(j+e-1, j)`` is odd iff ``j & (e-1) == 0`` (Lucas), so the support is
    every ``j`` built from bits absent in ``e-1``.
    """
    bits = 1
    mask = e - 1
    for b in range(order.bit_length()):
        if not (mask >> b) & 1:
            bits |= bits << (1 << b)
    return bits & ((1 << (order + 1)) - 1)


def _k_coefficient_mod2(n: int, d: Sequence[int], m: int) -> int:
    """Parity of the ``t^m`` coefficient of ``(1-t)^-(n+k+1) prod (1 + t^d_i)``."""
    if m < 0:
        return 0
    window = (1 << (m + 1)) - 1
    bits = _inverse_geometric_bits(n + len(d) + 1, m)
    for di in d:
        if di <= m:
            bits ^= (bits << di) & window
    return (bits >> m) & 1


def alpha_hilbert(n: int, d: Sequence[int]) -> AlphaValue:
    """Parity of ``dim H^0(X_n(d); O(m))`` read off the Hilbert series."""
    if any(di < 1 for di in d):
        raise ValueError(f"Hilbert backend needs degrees >= 1, got {tuple(d)}")
    two_m = _twice_m(n, d)
    if n < -1 or two_m % 2:
        return AlphaValue(0, "hilbert")
    return AlphaValue(_k_coefficient_mod2(n, d, two_m // 2), "hilbert")


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def alpha_partition_sum(n: int, d: Sequence[int]) -> AlphaValue:
    """Sum over compositions of ``n+1``; both binomial forms must agree.

    The full form uses ``prod C(d_i + j_i, 2 j_i + 1)``; the restricted form
    only keeps ``j_i + d_i`` odd and uses ``prod C((d_i + j_i - 1)/2, j_i)``.
    """
    full = 0
    restricted = 0
    for js in _compositions(n + 1, len(d)) if n >= -1 else ():
        term = 1
        for di, j in zip(d, js):
            if not binomial_mod2(di + j, 2 * j + 1):
                term = 0
                break
        full ^= term
        if all((di + j) & 1 for di, j in zip(d, js)):
            term = 1
            for di, j in zip(d, js):
                if not binomial_mod2((di + j - 1) // 2, j):
                    term = 0
                    break
            restricted ^= term
    if full != restricted:
        raise BackendDisagreementError(
            "alpha", n, d, {"partition_full": full, "partition_restricted": restricted}
        )
    return AlphaValue(full, "partition_sum")


def alpha_fr(n: int, d: Sequence[int]) -> AlphaValue:
    """``T^(n+1)`` coefficient of ``prod f_(d_i)(T)``, truncated as it goes."""
    if any(di < 0 for di in d):
        raise ValueError(f"f_r backend needs degrees >= 0, got {tuple(d)}")
    top = n + 1
    if top < 0:
        return AlphaValue(0, "fr")
    acc = 1
    for di in d:
        acc = clmul(acc, _fr_bits(di), top)
        if not acc:
            break
    return AlphaValue((acc >> top) & 1, "fr")


def alpha_abstract(n: int, d: Sequence[int]) -> AlphaValue:
    """Abstract alpha for arbitrary integers ``n`` and ``d_i``.

    Zero if some ``d_i = 0``, if ``n < -1`` or if ``-n-k-1 + sum d_i`` is odd.
    Otherwise the ``t^m`` coefficient of ``(1-t)^-(n+k+1) prod (1 + t^|d_i|)``
    mod 2, with ``2m`` recomputed from the ``|d_i|``.  A negative ``m`` gives 0.
    """
    if n < -1 or any(di == 0 for di in d):
        return AlphaValue(0, "abstract")
    d = [abs(di) for di in d]
    two_m = _twice_m(n, d)
    if two_m % 2:
        return AlphaValue(0, "abstract")
    return AlphaValue(_k_coefficient_mod2(n, d, two_m // 2), "abstract")


def alpha_n1_closed(d: Sequence[int]) -> AlphaValue:
    """``alpha_1`` from the total degree alone.

    ``nu_2(d_tot) >= 3`` gives 0, ``= 2`` gives 1; for odd ``d_tot`` the value
    is 0 iff ``d_tot = +-1 (mod 8)``.
    """
    if any(di < 1 for di in d):
        raise ValueError(f"degrees must be >= 1, got {tuple(d)}")
    if even_degree_count(d) % 2:
        raise NotSpinError(
            "an odd number of even degrees has no distinguished spin structure"
        )
    d_tot = 1
    for di in d:
        d_tot *= di
    v = nu_p(2, d_tot)
    if v >= 3:
        value = 0
    elif v == 2:
        value = 1
    elif v == 0:
        value = 0 if d_tot % 8 in (1, 7) else 1
    else:  # unreachable given the parity check above
        raise NotSpinError(f"nu_2(d_tot) = 1 for d = {tuple(d)}")
    return AlphaValue(value, "n1_closed")


def _fr_abs(n: int, d: Sequence[int]) -> AlphaValue:
    return alpha_fr(n, [abs(di) for di in d])


BACKENDS: dict[str, Callable[[int, Sequence[int]], AlphaValue]] = {
    "sign_sum": alpha_sign_sum,
    "sign_sum_half": alpha_sign_sum_half,
    "hilbert": alpha_hilbert,
    "partition_sum": alpha_partition_sum,
    "fr": _fr_abs,
    "abstract": alpha_abstract,
}


def check_geometric(n: int, d: Sequence[int]) -> None:
    """Reject inputs that are not spin complete intersections with ``n = 1 mod 4``."""
    if n < 1 or n % 4 != 1:
        raise ValueError(f"alpha is a Z/2 invariant only for n = 1 (mod 4), got n={n}")
    if any(di < 1 for di in d):
        raise ValueError(f"degrees must be >= 1, got {tuple(d)}")
    if even_degree_count(d) % 2:
        raise NotSpinError(
            f"X_{n}{tuple(d)} is not spin: an odd number of degrees are even"
        )


def alpha_all(
    n: int,
    d: Sequence[int],
    *,
    abstract: bool = False,
    backends: Sequence[str] | None = None,
) -> dict[str, AlphaValue]:
    """Evaluate each requested backend; no agreement check."""
    d = tuple(d)
    if not abstract:
        check_geometric(n, d)
    if backends is None:
        backends = ABSTRACT_BACKENDS if abstract else GEOMETRIC_BACKENDS
    out = {name: BACKENDS[name](n, d) for name in backends}
    if not abstract and n == 1:
        out["n1_closed"] = alpha_n1_closed(d)
    return out


def alpha(
    n: int,
    d: Sequence[int],
    *,
    abstract: bool = False,
    backends: Sequence[str] | None = None,
) -> AlphaValue:
    """Alpha invariant cross-checked across backends.

    In geometric mode ``n = 1 (mod 4)`` and the multi-degree must be spin; for
    ``n = 1`` the closed form in ``d_tot`` is added as a further check.  With
    ``abstract=True`` any integers are accepted.
    """
    results = alpha_all(n, d, abstract=abstract, backends=backends)
    if len(results) < 2:
        raise ValueError("the dispatcher needs at least two backends")
    values = {name: r.value for name, r in results.items()}
    if len(set(values.values())) != 1:
        raise BackendDisagreementError("alpha", n, d, values)
    return AlphaValue(next(iter(values.values())), "+".join(results))
