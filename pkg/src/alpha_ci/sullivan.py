"""Exhaustive checks that alpha depends only on n, d_tot and Pontryagin classes.

For two spin complete intersections ``X = X_n(d)`` and ``X' = X_n(d')`` with
``n = 1 (mod 4)``, the same total degree and the same Pontryagin classes, put

    q = d_tot * (sigma_(n+1)(d) - sigma_(n+1)(d'))      (after padding with 1s)
    rho = 2 + nu_2((n+1)!)

Then ``alpha(X) - alpha(X') = q / 2^rho (mod 2)``; in particular the alphas
agree whenever ``2^(rho+1)`` divides ``q``.  :func:`scan` enumerates a box of
multi-degrees, groups them by :class:`~alpha_ci.topology.InvariantProfile`
and checks both statements on every pair.
"""

from __future__ import annotations

import csv
import io
import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations, combinations_with_replacement
from typing import Any, Iterator, Sequence

from .alpha import alpha
from .errors import NotSpinError
from .numtheory import nu2_factorial, nu_p
from .topology import (
    CompleteIntersection,
    InvariantProfile,
    even_degree_count,
    invariant_profile,
    power_sum,
    total_degree,
)

SCHEMA = "alpha-ci/scan-report/v1"
GROUP_KEYS = ("profile", "d_tot")


class HypothesisError(ValueError):
    """The pair does not satisfy the comparison hypotheses."""


class ValuationBelowThresholdError(RuntimeError):
    """``nu_2(q) < rho`` for a pair satisfying the hypotheses.

    The difference formula would then not be 2-adically integral; this can
    only come from a bug in the implementation or in the hypothesis check.
    """


def rho(n: int) -> int:
    return 2 + nu2_factorial(n + 1)


def _check_pair(X: CompleteIntersection, Xp: CompleteIntersection) -> int:
    """Validate the hypotheses and return ``q``."""
    if X.n != Xp.n:
        raise HypothesisError(f"dimensions differ: {X.n} vs {Xp.n}")
    if X.n % 4 != 1:
        raise HypothesisError(f"need n = 1 (mod 4), got n={X.n}")
    for Y in (X, Xp):
        if even_degree_count(Y.degrees) % 2:
            raise NotSpinError(f"{Y} is not spin")
    if invariant_profile(X) != invariant_profile(Xp):
        raise HypothesisError(
            f"{X} and {Xp} differ in total degree or Pontryagin classes"
        )
    e = X.n + 1
    # Padding with 1s adds the same amount to sigma_(n+1) and k.
    diff = (power_sum(X, e) - X.k) - (power_sum(Xp, e) - Xp.k)
    return total_degree(X) * diff


def predict_from_q(q: int, n: int) -> int:
    """``q / 2^rho mod 2``, refusing when ``q / 2^rho`` is not an integer."""
    if q == 0:
        return 0
    v = nu_p(2, q)
    r = rho(n)
    if v < r:
        raise ValuationBelowThresholdError(
            f"nu_2(q) = {v} < rho = {r} for n={n}, q={q}"
        )
    return 1 if v == r else 0


def guarantee_from_q(q: int, n: int) -> bool:
    """True when ``2^(rho+1)`` divides ``q``, forcing equal alphas."""
    if q == 0:
        return True
    v = nu_p(2, q)
    r = rho(n)
    if v < r:
        raise ValuationBelowThresholdError(
            f"nu_2(q) = {v} < rho = {r} for n={n}, q={q}"
        )
    return v >= r + 1


def comparison_value(X: CompleteIntersection, Xp: CompleteIntersection) -> int:
    return _check_pair(X, Xp)


def predicted_alpha_difference(X: CompleteIntersection, Xp: CompleteIntersection) -> int:
    return predict_from_q(_check_pair(X, Xp), X.n)


def divisibility_guarantee(X: CompleteIntersection, Xp: CompleteIntersection) -> bool:
    return guarantee_from_q(_check_pair(X, Xp), X.n)


# -- scan ------------------------------------------------------------------


@dataclass(frozen=True)
class ScanEntry:
    degrees: tuple[int, ...]
    alpha: int

    def to_dict(self) -> dict[str, Any]:
        return {"d": list(self.degrees), "alpha": self.alpha}

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> ScanEntry:
        return cls(tuple(data["d"]), int(data["alpha"]))


@dataclass(frozen=True)
class PairCheck:
    a: tuple[int, ...]
    b: tuple[int, ...]
    q: int
    predicted: int
    guaranteed: bool
    actual: int

    @property
    def ok(self) -> bool:
        return self.predicted == self.actual and (self.actual == 0 or not self.guaranteed)

    def to_dict(self) -> dict[str, Any]:
        return {
            "a": list(self.a),
            "b": list(self.b),
            "q": self.q,
            "predicted": self.predicted,
            "guaranteed": self.guaranteed,
            "actual": self.actual,
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> PairCheck:
        return cls(
            tuple(data["a"]),
            tuple(data["b"]),
            int(data["q"]),
            int(data["predicted"]),
            bool(data["guaranteed"]),
            int(data["actual"]),
        )


@dataclass
class ScanReport:
    n: int
    max_k: int
    max_degree: int
    group_by: str
    groups: dict[str, list[ScanEntry]]
    pair_checks: list[PairCheck]
    violations: list[dict[str, Any]]
    timing: dict[str, Any] = field(default_factory=dict)

    @property
    def multidegree_count(self) -> int:
        return sum(len(g) for g in self.groups.values())

    def summary(self) -> dict[str, int]:
        return {
            "multidegrees": self.multidegree_count,
            "groups": len(self.groups),
            "nontrivial_groups": sum(1 for g in self.groups.values() if len(g) > 1),
            "pairs_checked": len(self.pair_checks),
            "violations": len(self.violations),
        }

    def to_dict(self, include_timing: bool = True) -> dict[str, Any]:
        out: dict[str, Any] = {
            "schema": SCHEMA,
            "box": {"n": self.n, "max_k": self.max_k, "max_degree": self.max_degree},
            "group_by": self.group_by,
            "summary": self.summary(),
            "groups": {
                key: [e.to_dict() for e in entries]
                for key, entries in self.groups.items()
            },
            "pair_checks": [p.to_dict() for p in self.pair_checks],
            "violations": self.violations,
        }
        if include_timing:
            out["timing"] = self.timing
        return out

    def to_json(self, include_timing: bool = True) -> str:
        return json.dumps(self.to_dict(include_timing), indent=2) + "\n"

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> ScanReport:
        if data.get("schema") != SCHEMA:
            raise ValueError(f"unknown report schema {data.get('schema')!r}")
        box = data["box"]
        return cls(
            n=box["n"],
            max_k=box["max_k"],
            max_degree=box["max_degree"],
            group_by=data["group_by"],
            groups={
                key: [ScanEntry.from_dict(e) for e in entries]
                for key, entries in data["groups"].items()
            },
            pair_checks=[PairCheck.from_dict(p) for p in data["pair_checks"]],
            violations=list(data["violations"]),
            timing=dict(data.get("timing", {})),
        )

    @classmethod
    def from_json(cls, text: str) -> ScanReport:
        return cls.from_dict(json.loads(text))

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["key", "size", "alpha", "constant", "members"])
        for key, entries in self.groups.items():
            values = sorted({e.alpha for e in entries})
            writer.writerow(
                [
                    key,
                    len(entries),
                    values[0] if len(values) == 1 else "mixed",
                    len(values) == 1,
                    " ".join(",".join(map(str, e.degrees)) or "()" for e in entries),
                ]
            )
        return buf.getvalue()


def iter_multidegrees(
    max_k: int, max_degree: int, first: int | None = None
) -> Iterator[tuple[int, ...]]:
    """Sorted multi-degrees with entries in ``2..max_degree`` and ``k <= max_k``.

    With ``first`` given, only those whose smallest degree is ``first``
    (``first=0`` selects the empty multi-degree alone).
    """
    if first == 0:
        yield ()
        return
    if first is None:
        yield ()
        for f in range(2, max_degree + 1):
            yield from iter_multidegrees(max_k, max_degree, f)
        return
    for k in range(1, max_k + 1):
        for rest in combinations_with_replacement(range(first, max_degree + 1), k - 1):
            yield (first,) + rest


def _group_key(X: CompleteIntersection, group_by: str) -> tuple:
    p = invariant_profile(X)
    if group_by == "profile":
        return (p.n, p.d_tot, p.normalized_power_sums)
    return (p.n, p.d_tot)


def _format_key(key: tuple) -> str:
    if len(key) == 3:
        return InvariantProfile(*key).key()
    return f"{key[0]}:{key[1]}"


def _scan_shard(args: tuple) -> list[tuple[tuple, tuple[int, ...], int]]:
    n, max_k, max_degree, first, group_by, backends = args
    rows = []
    for d in iter_multidegrees(max_k, max_degree, first):
        if even_degree_count(d) % 2:
            continue
        X = CompleteIntersection(n, d)
        rows.append((_group_key(X, group_by), d, alpha(n, d, backends=backends).value))
    return rows


def _canonical(d: tuple[int, ...]) -> tuple:
    return (len(d), d)


def scan(
    n: int,
    max_k: int,
    max_degree: int,
    workers: int = 1,
    group_by: str = "profile",
    backends: Sequence[str] | None = None,
) -> ScanReport:
    """Enumerate the box, group by invariant key and check every pair.

    Degree-1 entries are excluded since they change neither profile nor alpha.
    The report does not depend on ``workers``; only ``timing`` does.
    ``backends`` narrows the alpha dispatcher (at least two are always run).
    """
    if n < 1 or n % 4 != 1:
        raise ValueError(f"scan needs n = 1 (mod 4), got n={n}")
    if max_k < 1 or max_degree < 1:
        raise ValueError("max_k and max_degree must be >= 1")
    if group_by not in GROUP_KEYS:
        raise ValueError(f"group_by must be one of {GROUP_KEYS}, got {group_by!r}")
    if workers < 1:
        raise ValueError(f"workers must be >= 1, got {workers}")

    start = time.perf_counter()
    backends = None if backends is None else tuple(backends)
    shards = [
        (n, max_k, max_degree, f, group_by, backends)
        for f in [0, *range(2, max_degree + 1)]
    ]
    if workers == 1:
        results = [_scan_shard(s) for s in shards]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_scan_shard, shards))

    buckets: dict[tuple, list[ScanEntry]] = {}
    for rows in results:
        for key, d, a in rows:
            buckets.setdefault(key, []).append(ScanEntry(d, a))

    groups: dict[str, list[ScanEntry]] = {}
    pair_checks: list[PairCheck] = []
    violations: list[dict[str, Any]] = []
    for key in sorted(buckets):
        entries = sorted(buckets[key], key=lambda e: _canonical(e.degrees))
        skey = _format_key(key)
        groups[skey] = entries
        if len({e.alpha for e in entries}) > 1:
            violations.append(
                {
                    "kind": "non_constant_alpha",
                    "key": skey,
                    "members": [e.to_dict() for e in entries],
                }
            )
        for e1, e2 in combinations(entries, 2):
            X1 = CompleteIntersection(n, e1.degrees)
            X2 = CompleteIntersection(n, e2.degrees)
            if invariant_profile(X1) != invariant_profile(X2):
                continue
            q = _check_pair(X1, X2)
            check = PairCheck(
                e1.degrees,
                e2.degrees,
                q,
                predict_from_q(q, n),
                guarantee_from_q(q, n),
                e1.alpha ^ e2.alpha,
            )
            pair_checks.append(check)
            if not check.ok:
                violations.append(
                    {"kind": "predictor_mismatch", "key": skey, **check.to_dict()}
                )

    elapsed = time.perf_counter() - start
    return ScanReport(
        n=n,
        max_k=max_k,
        max_degree=max_degree,
        group_by=group_by,
        groups=groups,
        pair_checks=pair_checks,
        violations=violations,
        timing={"seconds": round(elapsed, 6), "workers": workers},
    )
