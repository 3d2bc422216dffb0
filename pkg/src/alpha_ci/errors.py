from __future__ import annotations

from typing import Sequence


class NotSpinError(ValueError):
    """The multi-degree does not define a spin complete intersection."""


class BackendDisagreementError(RuntimeError):
    """Two independent formulas returned different values (an implementation bug)."""

    def __init__(self, what: str, n: int, degrees: Sequence[int], values: dict[str, int]):
        self.what = what
        self.n = n
        self.degrees = tuple(degrees)
        self.values = dict(values)
        super().__init__(
            f"{what} backends disagree for n={n}, d={self.degrees}: {self.values}"
        )
