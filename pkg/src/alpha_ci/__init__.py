"""Alpha invariant and A-hat genus of smooth complex complete intersections."""

from .ahat import AhatValue, ahat, ahat_hilbert, ahat_sign_sum
from .alpha import (
    AlphaValue,
    FrPolynomial,
    alpha,
    alpha_abstract,
    alpha_all,
    alpha_fr,
    alpha_hilbert,
    alpha_n1_closed,
    alpha_partition_sum,
    alpha_sign_sum,
    fr_polynomial,
    fr_polynomial_closed,
)
from .errors import BackendDisagreementError, NotSpinError
from .numtheory import binomial, binomial_mod2, nu2_factorial, nu_p
from .sullivan import (
    ScanReport,
    divisibility_guarantee,
    predicted_alpha_difference,
    rho,
    scan,
)
from .topology import (
    CompleteIntersection,
    InvariantProfile,
    euler_characteristic,
    invariant_profile,
    is_spin,
)

__version__ = "0.1.0"

__all__ = [
    "AhatValue",
    "AlphaValue",
    "BackendDisagreementError",
    "CompleteIntersection",
    "FrPolynomial",
    "InvariantProfile",
    "NotSpinError",
    "ScanReport",
    "ahat",
    "ahat_hilbert",
    "ahat_sign_sum",
    "alpha",
    "alpha_abstract",
    "alpha_all",
    "alpha_fr",
    "alpha_hilbert",
    "alpha_n1_closed",
    "alpha_partition_sum",
    "alpha_sign_sum",
    "binomial",
    "binomial_mod2",
    "divisibility_guarantee",
    "euler_characteristic",
    "fr_polynomial",
    "fr_polynomial_closed",
    "invariant_profile",
    "is_spin",
    "nu2_factorial",
    "nu_p",
    "predicted_alpha_difference",
    "rho",
    "scan",
]
