"""Exact symbolic engine for M-invariant forms on SU(n+1,1)/M and the Poisson-kernel families."""

__version__ = "0.1.0"

from .scalars import I_UNIT, ONE, ZERO, Scalar, parse_scalar  # noqa: E402
from .exterior import Multiform, Stratum, conjugate, insert, layout, wedge  # noqa: E402
from .lie_model import ConfigurationError, LieModel, buildModel, pairingB, quotientBracket  # noqa: E402
from .calculus import basic_forms, dK, dP, delK, delKbar, invariantSubspace, pCodifferential  # noqa: E402
from .hodge import deltaK, delBarStarK, delStarK, hodgeStarK, lefschetzK, lefschetzKAdjoint  # noqa: E402
from .kernels import DomainError, kappa, kernelHigh, kernelLow, kernelReal, omegaJ  # noqa: E402

__all__ = [
    "__version__",
    "Scalar", "ZERO", "ONE", "I_UNIT", "parse_scalar",
    "Multiform", "Stratum", "wedge", "insert", "conjugate", "layout",
    "LieModel", "ConfigurationError", "buildModel", "quotientBracket", "pairingB",
    "basic_forms", "dK", "dP", "delK", "delKbar", "pCodifferential", "invariantSubspace",
    "hodgeStarK", "deltaK", "delStarK", "delBarStarK", "lefschetzK", "lefschetzKAdjoint",
    "DomainError", "kappa", "omegaJ", "kernelLow", "kernelHigh", "kernelReal",
]
