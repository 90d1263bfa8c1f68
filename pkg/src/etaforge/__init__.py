"""Exact arithmetic for level-10 eta quotients and their Ramanujan-Fine integrals."""
from .exceptions import EtaforgeError
from .field5 import Poly5, RationalFunction5, Sqrt5Number
from .kernel10 import (
    EtaExponents,
    ParamExponents,
    a_to_e,
    decide_rationality,
    e_to_a,
    is_rational_integral,
    table8,
)
from .qseries import PuiseuxSeries, eta_quotient_series

__version__ = "0.1.0"

__all__ = [
    "EtaforgeError",
    "EtaExponents",
    "ParamExponents",
    "Poly5",
    "PuiseuxSeries",
    "RationalFunction5",
    "Sqrt5Number",
    "a_to_e",
    "decide_rationality",
    "e_to_a",
    "eta_quotient_series",
    "is_rational_integral",
    "table8",
    "__version__",
]
