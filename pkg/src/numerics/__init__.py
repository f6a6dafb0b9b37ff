"""
Numerics - Stieltjes constants by integral oracle and saddle-point asymptotics
"""

from .asymptotics import (
    gamma_knessl_coffey,
    gamma_leading_order,
    gamma_m_term,
    gamma_one_term,
    mu_n_asymptotic_magnitude,
    saddle_point,
)
from .models import (
    ErrorReport,
    Method,
    QuadratureConfig,
    ReferenceRow,
    ReferenceSource,
    SignedLog,
    StieltjesEstimate,
)
from .quadrature_oracle import gamma_oracle, mu_n
from .reference import load_reference, relative_error

__all__ = [
    "gamma_oracle",
    "mu_n",
    "gamma_one_term",
    "gamma_m_term",
    "gamma_leading_order",
    "gamma_knessl_coffey",
    "mu_n_asymptotic_magnitude",
    "saddle_point",
    "load_reference",
    "relative_error",
    "ErrorReport",
    "Method",
    "QuadratureConfig",
    "ReferenceRow",
    "ReferenceSource",
    "SignedLog",
    "StieltjesEstimate",
]
