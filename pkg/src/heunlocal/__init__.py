"""Coefficients and values of the local Heun solution."""

from .bounds import check_envelope
from .closed_form import beta_plus_one_coefficients, closed_form_coefficients, delta0_coefficients
from .errors import (ConvergenceError, DomainError, HeunError, InvalidParameterError, ModeError,
                     NotApplicableError, UnsupportedParameterError, ZeroDenominatorError)
from .jacobi import heun_coefficients_via_green
from .kernels import BACKEND
from .params import HeunCanonicalParams, HeunValentParams, WConvention, from_canonical, to_canonical
from .recurrence import CoefficientTable, Method, recurrence_coefficients, recurrence_coefficients_valent
from .scalar import Mode
from .series import EvalResult, applicable_methods, coefficients, evaluate

__all__ = [
    "BACKEND", "CoefficientTable", "ConvergenceError", "DomainError", "EvalResult", "HeunCanonicalParams",
    "HeunError", "HeunValentParams", "InvalidParameterError", "Method", "Mode", "ModeError",
    "NotApplicableError", "UnsupportedParameterError", "WConvention", "ZeroDenominatorError",
    "applicable_methods", "beta_plus_one_coefficients", "check_envelope", "closed_form_coefficients",
    "coefficients", "delta0_coefficients", "evaluate", "from_canonical", "heun_coefficients_via_green",
    "recurrence_coefficients", "recurrence_coefficients_valent", "to_canonical",
]
