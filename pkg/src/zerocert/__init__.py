"""Certified counting and localisation of invertible zeros on [-1, 1]^d."""

from .c1name import AnalyticName, C1Name, PolynomialName
from .certifier import CertifierConfig, Outcome, ZeroReport, certify
from .poly import Polynomial
from .specfile import SpecError, parse_spec, validate_spec

__all__ = [
    "AnalyticName",
    "C1Name",
    "CertifierConfig",
    "Outcome",
    "Polynomial",
    "PolynomialName",
    "SpecError",
    "ZeroReport",
    "certify",
    "parse_spec",
    "validate_spec",
]
