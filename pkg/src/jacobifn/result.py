"""Shared result container for numerical evaluations."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class EvalResult:
    """Complex value with an a-posteriori error estimate and provenance.

    ``provenance`` names the representation, rule, or path that produced the
    value (e.g. "rep1", "gauss-jacobi-64", "tanh-sinh-7").
    """

    value: complex
    abs_error_estimate: float
    provenance: str
