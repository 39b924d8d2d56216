"""Closed-form constants and regime classification for the equation

    div(|grad u|^(p-2) grad u) + a * u^sigma = 0

on an n-dimensional space with Ricci curvature bounded below by -(n-1)K.

Everything here is pure 64-bit floating-point arithmetic on smooth algebraic
expressions; comparisons in tests use a 1e-12 tolerance.  The two gradient
estimates the package verifies are referred to throughout as "thm1" (the one
requiring 1 < p < 2n-1 and sigma inside the (sigma2, sigma1) window matched
to the sign of a) and "thm2" (the one requiring only p > 1 and the
sign-matched comparison of sigma with (n+2)(p-1)/n).
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

import numpy as np

from .errors import ParameterError, RegimeError

__all__ = [
    "EquationParams",
    "RegimeReport",
    "MoserExponents",
    "alpha",
    "discriminant",
    "sigma1",
    "sigma2",
    "sigma_midpoint",
    "beta",
    "thm2_threshold",
    "thm2_condition",
    "compare_thresholds",
    "classify_regime",
    "moser_exponents",
]


@dataclass(frozen=True)
class EquationParams:
    """The quadruple (n, p, a, sigma) defining the PDE and its regime.

    n : integer dimension, >= 3
    p : exponent of the p-Laplacian, > 1
    a : nonzero coefficient of the zeroth-order term
    sigma : nonzero exponent of the zeroth-order term
    """

    n: int
    p: float
    a: float
    sigma: float

    def __post_init__(self):
        if not isinstance(self.n, (int, np.integer)) or isinstance(self.n, bool):
            raise ParameterError(f"n must be an integer, got {self.n!r}")
        if self.n < 3:
            raise ParameterError(f"n must be >= 3, got {self.n}")
        if not self.p > 1:
            raise ParameterError(f"p must be > 1, got {self.p}")
        if self.a == 0:
            raise ParameterError("a must be nonzero")
        if self.sigma == 0:
            raise ParameterError("sigma must be nonzero")

    def to_dict(self):
        return {"n": self.n, "p": self.p, "a": self.a, "sigma": self.sigma}


def _check_p_window(n, p):
    if not (isinstance(n, (int, np.integer)) and not isinstance(n, bool)) or n < 3:
        raise ParameterError(f"n must be an integer >= 3, got {n!r}")
    if not 1 < p < 2 * n - 1:
        raise RegimeError(f"p must satisfy 1 < p < 2n-1 = {2 * n - 1}, got p = {p}")


def alpha(n: int, p: float) -> float:
    """Hessian lower-bound coefficient, piecewise in p.

    Equals n(p-1)^2/(n-1) for p <= 3 - 2/n and 2(p-1) above; the two
    branches agree at the junction.  Strictly positive on 1 < p < 2n-1.
    """
    _check_p_window(n, p)
    if p <= 3 - 2 / n:
        return n * (p - 1) ** 2 / (n - 1)
    return 2 * (p - 1)


def discriminant(n: int, p: float) -> float:
    """1 - (p-1)^2 / ((n-1) alpha), guaranteed in (0, 1] for 1 < p < 2n-1.

    On the first alpha branch this simplifies to 1 - 1/n; it decreases to 0
    as p approaches 2n-1.
    """
    d = 1 - (p - 1) ** 2 / ((n - 1) * alpha(n, p))
    if d <= 0:  # cannot happen inside the p-window; guard for rounding
        raise RegimeError(f"discriminant nonpositive at n={n}, p={p}")
    return d


def sigma_midpoint(n: int, p: float) -> float:
    """(n+1)(p-1)/(n-1), the midpoint of the (sigma2, sigma1) window."""
    return (n + 1) * (p - 1) / (n - 1)


def sigma1(n: int, p: float) -> float:
    """Upper sigma threshold (p-1)[(n+1)/(n-1) + (2/(n-1)) sqrt(discriminant)]."""
    return (p - 1) * ((n + 1) / (n - 1) + 2 / (n - 1) * math.sqrt(discriminant(n, p)))


def sigma2(n: int, p: float) -> float:
    """Lower sigma threshold (p-1)[(n+1)/(n-1) - (2/(n-1)) sqrt(discriminant)]."""
    return (p - 1) * ((n + 1) / (n - 1) - 2 / (n - 1) * math.sqrt(discriminant(n, p)))


def beta(n: int, p: float, sigma: float, sign_of_a: float) -> float:
    """Coefficient of the f^2 energy term in the integral inequality.

    Equals p/(n-1) when sigma lies on the unconditional side of the window
    midpoint (below it for a > 0, above it for a < 0); on the conditional
    side a quadratic penalty in sigma is subtracted.  Always in (0, p/(n-1)]
    inside the applicability window, and tends to 0 at the window endpoint.

    ``sign_of_a`` may be any nonzero real; only its sign is used.
    """
    _check_p_window(n, p)
    if sign_of_a == 0:
        raise ParameterError("sign_of_a must be nonzero")
    mid = sigma_midpoint(n, p)
    full = p / (n - 1)
    if sign_of_a > 0:
        if sigma >= sigma1(n, p):
            raise RegimeError(
                f"sigma = {sigma} is outside the a>0 window (requires sigma < "
                f"sigma1 = {sigma1(n, p):.12g})"
            )
        if sigma <= mid:
            return full
    else:
        if sigma <= sigma2(n, p):
            raise RegimeError(
                f"sigma = {sigma} is outside the a<0 window (requires sigma > "
                f"sigma2 = {sigma2(n, p):.12g})"
            )
        if sigma > mid:
            return full
    penalty = (
        p
        * ((sigma / (p - 1) - 1) - 2 / (n - 1)) ** 2
        / (4 / (n - 1) * discriminant(n, p))
    )
    return full - penalty


def thm2_threshold(n: int, p: float) -> float:
    """(n+2)(p-1)/n, the sigma threshold of the second gradient estimate."""
    if not p > 1:
        raise ParameterError(f"p must be > 1, got {p}")
    return (n + 2) * (p - 1) / n


def thm2_condition(n: int, p: float, sigma: float, sign_of_a: float) -> bool:
    """True iff (a > 0 and sigma <= (n+2)(p-1)/n) or (a < 0 and sigma >= it).

    Both comparisons are inclusive at the threshold.
    """
    if sign_of_a == 0:
        raise ParameterError("sign_of_a must be nonzero")
    t = thm2_threshold(n, p)
    return sigma <= t if sign_of_a > 0 else sigma >= t


def compare_thresholds(n: int, p: float):
    """Return (thm2_threshold, sigma1, strict) for 1 < p < 2n-1.

    The first threshold always lies strictly below sigma1 inside the
    p-window; ``strict`` records the comparison and a failure raises.
    """
    t = thm2_threshold(n, p)
    s1 = sigma1(n, p)  # raises RegimeError for p outside (1, 2n-1)
    strict = t < s1
    if not strict:
        raise RegimeError(
            f"threshold ordering violated at n={n}, p={p}: {t} >= {s1}"
        )
    return t, s1, strict


@dataclass(frozen=True)
class RegimeReport:
    """Full regime classification of one parameter quadruple.

    alpha/sigma1/sigma2 (and beta) are None when p >= 2n-1, where the first
    estimate does not apply at all.  beta is present iff thm1_applicable.
    """

    alpha: float | None
    sigma1: float | None
    sigma2: float | None
    thm2_threshold: float
    beta: float | None
    thm1_applicable: bool
    thm2_applicable: bool
    nonexistence_thm1: bool
    nonexistence_thm2: bool

    def to_dict(self):
        return {
            "alpha": self.alpha,
            "sigma1": self.sigma1,
            "sigma2": self.sigma2,
            "thm2_threshold": self.thm2_threshold,
            "beta": self.beta,
            "thm1_applicable": self.thm1_applicable,
            "thm2_applicable": self.thm2_applicable,
            "nonexistence_thm1": self.nonexistence_thm1,
            "nonexistence_thm2": self.nonexistence_thm2,
        }

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.to_dict(), **kwargs)


def classify_regime(params: EquationParams) -> RegimeReport:
    """Evaluate every threshold and applicability flag for one quadruple.

    The sigma windows are open at their outer endpoints: at sigma = sigma1
    (a > 0) or sigma = sigma2 (a < 0) beta degenerates to 0 and the first
    estimate is classified as not applicable.
    """
    n, p, a, s = params.n, params.p, params.a, params.sigma
    in_p_window = 1 < p < 2 * n - 1
    if in_p_window:
        al, s1, s2 = alpha(n, p), sigma1(n, p), sigma2(n, p)
        thm1 = (a > 0 and s < s1) or (a < 0 and s > s2)
        b = beta(n, p, s, a) if thm1 else None
    else:
        al = s1 = s2 = b = None
        thm1 = False
    thm2 = thm2_condition(n, p, s, a)
    return RegimeReport(
        alpha=al,
        sigma1=s1,
        sigma2=s2,
        thm2_threshold=thm2_threshold(n, p),
        beta=b,
        thm1_applicable=thm1,
        thm2_applicable=thm2,
        nonexistence_thm1=thm1,
        nonexistence_thm2=thm2,
    )


@dataclass(frozen=True)
class MoserExponents:
    """Geometric exponent ladder b_l and its partial sums.

    b[l-1] holds b_l; the infinite sums of 1/b_l and l/b_l have the closed
    forms n/(2 b_1) and n^2/(4 b_1), and ``tail_inv``/``tail_l_inv`` bound
    the truncation error of the stored partial sums.
    """

    b: np.ndarray
    partial_sum_inv: float
    partial_sum_l_inv: float
    limit_inv: float
    limit_l_inv: float
    tail_inv: float
    tail_l_inv: float


def moser_exponents(n: int, p: float, b0: float, L: int) -> MoserExponents:
    """Build b_1 = (b0 + 2 - 2/p) n/(n-2) and b_{l+1} = b_l n/(n-2), l <= L."""
    if not (isinstance(n, (int, np.integer)) and n >= 3):
        raise ParameterError(f"n must be an integer >= 3, got {n!r}")
    if not p > 1:
        raise ParameterError(f"p must be > 1, got {p}")
    if not b0 > 0:
        raise ParameterError(f"b0 must be positive, got {b0}")
    if not (isinstance(L, (int, np.integer)) and L >= 1):
        raise ParameterError(f"L must be an integer >= 1, got {L!r}")
    ratio = n / (n - 2)
    b1 = (b0 + 2 - 2 / p) * ratio
    b = np.empty(L)
    b[0] = b1
    for idx in range(1, L):  # literal recurrence, so b[l+1]/b[l] is exact
        b[idx] = b[idx - 1] * ratio
    ells = np.arange(1, L + 1, dtype=float)
    q = 1 / ratio  # (n-2)/n < 1
    # tails of sum q^(l-1)/b1 and sum l q^(l-1)/b1 beyond l = L
    tail_inv = q**L / b1 * n / 2
    tail_l_inv = q**L * ((L + 1) - L * q) / (1 - q) ** 2 / b1
    return MoserExponents(
        b=b,
        partial_sum_inv=float(np.sum(1 / b)),
        partial_sum_l_inv=float(np.sum(ells / b)),
        limit_inv=n / (2 * b1),
        limit_l_inv=n**2 / (4 * b1),
        tail_inv=float(tail_inv),
        tail_l_inv=float(tail_l_inv),
    )
