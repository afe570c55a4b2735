"""Integration and differentiation oracles.

* Gauss-Jacobi rules (Golub-Welsch) for weighted integrals on [-1, 1] with
  endpoint singularities absorbed into the weight.
* Improper integrals along a ray via the u/(1-u) compactification followed
  by tanh-sinh quadrature, which tolerates the algebraic endpoint behavior
  the substitution creates at u = 1.
* Reduction of n-fold iterated integrals to a single weighted integral via
  the repeated-integration kernel, in the measure's own antiderivative
  variable.
* Cauchy-contour derivatives by trapezoid sums on circles, with geometric
  convergence and multi-order reuse of the sampled values.

All routines are pure; Gauss rules are memoized in a table that is only
appended to, so concurrent readers are safe.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import (
    CutIntersection,
    DecayCheckFailed,
    ExponentError,
    NonConvergence,
    OrderCapExceeded,
)
from .result import EvalResult

FLAT = "flat"
INV_SQ_MINUS = "inv_sq_minus"
INV_SQ_PLUS = "inv_sq_plus"

_RULE_SIZES = (8, 16, 32, 64, 128, 256)
_RULE_TABLE: dict[tuple[int, float, float], "QuadratureRule"] = {}


@dataclass(frozen=True)
class QuadratureRule:
    """Nodes/weights for the weight (1-t)^a (1+t)^b on (-1, 1)."""

    nodes: np.ndarray
    weights: np.ndarray
    exponent_a: float
    exponent_b: float


def gauss_jacobi_rule(m: int, a: float, b: float) -> QuadratureRule:
    """m-point Gauss-Jacobi rule, exact for polynomial degree <= 2m-1.

    Golub-Welsch: eigen-decompose the symmetric tridiagonal matrix of the
    three-term recurrence for the weight (1-t)^a (1+t)^b.
    """
    if m < 1:
        raise ValueError("rule size must be >= 1")
    if a <= -1.0 or b <= -1.0:
        raise ExponentError(f"weight exponents must exceed -1, got ({a}, {b})")
    key = (int(m), float(a), float(b))
    hit = _RULE_TABLE.get(key)
    if hit is not None:
        return hit

    ab = a + b
    diag = np.zeros(m)
    if ab + 2.0 != 0.0:
        diag[0] = (b - a) / (ab + 2.0)
    for k in range(1, m):
        diag[k] = (b * b - a * a) / ((2 * k + ab) * (2 * k + ab + 2.0))
    off = np.zeros(m - 1)
    for k in range(1, m):
        if k == 1:
            # (k + ab) / (2k + ab - 1) cancels algebraically at k = 1.
            val = 4.0 * (1 + a) * (1 + b) / ((2 + ab) ** 2 * (3 + ab))
        else:
            val = (
                4.0 * k * (k + a) * (k + b) * (k + ab)
                / ((2 * k + ab) ** 2 * (2 * k + ab + 1.0) * (2 * k + ab - 1.0))
            )
        off[k - 1] = math.sqrt(val)

    if m == 1:
        nodes = diag.copy()
        first = np.ones(1)
    else:
        jac = np.diag(diag) + np.diag(off, 1) + np.diag(off, -1)
        eigval, eigvec = np.linalg.eigh(jac)
        nodes = eigval
        first = eigvec[0, :]

    mu0 = math.exp(
        (ab + 1.0) * math.log(2.0)
        + math.lgamma(a + 1.0)
        + math.lgamma(b + 1.0)
        - math.lgamma(ab + 2.0)
    )
    weights = mu0 * first**2
    order = np.argsort(nodes)
    rule = QuadratureRule(nodes[order], weights[order], float(a), float(b))
    _RULE_TABLE[key] = rule
    return rule


def integrate_finite(
    f: Callable[[float], complex],
    a_endpoint_exp: float,
    b_endpoint_exp: float,
    *,
    rtol: float = 1e-11,
) -> EvalResult:
    """Integral of f(t) (1-t)^a (1+t)^b over [-1, 1] by rule doubling.

    f is the smooth factor only; the endpoint weight is absorbed by the rule.
    """
    if a_endpoint_exp <= -1.0 or b_endpoint_exp <= -1.0:
        raise ExponentError("endpoint exponents must exceed -1")
    prev = None
    delta = math.inf
    for m in _RULE_SIZES:
        rule = gauss_jacobi_rule(m, a_endpoint_exp, b_endpoint_exp)
        total = 0.0 + 0.0j
        for t, w in zip(rule.nodes, rule.weights):
            total += w * f(t)
        if prev is not None:
            delta = abs(total - prev)
            if delta <= rtol * max(abs(total), 1e-300):
                return EvalResult(total, delta, f"gauss-jacobi-{m}")
        prev = total
    if delta > 1e-8 * max(abs(prev), 1e-300):
        raise NonConvergence(
            f"doubling stalled at {_RULE_SIZES[-1]} nodes (rel change {delta / max(abs(prev), 1e-300):.2e})"
        )
    return EvalResult(prev, delta, f"gauss-jacobi-{_RULE_SIZES[-1]}")


# --- tanh-sinh machinery for the compactified ray ---------------------------

# |t| cap keeps u/(1-u) below ~1e75 so integrand factors with algebraic
# growth stay inside double range.
_TS_TMAX = 4.7
_TS_MAX_LEVEL = 11


def _ts_point(t: float) -> tuple[float, float, float]:
    """Return (u, 1-u, du/dt) of the tanh-sinh map onto (0, 1)."""
    s = 0.5 * math.pi * math.sinh(t)
    # u = (1 + tanh(s)) / 2 computed without cancellation at either end.
    e2s = math.exp(2.0 * s)
    u = e2s / (1.0 + e2s) if s < 0 else 1.0 / (1.0 + math.exp(-2.0 * s))
    one_minus_u = 1.0 / (1.0 + e2s)
    sech = 2.0 / (math.exp(s) + math.exp(-s))
    dudt = 0.25 * math.pi * math.cosh(t) * sech * sech
    return u, one_minus_u, dudt


def _decay_check(f: Callable[[complex], complex], start: complex) -> None:
    """Reject integrands whose sampled tail fails |f| * t^1.01 decay."""
    ts = [2.0**j for j in range(4, 21, 2)]
    gs = [abs(f(start + t)) * t**1.01 for t in ts]
    floor = 1e-280
    tail = gs[-4:]
    if all(g < floor for g in tail):
        return
    for older, newer in zip(tail, tail[1:]):
        if newer > 1.01 * older + floor:
            raise DecayCheckFailed(
                f"sampled tail grows: |f|*t^1.01 went {older:.3e} -> {newer:.3e}"
            )


def integrate_to_infinity(
    f: Callable[[complex], complex],
    start: complex,
    *,
    rtol: float = 1e-11,
) -> EvalResult:
    """Integral of f along the ray start + t, t in [0, oo).

    Substitutes t = u/(1-u) and runs tanh-sinh on u in (0, 1), doubling the
    node density until two levels agree.
    """
    start = complex(start)
    _decay_check(f, start)

    def g(t: float) -> complex:
        u, omu, dudt = _ts_point(t)
        return f(start + u / omu) * dudt / (omu * omu)

    h = 1.0
    total = g(0.0)
    k = 1
    while k * h <= _TS_TMAX:
        total += g(k * h) + g(-k * h)
        k += 1
    total *= h
    prev = None
    delta = math.inf
    for level in range(1, _TS_MAX_LEVEL + 1):
        h *= 0.5
        add = 0.0 + 0.0j
        k = 1
        while k * h <= _TS_TMAX:
            t = k * h
            add += g(t) + g(-t)
            k += 2
        total = 0.5 * total + h * add
        if prev is not None:
            delta = abs(total - prev)
            if delta <= rtol * max(abs(total), 1e-300):
                return EvalResult(total, delta, f"tanh-sinh-{level}")
        prev = total
    if delta > 1e-8 * max(abs(total), 1e-300):
        raise NonConvergence(
            f"tanh-sinh stalled at level {_TS_MAX_LEVEL} (abs change {delta:.2e})"
        )
    return EvalResult(total, delta, f"tanh-sinh-{_TS_MAX_LEVEL}")


_TS_SEG_TMAX = 5.0


def tanh_sinh_segment(
    g,
    *,
    rtol: float = 1e-11,
    max_level: int = 11,
) -> EvalResult:
    """Integral over x in (-1, 1) of g(x, 1-x, 1+x) by tanh-sinh doubling.

    The endpoint complements are passed explicitly (computed without
    cancellation), so integrands with algebraic or oscillatory endpoint
    factors of complex exponent can be formed stably at nodes exponentially
    close to +-1.
    """

    def node(t: float) -> complex:
        s = 0.5 * math.pi * math.sinh(t)
        e2 = math.exp(-2.0 * abs(s))
        comp = 2.0 * e2 / (1.0 + e2)  # 1 - |x|
        if s >= 0:
            x, omx, opx = 1.0 - comp, comp, 2.0 - comp
        else:
            x, omx, opx = comp - 1.0, 2.0 - comp, comp
        sa = abs(s)
        sech = 2.0 / (math.exp(sa) + math.exp(-sa))
        dxdt = 0.5 * math.pi * math.cosh(t) * sech * sech
        return g(x, omx, opx) * dxdt

    h = 1.0
    total = node(0.0)
    k = 1
    while k * h <= _TS_SEG_TMAX:
        total += node(k * h) + node(-k * h)
        k += 1
    total *= h
    prev = None
    delta = math.inf
    for level in range(1, max_level + 1):
        h *= 0.5
        add = 0.0 + 0.0j
        k = 1
        while k * h <= _TS_SEG_TMAX:
            add += node(k * h) + node(-k * h)
            k += 2
        total = 0.5 * total + h * add
        if prev is not None:
            delta = abs(total - prev)
            if delta <= rtol * max(abs(total), 1e-300):
                return EvalResult(total, delta, f"tanh-sinh-seg-{level}")
        prev = total
    if delta > 1e-8 * max(abs(total), 1e-300):
        raise NonConvergence(
            f"segment tanh-sinh stalled at level {max_level} (abs change {delta:.2e})"
        )
    return EvalResult(total, delta, f"tanh-sinh-seg-{max_level}")


# --- repeated integrals ------------------------------------------------------

ORDER_CAP = 6


@dataclass(frozen=True)
class RepeatedIntegralSpec:
    """n-fold iterated integral description.

    ``variable_end`` names the endpoint carrying the evaluation point; the
    repeated-integration kernel vanishes there, and each iterate vanishes at
    the opposite (anchor) endpoint.  ``upper=None`` means +infinity along the
    positive-real ray, which forces the lower end to be the variable one.
    """

    order_n: int
    lower: complex
    upper: complex | None
    measure: str = FLAT
    variable_end: str = "lower"


def _measure_funcs(measure: str):
    if measure == FLAT:
        return (lambda w: w), (lambda w: 1.0 + 0.0j), None
    if measure == INV_SQ_MINUS:
        return (lambda w: -1.0 / (w - 1.0)), (lambda w: (w - 1.0) ** -2), 1.0
    if measure == INV_SQ_PLUS:
        return (lambda w: -1.0 / (w + 1.0)), (lambda w: (w + 1.0) ** -2), -1.0
    raise ValueError(f"unknown measure {measure!r}")


def _integrand_adapter(f):
    """Wrap f(w) or the richer f(w, hi_dist, lo_dist) behind one call shape.

    The endpoint distances are computed without cancellation, letting
    integrands form singular endpoint factors stably at tanh-sinh nodes
    exponentially close to an endpoint.
    """
    import inspect

    try:
        three = len(inspect.signature(f).parameters) >= 3
    except (TypeError, ValueError):
        three = False
    if three:
        return f
    return lambda w, hi_dist, lo_dist: f(w)


def repeated_integral(
    f,
    spec: RepeatedIntegralSpec,
    *,
    anchor_exponent: float = 0.0,
    variable_exponent: float = 0.0,
    rtol: float = 1e-11,
) -> EvalResult:
    """Reduce an n-fold iterated integral to one weighted integral.

    The kernel (U(v) - U(w))^(n-1) / (n-1)! (U the measure antiderivative,
    v the variable endpoint) collapses the iteration.  The declared endpoint
    exponents describe f's own algebraic behavior there and gate
    integrability; the single integral runs on tanh-sinh nodes (complex
    exponents included), or along the compactified ray for improper specs.

    f may accept (w) or (w, upper_dist, lower_dist); the distances are the
    cancellation-free endpoint offsets of the straight segment.
    """
    n = spec.order_n
    if n < 1:
        raise ValueError("order_n must be >= 1")
    if n > ORDER_CAP:
        raise OrderCapExceeded(f"order {n} exceeds the supported cap {ORDER_CAP}")
    u_of, density, sing_point = _measure_funcs(spec.measure)

    if spec.upper is None:
        if spec.variable_end != "lower":
            raise ValueError("improper repeated integrals evaluate at the lower end")
        if spec.measure != FLAT:
            raise ValueError("improper repeated integrals support the flat measure only")
        z = complex(spec.lower)
        fac = 1.0 / math.factorial(n - 1)

        def ray_integrand(w: complex) -> complex:
            return f(w) * (w - z) ** (n - 1) * fac

        res = integrate_to_infinity(ray_integrand, z, rtol=rtol)
        return EvalResult(res.value, res.abs_error_estimate, f"repeated-{n}|{res.provenance}")

    lo = complex(spec.lower)
    hi = complex(spec.upper)
    var_pt, anc_pt = (lo, hi) if spec.variable_end == "lower" else (hi, lo)
    sign = 1.0 if spec.variable_end == "upper" else -1.0
    fac = 1.0 / math.factorial(n - 1)

    # Integrability gate in t-space: t=+1 is the upper end, t=-1 the lower.
    exp_upper = variable_exponent if spec.variable_end == "upper" else anchor_exponent
    exp_lower = variable_exponent if spec.variable_end == "lower" else anchor_exponent
    if spec.variable_end == "upper":
        exp_upper += n - 1
    else:
        exp_lower += n - 1

    measure_at_anchor = False
    if sing_point is not None:
        if abs(var_pt - sing_point) < 1e-9:
            raise ValueError("measure singularity at the variable endpoint")
        if abs(anc_pt - sing_point) < 1e-9:
            # Kernel blows like U(w)^(n-1) and the density like dist^-2 there.
            measure_at_anchor = True
            if abs(hi - sing_point) < 1e-9:
                exp_upper += -(n - 1) - 2
            else:
                exp_lower += -(n - 1) - 2

    if exp_upper <= -1.0 or exp_lower <= -1.0:
        raise ExponentError(
            f"combined endpoint exponents ({exp_upper:.3f}, {exp_lower:.3f}) not integrable"
        )

    half = 0.5 * (hi - lo)
    u_var = u_of(var_pt)
    call = _integrand_adapter(f)

    def g(t: float, omt: float, opt: float) -> complex:
        hi_dist = half * omt  # hi - w
        lo_dist = half * opt  # w - lo
        w = lo + lo_dist if t < 0 else hi - hi_dist
        if measure_at_anchor:
            # Form U-differences from the stable endpoint offsets.
            anchor_is_lo = abs(anc_pt - lo) < 1e-9
            anc_dist = lo_dist if anchor_is_lo else hi_dist
            var_dist = hi_dist if anchor_is_lo else lo_dist
            w_minus_s0 = anc_dist if anchor_is_lo else -anc_dist
            # U(v) - U(w) = (v - w) / ((w - s0)(v - s0)) for the 1/(w-s0)^2
            # measures.
            vw = var_dist * (1.0 if spec.variable_end == "upper" else -1.0)
            kern = (sign * vw / (w_minus_s0 * (var_pt - sing_point))) ** (n - 1) * fac
            dens = w_minus_s0**-2
        else:
            kern = (sign * (u_var - u_of(w))) ** (n - 1) * fac
            dens = density(w)
        return call(w, hi_dist, lo_dist) * kern * dens * half

    res = tanh_sinh_segment(g, rtol=rtol)
    return EvalResult(res.value, res.abs_error_estimate, f"repeated-{n}|{res.provenance}")


# --- contour derivatives -----------------------------------------------------


class Cut:
    """Distance oracle for a union of straight cuts on the real axis."""

    def __init__(self, pieces: tuple[tuple[str, float, float], ...]):
        self.pieces = pieces

    @staticmethod
    def left_ray(x0: float) -> "Cut":
        """The ray (-oo, x0] on the real axis."""
        return Cut((("left", x0, 0.0),))

    @staticmethod
    def right_ray(x0: float) -> "Cut":
        """The ray [x0, oo) on the real axis."""
        return Cut((("right", x0, 0.0),))

    @staticmethod
    def segment(a: float, b: float) -> "Cut":
        """The real segment [a, b]."""
        return Cut((("segment", a, b),))

    @staticmethod
    def union(*cuts: "Cut") -> "Cut":
        pieces: tuple = ()
        for c in cuts:
            pieces += c.pieces
        return Cut(pieces)

    def distance(self, z: complex) -> float:
        z = complex(z)
        best = math.inf
        for kind, p, q in self.pieces:
            if kind == "left":
                d = abs(z.imag) if z.real <= p else abs(z - p)
            elif kind == "right":
                d = abs(z.imag) if z.real >= p else abs(z - p)
            else:
                if p <= z.real <= q:
                    d = abs(z.imag)
                else:
                    d = min(abs(z - p), abs(z - q))
            best = min(best, d)
        return best


def contour_derivatives(
    f: Callable[[complex], complex],
    z0: complex,
    orders: tuple[int, ...],
    radius: float,
    *,
    rtol: float = 1e-11,
) -> tuple[complex, ...]:
    """Derivatives of several orders from one set of circle samples.

    Trapezoid sums of f(w)/(w-z0)^(n+1) on |w - z0| = radius, doubling the
    point count (and reusing previous samples) until every order is stable.
    """
    z0 = complex(z0)
    if radius <= 0.0:
        raise ValueError("radius must be positive")
    nmax = max(orders)
    m = 16
    while m < 4 * nmax:
        m *= 2
    vals = [f(z0 + radius * cmath.exp(2j * math.pi * j / m)) for j in range(m)]
    prev: dict[int, complex] | None = None
    while True:
        fmax = max(abs(v) for v in vals)
        est: dict[int, complex] = {}
        for n in orders:
            acc = 0.0 + 0.0j
            for j, v in enumerate(vals):
                acc += v * cmath.exp(-2j * math.pi * j * n / m)
            est[n] = acc * math.factorial(n) / (m * radius**n)
        if prev is not None:
            ok = True
            for n in orders:
                floor = 64.0 * 2.2e-16 * fmax * math.factorial(n) / radius**n
                if abs(est[n] - prev[n]) > max(rtol * abs(est[n]), floor):
                    ok = False
                    break
            if ok:
                return tuple(est[n] for n in orders)
        if m >= 4096:
            raise NonConvergence(f"contour trapezoid stalled at {m} points")
        prev = est
        new_vals = [
            f(z0 + radius * cmath.exp(2j * math.pi * (2 * j + 1) / (2 * m)))
            for j in range(m)
        ]
        merged = []
        for old, new in zip(vals, new_vals):
            merged.append(old)
            merged.append(new)
        vals = merged
        m *= 2


def contour_derivative(
    f: Callable[[complex], complex],
    z0: complex,
    n: int,
    radius: float | None = None,
    *,
    cut: Cut | None = None,
    rtol: float = 1e-11,
) -> complex:
    """n-th derivative of an analytic f at z0 via the Cauchy integral.

    When a cut is declared, the default radius is half the distance to it
    (capped at 0.5) and a disk touching the cut raises CutIntersection.
    """
    if n < 0:
        raise ValueError("derivative order must be >= 0")
    z0 = complex(z0)
    if cut is not None:
        dist = cut.distance(z0)
        if radius is None:
            radius = min(0.5, 0.5 * dist)
        if radius <= 0.0 or radius >= dist:
            raise CutIntersection(
                f"disk of radius {radius} about {z0} touches the cut (distance {dist:.3e})"
            )
    elif radius is None:
        radius = 0.5
    return contour_derivatives(f, z0, (n,), radius, rtol=rtol)[0]
