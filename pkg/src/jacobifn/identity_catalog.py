"""Declarative catalog of the verified identities.

Each entry pairs a left-hand evaluator (contour derivative, iterated
weighted-derivative operator, repeated integral, or integral representation)
with the closed-form right-hand side, a constraint predicate naming any
violated hypothesis, and a sampling recipe that stays inside the entry's own
admissible region.

Naming scheme: FD/FW/FR/FI/FJ/FK/FT drive the first-kind function (plain
derivatives, weighted-operator derivatives, Rodrigues forms, finite
multi-integrals, improper multi-integrals, measure-weighted multi-integrals,
Taylor sections); SRL/SD/SW/SI/SQ/SN and the ODE entries drive the second
kind.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from random import Random
from typing import Callable

from .hypergeom import phyp
from .jacobi_first import (
    JacobiParams,
    jacobi_p,
    jacobi_p_at_one,
    jacobi_p_scaled,
    jacobi_polynomial,
    taylor_section,
)
from .jacobi_second import (
    QIntegralSpec,
    jacobi_q,
    jacobi_q_integral_shifted,
    jacobi_q_log,
    neumann_q,
)
from .quadrature import (
    FLAT,
    INV_SQ_MINUS,
    INV_SQ_PLUS,
    Cut,
    RepeatedIntegralSpec,
    contour_derivative,
    contour_derivatives,
    repeated_integral,
)
from .scalar_kernel import gamma, pochhammer, reciprocal_gamma

Sampler = Callable[[Random, int], tuple[JacobiParams, complex]]
SideFn = Callable[[JacobiParams, complex, int], complex]
ConstraintFn = Callable[[JacobiParams, complex, int], str | None]

P_DERIV_CUT = Cut.union(Cut.left_ray(-1.0), Cut.right_ray(1.0))
P_PLAIN_CUT = Cut.left_ray(-1.0)
Q_DERIV_CUT = Cut.left_ray(1.0)

# Margins: reject samples this close to a constraint boundary (finite /
# improper entries respectively).
MARGIN = 0.1
RAY_MARGIN = 0.25

_eval_cost = 0


def _count(n: int = 1) -> None:
    global _eval_cost
    _eval_cost += n


def take_cost() -> int:
    """Return and reset the oracle-evaluation counter."""
    global _eval_cost
    c = _eval_cost
    _eval_cost = 0
    return c


def pval(a, b, g, w) -> complex:
    _count()
    return jacobi_p(JacobiParams(a, b, g), w).value


def qval(a, b, g, w) -> complex:
    _count()
    return jacobi_q(JacobiParams(a, b, g), w).value


def _pow(base: complex, s: complex) -> complex:
    if s == 0:
        return 1.0 + 0.0j
    return cmath.exp(complex(s) * cmath.log(base))


@dataclass(frozen=True)
class IdentityDescriptor:
    """One catalog entry: both sides, constraints, sampling, tolerances."""

    identity_id: str
    description: str
    n_values: tuple[int, ...]
    tolerance: float
    lhs: SideFn
    rhs: SideFn
    constraints: ConstraintFn
    sample: Sampler
    note: str | None = None


# --- constraint helpers ------------------------------------------------------


def _dist_nonpos_int(x: complex) -> float:
    x = complex(x)
    m = min(0, round(x.real))
    return abs(x - m)


def _dist_neg_int(x: complex) -> float:
    x = complex(x)
    m = min(-1, round(x.real))
    return abs(x - m)


def _dist_int(x: complex) -> float:
    return abs(complex(x) - round(complex(x).real))


def _poch_zero_dist(x: complex, n: int) -> float:
    """Distance from x to the zero set {0, -1, ..., -(n-1)} of (x)_n."""
    if n <= 0:
        return math.inf
    x = complex(x)
    m = -min(n - 1, max(0, round(-x.real)))
    return abs(x - m)


def _p_valid(a, b, g, margin=MARGIN) -> str | None:
    if _dist_neg_int(complex(a) + complex(g)) < margin:
        return "alpha+gamma near a negative integer"
    return None


def _q_valid(a, b, g, margin=MARGIN) -> str | None:
    if _dist_neg_int(complex(a) + complex(g)) < margin:
        return "alpha+gamma near a negative integer"
    if _dist_neg_int(complex(b) + complex(g)) < margin:
        return "beta+gamma near a negative integer"
    return None


def _connection_safe(a, b, g) -> str | None:
    """Reject parameters whose large-z decomposition of P degenerates."""
    if _dist_int(a + b + 2 * g) < MARGIN:
        return "alpha+beta+2gamma near an integer (resonant connection)"
    for label, s in (("alpha+gamma", a + g), ("beta+gamma", b + g)):
        s = complex(s)
        m = round(s.real)
        if m >= 0 and abs(s - m) < MARGIN:
            return f"{label} near a non-negative integer (degenerate connection)"
    return None


# --- samplers ----------------------------------------------------------------


def _u(rng: Random, lo: float, hi: float) -> float:
    return lo + (hi - lo) * rng.random()


def _cplx(rng: Random, lo: float, hi: float, im: float = 0.45) -> complex:
    return complex(_u(rng, lo, hi), _u(rng, -im, im))


def _z_deriv_p(rng: Random) -> complex:
    y = _u(rng, 0.35, 1.2) * (1.0 if rng.random() < 0.5 else -1.0)
    return complex(_u(rng, 0.2, 2.2), y)


def _z_int_p(rng: Random) -> complex:
    r = _u(rng, 0.35, 1.25)
    th = _u(rng, 0.2 * math.pi, 0.8 * math.pi) * (1.0 if rng.random() < 0.5 else -1.0)
    return 1.0 + r * cmath.exp(1j * th)


def _z_ray_p(rng: Random) -> complex:
    y = _u(rng, 0.35, 1.0) * (1.0 if rng.random() < 0.5 else -1.0)
    return complex(_u(rng, -0.3, 1.5), y)


def _z_q(rng: Random) -> complex:
    return complex(_u(rng, 1.4, 3.8), _u(rng, -1.0, 1.0))


def _box_sampler(
    zdraw: Callable[[Random], complex],
    a_box=(-0.65, 2.8),
    b_box=(-0.65, 2.8),
    g_box=(-0.6, 2.8),
    im: float = 0.45,
) -> Sampler:
    def draw(rng: Random, n: int) -> tuple[JacobiParams, complex]:
        return (
            JacobiParams(
                _cplx(rng, *a_box, im=im),
                _cplx(rng, *b_box, im=im),
                _cplx(rng, *g_box, im=im),
            ),
            zdraw(rng),
        )

    return draw


_P_DERIV_SAMPLE = _box_sampler(_z_deriv_p)
_P_INT_SAMPLE = _box_sampler(_z_int_p)
_Q_SAMPLE = _box_sampler(_z_q, g_box=(-0.5, 2.5))


# --- LHS machinery -----------------------------------------------------------


def _weighted_p(params: JacobiParams, weight: Callable[[complex], complex] | None):
    a, b, g = params.alpha, params.beta, params.gamma
    if weight is None:
        return lambda w: pval(a, b, g, w)
    return lambda w: weight(w) * pval(a, b, g, w)


def _weighted_q(params: JacobiParams, weight: Callable[[complex], complex] | None):
    a, b, g = params.alpha, params.beta, params.gamma
    if weight is None:
        return lambda w: qval(a, b, g, w)
    return lambda w: weight(w) * qval(a, b, g, w)


def _contour_radius(cut: Cut, z: complex) -> float:
    return min(0.5, 0.5 * cut.distance(z))


def plain_derivative(f, z: complex, n: int, cut: Cut) -> complex:
    return contour_derivative(f, z, n, _contour_radius(cut, z), cut=cut)


_OPERATOR_COEFFS: dict[int, tuple[tuple[int, int], ...]] = {}


def _operator_coeffs(n: int) -> tuple[tuple[int, int], ...]:
    """Coefficients a_{n,k} of [(z-c)^2 D]^n = sum_k a_{n,k} (z-c)^(n+k) D^k."""
    if n in _OPERATOR_COEFFS:
        return _OPERATOR_COEFFS[n]
    coeffs = {1: 1}
    for m in range(1, n):
        nxt: dict[int, int] = {}
        for k, c in coeffs.items():
            nxt[k] = nxt.get(k, 0) + c * (m + k)
            nxt[k + 1] = nxt.get(k + 1, 0) + c
        coeffs = nxt
    out = tuple(sorted(coeffs.items()))
    _OPERATOR_COEFFS[n] = out
    return out


def operator_power(f, z: complex, n: int, base_point: float, cut: Cut) -> complex:
    """Apply [(z - base_point)^2 d/dz]^n to f at z via one contour."""
    if n == 0:
        return f(z)
    orders = tuple(range(1, n + 1))
    radius = _contour_radius(cut, z)
    derivs = dict(zip(orders, contour_derivatives(f, z, orders, radius)))
    shift = z - base_point
    total = 0.0 + 0.0j
    for k, c in _operator_coeffs(n):
        total += c * shift ** (n + k) * derivs[k]
    return total


# --- entry families ----------------------------------------------------------

_CATALOG: dict[str, IdentityDescriptor] = {}


def _register(entry: IdentityDescriptor) -> None:
    if entry.identity_id in _CATALOG:
        raise ValueError(f"duplicate identity id {entry.identity_id}")
    _CATALOG[entry.identity_id] = entry


def _fd_entry(ident, desc, weight, rhs, cut=P_DERIV_CUT, extra=None, note=None):
    def lhs(params: JacobiParams, z: complex, n: int) -> complex:
        return plain_derivative(_weighted_p(params, weight(params) if weight else None), z, n, cut)

    def cons(params: JacobiParams, z: complex, n: int) -> str | None:
        bad = _p_valid(params.alpha, params.beta, params.gamma)
        if bad:
            return bad
        return extra(params, z, n) if extra else None

    _register(
        IdentityDescriptor(ident, desc, (1, 2, 3), 1e-8, lhs, rhs, cons, _P_DERIV_SAMPLE, note)
    )


def _fw_entry(ident, desc, weight, base_point, rhs, extra=None, note=None):
    # The (w-1)^s weights carry a principal-branch cut on all of (-oo, 1].
    def lhs(params: JacobiParams, z: complex, n: int) -> complex:
        return operator_power(_weighted_p(params, weight(params)), z, n, base_point, Q_DERIV_CUT)

    def cons(params: JacobiParams, z: complex, n: int) -> str | None:
        bad = _p_valid(params.alpha, params.beta, params.gamma)
        if bad:
            return bad
        return extra(params, z, n) if extra else None

    _register(
        IdentityDescriptor(ident, desc, (1, 2, 3), 1e-8, lhs, rhs, cons, _P_DERIV_SAMPLE, note)
    )


def _sd_entry(ident, desc, weight, rhs, extra=None, nvals=(1, 2, 3), note=None):
    def lhs(params: JacobiParams, z: complex, n: int) -> complex:
        return plain_derivative(
            _weighted_q(params, weight(params) if weight else None), z, n, Q_DERIV_CUT
        )

    def cons(params: JacobiParams, z: complex, n: int) -> str | None:
        bad = _q_valid(params.alpha, params.beta, params.gamma)
        if bad:
            return bad
        return extra(params, z, n) if extra else None

    _register(IdentityDescriptor(ident, desc, nvals, 1e-8, lhs, rhs, cons, _Q_SAMPLE, note))


def _sw_entry(ident, desc, weight, base_point, rhs, extra=None, note=None):
    def lhs(params: JacobiParams, z: complex, n: int) -> complex:
        return operator_power(_weighted_q(params, weight(params)), z, n, base_point, Q_DERIV_CUT)

    def cons(params: JacobiParams, z: complex, n: int) -> str | None:
        bad = _q_valid(params.alpha, params.beta, params.gamma)
        if bad:
            return bad
        return extra(params, z, n) if extra else None

    _register(IdentityDescriptor(ident, desc, (1, 2, 3), 1e-8, lhs, rhs, cons, _Q_SAMPLE, note))


def _fi_entry(ident, desc, pairs, anchor_exp, rhs, cons, sample, nvals=(1, 2), note=None):
    """Finite multi-integral toward 1: weights (1-w)^e come from the stable
    upper-endpoint distance; (1+w)^e factors are regular on the path."""

    def lhs(params: JacobiParams, z: complex, n: int) -> complex:
        a, b, g = params.alpha, params.beta, params.gamma
        exps = tuple((sym, complex(e(params))) for sym, e in pairs)

        def f(w: complex, hi_dist: complex, lo_dist: complex) -> complex:
            val = pval(a, b, g, w)
            for sym, e in exps:
                val *= _pow(hi_dist if sym == "1-w" else 1.0 + w, e)
            return val

        spec = RepeatedIntegralSpec(n, z, 1.0, FLAT, "lower")
        return repeated_integral(
            f, spec, anchor_exponent=anchor_exp(params), rtol=1e-12
        ).value

    _register(IdentityDescriptor(ident, desc, nvals, 1e-6, lhs, rhs, cons, sample, note))


def _fj_entry(ident, desc, pairs, rhs, cons, sample, note=None):
    """Improper ray integral: the first-kind value is used in scaled form so
    the dominant large-w branch cannot overflow before the weight kills it."""

    def lhs(params: JacobiParams, z: complex, n: int) -> complex:
        a, b, g = params.alpha, params.beta, params.gamma
        exps = tuple((sym, complex(e(params))) for sym, e in pairs)

        def f(w: complex) -> complex:
            _count()
            log_scale, mant = jacobi_p_scaled(JacobiParams(a, b, g), w)
            logw = 0.0 + 0.0j
            for sym, e in exps:
                logw += e * cmath.log((1.0 - w) if sym == "1-w" else (1.0 + w))
            return cmath.exp(logw + log_scale) * mant

        spec = RepeatedIntegralSpec(n, z, None, FLAT, "lower")
        return repeated_integral(f, spec, rtol=1e-12).value

    _register(IdentityDescriptor(ident, desc, (1, 2), 1e-6, lhs, rhs, cons, sample, note))


def _fk_entry(ident, desc, pairs, measure, anchor_exp, rhs, cons, sample=None, note=None):
    """Measure-weighted multi-integral from 1: weights (w-1)^e come from the
    stable lower-endpoint distance; (w+1)^e factors are regular on the path."""

    def lhs(params: JacobiParams, z: complex, n: int) -> complex:
        a, b, g = params.alpha, params.beta, params.gamma
        exps = tuple((sym, complex(e(params))) for sym, e in pairs)

        def f(w: complex, hi_dist: complex, lo_dist: complex) -> complex:
            val = pval(a, b, g, w)
            for sym, e in exps:
                val *= _pow(lo_dist if sym == "w-1" else w + 1.0, e)
            return val

        spec = RepeatedIntegralSpec(n, 1.0, z, measure, "upper")
        return repeated_integral(
            f, spec, anchor_exponent=anchor_exp(params), rtol=1e-12
        ).value

    _register(
        IdentityDescriptor(
            ident, desc, (1, 2), 1e-6, lhs, rhs, cons, sample or _P_INT_SAMPLE, note
        )
    )


def _si_entry(ident, desc, pairs, rhs, cons, sample, note=None):
    """Improper ray integral of Q; weights and value combine in log space so
    neither factor overflows before their product decays."""

    def lhs(params: JacobiParams, z: complex, n: int) -> complex:
        p = JacobiParams(params.alpha, params.beta, params.gamma)
        exps = tuple((sym, complex(e(params))) for sym, e in pairs)

        def f(w: complex) -> complex:
            _count()
            logq = jacobi_q_log(p, w)
            for sym, e in exps:
                logq += e * cmath.log((w - 1.0) if sym == "w-1" else (1.0 + w))
            return cmath.exp(logq)

        spec = RepeatedIntegralSpec(n, z, None, FLAT, "lower")
        return repeated_integral(f, spec, rtol=1e-12).value

    _register(IdentityDescriptor(ident, desc, (1, 2), 1e-6, lhs, rhs, cons, sample, note))


# --- FD: plain n-th derivatives of weighted P --------------------------------

_fd_entry(
    "FD1",
    "n-th derivative of the fully weighted function raises degree, lowers both exponents",
    lambda p: (lambda w: _pow(1.0 - w, p.alpha) * _pow(1.0 + w, p.beta)),
    lambda p, z, n: (-2.0) ** n
    * pochhammer(p.gamma + 1.0, n)
    * _pow(1.0 - z, p.alpha - n)
    * _pow(1.0 + z, p.beta - n)
    * pval(p.alpha - n, p.beta - n, p.gamma + n, z),
)

_fd_entry(
    "FD2",
    "n-th derivative of the (1-z)-weighted function trades the exponents",
    lambda p: (lambda w: _pow(1.0 - w, p.alpha)),
    lambda p, z, n: pochhammer(-p.alpha - p.gamma, n)
    * _pow(1.0 - z, p.alpha - n)
    * pval(p.alpha - n, p.beta + n, p.gamma, z),
)

_fd_entry(
    "FD3",
    "n-th derivative of the (1+z)-weighted function trades the exponents",
    lambda p: (lambda w: _pow(1.0 + w, p.beta)),
    lambda p, z, n: (-1.0) ** n
    * pochhammer(-p.beta - p.gamma, n)
    * _pow(1.0 + z, p.beta - n)
    * pval(p.alpha + n, p.beta - n, p.gamma, z),
    cut=P_DERIV_CUT,
)

_fd_entry(
    "FD4",
    "plain n-th derivative lowers degree, raises both exponents",
    None,
    lambda p, z, n: 2.0**-n
    * pochhammer(p.alpha + p.beta + p.gamma + 1.0, n)
    * pval(p.alpha + n, p.beta + n, p.gamma - n, z),
    cut=P_PLAIN_CUT,
)


# --- FW: [(z -+ 1)^2 D]^n operator identities for P ---------------------------

_fw_entry(
    "FW1",
    "degree-preserving operator power shifting the second exponent up",
    lambda p: (lambda w: _pow(w - 1.0, p.alpha + p.beta + p.gamma + 1.0)),
    1.0,
    lambda p, z, n: pochhammer(p.alpha + p.beta + p.gamma + 1.0, n)
    * _pow(z - 1.0, p.alpha + p.beta + p.gamma + 1.0 + n)
    * pval(p.alpha, p.beta + n, p.gamma, z),
)

_fw_entry(
    "FW2",
    "operator power on the degree-scaled function lowering the degree",
    lambda p: (lambda w: _pow(w - 1.0, -p.gamma)),
    1.0,
    lambda p, z, n: pochhammer(-p.alpha - p.gamma, n)
    * _pow(z - 1.0, n - p.gamma)
    * pval(p.alpha, p.beta + n, p.gamma - n, z),
)

_fw_entry(
    "FW3",
    "operator power raising the degree against the mixed weight",
    lambda p: (
        lambda w: _pow(w + 1.0, p.beta) * _pow(w - 1.0, p.alpha + p.gamma + 1.0)
    ),
    1.0,
    lambda p, z, n: 2.0**n
    * pochhammer(p.gamma + 1.0, n)
    * _pow(z + 1.0, p.beta - n)
    * _pow(z - 1.0, p.alpha + p.gamma + 1.0 + n)
    * pval(p.alpha, p.beta - n, p.gamma + n, z),
)

_fw_entry(
    "FW4",
    "degree-preserving operator power shifting the second exponent down",
    lambda p: (
        lambda w: _pow(w + 1.0, p.beta) * _pow(w - 1.0, -(p.beta + p.gamma))
    ),
    1.0,
    lambda p, z, n: 2.0**n
    * pochhammer(-p.beta - p.gamma, n)
    * _pow(z + 1.0, p.beta - n)
    * _pow(z - 1.0, -(p.beta - n + p.gamma))
    * pval(p.alpha, p.beta - n, p.gamma, z),
)

_fw_entry(
    "FW5",
    "mirrored operator power shifting the first exponent up",
    lambda p: (lambda w: _pow(w + 1.0, p.alpha + p.beta + p.gamma + 1.0)),
    -1.0,
    lambda p, z, n: pochhammer(p.alpha + p.beta + p.gamma + 1.0, n)
    * _pow(z + 1.0, p.alpha + p.beta + p.gamma + 1.0 + n)
    * pval(p.alpha + n, p.beta, p.gamma, z),
)

_fw_entry(
    "FW6",
    "mirrored operator power lowering the degree",
    lambda p: (lambda w: _pow(w + 1.0, -p.gamma)),
    -1.0,
    lambda p, z, n: pochhammer(1.0 + p.beta + p.gamma - n, n)
    * _pow(z + 1.0, n - p.gamma)
    * pval(p.alpha + n, p.beta, p.gamma - n, z),
)

_fw_entry(
    "FW7",
    "mirrored operator power raising the degree against the mixed weight",
    lambda p: (
        lambda w: _pow(w - 1.0, p.alpha) * _pow(w + 1.0, p.beta + p.gamma + 1.0)
    ),
    -1.0,
    lambda p, z, n: 2.0**n
    * pochhammer(p.gamma + 1.0, n)
    * _pow(z - 1.0, p.alpha - n)
    * _pow(z + 1.0, p.beta + p.gamma + n + 1.0)
    * pval(p.alpha - n, p.beta, p.gamma + n, z),
    note="(z+1) exponent corrected to beta+gamma+n+1; the printed beta+gamma+n "
    "fails its own Rodrigues specialization and the n=1 hand check.",
)

_fw_entry(
    "FW8",
    "mirrored degree-preserving operator power shifting the first exponent down",
    lambda p: (
        lambda w: _pow(w - 1.0, p.alpha) * _pow(w + 1.0, -(p.alpha + p.gamma))
    ),
    -1.0,
    lambda p, z, n: (-2.0) ** n
    * pochhammer(-p.alpha - p.gamma, n)
    * _pow(z - 1.0, p.alpha - n)
    * _pow(z + 1.0, -(p.alpha - n + p.gamma))
    * pval(p.alpha - n, p.beta, p.gamma, z),
)


# --- FR: Rodrigues forms ------------------------------------------------------


def _rodrigues_lhs_one(params: JacobiParams, z: complex, n: int) -> complex:
    from .identity_engine import rodrigues_jacobi

    return rodrigues_jacobi(n, params.alpha, params.beta, z, "ONE")


def _rodrigues_lhs_two(params: JacobiParams, z: complex, n: int) -> complex:
    from .identity_engine import rodrigues_jacobi

    return rodrigues_jacobi(n, params.alpha, params.beta, z, "TWO")


def _rodrigues_rhs(params: JacobiParams, z: complex, n: int) -> complex:
    return jacobi_polynomial(n, params.alpha, params.beta, z)


def _rodrigues_cons(params: JacobiParams, z: complex, n: int) -> str | None:
    return None


_register(
    IdentityDescriptor(
        "FR1",
        "operator-power Rodrigues form built on the (z+1) operator",
        (1, 2, 3),
        1e-8,
        _rodrigues_lhs_one,
        _rodrigues_rhs,
        _rodrigues_cons,
        _P_DERIV_SAMPLE,
    )
)

_register(
    IdentityDescriptor(
        "FR2",
        "operator-power Rodrigues form built on the (z-1) operator",
        (1, 2, 3),
        1e-8,
        _rodrigues_lhs_two,
        _rodrigues_rhs,
        _rodrigues_cons,
        _P_DERIV_SAMPLE,
        note="operand corrected to (z-1)^(alpha+1)(z+1)^(beta+n): the printed "
        "(z-1)^alpha(z+1)^(beta+n+1) fails already at n=1, alpha=beta=0.",
    )
)


# --- FI: finite multi-integrals toward 1 --------------------------------------


def _fi1_cons(p: JacobiParams, z: complex, n: int) -> str | None:
    bad = _p_valid(p.alpha, p.beta, p.gamma)
    if bad:
        return bad
    if complex(p.alpha).real <= -1.0 + MARGIN:
        return "Re(alpha) too close to -1"
    if complex(p.beta).real <= -1.0 + MARGIN:
        return "Re(beta) too close to -1"
    if _poch_zero_dist(-complex(p.gamma), n) < MARGIN:
        return "(-gamma)_n vanishes"
    return None


_fi_entry(
    "FI1",
    "n-fold weighted integral toward 1 lowering the degree",
    (("1-w", lambda p: p.alpha), ("1+w", lambda p: p.beta)),
    lambda p: complex(p.alpha).real,
    lambda p, z, n: (-1.0) ** n
    / (2.0**n * pochhammer(-p.gamma, n))
    * _pow(1.0 - z, p.alpha + n)
    * _pow(1.0 + z, p.beta + n)
    * pval(p.alpha + n, p.beta + n, p.gamma - n, z),
    _fi1_cons,
    _P_INT_SAMPLE,
)


def _fi2_cons(p: JacobiParams, z: complex, n: int) -> str | None:
    bad = _p_valid(p.alpha, p.beta, p.gamma)
    if bad:
        return bad
    if complex(p.alpha).real <= -1.0 + MARGIN:
        return "Re(alpha) too close to -1"
    return None


_fi_entry(
    "FI2",
    "n-fold (1-w)-weighted integral toward 1 trading the exponents",
    (("1-w", lambda p: p.alpha),),
    lambda p: complex(p.alpha).real,
    lambda p, z, n: _pow(1.0 - z, p.alpha + n)
    / pochhammer(p.alpha + p.gamma + 1.0, n)
    * pval(p.alpha + n, p.beta - n, p.gamma, z),
    _fi2_cons,
    _P_INT_SAMPLE,
)


def _fi3_cons(p: JacobiParams, z: complex, n: int) -> str | None:
    bad = _p_valid(p.alpha, p.beta, p.gamma)
    if bad:
        return bad
    s = complex(p.alpha) + complex(p.beta) + complex(p.gamma)
    if _poch_zero_dist(-s, n) < MARGIN:
        return "(-alpha-beta-gamma)_n vanishes"
    if abs(s) < MARGIN:
        return "alpha+beta+gamma near 0"
    if n >= 2:
        if _poch_zero_dist(complex(p.gamma) + 2.0, n - 1) < MARGIN:
            return "(gamma+2)_k vanishes inside the boundary series"
        if _poch_zero_dist(1.0 - s, n - 1) < MARGIN:
            return "(1-alpha-beta-gamma)_k vanishes inside the boundary series"
    return None


def _fi3a_rhs(p: JacobiParams, z: complex, n: int) -> complex:
    a, b, g = complex(p.alpha), complex(p.beta), complex(p.gamma)
    s = a + b + g
    main = (
        2.0**n
        / pochhammer(-s, n)
        * pval(a - n, b - n, g + n, z)
    )
    boundary = (
        2.0
        * gamma(a + g + 1.0)
        * _pow(1.0 - z, n - 1)
        / (math.factorial(n - 1) * s)
        * reciprocal_gamma(a)
        * reciprocal_gamma(g + 2.0)
        * phyp((1.0 - n, 1.0 - a, 1.0), (g + 2.0, 1.0 - s), 2.0 / (1.0 - z)).value
    )
    return main + boundary


_fi_entry(
    "FI3a",
    "n-fold plain integral toward 1: degree-raising form plus boundary series",
    (),
    lambda p: 0.0,
    _fi3a_rhs,
    _fi3_cons,
    _P_INT_SAMPLE,
)


def _fi3b_cons(p: JacobiParams, z: complex, n: int) -> str | None:
    bad = _p_valid(p.alpha, p.beta, p.gamma)
    if bad:
        return bad
    if _dist_nonpos_int(complex(p.alpha) + 1.0) < MARGIN:
        return "alpha+1 near a non-positive integer"
    if abs(1.0 - z) > 1.45:
        return "|1-z| outside the convergence disk of the closed form"
    return None


def _fi3b_rhs(p: JacobiParams, z: complex, n: int) -> complex:
    a, b, g = complex(p.alpha), complex(p.beta), complex(p.gamma)
    series = phyp(
        (-g, a + b + g + 1.0, 1.0), (a + 1.0, n + 1.0), 0.5 * (1.0 - z)
    )
    return (
        gamma(a + g + 1.0)
        * reciprocal_gamma(a + 1.0)
        * reciprocal_gamma(g + 1.0)
        * _pow(1.0 - z, n)
        / math.factorial(n)
        * series.value
    )


_fi_entry(
    "FI3b",
    "n-fold plain integral toward 1: single convergent series form",
    (),
    lambda p: 0.0,
    _fi3b_rhs,
    _fi3b_cons,
    _P_INT_SAMPLE,
)


# --- FJ: improper multi-integrals along the ray to infinity -------------------


def _fj_sample(a_box, b_box, g_box) -> Sampler:
    def draw(rng: Random, n: int) -> tuple[JacobiParams, complex]:
        lo_a, hi_a = a_box(n)
        lo_b, hi_b = b_box(n)
        lo_g, hi_g = g_box(n)
        return (
            JacobiParams(
                _cplx(rng, lo_a, hi_a),
                _cplx(rng, lo_b, hi_b),
                _cplx(rng, lo_g, hi_g),
            ),
            _z_ray_p(rng),
        )

    return draw


def _fj1_cons(p: JacobiParams, z: complex, n: int) -> str | None:
    a, b, g = complex(p.alpha), complex(p.beta), complex(p.gamma)
    bad = _p_valid(a, b, g)
    if bad:
        return bad
    if (a + b + g).real >= -n - RAY_MARGIN:
        return "Re(alpha+beta+gamma) not below -n"
    if g.real <= n - 1 + RAY_MARGIN:
        return "Re(gamma) not above n-1"
    return _connection_safe(a, b, g)


_fj_entry(
    "FJ1",
    "n-fold weighted ray integral lowering the degree",
    (("1-w", lambda p: p.alpha), ("1+w", lambda p: p.beta)),
    lambda p, z, n: (-1.0) ** n
    / (2.0**n * pochhammer(-p.gamma, n))
    * _pow(1.0 - z, p.alpha + n)
    * _pow(1.0 + z, p.beta + n)
    * pval(p.alpha + n, p.beta + n, p.gamma - n, z),
    _fj1_cons,
    _fj_sample(
        lambda n: (-n - 2.4, -0.9),
        lambda n: (-n - 2.4, -0.9),
        lambda n: (n - 0.55, n + 0.7),
    ),
    note="sign corrected to (-1)^n/(2^n(-gamma)_n): the printed positive "
    "constant contradicts the n=1 proof display factor 1/(2 gamma).",
)


def _fj2_cons(p: JacobiParams, z: complex, n: int) -> str | None:
    a, b, g = complex(p.alpha), complex(p.beta), complex(p.gamma)
    bad = _p_valid(a, b, g)
    if bad:
        return bad
    if (a + g).real >= -n - RAY_MARGIN:
        return "Re(alpha+gamma) not below -n"
    if (b + g).real <= n - 1 + RAY_MARGIN:
        return "Re(beta+gamma) not above n-1"
    return _connection_safe(a, b, g)


_fj_entry(
    "FJ2",
    "n-fold (1-w)-weighted ray integral trading the exponents",
    (("1-w", lambda p: p.alpha),),
    lambda p, z, n: _pow(1.0 - z, p.alpha + n)
    / pochhammer(p.alpha + p.gamma + 1.0, n)
    * pval(p.alpha + n, p.beta - n, p.gamma, z),
    _fj2_cons,
    _fj_sample(
        lambda n: (-n - 2.8, -n - 0.45),
        lambda n: (n + 0.5, n + 2.4),
        lambda n: (-0.55, 0.75),
    ),
)


def _fj3_cons(p: JacobiParams, z: complex, n: int) -> str | None:
    a, b, g = complex(p.alpha), complex(p.beta), complex(p.gamma)
    bad = _p_valid(a, b, g)
    if bad:
        return bad
    if (b + g).real >= -n - RAY_MARGIN:
        return "Re(beta+gamma) not below -n"
    if (a + g).real <= n - 1 + RAY_MARGIN:
        return "Re(alpha+gamma) not above n-1"
    return _connection_safe(a, b, g)


_fj_entry(
    "FJ3",
    "n-fold (1+w)-weighted ray integral trading the exponents",
    (("1+w", lambda p: p.beta),),
    lambda p, z, n: (-1.0) ** n
    * _pow(1.0 + z, p.beta + n)
    / pochhammer(p.beta + p.gamma + 1.0, n)
    * pval(p.alpha - n, p.beta + n, p.gamma, z),
    _fj3_cons,
    _fj_sample(
        lambda n: (n + 0.5, n + 2.4),
        lambda n: (-n - 2.8, -n - 0.45),
        lambda n: (-0.55, 0.75),
    ),
)


def _fj4_cons(p: JacobiParams, z: complex, n: int) -> str | None:
    a, b, g = complex(p.alpha), complex(p.beta), complex(p.gamma)
    bad = _p_valid(a, b, g)
    if bad:
        return bad
    if g.real >= -n - RAY_MARGIN:
        return "Re(gamma) not below -n"
    if (a + b + g).real <= n - 1 + RAY_MARGIN:
        return "Re(alpha+beta+gamma) not above n-1"
    return _connection_safe(a, b, g)


_fj_entry(
    "FJ4",
    "n-fold plain ray integral raising the degree",
    (),
    lambda p, z, n: 2.0**n
    / pochhammer(-p.alpha - p.beta - p.gamma, n)
    * pval(p.alpha - n, p.beta - n, p.gamma + n, z),
    _fj4_cons,
    _fj_sample(
        lambda n: (n + 0.6, n + 2.2),
        lambda n: (n + 0.6, n + 2.2),
        lambda n: (-n - 2.2, -n - 0.45),
    ),
    note="LHS weight removed: the printed (1+w)^beta contradicts the "
    "weightless derivative relation the proof integrates.",
)


# --- FK: measure-weighted multi-integrals from 1 ------------------------------


def _fk1_cons(p: JacobiParams, z: complex, n: int) -> str | None:
    a, b, g = complex(p.alpha), complex(p.beta), complex(p.gamma)
    bad = _p_valid(a, b, g)
    if bad:
        return bad
    s = a + b + g
    if (s + 1.0).real <= n + MARGIN:
        return "Re(alpha+beta+gamma+1) not above n"
    if _poch_zero_dist(s - n + 1.0, n) < MARGIN:
        return "(alpha+beta+gamma-n+1)_n vanishes"
    return None


_fk_entry(
    "FK1",
    "n-fold (w-1)^-2-measure integral shifting the second exponent down",
    (("w-1", lambda p: p.alpha + p.beta + p.gamma + 1.0),),
    INV_SQ_MINUS,
    lambda p: (complex(p.alpha) + complex(p.beta) + complex(p.gamma) + 1.0).real,
    lambda p, z, n: _pow(z - 1.0, p.alpha + p.beta + p.gamma + 1.0 - n)
    / pochhammer(p.alpha + p.beta + p.gamma - n + 1.0, n)
    * pval(p.alpha, p.beta - n, p.gamma, z),
    _fk1_cons,
)


def _fk2_cons(p: JacobiParams, z: complex, n: int) -> str | None:
    a, b, g = complex(p.alpha), complex(p.beta), complex(p.gamma)
    bad = _p_valid(a, b, g)
    if bad:
        return bad
    if (a + g + 1.0).real <= n + MARGIN:
        return "Re(alpha+gamma+1) not above n"
    if _poch_zero_dist(g - n + 1.0, n) < MARGIN:
        return "(gamma-n+1)_n vanishes"
    return None


_fk_entry(
    "FK2",
    "n-fold (w-1)^-2-measure integral lowering the degree",
    (("1+w", lambda p: p.beta), ("w-1", lambda p: p.alpha + p.gamma + 1.0)),
    INV_SQ_MINUS,
    lambda p: (complex(p.alpha) + complex(p.gamma) + 1.0).real,
    lambda p, z, n: _pow(z + 1.0, p.beta + n)
    * _pow(z - 1.0, p.alpha + p.gamma - n + 1.0)
    / (2.0**n * pochhammer(p.gamma - n + 1.0, n))
    * pval(p.alpha, p.beta + n, p.gamma - n, z),
    _fk2_cons,
)


def _fk3_cons(p: JacobiParams, z: complex, n: int) -> str | None:
    a, b, g = complex(p.alpha), complex(p.beta), complex(p.gamma)
    bad = _p_valid(a, b, g)
    if bad:
        return bad
    if (a + n).real <= MARGIN:
        return "Re(alpha+n) not positive"
    if a.real <= -1.0 + MARGIN:
        return "Re(alpha) too close to -1 for the first iterate"
    if _poch_zero_dist(g - n + 1.0, n) < MARGIN:
        return "(gamma-n+1)_n vanishes"
    return None


_fk_entry(
    "FK3",
    "n-fold (w+1)^-2-measure integral lowering the degree",
    (("w-1", lambda p: p.alpha), ("1+w", lambda p: p.beta + p.gamma + 1.0)),
    INV_SQ_PLUS,
    lambda p: complex(p.alpha).real,
    lambda p, z, n: _pow(z - 1.0, p.alpha + n)
    * _pow(z + 1.0, p.beta + p.gamma - n + 1.0)
    / (2.0**n * pochhammer(p.gamma - n + 1.0, n))
    * pval(p.alpha + n, p.beta, p.gamma - n, z),
    _fk3_cons,
)


def _fk4_cons(p: JacobiParams, z: complex, n: int) -> str | None:
    a, b, g = complex(p.alpha), complex(p.beta), complex(p.gamma)
    bad = _p_valid(a, b, g)
    if bad:
        return bad
    if (a + n).real <= MARGIN:
        return "Re(alpha+n) not positive"
    if a.real <= -1.0 + MARGIN:
        return "Re(alpha) too close to -1 for the first iterate"
    return None


_fk_entry(
    "FK4",
    "n-fold (w+1)^-2-measure integral shifting the first exponent up",
    (("w-1", lambda p: p.alpha), ("1+w", lambda p: -(p.alpha + p.gamma))),
    INV_SQ_PLUS,
    lambda p: complex(p.alpha).real,
    lambda p, z, n: _pow(z - 1.0, p.alpha + n)
    * _pow(z + 1.0, -(p.alpha + n + p.gamma))
    / (2.0**n * pochhammer(1.0 + p.alpha + p.gamma, n))
    * pval(p.alpha + n, p.beta, p.gamma, z),
    _fk4_cons,
)


def _fk5_cons(p: JacobiParams, z: complex, n: int) -> str | None:
    a, b, g = complex(p.alpha), complex(p.beta), complex(p.gamma)
    bad = _p_valid(a, b, g)
    if bad:
        return bad
    if g.real >= -n - MARGIN:
        return "Re(gamma) not below -n"
    if _dist_neg_int(a + g + n) < MARGIN:
        return "alpha+gamma+n near a negative integer (shifted validity)"
    return None


_fk_entry(
    "FK5",
    "n-fold (w-1)^-2-measure integral raising the degree",
    (("w-1", lambda p: -p.gamma),),
    INV_SQ_MINUS,
    lambda p: -complex(p.gamma).real,
    lambda p, z, n: (-1.0) ** n
    / pochhammer(p.alpha + p.gamma + 1.0, n)
    * _pow(z - 1.0, -(p.gamma + n))
    * pval(p.alpha, p.beta - n, p.gamma + n, z),
    _fk5_cons,
    sample=_box_sampler(_z_int_p, g_box=(-4.4, -1.35)),
)


def _fk6_cons(p: JacobiParams, z: complex, n: int) -> str | None:
    a, b, g = complex(p.alpha), complex(p.beta), complex(p.gamma)
    bad = _p_valid(a, b, g)
    if bad:
        return bad
    if (b + g).real >= -n - MARGIN:
        return "Re(beta+gamma) not below -n"
    return None


_fk_entry(
    "FK6",
    "n-fold (w-1)^-2-measure integral shifting the second exponent up",
    (("1+w", lambda p: p.beta), ("w-1", lambda p: -(p.beta + p.gamma))),
    INV_SQ_MINUS,
    lambda p: -(complex(p.beta) + complex(p.gamma)).real,
    lambda p, z, n: (-1.0) ** n
    / (2.0**n * pochhammer(p.beta + p.gamma + 1.0, n))
    * _pow(z + 1.0, p.beta + n)
    * _pow(z - 1.0, -(p.beta + p.gamma + n))
    * pval(p.alpha, p.beta + n, p.gamma, z),
    _fk6_cons,
    sample=_box_sampler(_z_int_p, b_box=(-2.3, 0.4), g_box=(-4.4, -1.35)),
    note="RHS resolved to (-1)^n/(2^n(beta+gamma+1)_n) (z+1)^(beta+n) "
    "(z-1)^-(beta+gamma+n) P with the beta+n shift; the print drops the +n "
    "twice and the shift (brace typo).",
)


def _fk7_cons(p: JacobiParams, z: complex, n: int) -> str | None:
    a, b, g = complex(p.alpha), complex(p.beta), complex(p.gamma)
    bad = _p_valid(a, b, g)
    if bad:
        return bad
    s = a + b + g
    if abs(s) < MARGIN:
        return "alpha+beta+gamma near 0"
    if _poch_zero_dist(s + 1.0 - n, n) < MARGIN:
        return "(alpha+beta+gamma+1-n)_n vanishes"
    if _dist_nonpos_int(a + g) < MARGIN:
        return "alpha+gamma near a non-positive integer (boundary gamma factor)"
    if _dist_neg_int(a - n + g) < MARGIN:
        return "alpha-n+gamma near a negative integer (shifted validity)"
    if n >= 2:
        if _poch_zero_dist(1.0 - a - g, n - 1) < MARGIN:
            return "(1-alpha-gamma)_k vanishes inside the boundary series"
        if _poch_zero_dist(1.0 - s, n - 1) < MARGIN:
            return "(1-alpha-beta-gamma)_k vanishes inside the boundary series"
    return None


def _fk7_rhs(p: JacobiParams, z: complex, n: int) -> complex:
    a, b, g = complex(p.alpha), complex(p.beta), complex(p.gamma)
    s = a + b + g
    main = (
        _pow(z + 1.0, s + 1.0 - n)
        / pochhammer(s + 1.0 - n, n)
        * pval(a - n, b, g, z)
    )
    boundary = (
        _pow(2.0, s + 1.0 - n)
        * gamma(a + g)
        * reciprocal_gamma(a)
        * reciprocal_gamma(g + 1.0)
        / (s * math.factorial(n - 1))
        * _pow((z - 1.0) / (z + 1.0), n - 1)
        * phyp(
            (1.0 - n, 1.0 - a, 1.0),
            (1.0 - a - g, 1.0 - s),
            (z + 1.0) / (z - 1.0),
        ).value
    )
    return main - boundary


_fk_entry(
    "FK7",
    "n-fold (w+1)^-2-measure plain-weight integral with boundary series",
    (("1+w", lambda p: p.alpha + p.beta + p.gamma + 1.0),),
    INV_SQ_PLUS,
    lambda p: 0.0,
    _fk7_rhs,
    _fk7_cons,
)


def _fk8_cons(p: JacobiParams, z: complex, n: int) -> str | None:
    a, b, g = complex(p.alpha), complex(p.beta), complex(p.gamma)
    bad = _p_valid(a, b, g)
    if bad:
        return bad
    if _poch_zero_dist(b + g + 1.0, n) < MARGIN:
        return "(beta+gamma+1)_n vanishes"
    if n >= 2:
        if _poch_zero_dist(g + 2.0, n - 1) < MARGIN:
            return "(gamma+2)_k vanishes inside the boundary series"
        if _poch_zero_dist(b + g + 2.0, n - 1) < MARGIN:
            return "(beta+gamma+2)_k vanishes inside the boundary series"
    return None


def _fk8_rhs(p: JacobiParams, z: complex, n: int) -> complex:
    a, b, g = complex(p.alpha), complex(p.beta), complex(p.gamma)
    main = (
        pval(a - n, b, g + n, z)
        / (pochhammer(b + g + 1.0, n) * _pow(z + 1.0, g + n))
    )
    boundary = (
        gamma(a + g + 1.0)
        * reciprocal_gamma(a)
        * reciprocal_gamma(g + 2.0)
        / (_pow(2.0, g + n) * (b + g + 1.0) * math.factorial(n - 1))
        * _pow((z - 1.0) / (z + 1.0), n - 1)
        * phyp(
            (1.0 - n, 1.0 - a, 1.0),
            (2.0 + g, 2.0 + b + g),
            (z + 1.0) / (z - 1.0),
        ).value
    )
    return main - boundary


_fk_entry(
    "FK8",
    "n-fold (w+1)^-2-measure degree-scaled integral with boundary series",
    (("1+w", lambda p: -p.gamma),),
    INV_SQ_PLUS,
    lambda p: 0.0,
    _fk8_rhs,
    _fk8_cons,
)


# --- FT: Taylor section -------------------------------------------------------


def _ft1_lhs(p: JacobiParams, z: complex, n: int) -> complex:
    return taylor_section(p, n, z)[0]


def _ft1_rhs(p: JacobiParams, z: complex, n: int) -> complex:
    return taylor_section(p, n, z)[1]


def _ft1_cons(p: JacobiParams, z: complex, n: int) -> str | None:
    a, b, g = complex(p.alpha), complex(p.beta), complex(p.gamma)
    bad = _p_valid(a, b, g)
    if bad:
        return bad
    if _dist_nonpos_int(-(a + b + g)) < MARGIN:
        return "alpha+beta+gamma near a non-negative integer (prefactor pole)"
    return None


_register(
    IdentityDescriptor(
        "FT1",
        "truncated Taylor sum about 1 equals its terminating series closed form",
        (1, 2, 3),
        1e-6,
        _ft1_lhs,
        _ft1_rhs,
        _ft1_cons,
        _P_INT_SAMPLE,
        note="prefactor power resolved to ((1-z)/2)^(n-1); the printed "
        "((z-1)/2)^(n-1) flips every even-n value.",
    )
)


# --- SRL: first derivative via the raising/lowering pair ----------------------


def _srl_lhs(p: JacobiParams, z: complex, n: int) -> complex:
    return plain_derivative(_weighted_q(p, None), z, 1, Cut.segment(-1.0, 1.0))


def _srl_rhs(p: JacobiParams, z: complex, n: int) -> complex:
    a, b, g = complex(p.alpha), complex(p.beta), complex(p.gamma)
    return -(a + b + g + 1.0) / 2.0 * qval(a + 1.0, b + 1.0, g - 1.0, z)


def raising_form(p: JacobiParams, z: complex) -> complex:
    """First derivative of Q written with the degree-raising companion."""
    a, b, g = complex(p.alpha), complex(p.beta), complex(p.gamma)
    return (b - a - z * (a + b)) / (z * z - 1.0) * qval(a, b, g, z) - 2.0 * (
        g + 1.0
    ) / (z * z - 1.0) * qval(a - 1.0, b - 1.0, g + 1.0, z)


def _srl_cons(p: JacobiParams, z: complex, n: int) -> str | None:
    a, b, g = complex(p.alpha), complex(p.beta), complex(p.gamma)
    bad = _q_valid(a, b, g)
    if bad:
        return bad
    if _dist_neg_int(a + g) < MARGIN or _dist_neg_int(b + g) < MARGIN:
        return "shifted degree validity fails"
    return None


_register(
    IdentityDescriptor(
        "SRL",
        "first derivative of the second-kind function via its lowering form",
        (1,),
        1e-8,
        _srl_lhs,
        _srl_rhs,
        _srl_cons,
        _Q_SAMPLE,
    )
)


# --- SD: plain n-th derivatives of weighted Q ---------------------------------

_sd_cut_full = Q_DERIV_CUT

_sd_entry(
    "SD1",
    "n-th derivative of the fully weighted second-kind function",
    lambda p: (lambda w: _pow(w - 1.0, p.alpha) * _pow(1.0 + w, p.beta)),
    lambda p, z, n: (-2.0) ** n
    * pochhammer(p.gamma + 1.0, n)
    * _pow(z - 1.0, p.alpha - n)
    * _pow(1.0 + z, p.beta - n)
    * qval(p.alpha - n, p.beta - n, p.gamma + n, z),
    note="theorem constant (-2)^n(gamma+1)_n confirmed; the proof display's "
    "+2(gamma+1) belongs to the (1-z)-weighted operand.",
)


def _sd2_rhs(p: JacobiParams, z: complex, n: int) -> complex:
    a, b, g = complex(p.alpha), complex(p.beta), complex(p.gamma)

    def inner(w: complex) -> complex:
        return (
            _pow(w - 1.0, a + n) * _pow(w + 1.0, b + n) * qval(a + n, b + n, g - n, w)
        )

    deriv = plain_derivative(inner, z, n, Q_DERIV_CUT)
    return (
        deriv
        / (2.0**n * pochhammer(-g, n))
        * _pow(z - 1.0, -a)
        * _pow(z + 1.0, -b)
    )


def _sd2_cons(p: JacobiParams, z: complex, n: int) -> str | None:
    bad = _q_valid(p.alpha, p.beta, p.gamma)
    if bad:
        return bad
    if _poch_zero_dist(-complex(p.gamma), n) < MARGIN:
        return "(-gamma)_n vanishes"
    return None


_register(
    IdentityDescriptor(
        "SD2",
        "round trip: Q recovered from the derivative of its shifted companion",
        (1, 2, 3),
        1e-8,
        lambda p, z, n: qval(p.alpha, p.beta, p.gamma, z),
        _sd2_rhs,
        _sd2_cons,
        _Q_SAMPLE,
    )
)

_sd_entry(
    "SD3",
    "n-th derivative of the (z-1)-weighted second-kind function",
    lambda p: (lambda w: _pow(w - 1.0, p.alpha)),
    lambda p, z, n: pochhammer(-p.alpha - p.gamma, n)
    * _pow(z - 1.0, p.alpha - n)
    * qval(p.alpha - n, p.beta + n, p.gamma, z),
)

_sd_entry(
    "SD4",
    "plain n-th derivative of the second-kind function",
    None,
    lambda p, z, n: (-2.0) ** -n
    * pochhammer(p.alpha + p.beta + p.gamma + 1.0, n)
    * qval(p.alpha + n, p.beta + n, p.gamma - n, z),
)


# --- SI: improper multi-integrals of Q ----------------------------------------


def _si1_cons(p: JacobiParams, z: complex, n: int) -> str | None:
    a, b, g = complex(p.alpha), complex(p.beta), complex(p.gamma)
    bad = _q_valid(a, b, g)
    if bad:
        return bad
    if a.real <= -1.0 + RAY_MARGIN:
        return "Re(alpha) not above -1"
    if b.real <= -1.0 + RAY_MARGIN:
        return "Re(beta) not above -1"
    if g.real <= n + RAY_MARGIN:
        return "Re(gamma) not above n"
    return None


_si_entry(
    "SI1",
    "n-fold weighted ray integral of Q lowering the degree",
    (("w-1", lambda p: p.alpha), ("1+w", lambda p: p.beta)),
    lambda p, z, n: _pow(z - 1.0, p.alpha + n)
    * _pow(1.0 + z, p.beta + n)
    / (2.0**n * pochhammer(p.gamma - n + 1.0, n))
    * qval(p.alpha + n, p.beta + n, p.gamma - n, z),
    _si1_cons,
    _box_sampler(_z_q, g_box=(1.3, 3.4)),
)


def _si2_cons(p: JacobiParams, z: complex, n: int) -> str | None:
    a, b, g = complex(p.alpha), complex(p.beta), complex(p.gamma)
    bad = _q_valid(a, b, g)
    if bad:
        return bad
    if a.real <= -1.0 + RAY_MARGIN:
        return "Re(alpha) not above -1"
    if b.real <= n - 1 + RAY_MARGIN:
        return "Re(beta) not above n-1"
    if (b + g + 1.0).real <= n + RAY_MARGIN:
        return "Re(beta+gamma+1) not above n"
    if _dist_neg_int(b - n + g) < MARGIN:
        return "beta-n+gamma near a negative integer (shifted validity)"
    return None


_si_entry(
    "SI2",
    "n-fold (w-1)-weighted ray integral of Q trading the exponents",
    (("w-1", lambda p: p.alpha),),
    lambda p, z, n: _pow(z - 1.0, p.alpha + n)
    / pochhammer(p.alpha + p.gamma + 1.0, n)
    * qval(p.alpha + n, p.beta - n, p.gamma, z),
    _si2_cons,
    _box_sampler(_z_q, b_box=(1.3, 3.2), g_box=(-0.4, 2.4)),
)


def _si3_cons(p: JacobiParams, z: complex, n: int) -> str | None:
    a, b, g = complex(p.alpha), complex(p.beta), complex(p.gamma)
    bad = _q_valid(a, b, g)
    if bad:
        return bad
    if a.real <= n - 1 + RAY_MARGIN:
        return "Re(alpha) not above n-1"
    if b.real <= n - 1 + RAY_MARGIN:
        return "Re(beta) not above n-1"
    if (a + b + g + 1.0).real <= n + RAY_MARGIN:
        return "Re(alpha+beta+gamma+1) not above n"
    if _poch_zero_dist(a + b + g - n + 1.0, n) < MARGIN:
        return "(alpha+beta+gamma-n+1)_n vanishes"
    return None


_si_entry(
    "SI3",
    "n-fold plain ray integral of Q raising the degree",
    (),
    lambda p, z, n: 2.0**n
    / pochhammer(p.alpha + p.beta + p.gamma - n + 1.0, n)
    * qval(p.alpha - n, p.beta - n, p.gamma + n, z),
    _si3_cons,
    _box_sampler(_z_q, a_box=(1.3, 3.2), b_box=(1.3, 3.2), g_box=(-0.4, 2.4)),
)


# --- SW: operator-power identities for Q --------------------------------------

_sw_entry(
    "SW1",
    "second-kind analog of the degree-preserving (z-1) operator power",
    lambda p: (lambda w: _pow(w - 1.0, p.alpha + p.beta + p.gamma + 1.0)),
    1.0,
    lambda p, z, n: pochhammer(p.alpha + p.beta + p.gamma + 1.0, n)
    * _pow(z - 1.0, p.alpha + p.beta + p.gamma + 1.0 + n)
    * qval(p.alpha, p.beta + n, p.gamma, z),
)


def _sw2_extra(p: JacobiParams, z: complex, n: int) -> str | None:
    if _dist_neg_int(complex(p.alpha) + complex(p.gamma) - n) < MARGIN:
        return "alpha+gamma-n near a negative integer (shifted validity)"
    return None


_sw_entry(
    "SW2",
    "second-kind analog of the degree-lowering (z-1) operator power",
    lambda p: (lambda w: _pow(w - 1.0, -p.gamma)),
    1.0,
    lambda p, z, n: pochhammer(-p.alpha - p.gamma, n)
    * _pow(z - 1.0, n - p.gamma)
    * qval(p.alpha, p.beta + n, p.gamma - n, z),
    extra=_sw2_extra,
)

_sw_entry(
    "SW3",
    "second-kind analog of the degree-raising (z-1) operator power",
    lambda p: (
        lambda w: _pow(w + 1.0, p.beta) * _pow(w - 1.0, p.alpha + p.gamma + 1.0)
    ),
    1.0,
    lambda p, z, n: 2.0**n
    * pochhammer(p.gamma + 1.0, n)
    * _pow(z + 1.0, p.beta - n)
    * _pow(z - 1.0, p.alpha + p.gamma + 1.0 + n)
    * qval(p.alpha, p.beta - n, p.gamma + n, z),
)


def _sw4_extra(p: JacobiParams, z: complex, n: int) -> str | None:
    if _dist_neg_int(complex(p.beta) - n + complex(p.gamma)) < MARGIN:
        return "beta-n+gamma near a negative integer (shifted validity)"
    return None


_sw_entry(
    "SW4",
    "second-kind analog of the exponent-lowering (z-1) operator power",
    lambda p: (
        lambda w: _pow(w + 1.0, p.beta) * _pow(w - 1.0, -(p.beta + p.gamma))
    ),
    1.0,
    lambda p, z, n: 2.0**n
    * pochhammer(-p.beta - p.gamma, n)
    * _pow(z + 1.0, p.beta - n)
    * _pow(z - 1.0, -(p.beta - n + p.gamma))
    * qval(p.alpha, p.beta - n, p.gamma, z),
    extra=_sw4_extra,
)

_SW_MIRROR_NOTE = (
    "(-1)^n restored: the (z+1) operator corresponds to d/dx with "
    "x = 2/(1+z), whose Jacobian is negative, unlike the first-kind case."
)

_sw_entry(
    "SW5",
    "second-kind analog of the mirrored exponent-raising operator power",
    lambda p: (lambda w: _pow(w + 1.0, p.alpha + p.beta + p.gamma + 1.0)),
    -1.0,
    lambda p, z, n: (-1.0) ** n
    * pochhammer(p.alpha + p.beta + p.gamma + 1.0, n)
    * _pow(z + 1.0, p.alpha + p.beta + p.gamma + 1.0 + n)
    * qval(p.alpha + n, p.beta, p.gamma, z),
    note=_SW_MIRROR_NOTE,
)


def _sw6_extra(p: JacobiParams, z: complex, n: int) -> str | None:
    if _dist_neg_int(complex(p.beta) + complex(p.gamma) - n) < MARGIN:
        return "beta+gamma-n near a negative integer (shifted validity)"
    return None


_sw_entry(
    "SW6",
    "second-kind analog of the mirrored degree-lowering operator power",
    lambda p: (lambda w: _pow(w + 1.0, -p.gamma)),
    -1.0,
    lambda p, z, n: (-1.0) ** n
    * pochhammer(1.0 + p.beta + p.gamma - n, n)
    * _pow(z + 1.0, n - p.gamma)
    * qval(p.alpha + n, p.beta, p.gamma - n, z),
    extra=_sw6_extra,
    note=_SW_MIRROR_NOTE,
)

_sw_entry(
    "SW7",
    "second-kind analog of the mirrored degree-raising operator power",
    lambda p: (
        lambda w: _pow(w - 1.0, p.alpha) * _pow(w + 1.0, p.beta + p.gamma + 1.0)
    ),
    -1.0,
    lambda p, z, n: (-2.0) ** n
    * pochhammer(p.gamma + 1.0, n)
    * _pow(z - 1.0, p.alpha - n)
    * _pow(z + 1.0, p.beta + p.gamma + n + 1.0)
    * qval(p.alpha - n, p.beta, p.gamma + n, z),
    note=_SW_MIRROR_NOTE + " (z+1) exponent also corrected to beta+gamma+n+1.",
)

_sw_entry(
    "SW8",
    "second-kind analog of the mirrored exponent-lowering operator power",
    lambda p: (
        lambda w: _pow(w - 1.0, p.alpha) * _pow(w + 1.0, -(p.alpha + p.gamma))
    ),
    -1.0,
    lambda p, z, n: 2.0**n
    * pochhammer(-p.alpha - p.gamma, n)
    * _pow(z - 1.0, p.alpha - n)
    * _pow(z + 1.0, -(p.alpha - n + p.gamma))
    * qval(p.alpha - n, p.beta, p.gamma, z),
    note=_SW_MIRROR_NOTE,
)


# --- SQ / SN: integral representations of Q -----------------------------------


def _sq_cons(shift_from_n: bool):
    def cons(p: JacobiParams, z: complex, n: int) -> str | None:
        a, b, g = complex(p.alpha), complex(p.beta), complex(p.gamma)
        bad = _q_valid(a, b, g)
        if bad:
            return bad
        k = n if shift_from_n else 0
        if (a + g - k).real <= -1.0 + MARGIN:
            return "Re(alpha+gamma-k) not above -1"
        if (b + g - k).real <= -1.0 + MARGIN:
            return "Re(beta+gamma-k) not above -1"
        if k and _poch_zero_dist(-g, k) < MARGIN:
            return "(-gamma)_k vanishes"
        return None

    return cons


def _sq_lhs(p: JacobiParams, z: complex, n: int) -> complex:
    _count()
    return jacobi_q_integral_shifted(QIntegralSpec(p, z, n)).value


def _sq_rhs(p: JacobiParams, z: complex, n: int) -> complex:
    return qval(p.alpha, p.beta, p.gamma, z)


_register(
    IdentityDescriptor(
        "SQ0",
        "weighted-kernel integral representation equals the series value",
        (0,),
        1e-6,
        _sq_lhs,
        _sq_rhs,
        _sq_cons(False),
        _box_sampler(_z_q, g_box=(0.0, 2.6)),
    )
)

_register(
    IdentityDescriptor(
        "SQk",
        "shifted kernel integral with interior polynomial equals the series value",
        (0, 1, 2),
        1e-6,
        _sq_lhs,
        _sq_rhs,
        _sq_cons(True),
        _box_sampler(_z_q, a_box=(0.3, 2.8), b_box=(0.3, 2.8), g_box=(1.2, 2.8)),
    )
)


def _sn_lhs(p: JacobiParams, z: complex, n: int) -> complex:
    _count()
    return neumann_q(n, p.alpha, p.beta, z).value


def _sn_rhs(p: JacobiParams, z: complex, n: int) -> complex:
    return qval(p.alpha, p.beta, float(n), z)


def _sn_cons(p: JacobiParams, z: complex, n: int) -> str | None:
    a, b = complex(p.alpha), complex(p.beta)
    if a.real <= -1.0 + MARGIN:
        return "Re(alpha) not above -1"
    if b.real <= -1.0 + MARGIN:
        return "Re(beta) not above -1"
    return None


_register(
    IdentityDescriptor(
        "SN",
        "integer-degree kernel integral against the matching polynomial",
        (0, 1, 2),
        1e-6,
        _sn_lhs,
        _sn_rhs,
        _sn_cons,
        _box_sampler(_z_q),
    )
)


# --- ODE residual entries ------------------------------------------------------


def _ode_terms(kind: str, p: JacobiParams, z: complex) -> tuple[complex, complex, complex]:
    a, b, g = complex(p.alpha), complex(p.beta), complex(p.gamma)
    if kind == "P":
        f = _weighted_p(p, None)
        cut = P_PLAIN_CUT
    else:
        f = _weighted_q(p, None)
        cut = Cut.segment(-1.0, 1.0)
    radius = _contour_radius(cut, z)
    w0, w1, w2 = contour_derivatives(f, z, (0, 1, 2), radius)
    t1 = (1.0 - z * z) * w2
    t2 = (b - a - z * (a + b + 2.0)) * w1
    t3 = g * (a + b + g + 1.0) * w0
    return t1, t2, t3


def _ode_entry(ident: str, kind: str, sample: Sampler, cons) -> None:
    def lhs(p: JacobiParams, z: complex, n: int) -> complex:
        t1, t2, t3 = _ode_terms(kind, p, z)
        return t1 + t2

    def rhs(p: JacobiParams, z: complex, n: int) -> complex:
        t1, t2, t3 = _ode_terms(kind, p, z)
        return -t3

    _register(
        IdentityDescriptor(
            ident,
            f"differential-equation residual of the {kind} solution",
            (0,),
            1e-7,
            lhs,
            rhs,
            cons,
            sample,
        )
    )


_ode_entry(
    "ODE-P",
    "P",
    _P_DERIV_SAMPLE,
    lambda p, z, n: _p_valid(p.alpha, p.beta, p.gamma),
)
_ode_entry(
    "ODE-Q",
    "Q",
    _Q_SAMPLE,
    lambda p, z, n: _q_valid(p.alpha, p.beta, p.gamma),
)


CATALOG: dict[str, IdentityDescriptor] = dict(_CATALOG)

CATALOG_ORDER: tuple[str, ...] = tuple(CATALOG)
