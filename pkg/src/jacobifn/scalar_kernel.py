"""Complex gamma function, Pochhammer symbols, and product conventions.

Everything downstream (hypergeometric series, Jacobi-function prefactors,
identity right-hand sides) is built on these few scalar operations, so they
are kept dependency-free and exact where exactness matters: rising factorials
with a non-negative count are always computed as literal products so that
terminating series see exact zeros.
"""

from __future__ import annotations

import cmath
import math

from .errors import PoleError, UndefinedError

# Lanczos rational approximation, 15-term coefficient table (g = 607/128).
# Relative error below 1e-14 on the right half-plane; the reflection formula
# extends it to Re z < 0.5.
_LANCZOS_G = 607.0 / 128.0
_LANCZOS_C = (
    0.99999999999999709182,
    57.156235665862923517,
    -59.597960355475491248,
    14.136097974741747174,
    -0.49191381609762019978,
    0.33994649984811888699e-4,
    0.46523628927048575665e-4,
    -0.98374475304879564677e-4,
    0.15808870322491248884e-3,
    -0.21026444172410488319e-3,
    0.21743961811521264320e-3,
    -0.16431810653676389022e-3,
    0.84418223983852743293e-4,
    -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
)

_LOG_SQRT_2PI = 0.91893853320467274178
POLE_TOL = 1e-12

Complex = complex | float | int


def nearest_nonpositive_integer(z: Complex) -> int:
    """Closest element of {0, -1, -2, ...} to z (by real part)."""
    z = complex(z)
    return min(0, round(z.real))


def distance_to_nonpositive_integers(z: Complex) -> float:
    """Euclidean distance from z to the set of non-positive integers."""
    z = complex(z)
    m = nearest_nonpositive_integer(z)
    return math.hypot(z.real - m, z.imag)


def is_gamma_pole(z: Complex, tol: float = POLE_TOL) -> bool:
    """True when z is within tol of a non-positive integer."""
    return distance_to_nonpositive_integers(z) < tol


def _lanczos_series(z: complex) -> complex:
    s = complex(_LANCZOS_C[0])
    for k in range(1, len(_LANCZOS_C)):
        s += _LANCZOS_C[k] / (z + (k - 1))
    return s


def gamma(z: Complex) -> complex:
    """Principal gamma function for complex argument.

    Raises PoleError when z is within the pole tolerance of a non-positive
    integer.
    """
    z = complex(z)
    if is_gamma_pole(z):
        raise PoleError(f"gamma pole at z={z}")
    if z.real < 0.5:
        # Reflection: gamma(z) = pi / (sin(pi z) * gamma(1 - z)).
        return math.pi / (cmath.sin(math.pi * z) * gamma(1.0 - z))
    t = z + (_LANCZOS_G - 0.5)
    return (
        math.sqrt(2.0 * math.pi)
        * t ** (z - 0.5)
        * cmath.exp(-t)
        * _lanczos_series(z)
    )


def log_gamma(z: Complex) -> complex:
    """A logarithm of gamma(z), consistent under exp but not principal.

    Intended for forming products/ratios of gammas in log space; individual
    imaginary parts may differ from the principal log-gamma branch by
    multiples of 2*pi, which cancels once the combined sum is exponentiated.
    """
    z = complex(z)
    if is_gamma_pole(z):
        raise PoleError(f"log_gamma pole at z={z}")
    if z.real < 0.5:
        return (
            math.log(math.pi)
            - cmath.log(cmath.sin(math.pi * z))
            - log_gamma(1.0 - z)
        )
    t = z + (_LANCZOS_G - 0.5)
    return (
        _LOG_SQRT_2PI
        + (z - 0.5) * cmath.log(t)
        - t
        + cmath.log(_lanczos_series(z))
    )


def reciprocal_gamma(z: Complex) -> complex:
    """1/gamma(z) as an entire function; exactly 0 on the non-positive integers."""
    z = complex(z)
    if z.imag == 0.0 and z.real <= 0.0 and z.real == int(z.real):
        return 0.0 + 0.0j
    if z.real < 0.5:
        # Entire continuation through the poles of gamma.
        return cmath.sin(math.pi * z) * gamma(1.0 - z) / math.pi
    return 1.0 / gamma(z)


def pochhammer(a: Complex, n: int) -> complex:
    """Rising factorial (a)_n for integer n of either sign.

    n >= 0 uses the literal product a(a+1)...(a+n-1), preserving exact zeros
    for terminating series.  n < 0 uses the gamma-ratio extension in its
    cancellation-free product form 1 / ((a-1)(a-2)...(a+n)); a zero factor
    there means the extension is genuinely undefined.
    """
    if n != int(n):
        raise ValueError("pochhammer count must be an integer")
    n = int(n)
    a = complex(a)
    if n == 0:
        return 1.0 + 0.0j
    if n > 0:
        p = 1.0 + 0.0j
        for j in range(n):
            p *= a + j
        return p
    d = 1.0 + 0.0j
    for j in range(1, -n + 1):
        d *= a - j
    if d == 0:
        raise UndefinedError(f"({a})_{n} hits a pole of the gamma-ratio extension")
    return 1.0 / d


def binomial(z: Complex, n: int) -> complex:
    """Generalized binomial coefficient (-1)^n (-z)_n / n! for n >= 0."""
    if n < 0:
        raise ValueError("binomial lower index must be non-negative")
    sign = -1.0 if n % 2 else 1.0
    return sign * pochhammer(-complex(z), n) / math.factorial(n)


def pochhammer_product(a_list: list[Complex] | tuple[Complex, ...], k: int) -> complex:
    """Product of (a_i)_k over the list; the empty list gives 1."""
    p = 1.0 + 0.0j
    for a in a_list:
        p *= pochhammer(a, k)
    return p


def gamma_product(a_list: list[Complex] | tuple[Complex, ...]) -> complex:
    """Product of gamma(a_i) over the list; the empty list gives 1."""
    p = 1.0 + 0.0j
    for a in a_list:
        p *= gamma(a)
    return p
