"""Complex gamma, log-gamma on its continuous branch, and Pochhammer symbols.

Everything here works on plain Python ``complex`` values and is free of
global state.
"""
import cmath
import math

from .errors import PoleError

POLE_TOL = 1e-12
_LOG_MAX = 709.78  # log(sys.float_info.max)

# Lanczos coefficients for g = 7, n = 9.
_LANCZOS_G = 7.0
_LANCZOS_COEF = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)
_HALF_LOG_2PI = 0.5 * math.log(2.0 * math.pi)

# B_{2k} / (2k (2k - 1)) for k = 1..8
_STIRLING_COEF = (
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
    -3617.0 / 122400.0,
)
_STIRLING_MIN_RE = 15.0
_POCHHAMMER_DIRECT_MAX = 64


def nonpositive_integer(z, tol=POLE_TOL):
    """Return ``m`` if ``z`` is within ``tol`` of ``-m`` (``m >= 0``), else None."""
    z = complex(z)
    r = round(z.real)
    if r <= 0 and abs(z - r) <= tol:
        return int(-r)
    return None


def _check_pole(z):
    if nonpositive_integer(z) is not None:
        raise PoleError(f"gamma has a pole at {z!r}")


def _lanczos(z):
    # Re z >= 0.5, Im z >= 0
    z = z - 1.0
    x = _LANCZOS_COEF[0]
    for i in range(1, len(_LANCZOS_COEF)):
        x += _LANCZOS_COEF[i] / (z + i)
    t = z + _LANCZOS_G + 0.5
    expo = (z + 0.5) * cmath.log(t) - t + _HALF_LOG_2PI
    if expo.real > _LOG_MAX:
        raise OverflowError(f"gamma({z + 1!r}) exceeds double precision range")
    return cmath.exp(expo) * x


def gamma(z):
    """Complex gamma function.

    Lanczos approximation on ``Re z >= 0.5`` and the reflection formula
    elsewhere. Results for the lower half-plane are the exact conjugates of
    the upper half-plane ones.
    """
    z = complex(z)
    _check_pole(z)
    if z.imag < 0:
        return gamma(z.conjugate()).conjugate()
    if z.real >= 0.5:
        return _lanczos(z)
    if z.imag > 100.0:
        # sin(pi z) overflows long before gamma itself underflows
        return cmath.exp(log_gamma(z))
    s = cmath.sin(math.pi * z)
    g = _lanczos(1.0 - z)
    denom = s * g
    if denom == 0 or abs(denom) < math.pi / 1.7976931348623157e308:
        raise OverflowError(f"gamma({z!r}) exceeds double precision range")
    return math.pi / denom


def _stirling(w):
    # log Gamma(w) for Re w >= _STIRLING_MIN_RE
    lw = cmath.log(w)
    series = 0.0
    inv = 1.0 / w
    inv2 = inv * inv
    power = inv
    for c in _STIRLING_COEF:
        series += c * power
        power *= inv2
    return (w - 0.5) * lw - w + _HALF_LOG_2PI + series


def log_gamma(z):
    """Logarithm of the gamma function on its continuous branch.

    The imaginary part is the branch obtained by analytic continuation from
    the positive real axis in the plane cut along ``(-inf, 0]``; on the cut
    itself the limit from above is returned. The argument is shifted up by
    the recurrence until Stirling's series is accurate, and the logs of the
    shift factors are subtracted one by one so no phase is lost.
    """
    z = complex(z)
    _check_pole(z)
    if z.imag < 0:
        return log_gamma(z.conjugate()).conjugate()
    if z.imag == 0 and z.real > 0:
        return complex(math.lgamma(z.real), 0.0)
    shift = max(0, math.ceil(_STIRLING_MIN_RE - z.real))
    acc = 0j
    for k in range(shift):
        acc += cmath.log(z + k)
    return _stirling(z + shift) - acc


def gamma_abs(z):
    """``|Gamma(z)|`` computed without forming ``Gamma(z)``."""
    return math.exp(log_gamma(z).real)


def gamma_arg(z):
    """Continuous-branch argument of ``Gamma(z)`` (not reduced mod 2 pi)."""
    return log_gamma(z).imag


def pochhammer(z, n):
    """Rising factorial ``z (z+1) ... (z+n-1)``; ``(z)_0 = 1``."""
    if n < 0 or int(n) != n:
        raise ValueError(f"n must be a nonnegative integer, got {n!r}")
    n = int(n)
    z = complex(z)
    near_pole = (nonpositive_integer(z, 1e-9) is not None
                 or nonpositive_integer(z + n, 1e-9) is not None)
    if n <= _POCHHAMMER_DIRECT_MAX or near_pole:
        out = 1.0 + 0j
        for k in range(n):
            out *= z + k
        if not (math.isfinite(out.real) and math.isfinite(out.imag)):
            raise OverflowError(f"pochhammer({z!r}, {n}) exceeds double precision range")
        return out
    expo = log_gamma(z + n) - log_gamma(z)
    if expo.real > _LOG_MAX:
        raise OverflowError(f"pochhammer({z!r}, {n}) exceeds double precision range")
    return cmath.exp(expo)
