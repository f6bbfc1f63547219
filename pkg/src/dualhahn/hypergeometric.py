"""Gauss 2F1 and terminating 3F2 series, plus the Gauss unit-argument sum."""
import cmath
import math

from .complex_math import log_gamma, nonpositive_integer
from .errors import DomainError, NoConvergence, PoleError

MAX_TERMS = 1_000_000
SERIES_RADIUS = 0.95
_TERM_RTOL = 1e-15
_TERMINATE_TOL = 1e-12
# below this modulus a transformed argument is summed directly
_TRANSFORM_RADIUS = 0.75


def _termination_index(a, b):
    """Smallest ``m`` with a numerator equal to ``-m``, or None."""
    ms = [m for m in (nonpositive_integer(a, _TERMINATE_TOL),
                      nonpositive_integer(b, _TERMINATE_TOL)) if m is not None]
    return min(ms) if ms else None


def _series(a, b, c, t, max_terms=MAX_TERMS):
    # canonical order makes the result independent of argument order
    a, b = sorted((complex(a), complex(b)), key=lambda v: (v.real, v.imag))
    c = complex(c)
    t = complex(t)
    stop = _termination_index(a, b)
    c_pole = nonpositive_integer(c, _TERMINATE_TOL)
    if c_pole is not None and (stop is None or stop > c_pole):
        raise DomainError(f"c = {c!r} is a non-positive integer")
    if stop is not None:
        if nonpositive_integer(a, _TERMINATE_TOL) == stop:
            a = complex(-stop)
        else:
            b = complex(-stop)
        total = term = 1.0 + 0j
        for k in range(stop):
            term *= (a + k) * (b + k) / ((c + k) * (k + 1)) * t
            total += term
        return total
    total = term = 1.0 + 0j
    small = 0
    for k in range(max_terms):
        term *= (a + k) * (b + k) / ((c + k) * (k + 1)) * t
        total += term
        if abs(term) <= _TERM_RTOL * abs(total):
            small += 1
            if small == 2:
                return total
        else:
            small = 0
    raise NoConvergence(f"2F1 series did not converge in {max_terms} terms at t={t!r}")


def hyp2f1_series(a, b, c, t):
    """Gauss hypergeometric series for ``|t| <= 0.95``.

    Summed with the multiplicative term ratio; stops once two consecutive
    terms fall below ``1e-15`` of the partial sum. A numerator within
    ``1e-12`` of a non-positive integer ``-m`` truncates the sum after
    ``m + 1`` terms.
    """
    t = complex(t)
    if abs(t) > SERIES_RADIUS:
        raise DomainError(f"|t| = {abs(t):.6g} exceeds the series radius {SERIES_RADIUS}")
    return _series(a, b, c, t)


def _gamma_quotient(num, den):
    """``prod Gamma(num) / prod Gamma(den)``; zero when a denominator sits on a pole."""
    for d in den:
        if nonpositive_integer(d) is not None:
            return 0j
    expo = sum(log_gamma(x) for x in num) - sum(log_gamma(x) for x in den)
    return cmath.exp(expo)


def hyp2f1(a, b, c, t):
    """Gauss hypergeometric function for ``|t| < 1``.

    Small ``|t|`` sums the series directly. Otherwise the argument is mapped
    to ``t/(t-1)`` (Pfaff) or ``1-t`` (the connection formula built from the
    Gauss sum), whichever lands inside the fast-convergence disc. The
    ``1-t`` route needs ``c-a-b`` to be non-integer.
    """
    a, b, c, t = complex(a), complex(b), complex(c), complex(t)
    if abs(t) >= 1.0:
        raise DomainError(f"|t| = {abs(t):.6g} is not < 1")
    if abs(t) <= _TRANSFORM_RADIUS or _termination_index(a, b) is not None:
        return _series(a, b, c, t)
    w = t / (t - 1.0)
    if abs(w) <= _TRANSFORM_RADIUS:
        return (1.0 - t) ** (-a) * _series(a, c - b, c, w)
    u = 1.0 - t
    s = c - a - b
    if abs(u) <= _TRANSFORM_RADIUS:
        if nonpositive_integer(s) is not None or nonpositive_integer(-s) is not None:
            raise DomainError(f"c - a - b = {s!r} is an integer; logarithmic case unsupported")
        first = _gamma_quotient((c, s), (c - a, c - b))
        second = _gamma_quotient((c, -s), (a, b))
        out = 0j
        if first != 0:
            out += first * _series(a, b, 1.0 - s, u)
        if second != 0:
            out += second * cmath.exp(s * cmath.log(u)) * _series(c - a, c - b, 1.0 + s, u)
        return out
    return _series(a, b, c, t)


def hyp3f2_terminating(n, p1, p2, q1, q2):
    """``3F2(-n, p1, p2; q1, q2; 1)`` as an exact (n+1)-term sum.

    When ``p2`` is the conjugate of ``p1`` and both ``q`` are real the sum
    runs in real arithmetic and the result has zero imaginary part.
    """
    if n < 0 or int(n) != n:
        raise DomainError(f"n must be a nonnegative integer, got {n!r}")
    n = int(n)
    p1, p2, q1, q2 = complex(p1), complex(p2), complex(q1), complex(q2)
    for q in (q1, q2):
        m = nonpositive_integer(q, _TERMINATE_TOL)
        if m is not None and m < n:
            raise DomainError(f"denominator parameter {q!r} hits zero within {n + 1} terms")
    if p2 == p1.conjugate() and q1.imag == 0 and q2.imag == 0:
        x, y2 = p1.real, p1.imag * p1.imag
        r1, r2 = q1.real, q2.real
        total = term = 1.0
        for k in range(n):
            term *= (k - n) * ((x + k) ** 2 + y2) / ((r1 + k) * (r2 + k) * (k + 1))
            total += term
        return complex(total, 0.0)
    total = term = 1.0 + 0j
    for k in range(n):
        term *= (k - n) * (p1 + k) * (p2 + k) / ((q1 + k) * (q2 + k) * (k + 1))
        total += term
    return total


def gauss_sum(a, b, c):
    """Closed form of ``2F1(a, b; c; 1)``, valid for ``Re(c - a - b) > 0``."""
    a, b, c = complex(a), complex(b), complex(c)
    s = c - a - b
    if s.real <= 0:
        raise DomainError(f"Gauss sum needs Re(c - a - b) > 0, got {s.real:.6g}")
    for x in (c, s):
        if nonpositive_integer(x) is not None:
            raise PoleError(f"gamma pole at {x!r} in Gauss sum")
    return _gamma_quotient((c, s), (c - a, c - b))
