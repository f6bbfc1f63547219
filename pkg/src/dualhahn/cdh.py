"""The continuous dual Hahn polynomial in the generating-function normalization.

    S_n(y^2; a, b) = (mu+a)_n (mu+b)_n / (n! (a+b)_n)
                     * 3F2(-n, mu+iy, mu-iy; mu+a, mu+b; 1)

with generating function

    sum_n S_n t^n = (1-t)^(-mu+iy) 2F1(a+iy, b+iy; a+b; t).
"""
import cmath
import math
import numbers
from dataclasses import dataclass, field

import numpy as np
from mpmath.ctx_mp import MPContext

from .complex_math import log_gamma
from .errors import DomainError
from .hypergeometric import hyp2f1

MAX_DEGREE = 1_000_000
_GUARD_BITS = 64
_MAX_PREC = 200_000


@dataclass(frozen=True)
class CdhParams:
    """Real parameter triple ``(mu, a, b)``.

    The default constructor is strict (all three parameters positive), which
    is what the weight, norms and asymptotic envelope need. ``relaxed``
    only asks for ``mu + a > 0`` and ``mu + b > 0``, so a single parameter may
    go negative for bound-state studies.
    """

    mu: float
    a: float
    b: float
    strict: bool = field(default=True, compare=False)

    def __post_init__(self):
        for name in ("mu", "a", "b"):
            v = getattr(self, name)
            if not isinstance(v, numbers.Real) or not math.isfinite(v):
                raise DomainError(f"{name} must be a finite real number, got {v!r}")
            object.__setattr__(self, name, float(v))
        if self.mu + self.a <= 0 or self.mu + self.b <= 0:
            raise DomainError(f"need mu+a > 0 and mu+b > 0, got {self}")
        if self.strict and not self.is_strict:
            raise DomainError(f"strict parameters must all be positive, got {self}")

    @classmethod
    def relaxed(cls, mu, a, b):
        return cls(mu, a, b, strict=False)

    @property
    def is_strict(self):
        return self.mu > 0 and self.a > 0 and self.b > 0

    def require_strict(self):
        if not self.is_strict:
            raise DomainError(f"operation needs mu, a, b > 0, got {self}")

    def require_polynomial(self):
        # (a+b)_n sits in the normalization denominator
        if self.a + self.b <= 0:
            raise DomainError(f"polynomial evaluation needs a+b > 0, got {self}")

    def as_dict(self):
        return {"mu": self.mu, "a": self.a, "b": self.b}


def _check_degree(n):
    if isinstance(n, bool) or int(n) != n or n < 0:
        raise DomainError(f"degree must be a nonnegative integer, got {n!r}")
    if n > MAX_DEGREE:
        raise DomainError(f"degree {n} exceeds {MAX_DEGREE}")
    return int(n)


def _check_y(y, positive=False):
    y = float(y)
    if not math.isfinite(y):
        raise DomainError(f"y must be finite, got {y!r}")
    if positive and y <= 0:
        raise DomainError(f"y must be > 0 here (Gamma(2iy) has a pole at 0), got {y!r}")
    return y


def _direct_sum(n, mu, a, b, y, prec):
    ctx = MPContext()
    ctx.prec = prec
    mu, a, b = ctx.mpf(mu), ctx.mpf(a), ctx.mpf(b)
    y2 = ctx.mpf(y) ** 2
    term = total = magnitude = prefactor = ctx.mpf(1)
    for k in range(n):
        ma, mb = mu + a + k, mu + b + k
        term *= (k - n) * ((mu + k) ** 2 + y2) / (ma * mb * (k + 1))
        total += term
        magnitude += abs(term)
        prefactor *= ma * mb / ((k + 1) * (a + b + k))
    value = prefactor * total
    if total == 0:
        return value, None
    lost = int(ctx.log(magnitude / abs(total), 2)) + 1
    return value, lost


def evaluate_direct(params, n, y):
    """Polynomial value from its terminating 3F2 sum.

    The alternating sum cancels heavily (roughly one bit per degree), so it
    is accumulated in real extended precision. The working precision is
    raised until the bits lost to cancellation leave at least 64 guard bits.
    """
    n = _check_degree(n)
    y = _check_y(y)
    params.require_polynomial()
    prec = 53 + _GUARD_BITS + n
    while True:
        value, lost = _direct_sum(n, params.mu, params.a, params.b, y, prec)
        if lost is None:
            # exact cancellation at this precision; confirm once at double width
            if prec > 4 * (53 + _GUARD_BITS + n) or prec >= _MAX_PREC:
                return float(value)
            prec *= 2
        elif prec - lost >= 53 + _GUARD_BITS // 2 or prec >= _MAX_PREC:
            return float(value)
        else:
            prec = min(_MAX_PREC, lost + 53 + _GUARD_BITS)


def evaluate_recurrence(params, n_max, y):
    """Values for degrees ``0..n_max`` by the forward three-term recurrence.

    In this normalization the recurrence reads

        (n+1)(n+a+b) S_{n+1} = [A_n + C_n - mu^2 - y^2] S_n
                               - (n+mu+a-1)(n+mu+b-1) S_{n-1}

    with ``A_n = (n+mu+a)(n+mu+b)`` and ``C_n = n(n+a+b-1)``, seeded by
    ``S_0 = 1`` (``C_0 = 0`` removes the ``S_{-1}`` term).
    """
    n_max = _check_degree(n_max)
    y = _check_y(y)
    params.require_polynomial()
    mu, a, b = params.mu, params.a, params.b
    ab = a + b
    x = mu * mu + y * y
    out = np.empty(n_max + 1)
    out[0] = 1.0
    if n_max == 0:
        return out
    out[1] = ((mu + a) * (mu + b) - x) / ab
    for n in range(1, n_max):
        a_n = (n + mu + a) * (n + mu + b)
        c_n = n * (n + ab - 1)
        back = (n + mu + a - 1) * (n + mu + b - 1)
        out[n + 1] = ((a_n + c_n - x) * out[n] - back * out[n - 1]) / ((n + 1) * (n + ab))
    return out


def weight(params, y):
    """Normalized orthogonality weight on ``y > 0``.

        rho(y) = |Gamma(mu+iy) Gamma(a+iy) Gamma(b+iy) / Gamma(2iy)|^2
                 / (2 pi Gamma(mu+a) Gamma(mu+b) Gamma(a+b))
    """
    params.require_strict()
    y = _check_y(y, positive=True)
    mu, a, b = params.mu, params.a, params.b
    log_num = (log_gamma(complex(mu, y)).real + log_gamma(complex(a, y)).real
               + log_gamma(complex(b, y)).real - log_gamma(complex(0.0, 2.0 * y)).real)
    log_den = math.lgamma(mu + a) + math.lgamma(mu + b) + math.lgamma(a + b)
    return math.exp(2.0 * log_num - log_den) / (2.0 * math.pi)


def norm_squared(params, n):
    """``h_n = (mu+a)_n (mu+b)_n / (n! (a+b)_n)``, the squared norm under ``weight``."""
    params.require_strict()
    n = _check_degree(n)
    mu, a, b = params.mu, params.a, params.b
    log_h = (math.lgamma(mu + a + n) - math.lgamma(mu + a)
             + math.lgamma(mu + b + n) - math.lgamma(mu + b)
             - math.lgamma(n + 1.0)
             - math.lgamma(a + b + n) + math.lgamma(a + b))
    return math.exp(log_h)


def generating_function_rhs(params, y, t):
    """Closed form ``(1-t)^(-mu+iy) 2F1(a+iy, b+iy; a+b; t)`` for ``|t| < 1``.

    Near ``t = 1`` the 2F1 goes through the ``1-t`` connection formula, which
    is unavailable at ``y = 0`` (the logarithmic case).
    """
    params.require_polynomial()
    y = _check_y(y)
    t = complex(t)
    if not abs(t) < 1.0:
        raise DomainError(f"generating function needs |t| < 1, got |t| = {abs(t):.6g}")
    mu, a, b = params.mu, params.a, params.b
    prefactor = cmath.exp(complex(-mu, y) * cmath.log(1.0 - t))
    return prefactor * hyp2f1(complex(a, y), complex(b, y), a + b, t)


def generating_function_check(params, y, t_samples, n_terms=200):
    """Largest ``|rhs(t) - sum_{n<=n_terms} S_n t^n|`` over ``t_samples``."""
    ts = [float(t) for t in t_samples]
    if not ts:
        raise DomainError("t_samples is empty")
    for t in ts:
        if abs(t) > 0.6:
            raise DomainError(f"|t| must be <= 0.6 for the partial-sum check, got {t}")
    coeffs = np.array([evaluate_direct(params, n, y) for n in range(n_terms + 1)])
    worst = 0.0
    for t in ts:
        partial = math.fsum(coeffs * t ** np.arange(n_terms + 1))
        worst = max(worst, abs(generating_function_rhs(params, y, t) - partial))
    return worst
