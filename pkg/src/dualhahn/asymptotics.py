"""Large-degree behaviour from the singularity of the generating function at t = 1.

The comparison function

    C(t) = (1-t)^(-mu-iy) K + (1-t)^(-mu+iy) conj(K),
    K = Gamma(a+b) Gamma(2iy) / (Gamma(a+iy) Gamma(b+iy)),

carries the whole singular part of the generating function. Expanding its
coefficients gives

    S_n ~ A_n(y) cos(y ln n + gamma(y)),
    A_n(y) = 2 Gamma(a+b) |Gamma(2iy)| n^(mu-1) / |Gamma(mu+iy) Gamma(a+iy) Gamma(b+iy)|,
    gamma(y) = arg Gamma(2iy) - arg Gamma(mu+iy) - arg Gamma(a+iy) - arg Gamma(b+iy).

The cosine argument ``y ln n`` is the only energy dependence of the
oscillation; its growth is slower than any power of ``n``.
"""
import cmath
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .cdh import _check_y, evaluate_recurrence
from .complex_math import gamma_arg, log_gamma
from .errors import DomainError

CHANNELS = ("mu", "a", "b")


@dataclass(frozen=True)
class ScatteringData:
    energy: float
    amplitude: float
    phase: float
    n: int


@dataclass(frozen=True)
class SpectrumEntry:
    channel: str
    level: int
    energy: float


@dataclass(frozen=True)
class ConvergenceRow:
    n: int
    exact: float
    asymptotic: float
    amplitude: float
    phase: float
    env_error: float


@dataclass(frozen=True)
class ConvergenceReport:
    params: object
    y: float
    rows: tuple
    decay_exponent: float  # nan with fewer than two usable points

    @property
    def errors(self):
        return np.array([r.env_error for r in self.rows])


def _check_n(n):
    if isinstance(n, bool) or int(n) != n or n < 1:
        raise DomainError(f"n must be a positive integer, got {n!r}")
    return int(n)


def phase_gamma(params, y):
    """Scattering phase shift, summed from four continuous-branch gamma args."""
    params.require_strict()
    y = _check_y(y, positive=True)
    return (gamma_arg(complex(0.0, 2.0 * y))
            - gamma_arg(complex(params.mu, y))
            - gamma_arg(complex(params.a, y))
            - gamma_arg(complex(params.b, y)))


def _log_envelope(params, y):
    # log of 2 Gamma(a+b) |Gamma(2iy)| / |Gamma(mu+iy) Gamma(a+iy) Gamma(b+iy)|
    return (math.log(2.0) + math.lgamma(params.a + params.b)
            + log_gamma(complex(0.0, 2.0 * y)).real
            - log_gamma(complex(params.mu, y)).real
            - log_gamma(complex(params.a, y)).real
            - log_gamma(complex(params.b, y)).real)


def amplitude(params, y, n):
    """Positive envelope of the large-degree cosine at degree ``n``."""
    params.require_strict()
    y = _check_y(y, positive=True)
    n = _check_n(n)
    return math.exp(_log_envelope(params, y) + (params.mu - 1.0) * math.log(n))


def asymptotic_value(params, n, y):
    """Leading-order approximation ``A_n cos(y ln n + gamma)`` to ``S_n(y^2)``."""
    n = _check_n(n)
    return amplitude(params, y, n) * math.cos(y * math.log(n) + phase_gamma(params, y))


def scattering_data(params, y, n=1):
    amp = amplitude(params, y, n)
    return ScatteringData(energy=y * y, amplitude=amp, phase=phase_gamma(params, y), n=int(n))


def comparison_function(params, y, t):
    """Singular part of the generating function at ``t = 1``."""
    params.require_strict()
    y = _check_y(y, positive=True)
    t = complex(t)
    if not abs(t) < 1.0:
        raise DomainError(f"comparison function needs |t| < 1, got |t| = {abs(t):.6g}")
    a, b, mu = params.a, params.b, params.mu
    k = cmath.exp(math.lgamma(a + b) + log_gamma(complex(0.0, 2.0 * y))
                  - log_gamma(complex(a, y)) - log_gamma(complex(b, y)))
    log_u = cmath.log(1.0 - t)
    return (cmath.exp(complex(-mu, -y) * log_u) * k
            + cmath.exp(complex(-mu, y) * log_u) * k.conjugate())


def bound_state_spectrum(params):
    """Energies ``y^2 = -(n + p)^2`` for each negative channel parameter ``p``.

    Levels run over ``n >= 0`` with ``n + p < 0``. Entries from different
    channels are kept separate even when energies coincide; the list is
    sorted by energy, ties keeping channel order ``mu, a, b``.
    """
    entries = []
    for channel in CHANNELS:
        p = getattr(params, channel)
        n = 0
        while n + p < 0:
            entries.append(SpectrumEntry(channel, n, -(n + p) ** 2))
            n += 1
    entries.sort(key=lambda e: e.energy)
    return entries


def _fit_decay(ns, errs):
    ns = np.asarray(ns, dtype=float)
    errs = np.asarray(errs, dtype=float)
    ok = errs > 0
    if ok.sum() < 2:
        return float("nan")
    slope, _ = np.polyfit(np.log(ns[ok]), np.log(errs[ok]), 1)
    return float(slope)


def convergence_report(params, y, n_list, workers=None):
    """Compare exact values against the asymptotic formula over ``n_list``.

    Exact values come from the three-term recurrence; the error is measured
    relative to the envelope because the cosine passes through zero.
    """
    params.require_strict()
    y = _check_y(y, positive=True)
    ns = [_check_n(n) for n in n_list]
    if not ns:
        raise DomainError("n_list is empty")
    if any(b <= a for a, b in zip(ns, ns[1:])):
        raise DomainError(f"n_list must be strictly ascending, got {ns}")
    exact = evaluate_recurrence(params, ns[-1], y)
    phase = phase_gamma(params, y)

    def row(n):
        amp = amplitude(params, y, n)
        asym = amp * math.cos(y * math.log(n) + phase)
        ex = float(exact[n])
        return ConvergenceRow(n, ex, asym, amp, phase, abs(ex - asym) / amp)

    if workers and workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            rows = tuple(pool.map(row, ns))
    else:
        rows = tuple(row(n) for n in ns)
    return ConvergenceReport(params, y, rows, _fit_decay(ns, [r.env_error for r in rows]))
