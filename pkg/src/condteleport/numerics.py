"""Log-domain evaluation of alternating factorial sums.

The squeeze-operator and displacement matrix elements are finite sums whose
terms involve factorials far beyond the double-precision overflow point and
whose signs alternate.  Every term is therefore carried as (log magnitude,
sign); terms are accumulated largest-first with Neumaier compensation, and a
cheap running estimate of the relative cancellation error decides whether a
software big-float fallback is required.
"""

import math
import threading

import numpy as np

#: machine epsilon of IEEE double
EPS = float(np.finfo(float).eps)

#: beyond this log-magnitude a term cannot be represented as a double
LOG_OVERFLOW = 700.0

_log_fact = np.zeros(1)
_log_fact_lock = threading.Lock()


def log_factorial_table(n_max):
    """Return an array holding ln(k!) for k = 0..n_max (cached, grows on demand)."""
    global _log_fact
    if n_max >= _log_fact.size:
        with _log_fact_lock:
            if n_max >= _log_fact.size:
                hi = max(n_max + 1, 2 * _log_fact.size)
                ext = np.log(np.arange(_log_fact.size, hi, dtype=float))
                _log_fact = np.concatenate([_log_fact, _log_fact[-1] + np.cumsum(ext)])
    return _log_fact


def log_factorial(n):
    """ln(n!) for a non-negative integer."""
    return float(log_factorial_table(n)[n])


def neumaier_sum(values):
    """Compensated sum of an iterable of floats, in the given order."""
    total = 0.0
    comp = 0.0
    for v in values:
        t = total + v
        if abs(total) >= abs(v):
            comp += (total - t) + v
        else:
            comp += (v - t) + total
        total = t
    return total + comp


def signed_log_sum(log_mags, signs):
    """Accumulate ``sum_i signs[i] * exp(log_mags[i])`` in scaled form.

    Terms are sorted by descending magnitude and added with Neumaier
    compensation.  Everything is scaled by the largest term so the arithmetic
    stays in range even when individual terms would overflow a double.

    Parameters
    ----------
    log_mags : array_like
        Natural logs of the term magnitudes.
    signs : array_like
        Sign (+-1) of each term.

    Returns
    -------
    total_scaled : float
        The signed sum divided by ``exp(scale)``.
    abs_scaled : float
        The sum of magnitudes divided by ``exp(scale)``; the ratio
        ``abs_scaled / |total_scaled|`` measures cancellation severity.
    scale : float
        The log of the scaling factor (the largest term's log magnitude).
    """
    log_mags = np.asarray(log_mags, dtype=float)
    signs = np.asarray(signs, dtype=float)
    order = np.argsort(log_mags)[::-1]
    lm = log_mags[order]
    scale = float(lm[0])
    mags = np.exp(lm - scale)
    total = neumaier_sum(signs[order] * mags)
    return total, float(np.sum(mags)), scale


def cancellation_error(total_scaled, abs_scaled):
    """Relative error estimate ``(sum of |terms|) * eps / |sum of terms|``."""
    if total_scaled == 0.0:
        return math.inf
    return abs_scaled * EPS / abs(total_scaled)
