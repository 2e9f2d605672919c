"""Quadrature-measurement (continuous-variable) teleportation benchmark.

Simulates, in the same truncated Fock space, the teleportation scheme in
which the sender mixes the input mode with one half of a two-mode squeezed
vacuum on a balanced beamsplitter and measures the commuting pair

    x_u = (x_0 - x_1) / sqrt(2),    p_v = (p_0 + p_1) / sqrt(2),

with [q, p] = i and x = (a + a^dag)/sqrt(2).  The receiver applies a
unit-gain corrective displacement.  The joint eigenstate of (x_u, p_v) with
eigenvalues (x, p) is the displaced ideal EPR pair

    |Pi(xi)> = pi**-1/2 D_0(xi) sum_t |t, t>,      xi = x + i p,

normalized so the outcome density integrates to one over dx dp.  Projecting
the input-plus-resource state onto it collapses the receiver's mode to

    phi_n(xi) = pi**-1/2 c_n <n| D(-xi) |psi_in>,

where c_n are the resource amplitudes on |n, n>.  The resource is oriented
with all c_n positive (tanh^n r / cosh r), which squeezes x_1 - x_2 and
p_1 + p_2; with the measured pair above this is the orientation for which
the output converges on the input as r grows, which fixes the receiver's
displacement to D(g * xi) with gain g = 1 (verified by the large-r limit in
the test suite).
"""

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .errors import PrecisionLossError, ZeroDensityError
from .fock import FockVector
from .numerics import (
    LOG_OVERFLOW,
    cancellation_error,
    log_factorial_table,
    signed_log_sum,
)
from .squeeze import CANCELLATION_TOL, SqueezeParams, s_coeff

#: Fock cutoff for the resource mode / conditional states
DEFAULT_BK_CUTOFF = 60


@dataclass(frozen=True)
class QuadratureOutcome:
    """Measured values of the position-difference and momentum-sum combinations."""

    x: float
    p: float

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.p)):
            raise ValueError("outcome quadratures must be finite")


@dataclass(frozen=True)
class BKConfig:
    """Resource squeezing and outcome-grid layout.

    ``r`` matches the photon-counting scheme's ``|alpha|`` so the two schemes
    share the same entangled resource.  The grid covers ``[-L, L]`` in both
    quadratures with step ``h``; L/h must be an integer.
    """

    r: float
    grid_half_width: float = 8.0
    grid_step: float = 0.05
    gain: float = 1.0

    def __post_init__(self):
        if self.r < 0 or not math.isfinite(self.r):
            raise ValueError("resource squeezing must be finite and >= 0")
        if self.grid_half_width <= 0 or self.grid_step <= 0:
            raise ValueError("grid parameters must be positive")
        ratio = self.grid_half_width / self.grid_step
        if abs(ratio - round(ratio)) > 1e-9:
            raise ValueError("grid half-width must be an integer multiple of the step")

    @property
    def grid_points(self):
        """The symmetric outcome grid along one axis."""
        steps = int(round(self.grid_half_width / self.grid_step))
        return self.grid_step * np.arange(-steps, steps + 1)


def hermite_wavefunction(k, x):
    """Orthonormal harmonic-oscillator eigenfunction ``psi_k(x)``.

    Uses the three-term recurrence on the normalized functions themselves,

        psi_{k+1} = sqrt(2/(k+1)) x psi_k - sqrt(k/(k+1)) psi_{k-1},

    which is stable for all k; raw Hermite polynomials would overflow.
    Accepts scalar or array ``x``.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    xs = np.asarray(x, dtype=float)
    prev = np.pi ** -0.25 * np.exp(-xs * xs / 2.0)
    if k == 0:
        return prev if prev.shape else float(prev)
    cur = math.sqrt(2.0) * xs * prev
    for j in range(1, k):
        prev, cur = cur, math.sqrt(2.0 / (j + 1)) * xs * cur - math.sqrt(j / (j + 1)) * prev
    return cur if cur.shape else float(cur)


def hermite_basis(k_max, x):
    """All eigenfunctions ``psi_0..psi_k_max`` at ``x``, stacked on axis 0."""
    xs = np.asarray(x, dtype=float)
    out = np.zeros((k_max + 1,) + xs.shape)
    out[0] = np.pi ** -0.25 * np.exp(-xs * xs / 2.0)
    if k_max >= 1:
        out[1] = math.sqrt(2.0) * xs * out[0]
    for j in range(1, k_max):
        out[j + 1] = math.sqrt(2.0 / (j + 1)) * xs * out[j] - math.sqrt(j / (j + 1)) * out[j - 1]
    return out


def displacement_element(m, k, amount):
    """``<m| D(amount) |k>`` with ``D(b) = exp(b a^dag - conj(b) a)``.

    Evaluated through the associated-Laguerre closed form with every term in
    log-magnitude/sign form; falls back to big floats when the alternating
    sum cancels catastrophically.
    """
    if m < 0 or k < 0:
        raise ValueError("indices must be non-negative")
    b = complex(amount)
    if abs(b) ** 2 == 0.0:
        # includes denormals whose square underflows: identity to double precision
        return complex(1.0 if m == k else 0.0)
    if m < k:
        # <m|D(b)|k> = conj(<k|D(-b)|m>)
        return complex(np.conj(displacement_element(k, m, -b)))
    diff = m - k
    lf = log_factorial_table(m + k + 1)
    xsq = abs(b) ** 2
    log_x = math.log(xsq)
    log_pref = 0.5 * (lf[k] - lf[m]) + diff * math.log(abs(b)) - xsq / 2.0
    # L_k^{(diff)}(xsq) = sum_i (-1)^i C(k+diff, k-i) xsq^i / i!
    js = np.arange(k + 1)
    log_mags = log_pref + (lf[k + diff] - lf[k - js] - lf[diff + js]) + js * log_x - lf[js]
    signs = 1.0 - 2.0 * (js % 2)
    value = None
    if np.max(log_mags) <= LOG_OVERFLOW:
        total_scaled, abs_scaled, scale = signed_log_sum(log_mags, signs)
        if cancellation_error(total_scaled, abs_scaled) <= CANCELLATION_TOL:
            value = total_scaled * math.exp(scale)
    if value is None:
        value = _laguerre_bigfloat(k, diff, xsq, log_pref)
    return value * cmath.exp(1j * diff * cmath.phase(b))


def _laguerre_bigfloat(k, diff, xsq, log_pref):
    import mpmath

    for digits in (60, 120, 240):
        with mpmath.workdps(digits):
            x = mpmath.mpf(xsq)
            total = mpmath.mpf(0)
            abs_total = mpmath.mpf(0)
            for i in range(k + 1):
                term = (
                    (-1) ** i
                    * mpmath.binomial(k + diff, k - i)
                    * x ** i
                    / mpmath.factorial(i)
                )
                total += term
                abs_total += abs(term)
            if total == 0:
                return 0.0
            if abs_total / abs(total) < mpmath.mpf(10) ** (digits - 25):
                return float(mpmath.exp(mpmath.mpf(log_pref)) * total)
    raise PrecisionLossError(
        f"displacement element (k={k}, offset={diff}) at |amount|^2 = {xsq} could "
        "not be resolved in extended precision"
    )


def _displacement_columns(amounts, n_max, k_max):
    """``<n| D(b) |k>`` for n = 0..n_max, k = 0..k_max, vectorized over b.

    Starts from the coherent-state column ``<n|D(b)|0>`` and climbs k with

        <n|D(b)|k+1> = (sqrt(n) <n-1|D(b)|k> - conj(b) <n|D(b)|k>) / sqrt(k+1),

    a short, benign recurrence for the small k needed here.  Shape of the
    result: ``amounts.shape + (n_max + 1, k_max + 1)``.
    """
    b = np.asarray(amounts, dtype=complex)
    ns = np.arange(n_max + 1)
    lf = log_factorial_table(n_max + 1)[: n_max + 1]
    mag = np.abs(b)[..., None]
    safe_mag = np.where(mag > 0, mag, 1.0)
    log_col = -mag ** 2 / 2.0 + ns * np.log(safe_mag) - 0.5 * lf
    col = np.exp(log_col) * np.exp(1j * ns * np.angle(b)[..., None])
    col = np.where((mag == 0) & (ns > 0), 0.0, col)
    out = np.zeros(b.shape + (n_max + 1, k_max + 1), dtype=complex)
    out[..., 0] = col
    sqrt_n = np.sqrt(ns.astype(float))
    for k in range(k_max):
        prev = out[..., k]
        shifted = np.zeros_like(prev)
        shifted[..., 1:] = prev[..., :-1] * sqrt_n[1:]
        out[..., k + 1] = (shifted - np.conj(b)[..., None] * prev) / math.sqrt(k + 1)
    return out


def resource_amplitudes(r, cutoff):
    """Fock amplitudes ``c_n`` of the oriented two-mode squeezed resource.

    Built from the squeeze coefficients at phase pi, which makes every
    amplitude real positive (``tanh^n r / cosh r``): the orientation whose
    quadrature correlations match the measured combinations.
    """
    if r == 0.0:
        c = np.zeros(cutoff + 1)
        c[0] = 1.0
        return c
    params = SqueezeParams(r, math.pi)
    c = np.array([s_coeff(n, 0, 0, params) for n in range(cutoff + 1)])
    # the phase factor e^{i n pi} cancels the (-1)^n sign only up to float
    # rounding; the exact amplitudes are real
    assert np.max(np.abs(c.imag)) < 1e-10
    return c.real.copy()


def _conditional_block(psi_in, config, xi, cutoff):
    """Shared kernel: unnormalized receiver amplitudes and densities.

    ``xi`` may be any complex array; returns ``(phi, density)`` with ``phi``
    of shape ``xi.shape + (cutoff + 1,)``.
    """
    c = resource_amplitudes(config.r, cutoff)
    k_top = int(np.max(np.nonzero(psi_in.amplitudes)[0]))
    cols = _displacement_columns(-xi, cutoff, k_top)
    phi = (1.0 / math.sqrt(math.pi)) * c * (cols @ psi_in.amplitudes[: k_top + 1])
    density = np.sum(np.abs(phi) ** 2, axis=-1)
    return phi, density


def bk_conditional(psi_in, config, outcome, cutoff=DEFAULT_BK_CUTOFF):
    """Receiver's corrected state for one homodyne outcome, plus its density.

    The returned state is normalized and already includes the corrective
    displacement ``D(g * (x + i p))``.
    """
    _require_unit_norm(psi_in)
    xi = np.asarray(outcome.x + 1j * outcome.p)
    phi, density = _conditional_block(psi_in, config, xi[None], cutoff)
    phi, density = phi[0], float(density[0])
    if density <= 1e-300:
        raise ZeroDensityError(
            f"outcome (x={outcome.x}, p={outcome.p}) has vanishing density"
        )
    # amplitudes of D(g xi)|phi>: <k|D(g xi)|phi> = sum_n conj(<n|D(-g xi)|k>) phi_n
    back = _displacement_columns(np.asarray(-config.gain * xi)[None], cutoff, cutoff)[0]
    tel = np.conj(back).T @ phi
    tel /= np.linalg.norm(tel)
    return FockVector(tel, cutoff), density


def bk_sweep(psi_in, config, cutoff=DEFAULT_BK_CUTOFF):
    """Fidelity and density maps over the full outcome grid.

    Returns ``(xs, fid, density)`` where ``fid[i, j]`` and ``density[i, j]``
    belong to the outcome ``(x, p) = (xs[i], xs[j])``.
    """
    _require_unit_norm(psi_in)
    xs = config.grid_points
    k_top = int(np.max(np.nonzero(psi_in.amplitudes)[0]))
    psi_support = psi_in.amplitudes[: k_top + 1]
    fid = np.zeros((xs.size, xs.size))
    density = np.zeros((xs.size, xs.size))
    unit_gain = abs(config.gain - 1.0) < 1e-15
    for i, x in enumerate(xs):
        xi = x + 1j * xs
        phi, dens = _conditional_block(psi_in, config, xi, cutoff)
        if unit_gain:
            cols = _displacement_columns(-xi, cutoff, k_top)
        else:
            cols = _displacement_columns(-config.gain * xi, cutoff, k_top)
        # <psi|D(g xi)|phi> = sum_n phi_n sum_k conj(psi_k) conj(<n|D(-g xi)|k>)
        overlap = np.einsum("gn,gnk,k->g", phi, np.conj(cols), np.conj(psi_support))
        density[i] = dens
        with np.errstate(invalid="ignore", divide="ignore"):
            fid[i] = np.where(dens > 1e-300, np.abs(overlap) ** 2 / dens, 0.0)
    return xs, fid, density


def bk_total_probability(config, density):
    """Riemann weight of a density map: ``sum density * h**2``."""
    return float(np.sum(density)) * config.grid_step ** 2


def bk_pu(psi_in, config, f_u, cutoff=DEFAULT_BK_CUTOFF, sweep=None):
    """Success probability of outcomes whose fidelity reaches ``f_u``.

    Numerically integrates ``density * [fidelity >= f_u]`` over the outcome
    grid with step weight ``h**2``.  A precomputed :func:`bk_sweep` result
    may be passed to avoid recomputation.
    """
    if sweep is None:
        sweep = bk_sweep(psi_in, config, cutoff)
    _, fid, density = sweep
    return float(np.sum(density[fid >= f_u])) * config.grid_step ** 2


def bk_csv_rows(xs, fid, density):
    """CSV lines ``x,p,fidelity,density`` over the grid."""
    rows = ["x,p,fidelity,density"]
    for i, x in enumerate(xs):
        for j, p in enumerate(xs):
            rows.append(f"{x:.17g},{p:.17g},{fid[i, j]:.17g},{density[i, j]:.17g}")
    return rows


def _require_unit_norm(psi_in):
    if abs(math.sqrt(psi_in.squared_norm) - 1.0) > 1e-9:
        raise ValueError(f"input state is not normalized (norm^2 = {psi_in.squared_norm})")
