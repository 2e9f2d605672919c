"""Outcome-grid sweeps, success-probability aggregation, convergence checks.

The quantities gathered here are the plot-ready data of the protocol: the
fidelity/probability maps over photon-count outcomes, their diagonal slice,
and the conditional success probability (total probability of outcomes whose
fidelity clears a threshold).
"""

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .errors import ConvergenceError, ImpossibleOutcomeError
from .fock import FockVector, pad_to_cutoff
from .protocol import MeasurementOutcome, teleport_event
from .squeeze import SqueezeParams, coeff_profile


@dataclass(frozen=True)
class OutcomeGrid:
    """Fidelity and probability for every outcome ``(n, n')`` up to ``n_max``.

    Impossible outcomes are stored as explicit ``(0.0, 0.0)`` entries so the
    grid is dense.  ``entries`` maps ``(n, n_prime)`` to
    ``(fidelity, probability)``.
    """

    entries: dict
    psi_in: FockVector
    alpha: SqueezeParams
    beta: SqueezeParams
    cutoff: int
    n_max: int

    def fidelity(self, n, n_prime):
        return self.entries[(n, n_prime)][0]

    def probability(self, n, n_prime):
        return self.entries[(n, n_prime)][1]

    @property
    def total_probability(self):
        """Captured probability; approaches 1 as ``n_max`` grows."""
        return math.fsum(self.entries[k][1] for k in sorted(self.entries))


def _evaluate_outcome(psi_in, alpha, beta, n, n_prime):
    try:
        res = teleport_event(psi_in, alpha, beta, MeasurementOutcome(n, n_prime))
        return res.fidelity, res.probability
    except ImpossibleOutcomeError:
        return 0.0, 0.0


def sweep_grid(psi_in, alpha, beta, n_max, workers=1):
    """Evaluate every outcome with ``n, n' <= n_max``.

    Outcomes are independent, so they may be evaluated on ``workers``
    threads; results are re-assembled in a fixed order, making the grid
    bit-identical for any worker count.
    """
    pairs = [(n, npr) for n in range(n_max + 1) for npr in range(n_max + 1)]
    if workers <= 1:
        values = [_evaluate_outcome(psi_in, alpha, beta, n, npr) for n, npr in pairs]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            values = list(
                pool.map(lambda p: _evaluate_outcome(psi_in, alpha, beta, *p), pairs)
            )
    entries = dict(zip(pairs, values))
    return OutcomeGrid(
        entries=entries,
        psi_in=psi_in,
        alpha=alpha,
        beta=beta,
        cutoff=psi_in.cutoff,
        n_max=n_max,
    )


def all_outcomes(n, n_prime):
    """Default outcome filter: accept everything."""
    return True


def diagonal_only(n, n_prime):
    """Outcome filter keeping the shift-free events ``n = n'``."""
    return n == n_prime


def conditional_success(grid, f_u, outcome_filter=all_outcomes):
    """Total probability of filtered outcomes with fidelity >= ``f_u``.

    With ``f_u = 0`` and the default filter this is exactly the grid's total
    captured probability.  Summation runs in sorted outcome order with exact
    accumulation, so the result does not depend on how the grid was built.
    """
    return math.fsum(
        p
        for (n, npr) in sorted(grid.entries)
        for f, p in [grid.entries[(n, npr)]]
        if outcome_filter(n, npr) and f >= f_u
    )


def diagonal_sweep(psi_in, alpha, beta, n_max):
    """The ``n = n'`` slice: list of ``(n, fidelity, probability)``."""
    rows = []
    for n in range(n_max + 1):
        f, p = _evaluate_outcome(psi_in, alpha, beta, n, n)
        rows.append((n, f, p))
    return rows


# --- cutoff-convergence certification -------------------------------------

@dataclass(frozen=True)
class ConvergenceReport:
    quantity: str
    cutoffs: tuple
    values: tuple
    difference: float
    threshold: float
    passed: bool


@dataclass(frozen=True)
class GridCellQuantity:
    """A single grid entry's fidelity or probability."""

    n: int
    n_prime: int
    which: str = "fidelity"  # or "probability"

    @property
    def label(self):
        return f"{self.which}({self.n},{self.n_prime})"

    def evaluate(self, psi_in, alpha, beta):
        f, p = _evaluate_outcome(psi_in, alpha, beta, self.n, self.n_prime)
        return f if self.which == "fidelity" else p


@dataclass(frozen=True)
class SuccessProbabilityQuantity:
    """Conditional success probability at threshold ``f_u`` over an ``n_max`` grid."""

    f_u: float
    n_max: int
    diagonal: bool = False

    @property
    def label(self):
        tag = "diagonal" if self.diagonal else "all"
        return f"P_u({self.f_u}, {tag}, n_max={self.n_max})"

    def evaluate(self, psi_in, alpha, beta):
        grid = sweep_grid(psi_in, alpha, beta, self.n_max)
        flt = diagonal_only if self.diagonal else all_outcomes
        return conditional_success(grid, self.f_u, flt)


@dataclass(frozen=True)
class ProfilePointQuantity:
    """One entry of the coefficient product profile."""

    n: int
    d: int
    m: int

    @property
    def label(self):
        return f"profile(n={self.n}, d={self.d})[{self.m}]"

    def evaluate(self, psi_in, alpha, beta):
        return abs(coeff_profile(self.n, self.d, alpha, beta, self.m)[self.m])


def convergence_check(psi_in, alpha, beta, quantity, cutoffs=(60, 120), threshold=1e-6):
    """Recompute ``quantity`` at two cutoffs and demand agreement.

    Returns a :class:`ConvergenceReport` when the absolute difference is
    below ``threshold``; otherwise raises :class:`ConvergenceError` carrying
    the report, which names the larger cutoff to try next.
    """
    values = []
    for cut in cutoffs:
        values.append(float(quantity.evaluate(pad_to_cutoff(psi_in, cut), alpha, beta)))
    difference = abs(values[0] - values[1])
    report = ConvergenceReport(
        quantity=quantity.label,
        cutoffs=tuple(cutoffs),
        values=tuple(values),
        difference=difference,
        threshold=threshold,
        passed=difference < threshold,
    )
    if not report.passed:
        raise ConvergenceError(
            f"{quantity.label} moved by {difference:.3e} between cutoffs "
            f"{cutoffs[0]} and {cutoffs[1]}; rerun with a cutoff above {cutoffs[1]}",
            report=report,
        )
    return report


# --- serialization ----------------------------------------------------------

def grid_to_json_dict(grid):
    """JSON-ready dict with the documented schema."""
    return {
        "alpha": {"magnitude": grid.alpha.magnitude, "phase": grid.alpha.phase},
        "beta": {"magnitude": grid.beta.magnitude, "phase": grid.beta.phase},
        "cutoff": grid.cutoff,
        "n_max": grid.n_max,
        "input": [[float(a.real), float(a.imag)] for a in grid.psi_in.amplitudes],
        "entries": [
            {
                "n": n,
                "nprime": npr,
                "fidelity": grid.entries[(n, npr)][0],
                "probability": grid.entries[(n, npr)][1],
            }
            for (n, npr) in sorted(grid.entries)
        ],
    }


def grid_csv_rows(grid):
    """CSV lines ``n,nprime,fidelity,probability`` (header included)."""
    rows = ["n,nprime,fidelity,probability"]
    for (n, npr) in sorted(grid.entries):
        f, p = grid.entries[(n, npr)]
        rows.append(f"{n},{npr},{f:.17g},{p:.17g}")
    return rows


def diagonal_csv_rows(diag):
    """CSV lines ``n,fidelity,probability`` for a diagonal sweep."""
    rows = ["n,fidelity,probability"]
    for n, f, p in diag:
        rows.append(f"{n},{f:.17g},{p:.17g}")
    return rows


def profile_csv_rows(profile):
    """CSV lines ``m,real,imag`` for a coefficient profile."""
    rows = ["m,real,imag"]
    for m, value in enumerate(profile):
        rows.append(f"{m},{value.real:.17g},{value.imag:.17g}")
    return rows


def relative_magnitude_variation(values):
    """(max - min) / max of the magnitudes; 0 means perfectly flat."""
    mags = np.abs(np.asarray(values))
    top = float(np.max(mags))
    if top == 0.0:
        return 0.0
    return float((top - np.min(mags)) / top)
