"""Finite Fock-space state vectors and elementary operations.

A state of a single optical mode is stored as the complex amplitude of every
photon-number (Fock) state from 0 up to a cutoff.  Vectors may be
sub-normalized: conditional states are kept unnormalized until their squared
norm, which is the detection probability, has been read off.
"""

import math
from dataclasses import dataclass

import numpy as np

from .errors import TruncationOverflowError, ZeroStateError

#: default photon-number cutoff; the squeezers amplify photon number, so the
#: cutoff must exceed the input support by a squeeze-dependent margin
DEFAULT_CUTOFF = 60

#: squared norms at or below this threshold count as the zero state
NORM_EPS = 1e-14


@dataclass(frozen=True)
class FockVector:
    """Complex amplitudes over photon numbers ``0..cutoff``.

    Attributes
    ----------
    amplitudes : numpy.ndarray
        Complex array of length ``cutoff + 1``; entry ``k`` is the amplitude
        of the ``k``-photon state.
    cutoff : int
        Largest retained photon number.
    """

    amplitudes: np.ndarray
    cutoff: int

    def __post_init__(self):
        amps = np.asarray(self.amplitudes, dtype=complex)
        if self.cutoff < 0:
            raise ValueError("cutoff must be non-negative")
        if amps.ndim != 1 or amps.size != self.cutoff + 1:
            raise ValueError(
                f"amplitude vector must have length cutoff + 1 = {self.cutoff + 1}, "
                f"got {amps.size}"
            )
        if not np.all(np.isfinite(amps.view(float))):
            raise ValueError("amplitudes must be finite (no NaN/Inf)")
        nsq = float(np.sum(np.abs(amps) ** 2))
        if nsq > 1.0 + 1e-12:
            raise ValueError(f"squared norm {nsq} exceeds 1 + 1e-12")
        amps.flags.writeable = False
        object.__setattr__(self, "amplitudes", amps)

    @property
    def squared_norm(self):
        return float(np.sum(np.abs(self.amplitudes) ** 2))

    def __len__(self):
        return self.cutoff + 1


def make_state(amplitudes, cutoff=DEFAULT_CUTOFF):
    """Build a :class:`FockVector`, zero-padding up to the cutoff.

    The vector is not normalized.  Amplitude sequences longer than
    ``cutoff + 1`` are rejected rather than silently truncated.
    """
    amps = np.asarray(list(amplitudes), dtype=complex)
    if amps.size > cutoff + 1:
        raise ValueError(
            f"{amps.size} amplitudes do not fit below cutoff {cutoff}"
        )
    padded = np.zeros(cutoff + 1, dtype=complex)
    padded[: amps.size] = amps
    return FockVector(padded, cutoff)


def basis_state(k, cutoff=DEFAULT_CUTOFF):
    """The photon-number eigenstate ``|k>``."""
    if not 0 <= k <= cutoff:
        raise ValueError(f"basis index {k} outside 0..{cutoff}")
    amps = np.zeros(cutoff + 1, dtype=complex)
    amps[k] = 1.0
    return FockVector(amps, cutoff)


def pad_to_cutoff(state, cutoff):
    """Re-embed a state in a space with a (usually larger) cutoff."""
    support = int(np.max(np.nonzero(state.amplitudes)[0])) if state.squared_norm > 0 else 0
    if support > cutoff:
        raise ValueError(f"state has support at {support}, above cutoff {cutoff}")
    return make_state(state.amplitudes[: min(state.cutoff, cutoff) + 1], cutoff)


def inner_product(a, b):
    """``<a|b> = sum_k conj(a_k) b_k``; the shorter vector is zero-padded."""
    n = min(a.cutoff, b.cutoff) + 1
    return complex(np.vdot(a.amplitudes[:n], b.amplitudes[:n]))


def fidelity(a, b):
    """Squared overlap ``|<a|b>|**2`` of two normalized states."""
    for name, v in (("first", a), ("second", b)):
        if abs(math.sqrt(v.squared_norm) - 1.0) > 1e-9:
            raise ValueError(f"{name} argument is not normalized (norm^2 = {v.squared_norm})")
    f = abs(inner_product(a, b)) ** 2
    return min(f, 1.0)


def lower_shift(state, d):
    """Apply the photon-number lowering map ``|n> -> |n - d>`` (d times).

    Amplitudes on ``|0>..|d-1>`` are annihilated, so the result is generally
    sub-normalized.
    """
    if d < 1:
        raise ValueError("shift must be a positive integer")
    amps = np.zeros(state.cutoff + 1, dtype=complex)
    if d <= state.cutoff:
        amps[: state.cutoff + 1 - d] = state.amplitudes[d:]
    return FockVector(amps, state.cutoff)


def raise_shift(state, d):
    """Apply the photon-number raising map ``|n> -> |n + d>`` (d times).

    Norm-preserving whenever the top ``d`` amplitudes are zero; otherwise
    amplitude would be pushed past the cutoff and the call fails.
    """
    if d < 1:
        raise ValueError("shift must be a positive integer")
    top = state.amplitudes[max(0, state.cutoff + 1 - d) :]
    if np.any(top != 0):
        raise TruncationOverflowError(
            f"raising by {d} would push nonzero amplitude past cutoff {state.cutoff}; "
            "increase the cutoff"
        )
    amps = np.zeros(state.cutoff + 1, dtype=complex)
    if d <= state.cutoff:
        amps[d:] = state.amplitudes[: state.cutoff + 1 - d]
    return FockVector(amps, state.cutoff)


def normalize(state, eps=NORM_EPS):
    """Return ``(unit-norm vector, original squared norm)``."""
    nsq = state.squared_norm
    if nsq <= eps:
        raise ZeroStateError(f"cannot normalize: squared norm {nsq} <= {eps}")
    return FockVector(state.amplitudes / math.sqrt(nsq), state.cutoff), nsq
