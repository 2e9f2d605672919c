import numpy as np
import pytest
from scipy.linalg import expm

from condteleport import SqueezeParams, make_state, oracle_expm

#: the two-Fock-state superposition used throughout: (|1> + i|3>)/sqrt(2)
TEST_STATE_AMPS = (0.0, 2 ** -0.5, 0.0, 1j * 2 ** -0.5)


@pytest.fixture(scope="session")
def test_state():
    return make_state(TEST_STATE_AMPS, 60)


@pytest.fixture(scope="session")
def oracle_cache():
    """Memoized dense two-mode expm oracles keyed by (magnitude, phase, cutoff)."""
    built = {}

    def get(mag, phase=0.0, cutoff=40):
        key = (mag, phase, cutoff)
        if key not in built:
            built[key] = oracle_expm(SqueezeParams(mag, phase), cutoff)
        return built[key]

    return get


def sector_expm(mag, phase, delta, dim):
    """Matrix exponential of the generator restricted to one conserved sector.

    The generator of the two-mode squeezer conserves the photon-number
    difference, so the basis |k + delta, k>, k = 0..dim-1 carries a closed
    block.  Exponentiating that block at a large ``dim`` gives
    infinite-space matrix elements to machine precision at a cost that the
    full two-mode oracle cannot reach; entry ``[i, j]`` is
    ``<i + delta, i| S |j + delta, j>`` (delta >= 0).
    """
    alpha = mag * np.exp(1j * phase)
    ks = np.arange(1, dim)
    rates = np.sqrt(ks * (ks + delta))
    gen = np.zeros((dim, dim), complex)
    gen[ks - 1, ks] = np.conj(alpha) * rates
    gen[ks, ks - 1] = -alpha * rates
    return expm(gen)


@pytest.fixture(scope="session")
def sector_oracle():
    """Memoized sector-block oracles: get(mag, phase, delta, dim) -> matrix."""
    built = {}

    def get(mag, phase, delta, dim=600):
        key = (mag, phase, delta, dim)
        if key not in built:
            built[key] = sector_expm(mag, phase, delta, dim)
        return built[key]

    return get


def conserving_quadruples(idx_max):
    """All (m, m', n, n') with indices <= idx_max and m - m' = n - n'."""
    quads = []
    for m in range(idx_max + 1):
        for mp in range(idx_max + 1):
            for n in range(idx_max + 1):
                np_ = n - m + mp
                if 0 <= np_ <= idx_max:
                    quads.append((m, mp, n, np_))
    return quads
