import math

import numpy as np
import pytest

from condteleport import (
    BKConfig,
    QuadratureOutcome,
    ZeroDensityError,
    basis_state,
    bk_conditional,
    bk_pu,
    bk_sweep,
    bk_total_probability,
    displacement_element,
    fidelity,
    hermite_basis,
    hermite_wavefunction,
    make_state,
    resource_amplitudes,
)
from condteleport.quadrature import _displacement_columns
from conftest import TEST_STATE_AMPS


# --- oscillator eigenfunctions -------------------------------------------------

def test_ground_state_value():
    assert hermite_wavefunction(0, 0.0) == pytest.approx(math.pi ** -0.25)


def test_first_excited_odd_parity():
    assert hermite_wavefunction(1, 0.0) == 0.0
    assert hermite_wavefunction(1, 1.3) == pytest.approx(-hermite_wavefunction(1, -1.3))


def test_wavefunction_accepts_arrays():
    xs = np.linspace(-2, 2, 7)
    vals = hermite_wavefunction(3, xs)
    assert vals.shape == xs.shape
    assert vals[3] == pytest.approx(hermite_wavefunction(3, 0.0))


def test_high_order_large_argument_finite():
    assert math.isfinite(hermite_wavefunction(200, 40.0))


def test_grid_orthonormality():
    # quadrature of the orthonormality integral on the default outcome grid
    xs = np.arange(-8.0, 8.0 + 0.025, 0.05)
    basis = hermite_basis(20, xs)
    gram = basis @ basis.T * 0.05
    assert np.max(np.abs(gram - np.eye(21))) < 1e-6


def test_basis_rows_match_single_evaluations():
    xs = np.linspace(-3, 3, 5)
    basis = hermite_basis(6, xs)
    for k in (0, 2, 6):
        assert np.allclose(basis[k], hermite_wavefunction(k, xs), atol=1e-14)


# --- displacement matrix elements ----------------------------------------------

def test_displacement_zero_is_identity():
    assert displacement_element(3, 3, 0.0) == 1.0
    assert displacement_element(2, 3, 0.0) == 0.0


def test_displacement_coherent_column():
    b = 0.8 - 0.4j
    for m in range(8):
        expected = math.exp(-abs(b) ** 2 / 2) * b ** m / math.sqrt(math.factorial(m))
        assert displacement_element(m, 0, b) == pytest.approx(expected, rel=1e-12)


def test_displacement_adjoint_symmetry():
    b = 1.1 + 0.6j
    for m in range(5):
        for k in range(5):
            lhs = displacement_element(m, k, b)
            rhs = np.conj(displacement_element(k, m, -b))
            assert lhs == pytest.approx(rhs, abs=1e-13)


@pytest.mark.parametrize("amount", [0.5, 2.0 + 1.0j, -3.0j])
@pytest.mark.parametrize("k", [0, 4, 10])
def test_displacement_columns_unit_norm(amount, k):
    if abs(amount) > 3.0:
        pytest.skip("outside the validated magnitude range")
    total = math.fsum(abs(displacement_element(m, k, amount)) ** 2 for m in range(61))
    assert total == pytest.approx(1.0, abs=1e-10)


def test_recurrence_columns_match_closed_form():
    # the vectorized recurrence used in the sweeps must agree with the
    # Laguerre closed form element by element
    amounts = np.array([0.3 + 0.2j, -1.5j, 2.0, -0.7 + 1.1j])
    cols = _displacement_columns(amounts, 12, 5)
    for gi, b in enumerate(amounts):
        for n in range(13):
            for k in range(6):
                assert cols[gi, n, k] == pytest.approx(
                    displacement_element(n, k, b), abs=1e-11
                )


def test_projection_kernel_matches_quadrature_route():
    # the homodyne projection <x, p| (|k>_0 |n>_1) equals, via the displaced
    # ideal EPR pair, pi^-1/2 <n|D(-x - ip)|k>; re-derive it directly from
    # oscillator wavefunctions as a Fourier-type quadrature over the
    # undetected combination and compare
    h, L = 0.01, 30.0
    v = np.arange(-L, L + h / 2, h)
    for (k, n, x, p) in [(0, 0, 1.0, 0.5), (1, 0, 0.7, -0.3), (2, 3, -1.2, 0.8), (3, 3, 0.4, 1.1)]:
        basis = hermite_basis(max(k, n), (v + x) / math.sqrt(2))
        basis_m = hermite_basis(max(k, n), (v - x) / math.sqrt(2))
        integral = np.sum(np.exp(-1j * p * v) * basis[k] * basis_m[n]) * h
        quad_route = integral / math.sqrt(2 * math.pi)
        disp_route = displacement_element(n, k, -(x + 1j * p)) / math.sqrt(math.pi)
        assert quad_route == pytest.approx(disp_route, abs=1e-8)


# --- resource state --------------------------------------------------------------

def test_resource_amplitudes_positive_geometric():
    c = resource_amplitudes(1.5, 40)
    th, ch = math.tanh(1.5), math.cosh(1.5)
    for n in (0, 1, 5, 20):
        assert c[n] == pytest.approx(th ** n / ch, rel=1e-12)
    assert np.all(c > 0)


def test_resource_amplitudes_degenerate():
    c = resource_amplitudes(0.0, 10)
    assert c[0] == 1.0 and np.all(c[1:] == 0)


# --- conditional states and success probability ----------------------------------

@pytest.fixture(scope="module")
def bk_state():
    return make_state(TEST_STATE_AMPS, 60)


@pytest.fixture(scope="module")
def default_sweep(bk_state):
    return bk_sweep(bk_state, BKConfig(1.5))


def test_epr_limit_recovers_input(bk_state):
    # strong resource squeezing: the corrected output converges on the input
    # for any outcome, pinning the displacement sign and gain calibration
    from condteleport import pad_to_cutoff

    config = BKConfig(3.0)
    wide = pad_to_cutoff(bk_state, 120)
    for (x, p) in [(0.0, 0.0), (1.0, 0.5), (2.0, -1.0)]:
        state, density = bk_conditional(bk_state, config, QuadratureOutcome(x, p), cutoff=120)
        assert density > 0
        assert fidelity(wide, state) > 0.99


def test_conditional_state_unit_norm(bk_state):
    config = BKConfig(1.5)
    state, density = bk_conditional(bk_state, config, QuadratureOutcome(0.8, -1.2))
    assert density > 1e-12
    assert abs(math.sqrt(state.squared_norm) - 1.0) < 1e-9


def test_zero_density_far_outcome(bk_state):
    config = BKConfig(1.5)
    with pytest.raises(ZeroDensityError):
        bk_conditional(bk_state, config, QuadratureOutcome(80.0, 0.0))


def test_unsqueezed_resource_is_lossy():
    config = BKConfig(0.0)
    vac = basis_state(0, 60)
    state, density = bk_conditional(vac, config, QuadratureOutcome(1.0, 0.5))
    f = fidelity(vac, state)
    assert density > 0
    assert 0.0 < f < 1.0


def test_density_integrates_to_one(default_sweep):
    config = BKConfig(1.5)
    total = bk_total_probability(config, default_sweep[2])
    assert 0.99 <= total <= 1.001


def test_pu_total_at_zero_threshold(bk_state, default_sweep):
    config = BKConfig(1.5)
    pu0 = bk_pu(bk_state, config, 0.0, sweep=default_sweep)
    assert pu0 == pytest.approx(bk_total_probability(config, default_sweep[2]), abs=1e-12)


def test_pu_monotone_and_vanishing(bk_state, default_sweep):
    config = BKConfig(1.5)
    values = [bk_pu(bk_state, config, fu, sweep=default_sweep) for fu in (0.0, 0.5, 0.9, 0.99)]
    assert all(a >= b for a, b in zip(values, values[1:]))
    assert bk_pu(bk_state, config, 1.0 + 1e-9, sweep=default_sweep) == 0.0


def test_config_validation():
    with pytest.raises(ValueError):
        BKConfig(-1.0)
    with pytest.raises(ValueError):
        BKConfig(1.0, grid_half_width=8.0, grid_step=0.3)
    with pytest.raises(ValueError):
        QuadratureOutcome(float("nan"), 0.0)
