import numpy as np
import pytest

from condteleport import (
    TruncationOverflowError,
    ZeroStateError,
    basis_state,
    fidelity,
    inner_product,
    lower_shift,
    make_state,
    normalize,
    pad_to_cutoff,
    raise_shift,
)
from conftest import TEST_STATE_AMPS


def test_make_state_vacuum_padding():
    v = make_state([1], 5)
    assert len(v.amplitudes) == 6
    assert v.amplitudes[0] == 1
    assert np.all(v.amplitudes[1:] == 0)


def test_make_state_superposition():
    v = make_state(TEST_STATE_AMPS, 10)
    assert v.amplitudes[1] == pytest.approx(2 ** -0.5)
    assert v.amplitudes[3] == pytest.approx(1j * 2 ** -0.5)
    assert v.squared_norm == pytest.approx(1.0)


def test_make_state_zero_vector_allowed():
    v = make_state([0, 0, 0, 0], 3)
    assert v.squared_norm == 0.0


def test_make_state_rejects_nonfinite():
    with pytest.raises(ValueError):
        make_state([1.0, float("nan")], 4)
    with pytest.raises(ValueError):
        make_state([complex(float("inf"), 0)], 4)


def test_make_state_rejects_overlong():
    with pytest.raises(ValueError):
        make_state([0, 0, 0, 1], 2)


def test_make_state_rejects_super_normalized():
    with pytest.raises(ValueError):
        make_state([2.0], 3)


def test_amplitudes_read_only():
    v = make_state([1], 3)
    with pytest.raises(ValueError):
        v.amplitudes[0] = 0


def test_inner_product_orthonormality():
    one, two = basis_state(1, 5), basis_state(2, 5)
    assert inner_product(one, one) == 1
    assert inner_product(one, two) == 0


def test_inner_product_expansion():
    psi = make_state(TEST_STATE_AMPS, 10)
    three = basis_state(3, 10)
    val = inner_product(psi, three)
    assert val == pytest.approx(-1j * 2 ** -0.5)
    assert abs(val) == pytest.approx(2 ** -0.5)


def test_inner_product_pads_shorter():
    a = make_state([0, 1], 1)
    b = basis_state(1, 8)
    assert inner_product(a, b) == 1


def test_fidelity_identity_and_orthogonal():
    psi = make_state(TEST_STATE_AMPS, 10)
    assert fidelity(psi, psi) == pytest.approx(1.0)
    assert fidelity(basis_state(0, 5), basis_state(1, 5)) == 0.0


def test_fidelity_half():
    psi = make_state(TEST_STATE_AMPS, 10)
    assert fidelity(basis_state(1, 10), psi) == pytest.approx(0.5)


def test_fidelity_symmetric_and_phase_blind():
    rng = np.random.default_rng(7)
    for _ in range(20):
        a = rng.standard_normal(8) + 1j * rng.standard_normal(8)
        b = rng.standard_normal(8) + 1j * rng.standard_normal(8)
        va = make_state(a / np.linalg.norm(a), 7)
        vb = make_state(b / np.linalg.norm(b), 7)
        assert abs(fidelity(va, vb) - fidelity(vb, va)) < 1e-15
        rotated = make_state(vb.amplitudes * np.exp(0.321j), 7)
        assert abs(fidelity(va, vb) - fidelity(va, rotated)) < 1e-15


def test_fidelity_requires_normalization():
    half = make_state([0.5], 3)
    with pytest.raises(ValueError):
        fidelity(half, basis_state(0, 3))


def test_lower_shift_basis():
    assert lower_shift(basis_state(3, 6), 2).amplitudes[1] == 1


def test_lower_shift_annihilates_vacuum():
    assert lower_shift(basis_state(0, 6), 1).squared_norm == 0.0


def test_lower_shift_subnormalizes():
    psi = make_state(TEST_STATE_AMPS, 10)
    dropped = lower_shift(psi, 2)
    assert dropped.squared_norm == pytest.approx(0.5)
    assert dropped.amplitudes[1] == pytest.approx(1j * 2 ** -0.5)


def test_lower_shift_norm_bookkeeping():
    rng = np.random.default_rng(3)
    for d in (1, 2, 5):
        a = rng.standard_normal(12) + 1j * rng.standard_normal(12)
        v = make_state(a / np.linalg.norm(a), 11)
        kept = lower_shift(v, d).squared_norm
        discarded = float(np.sum(np.abs(v.amplitudes[:d]) ** 2))
        assert kept + discarded == pytest.approx(v.squared_norm, abs=1e-12)


def test_raise_shift_basis():
    assert raise_shift(basis_state(1, 6), 2).amplitudes[3] == 1


def test_raise_then_lower_is_identity():
    rng = np.random.default_rng(11)
    for d in (1, 3, 4):
        a = rng.standard_normal(8) + 1j * rng.standard_normal(8)
        a /= np.linalg.norm(a)
        v = make_state(a, 15)  # leaves headroom at the top
        back = lower_shift(raise_shift(v, d), d)
        assert np.array_equal(back.amplitudes, v.amplitudes)


def test_raise_shift_overflow():
    top = basis_state(6, 6)
    with pytest.raises(TruncationOverflowError):
        raise_shift(top, 1)


def test_shifts_larger_than_cutoff():
    vac = basis_state(0, 3)
    assert lower_shift(vac, 7).squared_norm == 0.0
    with pytest.raises(TruncationOverflowError):
        raise_shift(vac, 7)
    zero = make_state([0, 0], 3)
    assert raise_shift(zero, 7).squared_norm == 0.0


def test_normalize_scales_and_reports():
    v = make_state([0, 1j * 2 ** -0.5], 4)
    unit, nsq = normalize(v)
    assert nsq == pytest.approx(0.5)
    assert unit.squared_norm == pytest.approx(1.0)
    assert unit.amplitudes[1] == pytest.approx(1j)  # phase kept


def test_normalize_idempotent():
    v = basis_state(2, 4)
    unit, nsq = normalize(v)
    assert nsq == pytest.approx(1.0)
    assert np.array_equal(unit.amplitudes, v.amplitudes)


def test_normalize_zero_state():
    with pytest.raises(ZeroStateError):
        normalize(make_state([0, 0], 4))


def test_pad_to_cutoff():
    psi = make_state(TEST_STATE_AMPS, 5)
    wide = pad_to_cutoff(psi, 9)
    assert wide.cutoff == 9
    assert np.array_equal(wide.amplitudes[:6], psi.amplitudes)
    with pytest.raises(ValueError):
        pad_to_cutoff(psi, 2)
