import numpy as np
import pytest

from xepu import (
    DensityMatrix,
    bell_projector,
    hermitian_eig,
    purity,
    sample_random,
    spectrum_from_hyperspherical,
    spectrum_of,
    validate,
    werner,
)
from xepu.errors import InvalidRank, NotHermitian, NotPSD, NotUnitTrace, OutOfRange


def test_validate_accepts_maximally_mixed():
    dm = validate(np.eye(4, dtype=complex) / 4)
    assert isinstance(dm, DensityMatrix)


def test_validate_accepts_bell_projector():
    validate(bell_projector().mat)


def test_validate_rejects_indefinite():
    with pytest.raises(NotPSD):
        validate(np.diag([0.5, 0.6, -0.1, 0.0]))


def test_validate_rejects_non_hermitian():
    m = np.eye(4, dtype=complex) / 4
    m[0, 1] = 1e-3
    with pytest.raises(NotHermitian):
        validate(m)


def test_validate_rejects_bad_trace():
    with pytest.raises(NotUnitTrace):
        validate(np.eye(4, dtype=complex) / 3)


def test_validate_rejects_non_finite():
    m = np.eye(4, dtype=complex) / 4
    m[2, 2] = np.nan
    with pytest.raises(ValueError):
        validate(m)


def test_sample_random_is_deterministic():
    a = sample_random(3, 12345)
    b = sample_random(3, 12345)
    assert np.array_equal(a.mat, b.mat)
    c = sample_random(3, 12346)
    assert not np.array_equal(a.mat, c.mat)


@pytest.mark.parametrize("rank", [1, 2, 3, 4])
def test_sample_random_rank_and_purity(rank):
    for seed in range(10_000):
        rho = sample_random(rank, seed)
        validate(rho.mat)
        w = hermitian_eig(rho.mat).values
        assert int(np.sum(w > 1e-12)) == rank
        assert purity(rho) >= 1.0 / rank - 1e-12


def test_sample_random_seed42_rank4_has_full_support():
    w = hermitian_eig(sample_random(4, 42).mat).values
    assert np.all(w > 1e-12)


def test_sample_random_rejects_bad_rank():
    with pytest.raises(InvalidRank):
        sample_random(0, 1)
    with pytest.raises(InvalidRank):
        sample_random(5, 1)


def test_werner_endpoints():
    assert np.allclose(werner(0.0).mat, np.eye(4) / 4)
    assert np.allclose(werner(1.0).mat, bell_projector().mat)
    with pytest.raises(OutOfRange):
        werner(1.5)


def test_werner_spectrum():
    spec = spectrum_of(werner(0.8))
    assert np.allclose(spec.lam, [0.85, 0.05, 0.05, 0.05], atol=1e-12)


def test_spectrum_of_fixtures():
    assert np.allclose(spectrum_of(validate(np.eye(4) / 4)).lam, 0.25, atol=1e-15)
    assert np.allclose(spectrum_of(bell_projector()).lam, [1, 0, 0, 0], atol=1e-15)


def test_spectrum_sums_to_one_after_renormalization():
    for seed in range(200):
        for rank in (1, 2, 3, 4):
            lam = spectrum_of(sample_random(rank, seed)).lam
            assert abs(lam.sum() - 1.0) <= 1e-10
            assert np.all(lam >= 0.0)
            assert all(lam[k] >= lam[k + 1] for k in range(3))


def test_purity_fixtures():
    assert purity(validate(np.eye(4) / 4)) == pytest.approx(0.25, abs=1e-15)
    assert purity(bell_projector()) == pytest.approx(1.0, abs=1e-15)
    # 0.85^2 + 3 * 0.05^2
    assert purity(werner(0.8)) == pytest.approx(0.73, abs=1e-14)


def test_hyperspherical_edges():
    assert np.allclose(spectrum_from_hyperspherical([0.0, 0.3, 1.0]).lam, [1, 0, 0, 0])
    half_pi = np.pi / 2
    lam = spectrum_from_hyperspherical([half_pi, half_pi, half_pi]).lam
    assert np.allclose(lam, [1, 0, 0, 0], atol=1e-15)
    with pytest.raises(OutOfRange):
        spectrum_from_hyperspherical([-0.1, 0.0, 0.0])


def test_hyperspherical_round_trip():
    # invert the squared-hypersphere map for a chosen spectrum
    target = np.array([0.4, 0.3, 0.2, 0.1])
    t1 = np.arccos(np.sqrt(target[0]))
    t2 = np.arccos(np.sqrt(target[1] / (1 - target[0])))
    t3 = np.arccos(np.sqrt(target[2] / (1 - target[0] - target[1])))
    lam = spectrum_from_hyperspherical([t1, t2, t3]).lam
    assert np.max(np.abs(lam - target)) <= 1e-12


def test_hyperspherical_always_yields_valid_spectrum(rng):
    for _ in range(500):
        angles = rng.uniform(0, np.pi / 2, size=3)
        lam = spectrum_from_hyperspherical(angles).lam
        assert abs(lam.sum() - 1.0) <= 1e-10
        assert np.all(lam >= 0.0)
        assert all(lam[k] >= lam[k + 1] for k in range(3))
