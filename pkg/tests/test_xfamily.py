import numpy as np
import pytest

from xepu import (
    Spectrum,
    bell_projector,
    build_epu,
    build_mems,
    build_x_state,
    build_x_state_cases,
    concurrence_general,
    concurrence_x,
    is_unitary,
    mems_concurrence,
    parameterize,
    q_value,
    sample_random,
    spectrum_of,
    swap_variant,
    validate,
    werner,
)
from xepu.errors import OutOfRange, UnphysicalConcurrence

WERNER_SPEC = Spectrum(np.array([0.85, 0.05, 0.05, 0.05]))


def random_spectrum(rank: int, seed: int) -> Spectrum:
    return spectrum_of(sample_random(rank, seed))


def random_pair(rank: int, seed: int):
    """Spectrum plus a uniformly drawn physical concurrence target."""
    spec = random_spectrum(rank, seed)
    rng = np.random.default_rng(seed ^ 0x5EED)
    return spec, rng.uniform(0.0, mems_concurrence(spec))


def test_q_value_fixtures():
    assert q_value(Spectrum(np.array([1.0, 0, 0, 0])), 1.0) == 0.0
    assert q_value(Spectrum(np.full(4, 0.25)), 0.0) == pytest.approx(-0.25, abs=1e-16)
    assert q_value(WERNER_SPEC, 0.7) == pytest.approx(0.0, abs=1e-15)


def test_q_value_rejects_unphysical_targets():
    spec = Spectrum(np.array([0.5, 0.3, 0.2, 0.0]))
    with pytest.raises(UnphysicalConcurrence):
        q_value(spec, 0.31)
    with pytest.raises(UnphysicalConcurrence):
        q_value(spec, -0.01)
    # the clamp window admits rounding overshoot
    assert q_value(spec, 0.3 + 0.5e-12) == pytest.approx(0.0, abs=1e-12)


def test_build_bell_edge():
    xc = build_x_state(Spectrum(np.array([1.0, 0, 0, 0])), 1.0)
    assert np.allclose(xc.rho_x.mat, bell_projector().mat, atol=1e-16)


def test_build_maximally_mixed_edge():
    xc = build_x_state(Spectrum(np.full(4, 0.25)), 0.0)
    assert np.allclose(xc.rho_x.mat, np.eye(4) / 4, atol=1e-16)
    assert xc.q < 0 and xc.omega == 0.0


def test_build_werner_edge():
    xc = build_x_state(WERNER_SPEC, 0.7)
    assert np.allclose(np.diag(xc.rho_x.mat).real, [0.45, 0.05, 0.05, 0.45], atol=1e-15)
    assert xc.rho_x.mat[0, 3] == pytest.approx(0.4, abs=1e-15)
    assert concurrence_x(xc.rho_x).c == pytest.approx(0.7, abs=1e-15)
    assert np.allclose(spectrum_of(xc.rho_x).lam, WERNER_SPEC.lam, atol=1e-12)


@pytest.mark.parametrize("rank", [1, 2, 3, 4])
def test_construction_contracts_on_random_pairs(rank):
    for i in range(1000):
        spec, c = random_pair(rank, 10_000 + i)
        xc = build_x_state(spec, c)
        assert xc.omega == max(0.0, xc.q)
        m = xc.rho_x.mat
        off_x = [m[0, 1], m[0, 2], m[1, 0], m[1, 3], m[2, 0], m[2, 3], m[3, 1], m[3, 2]]
        assert all(v == 0 for v in off_x)
        validate(m)
        assert np.max(np.abs(spectrum_of(xc.rho_x).lam - spec.lam)) <= 1e-10
        cx = concurrence_x(xc.rho_x).c
        if xc.q >= 0:
            assert abs(cx - c) <= 1e-9
        else:
            assert cx <= 1e-9


def test_case_form_matches_compact_form():
    for rank in (1, 2, 3, 4):
        for i in range(1000):
            spec, c = random_pair(rank, 20_000 + i)
            a = build_x_state(spec, c).rho_x.mat
            b = build_x_state_cases(spec, c).rho_x.mat
            assert np.max(np.abs(a - b)) <= 1e-12
    # separable branch fixture
    spec = Spectrum(np.full(4, 0.25))
    assert np.allclose(build_x_state_cases(spec, 0.0).rho_x.mat, np.eye(4) / 4)


def test_build_mems_fixtures():
    assert np.allclose(build_mems(Spectrum(np.array([1.0, 0, 0, 0]))).mat,
                       bell_projector().mat)
    assert np.allclose(build_mems(Spectrum(np.full(4, 0.25))).mat, np.eye(4) / 4)
    spec = Spectrum(np.array([0.5, 0.3, 0.2, 0.0]))
    dm = build_mems(spec)
    assert concurrence_x(dm).c == pytest.approx(0.3, abs=1e-15)
    assert concurrence_x(dm).c == pytest.approx(mems_concurrence(spec), abs=1e-15)


def test_epu_fixed_points():
    res = build_epu(bell_projector())
    assert np.allclose(res.rho_x.mat, bell_projector().mat, atol=1e-15)
    assert res.transform_residual <= 1e-10
    assert res.unitarity_residual <= 1e-10

    res = build_epu(validate(np.eye(4) / 4))
    assert np.allclose(res.rho_x.mat, np.eye(4) / 4)
    assert np.array_equal(res.u, np.eye(4))
    assert res.transform_residual <= 1e-10


def test_epu_on_seeded_rank4_state():
    rho = sample_random(4, 7)
    res = build_epu(rho)
    assert res.unitarity_residual <= 1e-10
    assert res.transform_residual <= 1e-8
    assert is_unitary(res.u, 1e-10)
    c_in = concurrence_general(rho).c
    assert abs(concurrence_x(res.rho_x).c - c_in) <= 1e-9


def test_epu_round_trip_recovers_input():
    for rank in (1, 2, 3, 4):
        for i in range(1000):
            rho = sample_random(rank, 30_000 + i)
            res = build_epu(rho)
            back = res.u.conj().T @ res.rho_x.mat @ res.u
            assert np.linalg.norm(back - rho.mat) <= 1e-8


def test_swap_variant_fixtures():
    bell_x = build_x_state(Spectrum(np.array([1.0, 0, 0, 0])), 1.0)
    swapped = swap_variant(bell_x)
    expected = np.zeros((4, 4))
    expected[1:3, 1:3] = 0.5
    assert np.allclose(swapped.mat, expected, atol=1e-16)

    mixed = build_x_state(Spectrum(np.full(4, 0.25)), 0.0)
    assert np.allclose(swap_variant(mixed).mat, np.eye(4) / 4)


def test_swap_variant_werner():
    xc = build_x_state(WERNER_SPEC, 0.7)
    sv = swap_variant(xc)
    assert np.allclose(np.diag(sv.mat).real, [0.05, 0.45, 0.45, 0.05], atol=1e-15)
    assert sv.mat[1, 2] == pytest.approx(0.4, abs=1e-15)
    # local conjugation: concurrence via the general route is unchanged
    assert concurrence_general(sv).c == pytest.approx(0.7, abs=1e-9)
    assert np.allclose(spectrum_of(sv).lam, WERNER_SPEC.lam, atol=1e-12)


def test_parameterize_edges():
    spec = Spectrum(np.array([0.5, 0.3, 0.2, 0.0]))
    assert concurrence_x(parameterize(spec, 0.0).rho_x).c == 0.0
    xc = parameterize(spec, 1.0)
    assert xc.c == pytest.approx(0.3, abs=1e-15)
    assert np.max(np.abs(xc.rho_x.mat - build_mems(spec).mat)) <= 1e-15
    flat = Spectrum(np.full(4, 0.25))
    for eta in (0.0, 0.5, 1.0):
        assert parameterize(flat, eta).c == 0.0
    with pytest.raises(OutOfRange):
        parameterize(spec, 1.1)


def test_continuity_approaching_the_branch_point():
    # c_pre > 0 spectrum; walk the target concurrence up to the ceiling
    spec = Spectrum(np.array([0.5, 0.2, 0.2, 0.1]))
    ceiling = mems_concurrence(spec)
    gap = spec.lam[0] - spec.lam[2]
    # |q| = 1e-10 corresponds to this offset below the ceiling
    dc = 1e-10 / (2.0 * gap)
    near = build_x_state(spec, ceiling - dc)
    limit = build_mems(spec)
    assert abs(near.q) <= 2e-10
    # corner entries are continuous through the branch point
    assert abs(near.rho_x.mat[0, 3] - limit.mat[0, 3]) <= 1e-8
    # the +-sqrt(omega) diagonal terms close at the sqrt(|q|) scale, which
    # is the best any construction of this family can do
    assert np.max(np.abs(near.rho_x.mat - limit.mat)) <= 0.5 * np.sqrt(2e-10) + 1e-8
    # both construction routes agree on either side of the point
    for c in (ceiling - dc, ceiling - 2 * dc, 0.0):
        a = build_x_state(spec, c).rho_x.mat
        b = build_x_state_cases(spec, c).rho_x.mat
        assert np.max(np.abs(a - b)) <= 1e-12


def test_werner_pipeline_end_to_end():
    rho = werner(0.8)
    res = build_epu(rho)
    assert abs(concurrence_x(res.rho_x).c - 0.7) <= 1e-9
    assert res.transform_residual <= 1e-8
    assert np.max(np.abs(spectrum_of(res.rho_x).lam - WERNER_SPEC.lam)) <= 1e-10
