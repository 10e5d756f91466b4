import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

import framekit as fk
from framekit.errors import (
    BadParameter,
    DimensionMismatch,
    NotSpanning,
    ZeroNorm,
)


def two_column_system():
    # (2 e_1, e_2) in C^2
    return fk.VectorSystem(np.array([[2.0, 0.0], [0.0, 1.0]], dtype=complex))


def small_random_system(seed, dim=None, count=None):
    rng = np.random.default_rng(seed)
    n = dim or int(rng.integers(2, 5))
    m = count or int(rng.integers(1, 6))
    cols = rng.standard_normal((n, m)) + 1j * rng.standard_normal((n, m))
    return fk.VectorSystem(cols)


# ---------------------------------------------------------------------------
# VectorSystem invariants


def test_system_rejects_nonfinite():
    with pytest.raises(BadParameter):
        fk.VectorSystem(np.array([[np.nan, 1.0]]))
    with pytest.raises(BadParameter):
        fk.VectorSystem(np.array([[np.inf], [0.0]]))


def test_system_rejects_bad_labels():
    with pytest.raises(BadParameter):
        fk.VectorSystem(np.eye(2), labels=("a",))
    with pytest.raises(BadParameter):
        fk.VectorSystem(np.eye(2), labels=("a", "a"))


def test_system_columns_are_read_only():
    vs = fk.orthonormal(3)
    with pytest.raises(ValueError):
        vs.columns[0, 0] = 5.0


# ---------------------------------------------------------------------------
# synthesis / analysis


def test_synthesis_identity_case():
    vs = fk.orthonormal(3)
    out = fk.synthesis_apply(vs, [1, 0, 0])
    np.testing.assert_allclose(out, np.array([1, 0, 0], dtype=complex))


def test_analysis_on_basis_vector():
    vs = fk.orthonormal(3)
    out = fk.analysis_apply(vs, np.array([0, 1, 0], dtype=complex))
    np.testing.assert_allclose(out, np.array([0, 1, 0], dtype=complex))


def test_analysis_direct_inner_products():
    out = fk.analysis_apply(two_column_system(), np.array([1, 0], dtype=complex))
    np.testing.assert_allclose(out, np.array([2, 0], dtype=complex))


def test_dimension_mismatch_errors():
    vs = fk.orthonormal(3)
    with pytest.raises(DimensionMismatch):
        fk.synthesis_apply(vs, [1, 0])
    with pytest.raises(DimensionMismatch):
        fk.analysis_apply(vs, [1, 0])


@given(st.integers(0, 10_000))
def test_adjointness(seed):
    # <synthesis(c), f> = <c, analysis(f)> with <x, y> linear in x
    vs = small_random_system(seed)
    rng = np.random.default_rng(seed + 1)
    c = rng.standard_normal(vs.count) + 1j * rng.standard_normal(vs.count)
    f = rng.standard_normal(vs.dim) + 1j * rng.standard_normal(vs.dim)
    lhs = np.vdot(f, fk.synthesis_apply(vs, c))
    rhs = np.vdot(fk.analysis_apply(vs, f), c)
    assert abs(lhs - rhs) < 1e-10 * max(1.0, abs(lhs))


# ---------------------------------------------------------------------------
# frame operator and report


def test_frame_operator_identity_for_onb():
    np.testing.assert_allclose(fk.frame_operator(fk.orthonormal(4)), np.eye(4), atol=1e-14)


def test_frame_operator_duplicated_onb():
    np.testing.assert_allclose(
        fk.frame_operator(fk.duplicated(2)), 2.0 * np.eye(2), atol=1e-14
    )


def test_frame_operator_scaled_columns():
    np.testing.assert_allclose(
        fk.frame_operator(two_column_system()), np.diag([4.0, 1.0]), atol=1e-14
    )


@given(st.integers(0, 10_000))
def test_frame_operator_hermitian_psd_trace(seed):
    vs = small_random_system(seed)
    s = fk.frame_operator(vs)
    np.testing.assert_allclose(s, s.conj().T, atol=1e-12)
    vals = np.linalg.eigvalsh(s)
    assert vals[0] >= -1e-12 * max(1.0, vals[-1])
    assert abs(np.trace(s).real - np.sum(vs.norms() ** 2)) < 1e-10 * max(
        1.0, np.sum(vs.norms() ** 2)
    )


def test_frame_report_onb():
    rep = fk.frame_report(fk.orthonormal(4))
    assert rep.lower_bound == pytest.approx(1.0, abs=1e-12)
    assert rep.upper_bound == pytest.approx(1.0, abs=1e-12)
    assert rep.min_norm == pytest.approx(1.0) and rep.max_norm == pytest.approx(1.0)
    assert rep.is_tight and rep.is_spanning


def test_frame_report_lemma51():
    rep = fk.frame_report(fk.lemma51(10))
    assert abs(rep.lower_bound - 1.0) < 1e-9
    assert abs(rep.upper_bound - 1.0) < 1e-9


def test_frame_report_duplicated():
    rep = fk.frame_report(fk.duplicated(2))
    assert rep.lower_bound == pytest.approx(2.0, abs=1e-12)
    assert rep.upper_bound == pytest.approx(2.0, abs=1e-12)


def test_frame_report_flags_consistent():
    for vs in (fk.orthonormal(3), fk.duplicated(4, double_ambient=True), two_column_system()):
        rep = fk.frame_report(vs)
        assert rep.lower_bound <= rep.upper_bound + 1e-15
        assert rep.min_norm <= rep.max_norm
        assert rep.is_spanning == (rep.lower_bound > rep.tolerance * rep.upper_bound)
        assert rep.is_tight == (
            rep.upper_bound - rep.lower_bound <= rep.tolerance * rep.upper_bound
        )


# ---------------------------------------------------------------------------
# power transform


def test_power_one_is_identity():
    vs = two_column_system()
    assert fk.power_transform(vs, 1.0) is vs


def test_power_zero_canonical_tight():
    out = fk.power_transform(two_column_system(), 0.0)
    np.testing.assert_allclose(out.columns, np.eye(2), atol=1e-12)
    np.testing.assert_allclose(fk.frame_operator(out), np.eye(2), atol=1e-12)


def test_power_two_squares_operator():
    out = fk.power_transform(two_column_system(), 2.0)
    np.testing.assert_allclose(out.columns, np.diag([4.0, 1.0]), atol=1e-12)
    np.testing.assert_allclose(fk.frame_operator(out), np.diag([16.0, 1.0]), atol=1e-12)


def test_power_requires_spanning_for_negative():
    flat = fk.VectorSystem(np.array([[1.0], [0.0]], dtype=complex))
    with pytest.raises(NotSpanning):
        fk.power_transform(flat, 0.0)
    # nonnegative powers of S are fine without spanning
    out = fk.power_transform(flat, 3.0)
    assert out.dim == 2


@pytest.mark.parametrize("a", [-1.0, 0.0, 0.5, 2.0])
def test_power_matches_spectral_power(a):
    vs = fk.random_frame(6, 14, seed=7, cond=1e3)
    s = fk.frame_operator(vs)
    vals, vecs = np.linalg.eigh(s)
    target = (vecs * vals**a) @ vecs.conj().T
    got = fk.frame_operator(fk.power_transform(vs, a))
    rel = np.linalg.norm(got - target, 2) / np.linalg.norm(target, 2)
    assert rel < 1e-8


def test_power_composition():
    vs = fk.random_frame(5, 9, seed=11, cond=100.0)
    twice = fk.power_transform(fk.power_transform(vs, 0.5), 2.0)
    np.testing.assert_allclose(
        fk.frame_operator(twice), fk.frame_operator(vs), atol=1e-9
    )


def test_riesz_basis_becomes_orthonormal_at_power_zero():
    # a spanning system with m = n: the canonical tight transform orthonormalizes it
    rng = np.random.default_rng(3)
    vs = fk.VectorSystem(rng.standard_normal((4, 4)) + 0.1j * rng.standard_normal((4, 4)))
    out = fk.power_transform(vs, 0.0)
    np.testing.assert_allclose(out.gram(), np.eye(4), atol=1e-10)


# ---------------------------------------------------------------------------
# canonical dual reconstruction


def test_dual_on_onb():
    dual = fk.canonical_dual_reconstruct(fk.orthonormal(3), [1, 0, 0])
    np.testing.assert_allclose(dual.coefficients, [1, 0, 0], atol=1e-14)
    np.testing.assert_allclose(dual.reconstruction, [1, 0, 0], atol=1e-14)
    assert dual.parseval_scalar == pytest.approx(1.0, abs=1e-14)


def test_dual_on_duplicated():
    dual = fk.canonical_dual_reconstruct(fk.duplicated(2), [1, 0])
    np.testing.assert_allclose(dual.coefficients, [0.5, 0.5, 0, 0], atol=1e-14)
    assert dual.parseval_scalar == pytest.approx(0.5, abs=1e-14)


def test_dual_identity_on_lemma51(rng):
    vs = fk.lemma51(5)
    f = fk.core.random_unit_vector(5, rng)
    dual = fk.canonical_dual_reconstruct(vs, f)
    assert np.linalg.norm(dual.reconstruction - f) < 1e-9
    assert abs(dual.parseval_scalar - np.sum(np.abs(dual.coefficients) ** 2)) < 1e-9


def test_dual_requires_spanning():
    flat = fk.VectorSystem(np.array([[1.0], [0.0]], dtype=complex))
    with pytest.raises(NotSpanning):
        fk.canonical_dual_reconstruct(flat, [1, 0])


# ---------------------------------------------------------------------------
# counting inequalities


def test_counting_onb_equality():
    slacks = fk.check_counting_lemmas(fk.orthonormal(5))
    assert slacks.dimension_slack == pytest.approx(0.0, abs=1e-9)
    assert slacks.cardinality_slack == pytest.approx(0.0, abs=1e-9)


def test_counting_lemma51():
    vs = fk.lemma51(10)
    beta = float(vs.norms().max())
    slacks = fk.check_counting_lemmas(vs)
    rep = fk.frame_report(vs)
    expected = beta**2 / rep.lower_bound * 11 - 10
    assert slacks.dimension_slack == pytest.approx(expected, rel=1e-9)
    assert slacks.dimension_slack >= 0.0


def test_counting_duplicated_equality():
    slacks = fk.check_counting_lemmas(fk.duplicated(2))
    assert slacks.cardinality_slack == pytest.approx(0.0, abs=1e-9)


def test_counting_zero_norm():
    cols = np.eye(2, 3, dtype=complex)  # third column is zero
    with pytest.raises(ZeroNorm):
        fk.check_counting_lemmas(fk.VectorSystem(cols))


def test_counting_not_spanning():
    vs = fk.duplicated(2, double_ambient=True)
    with pytest.raises(NotSpanning):
        fk.check_counting_lemmas(vs)


# ---------------------------------------------------------------------------
# operator power spectral data


def test_operator_power_spectral_data():
    vs = fk.random_frame(5, 8, seed=2, cond=30.0)
    power = fk.OperatorPower.compute(vs, 1.0)
    assert np.all(np.diff(power.eigenvalues) <= 1e-12)
    assert np.all(power.eigenvalues >= 0.0)
    np.testing.assert_allclose(power.matrix(), fk.frame_operator(vs), atol=1e-10)


def test_coverage_target_handles_float_dust():
    assert fk.coverage_target(10, 0.1) == 9
    assert fk.coverage_target(40, 0.25) == 30
    assert fk.coverage_target(80, 0.25) == 60
    assert fk.coverage_target(7, 0.5) == 4  # ceil(3.5)
    with pytest.raises(BadParameter):
        fk.coverage_target(10, 0.0)
