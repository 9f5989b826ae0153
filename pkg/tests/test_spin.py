import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from weylnoise.minkowski import FourVector
from weylnoise.spin import (
    BASE_POINT_ARRAY,
    LittleGroupElement,
    PAULI,
    SL2CElement,
    SL2CLieElement,
    covering_map,
    covering_map_derivative,
    four_to_herm,
    herm_to_four,
    little_group_embed,
    little_group_extract,
    little_group_generators,
    random_boost,
    random_little_group,
    random_sl2c,
    random_su2,
    sl2c_exp,
    spin_rep_lie,
    spin_rep_matrix,
)

angle = st.floats(-np.pi, np.pi, allow_nan=False, allow_subnormal=False)
shift = st.floats(-3, 3, allow_nan=False, allow_subnormal=False)


def test_herm_roundtrip(rng):
    for _ in range(20):
        p = rng.normal(size=4)
        H = four_to_herm(p)
        assert np.allclose(H, H.conj().T)
        assert np.allclose(herm_to_four(H), p, atol=1e-14)
    # the base point maps to I + sigma_3
    assert np.allclose(
        four_to_herm(BASE_POINT_ARRAY), np.array([[2.0, 0.0], [0.0, 0.0]])
    )


def test_covering_boost_frozen():
    m = SL2CElement(np.diag([np.sqrt(2.0), 1.0 / np.sqrt(2.0)]).astype(complex))
    want = np.array(
        [[1.25, 0, 0, 0.75], [0, 1, 0, 0], [0, 0, 1, 0], [0.75, 0, 0, 1.25]]
    )
    assert np.allclose(covering_map(m), want, atol=1e-14)


def test_covering_rotation_frozen():
    # exp(-i pi/4 sigma_3) covers the rotation by pi/2 about the z axis
    m = SL2CElement(np.diag([np.exp(-1j * np.pi / 4), np.exp(1j * np.pi / 4)]))
    want = np.array(
        [[1, 0, 0, 0], [0, 0, -1, 0], [0, 1, 0, 0], [0, 0, 0, 1]], dtype=float
    )
    assert np.allclose(covering_map(m), want, atol=1e-14)


def test_unit_determinant_enforced():
    with pytest.raises(ValueError):
        SL2CElement(np.diag([2.0, 1.0]).astype(complex))
    with pytest.raises(ValueError):
        SL2CLieElement(np.eye(2, dtype=complex))


def test_derivative_matches_finite_differences(rng):
    step = 1e-3
    for _ in range(10):
        x = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
        x -= 0.5 * np.trace(x) * np.eye(2)
        X = SL2CLieElement(x)

        def diff(h):
            return (covering_map(sl2c_exp(X, h)) - covering_map(sl2c_exp(X, -h))) / (
                2.0 * h
            )

        fd = (4.0 * diff(0.5 * step) - diff(step)) / 3.0
        assert np.max(np.abs(fd - covering_map_derivative(X))) < 5e-8


def test_spin_rep_structure(rng):
    for _ in range(10):
        m1 = random_sl2c(rng)
        m2 = random_sl2c(rng)
        s1, s2 = spin_rep_matrix(m1.m), spin_rep_matrix(m2.m)
        assert np.allclose(spin_rep_matrix(m1.m @ m2.m), s1 @ s2, atol=1e-12)
        assert np.max(np.abs(s1[:2, 2:])) == 0.0
        assert np.max(np.abs(s1[2:, :2])) == 0.0
    u = spin_rep_matrix(random_su2(rng).m)
    assert np.allclose(u.conj().T @ u, np.eye(4), atol=1e-13)


def test_spin_rep_lie_matches_finite_differences(rng):
    step = 1e-4
    x = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
    x -= 0.5 * np.trace(x) * np.eye(2)
    X = SL2CLieElement(x)
    fd = (
        spin_rep_matrix(sl2c_exp(X, step).m) - spin_rep_matrix(sl2c_exp(X, -step).m)
    ) / (2.0 * step)
    assert np.max(np.abs(fd - spin_rep_lie(X))) < 1e-6


@given(angle, shift, shift)
def test_stabilizer_fixes_base_point(theta, ar, ai):
    k = LittleGroupElement(np.exp(1j * theta), ar + 1j * ai)
    L = covering_map(little_group_embed(k))
    assert np.max(np.abs(L @ BASE_POINT_ARRAY - BASE_POINT_ARRAY)) < 1e-10


def test_embed_extract_roundtrip(rng):
    for _ in range(20):
        k = random_little_group(rng)
        back = little_group_extract(little_group_embed(k))
        assert abs(back.z - k.z) < 1e-12
        assert abs(back.a - k.a) < 1e-12
    with pytest.raises(ValueError):
        little_group_extract(random_boost(rng, max_rapidity=1.0))


def test_generator_matrices_frozen():
    rot, n1, n2 = little_group_generators()
    assert np.allclose(rot.x, 0.5j * PAULI[2])
    assert np.array_equal(n1.x, np.array([[0, 1], [0, 0]], dtype=complex))
    assert np.array_equal(n2.x, np.array([[0, 1j], [0, 0]], dtype=complex))
    want_rot = np.array(
        [[0, 0, 0, 0], [0, 0, 1, 0], [0, -1, 0, 0], [0, 0, 0, 0]], dtype=float
    )
    want_n1 = np.array(
        [[0, 1, 0, 0], [1, 0, 0, -1], [0, 0, 0, 0], [0, 1, 0, 0]], dtype=float
    )
    want_n2 = np.array(
        [[0, 0, -1, 0], [0, 0, 0, 0], [-1, 0, 0, 1], [0, 0, -1, 0]], dtype=float
    )
    for X, want in ((rot, want_rot), (n1, want_n1), (n2, want_n2)):
        D = covering_map_derivative(X)
        assert np.allclose(D, want, atol=1e-14)
        assert np.max(np.abs(D @ BASE_POINT_ARRAY)) < 1e-14


def test_boost_of_base_point_scales_it(rng):
    p = FourVector.from_array(BASE_POINT_ARRAY)
    m = SL2CElement(np.diag([np.exp(0.5), np.exp(-0.5)]).astype(complex))
    moved = covering_map(m) @ p.as_array()
    assert np.allclose(moved, np.exp(1.0) * p.as_array(), atol=1e-12)
