import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from weylnoise.clifford import (
    EPSILON,
    bundle_action,
    build_gamma,
    canonical_fiber,
    canonical_fiber_array,
    fiber_basis_massive,
    fiber_kernel,
    invariant_form,
    slash,
)
from weylnoise.minkowski import FourVector, minkowski_form
from weylnoise.spin import (
    BASE_POINT_ARRAY,
    covering_map,
    inv2,
    random_sl2c,
    spin_rep_matrix,
)

coord = st.floats(-4, 4, allow_nan=False, allow_subnormal=False)
fourvec = st.builds(FourVector, coord, coord, coord, coord)

BASE = FourVector.from_array(BASE_POINT_ARRAY)


def _cone_point(rng, r_lo=0.2, r_hi=6.0) -> FourVector:
    u = rng.normal(size=3)
    u /= np.linalg.norm(u)
    r = rng.uniform(r_lo, r_hi)
    return FourVector(r, *(r * u))


def test_gamma_algebra_exact():
    gam = build_gamma()
    assert gam.epsilon == EPSILON == (1, -1, -1, -1)
    for r in range(4):
        for s in range(4):
            want = 2.0 * gam.epsilon[r] * (r == s) * np.eye(4)
            anti = gam.gamma[r] @ gam.gamma[s] + gam.gamma[s] @ gam.gamma[r]
            assert np.array_equal(anti, want)


def test_chirality_frozen():
    gam = build_gamma()
    assert np.array_equal(gam.chirality, np.diag([1.0, 1.0, -1.0, -1.0]))
    prod = 1j * gam.gamma[0] @ gam.gamma[1] @ gam.gamma[2] @ gam.gamma[3]
    assert np.allclose(prod, gam.chirality, atol=1e-15)


@given(fourvec)
def test_slash_square_is_pairing(p):
    sq = slash(p) @ slash(p)
    assert np.max(np.abs(sq - minkowski_form(p, p) * np.eye(4))) < 1e-9


def test_slash_reality_condition(rng):
    gam = build_gamma()
    p = FourVector(*rng.normal(size=4))
    sl = slash(p)
    assert np.allclose(gam.gamma[0] @ sl.conj().T @ gam.gamma[0], sl, atol=1e-14)


def test_intertwining(rng):
    gam = build_gamma()
    for _ in range(10):
        m = random_sl2c(rng)
        s = spin_rep_matrix(m.m)
        sinv = spin_rep_matrix(inv2(m.m))
        L = covering_map(m)
        for r in range(4):
            rhs = sum(L[r, t] * gam.gamma[t] for t in range(4))
            assert np.max(np.abs(sinv @ gam.gamma[r] @ s - rhs)) < 1e-10


def test_canonical_fibers_at_base_point():
    e1 = np.zeros(4, dtype=complex)
    e1[1] = 1.0
    e2 = np.zeros(4, dtype=complex)
    e2[2] = 1.0
    assert np.allclose(canonical_fiber(BASE, 1), e1, atol=1e-15)
    assert np.allclose(canonical_fiber(BASE, -1), e2, atol=1e-15)


def test_canonical_fibers_on_cone(rng):
    gam = build_gamma()
    points = [
        BASE,
        FourVector(1, 0, 0, -1),
        FourVector(2, 0, 2, 0),
        FourVector(1, 1, 0, 0),
    ] + [_cone_point(rng) for _ in range(20)]
    for p in points:
        for sign in (1, -1):
            v = canonical_fiber(p, sign)
            assert np.max(np.abs(slash(p) @ v)) < 1e-12 * max(1.0, p.p0)
            assert abs(np.linalg.norm(v) - 1.0) < 1e-13
            # chirality eigenvalue tracks the helicity label
            assert np.max(np.abs(gam.chirality @ v - sign * v)) < 1e-14
            lead = v[np.flatnonzero(np.abs(v) > 1e-12)[0]]
            assert abs(lead.imag) < 1e-13 and lead.real > 0.0


def test_fiber_array_agrees_with_scalar(rng):
    batch = np.stack([_cone_point(rng).as_array() for _ in range(12)])
    for sign in (1, -1):
        arr = canonical_fiber_array(batch, sign)
        for row, p in zip(arr, batch):
            v = canonical_fiber(FourVector.from_array(p), sign)
            assert np.max(np.abs(row - v)) < 1e-13


def test_kernel_dimensions(rng):
    for p in [BASE, FourVector(1, 1, 0, 0)] + [_cone_point(rng) for _ in range(10)]:
        assert len(fiber_kernel(p).vectors) == 2
        assert len(fiber_kernel(p, 1).vectors) == 1
        assert len(fiber_kernel(p, -1).vectors) == 1
    # off the cone the kernel is empty and the constructor refuses
    with pytest.raises(ValueError):
        fiber_kernel(FourVector(1.0, 0.0, 0.0, 0.5))


def test_massive_fiber_frozen_at_unit_mass():
    p, v1, v2 = fiber_basis_massive(1.0)
    root = np.sqrt(2.0)
    assert np.allclose(p.as_array(), [root, 1.0, 0.0, 0.0], atol=1e-15)
    assert np.allclose(v1, [0.5, 0.0, 0.5 * (1.0 + root), 0.0], atol=1e-15)
    assert np.allclose(v2, [0.0, 0.5 * (1.0 + root), 0.0, 0.5], atol=1e-15)
    assert abs(minkowski_form(p, p) - 1.0) < 1e-14


def test_massive_limit_rate():
    e2 = np.zeros(4)
    e2[1] = 1.0
    e3 = np.zeros(4)
    e3[2] = 1.0
    last = None
    for m in (1.0, 0.1, 0.01, 0.001):
        _, v1, v2 = fiber_basis_massive(m)
        gap = max(np.linalg.norm(v1 - e3), np.linalg.norm(v2 - e2))
        assert gap <= 0.75 * m
        if last is not None:
            assert gap < last
        last = gap


def test_bundle_action_transport(rng):
    for _ in range(10):
        h = random_sl2c(rng)
        p = _cone_point(rng)
        v = canonical_fiber(p, 1)
        q, w = bundle_action(h, p, v)
        assert q.is_forward_lightlike(1e-8)
        assert np.max(np.abs(slash(q) @ w)) < 1e-10 * max(1.0, q.p0)
        assert abs(invariant_form(p, v) - invariant_form(q, w)) < 1e-12


def test_bundle_action_rejects_nonfiber_vector():
    bad = np.array([1.0, 0.0, 0.0, 0.0], dtype=complex)
    h = random_sl2c(np.random.default_rng(7))
    with pytest.raises(ValueError):
        bundle_action(h, BASE, bad)


def test_invariant_form_frozen():
    assert abs(invariant_form(BASE, canonical_fiber(BASE, -1)) - 1.0) < 1e-15
    p = FourVector(4, 0, 0, 4)
    assert abs(invariant_form(p, 2.0 * canonical_fiber(p, 1)) - 1.0) < 1e-14
