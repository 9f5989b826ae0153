import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from weylnoise.induced import (
    OscillatorFamily,
    RegionIndicator,
    SECTION_VARIANTS,
    apply_induced,
    borel_section_c,
    build_cocycle_pair,
    cocycle_unitary,
    first_order_cocycle,
    imprimitivity_check,
    little_group_part,
    orbit_point,
    position_pvm_apply,
    region_pushforward,
    scalar_little_group_payload,
)
from weylnoise.minkowski import FourVector, minkowski_form
from weylnoise.poincare import (
    PoincareElement,
    poincare_identity,
    poincare_multiply,
    random_poincare,
)
from weylnoise.quadrature import (
    GridParams,
    build_grid,
    standard_test_sections,
    value_distance,
)
from weylnoise.spin import (
    BASE_POINT_ARRAY,
    PAULI,
    SL2CElement,
    little_group_embed,
    random_little_group,
)

GRID = build_grid(
    GridParams(r_min=0.05, r_max=10.0, radial_order=40, polar_order=24, azimuthal_order=24),
    "standard",
)
BASE = FourVector.from_array(BASE_POINT_ARRAY)

param = st.floats(-3, 3, allow_nan=False, allow_subnormal=False)

FAMILY = OscillatorFamily(
    drift=np.array([0.3 + 0.1j, -0.2]),
    energies=(0.7, 1.3, 2.1),
    vectors=(
        np.array([0.4, 0.1j]),
        np.array([0.2 - 0.1j]),
        np.array([0.15, 0.05, -0.1]),
    ),
)


def _rotation_z(angle: float) -> SL2CElement:
    return SL2CElement(np.diag([np.exp(-0.5j * angle), np.exp(0.5j * angle)]))


def test_translation_acts_by_character():
    phi = standard_test_sections(1)[2]
    x = FourVector(0.7, -0.3, 0.2, 1.1)
    g = PoincareElement(SL2CElement(np.eye(2)), x)
    moved = apply_induced(g, phi)
    nodes = GRID.nodes[::29]
    phase = np.exp(1j * np.array([minkowski_form(x, FourVector.from_array(p)) for p in nodes]))
    assert np.max(np.abs(moved.coefficient(nodes) - phase * phi.coefficient(nodes))) < 1e-13


def test_representation_is_unitary_and_multiplicative(rng):
    phi = standard_test_sections(1)[1]
    psi = standard_test_sections(1)[2]
    from weylnoise.quadrature import section_inner_product

    before = section_inner_product(phi, psi, GRID)
    g = random_poincare(rng, max_rapidity=0.8, max_translation=1.0)
    after = section_inner_product(apply_induced(g, phi), apply_induced(g, psi), GRID)
    assert abs(before - after) < 1e-4
    g2 = random_poincare(rng, max_rapidity=0.8, max_translation=1.0)
    lhs = apply_induced(poincare_multiply(g, g2), phi)
    rhs = apply_induced(g, apply_induced(g2, phi))
    assert value_distance(lhs, rhs, GRID) < 1e-8


def test_borel_section_reaches_points(rng):
    for variant in SECTION_VARIANTS:
        c0 = borel_section_c(BASE, variant)
        assert np.allclose(c0.h.m, np.eye(2), atol=1e-14)
        assert np.max(np.abs(c0.x.as_array())) == 0.0
        for _ in range(15):
            u = rng.normal(size=3)
            u /= np.linalg.norm(u)
            r = rng.uniform(0.05, 8.0)
            x = FourVector(r, *(r * u))
            c = borel_section_c(x, variant)
            assert np.max(np.abs(orbit_point(c).as_array() - x.as_array())) < 1e-12 * max(1.0, r)


def test_little_group_part_frozen_cases(rng):
    x = FourVector(0.4, -0.1, 0.8, 0.3)
    k0 = random_little_group(rng)
    for variant in SECTION_VARIANTS:
        k, back = little_group_part(PoincareElement(SL2CElement(np.eye(2)), x), variant)
        assert abs(k.z - 1.0) < 1e-12 and abs(k.a) < 1e-12
        assert np.allclose(back.as_array(), x.as_array(), atol=1e-12)
        k2, back2 = little_group_part(
            PoincareElement(little_group_embed(k0), FourVector(0, 0, 0, 0)), variant
        )
        assert abs(k2.z - k0.z) < 1e-10 and abs(k2.a - k0.a) < 1e-10
        assert np.max(np.abs(back2.as_array())) < 1e-12


def test_cocycle_b_multiplies_by_payload(rng):
    payload = scalar_little_group_payload(-1)
    for variant in SECTION_VARIANTS:
        pair = build_cocycle_pair(payload, variant)
        assert np.allclose(pair.b(poincare_identity()), np.eye(1), atol=1e-14)
        g = random_poincare(rng, max_rapidity=0.8)
        k = random_little_group(rng)
        x0 = FourVector(*(0.5 * rng.normal(size=4)))
        h0 = PoincareElement(little_group_embed(k), x0)
        lhs = pair.b(poincare_multiply(g, h0))
        rhs = pair.b(g) @ payload(k, x0)
        assert np.max(np.abs(lhs - rhs)) < 1e-10
        assert abs(abs(pair.b(g)[0, 0]) - 1.0) < 1e-10


def test_scalar_payload_frozen_values():
    payload = scalar_little_group_payload(1)
    from weylnoise.spin import LittleGroupElement

    k = LittleGroupElement(np.exp(0.3j), 0.2 + 0.1j)
    t = FourVector(0.9, 0, 0, 0)
    val = payload(k, t)[0, 0]
    # the translation contributes exp(i {x, base}) = exp(i 0.9)
    assert abs(val - np.exp(0.3j) * np.exp(0.9j)) < 1e-14
    conj = scalar_little_group_payload(-1)(k, t)[0, 0]
    assert abs(conj - np.exp(-0.3j) * np.exp(0.9j)) < 1e-14


def test_region_pushforward_exact_and_fallback(rng):
    region = RegionIndicator(boxes=(((0.0, -1.0, -1.0), (1.0, 1.0, 1.0)),))
    nodes = GRID.nodes[::17]
    from weylnoise.spin import covering_map

    L_rot = covering_map(_rotation_z(0.5 * np.pi))
    moved = region_pushforward(L_rot, region)
    # z rotation by pi/2 sends (x, y) to (-y, x): the box form is exact
    assert isinstance(moved, RegionIndicator)
    want = RegionIndicator(boxes=(((-1.0, 0.0, -1.0), (1.0, 1.0, 1.0)),))
    assert np.array_equal(moved.indicator(nodes), want.indicator(nodes))
    from weylnoise.minkowski import lorentz_invert

    generic = covering_map(SL2CElement(np.diag([np.exp(0.2), np.exp(-0.2)]).astype(complex)))
    fallback = region_pushforward(generic, region)
    pulled = nodes @ lorentz_invert(generic).T
    pulled[:, 0] = np.linalg.norm(pulled[:, 1:], axis=1)
    assert np.array_equal(fallback.indicator(nodes), region.indicator(pulled))


def test_pvm_multiplies_by_indicator():
    region = RegionIndicator(boxes=(((-2.0, -2.0, -2.0), (1.0, 1.0, 1.0)),))
    phi = standard_test_sections(1)[1]
    cut = position_pvm_apply(region, phi)
    nodes = GRID.nodes[::11]
    want = region.indicator(nodes) * phi.coefficient(nodes)
    assert np.array_equal(cut.coefficient(nodes), want)
    assert cut.helicity_sign == phi.helicity_sign


def test_imprimitivity_covariance():
    region = RegionIndicator(boxes=(((-2.0, -2.0, -2.0), (1.0, 1.0, 1.0)),))
    phi = standard_test_sections(1)[1]
    shift = FourVector(0.3, -0.2, 0.5, 0.1)
    for h in (_rotation_z(0.5 * np.pi), SL2CElement(np.diag([np.exp(0.4), np.exp(-0.4)]).astype(complex))):
        g = PoincareElement(h, shift)
        assert imprimitivity_check(g, region, phi, GRID) < 1e-12


@given(param, param)
def test_first_order_cocycle_identity(s, t):
    lhs = first_order_cocycle(s + t, FAMILY)
    rhs = first_order_cocycle(s, FAMILY) + cocycle_unitary(s, FAMILY) * first_order_cocycle(
        t, FAMILY
    )
    assert np.max(np.abs(lhs - rhs)) < 1e-11


def test_cocycle_unitary_is_unimodular_diagonal():
    u = cocycle_unitary(0.37, FAMILY)
    assert u.shape == (FAMILY.dim,)
    assert np.max(np.abs(np.abs(u) - 1.0)) < 1e-14
    # drift slots never rotate
    assert np.array_equal(u[:2], np.ones(2, dtype=complex))


def test_degenerate_region_rejected():
    with pytest.raises(ValueError):
        RegionIndicator(boxes=(((0.0, 0.0, 0.0), (0.0, 1.0, 1.0)),))
