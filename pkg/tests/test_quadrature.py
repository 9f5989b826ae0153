import numpy as np
from scipy.integrate import quad

from weylnoise.quadrature import (
    GridParams,
    SpinorSection,
    build_grid,
    dense_reference_inner_product,
    pushforward_check,
    section_inner_product,
    section_norm,
    standard_test_functions,
    standard_test_sections,
)
from weylnoise.spin import SL2CElement

SMALL = GridParams(r_min=0.05, r_max=10.0, radial_order=40, polar_order=24, azimuthal_order=24)


def _boost_z(t: float) -> SL2CElement:
    return SL2CElement(np.diag([np.exp(0.5 * t), np.exp(-0.5 * t)]).astype(complex))


def test_grid_sits_on_cone_with_positive_weights():
    grid = build_grid(SMALL, "standard")
    assert np.max(np.abs(grid.nodes[:, 0] - np.linalg.norm(grid.nodes[:, 1:], axis=1))) < 1e-13
    assert np.all(grid.weights > 0.0)
    assert len(grid.nodes) == 40 * 24 * 24


def test_density_factors_differ_by_radius():
    std = build_grid(SMALL, "standard")
    prt = std.with_density("printed")
    assert np.allclose(std.weights, prt.weights * std.radii, atol=1e-15)


def test_radial_integral_against_adaptive_oracle():
    grid = build_grid(SMALL, "standard")
    f0 = standard_test_functions()[0]
    i_grid = float(np.sum(grid.weights * f0(grid.nodes).real))
    oracle, _ = quad(
        lambda r: 0.4 * r * np.exp(-f0.sharpness * (r - f0.center) ** 2),
        SMALL.r_min,
        SMALL.r_max,
        epsabs=1e-13,
        epsrel=1e-13,
        limit=200,
    )
    assert abs(i_grid - 2.0 * np.pi * oracle) < 1e-8


def test_inner_product_against_dense_simpson():
    grid = build_grid(SMALL, "standard")
    s = standard_test_sections(1)
    a = section_inner_product(s[0], s[1], grid)
    b = dense_reference_inner_product(s[0], s[1], SMALL, n_r=801, n_u=121, n_phi=48)
    assert abs(a - b) < 1e-5


def test_pushforward_separates_densities():
    grid = build_grid(SMALL, "standard")
    h = _boost_z(1.0)
    f = standard_test_functions()[1]
    # the coarse grid and clipped radial window leave ~2e-3 of quadrature
    # error; the non-invariant density is three orders worse
    assert pushforward_check(h, f, grid, density="standard") < 1e-2
    assert pushforward_check(h, f, grid, density="printed") > 1e-1


def test_envelope_decay_certificate(rng):
    f = standard_test_functions()[3]
    for _ in range(200):
        u = rng.normal(size=3)
        u /= np.linalg.norm(u)
        r = rng.uniform(0.01, 30.0)
        p = np.array([[r, *(r * u)]])
        bound = f.decay_const * np.exp(-f.decay_rate * r)
        assert np.abs(f(p))[0] <= bound * (1 + 1e-12)


def test_inner_product_sesquilinear():
    grid = build_grid(SMALL, "standard")
    f1, f2, f3 = standard_test_functions()[:3]
    a, b = 0.3 - 1.2j, 0.7 + 0.4j
    s1 = SpinorSection(f1, 1, "s1")
    s2 = SpinorSection(f2, 1, "s2")
    s3 = SpinorSection(f3, 1, "s3")
    combo = SpinorSection(lambda p: a * f2(p) + b * f3(p), 1, "combo")
    lhs = section_inner_product(s1, combo, grid)
    rhs = a * section_inner_product(s1, s2, grid) + b * section_inner_product(s1, s3, grid)
    assert abs(lhs - rhs) < 1e-12
    assert abs(
        section_inner_product(s2, s1, grid) - np.conj(section_inner_product(s1, s2, grid))
    ) < 1e-14
    assert section_norm(s1, grid) > 0.0


def test_opposite_helicities_are_pointwise_orthogonal():
    grid = build_grid(SMALL, "standard")
    plus = standard_test_sections(1)[0]
    minus = standard_test_sections(-1)[0]
    vp = plus.values(grid.nodes[:100])
    vm = minus.values(grid.nodes[:100])
    assert np.max(np.abs(np.einsum("kc,kc->k", vp.conj(), vm))) < 1e-15
