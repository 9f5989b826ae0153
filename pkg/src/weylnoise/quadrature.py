"""Forward-cone quadrature and closed-form spinor sections.

The grid is a product rule in spherical momentum coordinates: Gauss-Legendre
in the radius over [r_min, r_max], Gauss-Legendre in cos(theta), uniform
(trapezoid-exact) in phi. The infrared point p = 0 is excluded by r_min > 0;
the measure density is singular there, and all shipped test functions carry
envelopes whose mass below r_min and above r_max is < 1e-12.

Two measure densities are available on the same nodes:
  standard: d beta = dp1 dp2 dp3 / (2 p0)          (boost invariant)
  printed:  d beta = dp1 dp2 dp3 / (2 |pvec|^2)    (not invariant)
The pushforward check selects which one actually transforms correctly.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

import numpy as np
from scipy.integrate import simpson

from .clifford import canonical_fiber_array
from .minkowski import lorentz_invert
from .spin import SL2CElement, covering_map

__all__ = [
    "GridParams",
    "OrbitGrid",
    "build_grid",
    "SectionBasisFunction",
    "SpinorSection",
    "section_inner_product",
    "section_norm",
    "value_distance",
    "pushforward_check",
    "standard_test_functions",
    "standard_test_sections",
    "dense_reference_inner_product",
]

DENSITIES = ("standard", "printed")


@dataclass(frozen=True)
class GridParams:
    r_min: float = 0.005
    r_max: float = 16.0
    radial_order: int = 72
    polar_order: int = 40
    azimuthal_order: int = 40

    def __post_init__(self) -> None:
        if not (0.0 < self.r_min < self.r_max and np.isfinite(self.r_max)):
            raise ValueError(f"need 0 < r_min < r_max, got [{self.r_min}, {self.r_max}]")
        if min(self.radial_order, self.polar_order, self.azimuthal_order) < 2:
            raise ValueError("quadrature orders must be >= 2")


@dataclass(frozen=True)
class OrbitGrid:
    """Nodes on the forward cone plus weights for the selected density."""

    params: GridParams
    density: str
    nodes: np.ndarray        # (N, 4), p0 = |pvec| exactly by construction
    weights: np.ndarray      # (N,), density folded in
    base_weights: np.ndarray # (N,), product rule weights without the density

    def with_density(self, density: str) -> "OrbitGrid":
        if density == self.density:
            return self
        return OrbitGrid(
            params=self.params,
            density=density,
            nodes=self.nodes,
            weights=self.base_weights * _density_factor(self.nodes, density),
            base_weights=self.base_weights,
        )

    @property
    def radii(self) -> np.ndarray:
        return self.nodes[:, 0]


def _density_factor(nodes: np.ndarray, density: str) -> np.ndarray:
    r = nodes[:, 0]
    if density == "standard":
        return 0.5 * r      # r^2 dr dOmega / (2 r)
    if density == "printed":
        return np.full_like(r, 0.5)  # r^2 dr dOmega / (2 r^2)
    raise ValueError(f"unknown density {density!r}; expected one of {DENSITIES}")


def build_grid(params: GridParams, density: str = "standard") -> OrbitGrid:
    """Product quadrature on the truncated forward cone."""
    if density not in DENSITIES:
        raise ValueError(f"unknown density {density!r}; expected one of {DENSITIES}")
    xr, wr = np.polynomial.legendre.leggauss(params.radial_order)
    r = 0.5 * (params.r_max - params.r_min) * xr + 0.5 * (params.r_max + params.r_min)
    wr = 0.5 * (params.r_max - params.r_min) * wr
    u, wu = np.polynomial.legendre.leggauss(params.polar_order)
    nphi = params.azimuthal_order
    phi = 2.0 * np.pi * np.arange(nphi) / nphi
    wphi = 2.0 * np.pi / nphi

    R, U, PHI = np.meshgrid(r, u, phi, indexing="ij")
    WR, WU, _ = np.meshgrid(wr, wu, np.ones(nphi), indexing="ij")
    R, U, PHI = R.ravel(), U.ravel(), PHI.ravel()
    s = np.sqrt(1.0 - U * U)
    nodes = np.column_stack([R, R * s * np.cos(PHI), R * s * np.sin(PHI), R * U])
    base = (WR * WU).ravel() * wphi
    return OrbitGrid(
        params=params,
        density=density,
        nodes=nodes,
        weights=base * _density_factor(nodes, density),
        base_weights=base,
    )


@dataclass(frozen=True)
class SectionBasisFunction:
    """Polynomial in spatial momentum times a radial Gaussian envelope.

    f(p) = sum_terms c * p1^a p2^b p3^c  *  exp(-sharpness (|pvec| - center)^2)

    Closed form, entire in the momentum components, rapid decay
    |f(p)| <= decay_const * exp(-decay_rate |pvec|) with a numerically
    certified constant.
    """

    terms: tuple[tuple[complex, tuple[int, int, int]], ...]
    center: float = 2.2
    sharpness: float = 2.0
    decay_rate: float = 1.0
    decay_const: float = field(init=False, default=0.0)

    def __post_init__(self) -> None:
        if self.sharpness <= 0.0:
            raise ValueError("envelope sharpness must be positive")
        # certify |f| <= C exp(-decay_rate r): bound the polynomial by its
        # coefficient-norm radial majorant and maximize on a dense sample
        rs = np.linspace(0.0, self.center + 40.0 / self.sharpness, 4001)
        major = np.zeros_like(rs)
        for c, powers in self.terms:
            major += abs(c) * rs ** sum(powers)
        envelope = np.exp(-self.sharpness * (rs - self.center) ** 2)
        bound = float(np.max(major * envelope * np.exp(self.decay_rate * rs)))
        object.__setattr__(self, "decay_const", 1.0000001 * bound)

    def __call__(self, p: np.ndarray) -> np.ndarray:
        p = np.atleast_2d(np.asarray(p, dtype=float))
        p1, p2, p3 = p[:, 1], p[:, 2], p[:, 3]
        r = np.sqrt(p1 * p1 + p2 * p2 + p3 * p3)
        out = np.zeros(len(p), dtype=complex)
        for c, (a, b, d) in self.terms:
            out += c * p1**a * p2**b * p3**d
        return out * np.exp(-self.sharpness * (r - self.center) ** 2)


@dataclass(frozen=True)
class SpinorSection:
    """Helicity section phi(p) = coefficient(p) * u(p) over the cone.

    coefficient is any closed-form callable on (N,4) node arrays; u(p) is the
    canonical gauge-fixed unit fiber vector, so group actions on sections are
    exact argument substitutions rather than grid resamplings.
    """

    coefficient: Callable[[np.ndarray], np.ndarray]
    helicity_sign: int
    label: str = ""

    def values(self, p: np.ndarray) -> np.ndarray:
        p = np.atleast_2d(np.asarray(p, dtype=float))
        c = np.asarray(self.coefficient(p), dtype=complex)
        return c[:, None] * canonical_fiber_array(p, self.helicity_sign)


def section_inner_product(f: SpinorSection, g: SpinorSection, grid: OrbitGrid) -> complex:
    """<f, g> = int p0^-1 <f(p), g(p)> d beta(p), antilinear in f."""
    vf = f.values(grid.nodes)
    vg = g.values(grid.nodes)
    w = grid.weights / grid.radii
    return complex(np.einsum("k,kc,kc->", w, vf.conj(), vg))


def section_norm(f: SpinorSection, grid: OrbitGrid) -> float:
    return float(np.sqrt(max(section_inner_product(f, f, grid).real, 0.0)))


def value_distance(f: SpinorSection, g: SpinorSection, grid: OrbitGrid) -> float:
    """Norm of f - g computed from pointwise values (works across sections)."""
    diff = f.values(grid.nodes) - g.values(grid.nodes)
    w = grid.weights / grid.radii
    return float(np.sqrt(np.einsum("k,kc,kc->", w, diff.conj(), diff).real))


def pushforward_check(
    h: SL2CElement,
    f: Callable[[np.ndarray], np.ndarray],
    grid: OrbitGrid,
    density: str | None = None,
) -> float:
    """| int f(delta(h)^-1 p) d beta(p) - int f(p) d beta(p) | on the grid.

    Vanishes (up to domain truncation) iff the density is invariant under the
    Lorentz image of h.
    """
    g = grid if density is None else grid.with_density(density)
    linv = lorentz_invert(covering_map(h))
    q = g.nodes @ linv.T
    i_moved = np.sum(g.weights * f(q))
    i_fixed = np.sum(g.weights * f(g.nodes))
    return float(abs(i_moved - i_fixed))


def standard_test_functions() -> tuple[SectionBasisFunction, ...]:
    """Deterministic envelope functions used across the quadrature checks."""
    return (
        SectionBasisFunction(terms=((0.4 + 0.0j, (0, 0, 0)),)),
        SectionBasisFunction(terms=((0.25 + 0.0j, (0, 0, 1)),)),
        SectionBasisFunction(terms=((0.2 + 0.0j, (1, 0, 0)), (0.0 + 0.2j, (0, 1, 0)))),
        SectionBasisFunction(
            terms=((0.1 + 0.0j, (1, 1, 0)), (0.15 - 0.05j, (0, 0, 2)), (0.3 + 0.0j, (0, 0, 0)))
        ),
    )


def standard_test_sections(helicity_sign: int) -> tuple[SpinorSection, ...]:
    return tuple(
        SpinorSection(coefficient=fn, helicity_sign=helicity_sign, label=f"basis{i}")
        for i, fn in enumerate(standard_test_functions())
    )


def dense_reference_inner_product(
    f: SpinorSection,
    g: SpinorSection,
    params: GridParams,
    n_r: int = 1501,
    n_u: int = 161,
    n_phi: int = 64,
) -> complex:
    """Composite-Simpson reference for section_inner_product.

    Independent method: uniform Simpson in r and cos(theta), uniform periodic
    rule in phi, and the analytic reduction <phi,psi>/p0 d beta ->
    (1/2) conj(c_f) c_g dr du dphi for unit fiber vectors. Used as an oracle
    against the Gauss-Legendre route.
    """
    if f.helicity_sign != g.helicity_sign:
        return 0.0 + 0.0j
    r = np.linspace(params.r_min, params.r_max, n_r)
    u = np.linspace(-1.0, 1.0, n_u)
    phi = 2.0 * np.pi * np.arange(n_phi) / n_phi
    acc = np.zeros((n_r, n_u), dtype=complex)
    R, U = np.meshgrid(r, u, indexing="ij")
    S = np.sqrt(1.0 - U * U)
    for ph in phi:
        nodes = np.column_stack(
            [
                R.ravel(),
                (R * S).ravel() * np.cos(ph),
                (R * S).ravel() * np.sin(ph),
                (R * U).ravel(),
            ]
        )
        cf = np.asarray(f.coefficient(nodes), dtype=complex)
        cg = np.asarray(g.coefficient(nodes), dtype=complex)
        acc += (cf.conj() * cg).reshape(n_r, n_u)
    acc *= (2.0 * np.pi / n_phi) * 0.5
    inner_u = simpson(acc, x=u, axis=1)
    return complex(simpson(inner_u, x=r))
