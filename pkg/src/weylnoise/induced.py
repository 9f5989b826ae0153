"""Induced representation on helicity sections, position PVM, Borel sections,
and the cocycle machinery over the forward cone.

(U_{h,x} phi)(p) = exp(i{x,p}) * [phi(delta(h)^-1 p)]^h. Transporting the
canonical unit fiber vector u(q) with S((h*)^-1) lands back in the fiber at p,
so the action reduces to an exact multiplier on the scalar coefficient:
u(q) -> mu(h; q, p) u(p) with |mu|^2 = p0(p)/p0(q). All of it is closed form;
nothing is resampled on a grid.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .clifford import canonical_fiber_array
from .minkowski import FourVector, lorentz_invert, minkowski_form, minkowski_form_array
from .poincare import PoincareElement, poincare_inverse, poincare_multiply
from .quadrature import OrbitGrid, SpinorSection
from .spin import (
    BASE_POINT_ARRAY,
    LittleGroupElement,
    SL2CElement,
    covering_map,
    inv_conj_transpose,
    little_group_extract,
    spin_rep_matrix,
)

__all__ = [
    "apply_induced",
    "transport_residual",
    "RegionIndicator",
    "region_pushforward",
    "position_pvm_apply",
    "imprimitivity_check",
    "borel_section_c",
    "orbit_point",
    "little_group_part",
    "CocyclePair",
    "build_cocycle_pair",
    "scalar_little_group_payload",
    "OscillatorFamily",
    "first_order_cocycle",
    "cocycle_unitary",
]

SECTION_VARIANTS = ("boost_rotation", "minimal_rotation")


def _reproject_cone(q: np.ndarray) -> np.ndarray:
    """Reset q0 := |qvec| so downstream fiber evaluation sees exact cone points."""
    q = np.array(q, dtype=float)
    q[:, 0] = np.linalg.norm(q[:, 1:], axis=1)
    return q


def apply_induced(g: PoincareElement, phi: SpinorSection) -> SpinorSection:
    """U_g phi as a new closed-form section (exact argument substitution)."""
    sign = phi.helicity_sign
    inner = phi.coefficient
    linv = lorentz_invert(covering_map(g.h))
    smat = spin_rep_matrix(inv_conj_transpose(g.h.m))
    xarr = g.x.as_array()

    def coefficient(parr: np.ndarray) -> np.ndarray:
        parr = np.atleast_2d(np.asarray(parr, dtype=float))
        q = _reproject_cone(parr @ linv.T)
        phase = np.exp(1j * minkowski_form_array(xarr, parr))
        transported = canonical_fiber_array(q, sign) @ smat.T
        up = canonical_fiber_array(parr, sign)
        mu = np.einsum("kc,kc->k", up.conj(), transported)
        return phase * mu * np.asarray(inner(q), dtype=complex)

    return SpinorSection(
        coefficient=coefficient, helicity_sign=sign, label=f"U[{phi.label}]"
    )


def transport_residual(h: SL2CElement, parr: np.ndarray, helicity_sign: int) -> float:
    """max_p || S((h*)^-1) u(delta(h)^-1 p) - mu u(p) ||: helicity preservation."""
    parr = np.atleast_2d(np.asarray(parr, dtype=float))
    linv = lorentz_invert(covering_map(h))
    smat = spin_rep_matrix(inv_conj_transpose(h.m))
    q = _reproject_cone(parr @ linv.T)
    transported = canonical_fiber_array(q, helicity_sign) @ smat.T
    up = canonical_fiber_array(parr, helicity_sign)
    mu = np.einsum("kc,kc->k", up.conj(), transported)
    resid = transported - mu[:, None] * up
    return float(np.max(np.linalg.norm(resid, axis=1)))


@dataclass(frozen=True)
class RegionIndicator:
    """Finite union of axis-aligned boxes in spatial momentum coordinates."""

    boxes: tuple[tuple[tuple[float, float, float], tuple[float, float, float]], ...]

    def __post_init__(self) -> None:
        for lo, hi in self.boxes:
            if not all(l < h for l, h in zip(lo, hi)):
                raise ValueError(f"degenerate box {lo} {hi}")

    def indicator(self, parr: np.ndarray) -> np.ndarray:
        parr = np.atleast_2d(np.asarray(parr, dtype=float))
        s = parr[:, 1:]
        out = np.zeros(len(parr), dtype=bool)
        for lo, hi in self.boxes:
            inside = np.ones(len(parr), dtype=bool)
            for i in range(3):
                inside &= (s[:, i] >= lo[i]) & (s[:, i] <= hi[i])
            out |= inside
        return out.astype(float)


@dataclass(frozen=True)
class _MappedRegion:
    """chi_{L.E}(p) = chi_E(L^-1 p), for group images with no box form."""

    base: RegionIndicator
    linv: np.ndarray

    def indicator(self, parr: np.ndarray) -> np.ndarray:
        parr = np.atleast_2d(np.asarray(parr, dtype=float))
        return self.base.indicator(_reproject_cone(parr @ self.linv.T))


def region_pushforward(L: np.ndarray, region: RegionIndicator):
    """Image of a box region under a Lorentz matrix.

    Spatial signed-permutation rotations map boxes to boxes exactly; any other
    element falls back to the pointwise indicator chi_E(L^-1 p).
    """
    L = np.asarray(L, dtype=float)
    spatial = L[1:, 1:]
    rounded = np.round(spatial)
    is_signed_perm = (
        np.max(np.abs(L[0] - np.array([1.0, 0, 0, 0]))) < 1e-12
        and np.max(np.abs(L[1:, 0])) < 1e-12
        and np.max(np.abs(spatial - rounded)) < 1e-12
        and np.array_equal(np.abs(rounded) @ np.ones(3), np.ones(3))
        and np.array_equal(np.ones(3) @ np.abs(rounded), np.ones(3))
    )
    if not is_signed_perm:
        return _MappedRegion(base=region, linv=lorentz_invert(L))
    boxes = []
    for lo, hi in region.boxes:
        a = rounded @ np.asarray(lo, dtype=float)
        b = rounded @ np.asarray(hi, dtype=float)
        boxes.append((tuple(np.minimum(a, b)), tuple(np.maximum(a, b))))
    return RegionIndicator(boxes=tuple(boxes))


def position_pvm_apply(region, phi: SpinorSection) -> SpinorSection:
    """P_E phi = chi_E * phi (multiplication in momentum space)."""
    inner = phi.coefficient

    def coefficient(parr: np.ndarray) -> np.ndarray:
        parr = np.atleast_2d(np.asarray(parr, dtype=float))
        return region.indicator(parr) * np.asarray(inner(parr), dtype=complex)

    return SpinorSection(
        coefficient=coefficient, helicity_sign=phi.helicity_sign, label=f"P[{phi.label}]"
    )


def imprimitivity_check(
    g: PoincareElement, region: RegionIndicator, phi: SpinorSection, grid: OrbitGrid
) -> float:
    """|| U_g P_E U_g^-1 phi - P_{delta(h) E} phi || on the grid."""
    lhs = apply_induced(g, position_pvm_apply(region, apply_induced(poincare_inverse(g), phi)))
    moved = region_pushforward(covering_map(g.h), region)
    rhs = position_pvm_apply(moved, phi)
    diff = lhs.values(grid.nodes) - rhs.values(grid.nodes)
    w = grid.weights / grid.radii
    return float(np.sqrt(np.einsum("k,kc,kc->", w, diff.conj(), diff).real))


def _rot_z(phi: float) -> np.ndarray:
    return np.array([[np.exp(-0.5j * phi), 0.0], [0.0, np.exp(0.5j * phi)]])


def _rot_y(theta: float) -> np.ndarray:
    c, s = np.cos(0.5 * theta), np.sin(0.5 * theta)
    return np.array([[c, -s], [s, c]], dtype=complex)


def borel_section_c(x: FourVector, variant: str = "boost_rotation") -> PoincareElement:
    """Section of the cone: c(x) carries (1,0,0,1) to x, c((1,0,0,1)) = e.

    boost_rotation: z-boost with rapidity log|xvec|, then the rotation
    Rz(phi) Ry(theta) taking the z axis to the direction of x.
    minimal_rotation: same boost, rotation Rz(phi) Ry(theta) Rz(-phi); a
    genuinely different section (the naive 'rotate first, then boost along the
    new axis' is the conjugation identity and reproduces boost_rotation).
    """
    if variant not in SECTION_VARIANTS:
        raise ValueError(f"unknown section variant {variant!r}")
    if not x.is_forward_lightlike(1e-8):
        raise ValueError(f"section defined on the forward cone only, got {x}")
    r = float(np.linalg.norm(x.spatial()))
    theta = float(np.arccos(np.clip(x.p3 / r, -1.0, 1.0)))
    phi = float(np.arctan2(x.p2, x.p1)) if np.hypot(x.p1, x.p2) > 1e-14 * r else 0.0
    rot = _rot_z(phi) @ _rot_y(theta)
    if variant == "minimal_rotation":
        rot = rot @ _rot_z(-phi)
    t = np.log(r)
    boost = np.array([[np.exp(0.5 * t), 0.0], [0.0, np.exp(-0.5 * t)]], dtype=complex)
    return PoincareElement(SL2CElement(rot @ boost), FourVector(0.0, 0.0, 0.0, 0.0))


def orbit_point(g: PoincareElement) -> FourVector:
    """beta(g): image of the base point under the momentum-space action."""
    return FourVector.from_array(covering_map(g.h) @ BASE_POINT_ARRAY)


def little_group_part(
    g: PoincareElement, variant: str = "boost_rotation"
) -> tuple[LittleGroupElement, FourVector]:
    """a(g) = c(beta(g))^-1 g, split into (stabilizer element, translation).

    The stabilizer of the base point inside the full group contains every
    translation, so a(g) carries both pieces.
    """
    c = borel_section_c(orbit_point(g), variant)
    a = poincare_multiply(poincare_inverse(c), g)
    return little_group_extract(a.h), a.x


@dataclass(frozen=True)
class CocyclePair:
    """b(g) = m(a(g)) and the strict two-variable cocycle f it generates."""

    b: Callable[[PoincareElement], np.ndarray]
    f: Callable[[PoincareElement, PoincareElement], np.ndarray]


def build_cocycle_pair(
    payload: Callable[[LittleGroupElement, FourVector], np.ndarray],
    variant: str = "boost_rotation",
) -> CocyclePair:
    """Cocycles from a stabilizer homomorphism: b(g) = m(a(g)),
    f(g, g1) = b(g g1) b(g1)^-1.

    Identities that follow and are checked downstream: b(e) = 1,
    b(gh) = b(g) m(h) for stabilizer h, and the chain rule
    f(g1 g2, g3) = f(g1, g2 g3) f(g2, g3).
    """

    def b(g: PoincareElement) -> np.ndarray:
        k, x = little_group_part(g, variant)
        return np.atleast_2d(np.asarray(payload(k, x), dtype=complex))

    def f(g: PoincareElement, g1: PoincareElement) -> np.ndarray:
        return b(poincare_multiply(g, g1)) @ np.linalg.inv(b(g1))

    return CocyclePair(b=b, f=f)


def scalar_little_group_payload(
    character_exponent: int,
) -> Callable[[LittleGroupElement, FourVector], np.ndarray]:
    """z^s times the base-point plane-wave character of the translation part."""
    base = FourVector.from_array(BASE_POINT_ARRAY)

    def payload(k: LittleGroupElement, x: FourVector) -> np.ndarray:
        phase = np.exp(1j * minkowski_form(x, base))
        return np.array([[k.z**character_exponent * phase]], dtype=complex)

    return payload


@dataclass(frozen=True)
class OscillatorFamily:
    """Data for the explicit first-order cocycle: a drift block u0 plus
    oscillator blocks (energy H_j, vector u_j)."""

    drift: np.ndarray
    energies: tuple[float, ...]
    vectors: tuple[np.ndarray, ...]

    def __post_init__(self) -> None:
        if len(self.energies) != len(self.vectors):
            raise ValueError("one energy per oscillator block")
        object.__setattr__(self, "drift", np.asarray(self.drift, dtype=complex))
        object.__setattr__(
            self, "vectors", tuple(np.asarray(v, dtype=complex) for v in self.vectors)
        )

    @property
    def dim(self) -> int:
        return len(self.drift) + sum(len(v) for v in self.vectors)


def first_order_cocycle(t: float, fam: OscillatorFamily) -> np.ndarray:
    """v(t) = t u0 (+) sum_j (exp(-i t H_j) u_j - u_j)."""
    blocks = [t * fam.drift]
    for e, u in zip(fam.energies, fam.vectors):
        blocks.append((np.exp(-1j * t * e) - 1.0) * u)
    return np.concatenate(blocks)


def cocycle_unitary(t: float, fam: OscillatorFamily) -> np.ndarray:
    """U_t = 1 (+) sum_j exp(-i t H_j), as the diagonal of the block unitary."""
    parts = [np.ones(len(fam.drift), dtype=complex)]
    for e, u in zip(fam.energies, fam.vectors):
        parts.append(np.full(len(u), np.exp(-1j * t * e)))
    return np.concatenate(parts)
