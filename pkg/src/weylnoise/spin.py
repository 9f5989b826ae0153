"""SL(2,C), its two-to-one cover of the Lorentz group, the 4-dim spin
representation, and the stabilizer of the light-like base point.

Four-vectors are identified with Hermitian matrices via
eta(p) = p0*I + p1*s1 + p2*s2 + p3*s3, so eta((1,0,0,1)) = diag(2, 0) and the
stabilizer of (1,0,0,1) under eta -> m eta m* consists of the upper-triangular
unimodular matrices [[z, a], [0, 1/z]] with |z| = 1 (a Euclidean-group double
cover: z carries the rotation angle, a the translation part).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .minkowski import is_proper_orthochronous

__all__ = [
    "PAULI",
    "SIGMA4",
    "BASE_POINT_ARRAY",
    "SL2CElement",
    "SL2CLieElement",
    "LittleGroupElement",
    "four_to_herm",
    "herm_to_four",
    "covering_map",
    "covering_map_derivative",
    "spin_rep",
    "spin_rep_matrix",
    "spin_rep_lie",
    "sl2c_exp",
    "inv2",
    "inv_conj_transpose",
    "little_group_embed",
    "little_group_extract",
    "little_group_generators",
    "random_su2",
    "random_boost",
    "random_sl2c",
    "random_little_group",
]

_S1 = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex)
_S2 = np.array([[0.0, -1.0j], [1.0j, 0.0]], dtype=complex)
_S3 = np.array([[1.0, 0.0], [0.0, -1.0]], dtype=complex)
PAULI = (_S1, _S2, _S3)
SIGMA4 = np.stack([np.eye(2, dtype=complex), _S1, _S2, _S3])

BASE_POINT_ARRAY = np.array([1.0, 0.0, 0.0, 1.0])


@dataclass(frozen=True)
class SL2CElement:
    """Unimodular complex 2x2 matrix."""

    m: np.ndarray

    def __post_init__(self) -> None:
        m = np.asarray(self.m, dtype=complex)
        if m.shape != (2, 2):
            raise ValueError(f"SL(2,C) element must be 2x2, got {m.shape}")
        det = m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0]
        if not np.isfinite(det) or abs(det - 1.0) > 1e-9:
            raise ValueError(f"determinant must be 1, got {det}")
        object.__setattr__(self, "m", m)


@dataclass(frozen=True)
class SL2CLieElement:
    """Traceless complex 2x2 matrix."""

    x: np.ndarray

    def __post_init__(self) -> None:
        x = np.asarray(self.x, dtype=complex)
        if x.shape != (2, 2):
            raise ValueError(f"Lie element must be 2x2, got {x.shape}")
        if abs(x[0, 0] + x[1, 1]) > 1e-12 * max(1.0, float(np.abs(x).max())):
            raise ValueError("Lie element must be traceless")
        object.__setattr__(self, "x", x)


@dataclass(frozen=True)
class LittleGroupElement:
    """Pair (z, a) with |z| = 1, realized as [[z, a], [0, 1/z]]."""

    z: complex
    a: complex

    def __post_init__(self) -> None:
        if abs(abs(self.z) - 1.0) > 1e-9:
            raise ValueError(f"|z| must be 1, got |z| = {abs(self.z)}")


def four_to_herm(p) -> np.ndarray:
    """eta(p) = p0*I + p.sigma."""
    a = np.asarray(p, dtype=float).reshape(4)
    return np.array(
        [[a[0] + a[3], a[1] - 1j * a[2]], [a[1] + 1j * a[2], a[0] - a[3]]],
        dtype=complex,
    )


def herm_to_four(H: np.ndarray) -> np.ndarray:
    """Inverse of four_to_herm (imaginary residue must be roundoff only)."""
    H = np.asarray(H, dtype=complex)
    p = np.array(
        [
            0.5 * (H[0, 0] + H[1, 1]).real,
            H[1, 0].real,
            H[1, 0].imag,
            0.5 * (H[0, 0] - H[1, 1]).real,
        ]
    )
    return p


def covering_map(m: SL2CElement) -> np.ndarray:
    """Lorentz image of m: the unique L with eta(Lp) = m eta(p) m*.

    Components L_rs = Re tr(sigma_r m sigma_s m*) / 2; the output is checked to
    be proper orthochronous. Two-to-one: covering_map(m) == covering_map(-m).
    """
    a = m.m
    ad = a.conj().T
    L = np.empty((4, 4))
    for s in range(4):
        Ms = a @ SIGMA4[s] @ ad
        for r in range(4):
            val = 0.5 * np.trace(SIGMA4[r] @ Ms)
            L[r, s] = val.real
    if not is_proper_orthochronous(L, tol=1e-8):
        raise ValueError("covering map produced a non-Lorentz matrix")
    return L


def covering_map_derivative(X: SL2CLieElement) -> np.ndarray:
    """d/dt covering_map(exp(tX)) at t = 0, computed in closed form."""
    x = X.x
    xd = x.conj().T
    D = np.empty((4, 4))
    for s in range(4):
        Ms = x @ SIGMA4[s] + SIGMA4[s] @ xd
        for r in range(4):
            D[r, s] = (0.5 * np.trace(SIGMA4[r] @ Ms)).real
    return D


def inv2(m: np.ndarray) -> np.ndarray:
    """Inverse of a 2x2 matrix by adjugate."""
    m = np.asarray(m, dtype=complex)
    det = m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0]
    return np.array([[m[1, 1], -m[0, 1]], [-m[1, 0], m[0, 0]]], dtype=complex) / det


def inv_conj_transpose(m: np.ndarray) -> np.ndarray:
    """(m*)^-1 = (m^-1)*, the conjugate block of the spin representation."""
    return inv2(m).conj().T


def spin_rep_matrix(m: np.ndarray) -> np.ndarray:
    """S(m) = diag(m, (m^-1)*) without input validation (internal fast path)."""
    S = np.zeros((4, 4), dtype=complex)
    S[:2, :2] = m
    S[2:, 2:] = inv_conj_transpose(m)
    return S


def spin_rep(m: SL2CElement) -> np.ndarray:
    """Block-diagonal spin representation S(m) = diag(m, (m^-1)*)."""
    return spin_rep_matrix(m.m)


def spin_rep_lie(X: SL2CLieElement) -> np.ndarray:
    """Derivative at t = 0 of spin_rep(exp(tX)): diag(X, -X*).

    The conjugate block differentiates to -X* because
    d/dt (exp(tX)^-1)* = -X* at t = 0.
    """
    S = np.zeros((4, 4), dtype=complex)
    S[:2, :2] = X.x
    S[2:, 2:] = -X.x.conj().T
    return S


def sl2c_exp(X: SL2CLieElement, t: float = 1.0) -> SL2CElement:
    """exp(tX) for traceless X, via the 2x2 closed form.

    X^2 = -det(X) I for traceless X, so exp(X) = cosh(s) I + (sinh(s)/s) X
    with s = sqrt(-det X).
    """
    x = t * X.x
    det = x[0, 0] * x[1, 1] - x[0, 1] * x[1, 0]
    s = np.sqrt(complex(-det))
    if abs(s) < 1e-12:
        factor = 1.0 + s * s / 6.0
        return SL2CElement(np.eye(2, dtype=complex) + factor * x)
    return SL2CElement(np.cosh(s) * np.eye(2, dtype=complex) + (np.sinh(s) / s) * x)


def little_group_embed(e: LittleGroupElement) -> SL2CElement:
    """[[z, a], [0, 1/z]]; its Lorentz image fixes (1,0,0,1)."""
    return SL2CElement(
        np.array([[e.z, e.a], [0.0, 1.0 / e.z]], dtype=complex)
    )


def little_group_extract(m: SL2CElement, tol: float = 1e-8) -> LittleGroupElement:
    """Recover (z, a) from a stabilizer element; reject non-members."""
    a = m.m
    if abs(a[1, 0]) > tol:
        raise ValueError(f"not upper triangular: |m[1,0]| = {abs(a[1,0])}")
    z = a[0, 0]
    if abs(abs(z) - 1.0) > tol:
        raise ValueError(f"diagonal not unit modulus: |z| = {abs(z)}")
    z = z / abs(z)
    return LittleGroupElement(complex(z), complex(a[0, 1]))


def little_group_generators() -> tuple[SL2CLieElement, SL2CLieElement, SL2CLieElement]:
    """Rotation generator i*sigma3/2 and the two nilpotents N1, N2.

    exp(theta * rot) = embed(z = exp(i theta/2), a = 0); N1, N2 square to zero
    and commute with each other.
    """
    rot = SL2CLieElement(0.5j * _S3)
    n1 = SL2CLieElement(np.array([[0.0, 1.0], [0.0, 0.0]], dtype=complex))
    n2 = SL2CLieElement(np.array([[0.0, 1.0j], [0.0, 0.0]], dtype=complex))
    return rot, n1, n2


def _unit_vector(rng: np.random.Generator) -> np.ndarray:
    v = rng.normal(size=3)
    n = np.linalg.norm(v)
    while n < 1e-8:
        v = rng.normal(size=3)
        n = np.linalg.norm(v)
    return v / n


def _axis_sigma(axis: np.ndarray) -> np.ndarray:
    return axis[0] * _S1 + axis[1] * _S2 + axis[2] * _S3


def random_su2(rng: np.random.Generator) -> SL2CElement:
    axis = _unit_vector(rng)
    half = 0.5 * rng.uniform(0.0, 2.0 * np.pi)
    m = np.cos(half) * np.eye(2, dtype=complex) - 1j * np.sin(half) * _axis_sigma(axis)
    return SL2CElement(m)


def random_boost(rng: np.random.Generator, max_rapidity: float = 1.0) -> SL2CElement:
    axis = _unit_vector(rng)
    half = 0.5 * rng.uniform(-max_rapidity, max_rapidity)
    m = np.cosh(half) * np.eye(2, dtype=complex) + np.sinh(half) * _axis_sigma(axis)
    return SL2CElement(m)


def random_sl2c(rng: np.random.Generator, max_rapidity: float = 1.0) -> SL2CElement:
    """Random rotation times random bounded boost."""
    return SL2CElement(random_su2(rng).m @ random_boost(rng, max_rapidity).m)


def random_little_group(rng: np.random.Generator, max_shift: float = 1.0) -> LittleGroupElement:
    z = np.exp(1j * rng.uniform(0.0, 2.0 * np.pi))
    a = max_shift * (rng.uniform(-1, 1) + 1j * rng.uniform(-1, 1))
    return LittleGroupElement(complex(z), complex(a))
