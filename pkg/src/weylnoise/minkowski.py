"""Minkowski pairing, plane-wave characters, and Lorentz-matrix validation.

Signature is (+, -, -, -) throughout the package.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = [
    "ETA",
    "FourVector",
    "minkowski_form",
    "minkowski_form_array",
    "character_eval",
    "is_proper_orthochronous",
    "lorentz_invert",
]

ETA = np.diag([1.0, -1.0, -1.0, -1.0])


@dataclass(frozen=True)
class FourVector:
    """Point of momentum or configuration space, natural units."""

    p0: float
    p1: float
    p2: float
    p3: float

    def __post_init__(self) -> None:
        comps = (self.p0, self.p1, self.p2, self.p3)
        if not all(np.isfinite(c) for c in comps):
            raise ValueError(f"four-vector components must be finite, got {comps}")

    @staticmethod
    def from_array(arr) -> "FourVector":
        a = np.asarray(arr, dtype=float).reshape(4)
        return FourVector(float(a[0]), float(a[1]), float(a[2]), float(a[3]))

    def as_array(self) -> np.ndarray:
        return np.array([self.p0, self.p1, self.p2, self.p3], dtype=float)

    def spatial(self) -> np.ndarray:
        return np.array([self.p1, self.p2, self.p3], dtype=float)

    def is_forward_lightlike(self, tol: float = 1e-9) -> bool:
        scale = max(1.0, self.p0 * self.p0)
        return self.p0 > 0.0 and abs(minkowski_form(self, self)) <= tol * scale


def minkowski_form(k: FourVector, g: FourVector) -> float:
    """Pairing {k,g} = k0*g0 - k1*g1 - k2*g2 - k3*g3."""
    return k.p0 * g.p0 - k.p1 * g.p1 - k.p2 * g.p2 - k.p3 * g.p3


def minkowski_form_array(x: np.ndarray, p: np.ndarray) -> np.ndarray:
    """{x, p_k} for a single 4-array x against rows p_k of an (N,4) array."""
    x = np.asarray(x, dtype=float).reshape(4)
    p = np.atleast_2d(np.asarray(p, dtype=float))
    return x[0] * p[:, 0] - p[:, 1:] @ x[1:]


def character_eval(p: FourVector, x: FourVector) -> complex:
    """Plane-wave character p-hat evaluated at x: exp(i {p, x})."""
    return complex(np.exp(1j * minkowski_form(p, x)))


def is_proper_orthochronous(L: np.ndarray, tol: float = 1e-9) -> bool:
    """Check L^T eta L = eta, det L = +1, L00 >= 1 within tol."""
    L = np.asarray(L)
    if L.shape != (4, 4) or not np.all(np.isfinite(L)):
        return False
    if np.iscomplexobj(L) and np.max(np.abs(L.imag)) > tol:
        return False
    L = L.real if np.iscomplexobj(L) else L
    if np.max(np.abs(L.T @ ETA @ L - ETA)) > tol:
        return False
    if abs(np.linalg.det(L) - 1.0) > tol:
        return False
    return L[0, 0] >= 1.0 - tol


def lorentz_invert(L: np.ndarray) -> np.ndarray:
    """Inverse of a Lorentz matrix via the metric identity L^-1 = eta L^T eta."""
    return ETA @ np.asarray(L).T @ ETA
