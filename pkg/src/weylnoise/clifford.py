"""Gamma matrices, chirality, and the spinor fibers over the forward cone.

Chiral basis: gamma0 = offdiag(I, I), gammak = [[0, -sk], [sk, 0]]. The sign
of the spatial gammas is pinned by requiring Gamma = i g0 g1 g2 g3 to equal
diag(1, 1, -1, -1) exactly.

slash(p) contracts the stored components directly, slash(p) = sum_r p_r g_r.
At the base point (1,0,0,1) its kernel is span{e2, e3} (one vector in each
chirality block), which is the unique choice consistent with the massive fiber
pair (v1, v2) -> (e3, e2) in the m -> 0 limit; the epsilon-weighted
contraction would select the complementary pair {e1, e4}.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.linalg import null_space

from .minkowski import FourVector, minkowski_form
from .spin import SL2CElement, covering_map, inv_conj_transpose, spin_rep_matrix

__all__ = [
    "GammaRep",
    "FiberBasis",
    "build_gamma",
    "slash",
    "gauge_fix",
    "canonical_fiber_array",
    "canonical_fiber",
    "fiber_kernel",
    "fiber_basis_massive",
    "bundle_action",
    "invariant_form",
]

EPSILON = (1.0, -1.0, -1.0, -1.0)


@dataclass(frozen=True)
class GammaRep:
    """The four gamma matrices, their squares' signs, and the chirality."""

    gamma: tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]
    epsilon: tuple[float, float, float, float]
    chirality: np.ndarray


@dataclass(frozen=True)
class FiberBasis:
    base: FourVector
    vectors: tuple[np.ndarray, ...]
    helicity_sign: int | None


def build_gamma() -> GammaRep:
    g0 = np.array(
        [[0, 0, 1, 0], [0, 0, 0, 1], [1, 0, 0, 0], [0, 1, 0, 0]], dtype=complex
    )
    g1 = np.array(
        [[0, 0, 0, -1], [0, 0, -1, 0], [0, 1, 0, 0], [1, 0, 0, 0]], dtype=complex
    )
    g2 = np.array(
        [[0, 0, 0, 1j], [0, 0, -1j, 0], [0, -1j, 0, 0], [1j, 0, 0, 0]], dtype=complex
    )
    g3 = np.array(
        [[0, 0, -1, 0], [0, 0, 0, 1], [1, 0, 0, 0], [0, -1, 0, 0]], dtype=complex
    )
    chirality = 1j * g0 @ g1 @ g2 @ g3
    return GammaRep(gamma=(g0, g1, g2, g3), epsilon=EPSILON, chirality=chirality)


_GAMMA = build_gamma()


def slash(p: FourVector) -> np.ndarray:
    """Contraction sum_r p_r gamma_r of the stored components."""
    g0, g1, g2, g3 = _GAMMA.gamma
    return p.p0 * g0 + p.p1 * g1 + p.p2 * g2 + p.p3 * g3


def gauge_fix(v: np.ndarray, tol: float = 1e-12) -> np.ndarray:
    """Normalize and rotate the phase so the first nonzero component is real > 0."""
    v = np.asarray(v, dtype=complex)
    n = np.linalg.norm(v)
    if n == 0.0:
        raise ValueError("cannot gauge-fix the zero vector")
    v = v / n
    for c in v:
        if abs(c) > tol:
            return v * (c.conjugate() / abs(c))
    raise ValueError("no component above gauge tolerance")


def _gauge_fix_rows(v: np.ndarray, tol: float = 1e-12) -> np.ndarray:
    norms = np.linalg.norm(v, axis=1)
    if np.any(norms == 0.0):
        raise ValueError("cannot gauge-fix zero rows")
    v = v / norms[:, None]
    first = (np.abs(v) > tol).argmax(axis=1)
    lead = v[np.arange(len(v)), first]
    return v * (lead.conj() / np.abs(lead))[:, None]


def canonical_fiber_array(p: np.ndarray, helicity_sign: int) -> np.ndarray:
    """Unit fiber vectors over rows of an (N,4) array of forward cone points.

    Closed form: the kernel of slash(p) splits into the chirality blocks as
    (chi_minus, 0) with chirality +1 and (0, chi_plus) with chirality -1,
    where chi_+- are the Pauli helicity spinors of the spatial direction.
    Two algebraically equivalent expressions are switched on sign(p3) to stay
    well conditioned at both poles; only the spatial components are read, the
    radius is recomputed from them.
    """
    if helicity_sign not in (1, -1):
        raise ValueError(f"helicity sign must be +-1, got {helicity_sign}")
    p = np.atleast_2d(np.asarray(p, dtype=float))
    p1, p2, p3 = p[:, 1], p[:, 2], p[:, 3]
    r = np.sqrt(p1 * p1 + p2 * p2 + p3 * p3)
    if np.any(r <= 0.0):
        raise ValueError("fiber undefined at zero spatial momentum")
    north = p3 >= 0.0
    out = np.zeros((len(p), 4), dtype=complex)
    if helicity_sign == -1:
        # chirality -1 block: p.sigma chi = +r chi
        c0 = np.where(north, r + p3, p1 - 1j * p2)
        c1 = np.where(north, p1 + 1j * p2, r - p3)
        out[:, 2] = c0
        out[:, 3] = c1
    else:
        # chirality +1 block: p.sigma chi = -r chi
        c0 = np.where(north, p1 - 1j * p2, r - p3)
        c1 = np.where(north, -(r + p3), -(p1 + 1j * p2))
        out[:, 0] = c0
        out[:, 1] = c1
    return _gauge_fix_rows(out)


def canonical_fiber(p: FourVector, helicity_sign: int) -> np.ndarray:
    return canonical_fiber_array(p.as_array(), helicity_sign)[0]


def fiber_kernel(
    p: FourVector, helicity_sign: int | None = None, tol: float = 1e-9
) -> FiberBasis:
    """Kernel of slash(p) at a forward light-like point, via SVD.

    Full kernel has dimension 2; intersected with a chirality eigenspace it is
    one-dimensional. Basis vectors are gauge-fixed (first nonzero component
    real positive), which makes the output deterministic and comparable with
    the closed-form route.
    """
    if not p.is_forward_lightlike(tol):
        raise ValueError(f"not forward light-like within {tol}: {p}")
    K = null_space(slash(p), rcond=1e-10)
    if K.shape[1] != 2:
        raise ValueError(f"expected nullity 2, got {K.shape[1]} at {p}")
    if helicity_sign is None:
        vecs = tuple(gauge_fix(K[:, j]) for j in range(K.shape[1]))
        return FiberBasis(base=p, vectors=vecs, helicity_sign=None)
    if helicity_sign not in (1, -1):
        raise ValueError(f"helicity sign must be +-1, got {helicity_sign}")
    proj = 0.5 * (np.eye(4) + helicity_sign * _GAMMA.chirality)
    C = proj @ K
    u, s, _ = np.linalg.svd(C, full_matrices=False)
    keep = s > tol
    if int(keep.sum()) != 1:
        raise ValueError(
            f"expected 1-dim helicity fiber, got {int(keep.sum())} at {p}"
        )
    return FiberBasis(
        base=p, vectors=(gauge_fix(u[:, 0]),), helicity_sign=helicity_sign
    )


def fiber_basis_massive(m: float) -> tuple[FourVector, np.ndarray, np.ndarray]:
    """Explicit massive fiber pair over p(m) = (sqrt(1+m^2), 1, 0, 0).

    v1(m) = (m/2) e1 + ((1+sqrt(1+m^2))/2) e3,
    v2(m) = (m/2) e4 + ((1+sqrt(1+m^2))/2) e2;
    componentwise limit (e3, e2) as m -> 0+.
    """
    if not (m > 0.0 and np.isfinite(m)):
        raise ValueError(f"mass must be positive and finite, got {m}")
    e = np.sqrt(1.0 + m * m)
    p = FourVector(float(e), 1.0, 0.0, 0.0)
    c = 0.5 * (1.0 + e)
    v1 = np.array([0.5 * m, 0.0, c, 0.0], dtype=complex)
    v2 = np.array([0.0, c, 0.0, 0.5 * m], dtype=complex)
    return p, v1, v2


def bundle_action(
    h: SL2CElement, p: FourVector, v: np.ndarray, tol: float = 1e-8
) -> tuple[FourVector, np.ndarray]:
    """(p, v)^h = (delta(h) p, S((h*)^-1) v).

    Composition order: (p,v)^(h1 h2) = ((p,v)^h2)^h1, i.e. a left action.
    The input must satisfy the fiber constraint slash(p) v = 0.
    """
    v = np.asarray(v, dtype=complex).reshape(4)
    resid = np.linalg.norm(slash(p) @ v)
    if resid > tol * max(1.0, np.linalg.norm(v)) * max(1.0, p.p0):
        raise ValueError(f"input not in the fiber: |slash(p) v| = {resid}")
    p_new = FourVector.from_array(covering_map(h) @ p.as_array())
    v_new = spin_rep_matrix(inv_conj_transpose(h.m)) @ v
    return p_new, v_new


def invariant_form(p: FourVector, v: np.ndarray) -> float:
    """p0^-1 <v, v>, constant along bundle orbits."""
    if not (p.p0 > 0.0):
        raise ValueError(f"requires p0 > 0, got {p.p0}")
    v = np.asarray(v, dtype=complex)
    return float(np.vdot(v, v).real / p.p0)
