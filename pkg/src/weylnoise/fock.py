"""Truncated symmetric Fock space, Weyl operators, Stone generators, the
Gaussian chaos isomorphism, weighted norms, and toy fermionization.

Basis: occupation multi-indices with total degree <= cutoff, graded
lexicographic order, dimension C(modes + cutoff, cutoff). Inner products are
antilinear in the FIRST argument everywhere (np.vdot convention); a(f) is
antilinear in f, a+(g) linear in g, [a(f), a+(g)] = <f, g> on states whose
image under a+ stays below the cutoff.

Weyl operators: W(v, U) = exp(a+(v) - a(v)) Gamma(U). Realized composition
laws (signs pinned by the dense-matrix oracle):
  W(f,I) W(g,I) = exp(-i Im<f,g>) W(f+g, I)
  W(v1,U1) W(v2,U2) = exp(-i Im<v1, U1 v2>) W(v1 + U1 v2, U1 U2)
  W(f,I) W(g,I) = exp(-2i Im<f,g>) W(g,I) W(f,I)

Stone generators use the exp(-itP) convention: stone_generator(f) is
+i d/dt W(t f)|_0, and position_generator(f) = stone_generator(-i f); with
these, (1/2)(q + ip) reconciles to annihilate() with constant kappa = 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import factorial

import numpy as np
from scipy.linalg import expm

__all__ = [
    "FockSpace",
    "FockState",
    "WeylData",
    "vacuum_state",
    "exponential_vector",
    "annihilate",
    "create",
    "second_quantize",
    "weyl_operator",
    "weyl_displacement",
    "vacuum_characteristic",
    "stone_generator",
    "position_generator",
    "truncation_defect",
    "chaos_map",
    "hermite_values",
    "gauss_hermite_rule",
    "build_momentum_hamiltonian",
    "weighted_norm",
    "creation_bound_diagnostic",
    "ToyFockSpace",
    "toy_annihilators",
    "fermionize",
]


@dataclass(frozen=True)
class FockSpace:
    """Symmetric Fock space over C^modes truncated at total occupation cutoff."""

    modes: int
    cutoff: int

    def __post_init__(self) -> None:
        if self.modes < 1 or self.cutoff < 1:
            raise ValueError("need modes >= 1 and cutoff >= 1")

    @property
    def occupations(self) -> np.ndarray:
        return _occupation_table(self.modes, self.cutoff)

    @property
    def dim(self) -> int:
        return len(self.occupations)

    def index_of(self, occ) -> int:
        return _occupation_lookup(self.modes, self.cutoff)[tuple(int(n) for n in occ)]

    def interior_indices(self) -> np.ndarray:
        """Indices of basis states with total occupation <= cutoff - 1."""
        totals = self.occupations.sum(axis=1)
        return np.nonzero(totals <= self.cutoff - 1)[0]


@lru_cache(maxsize=None)
def _occupation_table(modes: int, cutoff: int) -> np.ndarray:
    occs = []

    def extend(prefix, remaining):
        if len(prefix) == modes:
            occs.append(prefix)
            return
        for k in range(remaining + 1):
            extend(prefix + (k,), remaining - k)

    extend((), cutoff)
    occs.sort(key=lambda t: (sum(t), t))
    return np.array(occs, dtype=int)


@lru_cache(maxsize=None)
def _occupation_lookup(modes: int, cutoff: int) -> dict:
    table = _occupation_table(modes, cutoff)
    return {tuple(int(x) for x in row): i for i, row in enumerate(table)}


@dataclass(frozen=True)
class FockState:
    space: FockSpace
    coeffs: np.ndarray

    def __post_init__(self) -> None:
        c = np.asarray(self.coeffs, dtype=complex).reshape(self.space.dim)
        object.__setattr__(self, "coeffs", c)

    def norm(self) -> float:
        return float(np.linalg.norm(self.coeffs))


@dataclass(frozen=True)
class WeylData:
    """Payload (v, U) of a Weyl operator; U must be unitary on C^modes."""

    v: np.ndarray
    U: np.ndarray

    def __post_init__(self) -> None:
        v = np.asarray(self.v, dtype=complex).reshape(-1)
        U = np.asarray(self.U, dtype=complex)
        if U.shape != (len(v), len(v)):
            raise ValueError(f"U shape {U.shape} does not match dim {len(v)}")
        if np.linalg.norm(U.conj().T @ U - np.eye(len(v))) > 1e-9:
            raise ValueError("U must be unitary")
        object.__setattr__(self, "v", v)
        object.__setattr__(self, "U", U)


def vacuum_state(space: FockSpace) -> FockState:
    c = np.zeros(space.dim, dtype=complex)
    c[0] = 1.0
    return FockState(space, c)


def exponential_tail_bound(norm_sq: float, cutoff: int) -> float:
    """Upper bound on the l2 mass of exp-vector coefficients beyond the cutoff."""
    term = norm_sq ** (cutoff + 1) / factorial(cutoff + 1)
    return float(term * np.exp(norm_sq))


def exponential_vector(f: np.ndarray, space: FockSpace, tail_tol: float = 1e-10) -> FockState:
    """e(f) = sum_k f^(x)k / sqrt(k!), coefficients prod f_i^{n_i}/sqrt(n_i!).

    Rejects f whose truncated tail exceeds tail_tol, so downstream identities
    hold at their stated tolerances.
    """
    f = np.asarray(f, dtype=complex).reshape(space.modes)
    nsq = float(np.vdot(f, f).real)
    tail = exponential_tail_bound(nsq, space.cutoff)
    if tail > tail_tol:
        raise ValueError(
            f"exponential vector tail {tail:.3e} exceeds {tail_tol:.3e}; "
            f"shrink |f| or raise the cutoff"
        )
    occ = space.occupations
    coeffs = np.ones(space.dim, dtype=complex)
    for i in range(space.modes):
        n = occ[:, i]
        coeffs *= f[i] ** n / np.sqrt(_factorials(space.cutoff)[n])
    return FockState(space, coeffs)


@lru_cache(maxsize=None)
def _factorials(cutoff: int) -> np.ndarray:
    return np.array([factorial(k) for k in range(cutoff + 1)], dtype=float)


@lru_cache(maxsize=None)
def _mode_ladders(modes: int, cutoff: int) -> tuple[np.ndarray, ...]:
    """Single-mode annihilators a_i on the truncated space."""
    table = _occupation_table(modes, cutoff)
    lookup = _occupation_lookup(modes, cutoff)
    dim = len(table)
    out = []
    for i in range(modes):
        A = np.zeros((dim, dim))
        for col, occ in enumerate(table):
            if occ[i] > 0:
                lower = list(occ)
                lower[i] -= 1
                A[lookup[tuple(lower)], col] = np.sqrt(occ[i])
        out.append(A)
    return tuple(out)


def annihilate(f: np.ndarray, space: FockSpace) -> np.ndarray:
    """a(f) = sum_i conj(f_i) a_i, antilinear in f."""
    f = np.asarray(f, dtype=complex).reshape(space.modes)
    ladders = _mode_ladders(space.modes, space.cutoff)
    A = np.zeros((space.dim, space.dim), dtype=complex)
    for i in range(space.modes):
        A += f[i].conjugate() * ladders[i]
    return A


def create(g: np.ndarray, space: FockSpace) -> np.ndarray:
    """a+(g) = annihilate(g) conjugate-transposed; linear in g."""
    return annihilate(g, space).conj().T


def second_quantize(U: np.ndarray, space: FockSpace) -> np.ndarray:
    """Gamma(U): column over occupation n is prod_i a+(U e_i)^{n_i} |0> /sqrt(n!).

    Exact on the truncated space because creation out of a state of total k
    lands in total k+1 <= cutoff; Gamma(U1 U2) = Gamma(U1) Gamma(U2) and
    Gamma(U) is unitary whenever U is.
    """
    U = np.asarray(U, dtype=complex)
    if U.shape != (space.modes, space.modes):
        raise ValueError(f"expected {(space.modes, space.modes)} matrix, got {U.shape}")
    if np.linalg.norm(U.conj().T @ U - np.eye(space.modes)) > 1e-9:
        raise ValueError("second quantization input must be unitary")
    creators = [create(U[:, i], space) for i in range(space.modes)]
    facts = _factorials(space.cutoff)
    out = np.zeros((space.dim, space.dim), dtype=complex)
    vac = np.zeros(space.dim, dtype=complex)
    vac[0] = 1.0
    for col, occ in enumerate(space.occupations):
        vec = vac
        norm = 1.0
        for i, n in enumerate(occ):
            for _ in range(int(n)):
                vec = creators[i] @ vec
            norm *= facts[int(n)]
        out[:, col] = vec / np.sqrt(norm)
    return out


def weyl_displacement(v: np.ndarray, space: FockSpace) -> np.ndarray:
    """exp(a+(v) - a(v)); exactly unitary (the truncated generator stays
    anti-Hermitian)."""
    X = create(v, space) - annihilate(v, space)
    return expm(X)


def weyl_operator(data: WeylData, space: FockSpace) -> np.ndarray:
    """W(v, U) = exp(a+(v) - a(v)) Gamma(U)."""
    W = weyl_displacement(data.v, space)
    if np.linalg.norm(data.U - np.eye(space.modes)) > 0.0:
        W = W @ second_quantize(data.U, space)
    return W


def vacuum_characteristic(v: np.ndarray, space: FockSpace) -> complex:
    """<Omega, W(v, I) Omega>; exp(-|v|^2/2) up to truncation."""
    W = weyl_displacement(v, space)
    return complex(W[0, 0])


def stone_generator(f: np.ndarray, space: FockSpace, step: float = 1e-2) -> np.ndarray:
    """Generator of t -> W(t f, I) in the exp(-itP) convention.

    Richardson-extrapolated central differences: +i (d/dt) W(t f)|_0. Raises
    if the two step sizes disagree beyond the expected O(step^2) envelope,
    which flags an inappropriate step before the result is used.
    """

    def central(h: float) -> np.ndarray:
        return (weyl_displacement(h * f, space) - weyl_displacement(-h * f, space)) / (
            2.0 * h
        )

    d1 = central(step)
    d2 = central(0.5 * step)
    richardson = (4.0 * d2 - d1) / 3.0
    disagreement = np.linalg.norm(d1 - d2)
    scale = max(np.linalg.norm(richardson), 1.0)
    if disagreement > 10.0 * step * step * scale:
        raise ValueError(
            f"finite-difference step {step} unreliable: |D(h)-D(h/2)| = {disagreement:.3e}"
        )
    return 1j * richardson


def position_generator(f: np.ndarray, space: FockSpace, step: float = 1e-2) -> np.ndarray:
    """Quadrature companion q(f) = p(-i f) (the antilinear slot flips the
    naive i-substitution); with it a = (1/2)(q + i p) at kappa = 1."""
    f = np.asarray(f, dtype=complex)
    return stone_generator(-1j * f, space, step)


def truncation_defect(space: FockSpace, norm: float = 0.5) -> float:
    """Truncation quality of the Weyl calculus at this cutoff.

    Max of the vacuum characteristic error and the additive-law residual,
    both measured on the vacuum, for reference payloads of the given norm;
    decreases as the cutoff grows. Operator-norm residuals are useless here:
    states near the cutoff are mangled by any displacement, so the spectral
    norm of the additive-law defect stays O(1) at every cutoff. Low-lying
    states are where the truncated calculus converges.
    """
    f = np.zeros(space.modes, dtype=complex)
    f[0] = norm
    g = np.zeros(space.modes, dtype=complex)
    g[-1] = 0.5 * norm * (1.0 + 1.0j) / np.sqrt(2.0)
    if space.modes == 1:
        g = 0.5j * f
    char = abs(vacuum_characteristic(f, space) - np.exp(-0.5 * norm * norm))
    lhs = weyl_displacement(f, space) @ weyl_displacement(g, space)
    rhs = np.exp(-1j * np.vdot(f, g).imag) * weyl_displacement(f + g, space)
    law = np.linalg.norm(lhs[:, 0] - rhs[:, 0])
    return float(max(char, law))


def chaos_map(state: FockState):
    """Occupation basis -> products of normalized Hermite polynomials.

    |n1..nd> maps to prod_i He_{n_i}(x_i)/sqrt(n_i!), orthonormal for the
    standard Gaussian on R^modes; returns a callable on (npts, modes) arrays.
    """
    space = state.space
    coeffs = state.coeffs
    occ = space.occupations

    def evaluate(x: np.ndarray) -> np.ndarray:
        x = np.atleast_2d(np.asarray(x, dtype=float))
        if x.shape[1] != space.modes:
            raise ValueError(f"expected {space.modes} coordinates, got {x.shape[1]}")
        H = np.stack(
            [hermite_values(x[:, i], space.cutoff) for i in range(space.modes)]
        )  # (modes, cutoff+1, npts)
        facts = _factorials(space.cutoff)
        out = np.zeros(len(x), dtype=complex)
        for c, n in zip(coeffs, occ):
            if c == 0.0:
                continue
            term = np.ones(len(x))
            for i in range(space.modes):
                term = term * H[i, n[i]] / np.sqrt(facts[n[i]])
            out += c * term
        return out

    return evaluate


def hermite_values(x: np.ndarray, max_degree: int) -> np.ndarray:
    """Probabilists' Hermite polynomials He_0..He_max at the points x."""
    x = np.asarray(x, dtype=float)
    out = np.empty((max_degree + 1, len(x)))
    out[0] = 1.0
    if max_degree >= 1:
        out[1] = x
    for k in range(1, max_degree):
        out[k + 1] = x * out[k] - k * out[k - 1]
    return out


def gauss_hermite_rule(order: int, modes: int) -> tuple[np.ndarray, np.ndarray]:
    """Tensor Gauss-Hermite rule for the standard Gaussian on R^modes."""
    x, w = np.polynomial.hermite_e.hermegauss(order)
    w = w / np.sqrt(2.0 * np.pi)
    grids = np.meshgrid(*([x] * modes), indexing="ij")
    weights = np.ones_like(grids[0])
    for g in np.meshgrid(*([w] * modes), indexing="ij"):
        weights = weights * g
    nodes = np.column_stack([g.ravel() for g in grids])
    return nodes, weights.ravel()


def build_momentum_hamiltonian(momenta: np.ndarray) -> np.ndarray:
    """H = sigma . p, block diagonal over a finite sample of spatial momenta."""
    momenta = np.atleast_2d(np.asarray(momenta, dtype=float))
    if momenta.shape[1] != 3:
        raise ValueError("expected (M, 3) spatial momenta")
    M = len(momenta)
    H = np.zeros((2 * M, 2 * M), dtype=complex)
    for j, (p1, p2, p3) in enumerate(momenta):
        H[2 * j : 2 * j + 2, 2 * j : 2 * j + 2] = np.array(
            [[p3, p1 - 1j * p2], [p1 + 1j * p2, -p3]]
        )
    return H


def weighted_norm(f: np.ndarray, k: int, H: np.ndarray) -> float:
    """|| (1 + |H|)^k f || for Hermitian H; k = 0 is the plain norm."""
    if k < 0:
        raise ValueError("order k must be >= 0")
    f = np.asarray(f, dtype=complex)
    evals, evecs = np.linalg.eigh(H)
    coeffs = evecs.conj().T @ f
    return float(np.linalg.norm((1.0 + np.abs(evals)) ** k * coeffs))


def creation_bound_diagnostic(
    fs, k: int, H: np.ndarray, space: FockSpace
) -> float:
    """sup_f ||a+(f)||_op / ||(1+|H|)^k f||: finite-truncation continuity
    constant of the creation form on the weighted domain."""
    best = 0.0
    for f in fs:
        op = np.linalg.norm(create(np.asarray(f), space), 2)
        best = max(best, op / weighted_norm(f, k, H))
    return float(best)


@dataclass(frozen=True)
class ToyFockSpace:
    """Tensor product of two-level slots; slot 0 is the leftmost factor."""

    slots: int

    def __post_init__(self) -> None:
        if not (1 <= self.slots <= 12):
            raise ValueError("slots must be between 1 and 12")

    @property
    def dim(self) -> int:
        return 2**self.slots


_LOWER = np.array([[0.0, 1.0], [0.0, 0.0]])
_PARITY = np.array([[1.0, 0.0], [0.0, -1.0]])


def _slot_operator(space: ToyFockSpace, i: int, op: np.ndarray, dressing: np.ndarray | None) -> np.ndarray:
    out = np.eye(1)
    for j in range(space.slots):
        if j < i and dressing is not None:
            factor = dressing
        elif j == i:
            factor = op
        else:
            factor = np.eye(2)
        out = np.kron(out, factor)
    return out


def toy_annihilators(space: ToyFockSpace) -> list[np.ndarray]:
    """Undressed slot lowering operators Delta A_i."""
    return [_slot_operator(space, i, _LOWER, None) for i in range(space.slots)]


def fermionize(space: ToyFockSpace) -> list[np.ndarray]:
    """Delta B_i = (prod_{j<i} parity_j) Delta A_i; exact anticommutation.

    The parity dressing (-1)^Lambda over the earlier slots converts the
    commuting slot operators into a CAR family:
    {B_i, B_j+} = delta_ij, {B_i, B_j} = 0.
    """
    return [_slot_operator(space, i, _LOWER, _PARITY) for i in range(space.slots)]
