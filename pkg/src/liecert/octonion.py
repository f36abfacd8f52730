"""Octonion arithmetic, its multiplication operators, and the triality frame in so(8).

The octonions are R^8 with basis (1, i, j, k, e, ei, ej, ek) where e is the
doubling unit, multiplied by the Cayley-Dickson rule over the quaternions

    (a + e b)(c + e d) = (a c - conj(d) b) + e (d a + b conj(c)).

Left and right multiplication by imaginary octonions are skew 8x8 matrices;
together with the derivation algebra g2 they produce the decomposition

    so(8) = g2 + V_L + V_R          (direct, not orthogonal)

and the three 21-dimensional subalgebras acting transitively on S^7: the
stabilizer copy so7_0 = g2 + {L_q - R_q} and the two spin copies
so7_plus = g2 + {L_q + 2 R_q}, so7_minus = g2 + {2 L_q + R_q}.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .linalg import (
    DEFAULT_TOL,
    Subspace,
    basis_matrix,
    kernel_of_map,
    orthonormalize,
)

OCT_BASIS_NAMES = ("1", "i", "j", "k", "e", "ei", "ej", "ek")


def quat_mul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Hamilton product of quaternions given as length-4 coordinate arrays."""
    w1, x1, y1, z1 = a
    w2, x2, y2, z2 = b
    return np.array(
        [
            w1 * w2 - x1 * x2 - y1 * y2 - z1 * z2,
            w1 * x2 + x1 * w2 + y1 * z2 - z1 * y2,
            w1 * y2 - x1 * z2 + y1 * w2 + z1 * x2,
            w1 * z2 + x1 * y2 - y1 * x2 + z1 * w2,
        ]
    )


def quat_conj(a: np.ndarray) -> np.ndarray:
    return np.array([a[0], -a[1], -a[2], -a[3]])


@dataclass(frozen=True)
class Octonion:
    coords: np.ndarray

    def __post_init__(self):
        object.__setattr__(
            self, "coords", np.asarray(self.coords, dtype=float).reshape(8)
        )

    @staticmethod
    def unit(index: int) -> "Octonion":
        c = np.zeros(8)
        c[index] = 1.0
        return Octonion(c)

    @staticmethod
    def from_parts(a: np.ndarray, b: np.ndarray) -> "Octonion":
        return Octonion(np.concatenate([a, b]))

    @property
    def real(self) -> float:
        return float(self.coords[0])

    @property
    def is_imaginary(self) -> bool:
        return abs(self.coords[0]) <= 1e-12 * max(1.0, float(np.max(np.abs(self.coords))))

    def norm(self) -> float:
        return float(np.linalg.norm(self.coords))

    def conjugate(self) -> "Octonion":
        c = -self.coords.copy()
        c[0] = self.coords[0]
        return Octonion(c)

    def __add__(self, other: "Octonion") -> "Octonion":
        return Octonion(self.coords + other.coords)

    def __sub__(self, other: "Octonion") -> "Octonion":
        return Octonion(self.coords - other.coords)

    def __rmul__(self, scalar: float) -> "Octonion":
        return Octonion(scalar * self.coords)

    def __mul__(self, other: "Octonion") -> "Octonion":
        return oct_mul(self, other)


def oct_mul(a: Octonion, b: Octonion) -> Octonion:
    """Cayley-Dickson product over the quaternions."""
    a1, a2 = a.coords[:4], a.coords[4:]
    b1, b2 = b.coords[:4], b.coords[4:]
    first = quat_mul(a1, b1) - quat_mul(quat_conj(b2), a2)
    second = quat_mul(b2, a1) + quat_mul(a2, quat_conj(b1))
    return Octonion(np.concatenate([first, second]))


@lru_cache(maxsize=1)
def multiplication_tensor() -> np.ndarray:
    """T[i, j] = coordinates of e_i * e_j, shape (8, 8, 8)."""
    T = np.zeros((8, 8, 8))
    for i in range(8):
        for j in range(8):
            T[i, j] = oct_mul(Octonion.unit(i), Octonion.unit(j)).coords
    return T


def _imaginary_or_raise(q: Octonion) -> None:
    if not q.is_imaginary:
        raise ValueError("multiplication operator is skew only for imaginary octonions")


def left_mult(q: Octonion) -> np.ndarray:
    """Matrix of x -> q x on R^8; skew-symmetric for imaginary q."""
    _imaginary_or_raise(q)
    T = multiplication_tensor()
    # column m is q * e_m
    return np.einsum("i,imc->cm", q.coords, T)


def right_mult(q: Octonion) -> np.ndarray:
    """Matrix of x -> x q on R^8; skew-symmetric for imaginary q."""
    _imaginary_or_raise(q)
    T = multiplication_tensor()
    return np.einsum("j,mjc->cm", q.coords, T)


def _mult_family(weights: tuple[float, float]) -> np.ndarray:
    """Basis matrices a*L_q + b*R_q for q running over the imaginary units."""
    a, b = weights
    mats = []
    for idx in range(1, 8):
        q = Octonion.unit(idx)
        mats.append(a * left_mult(q) + b * right_mult(q))
    return np.asarray(mats)


@lru_cache(maxsize=1)
def derivation_algebra() -> Subspace:
    """g2 = {A in so(8) : A(xy) = (Ax)y + x(Ay)}, computed as a numerical kernel.

    The derivation condition is imposed on all ordered basis pairs, giving a
    512 x 28 linear system over the E_rs coordinates of so(8); its kernel has
    dimension 14.
    """
    T = multiplication_tensor()
    so8 = [basis_matrix(r, s, 8) for r in range(8) for s in range(r + 1, 8)]
    rows = []
    for A in so8:
        # D(e_i e_j) - (D e_i) e_j - e_i (D e_j) over all pairs, flattened
        prod = np.einsum("cm,ijm->ijc", A, T)
        left = np.einsum("ki,kjc->ijc", A, T)
        right = np.einsum("kj,ikc->ijc", A, T)
        rows.append((prod - left - right).reshape(-1))
    domain = Subspace(8, np.asarray(so8) / np.sqrt(2.0))
    system = np.stack(rows, axis=1)
    # rows are indexed by so8 list order, matching the domain basis order
    return kernel_of_map(system, domain, DEFAULT_TOL)


@dataclass(frozen=True)
class TrialityFrame:
    """The twelve distinguished subspaces of so(8) built from octonion multiplication."""

    g2: Subspace
    v_l: Subspace
    v_r: Subspace
    so7_0: Subspace
    so7_plus: Subspace
    so7_minus: Subspace
    m0: Subspace
    s0: Subspace
    m_plus: Subspace
    s_plus: Subspace
    m_minus: Subspace
    s_minus: Subspace


@lru_cache(maxsize=1)
def triality_frame() -> TrialityFrame:
    g2 = derivation_algebra()
    v_l = orthonormalize(_mult_family((1.0, 0.0)))
    v_r = orthonormalize(_mult_family((0.0, 1.0)))
    m0 = orthonormalize(_mult_family((1.0, -1.0)))
    s0 = orthonormalize(_mult_family((1.0, 1.0)))
    m_plus = orthonormalize(_mult_family((1.0, 2.0)))
    m_minus = orthonormalize(_mult_family((2.0, 1.0)))
    so7_0 = orthonormalize(np.concatenate([g2.basis, m0.basis]))
    so7_plus = orthonormalize(np.concatenate([g2.basis, m_plus.basis]))
    so7_minus = orthonormalize(np.concatenate([g2.basis, m_minus.basis]))
    return TrialityFrame(
        g2=g2,
        v_l=v_l,
        v_r=v_r,
        so7_0=so7_0,
        so7_plus=so7_plus,
        so7_minus=so7_minus,
        m0=m0,
        s0=s0,
        m_plus=m_plus,
        s_plus=v_l,
        m_minus=m_minus,
        s_minus=v_r,
    )


def decompose_in_frame(X: np.ndarray) -> dict[str, np.ndarray]:
    """Coordinates of X in the direct (non-orthogonal) sum g2 + V_L + V_R.

    Solves the 28x28 change-of-basis system rather than projecting, since the
    three summands are not mutually Q-orthogonal.
    """
    f = triality_frame()
    blocks = np.concatenate([f.g2.flat, f.v_l.flat, f.v_r.flat], axis=0)
    coeffs, *_ = np.linalg.lstsq(blocks.T, X.reshape(-1), rcond=None)
    out = {
        "g2": np.tensordot(coeffs[:14], f.g2.basis, axes=1),
        "v_l": np.tensordot(coeffs[14:21], f.v_l.basis, axes=1),
        "v_r": np.tensordot(coeffs[21:], f.v_r.basis, axes=1),
    }
    return out
