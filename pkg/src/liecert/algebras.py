"""Constructors for compact classical Lie algebras in real orthogonal realizations.

Conventions fixed once for the whole package:

* complex entries a + bi expand to 2x2 blocks [[a, -b], [b, a]], so C^n sits
  in R^{2n} with interleaved coordinates (x_0, y_0, x_1, y_1, ...);
* quaternions expand to the 4x4 matrix of left multiplication in the basis
  (1, i, j, k), so H^n sits in R^{4n};
* su(n), u(n) live in so(2n); sp(n) lives in so(4n); all inner products are
  the ambient trace form.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import octonion as oc
from .linalg import (
    Subspace,
    basis_matrix,
    bracket,
    closure_residual,
    intersect,
    norm,
    orthogonal_complement,
    orthonormalize,
    solve_commutant,
    subspace_kernel,
    zero_subspace,
)


@dataclass(frozen=True)
class AlgebraRealization:
    name: str
    ambient_dim: int
    subspace: Subspace
    meta: str = ""

    @property
    def dim(self) -> int:
        return self.subspace.dim


# ---------------------------------------------------------------------------
# complex / quaternion expansions


def realify_complex(M: np.ndarray) -> np.ndarray:
    """Real 2n x 2n form of a complex n x n matrix (interleaved coordinates)."""
    n = M.shape[0]
    out = np.zeros((2 * n, 2 * n))
    out[0::2, 0::2] = M.real
    out[1::2, 1::2] = M.real
    out[0::2, 1::2] = -M.imag
    out[1::2, 0::2] = M.imag
    return out


_QUAT_LEFT = {
    "1": np.eye(4),
    "i": np.array(
        [[0, -1, 0, 0], [1, 0, 0, 0], [0, 0, 0, -1], [0, 0, 1, 0]], dtype=float
    ),
    "j": np.array(
        [[0, 0, -1, 0], [0, 0, 0, 1], [1, 0, 0, 0], [0, -1, 0, 0]], dtype=float
    ),
    "k": np.array(
        [[0, 0, 0, -1], [0, 0, -1, 0], [0, 1, 0, 0], [1, 0, 0, 0]], dtype=float
    ),
}


def quat_left_matrix(q: np.ndarray) -> np.ndarray:
    """4x4 real matrix of left multiplication by the quaternion (w, x, y, z)."""
    return (
        q[0] * _QUAT_LEFT["1"]
        + q[1] * _QUAT_LEFT["i"]
        + q[2] * _QUAT_LEFT["j"]
        + q[3] * _QUAT_LEFT["k"]
    )


def quat_right_matrix(q: np.ndarray) -> np.ndarray:
    """4x4 real matrix of right multiplication by (w, x, y, z); commutes with all left ones."""
    w, x, y, z = q
    return np.array(
        [
            [w, -x, -y, -z],
            [x, w, z, -y],
            [y, -z, w, x],
            [z, y, -x, w],
        ],
        dtype=float,
    )


def realify_quaternion(M: np.ndarray) -> np.ndarray:
    """Real 4n x 4n form of a quaternionic n x n matrix given as shape (n, n, 4)."""
    n = M.shape[0]
    out = np.zeros((4 * n, 4 * n))
    for r in range(n):
        for s in range(n):
            out[4 * r : 4 * r + 4, 4 * s : 4 * s + 4] = quat_left_matrix(M[r, s])
    return out


def quaternion_to_complex(M: np.ndarray) -> np.ndarray:
    """Complex 2n x 2n form of a quaternionic matrix, via q = z + j w -> [[z, -conj(w)], [w, conj(z)]]."""
    n = M.shape[0]
    out = np.zeros((2 * n, 2 * n), dtype=complex)
    for r in range(n):
        for s in range(n):
            w, x, y, z = M[r, s]
            a = w + 1j * x
            b = y + 1j * z
            out[2 * r, 2 * s] = a
            out[2 * r, 2 * s + 1] = -np.conj(b)
            out[2 * r + 1, 2 * s] = b
            out[2 * r + 1, 2 * s + 1] = np.conj(a)
    return out


# ---------------------------------------------------------------------------
# spanning sets at the complex / quaternionic level


def su_complex_basis(n: int) -> list[np.ndarray]:
    """Spanning set of su(n) as complex anti-Hermitian traceless matrices."""
    if n < 1:
        raise ValueError("n must be positive")
    out = []
    for r in range(n - 1):
        D = np.zeros((n, n), dtype=complex)
        D[r, r] = 1j
        D[r + 1, r + 1] = -1j
        out.append(D)
    for r in range(n):
        for s in range(r + 1, n):
            A = np.zeros((n, n), dtype=complex)
            A[r, s] = 1.0
            A[s, r] = -1.0
            out.append(A)
            B = np.zeros((n, n), dtype=complex)
            B[r, s] = 1j
            B[s, r] = 1j
            out.append(B)
    return out


def sp_quaternion_basis(n: int) -> list[np.ndarray]:
    """Spanning set of sp(n) as quaternionic anti-Hermitian matrices, shape (n, n, 4)."""
    if n < 1:
        raise ValueError("n must be positive")
    out = []
    units = [np.array(u, dtype=float) for u in ([0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1])]
    one = np.array([1.0, 0, 0, 0])
    for r in range(n):
        for u in units:
            M = np.zeros((n, n, 4))
            M[r, r] = u
            out.append(M)
    for r in range(n):
        for s in range(r + 1, n):
            M = np.zeros((n, n, 4))
            M[r, s] = one
            M[s, r] = -one
            out.append(M)
            for u in units:
                M = np.zeros((n, n, 4))
                M[r, s] = u
                M[s, r] = u  # conj(u) = -u, anti-Hermitian needs M[s,r] = -conj(M[r,s])
                out.append(M)
    return out


# ---------------------------------------------------------------------------
# the classical families


def make_so(n: int) -> AlgebraRealization:
    if n < 1:
        raise ValueError("n must be positive")
    mats = [basis_matrix(r, s, n) for r in range(n) for s in range(r + 1, n)]
    sub = (
        orthonormalize(mats) if mats else zero_subspace(n)
    )
    return AlgebraRealization(f"so({n})", n, sub, "standard block")


def make_su(n: int) -> AlgebraRealization:
    sub_mats = [realify_complex(M) for M in su_complex_basis(n)]
    sub = orthonormalize(sub_mats) if sub_mats else zero_subspace(2 * n)
    return AlgebraRealization(f"su({n})", 2 * n, sub, "complex entries as 2x2 blocks")


def make_u(n: int) -> AlgebraRealization:
    mats = [realify_complex(M) for M in su_complex_basis(n)]
    mats.append(realify_complex(1j * np.eye(n)))
    return AlgebraRealization(
        f"u({n})", 2 * n, orthonormalize(mats), "complex entries as 2x2 blocks"
    )


def make_sp(n: int) -> AlgebraRealization:
    mats = [realify_quaternion(M) for M in sp_quaternion_basis(n)]
    return AlgebraRealization(
        f"sp({n})", 4 * n, orthonormalize(mats), "quaternion entries as 4x4 blocks"
    )


def embed_block(
    inner: AlgebraRealization, ambient_n: int, offset: int = 0
) -> AlgebraRealization:
    """Pad every basis matrix into so(ambient_n) at the given diagonal block."""
    d = inner.ambient_dim
    if offset < 0 or offset + d > ambient_n:
        raise ValueError(
            f"block [{offset}, {offset + d}) does not fit in ambient {ambient_n}"
        )
    mats = np.zeros((inner.dim, ambient_n, ambient_n))
    mats[:, offset : offset + d, offset : offset + d] = inner.subspace.basis
    return AlgebraRealization(
        inner.name,
        ambient_n,
        Subspace(ambient_n, mats),
        f"{inner.meta}; block at offset {offset} in so({ambient_n})",
    )


def embed_subspace(sub: Subspace, ambient_n: int, offset: int = 0) -> Subspace:
    d = sub.ambient_dim
    if offset < 0 or offset + d > ambient_n:
        raise ValueError("block does not fit")
    mats = np.zeros((sub.dim, ambient_n, ambient_n))
    mats[:, offset : offset + d, offset : offset + d] = sub.basis
    return Subspace(ambient_n, mats)


def embed_matrix(X: np.ndarray, ambient_n: int, offset: int = 0) -> np.ndarray:
    d = X.shape[0]
    out = np.zeros((ambient_n, ambient_n))
    out[offset : offset + d, offset : offset + d] = X
    return out


# ---------------------------------------------------------------------------
# su(4) acting on the real form of its 6-dimensional representation


def _wedge_pairs() -> list[tuple[int, int]]:
    return [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]


def _wedge_action(X: np.ndarray) -> np.ndarray:
    """Action of a complex 4x4 matrix on wedge-square coordinates (6x6 complex)."""
    pairs = _wedge_pairs()
    index = {p: a for a, p in enumerate(pairs)}
    out = np.zeros((6, 6), dtype=complex)
    for col, (c, d) in enumerate(pairs):
        # X(e_c ^ e_d) = sum_a X[a,c] e_a ^ e_d + sum_b X[b,d] e_c ^ e_b
        for a in range(4):
            for u, v, coeff in ((a, d, X[a, c]), (c, a, X[a, d])):
                if u == v or coeff == 0:
                    continue
                if u < v:
                    out[index[(u, v)], col] += coeff
                else:
                    out[index[(v, u)], col] -= coeff
    return out


def _perm_sign(perm: tuple[int, ...]) -> int:
    sign = 1
    p = list(perm)
    for a in range(len(p)):
        while p[a] != a:
            b = p[a]
            p[a], p[b] = p[b], p[a]
            sign = -sign
    return sign


@lru_cache(maxsize=1)
def _star_matrix() -> np.ndarray:
    pairs = _wedge_pairs()
    index = {p: a for a, p in enumerate(pairs)}
    S = np.zeros((6, 6))
    for col, (a, b) in enumerate(pairs):
        rest = tuple(x for x in range(4) if x not in (a, b))
        S[index[rest], col] = _perm_sign((a, b) + rest)
    return S


@lru_cache(maxsize=1)
def _su4_so6_data():
    S = _star_matrix()
    # fixed vectors of v -> S conj(v): x + i y with S x = x and S y = -y
    def eig_basis(sign: float) -> np.ndarray:
        vals, vecs = np.linalg.eigh(S)
        return vecs[:, np.isclose(vals, sign)]

    xs = eig_basis(1.0)
    ys = eig_basis(-1.0)
    frame = np.concatenate([xs.astype(complex), 1j * ys.astype(complex)], axis=1)
    # orthonormal wrt Re<u, v>; columns are the real basis of the fixed space
    gram = np.real(frame.conj().T @ frame)
    frame = frame @ np.linalg.inv(np.linalg.cholesky(gram)).T
    basis_c = su_complex_basis(4)

    def to_so6(Xc: np.ndarray) -> np.ndarray:
        rho = _wedge_action(Xc)
        image = rho @ frame
        T = np.real(frame.conj().T @ image)
        if np.max(np.abs(image - frame @ T)) > 1e-9:
            raise RuntimeError("representation does not preserve the real form")
        return T

    su4_real = make_su(4)
    images = [to_so6(Xc) for Xc in basis_c]
    real_mats = [realify_complex(Xc) for Xc in basis_c]
    coeff = np.linalg.pinv(
        np.stack([m.reshape(-1) for m in real_mats], axis=1)
    )
    return su4_real, basis_c, images, coeff, to_so6


def su4_as_so6() -> tuple[AlgebraRealization, "callable"]:
    """The isomorphism su(4) -> so(6) through the invariant real form of the wedge square.

    Returns the image realization (all of so(6)) and the linear map sending a
    realified su(4) element (8x8) to its 6x6 image.  The map is bracket
    preserving and injective.
    """
    su4_real, basis_c, images, coeff, _ = _su4_so6_data()
    image_sub = orthonormalize(images)

    def mapping(X: np.ndarray) -> np.ndarray:
        coords = coeff @ X.reshape(-1)
        return np.tensordot(coords, np.asarray(images), axes=1)

    realization = AlgebraRealization(
        "su(4)<so(6)", 6, image_sub, "wedge-square real form"
    )
    return realization, mapping


def su4_complex_to_so6(Xc: np.ndarray) -> np.ndarray:
    """Image in so(6) of a complex anti-Hermitian traceless 4x4 matrix."""
    *_, to_so6 = _su4_so6_data()
    return to_so6(Xc)


def sp2_complex_basis() -> list[np.ndarray]:
    """sp(2) inside su(4): complex images of the quaternionic anti-Hermitian basis."""
    return [quaternion_to_complex(M) for M in sp_quaternion_basis(2)]


def spin7_in_so8() -> AlgebraRealization:
    """The spin-representation copy of so(7) inside so(8) (the 'plus' triality copy)."""
    frame = oc.triality_frame()
    return AlgebraRealization(
        "spin7+<so(8)", 8, frame.so7_plus, "octonion left/right multiplications"
    )


# ---------------------------------------------------------------------------
# the so(4) frame inside the octonion realization of g2


@dataclass(frozen=True)
class G2So4Frame:
    """Distinguished frame of g2 in so(8): the quaternion stabilizer so(4) and friends.

    so4 splits into the weight-one ideal su2_1 (the simple part of the
    intersection with the stabilizer of i) and its centralizer su2_3.  The
    elements E0, E_plus, E_minus form an orthogonal frame of su2_3 satisfying

        [E0, E_plus] = 2 E_minus,  [E0, E_minus] = -2 E_plus,
        [E_plus, E_minus] = 2 E0,

    s_hat in su2_1 acts on the symmetric complement h2 with square -Id,
    e1 in h2 is killed by E0 - 3 s_hat, and [e1, e2] = lam * E_plus.
    """

    g2: Subspace
    so4: Subspace
    su2_1: Subspace
    su2_3: Subspace
    h2: Subspace
    su3: Subspace
    E0: np.ndarray
    E_plus: np.ndarray
    E_minus: np.ndarray
    s_hat: np.ndarray
    e1: np.ndarray
    e2: np.ndarray
    lam: float


def _derived_subalgebra(U: Subspace) -> Subspace:
    mats = [
        bracket(U.basis[a], U.basis[b])
        for a in range(U.dim)
        for b in range(a + 1, U.dim)
    ]
    return orthonormalize(mats)


def _ad_matrix(X: np.ndarray, U: Subspace) -> np.ndarray:
    """Matrix of ad_X restricted to the invariant subspace U, in its basis."""
    return np.stack([U.coefficients(bracket(X, B)) for B in U.basis], axis=1)


@lru_cache(maxsize=1)
def g2_so4_frame() -> G2So4Frame:
    frame = oc.triality_frame()
    g2 = frame.g2
    # stabilizer of the quaternion subalgebra span(1, i, j, k)
    so4 = subspace_kernel([lambda A: A[4:8, 0:4]], g2)
    h2 = orthogonal_complement(so4, g2)
    # stabilizer of the imaginary unit i
    su3 = subspace_kernel([lambda A: A[:, 1]], g2)
    u2 = intersect(so4, su3)
    su2_1 = _derived_subalgebra(u2)
    su2_3 = solve_commutant(list(su2_1.basis), so4)
    if not (so4.dim == 6 and h2.dim == 8 and su2_1.dim == 3 and su2_3.dim == 3):
        raise RuntimeError("unexpected so(4) frame dimensions")

    # normalize s_hat so that ad_s^2 = -Id on h2 (the weight-one action)
    s0 = su2_1.basis[0]
    M = _ad_matrix(s0, h2)
    sq = M @ M
    nu2 = -np.trace(sq) / h2.dim
    if np.max(np.abs(sq + nu2 * np.eye(h2.dim))) > 1e-8:
        raise RuntimeError("weight-one factor misidentified")
    s_hat = s0 / np.sqrt(nu2)

    # E0 scaled so that ad_E0 on su2_3 has spectrum {0, +-2i}
    u1 = su2_3.basis[0]
    sv = np.linalg.svd(_ad_matrix(u1, su2_3), compute_uv=False)
    E0 = (2.0 / sv[0]) * u1

    # e1 spans (with its partner) the kernel of ad_{E0} - 3 ad_{s_hat} on h2
    def joint(A: np.ndarray, sign: float) -> Subspace:
        return subspace_kernel(
            [lambda X: bracket(A, X) - 3.0 * sign * bracket(s_hat, X)], h2
        )

    ker = joint(E0, 1.0)
    if ker.dim == 0:
        s_hat = -s_hat
        ker = joint(E0, 1.0)
    if ker.dim != 2:
        raise RuntimeError(f"weight-(3,1) kernel has dim {ker.dim}, expected 2")
    e1 = ker.basis[0]

    # e2: h2 directions whose bracket with e1 lies in the plane orthogonal to
    # E0 and su2_1 inside so(4); pick the one with the largest bracket
    constraints = [E0 / norm(E0)] + list(su2_1.basis)

    def proj_constraints(X: np.ndarray) -> np.ndarray:
        b = bracket(e1, X)
        return np.array([np.tensordot(c, b) for c in constraints])

    cand = subspace_kernel([proj_constraints], h2)
    rows = np.stack([bracket(e1, B).reshape(-1) for B in cand.basis], axis=1)
    _, svals, vt = np.linalg.svd(rows, full_matrices=False)
    if svals[0] < 1e-9:
        raise RuntimeError("no transverse partner for e1")
    e2 = cand.element(vt[0])

    direction = bracket(e1, e2)
    E_plus = (norm(E0) / norm(direction)) * direction
    E_minus = 0.5 * bracket(E0, E_plus)
    lam = np.tensordot(direction, E_plus) / np.tensordot(E_plus, E_plus)

    rel = max(
        norm(bracket(E0, E_plus) - 2.0 * E_minus),
        norm(bracket(E0, E_minus) + 2.0 * E_plus),
        norm(bracket(E_plus, E_minus) - 2.0 * E0),
        norm(direction - lam * E_plus),
        norm(bracket(E0, e1) - 3.0 * bracket(s_hat, e1)),
    )
    if rel > 1e-9:
        raise RuntimeError(f"frame relations violated by {rel}")
    return G2So4Frame(
        g2=g2,
        so4=so4,
        su2_1=su2_1,
        su2_3=su2_3,
        h2=h2,
        su3=su3,
        E0=E0,
        E_plus=E_plus,
        E_minus=E_minus,
        s_hat=s_hat,
        e1=e1,
        e2=e2,
        lam=float(lam),
    )


def g2_sp2_frame():
    """Frame (E0, E_plus, E_minus, sp1_1, H2) for the so(4)-split of g2.

    The elements live inside the octonion realization of g2 so that brackets
    of H2 elements are computable matrices; sp1_1 is the weight-one sp(1)
    factor and H2 the symmetric complement.  The displayed quaternionic
    matrices for the weight-three factor are available from
    :func:`sp2_weight3_matrices` and satisfy the same bracket relations.
    """
    fr = g2_so4_frame()
    return fr.E0, fr.E_plus, fr.E_minus, fr.su2_1, fr.h2


def sp2_weight3_matrices() -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """The weight-three sp(1) generators as literal quaternionic 2x2 matrices, realified.

    E0 = diag(3i, i), E+ = [[0, sqrt3], [-sqrt3, 2j]], E- = [[0, sqrt3 i], [sqrt3 i, 2k]].
    """
    r3 = np.sqrt(3.0)
    E0 = np.zeros((2, 2, 4))
    E0[0, 0] = [0, 3, 0, 0]
    E0[1, 1] = [0, 1, 0, 0]
    Ep = np.zeros((2, 2, 4))
    Ep[0, 1] = [r3, 0, 0, 0]
    Ep[1, 0] = [-r3, 0, 0, 0]
    Ep[1, 1] = [0, 0, 2, 0]
    Em = np.zeros((2, 2, 4))
    Em[0, 1] = [0, r3, 0, 0]
    Em[1, 0] = [0, r3, 0, 0]
    Em[1, 1] = [0, 0, 0, 2]
    return tuple(realify_quaternion(M) for M in (E0, Ep, Em))


# ---------------------------------------------------------------------------
# su(3) inside g2 with an explicit complex frame, and the long-root torus


@dataclass(frozen=True)
class G2Su3Frame:
    """Complex frame for the stabilizer su(3) in g2.

    ``embed`` maps a complex anti-Hermitian traceless 3x3 matrix to its g2
    realization (8x8), acting on the complex 3-space spanned by
    (e, ej, j) with complex structure given by left multiplication by i.
    """

    su3: Subspace
    frame: np.ndarray  # (8, 6) real columns (v1, J v1, v2, J v2, v3, J v3)

    def embed(self, M: np.ndarray) -> np.ndarray:
        return self.frame @ realify_complex(M) @ self.frame.T


@lru_cache(maxsize=1)
def g2_su3_frame() -> G2Su3Frame:
    fr = g2_so4_frame()
    Li = oc.left_mult(oc.Octonion.unit(1))
    cols = []
    for idx in (4, 6, 2):  # e, ej, j
        v = np.zeros(8)
        v[idx] = 1.0
        cols.extend([v, Li @ v])
    frame = np.stack(cols, axis=1)
    if np.max(np.abs(frame.T @ frame - np.eye(6))) > 1e-12:
        raise RuntimeError("complex frame is not orthonormal")
    out = G2Su3Frame(su3=fr.su3, frame=frame)
    for M in su_complex_basis(3):
        if fr.su3.residual(out.embed(M)) > 1e-9:
            raise RuntimeError("su(3) frame does not match the stabilizer algebra")
    return out


# ---------------------------------------------------------------------------
# the product of g2 with an outer su(2), glued along the weight-one factor


@dataclass(frozen=True)
class G2Su2Product:
    """Ambient so(11) = so(8) + so(3) realizing the product of g2 with an su(2).

    h is the diagonal su(2) across the weight-one factor of g2 and the outer
    block, k adds the weight-three factor, and s_elem is the h-orthogonal
    mix of the two su(2) copies that acts on the symmetric complement h2 the
    way the normalized weight-one generator does.
    """

    ambient_dim: int
    g: Subspace
    k: Subspace
    h: Subspace
    E0: np.ndarray
    E_plus: np.ndarray
    E_minus: np.ndarray
    e1: np.ndarray
    e2: np.ndarray
    lam: float
    s_elem: np.ndarray


def _su2_frame(sub: Subspace) -> tuple[np.ndarray, float]:
    """Orthonormal frame (u1, u2, u3) of an su(2) with [u1, u2] = gamma u3 cyclically."""
    u1 = sub.basis[0]
    u2 = sub.basis[1] - np.tensordot(sub.basis[1], u1) * u1
    u2 /= norm(u2)
    w = bracket(u1, u2)
    gamma = norm(w)
    u3 = w / gamma
    if norm(bracket(u2, u3) - gamma * u1) > 1e-9 or norm(
        bracket(u3, u1) - gamma * u2
    ) > 1e-9:
        raise RuntimeError("frame is not an su(2) triple")
    return np.stack([u1, u2, u3]), gamma


@lru_cache(maxsize=1)
def g2_su2_product() -> G2Su2Product:
    fr = g2_so4_frame()
    N = 11

    def emb8(X: np.ndarray) -> np.ndarray:
        return embed_matrix(X, N, 0)

    u_frame, gamma1 = _su2_frame(fr.su2_1)
    so3 = make_so(3)
    w_frame_small, gamma2 = _su2_frame(so3.subspace)
    c = gamma1 / gamma2
    w_frame = np.stack([embed_matrix(c * w, N, 8) for w in w_frame_small])
    u_emb = np.stack([emb8(u) for u in u_frame])
    cq = float(np.tensordot(w_frame[0], w_frame[0]))  # Q-norm^2 of kappa(u_a)

    h = orthonormalize(u_emb + w_frame)
    su2_3 = Subspace(N, np.stack([emb8(B) for B in fr.su2_3.basis]))
    k = orthonormalize(np.concatenate([h.basis, su2_3.basis]))
    g2_emb = Subspace(N, np.stack([emb8(B) for B in fr.g2.basis]))
    g = orthonormalize(
        np.concatenate([g2_emb.basis, np.stack([embed_matrix(B, N, 8) for B in so3.subspace.basis])])
    )

    s_coords = np.array([np.tensordot(fr.s_hat, u) for u in u_frame])
    s_elem = np.tensordot(s_coords, u_emb - w_frame / cq, axes=1)
    if max(abs(np.tensordot(s_elem, b)) for b in h.basis) > 1e-9:
        raise RuntimeError("s element is not orthogonal to the diagonal")
    out = G2Su2Product(
        ambient_dim=N,
        g=g,
        k=k,
        h=h,
        E0=emb8(fr.E0),
        E_plus=emb8(fr.E_plus),
        E_minus=emb8(fr.E_minus),
        e1=emb8(fr.e1),
        e2=emb8(fr.e2),
        lam=fr.lam,
        s_elem=s_elem,
    )
    checks = [
        norm(bracket(out.E0, out.e1) - 3.0 * bracket(out.s_elem, out.e1)),
        norm(bracket(out.s_elem, out.E_minus)),
    ]
    if max(checks) > 1e-9:
        raise RuntimeError("product frame relations violated")
    return out


# ---------------------------------------------------------------------------
# name registry for CLI / config use


def realization(name: str) -> AlgebraRealization:
    """Look up a realization by name: so(n), su(n), sp(n), u(n), g2<so(8), spin7{+,-,0}<so(8), su(4)<so(6)."""
    import re

    m = re.fullmatch(r"(so|su|sp|u)\((\d+)\)", name)
    if m:
        kind, n = m.group(1), int(m.group(2))
        return {"so": make_so, "su": make_su, "sp": make_sp, "u": make_u}[kind](n)
    frame = oc.triality_frame()
    named = {
        "g2<so(8)": AlgebraRealization("g2<so(8)", 8, frame.g2, "octonion derivations"),
        "spin7+<so(8)": spin7_in_so8(),
        "spin7-<so(8)": AlgebraRealization(
            "spin7-<so(8)", 8, frame.so7_minus, "octonion multiplications"
        ),
        "spin7_0<so(8)": AlgebraRealization(
            "spin7_0<so(8)", 8, frame.so7_0, "stabilizer of the octonion unit"
        ),
    }
    if name in named:
        return named[name]
    if name == "su(4)<so(6)":
        return su4_as_so6()[0]
    raise KeyError(f"unknown realization name: {name}")


def validate_realization(alg: AlgebraRealization, tol: float = 1e-9) -> None:
    """Check bracket closure and the classical dimension formula when the name is classical."""
    import re

    if closure_residual(alg.subspace) > tol:
        raise ValueError(f"{alg.name}: basis is not bracket closed")
    m = re.fullmatch(r"(so|su|sp|u)\((\d+)\)", alg.name)
    if m:
        kind, n = m.group(1), int(m.group(2))
        expected = {
            "so": n * (n - 1) // 2,
            "su": n * n - 1,
            "u": n * n,
            "sp": n * (2 * n + 1),
        }[kind]
        if alg.dim != expected:
            raise ValueError(f"{alg.name}: dim {alg.dim} != {expected}")
