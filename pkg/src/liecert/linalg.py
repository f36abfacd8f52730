"""Dense real matrix arithmetic and subspace operations over skew-symmetric matrices.

Every Lie algebra in this package is realized inside so(N) for some N, so an
algebra element is a plain ``numpy`` array of shape ``(N, N)`` that is
skew-symmetric, and the Ad-invariant inner product is the trace form

    Q(X, Y) = tr(X^T Y) = -tr(X Y).

Because Q coincides with the Frobenius inner product, subspaces of so(N) are
handled by flattening matrices to vectors of length N^2 and using standard
numerical linear algebra (SVD rank decisions, principal angles, stacked
kernels).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

DEFAULT_TOL = 1e-8
SKEW_TOL = 1e-12


class DimensionMismatchError(ValueError):
    """Raised when two elements live in incompatible ambient realizations."""


def _check_same_ambient(X: np.ndarray, Y: np.ndarray) -> None:
    if X.shape != Y.shape:
        raise DimensionMismatchError(
            f"ambient dimensions differ: {X.shape} vs {Y.shape}"
        )


def is_skew(X: np.ndarray, tol: float = SKEW_TOL) -> bool:
    return bool(np.max(np.abs(X + X.T)) <= tol * max(1.0, np.max(np.abs(X))))


def inner_product(X: np.ndarray, Y: np.ndarray) -> float:
    """Ad-invariant inner product Q(X, Y) = tr(X^T Y)."""
    _check_same_ambient(X, Y)
    return float(np.tensordot(X, Y))


def norm(X: np.ndarray) -> float:
    return float(np.linalg.norm(X))


def bracket(X: np.ndarray, Y: np.ndarray) -> np.ndarray:
    """Commutator [X, Y] = XY - YX."""
    _check_same_ambient(X, Y)
    return X @ Y - Y @ X


def wedge_norm(X: np.ndarray, Y: np.ndarray) -> float:
    """Area |X wedge Y| = sqrt(Q(X,X) Q(Y,Y) - Q(X,Y)^2) of the spanned parallelogram.

    The Gram determinant is clamped at zero so that round-off on (nearly)
    dependent pairs cannot produce a NaN.
    """
    _check_same_ambient(X, Y)
    g11 = inner_product(X, X)
    g22 = inner_product(Y, Y)
    g12 = inner_product(X, Y)
    return float(np.sqrt(max(g11 * g22 - g12 * g12, 0.0)))


def basis_matrix(r: int, s: int, n: int) -> np.ndarray:
    """Rank-two skew matrix E with E e_r = e_s and E e_s = -e_r."""
    E = np.zeros((n, n))
    E[s, r] = 1.0
    E[r, s] = -1.0
    return E


def rotation_between(u: np.ndarray, v: np.ndarray) -> np.ndarray:
    """Skew matrix v u^T - u v^T, the infinitesimal rotation taking u toward v."""
    return np.outer(v, u) - np.outer(u, v)


@dataclass(frozen=True)
class Subspace:
    """A linear subspace of so(N), stored as a Q-orthonormal basis.

    ``basis`` has shape (dim, N, N); an empty basis (dim 0) is legal and
    represents the zero subspace.
    """

    ambient_dim: int
    basis: np.ndarray = field(repr=False)

    def __post_init__(self):
        if self.basis.ndim != 3 or self.basis.shape[1:] != (
            self.ambient_dim,
            self.ambient_dim,
        ):
            raise ValueError(
                f"basis shape {self.basis.shape} does not match ambient {self.ambient_dim}"
            )

    @property
    def dim(self) -> int:
        return self.basis.shape[0]

    @property
    def flat(self) -> np.ndarray:
        """Basis as rows of a (dim, N^2) matrix."""
        n = self.ambient_dim
        return self.basis.reshape(self.dim, n * n)

    def element(self, coeffs: np.ndarray) -> np.ndarray:
        """Linear combination of the basis with the given coefficients."""
        return np.tensordot(np.asarray(coeffs, dtype=float), self.basis, axes=1)

    def coefficients(self, X: np.ndarray) -> np.ndarray:
        """Q-coefficients of X against the orthonormal basis."""
        return self.flat @ X.reshape(-1)

    def project(self, X: np.ndarray) -> np.ndarray:
        """Q-orthogonal projection of X onto this subspace."""
        if self.dim == 0:
            return np.zeros_like(X)
        return self.element(self.coefficients(X))

    def residual(self, X: np.ndarray) -> float:
        """Norm of the component of X orthogonal to this subspace."""
        return norm(X - self.project(X))

    def contains(self, X: np.ndarray, tol: float = 1e-9) -> bool:
        return self.residual(X) <= tol * max(1.0, norm(X))

    def contains_subspace(self, other: "Subspace", tol: float = 1e-9) -> bool:
        return all(self.contains(B, tol) for B in other.basis)


def zero_subspace(n: int) -> Subspace:
    return Subspace(n, np.zeros((0, n, n)))


def orthonormalize(
    spanning: list[np.ndarray] | np.ndarray, tol: float = DEFAULT_TOL
) -> Subspace:
    """Q-orthonormal basis of the span of the given matrices.

    The numerical rank is decided by SVD: singular values below
    ``tol * s_max`` are discarded.  All inputs numerically zero yield the
    zero subspace.
    """
    mats = np.asarray(spanning, dtype=float)
    if mats.ndim != 3 or mats.shape[0] == 0:
        raise ValueError("need a nonempty list of square matrices")
    n = mats.shape[1]
    A = mats.reshape(mats.shape[0], n * n)
    scale = np.max(np.abs(A))
    if scale == 0.0:
        return zero_subspace(n)
    # Right-singular vectors of the coefficient matrix span the row space.
    _, svals, vt = np.linalg.svd(A, full_matrices=False)
    rank = int(np.sum(svals > tol * svals[0]))
    return Subspace(n, vt[:rank].reshape(rank, n, n))


def direct_sum(*parts: Subspace, tol: float = DEFAULT_TOL) -> Subspace:
    nonzero = [p for p in parts if p.dim > 0]
    if not nonzero:
        return zero_subspace(parts[0].ambient_dim)
    stacked = np.concatenate([p.basis for p in nonzero], axis=0)
    out = orthonormalize(stacked, tol)
    total = sum(p.dim for p in nonzero)
    if out.dim != total:
        raise ValueError(f"summands overlap: expected dim {total}, got {out.dim}")
    return out


def span_union(*parts: Subspace, tol: float = DEFAULT_TOL) -> Subspace:
    """Span of the union of the given subspaces (overlap allowed)."""
    nonzero = [p for p in parts if p.dim > 0]
    if not nonzero:
        return zero_subspace(parts[0].ambient_dim)
    return orthonormalize(np.concatenate([p.basis for p in nonzero], axis=0), tol)


def project(U: Subspace, X: np.ndarray) -> np.ndarray:
    if X.shape != (U.ambient_dim, U.ambient_dim):
        raise DimensionMismatchError(
            f"element shape {X.shape} does not match ambient {U.ambient_dim}"
        )
    return U.project(X)


def orthogonal_complement(
    U: Subspace, within: Subspace, tol: float = DEFAULT_TOL
) -> Subspace:
    """Q-orthogonal complement of U inside ``within`` (U need not be contained)."""
    if within.dim == 0:
        return within
    resid = within.basis - np.array([U.project(B) for B in within.basis])
    scale = np.max(np.abs(within.flat))
    if np.max(np.abs(resid)) <= tol * scale:
        return zero_subspace(U.ambient_dim)
    return orthonormalize(resid, tol)


def intersect(U: Subspace, W: Subspace, tol: float = DEFAULT_TOL) -> Subspace:
    """Intersection of two subspaces via principal angles.

    Directions whose principal-angle cosine exceeds ``1 - tol`` count as
    common directions.  Disjoint subspaces give the zero subspace.
    """
    if U.ambient_dim != W.ambient_dim:
        raise DimensionMismatchError("subspaces live in different ambients")
    n = U.ambient_dim
    if U.dim == 0 or W.dim == 0:
        return zero_subspace(n)
    G = U.flat @ W.flat.T
    lu, svals, _ = np.linalg.svd(G)
    keep = svals > 1.0 - tol
    count = int(np.sum(keep))
    if count == 0:
        return zero_subspace(n)
    # Principal vectors on the U side represent the common directions.
    vectors = lu[:, :count].T @ U.flat
    return Subspace(n, vectors.reshape(count, n, n))


def principal_angles(U: Subspace, W: Subspace) -> np.ndarray:
    """Principal angles (radians, ascending) between two subspaces."""
    if U.dim == 0 or W.dim == 0:
        return np.zeros(0)
    G = U.flat @ W.flat.T
    svals = np.linalg.svd(G, compute_uv=False)
    return np.arccos(np.clip(svals, -1.0, 1.0))


def kernel_of_map(
    rows: np.ndarray, domain: Subspace, tol: float = DEFAULT_TOL, scale: float = 0.0
) -> Subspace:
    """Kernel of a linear map given by its matrix on domain coordinates.

    ``rows`` has shape (codim_anything, domain.dim); returns the subspace of
    the domain whose coordinate vectors are annihilated.  ``scale`` is the
    natural magnitude of the map; singular values below ``tol * scale`` count
    as zero, which keeps a map that vanishes on the whole domain from being
    read as full rank because of float residue.
    """
    d = domain.dim
    if d == 0:
        return domain
    if rows.size == 0:
        return domain
    _, svals, vt = np.linalg.svd(rows, full_matrices=True)
    ref = max(scale, svals[0] if svals.size else 0.0)
    rank = int(np.sum(svals > tol * ref)) if ref > 0 else 0
    null = vt[rank:]
    if null.shape[0] == 0:
        return zero_subspace(domain.ambient_dim)
    mats = np.tensordot(null, domain.basis, axes=1)
    return Subspace(domain.ambient_dim, mats.reshape(-1, *domain.basis.shape[1:]))


def subspace_kernel(
    operators: list, domain: Subspace, tol: float = DEFAULT_TOL
) -> Subspace:
    """Joint kernel {X in domain : op(X) = 0 for all ops}.

    Each operator maps a matrix to an arbitrary-shape array; kernels are
    intersected incrementally, which keeps the SVDs small once the running
    kernel shrinks.  Rank cuts are taken relative to the size of each
    operator on the full domain, not on the running kernel.
    """
    current = domain
    for op in operators:
        if current.dim == 0:
            return current
        # basis elements are unit Q-norm, so 1.0 is the natural floor for the
        # rank reference; a map that is zero on the whole domain then keeps
        # its full kernel instead of promoting float residue to rank
        op_scale = max(
            1.0, max(float(np.linalg.norm(op(B))) for B in domain.basis)
        )
        rows = np.stack([op(B).reshape(-1) for B in current.basis], axis=1)
        current = kernel_of_map(rows, current, tol, scale=op_scale)
    return current


def solve_commutant(
    constraints: list[np.ndarray], domain: Subspace, tol: float = DEFAULT_TOL
) -> Subspace:
    """The subspace {X in domain : [X, c] = 0 for every constraint c}."""
    ops = [lambda X, c=c: bracket(X, c) for c in constraints]
    return subspace_kernel(ops, domain, tol)


def normalizer_in(
    target: Subspace, domain: Subspace, tol: float = DEFAULT_TOL
) -> Subspace:
    """{X in domain : [X, target] is contained in target}."""
    ops = [
        lambda X, c=c: bracket(X, c) - target.project(bracket(X, c))
        for c in target.basis
    ]
    return subspace_kernel(ops, domain, tol)


def bracket_closure(
    seed: Subspace, within: Subspace | None = None, tol: float = DEFAULT_TOL
) -> Subspace:
    """Smallest bracket-closed subspace containing ``seed``.

    With ``within`` given, iterates span{U, [within, U]} instead, producing
    the ideal generated by ``seed`` inside ``within``.  Stabilizes in at most
    dim(within or ambient so(N)) rounds since the dimension strictly grows.
    """
    current = seed
    generators = within.basis if within is not None else None
    n = seed.ambient_dim
    max_rounds = within.dim if within is not None else n * (n - 1) // 2
    for _ in range(max_rounds + 1):
        gens = generators if generators is not None else current.basis
        if current.dim == 0 or len(gens) == 0:
            return current
        brackets = [bracket(A, B) for A in gens for B in current.basis]
        grown = orthonormalize(
            np.concatenate([current.basis, np.asarray(brackets)], axis=0), tol
        )
        if grown.dim == current.dim:
            return grown
        current = grown
    raise RuntimeError("bracket closure failed to stabilize")


def closure_residual(U: Subspace) -> float:
    """Largest projection residual of [b_i, b_j] back onto U, over basis pairs.

    Zero (up to round-off) exactly when U is a Lie subalgebra.
    """
    if U.dim <= 1:
        return 0.0
    worst = 0.0
    for i in range(U.dim):
        for j in range(i + 1, U.dim):
            worst = max(worst, U.residual(bracket(U.basis[i], U.basis[j])))
    return worst


def random_orthogonal(n: int, rng: np.random.Generator) -> np.ndarray:
    """Haar-ish random orthogonal matrix (QR of a Gaussian matrix)."""
    A = rng.standard_normal((n, n))
    q, r = np.linalg.qr(A)
    return q * np.sign(np.diag(r))


def conjugate_subspace(U: Subspace, g: np.ndarray) -> Subspace:
    """Subspace spanned by g B g^T over basis elements B (g orthogonal)."""
    mats = np.einsum("ij,bjk,lk->bil", g, U.basis, g)
    return Subspace(U.ambient_dim, mats)
