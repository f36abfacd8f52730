"""Triples h < k < g of compact matrix Lie algebras and their derived decompositions.

Given a triple, ``decompose`` produces every subspace the condition checks
need: the sphere tangent space m, the horizontal space s, the ideal k0
generated by m, the ineffective part h', the enlarged stabilizer h1 with its
complement m1, the algebra l generated by m1, its centralizer and normalizer,
and the Ad_l-isotypic components of the piece of g transverse to the
normalizer.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .linalg import (
    DEFAULT_TOL,
    Subspace,
    bracket,
    bracket_closure,
    closure_residual,
    conjugate_subspace,
    direct_sum,
    intersect,
    norm,
    normalizer_in,
    orthogonal_complement,
    solve_commutant,
    subspace_kernel,
    zero_subspace,
)


class TripleValidationError(ValueError):
    pass


@dataclass(frozen=True)
class Triple:
    name: str
    ambient_dim: int
    g: Subspace
    k: Subspace
    h: Subspace

    def validate(self, tol: float = 1e-9) -> None:
        for label, sub in (("g", self.g), ("k", self.k), ("h", self.h)):
            if sub.ambient_dim != self.ambient_dim:
                raise TripleValidationError(f"{label} has wrong ambient dimension")
            res = closure_residual(sub)
            if res > tol:
                raise TripleValidationError(
                    f"{label} is not bracket closed (residual {res:.2e})"
                )
        if not self.k.contains_subspace(self.h, tol):
            raise TripleValidationError("h is not contained in k")
        if not self.g.contains_subspace(self.k, tol):
            raise TripleValidationError("k is not contained in g")


def conjugate_triple(t: Triple, q: np.ndarray) -> Triple:
    return Triple(
        name=t.name + "^conj",
        ambient_dim=t.ambient_dim,
        g=conjugate_subspace(t.g, q),
        k=conjugate_subspace(t.k, q),
        h=conjugate_subspace(t.h, q),
    )


@dataclass
class Component:
    """An Ad_l-invariant isotypic block of the part of g transverse to the normalizer."""

    space: Subspace
    irreducible_dims: list[int]
    phi: str | None = None  # "phi1" | "phi2" | "inconclusive"
    evidence: dict = field(default_factory=dict)

    @property
    def dim(self) -> int:
        return self.space.dim


@dataclass
class Decomposition:
    triple: Triple
    m: Subspace
    s: Subspace
    p: Subspace
    k0: Subspace
    h0: Subspace
    hprime: Subspace
    h1: Subspace
    m1: Subspace
    l: Subspace
    z_l: Subspace
    n_l: Subspace
    s_in_nl: Subspace
    components: list[Component]
    used_sphere_override: bool = False

    @property
    def s1(self) -> Subspace:
        parts = [c.space for c in self.components if c.phi == "phi1"]
        if not parts:
            return zero_subspace(self.triple.ambient_dim)
        return direct_sum(*parts)

    @property
    def s2(self) -> Subspace:
        parts = [c.space for c in self.components if c.phi == "phi2"]
        if not parts:
            return zero_subspace(self.triple.ambient_dim)
        return direct_sum(*parts)

    def dims(self) -> dict[str, int]:
        return {
            "g": self.triple.g.dim,
            "k": self.triple.k.dim,
            "h": self.triple.h.dim,
            "m": self.m.dim,
            "s": self.s.dim,
            "k0": self.k0.dim,
            "h0": self.h0.dim,
            "hprime": self.hprime.dim,
            "h1": self.h1.dim,
            "m1": self.m1.dim,
            "l": self.l.dim,
            "z_l": self.z_l.dim,
            "n_l": self.n_l.dim,
            "components": sorted(c.dim for c in self.components),
        }


def _moved_subspace(k0: Subspace, tol: float) -> np.ndarray:
    """Orthonormal columns spanning the subspace of R^N actually moved by k0."""
    stacked = np.concatenate(list(k0.basis), axis=0)
    _, svals, vt = np.linalg.svd(stacked, full_matrices=False)
    rank = int(np.sum(svals > tol * svals[0]))
    return vt[:rank].T


def _sphere_stabilizer_override(
    k0: Subspace, h0: Subspace, tol: float
) -> Subspace | None:
    """For the 15-sphere action (k0, h0) = (so(9), spin(7)), the enlarged
    stabilizer is the so(8) annihilating the unique h0-fixed line, not the
    normalizer (spin(7) is self-normalizing there)."""
    moved = _moved_subspace(k0, tol)
    if moved.shape[1] != 9:
        return None
    action = np.concatenate([B @ moved for B in h0.basis], axis=0)
    _, svals, vt = np.linalg.svd(action, full_matrices=True)
    fixed = vt[np.sum(svals > tol * svals[0]) :]
    if fixed.shape[0] != 1:
        return None
    v0 = moved @ fixed[0]
    h1 = subspace_kernel([lambda X: X @ v0], k0, tol)
    return h1 if h1.dim == 28 else None


def decompose(t: Triple, tol: float = DEFAULT_TOL, seed: int = 0) -> Decomposition:
    """All derived subspaces of a triple; components are split but not classified."""
    t.validate()
    m = orthogonal_complement(t.h, t.k, tol)
    s = orthogonal_complement(t.k, t.g, tol)
    p = direct_sum(m, s) if m.dim + s.dim > 0 else zero_subspace(t.ambient_dim)
    k0 = (
        bracket_closure(m, within=t.k, tol=tol)
        if m.dim > 0
        else zero_subspace(t.ambient_dim)
    )
    h0 = intersect(t.h, k0, tol)
    hprime = subspace_kernel([lambda X: k0.project(X)], t.h, tol)

    used_override = False
    h1 = None
    if (k0.dim, h0.dim, m.dim) == (36, 21, 15):
        h1 = _sphere_stabilizer_override(k0, h0, tol)
        used_override = h1 is not None
    if h1 is None:
        h1 = normalizer_in(h0, k0, tol) if k0.dim > 0 else k0
    m1 = orthogonal_complement(h1, k0, tol)

    l = bracket_closure(m1, tol=tol) if m1.dim > 0 else zero_subspace(t.ambient_dim)
    if l.dim > 0:
        z_l = solve_commutant(list(l.basis), t.g, tol)
        n_l = normalizer_in(l, t.g, tol)
    else:
        z_l = t.g
        n_l = t.g
    s_in_nl = intersect(s, n_l, tol)
    rest = orthogonal_complement(n_l, t.g, tol)
    components = isotypic_split(l, rest, seed=seed, tol=tol)
    return Decomposition(
        triple=t,
        m=m,
        s=s,
        p=p,
        k0=k0,
        h0=h0,
        hprime=hprime,
        h1=h1,
        m1=m1,
        l=l,
        z_l=z_l,
        n_l=n_l,
        s_in_nl=s_in_nl,
        components=components,
        used_sphere_override=used_override,
    )


# ---------------------------------------------------------------------------
# isotypic splitting


def _ad_matrices(l: Subspace, W: Subspace) -> list[np.ndarray]:
    """Matrices of ad_X restricted to the invariant subspace W, X over l's basis."""
    out = []
    for X in l.basis:
        cols = []
        for B in W.basis:
            image = bracket(X, B)
            if W.residual(image) > 1e-7 * max(1.0, norm(image)):
                raise ValueError("subspace is not invariant under the algebra action")
            cols.append(W.coefficients(image))
        out.append(np.stack(cols, axis=1))
    return out


def _symmetric_commutant(ads: list[np.ndarray], d: int, tol: float) -> np.ndarray:
    """Basis (rows) of symmetric d x d matrices commuting with every ad matrix,
    in upper-triangle coordinates."""
    pairs = [(a, b) for a in range(d) for b in range(a, d)]

    def unpack(vec: np.ndarray) -> np.ndarray:
        S = np.zeros((d, d))
        for c, (a, b) in zip(vec, pairs):
            S[a, b] = c
            S[b, a] = c
        return S

    basis = np.eye(len(pairs))
    for M in ads:
        rows = []
        for vec in basis:
            S = unpack(vec)
            rows.append((M @ S - S @ M).reshape(-1))
        A = np.stack(rows, axis=1)
        _, svals, vt = np.linalg.svd(A, full_matrices=True)
        ref = max(1.0, svals[0] if svals.size else 0.0)
        rank = int(np.sum(svals > tol * ref))
        basis = vt[rank:] @ basis
        if basis.shape[0] == 0:
            break
    return np.array([unpack(v).reshape(-1) for v in basis]).reshape(-1, d, d)


def _equivariant_hom_exists(
    ads_a: list[np.ndarray], ads_b: list[np.ndarray], tol: float
) -> bool:
    """Whether a nonzero intertwiner V_a -> V_b exists for the two restricted actions."""
    da, db = ads_a[0].shape[0], ads_b[0].shape[0]
    basis = np.eye(da * db)
    for Ma, Mb in zip(ads_a, ads_b):
        rows = []
        for vec in basis:
            T = vec.reshape(db, da)
            rows.append((Mb @ T - T @ Ma).reshape(-1))
        A = np.stack(rows, axis=1)
        _, svals, vt = np.linalg.svd(A, full_matrices=True)
        ref = max(1.0, svals[0] if svals.size else 0.0)
        rank = int(np.sum(svals > tol * ref))
        basis = vt[rank:] @ basis
        if basis.shape[0] == 0:
            return False
    return basis.shape[0] > 0


def isotypic_split(
    l: Subspace,
    W: Subspace,
    seed: int = 0,
    tol: float = DEFAULT_TOL,
    max_retries: int = 5,
) -> list[Component]:
    """Split W into Ad_l-isotypic blocks.

    A random symmetric l-equivariant operator is drawn and eigendecomposed;
    its eigenspaces are the irreducible summands up to the generic choice.
    Eigenspaces carrying equivalent representations are then merged, since a
    split between equivalent copies is not canonical and the phi
    classification is only meaningful on the full isotypic block.
    """
    if l.dim == 0 or W.dim == 0:
        return []
    d = W.dim
    ads = _ad_matrices(l, W)
    comm = _symmetric_commutant(ads, d, tol)
    if comm.shape[0] == 0:
        raise RuntimeError("equivariant commutant is empty; W is not a module")
    if comm.shape[0] == 1:
        return [Component(space=W, irreducible_dims=[d])]

    rng = np.random.default_rng(seed)
    for attempt in range(max_retries):
        S = np.tensordot(rng.standard_normal(comm.shape[0]), comm, axes=1)
        vals, vecs = np.linalg.eigh(S)
        spread = max(vals[-1] - vals[0], 1.0)
        splits = [0]
        for a in range(1, d):
            if vals[a] - vals[a - 1] > 1e-6 * spread:
                splits.append(a)
        splits.append(d)
        groups = [list(range(splits[a], splits[a + 1])) for a in range(len(splits) - 1)]
        # the number of eigenspaces must match what the commutant dimension
        # allows; ambiguity from a degenerate draw triggers a retry
        pieces = []
        for gidx in groups:
            mats = np.tensordot(vecs[:, gidx].T, W.basis, axes=1)
            pieces.append(Subspace(W.ambient_dim, mats))
        try:
            piece_ads = [_ad_matrices(l, piece) for piece in pieces]
        except ValueError:
            continue  # degenerate draw: eigenspace not invariant
        # merge equivalent pieces into isotypic blocks
        merged: list[list[int]] = []
        assigned = [False] * len(pieces)
        for a in range(len(pieces)):
            if assigned[a]:
                continue
            block = [a]
            assigned[a] = True
            for b in range(a + 1, len(pieces)):
                if assigned[b] or pieces[a].dim != pieces[b].dim:
                    continue
                if _equivariant_hom_exists(piece_ads[a], piece_ads[b], tol):
                    block.append(b)
                    assigned[b] = True
            merged.append(block)
        out = []
        for block in merged:
            dims = [pieces[b].dim for b in block]
            if len(block) == 1:
                space = pieces[block[0]]
            else:
                space = direct_sum(*[pieces[b] for b in block])
            out.append(Component(space=space, irreducible_dims=dims))
        return out
    # retries exhausted: report the whole space as possibly reducible
    return [
        Component(
            space=W,
            irreducible_dims=[d],
            evidence={"possibly_reducible": True},
        )
    ]


# ---------------------------------------------------------------------------
# phi classification


def _min_singular_value(A: np.ndarray) -> float:
    return float(np.sqrt(max(np.linalg.eigvalsh(A.T @ A)[0], 0.0)))


def classify_phi(
    dec: Decomposition,
    component: Component,
    restarts: int = 20,
    iters: int = 120,
    seed: int = 0,
    tol: float = DEFAULT_TOL,
) -> Component:
    """Decide whether a component contains a vector killed by some nonzero m1 element.

    Minimizes the smallest singular value of ad_X restricted to the component
    over unit X in m1 by multistart projected descent.  The verdict is phi1
    when the minimum is (numerically) zero, phi2 when it is bounded away from
    zero, and inconclusive in the declared band between.
    """
    m1 = dec.m1
    if m1.dim == 0:
        raise ValueError("m1 is trivial; phi classification undefined")
    V = component.space
    # bracket tensor: T[a] = matrix of ad_{b_a} from V-coordinates to flat g
    T = np.stack(
        [
            np.stack([bracket(Ba, Bv).reshape(-1) for Bv in V.basis], axis=1)
            for Ba in m1.basis
        ]
    )
    scale = np.linalg.norm(T.reshape(m1.dim, -1), 2)
    if scale < 1e-10:
        # the whole component commutes with m1; any nonzero element witnesses
        comp = Component(
            space=V,
            irreducible_dims=component.irreducible_dims,
            phi="phi1",
            evidence={"sigma_min": 0.0, "whole_space_commutes": True},
        )
        return comp

    def sigma_min(x: np.ndarray) -> tuple[float, np.ndarray]:
        A = np.tensordot(x, T, axes=1)
        G = A.T @ A
        vals, vecs = np.linalg.eigh(G)
        return float(np.sqrt(max(vals[0], 0.0))), vecs[:, 0]

    rng = np.random.default_rng(seed)
    best_val = np.inf
    best_x = None
    best_kernel = None
    for _ in range(restarts):
        x = rng.standard_normal(m1.dim)
        x /= np.linalg.norm(x)
        step = 0.3
        val, kern = sigma_min(x)
        for _ in range(iters):
            grad = np.zeros(m1.dim)
            eps = 1e-6
            for a in range(m1.dim):
                xp = x.copy()
                xp[a] += eps
                xp /= np.linalg.norm(xp)
                grad[a] = (sigma_min(xp)[0] - val) / eps
            if np.linalg.norm(grad) < 1e-12 * scale:
                break
            xn = x - step * grad
            xn /= np.linalg.norm(xn)
            vn, kn = sigma_min(xn)
            if vn < val:
                x, val, kern = xn, vn, kn
                step = min(step * 1.3, 1.0)
            else:
                step *= 0.5
                if step < 1e-10:
                    break
            if val < 1e-9 * scale:
                break
        if val < best_val:
            best_val, best_x, best_kernel = val, x, kern
        if best_val < 1e-9 * scale:
            break

    evidence = {"sigma_min": best_val, "scale": float(scale), "restarts": restarts}
    if best_val <= 1e-6 * scale:
        label = "phi1"
        evidence["witness_m1_coords"] = [float(v) for v in best_x]
        evidence["kernel_coords"] = [float(v) for v in best_kernel]
    elif best_val >= 1e-3 * scale:
        label = "phi2"
    else:
        label = "inconclusive"
    return Component(
        space=V,
        irreducible_dims=component.irreducible_dims,
        phi=label,
        evidence=evidence,
    )


def classify_all(
    dec: Decomposition, restarts: int = 20, seed: int = 0, tol: float = DEFAULT_TOL
) -> Decomposition:
    if dec.m1.dim == 0:
        return dec
    dec.components = [
        classify_phi(dec, c, restarts=restarts, seed=seed + 17 * a, tol=tol)
        for a, c in enumerate(dec.components)
    ]
    return dec


# ---------------------------------------------------------------------------
# transitivity and symmetric pairs


def transitivity_check(
    dec: Decomposition, Y_s: np.ndarray, tol: float = DEFAULT_TOL
) -> bool:
    """Whether the centralizer of Y_s in k0 surjects onto m1.

    This is the stabilizer-transitivity criterion: the projection of
    n = z(Y_s) ^ k0 to m1 is onto exactly when no m1 direction is orthogonal
    to n.
    """
    res = dec.s.residual(Y_s)
    if res > 1e-6 * max(1.0, norm(Y_s)):
        raise ValueError(f"Y_s is not in s (residual {res:.2e})")
    if dec.m1.dim == 0:
        return True
    n = solve_commutant([Y_s], dec.k0, tol)
    if n.dim == 0:
        return False
    proj = np.stack([dec.m1.coefficients(B) for B in n.basis])
    rank = np.linalg.matrix_rank(proj, tol=1e-7)
    return bool(rank == dec.m1.dim)


def symmetric_pair_check(
    g: Subspace, n0: Subspace, tol: float = 1e-9
) -> bool:
    """Whether (g, n0) is a symmetric pair: with s2 = complement of n0,
    [n0,n0] in n0, [n0,s2] in s2, [s2,s2] in n0."""
    if not g.contains_subspace(n0, 1e-7):
        raise ValueError("n0 is not contained in g")
    s2 = orthogonal_complement(n0, g)
    checks = [
        (n0.basis, n0.basis, n0),
        (n0.basis, s2.basis, s2),
        (s2.basis, s2.basis, n0),
    ]
    for left, right, target in checks:
        for A in left:
            for B in right:
                image = bracket(A, B)
                if target.residual(image) > tol * max(1.0, norm(image)):
                    return False
    return True
