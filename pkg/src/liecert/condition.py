"""Certify or refute the wedge-vs-bracket pinching condition on a decomposed triple.

The central quantity is the ratio

    rho(X, Y) = |[X, Y]| / |X_m wedge Y_m|,   X, Y in m1 + s,

whose infimum over pairs with independent m-parts is positive exactly when
the pinching condition |X_m wedge Y_m| <= C |[X, Y]| holds.  The module
provides:

* an exact certificate from the geometry of bracket cones: if no nonzero
  value of [X_m, Y_m] can be matched by the k-part of a bracket of two
  horizontal vectors, commuting pairs force degenerate m-parts;
* a curvature certificate for triples whose sphere is normally positively
  curved, by bounding |[X, Y]| / |X wedge Y| below on the whole of m + s;
* a numerical estimator of inf rho by batched multistart projected descent
  with the wedge constraint enforced by renormalization;
* verification of explicit violating pairs and of the one-parameter family
  whose bracket decays while the wedge stays constant.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

import numpy as np

from . import algebras as al
from .linalg import (
    DEFAULT_TOL,
    Subspace,
    bracket,
    intersect,
    norm,
    orthonormalize,
    wedge_norm,
)
from .triple import Decomposition, Triple

CERT_BRACKET = "CertifiedBracketIntersection"
CERT_CURVATURE = "CertifiedCurvatureBound"
VIOLATION = "ViolationWitness"
SEQUENCE = "SequenceViolation"
ESTIMATE = "NumericalEstimate"
INCONCLUSIVE = "Inconclusive"

WITNESS_BRACKET_TOL = 1e-10
WITNESS_WEDGE_FLOOR = 0.1
CURVATURE_FLOOR = 1e-4
# certified families in the catalog top out at cone cosine 0.95, violating
# ones reach 1; the gap is centered to tolerate optimizer slack on both sides
CONE_COS_GAP = 0.02


@dataclass(frozen=True)
class Verdict:
    kind: str
    data: dict[str, Any] = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"kind": self.kind, "data": _jsonable(self.data)}


def _jsonable(obj):
    if isinstance(obj, dict):
        return {k: _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return [_jsonable(v) for v in obj.tolist()]
    if isinstance(obj, (np.floating, float)):
        return float(obj)
    if isinstance(obj, (np.integer, int)):
        return int(obj)
    if isinstance(obj, (np.bool_, bool)):
        return bool(obj)
    return obj


class PreconditionError(ValueError):
    pass


def _m_space(dec: Decomposition, use_m1: bool) -> Subspace:
    space = dec.m1 if use_m1 else dec.m
    if space.dim == 0:
        raise PreconditionError(
            "the chosen m space is trivial; nothing to pinch against"
        )
    return space


def rho(
    dec: Decomposition, X: np.ndarray, Y: np.ndarray, use_m1: bool = True
) -> float:
    """|[X, Y]| / |X_m wedge Y_m| for X, Y in (m1 or m) + s with independent m-parts."""
    mspace = _m_space(dec, use_m1)
    scale = max(norm(X), norm(Y), 1.0)
    for Z, label in ((X, "X"), (Y, "Y")):
        res = norm(Z - mspace.project(Z) - dec.s.project(Z))
        if res > 1e-7 * scale:
            raise PreconditionError(f"{label} is not in the admissible subspace")
    w = wedge_norm(mspace.project(X), mspace.project(Y))
    if w <= 1e-12 * scale * scale:
        raise PreconditionError("m-parts are linearly dependent; ratio undefined")
    return norm(bracket(X, Y)) / w


# ---------------------------------------------------------------------------
# batched multistart machinery


class _BatchedPairs:
    """Vectorized evaluation of bracket norms over batches of coefficient pairs."""

    def __init__(self, basis: np.ndarray):
        self.basis = basis  # (d, N, N)
        self.d = basis.shape[0]

    def assemble(self, coords: np.ndarray) -> np.ndarray:
        return np.tensordot(coords, self.basis, axes=1)

    def bracket_norms(self, xs: np.ndarray, ys: np.ndarray) -> np.ndarray:
        X = self.assemble(xs)
        Y = self.assemble(ys)
        R = X @ Y - Y @ X
        return np.linalg.norm(R.reshape(R.shape[0], -1), axis=1)


def _pin_wedge(z: np.ndarray, d: int, dm: int) -> tuple[np.ndarray, np.ndarray]:
    """Rescale each pair so the wedge of the first-dm coordinate blocks is 1.

    Returns the rescaled batch and the wedge values before rescaling; rows
    with (numerically) dependent m-parts are left alone and flagged by a
    zero wedge.
    """
    xm = z[:, :dm]
    ym = z[:, d : d + dm]
    w2 = (
        np.sum(xm * xm, axis=1) * np.sum(ym * ym, axis=1)
        - np.sum(xm * ym, axis=1) ** 2
    )
    w = np.sqrt(np.clip(w2, 0.0, None))
    good = w > 1e-12
    out = z.copy()
    out[good] = z[good] / np.sqrt(w[good])[:, None]
    return out, w


def _ratio_objective(pairs: _BatchedPairs, dm: int):
    d = pairs.d

    def f(z: np.ndarray) -> np.ndarray:
        pinned, w = _pin_wedge(z, d, dm)
        vals = pairs.bracket_norms(pinned[:, :d], pinned[:, d:])
        vals = np.where(w > 1e-12, vals, np.inf)
        return vals

    return f


def _batched_descent(
    f,
    z0: np.ndarray,
    iters: int,
    fd_step: float = 1e-6,
    init_step: float = 0.25,
    stop_below: float | None = None,
) -> tuple[np.ndarray, np.ndarray]:
    """Minimize f over each row of z0 by projected finite-difference descent.

    All restarts advance in lockstep with per-row adaptive steps, so the
    result for row b never depends on the other rows and prefixes of the
    start list give prefixes of the result list.
    """
    z = z0.copy()
    B, dim = z.shape
    vals = f(z)
    steps = np.full(B, init_step)
    for _ in range(iters):
        if stop_below is not None and np.min(vals) < stop_below:
            break
        if np.max(steps) < 1e-12:
            break
        # forward differences, one batched call for all coordinates
        pert = np.repeat(z[:, None, :], dim, axis=1)
        pert[:, np.arange(dim), np.arange(dim)] += fd_step
        fp = f(pert.reshape(B * dim, dim)).reshape(B, dim)
        grad = (fp - vals[:, None]) / fd_step
        gnorm = np.linalg.norm(grad, axis=1)
        gnorm = np.where(gnorm > 0, gnorm, 1.0)
        cand = z - (steps / gnorm)[:, None] * grad
        cvals = f(cand)
        improved = cvals < vals
        z[improved] = cand[improved]
        vals[improved] = cvals[improved]
        steps = np.where(improved, np.minimum(steps * 1.6, 10.0), steps * 0.5)
    return vals, z


def _minimize_bracket_ratio(
    basis: np.ndarray,
    dm: int,
    restarts: int,
    iters: int,
    seed: int,
    stop_below: float | None = None,
) -> tuple[float, np.ndarray, np.ndarray]:
    """min |[X, Y]| over coefficient pairs with the dm-block wedge pinned to 1."""
    pairs = _BatchedPairs(basis)
    d = pairs.d
    rng = np.random.default_rng((seed, 0xA11CE))
    z0 = rng.standard_normal((restarts, 2 * d))
    fobj = _ratio_objective(pairs, dm)
    vals, z = _batched_descent(fobj, z0, iters, stop_below=stop_below)
    b = int(np.argmin(vals))
    return float(vals[b]), z[b, :d], z[b, d:]


def estimate_inf_rho(
    dec: Decomposition,
    restarts: int = 100,
    iters: int = 150,
    seed: int = 0,
    use_m1: bool = True,
    stop_below: float | None = None,
) -> Verdict:
    """Numerical lower envelope of rho by multistart projected descent.

    Deterministic for a fixed seed; adding restarts can only lower the
    reported value because every restart trajectory is independent of the
    batch it runs in.
    """
    mspace = _m_space(dec, use_m1)
    basis = np.concatenate([mspace.basis, dec.s.basis], axis=0)
    val, x, y = _minimize_bracket_ratio(
        basis, mspace.dim, restarts, iters, seed, stop_below
    )
    data = {
        "rho_inf": val,
        "restarts_used": restarts,
        "iters": iters,
        "seed": seed,
        "use_m1": use_m1,
        "argmin_x": x,
        "argmin_y": y,
    }
    return Verdict(ESTIMATE, data)


# ---------------------------------------------------------------------------
# bracket-cone certificate


def _bracket_span(space: Subspace, tol: float) -> Subspace:
    mats = [
        bracket(space.basis[a], space.basis[b])
        for a in range(space.dim)
        for b in range(a + 1, space.dim)
    ]
    if not mats:
        return Subspace(space.ambient_dim, np.zeros((0, space.ambient_dim, space.ambient_dim)))
    return orthonormalize(mats, tol)


def certify_bracket_intersection(
    dec: Decomposition,
    tol: float = DEFAULT_TOL,
    restarts: int = 60,
    iters: int = 150,
    seed: int = 0,
    cos_gap: float = CONE_COS_GAP,
) -> Verdict:
    """Certificate that brackets of m-pairs and of s-pairs meet only at zero.

    Two stages.  If even the linear spans of the two bracket families
    intersect trivially, that settles it.  Otherwise the certificate compares
    the cones themselves: the largest cosine between a nonzero [X_m, Y_m] and
    the k-part of a bracket of horizontal vectors is maximized by multistart
    ascent, and staying below 1 - cos_gap certifies that a commuting pair
    must have degenerate m-part.  A nonzero intersection is never read as a
    refutation; failure to certify returns Inconclusive.
    """
    m, s, k = dec.m, dec.s, dec.triple.k
    if m.dim == 0 or s.dim == 0:
        return Verdict(CERT_BRACKET, {"method": "degenerate", "span_dim": 0})
    span_m = _bracket_span(m, tol)
    span_s = _bracket_span(s, tol)
    common = intersect(span_m, span_s, tol)
    if common.dim == 0:
        return Verdict(
            CERT_BRACKET,
            {"method": "span", "span_dim": 0, "span_m": span_m.dim, "span_s": span_s.dim},
        )

    # cone stage: maximize alignment between [m, m] and P_k [s, s]
    dm, ds = m.dim, s.dim
    mb = m.basis
    sb = s.basis
    kflat = k.flat
    eta = 1e-12

    def cos2(z: np.ndarray) -> np.ndarray:
        B = z.shape[0]
        xm, ym = z[:, :dm], z[:, dm : 2 * dm]
        xs, ys = z[:, 2 * dm : 2 * dm + ds], z[:, 2 * dm + ds :]
        Xm = np.tensordot(xm, mb, axes=1)
        Ym = np.tensordot(ym, mb, axes=1)
        Xs = np.tensordot(xs, sb, axes=1)
        Ys = np.tensordot(ys, sb, axes=1)
        u = (Xm @ Ym - Ym @ Xm).reshape(B, -1)
        v_full = (Xs @ Ys - Ys @ Xs).reshape(B, -1)
        v = (v_full @ kflat.T) @ kflat
        uu = np.sum(u * u, axis=1)
        vv = np.sum(v * v, axis=1)
        uv = np.sum(u * v, axis=1)
        return uv * uv / ((uu + eta) * (vv + eta))

    def renorm(z: np.ndarray) -> np.ndarray:
        out = z.copy()
        for sl in (
            slice(0, dm),
            slice(dm, 2 * dm),
            slice(2 * dm, 2 * dm + ds),
            slice(2 * dm + ds, 2 * dm + 2 * ds),
        ):
            nrm = np.linalg.norm(out[:, sl], axis=1)
            nrm = np.where(nrm > 1e-12, nrm, 1.0)
            out[:, sl] /= nrm[:, None]
        return out

    def neg(z: np.ndarray) -> np.ndarray:
        return -cos2(renorm(z))

    rng = np.random.default_rng((seed, 0xC09E))
    presample = rng.standard_normal((max(restarts * 40, 800), 2 * dm + 2 * ds))
    pv = neg(presample)
    order = np.argsort(pv)
    z0 = presample[order[:restarts]]
    vals, _ = _batched_descent(neg, z0, iters, init_step=0.15)
    max_cos = float(np.sqrt(max(-np.min(vals), 0.0)))
    data = {
        "method": "cone",
        "span_dim": common.dim,
        "span_m": span_m.dim,
        "span_s": span_s.dim,
        "max_cos": max_cos,
        "cos_gap": cos_gap,
        "restarts": restarts,
    }
    if max_cos <= 1.0 - cos_gap:
        return Verdict(CERT_BRACKET, data)
    return Verdict(INCONCLUSIVE, {"reason": "bracket cones come too close", **data})


# ---------------------------------------------------------------------------
# curvature certificate


def certify_positive_curvature(
    dec: Decomposition,
    samples: int = 2000,
    seed: int = 0,
    curvature_flag: bool = False,
    restarts: int = 40,
    iters: int = 120,
) -> Verdict:
    """Curvature bound for triples whose quotient carries a positively curved
    normal metric (catalog flag).

    Estimates eps = min |[X, Y]| / |X wedge Y| over pairs in m + s by random
    sampling refined with descent; since the full wedge dominates the m-part
    wedge, a positive eps bounds the pinching ratio below.  The minimum
    staying above the floor yields the certificate.
    """
    if not curvature_flag:
        raise PreconditionError(
            "triple is not flagged as a normally positively curved sphere quotient"
        )
    if dec.m.dim == 0:
        return Verdict(CERT_CURVATURE, {"epsilon": None, "vacuous": True})
    basis = dec.p.basis
    d = basis.shape[0]
    pairs = _BatchedPairs(basis)
    fobj = _ratio_objective(pairs, d)  # pin the full wedge
    rng = np.random.default_rng((seed, 0xC0))
    presample = rng.standard_normal((samples, 2 * d))
    pv = fobj(presample)
    order = np.argsort(pv)
    z0 = presample[order[:restarts]]
    vals, _ = _batched_descent(fobj, z0, iters)
    eps = float(np.min(vals))
    data = {"epsilon": eps, "samples": samples, "restarts": restarts, "floor": CURVATURE_FLOOR}
    if eps > CURVATURE_FLOOR:
        return Verdict(CERT_CURVATURE, data)
    return Verdict(INCONCLUSIVE, {"reason": "sampled curvature ratio collapsed", **data})


# ---------------------------------------------------------------------------
# witnesses


def verify_witness(
    dec: Decomposition, X: np.ndarray, Y: np.ndarray, use_m1: bool = True
) -> Verdict:
    """Check that (X, Y) is a genuine violating pair: commuting, inside the
    admissible subspace, with solidly independent m-parts."""
    mspace = _m_space(dec, use_m1)
    scale = max(norm(X), norm(Y))
    for Z, label in ((X, "X"), (Y, "Y")):
        res = norm(Z - mspace.project(Z) - dec.s.project(Z))
        if res > 1e-8 * scale:
            raise PreconditionError(
                f"{label} is outside the admissible subspace (residual {res:.2e})"
            )
    br = norm(bracket(X, Y))
    wedge = wedge_norm(mspace.project(X), mspace.project(Y))
    data = {
        "bracket_norm": br,
        "wedge": wedge,
        "scale": scale,
        "bracket_tol": WITNESS_BRACKET_TOL * scale,
        "wedge_floor": WITNESS_WEDGE_FLOOR * scale * scale,
    }
    if br <= WITNESS_BRACKET_TOL * scale and wedge >= WITNESS_WEDGE_FLOOR * scale * scale:
        return Verdict(VIOLATION, data)
    return Verdict(INCONCLUSIVE, {"reason": "residuals outside witness bands", **data})


def builtin_witness(family: str, p: int | None = None) -> tuple[Triple, np.ndarray, np.ndarray]:
    """The recorded violating pair for a catalog family, realized with its triple."""
    from . import catalog

    return catalog.build_with_witness(family, p)


def g2_sequence(n: int) -> tuple[np.ndarray, np.ndarray]:
    """The violating sequence in the product ambient: brackets decay like 1/n
    while the wedge of the m-parts is constant."""
    if n <= 0:
        raise ValueError("n must be positive")
    pr = al.g2_su2_product()
    X = pr.E0 - 3.0 * pr.s_elem - (2.0 / (pr.lam * n)) * pr.e2
    Y = pr.E_minus + n * pr.e1
    return X, Y


def verify_sequence(dec: Decomposition, ns: list[int]) -> Verdict:
    """Evaluate the decaying family and package the evidence as a verdict."""
    samples = []
    products = []
    wedges = []
    for n in ns:
        X, Y = g2_sequence(n)
        br = norm(bracket(X, Y))
        w = wedge_norm(dec.m.project(X), dec.m.project(Y))
        samples.append({"n": n, "bracket_norm": br, "wedge": w})
        products.append(br * n)
        wedges.append(w)
    spread = (max(products) - min(products)) / max(products)
    wedge_spread = max(wedges) - min(wedges)
    data = {
        "samples": samples,
        "bracket_times_n_relative_spread": spread,
        "wedge_spread": wedge_spread,
    }
    if spread < 1e-6 and wedge_spread < 1e-10 * max(wedges):
        return Verdict(SEQUENCE, data)
    return Verdict(INCONCLUSIVE, {"reason": "sequence scaling laws failed", **data})
