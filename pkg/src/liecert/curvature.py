"""Curvature-estimate machinery for homogeneous metrics scaled along m1.

The metric deformation is encoded by a single parameter h < 1: the positive
definite equivariant map phi acts as the identity on s and as (1-h)^{-1} on
m1, so psi := Id - phi^{-1} is h times the orthogonal projection onto m1.
For X, Y in m1 + s the module computes the tensors A, B, C, the four term
groups alpha, beta, gamma, delta of the unnormalized-curvature upper bound,
and checks the polynomial estimate

    alpha+beta+gamma+delta <= l1(|psi|) N1^2 + l2(|psi|) N1 N2 + l3(|psi|) h^2 N2^2

with N1 = |[X, Y]|, N2 = |X_m wedge Y_m| and l the polynomials of
``lambda_polys`` evaluated with the norm of the bracket map on m1.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .linalg import bracket, inner_product, norm, wedge_norm
from .triple import Decomposition


@dataclass(frozen=True)
class PhiMap:
    """Deformation with phi = Id on s and (1-h)^{-1} Id on m1; requires h < 1."""

    h: float
    dec: Decomposition

    def __post_init__(self):
        if not self.h < 1.0:
            raise ValueError("h must be < 1 for phi to be positive definite")

    def psi(self, Z: np.ndarray) -> np.ndarray:
        return self.h * self.dec.m1.project(Z)

    @property
    def psi_norm(self) -> float:
        return abs(self.h) if self.dec.m1.dim > 0 else 0.0


@dataclass(frozen=True)
class CurvatureTerms:
    alpha: float
    beta: float
    gamma: float
    delta: float
    A: np.ndarray
    B: np.ndarray
    C: np.ndarray
    N1: float
    N2: float

    @property
    def upper_surrogate(self) -> float:
        return self.alpha + self.beta + self.gamma + self.delta


def _check_membership(dec: Decomposition, X: np.ndarray, label: str) -> None:
    space_res = norm(X - dec.m1.project(X) - dec.s.project(X))
    if space_res > 1e-7 * max(1.0, norm(X)):
        raise ValueError(f"{label} is not in m1 + s (residual {space_res:.2e})")


def tensors(phi: PhiMap, X: np.ndarray, Y: np.ndarray) -> CurvatureTerms:
    """The A/B/C tensors and the four term groups of the curvature upper bound.

    A, B, C are computed both from psi applied inside brackets and from the
    closed forms in h and the m1/s components; disagreement beyond 1e-10
    raises, guarding the projection bookkeeping.
    """
    dec = phi.dec
    _check_membership(dec, X, "X")
    _check_membership(dec, Y, "Y")
    h = phi.h
    Xm, Xs = dec.m1.project(X), dec.s.project(X)
    Ym, Ys = dec.m1.project(Y), dec.s.project(Y)

    psiX, psiY = phi.psi(X), phi.psi(Y)
    A = bracket(psiX, Y) + bracket(X, psiY)
    B = bracket(psiX, psiY)
    C = bracket(psiX, Y) - bracket(X, psiY)
    A_closed = h * (2.0 * bracket(Xm, Ym) + bracket(Xm, Ys) + bracket(Xs, Ym))
    B_closed = h * h * bracket(Xm, Ym)
    C_closed = h * (bracket(Xm, Ys) - bracket(Xs, Ym))
    scale = max(1.0, norm(X) * norm(Y))
    for left, right in ((A, A_closed), (B, B_closed), (C, C_closed)):
        if norm(left - right) > 1e-10 * scale:
            raise RuntimeError("psi-form and closed-form tensor computations disagree")

    br = bracket(X, Y)
    br_h = dec.triple.h.project(br)
    br_p = dec.p.project(br)
    br_m = dec.m.project(br)
    psi_br = phi.psi(br)
    A_h = dec.triple.h.project(A)

    alpha = norm(br_h) ** 2 + 0.25 * norm(br_p) ** 2
    beta = -0.75 * inner_product(psi_br, br) - 1.5 * inner_product(br_h, A)
    gamma = (
        -0.75 * norm(psi_br) ** 2
        + 1.5 * inner_product(psi_br, A)
        - 1.5 * inner_product(br_m, B)
        + 0.75 * norm(A_h) ** 2
    )
    psi2_br = h * h * dec.m1.project(br)
    psi3_br = h * psi2_br
    psi_A = phi.psi(A)
    psi_C = phi.psi(C)
    bxx = bracket(psiX, X)
    byy = bracket(psiY, Y)
    delta = (
        -0.75 * inner_product(psi3_br, br)
        + 1.5 * inner_product(psi2_br, A)
        - 1.5 * inner_product(psi_br, B)
        - 0.75 * inner_product(psi_A, A)
        - 0.25 * inner_product(psi_C, C)
        + inner_product(phi.psi(bxx), byy)
        + inner_product(A, B)
        - 1.5 * inner_product(A_h, B)
    )
    return CurvatureTerms(
        alpha=alpha,
        beta=beta,
        gamma=gamma,
        delta=delta,
        A=A,
        B=B,
        C=C,
        N1=norm(br),
        N2=wedge_norm(Xm, Ym),
    )


def lambda_polys(lam: float) -> tuple[list[float], list[float], list[float]]:
    """Coefficient lists (ascending powers) of the three bound polynomials.

    l1(x) = 1 + 3/4 x + 3/4 x^3,
    l2(x) = 3 lam x + 9/2 lam x^2 + 9/2 lam x^3,
    l3(x) = 3 lam^2 + 8 lam^2 x.
    """
    if lam < 0:
        raise ValueError("lam must be nonnegative")
    poly1 = [1.0, 0.75, 0.0, 0.75]
    poly2 = [0.0, 3.0 * lam, 4.5 * lam, 4.5 * lam]
    poly3 = [3.0 * lam**2, 8.0 * lam**2]
    return poly1, poly2, poly3


def eval_poly(coeffs: list[float], x: float) -> float:
    return float(sum(c * x**a for a, c in enumerate(coeffs)))


def bracket_operator_norm(dec: Decomposition) -> float:
    """Largest singular value of the bracket map from wedge pairs of m1 into g.

    The wedge square carries the inner product induced from Q, so an
    orthonormal basis of m1 gives the orthonormal family b_a ^ b_b (a < b).
    With fewer than two directions the map is zero.
    """
    m1 = dec.m1
    if m1.dim < 2:
        return 0.0
    cols = []
    for a in range(m1.dim):
        for b in range(a + 1, m1.dim):
            cols.append(bracket(m1.basis[a], m1.basis[b]).reshape(-1))
    A = np.stack(cols, axis=1)
    return float(np.linalg.svd(A, compute_uv=False)[0])


def check_lemma_bound(
    phi: PhiMap, X: np.ndarray, Y: np.ndarray, lam: float | None = None
) -> bool:
    """Whether the computable curvature surrogate obeys the polynomial bound."""
    terms = tensors(phi, X, Y)
    if lam is None:
        lam = bracket_operator_norm(phi.dec)
    p1, p2, p3 = lambda_polys(lam)
    x = phi.psi_norm
    bound = (
        eval_poly(p1, x) * terms.N1**2
        + eval_poly(p2, x) * terms.N1 * terms.N2
        + eval_poly(p3, x) * phi.h**2 * terms.N2**2
    )
    slack = 1e-9 * max(1.0, terms.N1**2, terms.N2**2)
    return terms.upper_surrogate <= bound + slack


def second_fundamental_form(
    dec: Decomposition, hprime: float, X: np.ndarray, Y: np.ndarray
) -> float:
    """Shape-operator pairing of the deformed product metric: hprime/2 * Q(X_m, Y_m)."""
    _check_membership(dec, X, "X")
    _check_membership(dec, Y, "Y")
    return 0.5 * hprime * inner_product(dec.m1.project(X), dec.m1.project(Y))
