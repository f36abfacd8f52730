"""Registry of triple families: builders, expected data, and violating pairs.

Entry ids follow the grammar ``family-name[:p=<int>]`` used by the CLI.
Realizable entries build concrete triples; families whose ambient algebra is
one of the exceptional ones beyond g2 are recorded but marked unrealizable.

The ``source`` tags index the classification data this catalog encodes:
``certified-list/*`` for the four families with exact bracket certificates,
``violating-family/*`` for the families with explicit commuting pairs,
``sphere-table/*`` for transitive sphere actions, ``symmetric-table/*`` for
the symmetric pairs with spin-type isotropy, and ``rank*-list/*`` for the
classification statements the families instantiate.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

import numpy as np

from . import algebras as al
from . import octonion as oc
from .linalg import Subspace, bracket, norm, orthonormalize
from .triple import Triple


class UnrealizableFamilyError(ValueError):
    def __init__(self, entry_id: str, reason: str):
        self.entry_id = entry_id
        self.reason = reason
        super().__init__(f"{entry_id}: {reason}")


class UnknownEntryError(KeyError):
    pass


@dataclass(frozen=True)
class CatalogEntry:
    id: str
    description: str
    rank: int | None
    realizable: bool
    source: tuple[str, ...]
    expected_verdict: str | None = None  # certified-bracket | certified-curvature |
    # violation | sequence | numerical
    p_min: int | None = None
    p_max: int | None = None
    witness_ps: tuple[int, ...] = ()
    curvature_flag: bool = False
    use_m1: bool = True
    reduces_to: str | None = None
    note: str = ""

    @property
    def parametrized(self) -> bool:
        return self.p_min is not None

    def check_p(self, p: int | None) -> int | None:
        if not self.parametrized:
            if p not in (None, 0):
                raise ValueError(f"{self.id} takes no parameter")
            return None
        if p is None:
            raise ValueError(f"{self.id} requires a parameter p")
        if p < self.p_min or (self.p_max is not None and p > self.p_max):
            hi = "inf" if self.p_max is None else str(self.p_max)
            raise ValueError(f"{self.id}: p={p} outside [{self.p_min}, {hi}]")
        return p


# ---------------------------------------------------------------------------
# builders


def _f():
    return oc.triality_frame()


def _so(n: int) -> Subspace:
    return al.make_so(n).subspace


def _emb(sub: Subspace, n: int) -> Subspace:
    return al.embed_subspace(sub, n, 0)


def _build_spin7plus_so8(p: int) -> Triple:
    n = 9 + p
    return Triple(
        f"spin7plus-so8:p={p}",
        n,
        _so(n),
        _emb(_so(8), n),
        _emb(_f().so7_plus, n),
    )


def _build_g2_spin7(p: int) -> Triple:
    n = 8 + p
    return Triple(
        f"g2-spin7:p={p}", n, _so(n), _emb(_f().so7_0, n), _emb(_f().g2, n)
    )


def _build_su3_su4_spin7() -> Triple:
    img, _ = al.su4_as_so6()
    su3_c = [np.pad(M, ((0, 1), (0, 1))) for M in al.su_complex_basis(3)]
    h = orthonormalize([al.su4_complex_to_so6(M) for M in su3_c])
    return Triple(
        "su3-su4-spin7", 7, _so(7), _emb(img.subspace, 7), _emb(h, 7)
    )


def _su_block_subspace(mats_c: list[np.ndarray], n_big: int) -> Subspace:
    padded = [
        np.pad(M, ((0, n_big - M.shape[0]), (0, n_big - M.shape[0]))) for M in mats_c
    ]
    return orthonormalize([al.realify_complex(M) for M in padded])


def _build_sp2_su4_su5() -> Triple:
    g = al.make_su(5).subspace
    k = _su_block_subspace(al.su_complex_basis(4), 5)
    h = _su_block_subspace(al.sp2_complex_basis(), 5)
    return Triple("sp2-su4-su5", 10, g, k, h)


def _build_sp_series_rank4(p: int) -> Triple:
    n = 4 * (p + 1)
    g = al.make_sp(p + 1).subspace
    sp1 = al.embed_block(al.make_sp(1), n, 0).subspace
    spp = al.embed_block(al.make_sp(p), n, 4).subspace
    k = orthonormalize(np.concatenate([sp1.basis, spp.basis]))
    return Triple(f"sp-series-rank4:p={p}", n, g, k, spp)


def _build_sp_series_rank3(p: int) -> Triple:
    n = 4 * (p + 1)
    g = al.make_sp(p + 1).subspace
    sp1 = al.embed_block(al.make_sp(1), n, 0).subspace
    spp = al.embed_block(al.make_sp(p), n, 4).subspace
    k = orthonormalize(np.concatenate([sp1.basis, spp.basis]))
    circle = al.realify_quaternion(
        np.array([[[0.0, 1.0, 0.0, 0.0]]])
    )  # the i-circle in the first quaternionic coordinate
    h = orthonormalize(
        np.concatenate([[al.embed_matrix(circle, n, 0)], spp.basis])
    )
    return Triple(f"sp-series:p={p}", n, g, k, h)


def _build_g2_so4_rank4() -> Triple:
    fr = al.g2_so4_frame()
    return Triple("g2-so4-rank4", 8, fr.g2, fr.so4, fr.su2_1)


def _build_g2_so4_rank3() -> Triple:
    fr = al.g2_so4_frame()
    t = fr.E_plus / norm(fr.E_plus)
    h = orthonormalize(np.concatenate([fr.su2_1.basis, [t]]))
    return Triple("g2-so4-rank3", 8, fr.g2, fr.so4, h)


def _build_case1(p: int) -> Triple:
    n = 9 + p
    return Triple(
        f"spin-octonion-case1:p={p}",
        n,
        _so(n),
        _emb(_f().so7_plus, n),
        _emb(_f().g2, n),
    )


def _build_case2(p: int) -> Triple:
    n = 9 + p
    return Triple(
        f"spin-octonion-case2:p={p}",
        n,
        _so(n),
        _emb(_f().so7_0, n),
        _emb(_f().g2, n),
    )


def _build_case4(p: int) -> Triple:
    n = 9 + p
    return Triple(
        f"spin-octonion-case4:p={p}",
        n,
        _so(n),
        _emb(_so(8), n),
        _emb(_f().so7_plus, n),
    )


def _build_su3_long_root(p: int) -> Triple:
    n_quat = p + 2
    n = 4 * n_quat
    g = al.make_sp(n_quat).subspace
    sp2 = al.embed_block(al.make_sp(2), n, 0).subspace
    sp1_second = al.embed_block(al.make_sp(1), n, 4).subspace
    return Triple(f"su3-long-root:p={p}", n, g, sp2, sp1_second)


def _build_su_p4_pair(p: int) -> Triple:
    n_c = p + 4
    g = al.make_su(n_c).subspace
    k = _su_block_subspace(al.su_complex_basis(4), n_c)
    h = _su_block_subspace(al.sp2_complex_basis(), n_c)
    return Triple(f"su(p+4)-su3-pair:p={p}", 2 * n_c, g, k, h)


def _build_remark_limit() -> Triple:
    pr = al.g2_su2_product()
    return Triple("remark-limit", pr.ambient_dim, pr.g, pr.k, pr.h)


def _build_su_long_root(p: int) -> Triple:
    n_c = p + 2
    g = al.make_su(n_c).subspace
    k = _su_block_subspace(al.su_complex_basis(2), n_c)
    torus = np.zeros((n_c, n_c), dtype=complex)
    torus[0, 0] = 1j
    torus[1, 1] = -1j
    h = orthonormalize([al.realify_complex(torus)])
    return Triple(f"su-long-root:p={p}", 2 * n_c, g, k, h)


def _so_long_root_pieces():
    su2_c = [np.pad(M, ((0, 2), (0, 2))) for M in al.su_complex_basis(2)]
    k = orthonormalize([al.su4_complex_to_so6(M) for M in su2_c])
    torus = np.zeros((4, 4), dtype=complex)
    torus[0, 0] = 1j
    torus[1, 1] = -1j
    h = orthonormalize([al.su4_complex_to_so6(torus)])
    return k, h


def _build_so_long_root(p: int) -> Triple:
    if p != 2:
        raise UnrealizableFamilyError(
            "so-long-root",
            "only p=2 is built here; p=1 has no long-root pair at angle "
            "pi/3 and p>2 adds nothing to the violation",
        )
    k, h = _so_long_root_pieces()
    return Triple(f"so-long-root:p={p}", 6, _so(6), k, h)


def _build_g2_long_root() -> Triple:
    fr = al.g2_so4_frame()
    f3 = al.g2_su3_frame()
    torus = np.zeros((3, 3), dtype=complex)
    torus[0, 0] = 1j
    torus[1, 1] = -1j
    t = f3.embed(torus)
    if fr.su2_1.residual(t) > 1e-9:
        raise RuntimeError("long-root torus is not aligned with the weight-one factor")
    h = orthonormalize(np.concatenate([[t], fr.su2_3.basis]))
    return Triple("g2-long-root", 8, fr.g2, fr.so4, h)


# ---------------------------------------------------------------------------
# witnesses


def _ecol(u: np.ndarray, col: int, n: int) -> np.ndarray:
    out = np.zeros((n, n))
    out[col, :8] = u
    out[:8, col] = -u
    return out


def _oct_unit(idx: int) -> np.ndarray:
    v = np.zeros(8)
    v[idx] = 1.0
    return v


def _column_witness(
    A8: np.ndarray,
    B8: np.ndarray,
    u_idx: list[int],
    v_idx: list[int],
    cols: list[int],
    n: int,
) -> tuple[np.ndarray, np.ndarray]:
    """Assemble X = A + sqrt2 sum E(u_c -> col_c), Y = B + sqrt2 sum E(v_c -> col_c)
    with per-column swaps and signs resolved so that [X, Y] = 0 exactly.

    The multiplication conventions fix all signs up to these discrete
    choices, so a bounded search recovers the displayed pairs regardless of
    the doubling convention.
    """
    ncols = len(cols)
    r2 = np.sqrt(2.0)
    for mask in range(2**ncols):
        us, vs, sig, tau = [], [], [], []
        feasible = True
        for c in range(ncols):
            u = _oct_unit(u_idx[c])
            v = _oct_unit(v_idx[c])
            if (mask >> c) & 1:
                u, v = v, u
            w1 = A8 @ v
            w2 = B8 @ u
            if np.allclose(w1, w2, atol=1e-12):
                s, t = 1.0, 1.0
            elif np.allclose(w1, -w2, atol=1e-12):
                s, t = -1.0, 1.0
            else:
                feasible = False
                break
            us.append(u)
            vs.append(v)
            sig.append(s)
            tau.append(t)
        if not feasible:
            continue
        block = bracket(A8, B8)
        for c in range(ncols):
            block = block + 2.0 * sig[c] * tau[c] * (
                np.outer(vs[c], us[c]) - np.outer(us[c], vs[c])
            )
        if norm(block) > 1e-10:
            continue
        X = al.embed_matrix(A8, n, 0)
        Y = al.embed_matrix(B8, n, 0)
        for c in range(ncols):
            X = X + r2 * sig[c] * _ecol(us[c], cols[c], n)
            Y = Y + r2 * tau[c] * _ecol(vs[c], cols[c], n)
        res = norm(bracket(X, Y))
        if res <= 1e-10 * max(norm(X), norm(Y)):
            return X, Y
    raise RuntimeError("no sign assignment produces a commuting pair")


def _witness_case1(p: int) -> tuple[np.ndarray, np.ndarray]:
    n = 9 + p
    # basis octonions 1, i, j and one direction transverse to the octonions
    def E(r, s):
        out = np.zeros((n, n))
        out[s, r] = 1.0
        out[r, s] = -1.0
        return out

    X = E(0, 1) + E(2, 8)
    Y = E(0, 2) + E(1, 8)
    return X, Y


def _witness_case2(p: int) -> tuple[np.ndarray, np.ndarray]:
    n = 9 + p
    Li = oc.left_mult(oc.Octonion.unit(1))
    Rj = oc.right_mult(oc.Octonion.unit(2))
    # doubled-part units e, ek, ei, ej across two transverse columns
    return _column_witness(Li, Rj, [4, 5], [7, 6], [8, 9], n)


def _witness_case4(p: int) -> tuple[np.ndarray, np.ndarray]:
    n = 9 + p
    Li = oc.left_mult(oc.Octonion.unit(1))
    Lj = oc.left_mult(oc.Octonion.unit(2))
    u_idx = [3, 2, 7, 6]  # k, j, ek, ej
    v_idx = [0, 1, 4, 5]  # 1, i, e, ei
    return _column_witness(Li, Lj, u_idx, v_idx, [8, 9, 10, 11], n)


def _long_root_pair() -> tuple[np.ndarray, np.ndarray]:
    X = np.array(
        [[0, 1, 1], [-1, 0, 1], [-1, -1, 0]], dtype=complex
    )
    Y = np.array(
        [[0, 1j, -1j], [1j, 0, 1j], [-1j, 1j, 0]], dtype=complex
    )
    return X, Y


def _witness_su3_long_root(p: int) -> tuple[np.ndarray, np.ndarray]:
    Xc, Yc = _long_root_pair()
    n_quat = p + 2
    out = []
    for M in (Xc, Yc):
        Q = np.zeros((n_quat, n_quat, 4))
        Q[:3, :3, 0] = M.real
        Q[:3, :3, 1] = M.imag
        out.append(al.realify_quaternion(Q))
    return out[0], out[1]


def _witness_su_p4_pair(p: int) -> tuple[np.ndarray, np.ndarray]:
    if p < 2:
        raise UnrealizableFamilyError(
            "su(p+4)-su3-pair", "the paired construction needs p >= 2"
        )
    n_c = p + 4
    Xc, Yc = _long_root_pair()
    # two commuting copies of su(3): coordinates (e1, f1, g1) and (e2, f2, g2);
    # the relative sign of the second copy is resolved against the quaternionic
    # convention so that the su(4)-parts land in the complement of sp(2)
    c1 = [0, 2, 4]
    c2 = [1, 3, 5]
    J0 = np.zeros((4, 4))
    J0[1, 0] = 1.0
    J0[0, 1] = -1.0
    J0[3, 2] = 1.0
    J0[2, 3] = -1.0

    def paired(M: np.ndarray, second_sign: float) -> np.ndarray:
        big = np.zeros((n_c, n_c), dtype=complex)
        for a in range(3):
            for b in range(3):
                big[c1[a], c1[b]] += M[a, b]
                big[c2[a], c2[b]] += second_sign * M[a, b]
        return big

    def transverse_sign(M: np.ndarray) -> float:
        for sign in (-1.0, 1.0):
            blk = paired(M, sign)[:4, :4]
            if np.max(np.abs(-J0 @ blk.conj() @ J0 + blk)) < 1e-12:
                return sign
        raise RuntimeError("no pairing sign puts the block in the sp(2) complement")

    Xb = paired(Xc, transverse_sign(Xc))
    Yb = paired(Yc, transverse_sign(Yc))
    if np.max(np.abs(Xb @ Yb - Yb @ Xb)) > 1e-12:
        raise RuntimeError("paired elements do not commute")
    return al.realify_complex(Xb), al.realify_complex(Yb)


def _witness_su_long_root(p: int) -> tuple[np.ndarray, np.ndarray]:
    n_c = p + 2
    Xc, Yc = _long_root_pair()
    pad = lambda M: np.pad(M, ((0, n_c - 3), (0, n_c - 3)))
    return al.realify_complex(pad(Xc)), al.realify_complex(pad(Yc))


def _witness_so_long_root(p: int) -> tuple[np.ndarray, np.ndarray]:
    Xc, Yc = _long_root_pair()
    pad = lambda M: np.pad(M, ((0, 1), (0, 1)))
    return al.su4_complex_to_so6(pad(Xc)), al.su4_complex_to_so6(pad(Yc))


def _witness_g2_long_root(p=None) -> tuple[np.ndarray, np.ndarray]:
    f3 = al.g2_su3_frame()
    Xc, Yc = _long_root_pair()
    return f3.embed(Xc), f3.embed(Yc)


# ---------------------------------------------------------------------------
# entry table

_ENTRIES: list[CatalogEntry] = [
    CatalogEntry(
        id="spin7plus-so8",
        description="spin copy of so(7) inside so(8), extended to so(9+p); the rank-8 spin-sphere family",
        rank=8,
        realizable=True,
        source=("certified-list/1", "rank8-list/1", "symmetric-table/12", "sphere-table/1"),
        expected_verdict="certified-bracket",
        p_min=0,
        p_max=2,
        curvature_flag=False,
        note="for p=0 the quotient is the 15-sphere and the curvature certificate also applies",
    ),
    CatalogEntry(
        id="g2-spin7",
        description="g2 inside the octonion-unit stabilizer so(7), extended to so(8+p)",
        rank=8,
        realizable=True,
        source=("certified-list/2", "rank8-list/2", "sphere-table/8"),
        expected_verdict="certified-bracket",
        p_min=0,
        p_max=1,
    ),
    CatalogEntry(
        id="su3-su4-spin7",
        description="su(3) inside su(4) realized as so(6), inside so(7)",
        rank=8,
        realizable=True,
        source=("certified-list/3", "rank8-list/3", "sphere-table/2"),
        expected_verdict="certified-bracket",
    ),
    CatalogEntry(
        id="sp2-su4-su5",
        description="sp(2) inside su(4) inside su(5); the rank-6 family",
        rank=6,
        realizable=True,
        source=("certified-list/4", "rank6-list/1", "symmetric-table/11", "sphere-table/1"),
        expected_verdict="certified-bracket",
    ),
    CatalogEntry(
        id="sp-series-rank4",
        description="sp(p) inside sp(1)+sp(p) inside sp(p+1); quaternionic line bundles",
        rank=4,
        realizable=True,
        source=("rank4-list/3", "symmetric-table/3"),
        expected_verdict="certified-curvature",
        p_min=1,
        p_max=None,
        curvature_flag=True,
        use_m1=False,
    ),
    CatalogEntry(
        id="sp-series",
        description="circle + sp(p) inside sp(1)+sp(p) inside sp(p+1); the rank-3 rotation family",
        rank=3,
        realizable=True,
        source=("rank3-list/2", "symmetric-table/3", "sphere-table/1"),
        expected_verdict="certified-curvature",
        p_min=1,
        p_max=None,
        curvature_flag=True,
    ),
    CatalogEntry(
        id="g2-so4-rank4",
        description="weight-one su(2) inside so(4) inside g2; rank-4 orbifold family",
        rank=4,
        realizable=True,
        source=("rank4-list/1", "symmetric-table/5"),
        expected_verdict="numerical",
        use_m1=False,
        note="no bracket or curvature certificate exists: the bracket spans intersect "
        "and the quotient has flat planes; the condition is backed numerically",
    ),
    CatalogEntry(
        id="g2-so4-rank3",
        description="weight-one su(2) + circle inside so(4) inside g2",
        rank=3,
        realizable=True,
        source=("rank3-list/1", "symmetric-table/5", "sphere-table/1"),
        expected_verdict="numerical",
        note="certified only numerically, as in the rank-4 case",
    ),
    CatalogEntry(
        id="spin-octonion-case1",
        description="g2 inside a spin copy of so(7) inside so(9+p): violated for all p >= 0",
        rank=8,
        realizable=True,
        source=("violating-family/1",),
        expected_verdict="violation",
        p_min=0,
        p_max=None,
        witness_ps=(0, 1, 2),
    ),
    CatalogEntry(
        id="spin-octonion-case2",
        description="g2 inside the unit-stabilizer so(7) inside so(9+p): violated for p >= 1",
        rank=8,
        realizable=True,
        source=("violating-family/2",),
        expected_verdict="violation",
        p_min=1,
        p_max=None,
        witness_ps=(1,),
    ),
    CatalogEntry(
        id="spin-octonion-case4",
        description="spin copy of so(7) inside so(8) inside so(9+p): violated for p >= 3",
        rank=8,
        realizable=True,
        source=("violating-family/4", "symmetric-table/12"),
        expected_verdict="violation",
        p_min=3,
        p_max=None,
        witness_ps=(3,),
    ),
    CatalogEntry(
        id="su3-long-root",
        description="sp(1) inside sp(2) inside sp(p+2), violated by a long-root su(3) pair",
        rank=8,
        realizable=True,
        source=("symmetric-table/10",),
        expected_verdict="violation",
        p_min=1,
        p_max=None,
        witness_ps=(1,),
    ),
    CatalogEntry(
        id="su(p+4)-su3-pair",
        description="sp(2) inside su(4) inside su(p+4), violated by a paired su(3) construction",
        rank=6,
        realizable=True,
        source=("symmetric-table/11",),
        expected_verdict="violation",
        p_min=2,
        p_max=None,
        witness_ps=(2,),
        note="p=1 is the certified rank-6 family; the pairing needs p >= 2",
    ),
    CatalogEntry(
        id="remark-limit",
        description="product of g2 with an outer su(2), diagonal isotropy: bracket decays along "
        "a sequence although no exact commuting pair with independent m-parts exists",
        rank=4,
        realizable=True,
        source=("limit-example",),
        expected_verdict="sequence",
        use_m1=False,
    ),
    CatalogEntry(
        id="su-long-root",
        description="torus inside a long-root su(2) inside su(p+2): violated by the su(3) pair",
        rank=3,
        realizable=True,
        source=("symmetric-table/1",),
        expected_verdict="violation",
        p_min=1,
        p_max=None,
        witness_ps=(1,),
    ),
    CatalogEntry(
        id="so-long-root",
        description="torus inside a chiral su(2) of an so(4) block inside so(p+4)",
        rank=3,
        realizable=True,
        source=("symmetric-table/2",),
        expected_verdict="violation",
        p_min=2,
        p_max=2,
        witness_ps=(2,),
        note="p=1 is not covered: so(5) has no pair of long roots at angle pi/3",
    ),
    CatalogEntry(
        id="g2-long-root",
        description="torus + weight-three su(2) inside so(4) inside g2 (the mirror of the "
        "certified rank-3 family): violated by the long-root su(3) pair",
        rank=3,
        realizable=True,
        source=("symmetric-table/4",),
        expected_verdict="violation",
        witness_ps=(0,),
    ),
    # exceptional ambients: recorded, not realizable here
    CatalogEntry(
        id="f4-case",
        description="g2 inside the unit-stabilizer so(7) inside the 52-dimensional exceptional algebra",
        rank=8,
        realizable=False,
        source=("violating-family/3",),
        expected_verdict="violation",
        note="ambient algebra not realized in this package",
    ),
    CatalogEntry(
        id="f4-su2-sp3",
        description="long-root su(2) pair in the 52-dimensional exceptional algebra",
        rank=None,
        realizable=False,
        source=("symmetric-table/6",),
        note="ambient algebra not realized in this package",
    ),
    CatalogEntry(
        id="e6-su2-su6",
        description="long-root su(2) pair in the 78-dimensional exceptional algebra",
        rank=None,
        realizable=False,
        source=("symmetric-table/7",),
        note="ambient algebra not realized in this package",
    ),
    CatalogEntry(
        id="e7-su2-spin12",
        description="long-root su(2) pair in the 133-dimensional exceptional algebra",
        rank=None,
        realizable=False,
        source=("symmetric-table/8",),
        note="ambient algebra not realized in this package",
    ),
    CatalogEntry(
        id="e8-su2-e7",
        description="long-root su(2) pair in the 248-dimensional exceptional algebra",
        rank=None,
        realizable=False,
        source=("symmetric-table/9",),
        note="ambient algebra not realized in this package",
    ),
    CatalogEntry(
        id="f4-spin9",
        description="spin(9) with spin-type isotropy in the 52-dimensional exceptional algebra",
        rank=None,
        realizable=False,
        source=("symmetric-table/13",),
        note="ambient algebra not realized in this package",
    ),
    CatalogEntry(
        id="e6-spin10",
        description="spin(10) with spin-type isotropy in the 78-dimensional exceptional algebra",
        rank=None,
        realizable=False,
        source=("symmetric-table/14",),
        note="ambient algebra not realized in this package",
    ),
    CatalogEntry(
        id="e7-spin12",
        description="spin(12) with spin-type isotropy in the 133-dimensional exceptional algebra",
        rank=None,
        realizable=False,
        source=("symmetric-table/15",),
        note="ambient algebra not realized in this package",
    ),
    CatalogEntry(
        id="e8-spin16",
        description="spin(16) with spin-type isotropy in the 248-dimensional exceptional algebra",
        rank=None,
        realizable=False,
        source=("symmetric-table/16",),
        note="ambient algebra not realized in this package",
    ),
    # quotient and product extensions: reduce to the core triples
    CatalogEntry(
        id="spin7plus-so8-quotient",
        description="products and central quotients of the rank-8 spin-sphere family",
        rank=8,
        realizable=False,
        source=("rank8-list/4a",),
        reduces_to="spin7plus-so8",
        note="extension data is metadata only; the condition lives on the core triple",
    ),
    CatalogEntry(
        id="g2-spin7-quotient",
        description="products and central quotients of the g2-in-so(7) family",
        rank=8,
        realizable=False,
        source=("rank8-list/4b",),
        reduces_to="g2-spin7",
    ),
    CatalogEntry(
        id="su3-su4-spin7-quotient",
        description="circle extensions of the complex rank-8 family",
        rank=8,
        realizable=False,
        source=("rank8-list/4c",),
        reduces_to="su3-su4-spin7",
    ),
    CatalogEntry(
        id="sp2-su4-su5-quotient",
        description="products and central quotients of the rank-6 family",
        rank=6,
        realizable=False,
        source=("rank6-list/2",),
        reduces_to="sp2-su4-su5",
    ),
    CatalogEntry(
        id="sp-series-quotient",
        description="group extensions of the rank-3 rotation family",
        rank=3,
        realizable=False,
        source=("rank3-list/2",),
        reduces_to="sp-series",
    ),
    CatalogEntry(
        id="g2-so4-rank4-quotient",
        description="right-multiplication extensions of the rank-4 orbifold family",
        rank=4,
        realizable=False,
        source=("rank4-list/2",),
        reduces_to="g2-so4-rank4",
    ),
    CatalogEntry(
        id="sp-series-rank4-quotient",
        description="right-multiplication extensions of the quaternionic rank-4 family",
        rank=4,
        realizable=False,
        source=("rank4-list/4",),
        reduces_to="sp-series-rank4",
    ),
]

_BY_ID = {e.id: e for e in _ENTRIES}

_BUILDERS = {
    "spin7plus-so8": _build_spin7plus_so8,
    "g2-spin7": _build_g2_spin7,
    "su3-su4-spin7": lambda: _build_su3_su4_spin7(),
    "sp2-su4-su5": lambda: _build_sp2_su4_su5(),
    "sp-series-rank4": _build_sp_series_rank4,
    "sp-series": _build_sp_series_rank3,
    "g2-so4-rank4": lambda: _build_g2_so4_rank4(),
    "g2-so4-rank3": lambda: _build_g2_so4_rank3(),
    "spin-octonion-case1": _build_case1,
    "spin-octonion-case2": _build_case2,
    "spin-octonion-case4": _build_case4,
    "su3-long-root": _build_su3_long_root,
    "su(p+4)-su3-pair": _build_su_p4_pair,
    "remark-limit": lambda: _build_remark_limit(),
    "su-long-root": _build_su_long_root,
    "so-long-root": _build_so_long_root,
    "g2-long-root": lambda: _build_g2_long_root(),
}

_WITNESSES = {
    "spin-octonion-case1": _witness_case1,
    "spin-octonion-case2": _witness_case2,
    "spin-octonion-case4": _witness_case4,
    "su3-long-root": _witness_su3_long_root,
    "su(p+4)-su3-pair": _witness_su_p4_pair,
    "su-long-root": _witness_su_long_root,
    "so-long-root": _witness_so_long_root,
    "g2-long-root": _witness_g2_long_root,
}

# spec'd alias for the p=0 stabilizer triple
_ALIASES = {"g2-so0-7-in-so8": ("g2-spin7", 0)}


# ---------------------------------------------------------------------------
# public API


def entries() -> list[CatalogEntry]:
    return list(_ENTRIES)


def entry(entry_id: str) -> CatalogEntry:
    if entry_id in _BY_ID:
        return _BY_ID[entry_id]
    raise UnknownEntryError(entry_id)


def list_entries(
    rank: int | None = None,
    realizable: bool | None = None,
    expected: str | None = None,
) -> list[CatalogEntry]:
    out = []
    for e in _ENTRIES:
        if rank is not None and e.rank != rank:
            continue
        if realizable is not None and e.realizable != realizable:
            continue
        if expected is not None and e.expected_verdict != expected:
            continue
        out.append(e)
    return sorted(out, key=lambda e: e.id)


def parse_entry_id(text: str) -> tuple[str, int | None]:
    """Parse 'family-name[:p=<int>]' into (family, p)."""
    m = re.fullmatch(r"([^:]+?)(?::p=(-?\d+))?", text.strip())
    if not m:
        raise UnknownEntryError(text)
    name = m.group(1)
    p = int(m.group(2)) if m.group(2) is not None else None
    if name in _ALIASES:
        base, fixed_p = _ALIASES[name]
        return base, fixed_p if p is None else p
    return name, p


def build(entry_id: str, p: int | None = None) -> Triple:
    e = entry(entry_id)
    if not e.realizable:
        raise UnrealizableFamilyError(entry_id, e.note or "not realizable")
    p = e.check_p(p)
    builder = _BUILDERS[entry_id]
    t = builder(p) if e.parametrized else builder()
    t.validate()
    return t


def build_with_witness(
    entry_id: str, p: int | None = None
) -> tuple[Triple, np.ndarray, np.ndarray]:
    e = entry(entry_id)
    if not e.realizable:
        raise UnrealizableFamilyError(entry_id, e.note or "not realizable")
    if entry_id not in _WITNESSES:
        raise UnrealizableFamilyError(entry_id, "no recorded violating pair")
    if e.parametrized and p is None:
        p = e.witness_ps[0] if e.witness_ps else e.p_min
    p = e.check_p(p)
    t = build(entry_id, p)
    X, Y = _WITNESSES[entry_id](p if e.parametrized else None) if e.parametrized else _WITNESSES[entry_id]()
    return t, X, Y


def to_json() -> list[dict]:
    out = []
    for e in _ENTRIES:
        out.append(
            {
                "id": e.id,
                "description": e.description,
                "rank": e.rank,
                "realizable": e.realizable,
                "source": list(e.source),
                "expected_verdict": e.expected_verdict,
                "p_min": e.p_min,
                "p_max": e.p_max,
                "witness_ps": list(e.witness_ps),
                "curvature_flag": e.curvature_flag,
                "use_m1": e.use_m1,
                "reduces_to": e.reduces_to,
                "note": e.note,
            }
        )
    return out


# expected decomposition dimensions for the realizable families, frozen from
# the classification data (sphere rows fix k0/h0/h1/m1; ambient dimensions fix
# the rest); tests compare these against decompose() exactly
EXPECTED_DIMS: dict[tuple[str, int | None], dict] = {
    ("spin7plus-so8", 0): {"m": 7, "s": 8, "k0": 28, "h0": 21, "hprime": 0, "h1": 21, "m1": 7, "l": 28, "z_l": 0, "components": [8]},
    ("spin7plus-so8", 1): {"m": 7, "s": 17, "k0": 28, "h0": 21, "hprime": 0, "h1": 21, "m1": 7, "l": 28, "z_l": 1, "components": [16]},
    ("spin7plus-so8", 2): {"m": 7, "s": 27, "k0": 28, "h0": 21, "hprime": 0, "h1": 21, "m1": 7, "l": 28, "z_l": 3, "components": [24]},
    ("g2-spin7", 0): {"m": 7, "s": 7, "k0": 21, "h0": 14, "hprime": 0, "h1": 14, "m1": 7, "l": 21, "z_l": 0, "components": [7]},
    ("g2-spin7", 1): {"m": 7, "s": 15, "k0": 21, "h0": 14, "hprime": 0, "h1": 14, "m1": 7, "l": 21, "z_l": 1, "components": [14]},
    ("su3-su4-spin7", None): {"m": 7, "s": 6, "k0": 15, "h0": 8, "hprime": 0, "h1": 9, "m1": 6, "l": 15, "z_l": 0, "components": [6]},
    ("sp2-su4-su5", None): {"m": 5, "s": 9, "k0": 15, "h0": 10, "hprime": 0, "h1": 10, "m1": 5, "l": 15, "z_l": 1, "components": [8]},
    ("sp-series-rank4", 1): {"m": 3, "s": 4, "k0": 3, "h0": 0, "hprime": 3, "h1": 3, "m1": 0, "l": 0, "components": []},
    ("sp-series", 1): {"m": 2, "s": 4, "k0": 3, "h0": 1, "hprime": 3, "h1": 1, "m1": 2, "l": 3, "z_l": 3, "components": [4]},
    ("g2-so4-rank4", None): {"m": 3, "s": 8, "k0": 3, "h0": 0, "hprime": 3, "h1": 3, "m1": 0, "l": 0, "components": []},
    ("g2-so4-rank3", None): {"m": 2, "s": 8, "k0": 3, "h0": 1, "hprime": 3, "h1": 1, "m1": 2, "l": 3, "z_l": 3, "components": [8]},
    ("spin-octonion-case1", 0): {"m": 7, "s": 15, "k0": 21, "h0": 14, "hprime": 0, "h1": 14, "m1": 7, "l": 21, "z_l": 0, "components": [7, 8]},
    ("spin-octonion-case2", 1): {"m": 7, "s": 24, "k0": 21, "h0": 14, "hprime": 0, "h1": 14, "m1": 7, "l": 21, "z_l": 3, "components": [21]},
    ("spin-octonion-case4", 3): {"m": 7, "s": 38, "k0": 28, "h0": 21, "hprime": 0, "h1": 21, "m1": 7, "l": 28, "z_l": 6, "components": [32]},
    ("su3-long-root", 1): {"m": 7, "s": 11, "k0": 10, "h0": 3, "hprime": 0, "h1": 6, "m1": 4, "l": 10, "z_l": 3, "components": [8]},
    ("su(p+4)-su3-pair", 2): {"m": 5, "s": 20, "k0": 15, "h0": 10, "hprime": 0, "h1": 10, "m1": 5, "l": 15, "z_l": 4, "components": [16]},
    ("remark-limit", None): {"m": 3, "s": 11, "k0": 3, "h0": 0, "hprime": 3, "h1": 3, "m1": 0, "l": 0, "components": []},
    ("su-long-root", 1): {"m": 2, "s": 5, "k0": 3, "h0": 1, "hprime": 0, "h1": 1, "m1": 2, "l": 3, "z_l": 1, "components": [4]},
    ("so-long-root", 2): {"m": 2, "s": 12, "k0": 3, "h0": 1, "hprime": 0, "h1": 1, "m1": 2, "l": 3, "z_l": 4, "components": [8]},
    ("g2-long-root", None): {"m": 2, "s": 8, "k0": 3, "h0": 1, "hprime": 3, "h1": 1, "m1": 2, "l": 3, "z_l": 3, "components": [8]},
}


# transitive sphere actions with positive-dimensional stabilizer: the rows fix
# the enlarged stabilizer h1 and the module m1 that the decomposition must
# reproduce (dims for the smallest member of each series)
SPHERE_ROWS = [
    {"row": 1, "sphere": "S^n", "k0": "so(n+1)", "h0": "so(n)", "h1": "so(n)", "m1_dim": "n", "l": "so(n+1)"},
    {"row": 2, "sphere": "S^(2m+1)", "k0": "t + su(m+1)", "h0": "t + su(m)", "h1": "t + u(m)", "m1_dim": "2m", "l": "su(m+1)"},
    {"row": 3, "sphere": "S^(4m+3)", "k0": "t + sp(m+1)", "h0": "t + sp(m)", "h1": "t + sp(1) + sp(m)", "m1_dim": "4m", "l": "sp(m+1)"},
    {"row": 7, "sphere": "S^6", "k0": "g2", "h0": "su(3)", "h1": "su(3)", "m1_dim": "6", "l": "g2"},
    {"row": 8, "sphere": "S^7", "k0": "spin(7)", "h0": "g2", "h1": "g2", "m1_dim": "7", "l": "spin(7)"},
    {"row": 9, "sphere": "S^15", "k0": "spin(9)", "h0": "spin(7)", "h1": "spin(8)", "m1_dim": "8", "l": "spin(9)"},
]
