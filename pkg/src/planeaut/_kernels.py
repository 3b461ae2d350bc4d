"""Hot loops over all points of P^2(F_q): numba kernels with numpy fallbacks.

Field elements are encoded as ints in [0, q): the base-p digits are the
coefficients of the element in the standard basis.  Multiplication goes
through exp/log tables, addition digit by digit.

Set ``PLANEAUT_NO_JIT=1`` to force the pure-numpy path.
"""

from __future__ import annotations

import os
from functools import lru_cache

import numpy as np

USE_JIT = os.environ.get("PLANEAUT_NO_JIT", "") not in ("1", "true", "yes")

if USE_JIT:
    try:
        from numba import njit
    except ImportError:  # pragma: no cover
        USE_JIT = False

if not USE_JIT:

    def njit(*args, **kwargs):
        if args and callable(args[0]):
            return args[0]
        return lambda f: f


class FieldTables:
    """Flat lookup tables for F_q used by the kernels."""

    def __init__(self, L):
        self.p = L.p
        self.e = L.e
        self.q = L.q
        self.exp = np.ascontiguousarray(L.exp_table, dtype=np.int64)
        self.log = np.ascontiguousarray(L.log_table, dtype=np.int64)
        codes = np.arange(self.q, dtype=np.int64)
        self.digits = np.stack([(codes // self.p**t) % self.p for t in range(self.e)], axis=1)
        self.place = self.p ** np.arange(self.e, dtype=np.int64)


@lru_cache(maxsize=4)
def all_points(q: int) -> np.ndarray:
    """Normalized representatives of P^2(F_q) as a read-only (q^2+q+1, 3) code array."""
    a = np.arange(q, dtype=np.int64)
    yy, zz = np.meshgrid(a, a, indexing="ij")
    affine = np.stack([np.ones(q * q, dtype=np.int64), yy.ravel(), zz.ravel()], axis=1)
    line = np.stack([np.zeros(q, dtype=np.int64), np.ones(q, dtype=np.int64), a], axis=1)
    pt = np.array([[0, 0, 1]], dtype=np.int64)
    out = np.concatenate([affine, line, pt])
    out.flags.writeable = False
    return out


@njit(cache=True)
def _fmul(a, b, exp, log, q):
    if a == 0 or b == 0:
        return 0
    return exp[(log[a] + log[b]) % (q - 1)]


@njit(cache=True)
def _eval_jit(mono, coef, pts, exp, log, digits, p, e, q):
    n = pts.shape[0]
    out = np.zeros(n, dtype=np.int64)
    qm = q - 1
    acc = np.zeros(e, dtype=np.int64)
    for r in range(n):
        lx = log[pts[r, 0]]
        ly = log[pts[r, 1]]
        lz = log[pts[r, 2]]
        acc[:] = 0
        for t in range(mono.shape[0]):
            i = mono[t, 0]
            j = mono[t, 1]
            k = mono[t, 2]
            if (i > 0 and lx < 0) or (j > 0 and ly < 0) or (k > 0 and lz < 0):
                continue
            s = log[coef[t]]
            if i > 0:
                s += i * lx
            if j > 0:
                s += j * ly
            if k > 0:
                s += k * lz
            v = exp[s % qm]
            # digits are summed unreduced; one reduction per point
            for u in range(e):
                acc[u] += digits[v, u]
        val = 0
        place = 1
        for u in range(e):
            val += (acc[u] % p) * place
            place *= p
        out[r] = val
    return out


def _eval_numpy(mono, coef, pts, tab: FieldTables):
    qm = tab.q - 1
    lx, ly, lz = tab.log[pts[:, 0]], tab.log[pts[:, 1]], tab.log[pts[:, 2]]
    acc = np.zeros((pts.shape[0], tab.e), dtype=np.int64)
    for (i, j, k), c in zip(mono, coef):
        s = np.full(pts.shape[0], tab.log[c], dtype=np.int64)
        ok = np.ones(pts.shape[0], dtype=bool)
        for n, lv in ((i, lx), (j, ly), (k, lz)):
            if n:
                ok &= lv >= 0
                s += n * lv
        val = np.where(ok, tab.exp[s % qm], 0)
        acc += tab.digits[val]
    return (acc % tab.p) @ tab.place


def eval_form(form, pts: np.ndarray, L, tab: FieldTables | None = None) -> np.ndarray:
    """Values of a HomPoly (over F_p or L) at coded points of P^2(L), as codes."""
    tab = tab or FieldTables(L)
    if not form.terms:
        return np.zeros(pts.shape[0], dtype=np.int64)
    emb = (lambda c: c) if form.field == L else L.base_embed
    mono = np.array([list(m) for m in form.terms], dtype=np.int64)
    coef = np.array([L.encode(emb(c)) for c in form.terms.values()], dtype=np.int64)
    if USE_JIT:
        return _eval_jit(mono, coef, pts, tab.exp, tab.log, tab.digits, tab.p, tab.e, tab.q)
    return _eval_numpy(mono, coef, pts, tab)


def common_zeros(forms, L, pts: np.ndarray | None = None) -> list[tuple]:
    """Coded points of P^2(L) where every form vanishes."""
    tab = FieldTables(L)
    pts = all_points(L.q) if pts is None else pts
    for f in forms:
        if not len(pts):
            break
        pts = pts[eval_form(f, pts, L, tab) == 0]
    return [tuple(int(c) for c in row) for row in pts]


# ---------------------------------------------------------------------------
# projectivity search for the exhaustive automorphism oracle

MAX_TABLE_Q = 4096


class OpTables:
    """Full addition/multiplication tables; only for small q."""

    def __init__(self, tab: FieldTables):
        q = tab.q
        if q > MAX_TABLE_Q:
            raise ValueError(f"F_{q} is too large for table arithmetic")
        self.q = q
        codes = np.arange(q, dtype=np.int64)
        dig = tab.digits
        self.add = (((dig[:, None, :] + dig[None, :, :]) % tab.p) @ tab.place).astype(np.int64)
        self.neg = (((-dig) % tab.p) @ tab.place).astype(np.int64)
        lg = tab.log
        s = (lg[:, None] + lg[None, :]) % (q - 1)
        mul = tab.exp[s]
        mul[0, :] = 0
        mul[:, 0] = 0
        self.mul = np.ascontiguousarray(mul, dtype=np.int64)
        inv = np.zeros(q, dtype=np.int64)
        inv[1:] = tab.exp[(-lg[1:]) % (q - 1)]
        self.inv = inv
        self.codes = codes


def point_index(pts: np.ndarray, q: int) -> np.ndarray:
    """Position of normalized coded points in the all_points ordering."""
    return np.where(
        pts[:, 0] == 1,
        pts[:, 1] * q + pts[:, 2],
        np.where(pts[:, 1] == 1, q * q + pts[:, 2], q * q + q),
    )


@njit(cache=True)
def _det3c(m, ADD, MUL, NEG):
    a = MUL[m[0], ADD[MUL[m[4], m[8]], NEG[MUL[m[5], m[7]]]]]
    b = MUL[m[1], ADD[MUL[m[3], m[8]], NEG[MUL[m[5], m[6]]]]]
    c = MUL[m[2], ADD[MUL[m[3], m[7]], NEG[MUL[m[4], m[6]]]]]
    return ADD[ADD[a, NEG[b]], c]


@njit(cache=True)
def _frame_matrix(c0, c1, c2, c3, ADD, MUL, NEG, INV, out):
    """Columns lambda_k * c_k with sum equal to c3; False if not a frame."""
    m = np.empty(9, dtype=np.int64)
    for r in range(3):
        m[3 * r] = c0[r]
        m[3 * r + 1] = c1[r]
        m[3 * r + 2] = c2[r]
    D = _det3c(m, ADD, MUL, NEG)
    if D == 0:
        return False
    dinv = INV[D]
    t = np.empty(9, dtype=np.int64)
    for k in range(3):
        for s in range(9):
            t[s] = m[s]
        for r in range(3):
            t[3 * r + k] = c3[r]
        lam = MUL[_det3c(t, ADD, MUL, NEG), dinv]
        if lam == 0:
            return False
        for r in range(3):
            out[3 * r + k] = MUL[m[3 * r + k], lam]
    return True


@njit(cache=True)
def _frame_search_jit(S, Ainv, member, lo, hi, q, ADD, MUL, NEG, INV, cap):
    n = S.shape[0]
    out = np.zeros((cap, 9), dtype=np.int64)
    cnt = 0
    B = np.empty(9, dtype=np.int64)
    M = np.empty(9, dtype=np.int64)
    img = np.empty(3, dtype=np.int64)
    for i0 in range(lo, hi):
        for i1 in range(n):
            if i1 == i0:
                continue
            for i2 in range(n):
                if i2 == i0 or i2 == i1:
                    continue
                for i3 in range(n):
                    if i3 == i0 or i3 == i1 or i3 == i2:
                        continue
                    if not _frame_matrix(S[i0], S[i1], S[i2], S[i3], ADD, MUL, NEG, INV, B):
                        continue
                    for r in range(3):
                        for c in range(3):
                            acc = 0
                            for t in range(3):
                                acc = ADD[acc, MUL[B[3 * r + t], Ainv[3 * t + c]]]
                            M[3 * r + c] = acc
                    ok = True
                    for s in range(n):
                        for r in range(3):
                            acc = 0
                            for t in range(3):
                                acc = ADD[acc, MUL[M[3 * r + t], S[s, t]]]
                            img[r] = acc
                        if img[0] != 0:
                            iv = INV[img[0]]
                            idx = MUL[img[1], iv] * q + MUL[img[2], iv]
                        elif img[1] != 0:
                            idx = q * q + MUL[img[2], INV[img[1]]]
                        else:
                            idx = q * q + q
                        if not member[idx]:
                            ok = False
                            break
                    if ok:
                        if cnt < cap:
                            for s in range(9):
                                out[cnt, s] = M[s]
                        cnt += 1
    return out, cnt


def _frame_search_numpy(S, Ainv, member, lo, hi, q, ops: OpTables):
    """Vectorized over target triples; loops over the fourth point."""
    ADD, MUL, NEG, INV = ops.add, ops.mul, ops.neg, ops.inv
    n = S.shape[0]
    i0, i1, i2 = np.meshgrid(np.arange(lo, hi), np.arange(n), np.arange(n), indexing="ij")
    i0, i1, i2 = i0.ravel(), i1.ravel(), i2.ravel()
    keep = (i0 != i1) & (i0 != i2) & (i1 != i2)
    i0, i1, i2 = i0[keep], i1[keep], i2[keep]
    cols = [S[i0], S[i1], S[i2]]
    m = np.stack([cols[c][:, r] for r in range(3) for c in range(3)], axis=1)

    def det(a):
        x = MUL[a[:, 0], ADD[MUL[a[:, 4], a[:, 8]], NEG[MUL[a[:, 5], a[:, 7]]]]]
        y = MUL[a[:, 1], ADD[MUL[a[:, 3], a[:, 8]], NEG[MUL[a[:, 5], a[:, 6]]]]]
        z = MUL[a[:, 2], ADD[MUL[a[:, 3], a[:, 7]], NEG[MUL[a[:, 4], a[:, 6]]]]]
        return ADD[ADD[x, NEG[y]], z]

    D = det(m)
    found = []
    for i3 in range(n):
        c3 = S[i3]
        sel = (D != 0) & (i0 != i3) & (i1 != i3) & (i2 != i3)
        if not sel.any():
            continue
        mm, dinv = m[sel], INV[D[sel]]
        B = np.empty_like(mm)
        good = np.ones(len(mm), dtype=bool)
        for k in range(3):
            t = mm.copy()
            for r in range(3):
                t[:, 3 * r + k] = c3[r]
            lam = MUL[det(t), dinv]
            good &= lam != 0
            for r in range(3):
                B[:, 3 * r + k] = MUL[mm[:, 3 * r + k], lam]
        B = B[good]
        M = np.zeros_like(B)
        for r in range(3):
            for c in range(3):
                acc = np.zeros(len(B), dtype=np.int64)
                for t in range(3):
                    acc = ADD[acc, MUL[B[:, 3 * r + t], Ainv[3 * t + c]]]
                M[:, 3 * r + c] = acc
        alive = np.ones(len(M), dtype=bool)
        for s in range(n):
            if not alive.any():
                break
            Ma = M[alive]
            img = [np.zeros(len(Ma), dtype=np.int64) for _ in range(3)]
            for r in range(3):
                for t in range(3):
                    img[r] = ADD[img[r], MUL[Ma[:, 3 * r + t], S[s, t]]]
            iv0 = INV[img[0]]
            iv1 = INV[img[1]]
            idx = np.where(
                img[0] != 0,
                MUL[img[1], iv0] * q + MUL[img[2], iv0],
                np.where(img[1] != 0, q * q + MUL[img[2], iv1], q * q + q),
            )
            ok = member[idx]
            pos = np.flatnonzero(alive)
            alive[pos[~ok]] = False
        found.append(M[alive])
    return np.concatenate(found) if found else np.zeros((0, 9), dtype=np.int64)


def find_frame(S: np.ndarray, tab: FieldTables):
    """Indices of four points of S with no three collinear, or None."""
    ops = OpTables(tab)
    n = len(S)
    B = np.empty(9, dtype=np.int64)
    for i0 in range(n):
        for i1 in range(i0 + 1, n):
            for i2 in range(i1 + 1, n):
                for i3 in range(i2 + 1, n):
                    if _frame_matrix(S[i0], S[i1], S[i2], S[i3], ops.add, ops.mul, ops.neg, ops.inv, B):
                        return (i0, i1, i2, i3)
    return None


def _inverse_codes(A, ops: OpTables):
    m = A
    D = _det3c(m, ops.add, ops.mul, ops.neg)
    dinv = ops.inv[D]
    out = np.empty(9, dtype=np.int64)
    for r in range(3):
        for c in range(3):
            rows = [i for i in range(3) if i != c]
            cols = [j for j in range(3) if j != r]
            x = ops.add[
                ops.mul[m[3 * rows[0] + cols[0]], m[3 * rows[1] + cols[1]]],
                ops.neg[ops.mul[m[3 * rows[0] + cols[1]], m[3 * rows[1] + cols[0]]]],
            ]
            if (r + c) % 2:
                x = ops.neg[x]
            out[3 * r + c] = ops.mul[x, dinv]
    return out


def _search_chunk(args):
    S, Ainv, member, lo, hi, q, tab_src, cap = args
    ops = OpTables(tab_src)
    if USE_JIT:
        out, cnt = _frame_search_jit(S, Ainv, member, lo, hi, q, ops.add, ops.mul, ops.neg, ops.inv, cap)
        if cnt > cap:
            raise RuntimeError(f"more than {cap} candidate maps")
        return out[:cnt]
    return _frame_search_numpy(S, Ainv, member, lo, hi, q, ops)


def frame_search(S: np.ndarray, frame, tab: FieldTables, jobs: int = 1, cap: int = 200_000) -> np.ndarray:
    """Coded 3x3 matrices (rows flattened) mapping the frame into S and S into itself."""
    ops = OpTables(tab)
    S = np.ascontiguousarray(S, dtype=np.int64)
    q = tab.q
    A = np.empty(9, dtype=np.int64)
    f = [S[i] for i in frame]
    if not _frame_matrix(f[0], f[1], f[2], f[3], ops.add, ops.mul, ops.neg, ops.inv, A):
        raise ValueError("frame points are not in general position")
    Ainv = _inverse_codes(A, ops)
    member = np.zeros(q * q + q + 1, dtype=np.bool_)
    member[point_index(S, q)] = True
    n = len(S)
    jobs = max(1, min(jobs, n))
    bounds = np.linspace(0, n, jobs + 1).astype(int)
    chunks = [(S, Ainv, member, int(lo), int(hi), q, tab, cap) for lo, hi in zip(bounds[:-1], bounds[1:])]
    if jobs == 1:
        parts = [_search_chunk(chunks[0])]
    else:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(jobs) as pool:
            parts = list(pool.map(_search_chunk, chunks))
    return np.concatenate(parts) if parts else np.zeros((0, 9), dtype=np.int64)
