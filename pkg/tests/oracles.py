"""Independent reference implementations used as test oracles.

Nothing here calls into ``semistat``'s linear algebra: tensor products are
built with ``einsum`` index gymnastics on numpy arrays (object arrays of
Fractions over Q, int64 reduced mod p over GF(p)), so agreement with the
library is a genuine cross-check rather than a tautology.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

import numpy as np


# -- arithmetic backend --------------------------------------------------------

class Arith:
    def __init__(self, p: int | None):
        self.p = p

    @classmethod
    def parse(cls, text: str) -> Arith:
        return cls(None if text == "Q" else int(text[3:-1]))

    def arr(self, rows) -> np.ndarray:
        if self.p is None:
            return np.array([[Fraction(x) for x in r] for r in rows], dtype=object).reshape(len(rows), -1)
        return np.array(rows, dtype=np.int64).reshape(len(rows), -1) % self.p

    def red(self, a: np.ndarray) -> np.ndarray:
        return a if self.p is None else a % self.p

    def mul(self, *ms: np.ndarray) -> np.ndarray:
        out = ms[0]
        for m in ms[1:]:
            out = self.red(np.einsum("ij,jk->ik", out, m))
        return out

    def tensor(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        (r1, c1), (r2, c2) = a.shape, b.shape
        return self.red(np.einsum("ij,kl->ikjl", a, b).reshape(r1 * r2, c1 * c2))

    def eye(self, n: int) -> np.ndarray:
        if self.p is None:
            return np.array([[Fraction(int(i == j)) for j in range(n)] for i in range(n)], dtype=object).reshape(n, n)
        return np.eye(n, dtype=np.int64)

    def flip(self, d1: int, d2: int) -> np.ndarray:
        out = self.eye(d1 * d2) * 0
        for i in range(d1):
            for j in range(d2):
                out[j * d1 + i, i * d2 + j] = 1
        return out

    @staticmethod
    def eq(a: np.ndarray, b: np.ndarray) -> bool:
        return a.shape == b.shape and bool((a == b).all())


def rows_of(m) -> list[list]:
    """Matrix -> plain rows, through the public accessor only."""
    return m.to_rows()


# -- generalized inverses --------------------------------------------------------

def brute_ginverses(rows: list[list[int]], p: int, reflexive: bool = True) -> set[tuple]:
    """Every X over GF(p) with MXM = M (and XMX = X), by exhaustive sweep."""
    M = np.array(rows, dtype=np.int64).reshape(len(rows), -1) % p
    r, c = M.shape
    cands = np.array(list(itertools.product(range(p), repeat=r * c)), dtype=np.int64).reshape(-1, c, r)
    mxm = np.einsum("ij,njk,kl->nil", M, cands, M) % p
    ok = (mxm == M).all(axis=(1, 2))
    if reflexive:
        xmx = np.einsum("nij,jk,nkl->nil", cands, M, cands) % p
        ok &= (xmx == cands).all(axis=(1, 2))
    return {tuple(int(v) for v in x.reshape(-1)) for x in cands[ok]}


def idempotent_count(n: int, p: int) -> int:
    cands = np.array(list(itertools.product(range(p), repeat=n * n)), dtype=np.int64).reshape(-1, n, n)
    return int(((np.einsum("nij,njk->nik", cands, cands) % p) == cands).all(axis=(1, 2)).sum())


# -- Yang-Baxter equations in index form ---------------------------------------

def _as4(R: np.ndarray, d: int) -> np.ndarray:
    return R.reshape(d, d, d, d)


def braid_sides(R: np.ndarray, d: int, p: int | None = None):
    """Both sides of ``(R(x)1)(1(x)R)(R(x)1) = (1(x)R)(R(x)1)(1(x)R)`` as 6-index tensors."""
    T = _as4(R, d)

    def red(a):
        return a if p is None else a % p

    # operator composition on 3-fold tensors, indices (out a b c, in a b c)
    r12 = np.einsum("abij,ck->abcijk", T, np.eye(d, dtype=R.dtype))
    r23 = np.einsum("ai,bcjk->abcijk", np.eye(d, dtype=R.dtype), T)

    def comp(x, y):
        return red(np.einsum("abcijk,ijkuvw->abcuvw", x, y))

    return comp(comp(r12, r23), r12), comp(comp(r23, r12), r23)


def braid_relation_holds(R: np.ndarray, d: int, p: int | None = None) -> bool:
    lhs, rhs = braid_sides(R, d, p)
    return bool((lhs == rhs).all())


def regular_ybe_sides(e: np.ndarray, R: np.ndarray, d: int, p: int | None = None):
    """``(e(x)R)(R(x)e)(e(x)R)`` and ``(R(x)e)(e(x)R)(R(x)e)`` flattened to d^3 x d^3."""
    T = _as4(R, d)

    def red(a):
        return a if p is None else a % p

    eR = red(np.einsum("ai,bcjk->abcijk", e, T))
    Re = red(np.einsum("abij,ck->abcijk", T, e))

    def comp(x, y):
        return red(np.einsum("abcijk,ijkuvw->abcuvw", x, y))

    n = d ** 3
    return comp(comp(eR, Re), eR).reshape(n, n), comp(comp(Re, eR), Re).reshape(n, n)


def brute_regular_ybe(p: int, d: int, e_rows, batch: int = 4096) -> list[tuple]:
    """Second, independent sweep of ``p**(d**4)`` operators for commute + regular YBE.

    Candidates are produced by ``itertools.product`` (lexicographic in the
    row-major entries) and tested in tensor-index form. Star partners exist
    for every matrix over a field, so that constraint removes nothing.
    """
    e = np.array(e_rows, dtype=np.int64) % p
    n = d * d
    ee = np.einsum("ai,bj->abij", e, e).reshape(n, n)
    out = []
    it = itertools.product(range(p), repeat=n * n)
    while True:
        chunk = list(itertools.islice(it, batch))
        if not chunk:
            break
        Rs = np.array(chunk, dtype=np.int64).reshape(-1, n, n)
        comm = ((np.einsum("bij,jk->bik", Rs, ee) - np.einsum("ij,bjk->bik", ee, Rs)) % p == 0).all(axis=(1, 2))
        T = Rs.reshape(-1, d, d, d, d)
        eR = np.einsum("ai,zbcjk->zabcijk", e, T) % p
        Re = np.einsum("zabij,ck->zabcijk", T, e) % p

        def comp(x, y):
            return np.einsum("zabcijk,zijkuvw->zabcuvw", x, y) % p

        lhs = comp(comp(eR, Re), eR)
        rhs = comp(comp(Re, eR), Re)
        ybe = (lhs == rhs).all(axis=(1, 2, 3, 4, 5, 6))
        for row, keep in zip(chunk, comm & ybe):
            if keep:
                out.append(tuple(row))
    return out


# -- JSON-level axiom oracle -----------------------------------------------------

def _conv(A: Arith, m, D, s, t):
    return A.mul(m, A.tensor(s, t), D)


def _lconv(A: Arith, m, D, *fs):
    out = fs[0]
    for f in fs[1:]:
        out = _conv(A, m, D, out, f)
    return out


def _loop(A: Arith, arrows, n, count):
    N = len(arrows)
    out = arrows[n]
    for k in range(1, count):
        out = A.mul(arrows[(n + k) % N], out)
    return out


def _cocycle_ok(A: Arith, chain) -> bool:
    fs = [A.arr(f) for f in chain["f"]]
    N = len(fs)
    for n in range(N):
        if not A.eq(_loop(A, fs, n, N + 1), fs[n]):
            return False
    es = [_loop(A, fs, n, N) for n in range(N)]
    for n in range(N):
        if not A.eq(A.mul(es[n], es[n]), es[n]):
            return False
        if not (A.eq(A.mul(fs[n], es[n]), fs[n]) and A.eq(A.mul(es[(n + 1) % N], fs[n]), fs[n])):
            return False
    return True


def _algebra_ok(A: Arith, es, ms, assoc: bool) -> bool:
    for e, m in zip(es, ms):
        if not A.eq(A.mul(e, m), A.mul(m, A.tensor(e, e))):
            return False
        if assoc and not A.eq(A.mul(m, A.tensor(m, e)), A.mul(m, A.tensor(e, m))):
            return False
    return True


def _coalgebra_ok(A: Arith, es, Ds, coassoc: bool) -> bool:
    for e, D in zip(es, Ds):
        if not A.eq(A.mul(D, e), A.mul(A.tensor(e, e), D)):
            return False
        if coassoc and not A.eq(A.mul(A.tensor(D, e), D), A.mul(A.tensor(e, D), D)):
            return False
    return True


def axioms_hold(doc: dict) -> bool:
    """Decide from the raw JSON document whether every axiom of the bundle holds."""
    A = Arith.parse(doc["field"])
    p = doc["payload"]
    kind = doc["kind"]
    L = lambda key: [A.arr(x) for x in p[key]]  # noqa: E731
    if kind == "cocycle":
        return _cocycle_ok(A, p)
    if kind == "braiding":
        if not (_cocycle_ok(A, p["left"]) and _cocycle_ok(A, p["right"])):
            return False
        fs = [A.arr(x) for x in p["left"]["f"]]
        gs = [A.arr(x) for x in p["right"]["f"]]
        Bs = L("B")
        N = len(Bs)
        for n in range(N):
            if not A.eq(A.mul(Bs[(n + 1) % N], A.tensor(fs[n], gs[n])), A.mul(A.tensor(gs[n], fs[n]), Bs[n])):
                return False
        if "Bstar" in p:
            for B, S in zip(Bs, L("Bstar")):
                if not (A.eq(A.mul(B, S, B), B) and A.eq(A.mul(S, B, S), S)):
                    return False
        return True
    if kind == "algebra":
        return _algebra_ok(A, L("e"), L("m"), p.get("associative", False))
    if kind == "coalgebra":
        return _coalgebra_ok(A, L("e"), L("Delta"), p.get("coassociative", False))
    if kind == "yb_operator":
        es, Rs = L("e"), L("R")
        for n, (e, R) in enumerate(zip(es, Rs)):
            d = e.shape[0]
            ee = A.tensor(e, e)
            if not A.eq(A.mul(R, ee), A.mul(ee, R)):
                return False
            lhs, rhs = regular_ybe_sides(e, R, d, A.p)
            if not A.eq(lhs, rhs):
                return False
            if "Rstar" in p:
                S = A.arr(p["Rstar"][n])
                if not (A.eq(A.mul(R, S, R), R) and A.eq(A.mul(S, R, S), S)):
                    return False
        if "m" in p and not _algebra_ok(A, es, L("m"), p.get("associative", False)):
            return False
        if "Delta" in p and not _coalgebra_ok(A, es, L("Delta"), p.get("coassociative", False)):
            return False
        return True
    if kind in ("bialgebra", "antipode"):
        es, ms, Ds = L("e"), L("m"), L("Delta")
        if not (_algebra_ok(A, es, ms, True) and _coalgebra_ok(A, es, Ds, True)):
            return False
        if p.get("compatibility"):
            for e, m, D in zip(es, ms, Ds):
                d = e.shape[0]
                mid = A.tensor(A.tensor(e, A.flip(d, d)), e)
                if not A.eq(A.mul(D, m), A.mul(A.tensor(m, m), mid, A.tensor(D, D))):
                    return False
        if kind == "bialgebra":
            return True
        Ss = L("S")
        stars = L("Sstar") if "Sstar" in p else None
        for n, (e, m, D, S) in enumerate(zip(es, ms, Ds, Ss)):
            if stars is None:
                if not (A.eq(_lconv(A, m, D, e, S, e), e) and A.eq(_lconv(A, m, D, S, e, S), S)):
                    return False
            else:
                T = stars[n]
                if not (A.eq(_lconv(A, m, D, e, S, T, e), e) and A.eq(_lconv(A, m, D, S, T, e, S), S)
                        and A.eq(_lconv(A, m, D, T, e, S, T), T)):
                    return False
            if stars is None and "eta" in p and "eps" in p:
                target = A.mul(A.arr(p["eta"][n]), A.arr(p["eps"][n]))
                if not (A.eq(_conv(A, m, D, S, e), target) and A.eq(_conv(A, m, D, e, S), target)):
                    return False
        return True
    if kind == "module_action":
        ePs, rhos, eHs = L("e"), L("rho"), [A.arr(x) for x in p["H"]["e"]]
        for eP, rho, eH in zip(ePs, rhos, eHs):
            inner = A.tensor(eP, eH) if p["side"] == "right" else A.tensor(eH, eP)
            if not A.eq(A.mul(eP, rho), A.mul(rho, inner)):
                return False
        return True
    if kind == "search_spec":
        e = A.arr(p["e"])
        return A.eq(A.mul(e, e), e)
    if kind == "matrix":
        return True
    raise ValueError(kind)


# -- single-entry corruptions ----------------------------------------------------

_NOT_MATRICES = {"dims", "constraints", "side", "associative", "coassociative", "compatibility",
                 "dim", "cap", "workers", "override"}


def _matrix_paths(node, path=()):
    if isinstance(node, dict):
        for k, v in node.items():
            if k not in _NOT_MATRICES:
                yield from _matrix_paths(v, path + (k,))
    elif isinstance(node, list) and node and all(isinstance(r, list) for r in node) \
            and all(not isinstance(x, list) for r in node for x in r):
        yield path
    elif isinstance(node, list):
        for i, v in enumerate(node):
            yield from _matrix_paths(v, path + (i,))


def _get(node, path):
    for k in path:
        node = node[k]
    return node


def corruptions(doc: dict):
    """Yield ``(label, corrupted_doc)`` for every single-entry change.

    Over GF(p) every other residue is tried; over Q the entry is shifted by
    +1 and by -1.
    """
    import copy

    A = Arith.parse(doc["field"])
    for path in _matrix_paths(doc["payload"]):
        M = _get(doc["payload"], path)
        for i, row in enumerate(M):
            for j, x in enumerate(row):
                if A.p is None:
                    alts = [str(Fraction(x) + 1), str(Fraction(x) - 1)]
                else:
                    alts = [v for v in range(A.p) if v != x]
                for v in alts:
                    d = copy.deepcopy(doc)
                    _get(d["payload"], path)[i][j] = v
                    yield f"{'/'.join(map(str, path))}[{i},{j}]={v}", d
