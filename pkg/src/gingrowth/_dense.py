"""Dense per-degree representation of homogeneous forms over F_p.

A homogeneous form of degree t is an int64 vector indexed by the monomials
of degree t, sorted *descending* in a fixed monomial order.  Multiplying a
degree-a form by a monomial q is a scatter through the index array
``shift(a, q)``.  Coefficients stay in ``[0, p)`` with p < 2**31 so that a
single product fits in int64.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from .ring import MonomialOrder, Polynomial, monomials_of_degree, mono_mul, unit_vector


class MonomialSpace:
    def __init__(self, n: int, order: MonomialOrder):
        self.n = n
        self.order = order
        self._mons: dict = {}
        self._index: dict = {}
        self._shift: dict = {}

    def monomials(self, t: int) -> list:
        mons = self._mons.get(t)
        if mons is None:
            mons = sorted(monomials_of_degree(self.n, t), key=self.order.key, reverse=True)
            self._mons[t] = mons
            self._index[t] = {m: i for i, m in enumerate(mons)}
        return mons

    def index(self, t: int) -> dict:
        if t not in self._index:
            self.monomials(t)
        return self._index[t]

    def size(self, t: int) -> int:
        return len(self.monomials(t))

    def shift(self, a: int, q) -> np.ndarray:
        """Positions of q*u (u running over degree-a monomials) in degree a+|q|."""
        key = (a, q)
        arr = self._shift.get(key)
        if arr is None:
            target = self.index(a + sum(q))
            arr = np.fromiter(
                (target[mono_mul(q, u)] for u in self.monomials(a)),
                dtype=np.int64,
                count=self.size(a),
            )
            self._shift[key] = arr
        return arr

    def to_dense(self, f: Polynomial, t: int, p: int) -> np.ndarray:
        vec = np.zeros(self.size(t), dtype=np.int64)
        idx = self.index(t)
        for m, c in f.coeffs.items():
            vec[idx[m]] = int(c) % p
        return vec

    def to_coeffs(self, vec: np.ndarray, t: int) -> dict:
        mons = self.monomials(t)
        nz = np.flatnonzero(vec)
        return {mons[i]: int(vec[i]) for i in nz}


@lru_cache(maxsize=None)
def monomial_space(n: int, order: MonomialOrder) -> MonomialSpace:
    return MonomialSpace(n, order)


# ---------------------------------------------------------------------------
# coordinate changes


@lru_cache(maxsize=48)
def substitution_matrix(rows: tuple, n_target: int, t: int, p: int) -> np.ndarray:
    """Matrix of x_i -> sum_j rows[i][j] y_j on degree-t forms.

    Row K holds the image of the K-th degree-t monomial of the source ring
    (degrevlex indexing), expressed over the degree-t monomials of the
    target ring.
    """
    from .ring import DEGREVLEX

    n = len(rows)
    src = monomial_space(n, DEGREVLEX)
    dst = monomial_space(n_target, DEGREVLEX)
    if t == 0:
        return np.ones((1, 1), dtype=np.int64)
    prev = substitution_matrix(rows, n_target, t - 1, p)
    mons = src.monomials(t)
    prev_index = src.index(t - 1)
    cols = [dst.shift(t - 1, unit_vector(n_target, j)) for j in range(n_target)]
    mat = np.zeros((len(mons), dst.size(t)), dtype=np.int64)
    for r, m in enumerate(mons):
        i = next(k for k, e in enumerate(m) if e)
        parent = prev[prev_index[tuple(e - (k == i) for k, e in enumerate(m))]]
        row = mat[r]
        for j in range(n_target):
            c = rows[i][j]
            if c:
                row[cols[j]] += c * parent
        row %= p
    return mat


def substitute_linear_dense(f: Polynomial, rows, target) -> Polynomial:
    """f(x) with x_i replaced by the linear form sum_j rows[i][j] y_j of ``target``."""
    from .ring import DEGREVLEX

    p = f.ring.field.p
    rows = tuple(tuple(int(c) % p for c in r) for r in rows)
    src = monomial_space(f.ring.nvars, DEGREVLEX)
    dst = monomial_space(target.nvars, DEGREVLEX)
    out: dict = {}
    for t, comp in f.homogeneous_components().items():
        vec = src.to_dense(comp, t, p)
        mat = substitution_matrix(rows, target.nvars, t, p)
        nz = np.flatnonzero(vec)
        if len(nz) * p * p < 2**62:
            img = (vec[nz] @ mat[nz]) % p
        else:
            img = _matvec_big(vec[nz], mat[nz], p)
        out.update(dst.to_coeffs(img, t))
    return Polynomial(target, out)


def apply_change_dense(f: Polynomial, g) -> Polynomial:
    return substitute_linear_dense(f, g.matrix, f.ring)


def _matvec_big(v, m, p):
    acc = np.zeros(m.shape[1], dtype=np.int64)
    for c, row in zip(v, m):
        acc = (acc + int(c) * row) % p
    return acc


# ---------------------------------------------------------------------------
# linear algebra mod p


def rref_mod_p(mat: np.ndarray, p: int):
    """Reduced row echelon form mod p. Returns (R, pivot_columns)."""
    a = np.array(mat, dtype=np.int64) % p
    rows, cols = a.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(a[r:, c])
        if len(nz) == 0:
            continue
        k = r + nz[0]
        if k != r:
            a[[r, k]] = a[[k, r]]
        a[r] = a[r] * pow(int(a[r, c]), -1, p) % p
        col = a[:, c].copy()
        col[r] = 0
        nzr = np.flatnonzero(col)
        if len(nzr):
            a[nzr] = (a[nzr] - np.outer(col[nzr], a[r])) % p
        pivots.append(c)
        r += 1
    return a[:r], pivots


def rank_mod_p(mat: np.ndarray, p: int) -> int:
    mat = np.asarray(mat)
    if mat.size == 0:
        return 0
    # eliminate along the shorter side
    if mat.shape[0] > mat.shape[1]:
        mat = mat.T
    return len(rref_mod_p(mat, p)[1])


def nullspace_mod_p(mat: np.ndarray, p: int) -> np.ndarray:
    """Basis (as rows) of {v : mat @ v = 0} mod p."""
    mat = np.asarray(mat, dtype=np.int64)
    cols = mat.shape[1]
    if mat.shape[0] == 0:
        return np.eye(cols, dtype=np.int64)
    r, pivots = rref_mod_p(mat, p)
    free = [c for c in range(cols) if c not in set(pivots)]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for k, fcol in enumerate(free):
        basis[k, fcol] = 1
        for i, pc in enumerate(pivots):
            basis[k, pc] = -r[i, fcol] % p
    return basis
