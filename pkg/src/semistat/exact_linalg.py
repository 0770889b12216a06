"""Exact matrices over the rationals and prime fields.

Every morphism in the library is a :class:`Matrix`. Entries are stored as
``fractions.Fraction`` over Q and as canonical residues ``0 <= x < p`` over
GF(p). Composition ``a @ b`` means "apply b, then a".

Tensor products use left-factor-major ordering: the basis vector
``e_i (x) e_j`` of ``K^d1 (x) K^d2`` sits at index ``i * d2 + j``. The same
convention is used by :func:`kron` and :func:`swap_operator`.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .errors import CapExceededError, DimensionError, FieldError, FieldMismatchError, SingularMatrixError


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    k = 3
    while k * k <= n:
        if n % k == 0:
            return False
        k += 2
    return True


@dataclass(frozen=True)
class FieldSpec:
    """Either the rationals (``characteristic is None``) or GF(p)."""

    kind: str
    characteristic: int | None = None

    def __post_init__(self):
        if self.kind == "Rationals":
            if self.characteristic is not None:
                raise FieldError("the rationals have no characteristic parameter")
        elif self.kind == "PrimeField":
            p = self.characteristic
            if not isinstance(p, int) or not _is_prime(p):
                raise FieldError(f"characteristic must be prime, got {p!r}")
        else:
            raise FieldError(f"unknown field kind {self.kind!r}")

    @classmethod
    def rationals(cls) -> FieldSpec:
        return cls("Rationals")

    @classmethod
    def gf(cls, p: int) -> FieldSpec:
        return cls("PrimeField", p)

    @classmethod
    def parse(cls, text: str) -> FieldSpec:
        """Parse ``"Q"`` or ``"GF(p)"``."""
        t = text.strip()
        if t in ("Q", "QQ", "Rationals"):
            return cls.rationals()
        if t.upper().startswith("GF(") and t.endswith(")"):
            try:
                p = int(t[3:-1])
            except ValueError:
                raise FieldError(f"cannot parse field {text!r}") from None
            return cls.gf(p)
        raise FieldError(f"cannot parse field {text!r}")

    @property
    def is_finite(self) -> bool:
        return self.kind == "PrimeField"

    @property
    def size(self) -> int:
        if not self.is_finite:
            raise FieldError("the rationals are infinite")
        return self.characteristic

    def __str__(self) -> str:
        return "Q" if self.kind == "Rationals" else f"GF({self.characteristic})"

    # -- scalar arithmetic -------------------------------------------------

    def coerce(self, x):
        """Bring ``x`` (int, Fraction or ``"p/q"`` string) into canonical form."""
        if isinstance(x, str):
            x = Fraction(x.strip())
        if self.kind == "Rationals":
            return Fraction(x)
        p = self.characteristic
        if isinstance(x, Fraction):
            if x.denominator % p == 0:
                raise FieldError(f"{x} has no image in GF({p})")
            return x.numerator * pow(x.denominator, -1, p) % p
        if isinstance(x, (int, np.integer)):
            return int(x) % p
        raise FieldError(f"cannot interpret {x!r} in {self}")

    @property
    def zero(self):
        return Fraction(0) if self.kind == "Rationals" else 0

    @property
    def one(self):
        return Fraction(1) if self.kind == "Rationals" else 1

    def add(self, a, b):
        s = a + b
        return s if self.kind == "Rationals" else s % self.characteristic

    def sub(self, a, b):
        s = a - b
        return s if self.kind == "Rationals" else s % self.characteristic

    def mul(self, a, b):
        s = a * b
        return s if self.kind == "Rationals" else s % self.characteristic

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("zero has no inverse")
        if self.kind == "Rationals":
            return 1 / a
        return pow(a, -1, self.characteristic)

    def format(self, x) -> str:
        if self.kind == "Rationals":
            return str(x)
        return str(int(x))

    def elements(self) -> range:
        return range(self.size)


QQ = FieldSpec.rationals()
GF2 = FieldSpec.gf(2)
GF3 = FieldSpec.gf(3)


@dataclass(frozen=True)
class Matrix:
    """Immutable dense matrix with exact entries, stored row-major."""

    field: FieldSpec
    rows: int
    cols: int
    entries: tuple

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise DimensionError("negative dimension")
        if len(self.entries) != self.rows * self.cols:
            raise DimensionError(
                f"{len(self.entries)} entries for a {self.rows}x{self.cols} matrix"
            )

    # -- construction ------------------------------------------------------

    @classmethod
    def build(cls, field: FieldSpec, rows: int, cols: int, entries: Iterable) -> Matrix:
        return cls(field, rows, cols, tuple(field.coerce(x) for x in entries))

    @classmethod
    def from_rows(cls, field: FieldSpec, rows: Sequence[Sequence], cols: int | None = None) -> Matrix:
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        if any(len(r) != cols for r in rows):
            raise DimensionError("ragged rows")
        return cls.build(field, len(rows), cols, itertools.chain.from_iterable(rows))

    @classmethod
    def zeros(cls, field: FieldSpec, rows: int, cols: int | None = None) -> Matrix:
        cols = rows if cols is None else cols
        return cls(field, rows, cols, (field.zero,) * (rows * cols))

    @classmethod
    def identity(cls, field: FieldSpec, n: int) -> Matrix:
        z, o = field.zero, field.one
        return cls(field, n, n, tuple(o if i == j else z for i in range(n) for j in range(n)))

    @classmethod
    def diag(cls, field: FieldSpec, values: Sequence) -> Matrix:
        n = len(values)
        vals = [field.coerce(v) for v in values]
        z = field.zero
        return cls(field, n, n, tuple(vals[i] if i == j else z for i in range(n) for j in range(n)))

    @classmethod
    def basis_map(cls, field: FieldSpec, rows: int, cols: int, images: dict) -> Matrix:
        """Matrix whose column ``j`` is the vector ``images.get(j)`` (dict ``index -> coeff``)."""
        data = [field.zero] * (rows * cols)
        for j, vec in images.items():
            for i, c in vec.items():
                data[i * cols + j] = field.coerce(c)
        return cls(field, rows, cols, tuple(data))

    # -- access ------------------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, ij: tuple[int, int]):
        i, j = ij
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(ij)
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def to_rows(self) -> list[list]:
        return [list(self.row(i)) for i in range(self.rows)]

    def column(self, j: int) -> tuple:
        return self.entries[j::self.cols] if self.cols else ()

    @property
    def T(self) -> Matrix:
        return Matrix(self.field, self.cols, self.rows,
                      tuple(self.entries[i * self.cols + j] for j in range(self.cols) for i in range(self.rows)))

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> Matrix:
        return Matrix(self.field, len(rows), len(cols),
                      tuple(self.entries[i * self.cols + j] for i in rows for j in cols))

    def replace(self, i: int, j: int, value) -> Matrix:
        data = list(self.entries)
        data[i * self.cols + j] = self.field.coerce(value)
        return Matrix(self.field, self.rows, self.cols, tuple(data))

    def is_zero(self) -> bool:
        return all(x == 0 for x in self.entries)

    def to_numpy(self) -> np.ndarray:
        """Integer array of residues; prime fields only."""
        if not self.field.is_finite:
            raise FieldError("to_numpy is only defined over prime fields")
        return np.array(self.entries, dtype=np.int64).reshape(self.rows, self.cols)

    @classmethod
    def from_numpy(cls, field: FieldSpec, arr: np.ndarray) -> Matrix:
        arr = np.asarray(arr)
        r, c = arr.shape
        return cls.build(field, r, c, (int(x) for x in arr.reshape(-1)))

    def __repr__(self) -> str:
        body = "; ".join(" ".join(self.field.format(x) for x in self.row(i)) for i in range(self.rows))
        return f"Matrix[{self.field}]({self.rows}x{self.cols}: {body})"

    # -- arithmetic --------------------------------------------------------

    def _check_field(self, other: Matrix):
        if self.field != other.field:
            raise FieldMismatchError(f"{self.field} vs {other.field}")

    def __matmul__(self, other: Matrix) -> Matrix:
        return mat_mul(self, other)

    def __add__(self, other: Matrix) -> Matrix:
        self._check_field(other)
        if self.shape != other.shape:
            raise DimensionError(f"cannot add {self.shape} and {other.shape}")
        f = self.field
        return Matrix(f, self.rows, self.cols, tuple(f.add(a, b) for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: Matrix) -> Matrix:
        self._check_field(other)
        if self.shape != other.shape:
            raise DimensionError(f"cannot subtract {other.shape} from {self.shape}")
        f = self.field
        return Matrix(f, self.rows, self.cols, tuple(f.sub(a, b) for a, b in zip(self.entries, other.entries)))

    def __neg__(self) -> Matrix:
        f = self.field
        return Matrix(f, self.rows, self.cols, tuple(f.sub(f.zero, a) for a in self.entries))

    def scale(self, c) -> Matrix:
        f = self.field
        c = f.coerce(c)
        return Matrix(f, self.rows, self.cols, tuple(f.mul(c, a) for a in self.entries))


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    """Exact product ``a @ b``."""
    a._check_field(b)
    if a.cols != b.rows:
        raise DimensionError(f"cannot compose {a.shape} after {b.shape}")
    n, k, m = a.rows, a.cols, b.cols
    ae, be = a.entries, b.entries
    bcols = [be[j::m] for j in range(m)] if m else []
    out = []
    for i in range(n):
        arow = ae[i * k:(i + 1) * k]
        for j in range(m):
            out.append(sum(x * y for x, y in zip(arow, bcols[j])))
    if a.field.is_finite:
        p = a.field.characteristic
        out = [x % p for x in out]
    else:
        out = [Fraction(x) for x in out]
    return Matrix(a.field, n, m, tuple(out))


def compose(*maps: Matrix) -> Matrix:
    """``compose(f, g, h) == f @ g @ h`` (h applied first)."""
    if not maps:
        raise ValueError("nothing to compose")
    out = maps[-1]
    for m in reversed(maps[:-1]):
        out = m @ out
    return out


def kron(a: Matrix, b: Matrix) -> Matrix:
    """Kronecker product, left factor index major."""
    a._check_field(b)
    f = a.field
    out = []
    for i in range(a.rows):
        for k in range(b.rows):
            brow = b.row(k)
            for j in range(a.cols):
                x = a.entries[i * a.cols + j]
                out.extend(f.mul(x, y) for y in brow)
    return Matrix(f, a.rows * b.rows, a.cols * b.cols, tuple(out))


def kron_all(*factors: Matrix) -> Matrix:
    out = factors[0]
    for m in factors[1:]:
        out = kron(out, m)
    return out


def swap_operator(d1: int, d2: int, field: FieldSpec) -> Matrix:
    """The flip ``K^d1 (x) K^d2 -> K^d2 (x) K^d1``, ``e_i (x) e_j -> e_j (x) e_i``."""
    n = d1 * d2
    data = [field.zero] * (n * n)
    for i in range(d1):
        for j in range(d2):
            data[(j * d1 + i) * n + (i * d2 + j)] = field.one
    return Matrix(field, n, n, tuple(data))


def is_idempotent(m: Matrix) -> bool:
    if not m.is_square:
        raise DimensionError(f"idempotency needs a square matrix, got {m.shape}")
    return m @ m == m


# -- elimination -------------------------------------------------------------

def rref(m: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and pivot columns, pivots scanned left to right."""
    f = m.field
    rows = m.to_rows()
    pivots: list[int] = []
    r = 0
    for c in range(m.cols):
        if r == m.rows:
            break
        piv = next((i for i in range(r, m.rows) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = f.inv(rows[r][c])
        rows[r] = [f.mul(inv, x) for x in rows[r]]
        for i in range(m.rows):
            if i != r and rows[i][c] != 0:
                factor = rows[i][c]
                rows[i] = [f.sub(x, f.mul(factor, y)) for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    return Matrix(f, m.rows, m.cols, tuple(itertools.chain.from_iterable(rows))), pivots


def rank(m: Matrix) -> int:
    return len(rref(m)[1])


def inverse(m: Matrix) -> Matrix:
    """Exact inverse of a square matrix; raises ``SingularMatrixError`` when singular."""
    if not m.is_square:
        raise DimensionError(f"cannot invert a {m.shape} matrix")
    n = m.rows
    aug = Matrix.from_rows(m.field, [list(m.row(i)) + list(Matrix.identity(m.field, n).row(i)) for i in range(n)],
                           cols=2 * n) if n else m
    if n == 0:
        return m
    red, piv = rref(aug)
    if piv[:n] != list(range(n)):
        raise SingularMatrixError("matrix is singular")
    return red.submatrix(range(n), range(n, 2 * n))


def rank_factorization(m: Matrix) -> tuple[Matrix, Matrix]:
    """Split ``m`` as ``f @ g`` with ``f`` full column rank and ``g`` full row rank.

    ``f`` collects the pivot columns of ``m`` and ``g`` the nonzero rows of its
    reduced echelon form, so the result is deterministic.
    """
    red, piv = rref(m)
    r = len(piv)
    f = m.submatrix(range(m.rows), piv)
    g = red.submatrix(range(r), range(m.cols))
    return f, g


def reflexive_ginverse(m: Matrix) -> Matrix:
    """Deterministic X with ``m X m == m`` and ``X m X == X``.

    Built as ``g_r @ f_l`` from the rank factorization ``m = f @ g``, where
    ``g_r`` places the identity on the pivot columns of ``g`` and ``f_l``
    inverts the first independent rows of ``f``. No Gram matrices are used,
    so this works in every characteristic.
    """
    f, g = rank_factorization(m)
    field = m.field
    r = f.cols
    if r == 0:
        return Matrix.zeros(field, m.cols, m.rows)
    _, gpiv = rref(g)
    g_r = Matrix.basis_map(field, m.cols, r, {k: {c: 1} for k, c in enumerate(gpiv)})
    _, frows = rref(f.T)
    inv_block = inverse(f.submatrix(frows, range(r)))
    data = [field.zero] * (r * m.rows)
    for i in range(r):
        for k, row in enumerate(frows):
            data[i * m.rows + row] = inv_block[i, k]
    f_l = Matrix(field, r, m.rows, tuple(data))
    return g_r @ f_l


def solve_affine(a: Matrix, b: Sequence) -> tuple[list | None, list[list]]:
    """Solve ``a x = b``: a particular solution (or None) and a nullspace basis."""
    field = a.field
    b = [field.coerce(x) for x in b]
    if len(b) != a.rows:
        raise DimensionError("right-hand side length does not match")
    aug = Matrix.from_rows(field, [list(a.row(i)) + [b[i]] for i in range(a.rows)], cols=a.cols + 1)
    red, piv = rref(aug)
    if a.cols in piv:
        return None, []
    n = a.cols
    particular = [field.zero] * n
    for k, c in enumerate(piv):
        particular[c] = red[k, n]
    free = [c for c in range(n) if c not in piv]
    basis = []
    for fc in free:
        v = [field.zero] * n
        v[fc] = field.one
        for k, c in enumerate(piv):
            v[c] = field.sub(field.zero, red[k, fc])
        basis.append(v)
    return particular, basis


def _inner_inverse_system(m: Matrix) -> tuple[list | None, list[list]]:
    """Affine solution set of ``m X m = m`` with X flattened row-major (cols x rows)."""
    r, c = m.rows, m.cols
    field = m.field
    # (m X m)[i,j] = sum_{k,l} m[i,k] X[k,l] m[l,j]
    coeffs = []
    for i in range(r):
        for j in range(c):
            coeffs.append([field.mul(m[i, k], m[l, j]) for k in range(c) for l in range(r)])
    a = Matrix.from_rows(field, coeffs, cols=c * r) if coeffs else Matrix.zeros(field, 0, c * r)
    return solve_affine(a, m.entries)


def enumerate_ginverses(m: Matrix, cap: int = 1 << 20, reflexive: bool = True) -> list[Matrix]:
    """All generalized inverses of ``m`` over a prime field, entry-lexicographically sorted.

    The inner-inverse equation ``m X m = m`` is linear in X, so its affine
    solution set is parameterized first; with ``reflexive`` the candidates
    are then filtered by ``X m X = X``.
    """
    field = m.field
    if not field.is_finite:
        raise FieldError("enumerate_ginverses needs a prime field")
    particular, basis = _inner_inverse_system(m)
    if particular is None:
        return []
    p = field.characteristic
    count = p ** len(basis)
    if count > cap:
        raise CapExceededError(count, cap)
    xr, xc = m.cols, m.rows
    base = np.array(particular, dtype=np.int64)
    if basis:
        coeffs = np.array(list(itertools.product(range(p), repeat=len(basis))), dtype=np.int64)
        cands = (base + coeffs @ np.array(basis, dtype=np.int64)) % p
    else:
        cands = base[None, :]
    xs = cands.reshape(-1, xr, xc)
    if reflexive:
        mm = m.to_numpy()
        xmx = np.einsum("nij,jk,nkl->nil", xs, mm, xs) % p
        xs = xs[(xmx == xs).all(axis=(1, 2))]
    flat = sorted(tuple(int(v) for v in x.reshape(-1)) for x in xs)
    return [Matrix(field, xr, xc, t) for t in flat]
