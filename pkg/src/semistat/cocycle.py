"""N-regular cocycles and their obstructors.

A cocycle is a cyclic chain ``X_0 -> X_1 -> ... -> X_{N-1} -> X_0`` of
arrows (zero-based here). It is regular when going once around the cycle,
starting and ending with the same arrow, reproduces that arrow. The
obstructor at ``X_n`` is the full loop starting there; it plays the role
the identity plays in the unobstructed theory.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Sequence

from .errors import DimensionError, FieldMismatchError, VerificationError
from .exact_linalg import (
    FieldSpec,
    Matrix,
    compose,
    inverse,
    is_idempotent,
    kron,
    rank,
    reflexive_ginverse,
)
from .report import Report, compare


@dataclass(frozen=True)
class RegularCocycle:
    field: FieldSpec
    dims: tuple[int, ...]
    arrows: tuple[Matrix, ...]

    def __post_init__(self):
        object.__setattr__(self, "dims", tuple(self.dims))
        object.__setattr__(self, "arrows", tuple(self.arrows))
        n = len(self.dims)
        if n < 1:
            raise DimensionError("a cocycle needs at least one level")
        if len(self.arrows) != n:
            raise DimensionError(f"{len(self.arrows)} arrows for {n} levels")
        for k, f in enumerate(self.arrows):
            if f.field != self.field:
                raise FieldMismatchError(f"arrow {k} is over {f.field}, cocycle over {self.field}")
            want = (self.dims[(k + 1) % n], self.dims[k])
            if f.shape != want:
                raise DimensionError(f"arrow {k} has shape {f.shape}, expected {want}")

    @classmethod
    def from_arrows(cls, arrows: Sequence[Matrix]) -> RegularCocycle:
        """Infer dims from the arrow sources."""
        arrows = tuple(arrows)
        return cls(arrows[0].field, tuple(f.cols for f in arrows), arrows)

    @classmethod
    def identity(cls, field: FieldSpec, dims: Sequence[int]) -> RegularCocycle:
        """All-identity chain; only makes sense when every dim is equal."""
        return cls(field, tuple(dims), tuple(Matrix.identity(field, d) for d in dims))

    @property
    def levels(self) -> int:
        return len(self.dims)

    def loop(self, n: int, extra: int = 0) -> Matrix:
        """Compose ``N + extra`` arrows starting with arrow ``n`` (applied first)."""
        N = self.levels
        seq = [self.arrows[(n + k) % N] for k in range(N + extra)]
        return compose(*reversed(seq))


def verify_regularity(c: RegularCocycle) -> Report:
    """Check that each full loop started at arrow n reproduces arrow n."""
    report = Report()
    for n in range(c.levels):
        report.add(compare("regularity", n, c.loop(n, extra=1), c.arrows[n]))
    return report


@dataclass(frozen=True)
class ObstructorSet:
    obstructors: tuple[Matrix, ...]

    def __getitem__(self, n: int) -> Matrix:
        return self.obstructors[n]

    def __len__(self) -> int:
        return len(self.obstructors)

    def __iter__(self):
        return iter(self.obstructors)


def obstructors(c: RegularCocycle) -> ObstructorSet:
    """Obstructor ``e_n``: the loop ``f_{n-1} o ... o f_{n+1} o f_n`` on ``X_n``."""
    rep = verify_regularity(c)
    if not rep.passed:
        bad = rep.first_failure()
        raise VerificationError(f"regularity equation {bad.level} fails", rep)
    return ObstructorSet(tuple(c.loop(n) for n in range(c.levels)))


def verify_obstructors(c: RegularCocycle, obs: ObstructorSet | None = None) -> Report:
    """Idempotency of each obstructor and ``f_n e_n == f_n == e_{n+1} f_n``."""
    obs = obstructors(c) if obs is None else obs
    N = c.levels
    report = Report()
    for n, e in enumerate(obs):
        report.add(compare("idempotency", n, e @ e, e))
    for n, f in enumerate(c.arrows):
        report.add(compare("intertwining", n, f @ obs[n], f, "f_n o e_n = f_n"))
        report.add(compare("intertwining", n, obs[(n + 1) % N] @ f, f, "e_(n+1) o f_n = f_n"))
    return report


def _check_pair(c: RegularCocycle, d: RegularCocycle):
    if c.field != d.field:
        raise FieldMismatchError(f"{c.field} vs {d.field}")
    if c.levels != d.levels:
        raise DimensionError(f"level counts differ: {c.levels} vs {d.levels}")


def tensor_cocycles(c: RegularCocycle, d: RegularCocycle) -> RegularCocycle:
    """Levelwise tensor product; raises if the product is somehow not regular."""
    _check_pair(c, d)
    out = RegularCocycle(
        c.field,
        tuple(a * b for a, b in zip(c.dims, d.dims)),
        tuple(kron(f, g) for f, g in zip(c.arrows, d.arrows)),
    )
    rep = verify_regularity(out)
    if not rep.passed:
        raise VerificationError("tensor product of cocycles is not regular", rep)
    return out


def verify_obstructor_multiplicativity(c: RegularCocycle, d: RegularCocycle) -> Report:
    """Obstructor of ``c (x) d`` against the Kronecker product of obstructors."""
    cd = tensor_cocycles(c, d)
    ec, ed, ecd = obstructors(c), obstructors(d), obstructors(cd)
    report = Report()
    for n in range(c.levels):
        report.add(compare("multiplicativity", n, ecd[n], kron(ec[n], ed[n])))
    return report


# -- random fixtures ---------------------------------------------------------

def random_scalar(field: FieldSpec, rng: random.Random, spread: int = 3):
    if field.is_finite:
        return rng.randrange(field.characteristic)
    return field.coerce(rng.randint(-spread, spread))


def random_matrix(field: FieldSpec, rows: int, cols: int, rng: random.Random) -> Matrix:
    return Matrix(field, rows, cols, tuple(random_scalar(field, rng) for _ in range(rows * cols)))


def random_invertible(field: FieldSpec, n: int, rng: random.Random) -> Matrix:
    while True:
        m = random_matrix(field, n, n, rng)
        if rank(m) == n:
            return m


def random_idempotent(field: FieldSpec, n: int, rng: random.Random, r: int | None = None) -> Matrix:
    """Conjugate of a coordinate projector of rank ``r`` (random when omitted)."""
    r = rng.randint(0, n) if r is None else r
    s = random_invertible(field, n, rng)
    return s @ Matrix.diag(field, [1] * r + [0] * (n - r)) @ inverse(s)


def _full_column_rank(field, rows, r, rng):
    while True:
        u = random_matrix(field, rows, r, rng)
        if rank(u) == r:
            return u


def random_regular_cocycle(
    field: FieldSpec, dims: Sequence[int], rng: random.Random, r: int | None = None
) -> RegularCocycle:
    """A random regular cocycle of common rank ``r``.

    Each arrow factors as ``U_{n+1} C_n V_n`` with ``V_n U_n = I_r`` and the
    cyclic product of the ``C_n`` equal to ``I_r``, which makes every loop
    act as the identity on the image and hence forces regularity.
    """
    dims = tuple(dims)
    N = len(dims)
    r = rng.randint(0, min(dims)) if r is None else r
    us, vs = [], []
    for d in dims:
        u = _full_column_rank(field, d, r, rng)
        if r:
            left = reflexive_ginverse(u)
            w = random_matrix(field, r, d, rng)
            v = left + w @ (Matrix.identity(field, d) - u @ left)
        else:
            v = Matrix.zeros(field, 0, d)
        us.append(u)
        vs.append(v)
    cs = [random_invertible(field, r, rng) for _ in range(N - 1)]
    # last twist closes the loop: C_{N-1} ... C_0 = I
    acc = Matrix.identity(field, r)
    for ck in cs:
        acc = ck @ acc
    cs.append(inverse(acc) if r else acc)
    arrows = tuple(us[(n + 1) % N] @ cs[n] @ vs[n] for n in range(N))
    c = RegularCocycle(field, dims, arrows)
    assert verify_regularity(c).passed
    return c


def cocycle_from_idempotent(e: Matrix) -> RegularCocycle:
    """The 1-regular cocycle whose single arrow is the idempotent ``e``."""
    if not is_idempotent(e):
        raise VerificationError("a one-level cocycle needs an idempotent arrow")
    return RegularCocycle(e.field, (e.rows,), (e,))
