"""Obstructed algebras and coalgebras and regular Yang-Baxter operators on them."""

from __future__ import annotations

import random
from dataclasses import dataclass, replace
from typing import Sequence

from .cocycle import random_idempotent, random_matrix
from .errors import DimensionError, FieldMismatchError, VerificationError
from .exact_linalg import FieldSpec, Matrix, kron, swap_operator
from .report import Report, compare


def _check_levels(field: FieldSpec, dims, obstructors, maps, shape_of):
    if not (len(dims) == len(obstructors) == len(maps)) or not dims:
        raise DimensionError("dims, obstructors and structure maps must have the same nonzero length")
    for n, (d, e, m) in enumerate(zip(dims, obstructors, maps)):
        for x in (e, m):
            if x.field != field:
                raise FieldMismatchError(f"level {n} mixes {x.field} into {field}")
        if e.shape != (d, d):
            raise DimensionError(f"obstructor {n} has shape {e.shape}, expected {(d, d)}")
        if m.shape != shape_of(d):
            raise DimensionError(f"structure map {n} has shape {m.shape}, expected {shape_of(d)}")


@dataclass(frozen=True)
class ObstructedAlgebra:
    """Multiplications ``m_n : A_n (x) A_n -> A_n`` with obstructors ``e_n``.

    ``associative`` declares that obstructed associativity is part of the
    claim, so :func:`verify_algebra` checks it too.
    """

    field: FieldSpec
    dims: tuple[int, ...]
    mults: tuple[Matrix, ...]
    obstructors: tuple[Matrix, ...]
    associative: bool = False

    def __post_init__(self):
        for name in ("dims", "mults", "obstructors"):
            object.__setattr__(self, name, tuple(getattr(self, name)))
        _check_levels(self.field, self.dims, self.obstructors, self.mults, lambda d: (d, d * d))

    @property
    def levels(self) -> int:
        return len(self.dims)


@dataclass(frozen=True)
class ObstructedCoalgebra:
    field: FieldSpec
    dims: tuple[int, ...]
    comults: tuple[Matrix, ...]
    obstructors: tuple[Matrix, ...]
    coassociative: bool = False

    def __post_init__(self):
        for name in ("dims", "comults", "obstructors"):
            object.__setattr__(self, name, tuple(getattr(self, name)))
        _check_levels(self.field, self.dims, self.obstructors, self.comults, lambda d: (d * d, d))

    @property
    def levels(self) -> int:
        return len(self.dims)


@dataclass(frozen=True)
class RegularYBOperator:
    operators: tuple[Matrix, ...]
    star_operators: tuple[Matrix, ...] | None = None

    def __post_init__(self):
        object.__setattr__(self, "operators", tuple(self.operators))
        if self.star_operators is not None:
            object.__setattr__(self, "star_operators", tuple(self.star_operators))
            if len(self.star_operators) != len(self.operators):
                raise DimensionError("one star operator per level is required")

    @property
    def levels(self) -> int:
        return len(self.operators)

    def swapped(self) -> RegularYBOperator:
        """Exchange the roles of R and R*."""
        if self.star_operators is None:
            raise VerificationError("no star operators to swap with")
        return RegularYBOperator(self.star_operators, self.operators)


def verify_algebra(a: ObstructedAlgebra) -> Report:
    """``e o m == m o (e (x) e)`` and, if declared, ``m o (m (x) e) == m o (e (x) m)``."""
    report = Report()
    for n, (m, e) in enumerate(zip(a.mults, a.obstructors)):
        report.add(compare("multiplication_consistency", n, e @ m, m @ kron(e, e)))
        if a.associative:
            report.add(compare("associativity", n, m @ kron(m, e), m @ kron(e, m)))
    return report


def verify_coalgebra(c: ObstructedCoalgebra) -> Report:
    """``D o e == (e (x) e) o D`` and, if declared, ``(D (x) e) o D == (e (x) D) o D``."""
    report = Report()
    for n, (d, e) in enumerate(zip(c.comults, c.obstructors)):
        report.add(compare("comultiplication_consistency", n, d @ e, kron(e, e) @ d))
        if c.coassociative:
            report.add(compare("coassociativity", n, kron(d, e) @ d, kron(e, d) @ d))
    return report


def ybr_sides(e: Matrix, R: Matrix) -> tuple[Matrix, Matrix]:
    """``(e(x)R)(R(x)e)(e(x)R)`` and ``(R(x)e)(e(x)R)(R(x)e)`` on the triple product."""
    eR, Re = kron(e, R), kron(R, e)
    return eR @ Re @ eR, Re @ eR @ Re


def verify_yb_operator(a, r: RegularYBOperator) -> Report:
    """Commutation with ``e (x) e``, the regular YBE and, with stars, the reflexive pair.

    ``a`` is anything carrying ``obstructors`` (algebra, coalgebra or bialgebra).
    """
    obs = a.obstructors
    if len(obs) != r.levels:
        raise DimensionError(f"{r.levels} operators for {len(obs)} levels")
    report = Report()
    for n, (e, R) in enumerate(zip(obs, r.operators)):
        d = e.rows
        if R.shape != (d * d, d * d):
            raise DimensionError(f"operator {n} has shape {R.shape}, expected {(d * d, d * d)}")
        ee = kron(e, e)
        report.add(compare("obstructor_commutation", n, R @ ee, ee @ R))
        lhs, rhs = ybr_sides(e, R)
        report.add(compare("regular_ybe", n, lhs, rhs))
        if r.star_operators is not None:
            S = r.star_operators[n]
            if S.shape != R.shape:
                raise DimensionError(f"star operator {n} has shape {S.shape}")
            report.add(compare("star_pair", n, R @ S @ R, R, "R o R* o R = R"))
            report.add(compare("star_pair", n, S @ R @ S, S, "R* o R o R* = R*"))
    return report


def _require(report: Report, what: str):
    if not report.passed:
        bad = report.first_failure()
        raise VerificationError(f"{what} fails {bad.axiom} at level {bad.level}", report)


def twist_multiplication(a: ObstructedAlgebra, r: RegularYBOperator) -> ObstructedAlgebra:
    """``m_R = m o R``; re-verified for consistency, and an associativity claim is kept only if it survives."""
    _require(verify_algebra(a), "algebra")
    _require(verify_yb_operator(a, r), "operator")
    out = replace(a, mults=tuple(m @ R for m, R in zip(a.mults, r.operators)))
    check = Report([c for c in verify_algebra(out).checks if c.axiom == "multiplication_consistency"])
    _require(check, "twisted algebra")
    if a.associative and not verify_algebra(out).passed:
        out = replace(out, associative=False)  # the twist only guarantees consistency
    return out


def twist_comultiplication(c: ObstructedCoalgebra, r: RegularYBOperator) -> ObstructedCoalgebra:
    """``D_R = R o D``; re-verified for consistency, and a coassociativity claim is kept only if it survives."""
    _require(verify_coalgebra(c), "coalgebra")
    _require(verify_yb_operator(c, r), "operator")
    out = replace(c, comults=tuple(R @ d for d, R in zip(c.comults, r.operators)))
    check = Report([x for x in verify_coalgebra(out).checks if x.axiom == "comultiplication_consistency"])
    _require(check, "twisted coalgebra")
    if c.coassociative and not verify_coalgebra(out).passed:
        out = replace(out, coassociative=False)
    return out


# -- random fixtures ---------------------------------------------------------

def _commutant_element(e: Matrix, rng: random.Random) -> Matrix:
    """Random matrix commuting with the idempotent ``e``: ``eXe + (1-e)Y(1-e)``."""
    F, d = e.field, e.rows
    q = Matrix.identity(F, d) - e
    return e @ random_matrix(F, d, d, rng) @ e + q @ random_matrix(F, d, d, rng) @ q


def random_yb_operator(e: Matrix, rng: random.Random) -> Matrix:
    """A regular YB operator for obstructor ``e``.

    Draws from ``(A (x) A) o flip`` with ``A`` in the commutant of ``e``,
    from scalar multiples of ``e (x) e`` and from the flip itself; all three
    families solve the regular YBE for every idempotent ``e``.
    """
    F, d = e.field, e.rows
    kind = rng.random()
    if kind < 0.7:
        A = _commutant_element(e, rng)
        return kron(A, A) @ swap_operator(d, d, F)
    if kind < 0.85:
        return kron(e, e).scale(rng.randint(1, 5))
    return swap_operator(d, d, F)


def random_algebra(field: FieldSpec, dims: Sequence[int], rng: random.Random,
                   obstructors: Sequence[Matrix] | None = None) -> ObstructedAlgebra:
    """``m_n = e_n M_n (e_n (x) e_n)`` for random ``M_n``, which forces consistency."""
    obs = tuple(obstructors) if obstructors is not None else tuple(random_idempotent(field, d, rng) for d in dims)
    mults = tuple(e @ random_matrix(field, d, d * d, rng) @ kron(e, e) for d, e in zip(dims, obs))
    return ObstructedAlgebra(field, tuple(dims), mults, obs)


def random_coalgebra(field: FieldSpec, dims: Sequence[int], rng: random.Random,
                     obstructors: Sequence[Matrix] | None = None) -> ObstructedCoalgebra:
    obs = tuple(obstructors) if obstructors is not None else tuple(random_idempotent(field, d, rng) for d in dims)
    comults = tuple(kron(e, e) @ random_matrix(field, d * d, d, rng) @ e for d, e in zip(dims, obs))
    return ObstructedCoalgebra(field, tuple(dims), comults, obs)

