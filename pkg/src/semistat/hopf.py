"""Obstructed bialgebras, convolution, regular antipodes and obstructed modules.

Units are ``d x 1`` matrices and counits ``1 x d`` matrices, so every axiom
below is an identity between matrices of matching shape.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .cocycle import RegularCocycle, cocycle_from_idempotent
from .braiding import RegularBraiding, verify_naturality, verify_star_regularity
from .errors import DimensionError, FieldMismatchError, VerificationError
from .exact_linalg import FieldSpec, Matrix, kron, reflexive_ginverse, swap_operator
from .report import Report, compare
from .ybop import (
    ObstructedAlgebra,
    ObstructedCoalgebra,
    RegularYBOperator,
    verify_algebra,
    verify_coalgebra,
    verify_yb_operator,
)


@dataclass(frozen=True)
class ObstructedBialgebra:
    field: FieldSpec
    dims: tuple[int, ...]
    mults: tuple[Matrix, ...]
    comults: tuple[Matrix, ...]
    obstructors: tuple[Matrix, ...]
    units: tuple[Matrix, ...] | None = None
    counits: tuple[Matrix, ...] | None = None
    check_compatibility: bool = False

    def __post_init__(self):
        for name in ("dims", "mults", "comults", "obstructors"):
            object.__setattr__(self, name, tuple(getattr(self, name)))
        # shape validation is delegated to the two halves
        self.algebra
        self.coalgebra
        if (self.units is None) != (self.counits is None):
            raise DimensionError("unit and counit must be given together")
        if self.units is not None:
            object.__setattr__(self, "units", tuple(self.units))
            object.__setattr__(self, "counits", tuple(self.counits))
            for n, (d, u, c) in enumerate(zip(self.dims, self.units, self.counits)):
                if u.field != self.field or c.field != self.field:
                    raise FieldMismatchError(f"unit/counit {n} over the wrong field")
                if u.shape != (d, 1) or c.shape != (1, d):
                    raise DimensionError(f"unit/counit {n} have shapes {u.shape}, {c.shape}")

    @classmethod
    def from_parts(cls, algebra: ObstructedAlgebra, coalgebra: ObstructedCoalgebra,
                   units=None, counits=None, check_compatibility=False) -> ObstructedBialgebra:
        if algebra.dims != coalgebra.dims or algebra.obstructors != coalgebra.obstructors:
            raise DimensionError("algebra and coalgebra must share carriers and obstructors")
        return cls(algebra.field, algebra.dims, algebra.mults, coalgebra.comults,
                   algebra.obstructors, units, counits, check_compatibility)

    @property
    def algebra(self) -> ObstructedAlgebra:
        return ObstructedAlgebra(self.field, self.dims, self.mults, self.obstructors, associative=True)

    @property
    def coalgebra(self) -> ObstructedCoalgebra:
        return ObstructedCoalgebra(self.field, self.dims, self.comults, self.obstructors, coassociative=True)

    @property
    def levels(self) -> int:
        return len(self.dims)

    @property
    def has_unit(self) -> bool:
        return self.units is not None


def verify_bialgebra(h: ObstructedBialgebra) -> Report:
    """Both consistency conditions, obstructed (co)associativity and, if enabled, compatibility.

    The optional compatibility check is
    ``D o m == (m (x) m) o (e (x) flip (x) e) o (D (x) D)``.
    """
    report = verify_algebra(h.algebra).extend(verify_coalgebra(h.coalgebra))
    if h.check_compatibility:
        for n, (d, m, D, e) in enumerate(zip(h.dims, h.mults, h.comults, h.obstructors)):
            mid = kron(kron(e, swap_operator(d, d, h.field)), e)
            report.add(compare("bialgebra_compatibility", n, D @ m, kron(m, m) @ mid @ kron(D, D)))
    return report


def convolution(h: ObstructedBialgebra, n: int, s: Matrix, t: Matrix) -> Matrix:
    """``s * t = m_n o (s (x) t) o D_n``."""
    d = h.dims[n]
    for x in (s, t):
        if x.shape != (d, d):
            raise DimensionError(f"convolution needs {d}x{d} endomorphisms, got {x.shape}")
        if x.field != h.field:
            raise FieldMismatchError("endomorphism over the wrong field")
    return h.mults[n] @ kron(s, t) @ h.comults[n]


def convolve(h: ObstructedBialgebra, n: int, *maps: Matrix) -> Matrix:
    """Left-parenthesized iterated convolution ``((a * b) * c) * ...``."""
    out = maps[0]
    for x in maps[1:]:
        out = convolution(h, n, out, x)
    return out


def convolve_right(h: ObstructedBialgebra, n: int, *maps: Matrix) -> Matrix:
    """Right-parenthesized iterated convolution ``a * (b * (c * ...))``."""
    out = maps[-1]
    for x in reversed(maps[:-1]):
        out = convolution(h, n, x, out)
    return out


@dataclass(frozen=True)
class AntipodePair:
    antipodes: tuple[Matrix, ...]
    star_antipodes: tuple[Matrix, ...] | None = None

    def __post_init__(self):
        object.__setattr__(self, "antipodes", tuple(self.antipodes))
        if self.star_antipodes is not None:
            object.__setattr__(self, "star_antipodes", tuple(self.star_antipodes))
            if len(self.star_antipodes) != len(self.antipodes):
                raise DimensionError("one star antipode per level is required")


def _antipode_equations(e: Matrix, S: Matrix, Ss: Matrix | None):
    if Ss is None:
        return [
            ("e*S*e = e", (e, S, e), e),
            ("S*e*S = S", (S, e, S), S),
        ]
    return [
        ("e*S*S'*e = e", (e, S, Ss, e), e),
        ("S*S'*e*S = S", (S, Ss, e, S), S),
        ("S'*e*S*S' = S'", (Ss, e, S, Ss), Ss),
    ]


def verify_regular_antipode(h: ObstructedBialgebra, a: AntipodePair) -> Report:
    """Antipode as a reflexive generalized inverse of the obstructor under convolution.

    Iterated convolutions are parenthesized to the left. A warning is added
    whenever the right-parenthesized product differs, since convolution
    need not be associative without a unit and counit.
    """
    if len(a.antipodes) != h.levels:
        raise DimensionError(f"{len(a.antipodes)} antipodes for {h.levels} levels")
    axiom = "regular_antipode" if a.star_antipodes is None else "star_antipode"
    report = Report()
    for n in range(h.levels):
        e = h.obstructors[n]
        Ss = None if a.star_antipodes is None else a.star_antipodes[n]
        for label, factors, target in _antipode_equations(e, a.antipodes[n], Ss):
            left = convolve(h, n, *factors)
            report.add(compare(axiom, n, left, target, label))
            if convolve_right(h, n, *factors) != left:
                report.warnings.append(f"level {n}: parenthesizations of {label} differ")
    return report


def verify_unit_counit_antipode(h: ObstructedBialgebra, a: AntipodePair) -> Report:
    """``m o (S (x) e) o D == eta o eps == m o (e (x) S) o D``."""
    if not h.has_unit:
        raise VerificationError("bialgebra has no unit and counit")
    report = Report()
    for n in range(h.levels):
        e, S = h.obstructors[n], a.antipodes[n]
        target = h.units[n] @ h.counits[n]
        report.add(compare("unit_counit_antipode", n, convolution(h, n, S, e), target, "S (x) e"))
        report.add(compare("unit_counit_antipode", n, convolution(h, n, e, S), target, "e (x) S"))
    return report


@dataclass(frozen=True)
class ObstructedModuleAction:
    """``rho_n : P_n (x) H_n -> P_n`` (right) or ``H_n (x) Q_n -> Q_n`` (left)."""

    side: str
    dims: tuple[int, ...]
    actions: tuple[Matrix, ...]
    obstructors: tuple[Matrix, ...]

    def __post_init__(self):
        for name in ("dims", "actions", "obstructors"):
            object.__setattr__(self, name, tuple(getattr(self, name)))
        if self.side not in ("right", "left"):
            raise ValueError(f"side must be 'right' or 'left', got {self.side!r}")
        if not (len(self.dims) == len(self.actions) == len(self.obstructors)):
            raise DimensionError("module levels disagree")
        for n, (d, e) in enumerate(zip(self.dims, self.obstructors)):
            if e.shape != (d, d):
                raise DimensionError(f"module obstructor {n} has shape {e.shape}")

    @property
    def levels(self) -> int:
        return len(self.dims)


def verify_module_action(p: ObstructedModuleAction, h) -> Report:
    """Obstructor compatibility of the action.

    Right: ``e_P o rho == rho o (e_P (x) e_H)``.
    Left:  ``e_Q o rho == rho o (e_H (x) e_Q)``.
    ``h`` only needs ``obstructors``.
    """
    if p.levels != len(h.obstructors):
        raise DimensionError("module and bialgebra have different level counts")
    report = Report()
    for n, (rho, ep, eh) in enumerate(zip(p.actions, p.obstructors, h.obstructors)):
        dp, dh = p.dims[n], eh.rows
        if rho.shape != (dp, dp * dh):
            raise DimensionError(f"action {n} has shape {rho.shape}, expected {(dp, dp * dh)}")
        inner = kron(ep, eh) if p.side == "right" else kron(eh, ep)
        report.add(compare("module_compatibility", n, ep @ rho, rho @ inner, p.side))
    return report


def braiding_from_rmatrix(
    h: ObstructedBialgebra,
    r: RegularYBOperator,
    p: ObstructedModuleAction,
    q: ObstructedModuleAction,
    induced: Sequence[Matrix] | None = None,
    chains: tuple[RegularCocycle, RegularCocycle] | None = None,
) -> RegularBraiding:
    """Braiding ``B_n = flip o R~_n`` on ``P_n (x) Q_n``.

    ``induced`` gives the operator ``R~_n`` through which ``R_n`` acts on
    ``P_n (x) Q_n``; when omitted the modules must have the carriers of
    ``h`` (regular representation) and ``R_n`` itself is used. ``chains``
    supplies the cocycles carrying the module obstructors; for a single
    level the one-arrow cocycle on the obstructor is used.
    """
    for rep, what in ((verify_bialgebra(h), "bialgebra"), (verify_yb_operator(h, r), "R-matrix"),
                      (verify_module_action(p, h), "module P"), (verify_module_action(q, h), "module Q")):
        if not rep.passed:
            raise VerificationError(f"{what} does not verify", rep)
    N = h.levels
    if induced is None:
        if p.dims != h.dims or q.dims != h.dims:
            raise VerificationError("an induced operator is required unless both modules are H itself")
        induced = r.operators
    induced = tuple(induced)
    if chains is None:
        if N != 1:
            raise VerificationError("cocycle chains for the modules are required when N > 1")
        chains = (cocycle_from_idempotent(p.obstructors[0]), cocycle_from_idempotent(q.obstructors[0]))
    comps = tuple(swap_operator(dp, dq, h.field) @ Rt for dp, dq, Rt in zip(p.dims, q.dims, induced))
    b = RegularBraiding(chains[0], chains[1], comps).with_ginverse_stars()
    for rep, what in ((verify_naturality(b), "naturality"), (verify_star_regularity(b), "star regularity")):
        if not rep.passed:
            raise VerificationError(f"induced braiding fails {what}", rep)
    return b
