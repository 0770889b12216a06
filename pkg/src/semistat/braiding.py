"""Regular braidings, triple maps, prebraidings and the component regular YBE.

A :class:`TripleContext` holds three cocycles under the slot names
``"x"``, ``"y"``, ``"z"`` together with braidings between ordered pairs of
them. Triple maps take a slot order such as ``("y", "x", "z")`` and act on
the tensor product of the carriers in that order::

    triple_left(ctx, n, (a, b, c))  = e_a (x) B_{b,c}   : a b c -> a c b
    triple_right(ctx, n, (a, b, c)) = B_{a,b} (x) e_c   : a b c -> b a c
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .cocycle import RegularCocycle, obstructors, tensor_cocycles
from .errors import DimensionError, FieldMismatchError, VerificationError
from .exact_linalg import Matrix, kron, reflexive_ginverse, swap_operator
from .report import Report, compare


@dataclass(frozen=True)
class RegularBraiding:
    """Components ``B_n : X_n (x) Y_n -> Y_n (x) X_n`` and optional stars going back."""

    left: RegularCocycle
    right: RegularCocycle
    components: tuple[Matrix, ...]
    star_components: tuple[Matrix, ...] | None = None

    def __post_init__(self):
        object.__setattr__(self, "components", tuple(self.components))
        if self.star_components is not None:
            object.__setattr__(self, "star_components", tuple(self.star_components))
        if self.left.field != self.right.field:
            raise FieldMismatchError("left and right cocycles live over different fields")
        N = self.left.levels
        if self.right.levels != N:
            raise DimensionError("left and right cocycles have different level counts")
        if len(self.components) != N:
            raise DimensionError(f"{len(self.components)} components for {N} levels")
        for n, b in enumerate(self.components):
            dx, dy = self.left.dims[n], self.right.dims[n]
            if b.shape != (dy * dx, dx * dy):
                raise DimensionError(f"component {n} has shape {b.shape}")
        if self.star_components is not None:
            if len(self.star_components) != N:
                raise DimensionError("wrong number of star components")
            for n, (b, s) in enumerate(zip(self.components, self.star_components)):
                if s.shape != (b.cols, b.rows):
                    raise DimensionError(f"star component {n} has shape {s.shape}")

    @property
    def levels(self) -> int:
        return self.left.levels

    @property
    def field(self):
        return self.left.field

    @classmethod
    def flip(cls, left: RegularCocycle, right: RegularCocycle) -> RegularBraiding:
        """The transposition braiding at every level."""
        comps = tuple(swap_operator(dx, dy, left.field) for dx, dy in zip(left.dims, right.dims))
        return cls(left, right, comps)

    def with_ginverse_stars(self) -> RegularBraiding:
        return RegularBraiding(self.left, self.right, self.components,
                               tuple(reflexive_ginverse(b) for b in self.components))


def verify_naturality(b: RegularBraiding) -> Report:
    """``B_{n+1} o (f_n (x) g_n) == (g_n (x) f_n) o B_n`` around the cycle."""
    N = b.levels
    report = Report()
    for n in range(N):
        f, g = b.left.arrows[n], b.right.arrows[n]
        lhs = b.components[(n + 1) % N] @ kron(f, g)
        rhs = kron(g, f) @ b.components[n]
        report.add(compare("naturality", n, lhs, rhs))
    return report


def verify_star_regularity(b: RegularBraiding, reflexive: bool = True) -> Report:
    if b.star_components is None:
        raise VerificationError("braiding has no star components")
    report = Report()
    for n, (B, S) in enumerate(zip(b.components, b.star_components)):
        report.add(compare("star_regularity", n, B @ S @ B, B, "B o B* o B = B"))
        if reflexive:
            report.add(compare("star_regularity", n, S @ B @ S, S, "B* o B o B* = B*"))
    return report


SLOTS = ("x", "y", "z")


@dataclass(frozen=True)
class TripleContext:
    """Three cocycles of equal level count and braidings between ordered pairs.

    ``braidings`` maps a pair such as ``("x", "y")`` to a braiding whose
    left cocycle is the one in the first slot.
    """

    cocycles: Mapping[str, RegularCocycle]
    braidings: Mapping[tuple[str, str], RegularBraiding]
    _obstructors: dict = field(default_factory=dict, compare=False, repr=False)

    def __post_init__(self):
        if set(self.cocycles) != set(SLOTS):
            raise ValueError(f"cocycles must be keyed by {SLOTS}")
        levels = {c.levels for c in self.cocycles.values()}
        fields = {c.field for c in self.cocycles.values()}
        if len(levels) != 1:
            raise DimensionError("cocycles have different level counts")
        if len(fields) != 1:
            raise FieldMismatchError("cocycles live over different fields")
        for (a, b), br in self.braidings.items():
            if br.left != self.cocycles[a] or br.right != self.cocycles[b]:
                raise ValueError(f"braiding {(a, b)} does not join the cocycles in those slots")
        for s, c in self.cocycles.items():
            self._obstructors[s] = obstructors(c)

    @classmethod
    def uniform(cls, cocycle: RegularCocycle, components: Sequence[Matrix]) -> TripleContext:
        """All three slots share one cocycle and every pair uses the same components."""
        b = RegularBraiding(cocycle, cocycle, tuple(components))
        pairs = [(a, c) for a in SLOTS for c in SLOTS if a != c]
        return cls({s: cocycle for s in SLOTS}, {p: b for p in pairs})

    @classmethod
    def from_braidings(cls, xy: RegularBraiding, xz: RegularBraiding, yz: RegularBraiding) -> TripleContext:
        return cls({"x": xy.left, "y": xy.right, "z": xz.right},
                   {("x", "y"): xy, ("x", "z"): xz, ("y", "z"): yz})

    @property
    def levels(self) -> int:
        return self.cocycles["x"].levels

    def obstructor(self, slot: str, n: int) -> Matrix:
        return self._obstructors[slot][n]

    def braid(self, a: str, b: str, n: int) -> Matrix:
        try:
            return self.braidings[(a, b)].components[n]
        except KeyError:
            raise ValueError(f"no braiding supplied for the ordered pair {(a, b)}") from None

    def dim(self, slot: str, n: int) -> int:
        return self.cocycles[slot].dims[n]


def triple_left(ctx: TripleContext, n: int, slots: Sequence[str] = SLOTS) -> Matrix:
    """``e_a (x) B_{b,c}`` on ``a (x) b (x) c``."""
    a, b, c = slots
    return kron(ctx.obstructor(a, n), ctx.braid(b, c, n))


def triple_right(ctx: TripleContext, n: int, slots: Sequence[str] = SLOTS) -> Matrix:
    """``B_{a,b} (x) e_c`` on ``a (x) b (x) c``."""
    a, b, c = slots
    return kron(ctx.braid(a, b, n), ctx.obstructor(c, n))


def prebraid(ctx: TripleContext, n: int, side: str = "LeftOfPair") -> Matrix:
    """Regular prebraidings.

    ``LeftOfPair``: ``P_{x(x)y,z} = T^R_{x,z,y} o T^L_{x,y,z}``, mapping
    ``x y z -> z x y``.

    ``RightOfPair``: ``P_{z,x(x)y} = T^L_{x,z,y} o T^R_{z,x,y}``, mapping
    ``z x y -> x y z``. The first factor acts on ``z x y``, the only slot
    order for which the composite is defined when the carriers differ.
    """
    if side == "LeftOfPair":
        return triple_right(ctx, n, ("x", "z", "y")) @ triple_left(ctx, n, ("x", "y", "z"))
    if side == "RightOfPair":
        return triple_left(ctx, n, ("x", "z", "y")) @ triple_right(ctx, n, ("z", "x", "y"))
    raise ValueError(f"unknown side {side!r}")


def component_ybe_sides(ctx: TripleContext, n: int) -> tuple[Matrix, Matrix]:
    """Both sides of the component regular YBE at level n, as maps ``x y z -> z y x``."""
    lhs = (triple_right(ctx, n, ("y", "z", "x"))
           @ triple_left(ctx, n, ("y", "x", "z"))
           @ triple_right(ctx, n, ("x", "y", "z")))
    rhs = (triple_left(ctx, n, ("z", "x", "y"))
           @ triple_right(ctx, n, ("x", "z", "y"))
           @ triple_left(ctx, n, ("x", "y", "z")))
    return lhs, rhs


def verify_component_ybe(ctx: TripleContext) -> Report:
    report = Report()
    for n in range(ctx.levels):
        lhs, rhs = component_ybe_sides(ctx, n)
        report.add(compare("regular_ybe", n, lhs, rhs))
    return report


@dataclass(frozen=True)
class PrebraidStars:
    """Per-level star partners for both prebraidings."""

    left_of_pair: tuple[Matrix, ...]
    right_of_pair: tuple[Matrix, ...]

    @classmethod
    def from_ginverses(cls, ctx: TripleContext) -> PrebraidStars:
        return cls(
            tuple(reflexive_ginverse(prebraid(ctx, n, "LeftOfPair")) for n in range(ctx.levels)),
            tuple(reflexive_ginverse(prebraid(ctx, n, "RightOfPair")) for n in range(ctx.levels)),
        )


def verify_prebraid_star_tower(ctx: TripleContext, stars: PrebraidStars) -> Report:
    """The four reflexive identities for both prebraidings at every level."""
    N = ctx.levels
    if stars is None or len(stars.left_of_pair) != N or len(stars.right_of_pair) != N:
        raise VerificationError("star prebraidings must be supplied for every level and both sides")
    report = Report()
    for n in range(N):
        for side, stack in (("LeftOfPair", stars.left_of_pair), ("RightOfPair", stars.right_of_pair)):
            P, S = prebraid(ctx, n, side), stack[n]
            if S.shape != (P.cols, P.rows):
                raise DimensionError(f"star for {side} at level {n} has shape {S.shape}")
            report.add(compare("prebraid_star", n, P @ S @ P, P, f"{side}: P o P* o P = P"))
            report.add(compare("prebraid_star", n, S @ P @ S, S, f"{side}: P* o P o P* = P*"))
    return report


def tensor_braidings(b1: RegularBraiding, b2: RegularBraiding) -> RegularBraiding:
    """Braiding of ``X (x) X'`` past ``Y (x) Y'`` built factorwise.

    Component: ``(X X') (Y Y') -> X Y X' Y' -> Y X Y' X' -> (Y Y') (X X')``.
    """
    left = tensor_cocycles(b1.left, b2.left)
    right = tensor_cocycles(b1.right, b2.right)
    F = left.field
    comps = []
    for n in range(b1.levels):
        dx, dx2 = b1.left.dims[n], b2.left.dims[n]
        dy, dy2 = b1.right.dims[n], b2.right.dims[n]
        eye = Matrix.identity
        mid_in = kron(kron(eye(F, dx), swap_operator(dx2, dy, F)), eye(F, dy2))
        mid_out = kron(kron(eye(F, dy), swap_operator(dx, dy2, F)), eye(F, dx2))
        comps.append(mid_out @ kron(b1.components[n], b2.components[n]) @ mid_in)
    return RegularBraiding(left, right, tuple(comps))
