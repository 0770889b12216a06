"""Small named structures used as fixtures and in the shipped bundles."""

from __future__ import annotations

from .exact_linalg import FieldSpec, Matrix, QQ, kron, swap_operator
from .hopf import AntipodePair, ObstructedBialgebra, ObstructedModuleAction
from .ybop import ObstructedAlgebra, ObstructedCoalgebra, RegularYBOperator


def projector(field: FieldSpec = QQ, d: int = 2) -> Matrix:
    """``diag(1, 0, ..., 0)``."""
    return Matrix.diag(field, [1] + [0] * (d - 1))


def projector_mult(field: FieldSpec = QQ) -> Matrix:
    """``m(e_i (x) e_j) = [i = j = 0] e_0`` on a 2-dimensional carrier."""
    return Matrix.basis_map(field, 2, 4, {0: {0: 1}})


def projector_comult(field: FieldSpec = QQ) -> Matrix:
    """``D(e_0) = e_0 (x) e_0``, ``D(e_1) = 0``."""
    return Matrix.basis_map(field, 4, 2, {0: {0: 1}})


def group_mult_z2(field: FieldSpec = QQ) -> Matrix:
    """Group algebra of Z/2 on the basis (1, g)."""
    return Matrix.basis_map(field, 2, 4, {0: {0: 1}, 1: {1: 1}, 2: {1: 1}, 3: {0: 1}})


def grouplike_comult(field: FieldSpec = QQ) -> Matrix:
    """``D(b) = b (x) b`` on each basis vector of a 2-dimensional carrier."""
    return Matrix.basis_map(field, 4, 2, {0: {0: 1}, 1: {3: 1}})


def projector_algebra(field: FieldSpec = QQ) -> ObstructedAlgebra:
    return ObstructedAlgebra(field, (2,), (projector_mult(field),), (projector(field),), associative=True)


def projector_coalgebra(field: FieldSpec = QQ) -> ObstructedCoalgebra:
    return ObstructedCoalgebra(field, (2,), (projector_comult(field),), (projector(field),), coassociative=True)


def projector_bialgebra(field: FieldSpec = QQ, with_unit: bool = True) -> ObstructedBialgebra:
    e = projector(field)
    units = counits = None
    if with_unit:
        units = (Matrix.from_rows(field, [[1], [0]]),)
        counits = (Matrix.from_rows(field, [[1, 0]]),)
    return ObstructedBialgebra(field, (2,), (projector_mult(field),), (projector_comult(field),), (e,),
                               units, counits)


def z2_algebra(field: FieldSpec = QQ) -> ObstructedAlgebra:
    return ObstructedAlgebra(field, (2,), (group_mult_z2(field),), (Matrix.identity(field, 2),), associative=True)


def z2_coalgebra(field: FieldSpec = QQ) -> ObstructedCoalgebra:
    return ObstructedCoalgebra(field, (2,), (grouplike_comult(field),), (Matrix.identity(field, 2),),
                               coassociative=True)


def z2_hopf(field: FieldSpec = QQ) -> ObstructedBialgebra:
    """Classical group Hopf algebra of Z/2 with unit ``1`` and counit ``eps(g) = 1``."""
    return ObstructedBialgebra(
        field, (2,), (group_mult_z2(field),), (grouplike_comult(field),), (Matrix.identity(field, 2),),
        (Matrix.from_rows(field, [[1], [0]]),), (Matrix.from_rows(field, [[1, 1]]),),
    )


def z2_antipode(field: FieldSpec = QQ) -> AntipodePair:
    """``S(g) = g^-1 = g``."""
    return AntipodePair((Matrix.identity(field, 2),))


def projector_antipode(field: FieldSpec = QQ) -> AntipodePair:
    return AntipodePair((projector(field),))


def flip_operator(field: FieldSpec = QQ, d: int = 2) -> RegularYBOperator:
    return RegularYBOperator((swap_operator(d, d, field),))


def projector_square_operator(field: FieldSpec = QQ) -> RegularYBOperator:
    e = projector(field)
    return RegularYBOperator((kron(e, e),))


def regular_module(h: ObstructedBialgebra, side: str = "left") -> ObstructedModuleAction:
    """``H`` acting on itself by multiplication."""
    return ObstructedModuleAction(side, h.dims, h.mults, h.obstructors)


def zero_bialgebra(field: FieldSpec, d: int = 2) -> ObstructedBialgebra:
    z = Matrix.zeros
    return ObstructedBialgebra(field, (d,), (z(field, d, d * d),), (z(field, d * d, d),), (z(field, d),))
