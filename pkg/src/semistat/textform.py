"""Matrix text form shared by bundles and catalogs.

A matrix is a list of rows. Over GF(p) entries are decimal integers; over
Q they are strings ``"p/q"`` (or ``"n"`` for integers).
"""

from __future__ import annotations

from fractions import Fraction

from .errors import DimensionError, FieldError
from .exact_linalg import FieldSpec, Matrix


def matrix_to_text(m: Matrix) -> list[list]:
    if m.field.is_finite:
        return [[int(x) for x in m.row(i)] for i in range(m.rows)]
    return [[str(x) for x in m.row(i)] for i in range(m.rows)]


def _entry(field: FieldSpec, x):
    if isinstance(x, bool):
        raise FieldError(f"boolean {x!r} is not a field element")
    if field.is_finite:
        if isinstance(x, int):
            return field.coerce(x)
        if isinstance(x, str):
            try:
                return field.coerce(Fraction(x))
            except ValueError:
                pass
        raise FieldError(f"{x!r} is not an element of {field}")
    if isinstance(x, (int, str)):
        try:
            return Fraction(x)
        except (ValueError, ZeroDivisionError):
            pass
    raise FieldError(f"{x!r} is not a rational")


def matrix_from_text(field: FieldSpec, rows, shape: tuple[int, int] | None = None) -> Matrix:
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise DimensionError("a matrix must be a list of rows")
    cols = len(rows[0]) if rows else (shape[1] if shape else 0)
    if any(len(r) != cols for r in rows):
        raise DimensionError("ragged matrix rows")
    m = Matrix(field, len(rows), cols, tuple(_entry(field, x) for r in rows for x in r))
    if shape is not None and m.shape != tuple(shape):
        raise DimensionError(f"matrix has shape {m.shape}, expected {tuple(shape)}")
    return m
