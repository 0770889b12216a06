"""Shipped fixture bundles.

``python -m semistat.fixtures DIR`` regenerates the JSON files that ship in
``semistat/data``; the test suite checks they are in sync with this module.
"""

from __future__ import annotations

import sys
from importlib import resources
from pathlib import Path

from .bundle import Bundle, dumps_bundle, make_bundle
from .exact_linalg import GF2, QQ, FieldSpec, Matrix, kron, swap_operator
from .standard import (
    group_mult_z2,
    grouplike_comult,
    projector,
    projector_comult,
    projector_mult,
)


def _hopf_payload(field: FieldSpec, kind: str) -> dict:
    if kind == "projector":
        return {"dims": [2], "e": [projector(field)], "m": [projector_mult(field)],
                "Delta": [projector_comult(field)],
                "eta": [Matrix.from_rows(field, [[1], [0]])], "eps": [Matrix.from_rows(field, [[1, 0]])]}
    return {"dims": [2], "e": [Matrix.identity(field, 2)], "m": [group_mult_z2(field)],
            "Delta": [grouplike_comult(field)],
            "eta": [Matrix.from_rows(field, [[1], [0]])], "eps": [Matrix.from_rows(field, [[1, 1]])]}


def fixture_bundles() -> dict[str, Bundle]:
    e_q, e_2 = projector(QQ), projector(GF2)
    flip_q = swap_operator(2, 2, QQ)
    ee_q = kron(e_q, e_q)
    out = {
        "cocycle_projector_n2": make_bundle(
            "cocycle", QQ, {"dims": [2, 2], "f": [e_q, e_q]},
            "two-level cocycle with both arrows diag(1,0)"),
        "cocycle_chain_n3": make_bundle(
            "cocycle", QQ,
            {"dims": [2, 1, 2], "f": [Matrix.from_rows(QQ, [[1, 1]]), Matrix.from_rows(QQ, [[1], [0]]),
                                      Matrix.from_rows(QQ, [[1, 0], [0, 0]])]},
            "three-level cocycle through a line, dims 2 -> 1 -> 2"),
        "cocycle_identity_n3_gf2": make_bundle(
            "cocycle", GF2, {"dims": [2, 2, 2], "f": [Matrix.identity(GF2, 2)] * 3},
            "identity chain of length three"),
        "braiding_projector_flip": make_bundle(
            "braiding", QQ,
            {"left": {"dims": [2, 2], "f": [e_q, e_q]}, "right": {"dims": [2, 2], "f": [e_q, e_q]},
             "B": [flip_q, flip_q], "Bstar": [flip_q, flip_q]},
            "flip braiding between two diag(1,0) cocycles"),
        "braiding_projector_square": make_bundle(
            "braiding", QQ,
            {"left": {"dims": [2], "f": [e_q]}, "right": {"dims": [2], "f": [e_q]},
             "B": [ee_q], "Bstar": [ee_q]},
            "noninvertible braiding e(x)e with itself as star partner"),
        "algebra_projector": make_bundle(
            "algebra", QQ, {"dims": [2], "e": [e_q], "m": [projector_mult(QQ)], "associative": True},
            "projector algebra m(e_i(x)e_j) = [i=j=0] e_0"),
        "algebra_z2_gf2": make_bundle(
            "algebra", GF2, {"dims": [2], "e": [Matrix.identity(GF2, 2)], "m": [group_mult_z2(GF2)],
                             "associative": True},
            "group algebra of Z/2 over GF(2)"),
        "coalgebra_projector": make_bundle(
            "coalgebra", QQ, {"dims": [2], "e": [e_q], "Delta": [projector_comult(QQ)], "coassociative": True},
            "projector coalgebra Delta(e_0) = e_0(x)e_0, Delta(e_1) = 0"),
        "coalgebra_grouplike_z2": make_bundle(
            "coalgebra", QQ, {"dims": [2], "e": [Matrix.identity(QQ, 2)], "Delta": [grouplike_comult(QQ)],
                              "coassociative": True},
            "grouplike coalgebra on the basis (1, g)"),
        "yb_operator_projector_flip": make_bundle(
            "yb_operator", QQ,
            {"dims": [2], "e": [e_q], "R": [flip_q], "Rstar": [flip_q], "m": [projector_mult(QQ)],
             "Delta": [projector_comult(QQ)], "associative": True, "coassociative": True},
            "flip as a regular YB operator for e = diag(1,0)"),
        "yb_operator_projector_square": make_bundle(
            "yb_operator", QQ,
            {"dims": [2], "e": [e_q], "R": [ee_q], "Rstar": [ee_q], "m": [projector_mult(QQ)],
             "Delta": [projector_comult(QQ)], "associative": True, "coassociative": True},
            "R = e(x)e on the projector bialgebra"),
        "yb_operator_z2_flip_gf2": make_bundle(
            "yb_operator", GF2,
            {"dims": [2], "e": [Matrix.identity(GF2, 2)], "R": [swap_operator(2, 2, GF2)],
             "Rstar": [swap_operator(2, 2, GF2)], "m": [group_mult_z2(GF2)], "associative": True},
            "classical flip on the Z/2 group algebra"),
        "bialgebra_projector": make_bundle(
            "bialgebra", QQ, _hopf_payload(QQ, "projector"), "projector bialgebra with unit e_0 and counit e_0^*"),
        "bialgebra_z2": make_bundle(
            "bialgebra", QQ, {**_hopf_payload(QQ, "z2"), "compatibility": True}, "classical Z/2 group bialgebra"),
        "antipode_projector": make_bundle(
            "antipode", QQ, {**_hopf_payload(QQ, "projector"), "S": [e_q]},
            "regular antipode S = e on the projector bialgebra"),
        "antipode_projector_gf2": make_bundle(
            "antipode", GF2, {**_hopf_payload(GF2, "projector"), "S": [e_2]},
            "regular antipode S = e over GF(2)"),
        "antipode_z2": make_bundle(
            "antipode", QQ, {**_hopf_payload(QQ, "z2"), "S": [Matrix.identity(QQ, 2)]},
            "classical Z/2 Hopf algebra with S(g) = g"),
        "module_regular_projector": make_bundle(
            "module_action", QQ,
            {"side": "left", "dims": [2], "e": [e_q], "rho": [projector_mult(QQ)],
             "H": {"dims": [2], "e": [e_q]}},
            "projector bialgebra acting on itself"),
        "module_trivial_z2": make_bundle(
            "module_action", QQ,
            {"side": "right", "dims": [1], "e": [Matrix.identity(QQ, 1)], "rho": [Matrix.from_rows(QQ, [[1, 1]])],
             "H": {"dims": [2], "e": [Matrix.identity(QQ, 2)]}},
            "one-dimensional module through the counit"),
        "search_gf2_dim2_projector": make_bundle(
            "search_spec", GF2, {"dim": 2, "e": e_2, "constraints": ["commute", "regular_ybe", "star_exists"]},
            "regular YBE over GF(2) with e = diag(1,0)"),
        "search_gf2_dim2_identity": make_bundle(
            "search_spec", GF2, {"dim": 2, "e": Matrix.identity(GF2, 2)},
            "classical YBE over GF(2)"),
        "matrix_gf2_ones": make_bundle(
            "matrix", GF2, {"M": Matrix.from_rows(GF2, [[1, 1], [1, 1]])}, "all-ones 2x2 over GF(2)"),
    }
    return out


def data_dir() -> Path:
    return Path(str(resources.files("semistat") / "data"))


def shipped_paths() -> list[Path]:
    return sorted(data_dir().glob("*.json"))


def write_fixtures(directory: str | Path):
    d = Path(directory)
    d.mkdir(parents=True, exist_ok=True)
    for name, b in fixture_bundles().items():
        (d / f"{name}.json").write_text(dumps_bundle(b))


if __name__ == "__main__":
    write_fixtures(sys.argv[1] if len(sys.argv) > 1 else data_dir())
