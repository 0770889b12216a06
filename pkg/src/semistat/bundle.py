"""Structure bundles: strict JSON documents describing one structure each.

Layout::

    {
      "format_version": 1,
      "kind": "bialgebra",
      "field": "Q",                      # or "GF(p)"
      "metadata": {"description": "..."},  # optional, free-form
      "payload": {...}                   # kind-specific, see SCHEMAS
    }

Per-level data are lists indexed by level. Matrix keys use the usual
symbols: ``f``, ``e``, ``B``, ``Bstar``, ``m``, ``Delta``, ``R``,
``Rstar``, ``S``, ``Sstar``, ``eta``, ``eps``, ``rho``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

from .braiding import RegularBraiding, verify_naturality, verify_star_regularity
from .cocycle import RegularCocycle, verify_obstructors, verify_regularity
from .errors import SemistatError
from .exact_linalg import FieldSpec, Matrix
from .hopf import (
    AntipodePair,
    ObstructedBialgebra,
    ObstructedModuleAction,
    verify_bialgebra,
    verify_module_action,
    verify_regular_antipode,
    verify_unit_counit_antipode,
)
from .report import Check, Report, compare
from .search import CONSTRAINTS, DEFAULT_CAP, SearchSpec
from .textform import matrix_from_text, matrix_to_text
from .ybop import (
    ObstructedAlgebra,
    ObstructedCoalgebra,
    RegularYBOperator,
    verify_algebra,
    verify_coalgebra,
    verify_yb_operator,
)

FORMAT_VERSION = 1
KINDS = ("cocycle", "braiding", "algebra", "coalgebra", "yb_operator", "bialgebra",
         "antipode", "module_action", "search_spec", "matrix")


class BundleError(SemistatError, ValueError):
    """The document does not parse or does not match its schema."""


# key -> (value type, required)
_HOPF = {"dims": ("dims", True), "e": ("square", True), "m": ("mult", True), "Delta": ("comult", True),
         "eta": ("unit", False), "eps": ("counit", False), "compatibility": ("bool", False)}
SCHEMAS: dict[str, dict[str, tuple[str, bool]]] = {
    "cocycle": {"dims": ("dims", True), "f": ("arrows", True)},
    "braiding": {"left": ("chain", True), "right": ("chain", True),
                 "B": ("braid", True), "Bstar": ("braid_star", False)},
    "algebra": {"dims": ("dims", True), "e": ("square", True), "m": ("mult", True),
                "associative": ("bool", False)},
    "coalgebra": {"dims": ("dims", True), "e": ("square", True), "Delta": ("comult", True),
                  "coassociative": ("bool", False)},
    "yb_operator": {"dims": ("dims", True), "e": ("square", True), "R": ("square2", True),
                    "Rstar": ("square2", False), "m": ("mult", False), "Delta": ("comult", False),
                    "associative": ("bool", False), "coassociative": ("bool", False)},
    "bialgebra": dict(_HOPF),
    "antipode": {**_HOPF, "S": ("square", True), "Sstar": ("square", False)},
    "module_action": {"side": ("side", True), "dims": ("dims", True), "e": ("square", True),
                      "rho": ("action", True), "H": ("hchain", True)},
    "search_spec": {"dim": ("int", True), "e": ("matrix", True), "constraints": ("constraints", False),
                    "cap": ("int", False), "workers": ("int", False), "override": ("bool", False)},
    "matrix": {"M": ("matrix", True)},
}

AXIOMS: dict[str, tuple[str, ...]] = {
    "cocycle": ("regularity", "idempotency", "intertwining"),
    "braiding": ("regularity", "naturality", "star_regularity"),
    "algebra": ("multiplication_consistency", "associativity"),
    "coalgebra": ("comultiplication_consistency", "coassociativity"),
    "yb_operator": ("obstructor_commutation", "regular_ybe", "star_pair", "multiplication_consistency",
                    "associativity", "comultiplication_consistency", "coassociativity"),
    "bialgebra": ("multiplication_consistency", "associativity", "comultiplication_consistency",
                  "coassociativity", "bialgebra_compatibility"),
    "antipode": ("multiplication_consistency", "associativity", "comultiplication_consistency",
                 "coassociativity", "bialgebra_compatibility", "regular_antipode", "star_antipode",
                 "unit_counit_antipode"),
    "module_action": ("module_compatibility",),
    "search_spec": ("idempotency",),
    "matrix": (),
}


@dataclass
class Bundle:
    kind: str
    field: FieldSpec
    payload: dict[str, Any]
    metadata: dict[str, Any] = field(default_factory=dict)
    format_version: int = FORMAT_VERSION


# -- parsing -------------------------------------------------------------------

def _need(cond: bool, msg: str):
    if not cond:
        raise BundleError(msg)


def _strict_keys(obj: dict, allowed: dict, where: str):
    _need(isinstance(obj, dict), f"{where} must be an object")
    unknown = sorted(set(obj) - set(allowed))
    _need(not unknown, f"unknown key(s) {unknown} in {where}")
    missing = sorted(k for k, (_, req) in allowed.items() if req and k not in obj)
    _need(not missing, f"missing key(s) {missing} in {where}")


def _mat(F, raw, shape, where):
    try:
        return matrix_from_text(F, raw, shape)
    except (SemistatError, TypeError) as exc:
        raise BundleError(f"{where}: {exc}") from None


def _mat_list(F, raw, shapes, where):
    _need(isinstance(raw, list), f"{where} must be a list with one matrix per level")
    _need(len(raw) == len(shapes), f"{where} has {len(raw)} entries for {len(shapes)} levels")
    return [_mat(F, r, s, f"{where}[{i}]") for i, (r, s) in enumerate(zip(raw, shapes))]


def _dims(raw, where):
    _need(isinstance(raw, list) and raw and all(isinstance(d, int) and not isinstance(d, bool) and d > 0
                                                for d in raw), f"{where} must be a nonempty list of positive integers")
    return list(raw)


def _chain(F, raw, where):
    _strict_keys(raw, {"dims": ("dims", True), "f": ("arrows", True)}, where)
    dims = _dims(raw.get("dims"), f"{where}.dims")
    N = len(dims)
    return {"dims": dims,
            "f": _mat_list(F, raw.get("f"), [(dims[(n + 1) % N], n_d) for n, n_d in enumerate(dims)], f"{where}.f")}


def _parse_payload(kind: str, F: FieldSpec, raw: dict) -> dict:
    schema = SCHEMAS[kind]
    _strict_keys(raw, schema, f"{kind} payload")
    out: dict[str, Any] = {}
    dims = _dims(raw["dims"], "dims") if "dims" in raw else None
    for key, (typ, _) in schema.items():
        if key not in raw:
            continue
        val = raw[key]
        where = key
        if typ == "dims":
            out[key] = dims
        elif typ == "bool":
            _need(isinstance(val, bool), f"{where} must be true or false")
            out[key] = val
        elif typ == "int":
            _need(isinstance(val, int) and not isinstance(val, bool) and val > 0, f"{where} must be a positive integer")
            out[key] = val
        elif typ == "side":
            _need(val in ("left", "right"), f"{where} must be 'left' or 'right'")
            out[key] = val
        elif typ == "constraints":
            _need(isinstance(val, list) and all(v in CONSTRAINTS for v in val),
                  f"{where} must be a subset of {list(CONSTRAINTS)}")
            out[key] = sorted(set(val))
        elif typ == "matrix":
            out[key] = _mat(F, val, None, where)
        elif typ == "arrows":
            N = len(dims)
            out[key] = _mat_list(F, val, [(dims[(n + 1) % N], d) for n, d in enumerate(dims)], where)
        elif typ == "square":
            out[key] = _mat_list(F, val, [(d, d) for d in dims], where)
        elif typ == "square2":
            out[key] = _mat_list(F, val, [(d * d, d * d) for d in dims], where)
        elif typ == "mult":
            out[key] = _mat_list(F, val, [(d, d * d) for d in dims], where)
        elif typ == "comult":
            out[key] = _mat_list(F, val, [(d * d, d) for d in dims], where)
        elif typ == "unit":
            out[key] = _mat_list(F, val, [(d, 1) for d in dims], where)
        elif typ == "counit":
            out[key] = _mat_list(F, val, [(1, d) for d in dims], where)
        elif typ == "chain":
            out[key] = _chain(F, val, where)
        elif typ == "hchain":
            _strict_keys(val, {"dims": ("dims", True), "e": ("square", True)}, where)
            hd = _dims(val["dims"], f"{where}.dims")
            out[key] = {"dims": hd, "e": _mat_list(F, val["e"], [(d, d) for d in hd], f"{where}.e")}
        elif typ in ("braid", "braid_star"):
            pass  # needs both chains; handled below
        elif typ == "action":
            pass
        else:  # pragma: no cover
            raise AssertionError(typ)
    if kind == "braiding":
        ld, rd = out["left"]["dims"], out["right"]["dims"]
        _need(len(ld) == len(rd), "left and right chains must have the same number of levels")
        out["B"] = _mat_list(F, raw["B"], [(y * x, x * y) for x, y in zip(ld, rd)], "B")
        if "Bstar" in raw:
            out["Bstar"] = _mat_list(F, raw["Bstar"], [(x * y, y * x) for x, y in zip(ld, rd)], "Bstar")
    if kind == "module_action":
        hd = out["H"]["dims"]
        _need(len(hd) == len(dims), "module and H must have the same number of levels")
        out["rho"] = _mat_list(F, raw["rho"], [(p, p * h) for p, h in zip(dims, hd)], "rho")
    if ("eta" in out) != ("eps" in out):
        raise BundleError("eta and eps must be given together")
    if kind == "search_spec":
        _need(out["e"].shape == (out["dim"], out["dim"]), "e must be a dim x dim matrix")
    return out


def parse_bundle(doc: Any, field_override: FieldSpec | None = None) -> Bundle:
    top = {"format_version": ("int", True), "kind": ("str", True), "field": ("str", True),
           "metadata": ("obj", False), "payload": ("obj", True)}
    _strict_keys(doc, top, "bundle")
    _need(doc["format_version"] == FORMAT_VERSION, f"unsupported format_version {doc['format_version']!r}")
    _need(doc["kind"] in KINDS, f"unknown kind {doc['kind']!r}")
    try:
        F = FieldSpec.parse(str(doc["field"]))
    except SemistatError as exc:
        raise BundleError(str(exc)) from None
    if field_override is not None:
        F = field_override
    meta = doc.get("metadata", {})
    _need(isinstance(meta, dict), "metadata must be an object")
    return Bundle(doc["kind"], F, _parse_payload(doc["kind"], F, doc["payload"]), dict(meta))


def load_bundle(path: str | Path, field_override: FieldSpec | None = None) -> Bundle:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise BundleError(f"cannot read {path}: {exc.strerror or exc}") from None
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise BundleError(f"{path} is not valid JSON: {exc}") from None
    return parse_bundle(doc, field_override)


# -- writing -------------------------------------------------------------------

def _encode(val):
    if isinstance(val, Matrix):
        return matrix_to_text(val)
    if isinstance(val, dict):
        return {k: _encode(v) for k, v in val.items()}
    if isinstance(val, list):
        return [_encode(v) for v in val]
    return val


def bundle_to_document(b: Bundle) -> dict:
    doc = {"format_version": b.format_version, "kind": b.kind, "field": str(b.field)}
    if b.metadata:
        doc["metadata"] = b.metadata
    doc["payload"] = _encode(b.payload)
    return doc


def dumps_bundle(b: Bundle) -> str:
    return json.dumps(bundle_to_document(b), indent=2, sort_keys=True) + "\n"


def save_bundle(b: Bundle, path: str | Path):
    Path(path).write_text(dumps_bundle(b))


# -- structures ------------------------------------------------------------------

class Obstructed:
    """Bare carrier of per-level obstructors."""

    def __init__(self, obstructors):
        self.obstructors = tuple(obstructors)


def _bialgebra(b: Bundle) -> ObstructedBialgebra:
    p = b.payload
    return ObstructedBialgebra(b.field, p["dims"], p["m"], p["Delta"], p["e"],
                               p.get("eta"), p.get("eps"), p.get("compatibility", False))


def _cocycle(F, chain) -> RegularCocycle:
    return RegularCocycle(F, chain["dims"], chain["f"])


def structures(b: Bundle) -> dict[str, Any]:
    """Domain objects described by the bundle, keyed by role."""
    p, F = b.payload, b.field
    k = b.kind
    if k == "cocycle":
        return {"cocycle": _cocycle(F, p)}
    if k == "braiding":
        return {"braiding": RegularBraiding(_cocycle(F, p["left"]), _cocycle(F, p["right"]), p["B"], p.get("Bstar"))}
    if k == "algebra":
        return {"algebra": ObstructedAlgebra(F, p["dims"], p["m"], p["e"], p.get("associative", False))}
    if k == "coalgebra":
        return {"coalgebra": ObstructedCoalgebra(F, p["dims"], p["Delta"], p["e"], p.get("coassociative", False))}
    if k == "yb_operator":
        out: dict[str, Any] = {"carrier": Obstructed(p["e"]), "operator": RegularYBOperator(p["R"], p.get("Rstar"))}
        if "m" in p:
            out["algebra"] = ObstructedAlgebra(F, p["dims"], p["m"], p["e"], p.get("associative", False))
        if "Delta" in p:
            out["coalgebra"] = ObstructedCoalgebra(F, p["dims"], p["Delta"], p["e"], p.get("coassociative", False))
        return out
    if k == "bialgebra":
        return {"bialgebra": _bialgebra(b)}
    if k == "antipode":
        return {"bialgebra": _bialgebra(b), "antipode": AntipodePair(p["S"], p.get("Sstar"))}
    if k == "module_action":
        return {"module": ObstructedModuleAction(p["side"], p["dims"], p["rho"], p["e"]),
                "H": Obstructed(p["H"]["e"])}
    if k == "search_spec":
        return {"spec": SearchSpec(F, p["dim"], p["e"], frozenset(p.get("constraints", CONSTRAINTS)),
                                   p.get("cap", DEFAULT_CAP), p.get("workers", 1), p.get("override", False))}
    if k == "matrix":
        return {"matrix": p["M"]}
    raise BundleError(f"unknown kind {k!r}")  # pragma: no cover


def verify_bundle(b: Bundle, axioms=None, strict_stars: bool = True) -> Report:
    """Run every axiom applicable to the bundle kind, or the requested subset."""
    known = AXIOMS[b.kind]
    if axioms is not None:
        unknown = sorted(set(axioms) - set(known))
        if unknown:
            raise BundleError(f"unknown axiom(s) {unknown} for kind {b.kind!r}; known: {list(known)}")
    k = b.kind
    p = b.payload
    if k == "search_spec":
        report = Report([_idempotency(p["e"])])
    else:
        try:
            s = structures(b)
        except SemistatError as exc:
            raise BundleError(str(exc)) from None
        report = Report()
        if k == "cocycle":
            report.extend(verify_regularity(s["cocycle"]))
            if report.passed:
                report.extend(verify_obstructors(s["cocycle"]))
        elif k == "braiding":
            br = s["braiding"]
            report.extend(verify_regularity(br.left)).extend(verify_regularity(br.right))
            report.extend(verify_naturality(br))
            if br.star_components is not None:
                report.extend(verify_star_regularity(br, reflexive=strict_stars))
        elif k == "algebra":
            report.extend(verify_algebra(s["algebra"]))
        elif k == "coalgebra":
            report.extend(verify_coalgebra(s["coalgebra"]))
        elif k == "yb_operator":
            report.extend(verify_yb_operator(s["carrier"], s["operator"]))
            if "algebra" in s:
                report.extend(verify_algebra(s["algebra"]))
            if "coalgebra" in s:
                report.extend(verify_coalgebra(s["coalgebra"]))
        elif k in ("bialgebra", "antipode"):
            h = s["bialgebra"]
            report.extend(verify_bialgebra(h))
            if k == "antipode":
                report.extend(verify_regular_antipode(h, s["antipode"]))
                if h.has_unit and s["antipode"].star_antipodes is None:
                    report.extend(verify_unit_counit_antipode(h, s["antipode"]))
        elif k == "module_action":
            report.extend(verify_module_action(s["module"], s["H"]))
    if axioms is not None:
        wanted = set(axioms)
        report = Report([c for c in report.checks if c.axiom in wanted], report.warnings)
    return report


def _idempotency(e: Matrix) -> Check:
    return compare("idempotency", None, e @ e, e)


def make_bundle(kind: str, field: FieldSpec, payload: dict, description: str = "") -> Bundle:
    """Build a bundle from in-memory values, validating through a text round trip."""
    b = Bundle(kind, field, payload, {"description": description} if description else {})
    return parse_bundle(json.loads(dumps_bundle(b)))
