"""Exhaustive search for regular YB operators and regular antipodes over GF(p).

Candidate ``k`` in ``[0, p**D)`` is the matrix whose row-major entries are
the base-p digits of ``k``, most significant first, so index order equals
entry-lexicographic order. The range is cut into contiguous chunks, one per
worker, and results are concatenated in chunk order; catalogs therefore do
not depend on the worker count.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .errors import CapExceededError, DimensionError, FieldError
from .exact_linalg import FieldSpec, Matrix, enumerate_ginverses, is_idempotent, reflexive_ginverse
from .hopf import AntipodePair, ObstructedBialgebra, verify_regular_antipode
from .textform import matrix_from_text, matrix_to_text
from .ybop import RegularYBOperator, verify_yb_operator

CONSTRAINTS = ("commute", "regular_ybe", "star_exists")
DEFAULT_CAP = 1 << 16
_BATCH = 1 << 14


@dataclass(frozen=True)
class SearchSpec:
    field: FieldSpec
    dim: int
    obstructor: Matrix
    constraints: frozenset = frozenset(CONSTRAINTS)
    cap: int = DEFAULT_CAP
    workers: int = 1
    override: bool = False

    def __post_init__(self):
        object.__setattr__(self, "constraints", frozenset(self.constraints))
        if not self.field.is_finite:
            raise FieldError("searches need a prime field")
        unknown = self.constraints - set(CONSTRAINTS)
        if unknown:
            raise ValueError(f"unknown constraints {sorted(unknown)}")
        if self.obstructor.shape != (self.dim, self.dim) or self.obstructor.field != self.field:
            raise DimensionError("obstructor does not match the carrier")
        if not is_idempotent(self.obstructor):
            raise ValueError("obstructor must be idempotent")
        if self.workers < 1:
            raise ValueError("workers must be positive")

    @property
    def candidate_count(self) -> int:
        return self.field.characteristic ** (self.dim ** 4)

    def check_cap(self):
        if self.candidate_count > self.cap and not self.override:
            raise CapExceededError(self.candidate_count, self.cap)
        if self.candidate_count >= 1 << 62:
            raise CapExceededError(self.candidate_count, 1 << 62)

    def echo(self) -> dict:
        return {
            "kind": "regular_ybe",
            "field": str(self.field),
            "dim": self.dim,
            "obstructor": matrix_to_text(self.obstructor),
            "constraints": sorted(self.constraints),
            "candidate_count": self.candidate_count,
        }


@dataclass
class SolutionCatalog:
    spec: dict
    solutions: list[Matrix]
    certificates: list[dict]
    examined: int
    elapsed: float = field(default=0.0, compare=False)

    def __len__(self) -> int:
        return len(self.solutions)

    def to_document(self) -> dict:
        """JSON-ready form; elapsed time is deliberately left out."""
        return {
            "format_version": 1,
            "spec": self.spec,
            "examined": self.examined,
            "count": len(self.solutions),
            "solutions": [
                {"matrix": matrix_to_text(s), "certificate": c}
                for s, c in zip(self.solutions, self.certificates)
            ],
        }

    @classmethod
    def from_document(cls, doc: dict) -> SolutionCatalog:
        F = FieldSpec.parse(doc["spec"]["field"])
        sols = [matrix_from_text(F, s["matrix"]) for s in doc["solutions"]]
        certs = [s["certificate"] for s in doc["solutions"]]
        if doc.get("count", len(sols)) != len(sols):
            raise ValueError("catalog count does not match its solution list")
        return cls(doc["spec"], sols, certs, doc["examined"])

    def summary(self) -> str:
        return (f"{self.spec.get('kind')} over {self.spec.get('field')} dim={self.spec.get('dim')}: "
                f"examined={self.examined} solutions={len(self.solutions)} elapsed={self.elapsed:.2f}s")


def _digits(lo: int, hi: int, p: int, D: int) -> np.ndarray:
    ks = np.arange(lo, hi, dtype=np.int64)
    out = np.empty((hi - lo, D), dtype=np.int64)
    for t in range(D):
        out[:, t] = (ks // p ** (D - 1 - t)) % p
    return out


def _kron_left(e: np.ndarray, R: np.ndarray) -> np.ndarray:
    b, n, _ = R.shape
    d = e.shape[0]
    return np.einsum("ij,bkl->bikjl", e, R).reshape(b, d * n, d * n)


def _kron_right(R: np.ndarray, e: np.ndarray) -> np.ndarray:
    b, n, _ = R.shape
    d = e.shape[0]
    return np.einsum("bij,kl->bikjl", R, e).reshape(b, n * d, n * d)


def _scan_ybe(args) -> list[int]:
    p, e, lo, hi, constraints = args
    d = e.shape[0]
    n = d * d
    E = np.kron(e, e) % p
    found: list[int] = []
    for start in range(lo, hi, _BATCH):
        stop = min(hi, start + _BATCH)
        R = _digits(start, stop, p, n * n).reshape(-1, n, n)
        idx = np.arange(start, stop, dtype=np.int64)
        if "commute" in constraints:
            keep = ((R @ E - E @ R) % p == 0).all(axis=(1, 2))
            R, idx = R[keep], idx[keep]
        if "regular_ybe" in constraints and len(R):
            eR, Re = _kron_left(e, R), _kron_right(R, e)
            lhs = (((eR @ Re) % p) @ eR) % p
            rhs = (((Re @ eR) % p) @ Re) % p
            keep = (lhs == rhs).all(axis=(1, 2))
            idx = idx[keep]
        found.extend(int(k) for k in idx)
    return found


def _chunks(count: int, workers: int) -> list[tuple[int, int]]:
    step = -(-count // workers)
    return [(lo, min(count, lo + step)) for lo in range(0, count, step)]


def _run_chunks(fn, jobs, workers):
    if workers == 1 or len(jobs) == 1:
        return [fn(j) for j in jobs]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, jobs))


def _index_to_matrix(field: FieldSpec, k: int, rows: int, cols: int) -> Matrix:
    p = field.characteristic
    D = rows * cols
    digits = [(k // p ** (D - 1 - t)) % p for t in range(D)]
    return Matrix(field, rows, cols, tuple(digits))


class _Obstructed:
    def __init__(self, e: Matrix):
        self.obstructors = (e,)


def search_regular_ybe(spec: SearchSpec) -> SolutionCatalog:
    """All R on the square of the carrier meeting the enabled constraints."""
    spec.check_cap()
    t0 = time.perf_counter()
    p, d = spec.field.characteristic, spec.dim
    count = spec.candidate_count
    e = spec.obstructor.to_numpy()
    jobs = [(p, e, lo, hi, spec.constraints) for lo, hi in _chunks(count, spec.workers)]
    indices = [k for part in _run_chunks(_scan_ybe, jobs, spec.workers) for k in part]
    solutions, certs = [], []
    holder = _Obstructed(spec.obstructor)
    for k in indices:
        R = _index_to_matrix(spec.field, k, d * d, d * d)
        star = reflexive_ginverse(R) if "star_exists" in spec.constraints else None
        rep = verify_yb_operator(holder, RegularYBOperator((R,), None if star is None else (star,)))
        cert = _certificate(rep)
        if star is not None:
            cert["star_partner"] = matrix_to_text(star)
        _assert_sound(cert, spec.constraints)
        solutions.append(R)
        certs.append(cert)
    return SolutionCatalog(spec.echo(), solutions, certs, examined=count, elapsed=time.perf_counter() - t0)


_CONSTRAINT_AXIOM = {"commute": "obstructor_commutation", "regular_ybe": "regular_ybe", "star_exists": "star_pair"}


def _certificate(rep) -> dict:
    axioms: dict[str, bool] = {}
    for c in rep.checks:
        axioms[c.axiom] = axioms.get(c.axiom, True) and c.passed
    return {"verified": sorted(a for a, ok in axioms.items() if ok),
            "failed": sorted(a for a, ok in axioms.items() if not ok)}


def _assert_sound(cert: dict, constraints):
    for c in constraints:
        if _CONSTRAINT_AXIOM[c] not in cert["verified"]:
            raise RuntimeError(f"search filter accepted a candidate failing {c}")


def find_star_partner(r: Matrix, reflexive: bool = True, cap: int = 1 << 20) -> list[Matrix]:
    """Star partners X of R: ``R X R = R`` (and ``X R X = X`` when reflexive).

    Over a prime field the full solution set is returned in canonical order;
    over Q only the deterministic reflexive generalized inverse.
    """
    if not r.field.is_finite:
        return [reflexive_ginverse(r)]
    return enumerate_ginverses(r, cap=cap, reflexive=reflexive)


def _scan_antipodes(args) -> list[int]:
    p, m, D, e, lo, hi = args
    d = e.shape[0]
    found: list[int] = []

    def conv(s, t):
        st = np.einsum("bij,bkl->bikjl", s, t).reshape(len(s), d * d, d * d) % p
        return (m @ ((st @ D) % p)) % p

    for start in range(lo, hi, _BATCH):
        stop = min(hi, start + _BATCH)
        S = _digits(start, stop, p, d * d).reshape(-1, d, d)
        E = np.broadcast_to(e, S.shape)
        ok = (conv(conv(E, S), E) == E).all(axis=(1, 2)) & (conv(conv(S, E), S) == S).all(axis=(1, 2))
        found.extend(int(k) for k in np.arange(start, stop)[ok])
    return found


def search_regular_antipodes(h: ObstructedBialgebra, cap: int = DEFAULT_CAP, level: int = 0,
                             workers: int = 1) -> SolutionCatalog:
    """All endomorphisms S of ``H_level`` with ``e*S*e = e`` and ``S*e*S = S``."""
    if not h.field.is_finite:
        raise FieldError("searches need a prime field")
    t0 = time.perf_counter()
    p, d = h.field.characteristic, h.dims[level]
    count = p ** (d * d)
    if count > cap:
        raise CapExceededError(count, cap)
    args = (p, h.mults[level].to_numpy(), h.comults[level].to_numpy(), h.obstructors[level].to_numpy())
    jobs = [args + (lo, hi) for lo, hi in _chunks(count, workers)]
    indices = [k for part in _run_chunks(_scan_antipodes, jobs, workers) for k in part]
    solutions, certs = [], []
    for k in indices:
        S = _index_to_matrix(h.field, k, d, d)
        antipodes = [h.obstructors[i] for i in range(h.levels)]
        antipodes[level] = S
        rep = verify_regular_antipode(h, AntipodePair(tuple(antipodes)))
        level_rep = [c for c in rep.checks if c.level == level]
        if not all(c.passed for c in level_rep):
            raise RuntimeError("antipode filter accepted a candidate failing verification")
        solutions.append(S)
        certs.append({"verified": ["regular_antipode"], "failed": []})
    echo = {"kind": "regular_antipode", "field": str(h.field), "dim": d, "level": level,
            "obstructor": matrix_to_text(h.obstructors[level]), "candidate_count": count}
    return SolutionCatalog(echo, solutions, certs, examined=count, elapsed=time.perf_counter() - t0)


def recheck_catalog(cat: SolutionCatalog) -> list[str]:
    """Re-verify a regular-YBE catalog through the operator checks; returns problems."""
    problems = []
    spec = cat.spec
    F = FieldSpec.parse(spec["field"])
    e = matrix_from_text(F, spec["obstructor"])
    keys = [s.entries for s in cat.solutions]
    if keys != sorted(keys):
        problems.append("solutions are not in canonical order")
    if len(set(keys)) != len(keys):
        problems.append("duplicate solutions")
    if spec.get("kind") != "regular_ybe":
        return problems
    constraints = set(spec.get("constraints", CONSTRAINTS))
    holder = _Obstructed(e)
    for i, R in enumerate(cat.solutions):
        star = cat.certificates[i].get("star_partner")
        stars = None if star is None else (matrix_from_text(F, star),)
        cert = _certificate(verify_yb_operator(holder, RegularYBOperator((R,), stars)))
        for c in constraints:
            if _CONSTRAINT_AXIOM[c] not in cert["verified"]:
                problems.append(f"solution {i} fails {c}")
    return problems
