from __future__ import annotations

import json

import numpy as np
import pytest

from oracles import brute_ginverses, brute_regular_ybe
from semistat.errors import CapExceededError, DimensionError, FieldError
from semistat.exact_linalg import GF2, GF3, QQ, Matrix, inverse, kron, swap_operator
from semistat.search import (
    SearchSpec,
    SolutionCatalog,
    find_star_partner,
    recheck_catalog,
    search_regular_antipodes,
    search_regular_ybe,
)
from semistat.standard import projector_bialgebra, zero_bialgebra, z2_hopf

E = Matrix.diag(GF2, [1, 0])
I2 = Matrix.identity(GF2, 2)


@pytest.fixture(scope="module")
def projector_catalog() -> SolutionCatalog:
    return search_regular_ybe(SearchSpec(GF2, 2, E))


@pytest.fixture(scope="module")
def identity_catalog() -> SolutionCatalog:
    return search_regular_ybe(SearchSpec(GF2, 2, I2))


def test_identity_obstructor_contains_classical_solutions(identity_catalog):
    sols = identity_catalog.solutions
    assert swap_operator(2, 2, GF2) in sols and Matrix.identity(GF2, 4) in sols
    assert identity_catalog.examined == 2 ** 16


def test_projector_obstructor_contains_known_solutions(projector_catalog):
    sols = projector_catalog.solutions
    assert kron(E, E) in sols and swap_operator(2, 2, GF2) in sols


def test_projector_count_matches_independent_sweep(projector_catalog):
    oracle = brute_regular_ybe(2, 2, E.to_rows())
    assert [s.entries for s in projector_catalog.solutions] == oracle


def test_identity_count_matches_independent_sweep(identity_catalog):
    oracle = brute_regular_ybe(2, 2, I2.to_rows())
    assert [s.entries for s in identity_catalog.solutions] == oracle


def test_scalar_case():
    for e in (Matrix.identity(GF2, 1), Matrix.zeros(GF2, 1)):
        cat = search_regular_ybe(SearchSpec(GF2, 1, e))
        assert [s.entries for s in cat.solutions] == [(0,), (1,)]


def test_catalog_is_sound(projector_catalog):
    assert recheck_catalog(projector_catalog) == []
    for s, cert in zip(projector_catalog.solutions, projector_catalog.certificates):
        assert cert["failed"] == []
        star = Matrix.from_rows(GF2, cert["star_partner"])
        assert s @ star @ s == s and star @ s @ star == star


def test_worker_count_does_not_change_catalog(projector_catalog):
    four = search_regular_ybe(SearchSpec(GF2, 2, E, workers=4))
    assert json.dumps(four.to_document(), sort_keys=True) == json.dumps(projector_catalog.to_document(), sort_keys=True)


def test_constraints_are_monotone(projector_catalog):
    loose = search_regular_ybe(SearchSpec(GF2, 2, E, constraints={"regular_ybe"}))
    loose_set = {s.entries for s in loose.solutions}
    tight_set = {s.entries for s in projector_catalog.solutions}
    assert tight_set <= loose_set
    assert len(loose_set) > len(tight_set)


def test_cap_and_override():
    spec = SearchSpec(GF3, 2, Matrix.identity(GF3, 2))
    with pytest.raises(CapExceededError) as exc:
        search_regular_ybe(spec)
    assert exc.value.count == 3 ** 16 == 43046721
    assert SearchSpec(GF3, 1, Matrix.identity(GF3, 1), cap=2).candidate_count == 3


def test_spec_validation():
    with pytest.raises(FieldError):
        SearchSpec(QQ, 2, Matrix.identity(QQ, 2))
    with pytest.raises(ValueError):
        SearchSpec(GF2, 2, Matrix.from_rows(GF2, [[0, 1], [0, 0]]))
    with pytest.raises(DimensionError):
        SearchSpec(GF2, 3, I2)
    with pytest.raises(ValueError):
        SearchSpec(GF2, 2, I2, constraints={"bogus"})


def test_catalog_document_roundtrip(projector_catalog):
    doc = projector_catalog.to_document()
    assert "elapsed" not in json.dumps(doc)
    again = SolutionCatalog.from_document(json.loads(json.dumps(doc)))
    assert again.solutions == projector_catalog.solutions
    assert again.to_document() == doc


def test_recheck_flags_tampered_catalog(projector_catalog):
    doc = projector_catalog.to_document()
    doc["solutions"][0]["matrix"][0][1] ^= 1
    problems = recheck_catalog(SolutionCatalog.from_document(doc))
    assert problems


# -- star partners ------------------------------------------------------------------------

def test_star_partner_invertible():
    R = Matrix.from_rows(GF2, [[1, 1], [0, 1]])
    assert find_star_partner(R) == [inverse(R)]


def test_star_partner_zero():
    Z = Matrix.zeros(GF2, 2)
    assert find_star_partner(Z) == [Z]
    assert len(find_star_partner(Z, reflexive=False)) == 16


def test_star_partners_of_projector_square_exhaustive():
    R = kron(E, E)
    found = find_star_partner(R)
    assert R in found
    assert {x.entries for x in found} == brute_ginverses(R.to_rows(), 2)


def test_star_partner_over_q_is_ginverse():
    R = Matrix.diag(QQ, [1, 0])
    assert find_star_partner(R) == [R]


# -- regular antipodes ----------------------------------------------------------------------

def _brute_antipodes(h) -> set[tuple]:
    m, D, e = (np.array(x.to_rows(), dtype=np.int64) for x in (h.mults[0], h.comults[0], h.obstructors[0]))
    p = h.field.characteristic
    out = set()
    for flat in np.ndindex(*([p] * 4)):
        S = np.array(flat, dtype=np.int64).reshape(2, 2)

        def conv(a, b):
            return (m @ np.kron(a, b) @ D) % p
        if (conv(conv(e, S), e) == e).all() and (conv(conv(S, e), S) == S).all():
            out.add(flat)
    return out


def test_antipode_search_group_algebra():
    h = z2_hopf(GF2)
    cat = search_regular_antipodes(h)
    assert I2 in cat.solutions
    assert {s.entries for s in cat.solutions} == _brute_antipodes(h)


def test_antipode_search_projector():
    h = projector_bialgebra(GF2)
    cat = search_regular_antipodes(h)
    assert E in cat.solutions
    assert {s.entries for s in cat.solutions} == _brute_antipodes(h)


def test_antipode_search_zero_bialgebra():
    # S * e * S = S with every convolution zero forces S = 0
    cat = search_regular_antipodes(zero_bialgebra(GF2))
    assert [s.entries for s in cat.solutions] == [(0, 0, 0, 0)]
    assert {s.entries for s in cat.solutions} == _brute_antipodes(zero_bialgebra(GF2))


def test_antipode_search_rejects_q_and_cap():
    with pytest.raises(FieldError):
        search_regular_antipodes(projector_bialgebra(QQ))
    with pytest.raises(CapExceededError):
        search_regular_antipodes(z2_hopf(GF2), cap=4)
