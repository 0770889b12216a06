from __future__ import annotations

import random

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import Arith, braid_relation_holds, regular_ybe_sides
from semistat.cocycle import random_idempotent
from semistat.errors import DimensionError, VerificationError
from semistat.exact_linalg import GF2, GF3, QQ, Matrix, kron, swap_operator
from semistat.standard import (
    flip_operator,
    group_mult_z2,
    grouplike_comult,
    projector,
    projector_algebra,
    projector_coalgebra,
    projector_square_operator,
    z2_algebra,
    z2_coalgebra,
)
from semistat.ybop import (
    ObstructedAlgebra,
    ObstructedCoalgebra,
    RegularYBOperator,
    random_algebra,
    random_coalgebra,
    random_yb_operator,
    twist_comultiplication,
    twist_multiplication,
    verify_algebra,
    verify_coalgebra,
    verify_yb_operator,
    ybr_sides,
)

P = projector(QQ)
E000 = Matrix.diag(QQ, [1] + [0] * 7)


class Carrier:
    def __init__(self, *obs):
        self.obstructors = obs


# -- algebras and coalgebras ----------------------------------------------------------

def test_classical_group_algebra_passes():
    assert verify_algebra(z2_algebra(GF2)).passed


def test_projector_algebra_passes():
    a = projector_algebra(QQ)
    rep = verify_algebra(a)
    assert rep.passed and {c.axiom for c in rep.checks} == {"multiplication_consistency", "associativity"}
    m = a.mults[0]
    # all four basis products
    assert [m.column(k) for k in range(4)] == [(1, 0), (0, 0), (0, 0), (0, 0)]


def test_group_multiplication_with_projector_fails_consistency():
    a = ObstructedAlgebra(QQ, (2,), (group_mult_z2(QQ),), (P,))
    bad = verify_algebra(a).first_failure()
    assert bad.axiom == "multiplication_consistency" and bad.witness is not None


def test_coalgebra_examples():
    assert verify_coalgebra(z2_coalgebra(QQ)).passed
    assert verify_coalgebra(projector_coalgebra(QQ)).passed
    # Delta(e1) = e1 (x) e1 with e = diag(1,0): both sides kill e1, so this passes
    D = Matrix.basis_map(QQ, 4, 2, {0: {0: 1}, 1: {3: 1}})
    assert verify_coalgebra(ObstructedCoalgebra(QQ, (2,), (D,), (P,))).passed
    # Delta(e1) = e0 (x) e0 leaks the killed vector into the image of e (x) e
    D = Matrix.basis_map(QQ, 4, 2, {0: {0: 1}, 1: {0: 1}})
    rep = verify_coalgebra(ObstructedCoalgebra(QQ, (2,), (D,), (P,)))
    bad = rep.first_failure()
    assert bad.axiom == "comultiplication_consistency"
    assert (bad.witness.row, bad.witness.col) == (0, 1)


def test_algebra_shape_checks():
    with pytest.raises(DimensionError):
        ObstructedAlgebra(QQ, (2,), (Matrix.zeros(QQ, 2, 3),), (P,))
    with pytest.raises(DimensionError):
        ObstructedCoalgebra(QQ, (2, 2), (grouplike_comult(QQ),), (P,))


def test_associativity_only_checked_when_claimed():
    # consistent but non-associative: e0 e0 = e1, e1 e0 = e0, so (e0 e0) e0 != e0 (e0 e0)
    m = Matrix.basis_map(QQ, 2, 4, {0: {1: 1}, 2: {0: 1}})
    a = ObstructedAlgebra(QQ, (2,), (m,), (Matrix.identity(QQ, 2),))
    assert verify_algebra(a).passed
    claimed = ObstructedAlgebra(QQ, (2,), (m,), (Matrix.identity(QQ, 2),), associative=True)
    assert not verify_algebra(claimed).passed


# -- regular YB operators ------------------------------------------------------------------

def test_classical_swap():
    rep = verify_yb_operator(Carrier(Matrix.identity(QQ, 2)), flip_operator(QQ))
    assert rep.passed


@pytest.mark.parametrize("R", [kron(P, P), swap_operator(2, 2, QQ)], ids=["kron_e_e", "swap"])
def test_projector_operators_collapse_to_triple_line(R):
    lhs, rhs = ybr_sides(P, R)
    assert lhs == rhs == E000
    A = Arith(None)
    ol, orr = regular_ybe_sides(A.arr(P.to_rows()), A.arr(R.to_rows()), 2)
    assert lhs.to_rows() == ol.tolist() and rhs.to_rows() == orr.tolist()
    assert verify_yb_operator(Carrier(P), RegularYBOperator((R,), (R,))).passed


def test_non_commuting_operator_fails():
    R = Matrix.identity(QQ, 4).replace(0, 1, 1)
    rep = verify_yb_operator(Carrier(P), RegularYBOperator((R,)))
    assert not rep.for_axiom("obstructor_commutation")[0].passed


def test_star_pair_checked():
    R = kron(P, P)
    assert not verify_yb_operator(Carrier(P), RegularYBOperator((R,), (Matrix.zeros(QQ, 4),))).passed
    with pytest.raises(VerificationError):
        RegularYBOperator((R,)).swapped()
    assert RegularYBOperator((R,), (swap_operator(2, 2, QQ),)).swapped().operators[0] == swap_operator(2, 2, QQ)


def test_level_count_mismatch():
    with pytest.raises(DimensionError):
        verify_yb_operator(Carrier(P, P), flip_operator(QQ))


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([QQ, GF2, GF3]), st.integers(1, 3), st.integers(0, 10**6))
def test_generated_operators_solve_regular_ybe(field, d, seed):
    rng = random.Random(seed)
    e = random_idempotent(field, d, rng)
    R = random_yb_operator(e, rng)
    assert verify_yb_operator(Carrier(e), RegularYBOperator((R,))).passed
    A = Arith(field.characteristic)
    lhs, rhs = regular_ybe_sides(A.arr(e.to_rows()), A.arr(R.to_rows()), d, A.p)
    assert A.eq(lhs, rhs)


@settings(max_examples=80, deadline=None)
@given(st.integers(2, 3), st.integers(0, 10**6))
def test_identity_obstructor_matches_classical_braid_relation(d, seed):
    rng = random.Random(seed)
    if rng.random() < 0.5:
        R = random_yb_operator(Matrix.identity(GF2, d), rng)
    else:
        R = Matrix.build(GF2, d * d, d * d, [rng.randrange(2) for _ in range(d ** 4)])
    ok = verify_yb_operator(Carrier(Matrix.identity(GF2, d)), RegularYBOperator((R,))).passed
    assert ok == braid_relation_holds(np.array(R.to_rows(), dtype=np.int64), d, 2)


# -- twists -----------------------------------------------------------------------------------

def test_twist_by_identity_is_noop():
    a = projector_algebra(QQ)
    ident = RegularYBOperator((Matrix.identity(QQ, 4),))
    assert twist_multiplication(a, ident) == a
    c = projector_coalgebra(QQ)
    assert twist_comultiplication(c, ident) == c


def test_twist_projector_algebra_by_kron_e_e():
    a = projector_algebra(QQ)
    out = twist_multiplication(a, projector_square_operator(QQ))
    assert out.mults == a.mults


def test_twist_commutative_group_algebra_by_swap():
    a = z2_algebra(GF2)
    out = twist_multiplication(a, flip_operator(GF2))
    assert out.mults == a.mults
    assert verify_algebra(out).passed


def test_twist_coalgebras():
    c = z2_coalgebra(QQ)
    assert twist_comultiplication(c, flip_operator(QQ)).comults == c.comults
    p = projector_coalgebra(QQ)
    assert twist_comultiplication(p, projector_square_operator(QQ)).comults == p.comults


def test_twist_rejects_unverified_inputs():
    bad = ObstructedAlgebra(QQ, (2,), (group_mult_z2(QQ),), (P,))
    with pytest.raises(VerificationError):
        twist_multiplication(bad, flip_operator(QQ))
    R = Matrix.identity(QQ, 4).replace(0, 1, 1)
    with pytest.raises(VerificationError):
        twist_multiplication(projector_algebra(QQ), RegularYBOperator((R,)))


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([QQ, GF2, GF3]), st.lists(st.integers(1, 3), min_size=1, max_size=3), st.integers(0, 10**6))
def test_twists_preserve_consistency(field, dims, seed):
    rng = random.Random(seed)
    a = random_algebra(field, dims, rng)
    c = random_coalgebra(field, dims, rng, obstructors=a.obstructors)
    r = RegularYBOperator(tuple(random_yb_operator(e, rng) for e in a.obstructors))
    assert verify_algebra(twist_multiplication(a, r)).passed
    assert verify_coalgebra(twist_comultiplication(c, r)).passed


def test_twist_drops_associativity_claim_that_does_not_survive():
    a = ObstructedAlgebra(QQ, (2,), (group_mult_z2(QQ),), (Matrix.identity(QQ, 2),), associative=True)
    kept = twist_multiplication(a, flip_operator(QQ))
    assert kept.associative and verify_algebra(kept).passed
    # a scaled flip solves the braid relation but breaks associativity of m o R
    R = Matrix.from_rows(QQ, [[1, 0, 0, 0], [0, 0, 3, 0], [0, 3, 0, 0], [0, 0, 0, 9]])
    out = twist_multiplication(a, RegularYBOperator((R,)))
    assert not out.associative and verify_algebra(out).passed
    claimed = ObstructedAlgebra(QQ, (2,), out.mults, out.obstructors, associative=True)
    assert not verify_algebra(claimed).passed
