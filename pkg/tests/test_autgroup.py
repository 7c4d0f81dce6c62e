import itertools
from fractions import Fraction as F

import pytest

from voaplus import (
    KIND_TYPE1_NORM116,
    KIND_VIRASORO_HALF,
    SpanFailure,
    aut_group,
    build,
    conjugate,
    dihedral_check,
    distinguished_set,
    enumerate_idempotents,
    identity_element,
    validate,
    virasoro_element,
)
from voaplus._linalg import matmul, matvec


@pytest.fixture(scope="module")
def aut_b1(alg_b1):
    return aut_group(alg_b1)


def test_b1_group_is_dihedral_of_order_eight(aut_b1):
    assert aut_b1.order == 8
    assert dihedral_check(aut_b1)
    assert aut_b1.structure == "dihedral-8"
    assert aut_b1.complete


def test_both_distinguished_kinds_agree_for_b1(alg_b1):
    a = distinguished_set(alg_b1, KIND_VIRASORO_HALF)
    b = distinguished_set(alg_b1, KIND_TYPE1_NORM116)
    assert [e.coords for e in a.elements] == [e.coords for e in b.elements]
    assert a.certified_complete and b.certified_complete


def test_b0_group_is_sym4_times_2(algebras):
    result = aut_group(algebras["b0"])
    assert result.order == 48
    assert result.structure == "sym4-x-2"
    assert result.complete
    assert {s[0] for s in result.completion_scales} == {F(1), F(-1)}


def test_b2_groups_have_order_24_with_full_pair_action(algebras):
    for key in ("b2", "bm2"):
        result = aut_group(algebras[key])
        assert result.order == 24
        assert result.structure == "contains-sym3"
        assert result.complete
        assert len(result.dset.completion) == 0


def test_conjugation_membership(algebras, aut_b1):
    # the P-Q sign map is an automorphism exactly when no two v-generators
    # multiply into a third
    def conj_matrix(alg):
        return tuple(
            tuple(F((1 if i < 3 else -1) if i == j else 0) for j in range(alg.dim))
            for i in range(alg.dim)
        )

    assert conj_matrix(algebras["b1"]) in set(aut_b1.matrices)
    res0 = aut_group(algebras["b0"])
    assert conj_matrix(algebras["b0"]) in set(res0.matrices)
    res2 = aut_group(algebras["bm2"])
    assert conj_matrix(algebras["bm2"]) not in set(res2.matrices)


def test_automorphisms_fix_identity_and_conformal_element(aut_b1, alg_b1):
    ident = identity_element(alg_b1).coords
    omega = virasoro_element(alg_b1).coords
    for m in aut_b1.matrices:
        assert tuple(matvec(m, ident)) == ident
        assert tuple(matvec(m, omega)) == omega


def test_automorphisms_permute_enumerated_sets(aut_b1, alg_b1):
    small = {r.element.coords for r in enumerate_idempotents(alg_b1, 1, norm=F(1, 16))}
    big = {r.element.coords for r in enumerate_idempotents(alg_b1, 1, norm=F(3, 16))}
    for m in aut_b1.matrices:
        assert {tuple(matvec(m, c)) for c in small} == small
        assert {tuple(matvec(m, c)) for c in big} == big


def test_group_closure(aut_b1):
    index = {m: i for i, m in enumerate(aut_b1.matrices)}
    for a in aut_b1.matrices:
        for b in aut_b1.matrices:
            assert matmul(a, b) in index


def test_distinguished_set_fails_without_norm4_vectors():
    alg = build(validate([[6, 1], [1, 6]]))
    with pytest.raises(SpanFailure):
        distinguished_set(alg)


def test_four_dimensional_algebra_reports_subgroup_only(algebras):
    # two distinguished elements leave a 2-dimensional completion, so the
    # method cannot certify completeness there
    result = aut_group(algebras["rank1_4dim"])
    assert len(result.dset.elements) == 2
    assert len(result.dset.completion) == 2
    assert not result.complete
    assert result.order >= 4  # conjugation, the v sign map, and the swap-free scales


def _perm_matrix(p):
    n = len(p)
    return tuple(tuple(F(1) if p[j] == i else F(0) for j in range(n)) for i in range(n))


def test_dihedral_check_rejects_cyclic_group():
    z8 = [_perm_matrix([(j + k) % 8 for j in range(8)]) for k in range(8)]
    assert not dihedral_check(z8)


def test_dihedral_check_rejects_elementary_abelian():
    z2cube = [
        tuple(tuple(F(s[i]) if i == j else F(0) for j in range(3)) for i in range(3))
        for s in itertools.product((1, -1), repeat=3)
    ]
    assert not dihedral_check(z2cube)


def test_dihedral_check_accepts_square_symmetries():
    rot = [_perm_matrix([(j + k) % 4 for j in range(4)]) for k in range(4)]
    refl = _perm_matrix([0, 3, 2, 1])
    group = rot + [matmul(r, refl) for r in rot]
    assert dihedral_check(group)


def test_dihedral_check_needs_order_eight(aut_b1):
    with pytest.raises(ValueError):
        dihedral_check(aut_b1.matrices[:4])
