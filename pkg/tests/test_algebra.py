import random
from fractions import Fraction as F

import pytest

from voaplus import (
    AlgebraMismatch,
    HasRoots,
    algebra_from_json,
    algebra_to_json,
    build,
    conjugate,
    form_eval,
    identity_element,
    orthogonal_square,
    pair_tensor,
    pq_split,
    product,
    v_element,
    validate,
    vector_square,
    virasoro_element,
)


def test_build_dimensions(algebras):
    assert algebras["b1"].dim == 5
    assert algebras["bm2"].dim == 6
    assert algebras["rank1_4dim"].dim == 4


def test_build_rejects_roots():
    with pytest.raises(HasRoots):
        build(validate([[2, -1], [-1, 2]]))


def test_square_products_follow_inner_products(alg_b1):
    r2 = vector_square(alg_b1, (1, 0))
    s2 = vector_square(alg_b1, (0, 1))
    rs = pair_tensor(alg_b1, (1, 0), (0, 1))
    assert product(r2, s2) == rs.scale(4)  # 4*(r,s) with (r,s)=1
    assert product(r2, r2) == r2.scale(16)


def test_v_generators_square_to_tensors(alg_b1):
    vr = v_element(alg_b1, (1, 0))
    vs = v_element(alg_b1, (0, 1))
    assert product(vr, vr) == vector_square(alg_b1, (1, 0))
    assert product(vr, vs).is_zero()


def test_v_generators_multiply_into_third_for_b_two(alg_bm2):
    vr = v_element(alg_bm2, (1, 0))
    vs = v_element(alg_bm2, (0, 1))
    assert product(vr, vs) == v_element(alg_bm2, (1, 1))


def test_identity_formula_two_generators(alg_b1):
    ident = identity_element(alg_b1)
    expected = (
        vector_square(alg_b1, (1, 0)).scale(F(4, 60))
        + vector_square(alg_b1, (0, 1)).scale(F(4, 60))
        + pair_tensor(alg_b1, (1, 0), (0, 1)).scale(F(-2, 60))
    )
    assert ident == expected


def test_identity_formula_orthogonal_case(algebras):
    alg = algebras["rank1_4dim"]
    # quarter of the dual-basis tensor sum: (1/16) r^2 + (1/32) s^2
    assert identity_element(alg).coords == (F(1, 16), F(0), F(1, 32), F(0))


def test_identity_acts_trivially_everywhere(algebras):
    rng = random.Random(1)
    for alg in algebras.values():
        ident = identity_element(alg)
        assert product(ident, ident) == ident
        x = alg.element([F(rng.randint(-9, 9), rng.randint(1, 7)) for _ in range(alg.dim)])
        assert product(ident, x) == x


def test_virasoro_element_axioms(algebras):
    for alg in algebras.values():
        ident = identity_element(alg)
        omega = virasoro_element(alg)
        assert omega == ident.scale(2)
        assert form_eval(ident, ident) == F(1, 4)
        assert form_eval(omega, omega) == F(1)
        for i in range(alg.dim):
            assert product(omega, alg.basis_element(i)) == alg.basis_element(i).scale(2)


def test_form_values(alg_b1):
    r2 = vector_square(alg_b1, (1, 0))
    vr = v_element(alg_b1, (1, 0))
    assert form_eval(r2, r2) == 32
    assert form_eval(vr, vr) == 2


def test_form_associativity_on_all_bases(algebras):
    for alg in algebras.values():
        es = [alg.basis_element(i) for i in range(alg.dim)]
        for x in es:
            for y in es:
                for z in es:
                    assert form_eval(product(x, y), z) == form_eval(x, product(y, z))


@pytest.mark.parametrize("b,key", [(-2, "bm2"), (-1, "bm1"), (0, "b0"), (1, "b1"), (2, "b2")])
def test_two_generator_product_table(algebras, b, key):
    alg = algebras[key]
    r2 = vector_square(alg, (1, 0))
    s2 = vector_square(alg, (0, 1))
    rs = pair_tensor(alg, (1, 0), (0, 1))
    vr = v_element(alg, (1, 0))
    vs = v_element(alg, (0, 1))
    assert product(r2, s2) == rs.scale(4 * b)
    assert product(rs, rs) == r2.scale(4) + s2.scale(4) + rs.scale(2 * b)
    assert product(r2, rs) == rs.scale(8) + r2.scale(2 * b)
    assert product(s2, rs) == rs.scale(8) + s2.scale(2 * b)
    assert product(r2, vr) == vr.scale(16)
    assert product(s2, vr) == vr.scale(b * b)
    assert product(r2, vr) == vr.scale(form_eval(r2, r2) / 2)
    assert form_eval(r2, s2) == 2 * b * b
    assert form_eval(rs, rs) == 16 + b * b
    assert form_eval(rs, r2) == 8 * b
    assert form_eval(vr, vs) == 0
    if abs(b) <= 1:
        assert product(vr, vs).is_zero()


def test_halved_square_plus_v_is_virasoro(algebras):
    # (1/16) t^2 + (1/4) v_t has square twice itself and norm 1/4, for every
    # shell vector t of every buildable fixture
    for alg in algebras.values():
        for vec in alg.shell_vectors:
            w = vector_square(alg, vec).scale(F(1, 16)) + v_element(alg, vec).scale(F(1, 4))
            assert product(w, w) == w.scale(2)
            assert form_eval(w, w) == F(1, 4)


def test_pq_split_and_conjugate(alg_b1):
    w = vector_square(alg_b1, (1, 0)).scale(F(1, 32)) + v_element(alg_b1, (1, 0)).scale(F(1, 8))
    p, q = pq_split(w)
    assert p == vector_square(alg_b1, (1, 0)).scale(F(1, 32))
    assert q == v_element(alg_b1, (1, 0)).scale(F(1, 8))
    assert conjugate(w) == p - q
    assert conjugate(conjugate(w)) == w
    assert conjugate(p) == p


def test_conjugation_is_automorphism_when_v_products_vanish(algebras):
    for key in ("b0", "b1", "bm1", "rank1_4dim"):
        alg = algebras[key]
        es = [alg.basis_element(i) for i in range(alg.dim)]
        for x in es:
            for y in es:
                assert conjugate(product(x, y)) == product(conjugate(x), conjugate(y))


def test_conjugation_fails_on_triangular_shell(alg_bm2):
    vr = v_element(alg_bm2, (1, 0))
    vs = v_element(alg_bm2, (0, 1))
    assert conjugate(product(vr, vs)) != product(conjugate(vr), conjugate(vs))


def test_orthogonal_square_has_norm_four(algebras):
    for alg in algebras.values():
        for vec in alg.shell_vectors:
            t2 = orthogonal_square(alg, vec)
            assert form_eval(t2, t2) == 32  # = 2*(t,t)^2 with (t,t)=4
            assert product(t2, vector_square(alg, vec)).is_zero()


def test_elements_of_different_algebras_do_not_mix(algebras):
    with pytest.raises(AlgebraMismatch):
        product(identity_element(algebras["b1"]), identity_element(algebras["b0"]))


def test_json_round_trip(algebras):
    for alg in algebras.values():
        payload = algebra_to_json(alg)
        back = algebra_from_json(payload)
        assert back.mult == alg.mult
        assert back.form == alg.form
        assert back.identity_coords == alg.identity_coords
        assert back.basis == alg.basis
