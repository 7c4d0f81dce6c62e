import random

import pytest

from voaplus import (
    DependentBasis,
    NotEven,
    NotPositiveDefinite,
    NotSymmetric,
    index_determinant_check,
    lagrange_gauss,
    shell,
    validate,
)
from voaplus.lattice import (
    LABEL_ROOTLESS_NO_NORM4,
    LABEL_ROOTLESS_RANK1_NORM4,
    LABEL_ROOTLESS_RANK2_NORM4,
    LABEL_ROOTS_RANK1,
    LABEL_ROOTS_RANK2,
    classify,
)


def test_validate_accepts_two_generator_gram():
    lat = validate([[4, 1], [1, 4]])
    assert lat.gram == ((4, 1), (1, 4))
    assert lat.det == 15


def test_validate_rejects_indefinite():
    with pytest.raises(NotPositiveDefinite):
        validate([[2, 3], [3, 2]])


def test_validate_rejects_odd_diagonal():
    with pytest.raises(NotEven):
        validate([[3, 0], [0, 4]])


def test_validate_rejects_asymmetric():
    with pytest.raises(NotSymmetric):
        validate([[4, 1], [2, 4]])


def test_shell_no_roots_when_minimum_is_four():
    assert shell(validate([[4, 1], [1, 4]]), 1).vectors == ()


def test_shell_three_root_pairs_in_a2():
    assert shell(validate([[2, -1], [-1, 2]]), 1).vectors == ((0, 1), (1, 0), (1, 1))


def test_shell_three_norm4_pairs_in_scaled_a2():
    assert shell(validate([[4, -2], [-2, 4]]), 2).vectors == ((0, 1), (1, 0), (1, 1))


def _sweep_oracle(lat, m, margin=3):
    from math import isqrt

    adj = lat.adjugate
    b0 = isqrt(2 * m * adj[0][0] // lat.det) + margin
    b1 = isqrt(2 * m * adj[1][1] // lat.det) + margin
    found = set()
    for x0 in range(-b0, b0 + 1):
        for x1 in range(-b1, b1 + 1):
            if lat.norm((x0, x1)) == 2 * m:
                if x0 < 0 or (x0 == 0 and x1 < 0):
                    continue
                found.add((x0, x1))
    return tuple(sorted(found))


@pytest.mark.parametrize("gram", [[[4, 1], [1, 4]], [[4, -2], [-2, 4]], [[2, 0], [0, 6]], [[6, 1], [1, 6]]])
def test_shell_complete_against_wider_sweep(gram):
    lat = validate(gram)
    for m in range(1, 11):
        s = shell(lat, m)
        assert s.vectors == _sweep_oracle(lat, m)
        assert all(lat.norm(v) == 2 * m for v in s.vectors)


def test_classify_scaled_a2_is_b2():
    got = classify(validate([[4, 2], [2, 4]]))
    assert got.label == LABEL_ROOTLESS_RANK2_NORM4
    assert got.params["b"] == 2


def test_classify_a1_square_roots():
    got = classify(validate([[2, 0], [0, 2]]))
    assert got.label == LABEL_ROOTS_RANK2
    assert got.params["root_type"] == "A1xA1"


def test_classify_a2_roots():
    got = classify(validate([[2, -1], [-1, 2]]))
    assert got.label == LABEL_ROOTS_RANK2
    assert got.params["root_type"] == "A2"


def test_classify_one_norm4_class():
    got = classify(validate([[4, 0], [0, 8]]))
    assert got.label == LABEL_ROOTLESS_RANK1_NORM4
    assert got.params == {"s_norm": 8, "quotient_order": 1}


def test_classify_root_rank1_overlattice():
    # index-2 overlattice of a rectangular root lattice; the annihilator
    # generator must satisfy (s,s) >= 14 and (s,s) = 6 mod 8
    got = classify(validate([[2, 1], [1, 4]]))
    assert got.label == LABEL_ROOTS_RANK1
    assert got.params["overlattice_index"] == 2
    assert got.params["s_norm"] == 14
    assert got.params["s_norm"] % 8 == 6


def test_classify_root_rank1_rectangular():
    got = classify(validate([[2, 0], [0, 6]]))
    assert got.label == LABEL_ROOTS_RANK1
    assert got.params["overlattice_index"] == 1


def test_classify_no_norm4():
    got = classify(validate([[6, 1], [1, 6]]))
    assert got.label == LABEL_ROOTLESS_NO_NORM4


def test_classify_quotient_order_two():
    got = classify(validate([[4, 2], [2, 6]]))
    assert got.label == LABEL_ROOTLESS_RANK1_NORM4
    assert got.params["quotient_order"] == 2
    assert got.params["s_norm"] % 8 == 4


def _random_unimodular(rng):
    while True:
        u = [[rng.randint(-3, 3) for _ in range(2)] for _ in range(2)]
        if abs(u[0][0] * u[1][1] - u[0][1] * u[1][0]) == 1:
            return u


def _transform(gram, u):
    return [
        [
            sum(u[a][i] * gram[a][b] * u[b][j] for a in range(2) for b in range(2))
            for j in range(2)
        ]
        for i in range(2)
    ]


@pytest.mark.parametrize(
    "gram",
    [[[4, 0], [0, 4]], [[4, 1], [1, 4]], [[4, -2], [-2, 4]], [[4, 0], [0, 8]], [[2, 1], [1, 4]], [[6, 1], [1, 6]]],
)
def test_classify_stable_under_unimodular_change(gram):
    rng = random.Random(20260810)
    base = classify(validate(gram))
    for _ in range(25):
        moved = classify(validate(_transform(gram, _random_unimodular(rng))))
        assert moved.label == base.label
        if "b" in base.params:
            assert moved.params["b"] == base.params["b"]
        for key in ("s_norm", "quotient_order", "overlattice_index", "root_type"):
            assert moved.params.get(key) == base.params.get(key)


def test_two_norm4_generators_reduce_to_small_b():
    rng = random.Random(7)
    checked = 0
    while checked < 20:
        gram = [[4, 0], [0, 4]]
        gram = _transform(gram, _random_unimodular(rng))  # keep b=0 class
        lat = validate(gram)
        reduced, basis_change = lagrange_gauss(lat)
        assert abs(reduced.gram[0][1]) * 2 <= reduced.gram[0][0] <= reduced.gram[1][1]
        det = basis_change[0][0] * basis_change[1][1] - basis_change[0][1] * basis_change[1][0]
        assert abs(det) == 1
        checked += 1
    for gram in ([[4, 1], [1, 4]], [[4, 6], [6, 12]], [[4, 2], [2, 4]]):
        got = classify(validate(gram))
        assert got.label == LABEL_ROOTLESS_RANK2_NORM4
        assert abs(got.params["b_signed"]) <= 2


def _smith_index(v1, v2):
    # Smith normal form of the 2x2 coordinate matrix; product of the
    # elementary divisors is the subgroup index
    from math import gcd

    a, b, c, d = v1[0], v2[0], v1[1], v2[1]
    det = abs(a * d - b * c)
    g = gcd(gcd(abs(a), abs(b)), gcd(abs(c), abs(d)))
    return g * (det // g) if g else 0, (g, det // g if g else 0)


def test_index_determinant_simple():
    lat = validate([[2, 0], [0, 2]])
    index, holds = index_determinant_check(lat, [(2, 0), (0, 1)])
    assert index == 2 and holds


def test_index_determinant_identity_case():
    lat = validate([[4, 1], [1, 4]])
    index, holds = index_determinant_check(lat, [(1, 0), (0, 1)])
    assert index == 1 and holds


def test_index_determinant_vs_smith_oracle():
    lat = validate([[2, -1], [-1, 2]])
    v1, v2 = (1, -1), (1, 1)
    index, holds = index_determinant_check(lat, [v1, v2])
    smith_prod, _ = _smith_index(v1, v2)
    assert holds and index == smith_prod == 2


def test_index_determinant_rejects_dependent():
    lat = validate([[2, 0], [0, 2]])
    with pytest.raises(DependentBasis):
        index_determinant_check(lat, [(1, 1), (2, 2)])
