import pytest

from voaplus import build, validate


GRAMS = {
    "b0": [[4, 0], [0, 4]],
    "b1": [[4, 1], [1, 4]],
    "bm1": [[4, -1], [-1, 4]],
    "b2": [[4, 2], [2, 4]],
    "bm2": [[4, -2], [-2, 4]],
    "rank1_4dim": [[4, 0], [0, 8]],
}


@pytest.fixture(scope="session")
def algebras():
    return {name: build(validate(gram)) for name, gram in GRAMS.items()}


@pytest.fixture(scope="session")
def alg_b1(algebras):
    return algebras["b1"]


@pytest.fixture(scope="session")
def alg_b0(algebras):
    return algebras["b0"]


@pytest.fixture(scope="session")
def alg_bm2(algebras):
    return algebras["bm2"]
