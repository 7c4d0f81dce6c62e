"""Rank-2 even positive-definite lattices: validation, norm shells, case analysis.

Vectors are integer coordinate pairs relative to the Gram-matrix basis; the
norm of x is x^T G x.  Shells store one representative per +-pair with the
first nonzero coordinate positive, sorted lexicographically, so every
downstream structure constant is deterministic.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from math import isqrt

from .errors import DependentBasis, NotEven, NotPositiveDefinite, NotSymmetric, ParseError

Vec = tuple[int, int]

LABEL_ROOTS_RANK2 = "roots-rank-2"
LABEL_ROOTS_RANK1 = "roots-rank-1"
LABEL_ROOTLESS_RANK2_NORM4 = "rootless-two-norm4-classes"
LABEL_ROOTLESS_RANK1_NORM4 = "rootless-one-norm4-class"
LABEL_ROOTLESS_NO_NORM4 = "rootless-no-norm4"


@dataclass(frozen=True)
class Lattice2:
    gram: tuple[tuple[int, int], tuple[int, int]]

    @property
    def det(self) -> int:
        g = self.gram
        return g[0][0] * g[1][1] - g[0][1] * g[1][0]

    @property
    def adjugate(self) -> tuple[tuple[int, int], tuple[int, int]]:
        g = self.gram
        return ((g[1][1], -g[0][1]), (-g[1][0], g[0][0]))

    def norm(self, v: Vec) -> int:
        g = self.gram
        return g[0][0] * v[0] * v[0] + 2 * g[0][1] * v[0] * v[1] + g[1][1] * v[1] * v[1]

    def inner(self, u: Vec, v: Vec) -> int:
        g = self.gram
        return (
            g[0][0] * u[0] * v[0]
            + g[0][1] * (u[0] * v[1] + u[1] * v[0])
            + g[1][1] * u[1] * v[1]
        )


@dataclass(frozen=True)
class Shell:
    norm_half: int
    vectors: tuple[Vec, ...]


@dataclass(frozen=True)
class LatticeClass:
    label: str
    params: dict

    def to_json(self) -> dict:
        return {"label": self.label, "params": dict(self.params)}


def validate(gram) -> Lattice2:
    """Accept a 2x2 symmetric, even-diagonal, positive-definite integer matrix."""
    try:
        rows = [[int(x) for x in row] for row in gram]
    except (TypeError, ValueError) as exc:
        raise ParseError(f"gram matrix must be integer 2x2: {gram!r}") from exc
    if len(rows) != 2 or any(len(r) != 2 for r in rows):
        raise ParseError(f"gram matrix must be 2x2, got {gram!r}")
    if rows[0][1] != rows[1][0]:
        raise NotSymmetric(f"gram[0][1]={rows[0][1]} differs from gram[1][0]={rows[1][0]}")
    if rows[0][0] % 2 or rows[1][1] % 2:
        raise NotEven(f"diagonal {rows[0][0]},{rows[1][1]} must be even")
    det = rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    if rows[0][0] <= 0 or det <= 0:
        raise NotPositiveDefinite(f"leading minors {rows[0][0]}, {det} must be positive")
    return Lattice2(gram=((rows[0][0], rows[0][1]), (rows[1][0], rows[1][1])))


def sign_normalize(v: Vec) -> Vec:
    if v[0] < 0 or (v[0] == 0 and v[1] < 0):
        return (-v[0], -v[1])
    return v


def shell(lat: Lattice2, m: int) -> Shell:
    """All +-pair representatives of norm 2m.

    Complete by the bound x_i^2 <= 2m * adj(G)_ii / det(G) (Cauchy-Schwarz in
    the dual basis), evaluated in integer arithmetic.
    """
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    target = 2 * m
    adj = lat.adjugate
    b0 = isqrt(target * adj[0][0] // lat.det)
    b1 = isqrt(target * adj[1][1] // lat.det)
    found = set()
    for x0 in range(-b0, b0 + 1):
        for x1 in range(-b1, b1 + 1):
            if lat.norm((x0, x1)) == target:
                found.add(sign_normalize((x0, x1)))
    return Shell(norm_half=m, vectors=tuple(sorted(found)))


def _shell_rank(s: Shell) -> int:
    return min(2, len(s.vectors))


def _annihilator_generator(lat: Lattice2, r: Vec) -> Vec:
    """Primitive generator of {x in L : (x, r) = 0}."""
    g = lat.gram
    a = g[0][0] * r[0] + g[0][1] * r[1]
    b = g[1][0] * r[0] + g[1][1] * r[1]
    from math import gcd

    d = gcd(abs(a), abs(b))
    return sign_normalize((-b // d, a // d))


def _nearest_int(num: int, den: int) -> int:
    # floor(num/den + 1/2): nearest integer, ties rounded up; den > 0
    return (2 * num + den) // (2 * den)


def lagrange_gauss(lat: Lattice2):
    """Lagrange-Gauss reduction: unimodular C with C^T G C reduced.

    The reduced Gram matrix [[a,b],[b,d]] satisfies 2|b| <= a <= d.
    """
    g = [list(row) for row in lat.gram]
    c = [[1, 0], [0, 1]]

    def apply(col_op):
        # col_op maps (v0, v1) -> new pair of basis vectors, in coordinates
        nonlocal g, c
        m = col_op
        c = [[c[0][0] * m[0][0] + c[0][1] * m[1][0], c[0][0] * m[0][1] + c[0][1] * m[1][1]],
             [c[1][0] * m[0][0] + c[1][1] * m[1][0], c[1][0] * m[0][1] + c[1][1] * m[1][1]]]
        g00 = g[0][0] * m[0][0] ** 2 + 2 * g[0][1] * m[0][0] * m[1][0] + g[1][1] * m[1][0] ** 2
        g11 = g[0][0] * m[0][1] ** 2 + 2 * g[0][1] * m[0][1] * m[1][1] + g[1][1] * m[1][1] ** 2
        g01 = (g[0][0] * m[0][0] * m[0][1] + g[0][1] * (m[0][0] * m[1][1] + m[0][1] * m[1][0])
               + g[1][1] * m[1][0] * m[1][1])
        g = [[g00, g01], [g01, g11]]

    while True:
        if g[0][0] > g[1][1]:
            apply([[0, 1], [1, 0]])
        mu = _nearest_int(g[0][1], g[0][0])
        if mu != 0:
            apply([[1, -mu], [0, 1]])
        if g[0][0] <= g[1][1] and 2 * abs(g[0][1]) <= g[0][0]:
            break
    return Lattice2(gram=((g[0][0], g[0][1]), (g[1][0], g[1][1]))), tuple(tuple(row) for row in c)


def classify(lat: Lattice2) -> LatticeClass:
    """Case analysis on the norm-2 and norm-4 shells.

    The signed two-norm4-generator parameter b depends on the basis found by
    reduction, so reports carry |b| alongside it; |b| is a GL2(Z) invariant.
    """
    roots = shell(lat, 1)
    four = shell(lat, 2)
    if _shell_rank(roots) == 2:
        root_type = "A2" if lat.det == 3 else "A1xA1"
        return LatticeClass(LABEL_ROOTS_RANK2, {"root_type": root_type, "det": lat.det})
    if _shell_rank(roots) == 1:
        r = roots.vectors[0]
        s = _annihilator_generator(lat, r)
        s_norm = lat.norm(s)
        span_det = 2 * s_norm
        index = isqrt(span_det // lat.det)
        assert index * index * lat.det == span_det
        return LatticeClass(
            LABEL_ROOTS_RANK1,
            {"s_norm": s_norm, "overlattice_index": index,
             "s_norm_mod_8": s_norm % 8},
        )
    if _shell_rank(four) == 2:
        reduced, _ = lagrange_gauss(lat)
        g = reduced.gram
        assert g[0][0] == 4 and g[1][1] == 4 and abs(g[0][1]) <= 2
        return LatticeClass(
            LABEL_ROOTLESS_RANK2_NORM4,
            {"b": abs(g[0][1]), "b_signed": g[0][1], "dim_degree2": 3 + len(four.vectors)},
        )
    if _shell_rank(four) == 1:
        r = four.vectors[0]
        s = _annihilator_generator(lat, r)
        s_norm = lat.norm(s)
        span_det = 4 * s_norm
        order = isqrt(span_det // lat.det)
        assert order * order * lat.det == span_det
        return LatticeClass(
            LABEL_ROOTLESS_RANK1_NORM4,
            {"s_norm": s_norm, "quotient_order": order},
        )
    return LatticeClass(LABEL_ROOTLESS_NO_NORM4, {"det": lat.det})


def index_determinant_check(lat: Lattice2, basis) -> tuple[int, bool]:
    """Index |L:M| of the sublattice spanned by two vectors, plus the check
    det(M) == det(L) * index^2."""
    (v1, v2) = (tuple(int(x) for x in basis[0]), tuple(int(x) for x in basis[1]))
    det_c = v1[0] * v2[1] - v1[1] * v2[0]
    if det_c == 0:
        raise DependentBasis(f"vectors {v1}, {v2} are linearly dependent")
    index = abs(det_c)
    det_m = (lat.norm(v1) * lat.norm(v2) - lat.inner(v1, v2) ** 2)
    return index, det_m == lat.det * index * index


def from_json_file(path) -> Lattice2:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            payload = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise ParseError(f"cannot read gram matrix from {path}: {exc}") from exc
    if not isinstance(payload, dict) or "gram" not in payload:
        raise ParseError(f"expected a JSON object with a 'gram' key in {path}")
    return validate(payload["gram"])


def shell_to_json(s: Shell) -> dict:
    return {"norm_half": s.norm_half, "norm": 2 * s.norm_half,
            "vectors": [list(v) for v in s.vectors]}
