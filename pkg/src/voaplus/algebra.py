"""The degree-2 algebra of a rootless rank-2 even lattice, over exact rationals.

Basis: the three symmetric tensors r^2, rs, s^2 built from the lattice basis,
then one generator v[x,y] per +-pair of norm-4 vectors, in shell order.  All
products and the invariant bilinear form are bilinear extensions of the rules
on monomials:

    [ab] x [cd] = (a,c)bd + (a,d)bc + (b,c)ad + (b,d)ac
    [ab] x v_t  = (a,t)(b,t) v_t
    v_t x v_u   = 0 if (t,u) in {0,+-1,+-3};  v_{t+u} if (t,u) = -2;
                  v_{t-u} if (t,u) = 2;  t^2 (a tensor) if t = +-u
    ([ab],[cd]) = (a,c)(b,d) + (a,d)(b,c);   (v_t,v_u) = 2 delta;  (S^2H, v) = 0

with the sign cocycle fixed to +1 throughout.  The identity is one quarter of
the dual-basis tensor sum and the conformal element is twice the identity.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from . import lattice as latmod
from .errors import AlgebraMismatch, HasRoots, ParseError
from .lattice import Lattice2, sign_normalize
from .rationals import decode_matrix, decode_vector, encode_matrix, encode_vector

Coords = tuple[Fraction, ...]

_MONO_PAIRS = ((0, 0), (0, 1), (1, 1))


@dataclass(frozen=True)
class Degree2Algebra:
    lattice: Lattice2
    basis: tuple[str, ...]
    shell_vectors: tuple[tuple[int, int], ...]
    mult: tuple[tuple[Coords, ...], ...]   # mult[i][j] = coords of basis_i x basis_j
    form: tuple[Coords, ...]
    identity_coords: Coords
    virasoro_coords: Coords

    @property
    def dim(self) -> int:
        return len(self.basis)

    def element(self, coords) -> "AlgebraElement":
        coords = tuple(Fraction(c) for c in coords)
        if len(coords) != self.dim:
            raise AlgebraMismatch(f"expected {self.dim} coordinates, got {len(coords)}")
        return AlgebraElement(self, coords)

    def zero(self) -> "AlgebraElement":
        return self.element((0,) * self.dim)

    def basis_element(self, i: int) -> "AlgebraElement":
        return self.element(tuple(Fraction(int(i == j)) for j in range(self.dim)))


@dataclass(frozen=True)
class AlgebraElement:
    algebra: Degree2Algebra
    coords: Coords

    def _check(self, other: "AlgebraElement") -> None:
        if self.algebra is not other.algebra and self.algebra != other.algebra:
            raise AlgebraMismatch("elements live in different algebras")

    def __add__(self, other):
        self._check(other)
        return AlgebraElement(self.algebra, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other):
        self._check(other)
        return AlgebraElement(self.algebra, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self):
        return AlgebraElement(self.algebra, tuple(-a for a in self.coords))

    def scale(self, c) -> "AlgebraElement":
        c = Fraction(c)
        return AlgebraElement(self.algebra, tuple(c * a for a in self.coords))

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            return product(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def norm(self) -> Fraction:
        return form_eval(self, self)

    def is_idempotent(self) -> bool:
        return product(self, self) == self

    def __repr__(self):
        terms = [f"{c}*{lab}" for c, lab in zip(self.coords, self.algebra.basis) if c != 0]
        return " + ".join(terms) if terms else "0"


def build(lat: Lattice2) -> Degree2Algebra:
    """Construct the algebra; rejects lattices with norm-2 vectors."""
    roots = latmod.shell(lat, 1)
    if roots.vectors:
        raise HasRoots(f"lattice has {2 * len(roots.vectors)} norm-2 vectors; degree-1 part is nonzero")
    vecs = latmod.shell(lat, 2).vectors
    dim = 3 + len(vecs)
    v_index = {v: 3 + i for i, v in enumerate(vecs)}
    gram = lat.gram

    def inner(u, v):
        return lat.inner(u, v)

    def mono_coords(p: int, q: int) -> list[Fraction]:
        # coordinates of the symmetric tensor e_p e_q inside S^2H
        out = [Fraction(0)] * dim
        out[_MONO_PAIRS.index((min(p, q), max(p, q)))] = Fraction(1)
        return out

    def square_coords(vec) -> list[Fraction]:
        out = [Fraction(0)] * dim
        out[0] = Fraction(vec[0] * vec[0])
        out[1] = Fraction(2 * vec[0] * vec[1])
        out[2] = Fraction(vec[1] * vec[1])
        return out

    mult = [[None] * dim for _ in range(dim)]
    form = [[Fraction(0)] * dim for _ in range(dim)]

    for a in range(3):
        i, j = _MONO_PAIRS[a]
        for b in range(3):
            k, l = _MONO_PAIRS[b]
            out = [Fraction(0)] * dim
            for coef, (p, q) in (
                (gram[i][k], (j, l)),
                (gram[i][l], (j, k)),
                (gram[j][k], (i, l)),
                (gram[j][l], (i, k)),
            ):
                if coef:
                    mc = mono_coords(p, q)
                    for t in range(3):
                        out[t] += coef * mc[t]
            mult[a][b] = tuple(out)
            form[a][b] = Fraction(gram[i][k] * gram[j][l] + gram[i][l] * gram[j][k])

    for a in range(3):
        i, j = _MONO_PAIRS[a]
        for vi, vec in enumerate(vecs):
            out = [Fraction(0)] * dim
            gi = gram[i][0] * vec[0] + gram[i][1] * vec[1]
            gj = gram[j][0] * vec[0] + gram[j][1] * vec[1]
            out[3 + vi] = Fraction(gi * gj)
            mult[a][3 + vi] = tuple(out)
            mult[3 + vi][a] = tuple(out)

    for vi, t in enumerate(vecs):
        for vj, u in enumerate(vecs):
            out = [Fraction(0)] * dim
            if vi == vj:
                out = square_coords(t)
            else:
                n = inner(t, u)
                assert abs(n) <= 3, f"non-proportional norm-4 vectors with (t,u)={n}"
                if n == -2:
                    out[v_index[sign_normalize((t[0] + u[0], t[1] + u[1]))]] = Fraction(1)
                elif n == 2:
                    out[v_index[sign_normalize((t[0] - u[0], t[1] - u[1]))]] = Fraction(1)
            mult[3 + vi][3 + vj] = tuple(out)
            form[3 + vi][3 + vj] = Fraction(2 if vi == vj else 0)

    det = lat.det
    adj = lat.adjugate
    ident = [Fraction(adj[0][0], 4 * det), Fraction(2 * adj[0][1], 4 * det), Fraction(adj[1][1], 4 * det)]
    ident += [Fraction(0)] * len(vecs)

    labels = ("r^2", "rs", "s^2") + tuple(f"v[{v[0]},{v[1]}]" for v in vecs)
    return Degree2Algebra(
        lattice=lat,
        basis=labels,
        shell_vectors=vecs,
        mult=tuple(tuple(row) for row in mult),
        form=tuple(tuple(row) for row in form),
        identity_coords=tuple(ident),
        virasoro_coords=tuple(2 * c for c in ident),
    )


def product(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    a._check(b)
    alg = a.algebra
    out = [Fraction(0)] * alg.dim
    for i, ca in enumerate(a.coords):
        if ca == 0:
            continue
        for j, cb in enumerate(b.coords):
            if cb == 0:
                continue
            c = ca * cb
            for k, m in enumerate(alg.mult[i][j]):
                if m:
                    out[k] += c * m
    return AlgebraElement(alg, tuple(out))


def form_eval(a: AlgebraElement, b: AlgebraElement) -> Fraction:
    a._check(b)
    alg = a.algebra
    total = Fraction(0)
    for i, ca in enumerate(a.coords):
        if ca == 0:
            continue
        row = alg.form[i]
        for j, cb in enumerate(b.coords):
            if cb and row[j]:
                total += ca * cb * row[j]
    return total


def identity_element(alg: Degree2Algebra) -> AlgebraElement:
    return alg.element(alg.identity_coords)


def virasoro_element(alg: Degree2Algebra) -> AlgebraElement:
    return alg.element(alg.virasoro_coords)


def pq_split(w: AlgebraElement) -> tuple[AlgebraElement, AlgebraElement]:
    """w = P + Q with P in S^2H and Q in the span of the v-generators."""
    alg = w.algebra
    p = tuple(w.coords[:3]) + (Fraction(0),) * (alg.dim - 3)
    q = (Fraction(0),) * 3 + tuple(w.coords[3:])
    return AlgebraElement(alg, p), AlgebraElement(alg, q)


def conjugate(w: AlgebraElement) -> AlgebraElement:
    p, q = pq_split(w)
    return p - q


def vector_square(alg: Degree2Algebra, vec) -> AlgebraElement:
    """The tensor u^2 for a rational vector u in the ambient space H."""
    x, y = Fraction(vec[0]), Fraction(vec[1])
    coords = [x * x, 2 * x * y, y * y] + [Fraction(0)] * (alg.dim - 3)
    return alg.element(coords)


def pair_tensor(alg: Degree2Algebra, u, v) -> AlgebraElement:
    """The symmetric tensor uv for rational vectors u, v in H."""
    u0, u1 = Fraction(u[0]), Fraction(u[1])
    v0, v1 = Fraction(v[0]), Fraction(v[1])
    coords = [u0 * v0, u0 * v1 + u1 * v0, u1 * v1] + [Fraction(0)] * (alg.dim - 3)
    return alg.element(coords)


def shell_index(alg: Degree2Algebra, vec) -> int:
    v = sign_normalize((int(vec[0]), int(vec[1])))
    try:
        return alg.shell_vectors.index(v)
    except ValueError:
        raise ValueError(f"{vec} is not a norm-4 shell vector of this lattice") from None


def v_element(alg: Degree2Algebra, vec) -> AlgebraElement:
    return alg.basis_element(3 + shell_index(alg, vec))


def orthogonal_square(alg: Degree2Algebra, vec) -> AlgebraElement:
    """t^2 for the norm-4 vector t in H orthogonal to `vec`.

    t itself usually has irrational coordinates but the tensor t^2 is rational:
    t^2 = (4 / (t0,t0)) * t0^2 for any integer t0 spanning the orthogonal line.
    """
    lat = alg.lattice
    g = lat.gram
    v = (int(vec[0]), int(vec[1]))
    a = g[0][0] * v[0] + g[0][1] * v[1]
    b = g[1][0] * v[0] + g[1][1] * v[1]
    from math import gcd

    d = gcd(abs(a), abs(b))
    t0 = (-b // d, a // d)
    q = lat.norm(t0)
    return vector_square(alg, t0).scale(Fraction(4, q))


def algebra_to_json(alg: Degree2Algebra) -> dict:
    return {
        "gram": [list(row) for row in alg.lattice.gram],
        "basis": list(alg.basis),
        "shell_vectors": [list(v) for v in alg.shell_vectors],
        "mult_table": [[encode_vector(alg.mult[i][j]) for j in range(alg.dim)] for i in range(alg.dim)],
        "form": encode_matrix(alg.form),
        "identity": encode_vector(alg.identity_coords),
        "virasoro": encode_vector(alg.virasoro_coords),
    }


def algebra_from_json(payload: dict) -> Degree2Algebra:
    try:
        lat = latmod.validate(payload["gram"])
        basis = tuple(str(x) for x in payload["basis"])
        vecs = tuple((int(v[0]), int(v[1])) for v in payload["shell_vectors"])
        mult = tuple(
            tuple(decode_vector(cell) for cell in row) for row in payload["mult_table"]
        )
        form = decode_matrix(payload["form"])
        ident = decode_vector(payload["identity"])
        vira = decode_vector(payload["virasoro"])
    except (KeyError, TypeError, ValueError, IndexError) as exc:
        raise ParseError(f"malformed algebra dump: {exc}") from exc
    return Degree2Algebra(lat, basis, vecs, mult, form, ident, vira)


def dump_algebra(alg: Degree2Algebra) -> str:
    return json.dumps(algebra_to_json(alg), indent=2)
