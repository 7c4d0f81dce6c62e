"""Automorphism groups of the degree-2 algebra by distinguished-set search.

The search space is: permutations of a finite, canonically computed set of
distinguished elements (central-charge-1/2 Virasoro halves, or type-1
idempotents of norm 1/16), extended linearly, together with a scale on each
vector of an orthogonal basis of the complement of their span.  Form
preservation forces each scale to +-1; every candidate map is then verified
exactly against the full multiplication table and form.

When the distinguished set is a solver-certified complete invariant set and
the complement is at most a line, every algebra automorphism preserves the
set and the line, so the group found this way is the whole automorphism
group; otherwise the result is flagged as the subgroup found by this method.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations, product as iproduct

from . import classify as clsmod
from ._linalg import inverse, kernel, matmul, matvec, rank
from .algebra import (
    AlgebraElement,
    Degree2Algebra,
    form_eval,
    identity_element,
    product,
    virasoro_element,
)
from .errors import InfiniteFamily, SpanFailure
from .rationals import encode_matrix

KIND_VIRASORO_HALF = "virasoro-half"
KIND_TYPE1_NORM116 = "type1-norm-1/16"


@dataclass
class DistinguishedSet:
    kind: str
    elements: list[AlgebraElement]
    completion: list[AlgebraElement]
    certified_complete: bool


def _orthogonal_completion(alg: Degree2Algebra, elements):
    rows = tuple(e.coords for e in elements)
    if rank(rows) != len(elements):
        raise SpanFailure("distinguished elements are linearly dependent")
    functional_rows = tuple(
        tuple(sum(e.coords[a] * alg.form[a][b] for a in range(alg.dim)) for b in range(alg.dim))
        for e in elements
    )
    comp = [alg.element(v) for v in kernel(functional_rows)]
    if len(elements) + len(comp) != alg.dim:
        raise SpanFailure("distinguished set plus completion does not span the algebra")
    ortho: list[AlgebraElement] = []
    for v in comp:
        for u in ortho:
            v = v - u.scale(form_eval(v, u) / form_eval(u, u))
        if form_eval(v, v) == 0:
            raise SpanFailure("form degenerates on the completion")
        ortho.append(v)
    return ortho


def distinguished_set(alg: Degree2Algebra, kind: str = KIND_VIRASORO_HALF) -> DistinguishedSet:
    """Canonical distinguished set with its orthogonal completion."""
    if kind == KIND_VIRASORO_HALF:
        enum = clsmod.enumerate_virasoro(alg, Fraction(1, 2))
        if enum.status != "finite":
            raise InfiniteFamily("central-charge-1/2 Virasoro vectors are not a finite set here")
        elements = sorted((r.half for r in enum.records), key=lambda e: e.coords)
        certified = enum.verdict.irrational_root_flags == 0
    elif kind == KIND_TYPE1_NORM116:
        records = clsmod.enumerate_idempotents(alg, 1, norm=Fraction(1, 16))
        elements = sorted((r.element for r in records), key=lambda e: e.coords)
        enum = clsmod.enumerate_virasoro(alg, Fraction(1, 2))
        certified = (
            enum.status == "finite"
            and enum.verdict.irrational_root_flags == 0
            and sorted(r.half.coords for r in enum.records) == [e.coords for e in elements]
        )
    else:
        raise ValueError(f"unknown distinguished-set kind {kind!r}")
    if not elements:
        raise SpanFailure(f"no distinguished elements of kind {kind}")
    completion = _orthogonal_completion(alg, elements)
    return DistinguishedSet(kind, elements, completion, certified)


@dataclass
class AutGroupResult:
    order: int
    matrices: list[tuple[tuple[Fraction, ...], ...]]
    permutations: list[tuple[int, ...]]
    completion_scales: list[tuple[Fraction, ...]]
    structure: str
    complete: bool
    dset: DistinguishedSet

    @property
    def generators(self):
        return self.matrices

    def to_json(self) -> dict:
        return {
            "order": self.order,
            "structure": self.structure,
            "complete": self.complete,
            "distinguished_kind": self.dset.kind,
            "distinguished_size": len(self.dset.elements),
            "completion_dim": len(self.dset.completion),
            "permutations": [list(p) for p in self.permutations],
            "generators": [encode_matrix(m) for m in self.matrices],
        }


def _columns_matrix(vectors, dim):
    return tuple(tuple(v.coords[i] for v in vectors) for i in range(dim))


def _is_automorphism(alg: Degree2Algebra, a) -> bool:
    img = [alg.element(tuple(a[i][j] for i in range(alg.dim))) for j in range(alg.dim)]
    for i in range(alg.dim):
        for j in range(i, alg.dim):
            lhs = product(img[i], img[j]).coords
            rhs = matvec(a, alg.mult[i][j])
            if lhs != tuple(rhs):
                return False
            if form_eval(img[i], img[j]) != alg.form[i][j]:
                return False
    return True


def aut_group(alg: Degree2Algebra, dset: DistinguishedSet | None = None) -> AutGroupResult:
    """Enumerate the product- and form-preserving maps built from
    distinguished-set permutations and completion scales."""
    if dset is None:
        dset = distinguished_set(alg)
    elements, completion = dset.elements, dset.completion
    n, m = len(elements), len(completion)
    p_cols = _columns_matrix(list(elements) + list(completion), alg.dim)
    p_inv = inverse(p_cols)
    gram = [[form_eval(a, b) for b in elements] for a in elements]

    found = []
    for sigma in permutations(range(n)):
        if any(gram[sigma[i]][sigma[j]] != gram[i][j] for i in range(n) for j in range(i, n)):
            continue
        for scales in iproduct((Fraction(1), Fraction(-1)), repeat=m):
            q_cols = _columns_matrix(
                [elements[sigma[i]] for i in range(n)]
                + [c.scale(s) for c, s in zip(completion, scales)],
                alg.dim,
            )
            a = matmul(q_cols, p_inv)
            if _is_automorphism(alg, a):
                found.append((a, sigma, scales))

    matrices = [f[0] for f in found]
    index = {mat: i for i, mat in enumerate(matrices)}
    ident = identity_element(alg)
    omega = virasoro_element(alg)
    for a in matrices:
        assert tuple(matvec(a, ident.coords)) == ident.coords, "automorphism must fix the identity"
        assert tuple(matvec(a, omega.coords)) == omega.coords, "automorphism must fix the conformal element"
        for b in matrices:
            assert matmul(a, b) in index, "found set is not closed under composition"
        assert inverse(a) in index, "found set is not closed under inverse"

    result = AutGroupResult(
        order=len(found),
        matrices=matrices,
        permutations=[f[1] for f in found],
        completion_scales=[f[2] for f in found],
        structure="",
        complete=dset.certified_complete and m <= 1,
        dset=dset,
    )
    result.structure = _structure_tag(result, alg)
    return result


# ---------------------------------------------------------------------------
# Group structure analysis on explicit matrices


def _group_table(matrices):
    index = {m: i for i, m in enumerate(matrices)}
    n = len(matrices)
    table = [[index[matmul(matrices[i], matrices[j])] for j in range(n)] for i in range(n)]
    ident = next(i for i in range(n) if all(table[i][j] == j for j in range(n)))
    return table, ident


def _element_orders(table, ident):
    orders = []
    for i in range(len(table)):
        k, x = 1, i
        while x != ident:
            x = table[x][i]
            k += 1
        orders.append(k)
    return orders


def dihedral_check(group) -> bool:
    """True iff the order-8 group has an order-4 element inverted by an
    involution outside its cyclic subgroup.  Accepts an AutGroupResult or a
    list of exact matrices closed under multiplication."""
    matrices = group.matrices if isinstance(group, AutGroupResult) else list(group)
    if len(matrices) != 8:
        raise ValueError(f"dihedral check needs a group of order 8, got {len(matrices)}")
    table, ident = _group_table(matrices)
    orders = _element_orders(table, ident)
    for r, o in enumerate(orders):
        if o != 4:
            continue
        powers = {ident, r, table[r][r], table[table[r][r]][r]}
        r_inv = table[table[r][r]][r]
        for t, ot in enumerate(orders):
            if ot == 2 and t not in powers:
                if table[table[t][r]][t] == r_inv:
                    return True
    return False


def _pair_partition(elements):
    """Partition into pairs by vanishing form value; None when not a matching."""
    n = len(elements)
    partner = [None] * n
    for i in range(n):
        zeros = [j for j in range(n) if j != i and form_eval(elements[i], elements[j]) == 0]
        if len(zeros) != 1:
            return None
        partner[i] = zeros[0]
    pairs = sorted({(min(i, p), max(i, p)) for i, p in enumerate(partner)})
    return pairs


def _structure_tag(result: AutGroupResult, alg: Degree2Algebra) -> str:
    if result.order == 8 and dihedral_check(result):
        return "dihedral-8"
    if result.order == 48 and len(result.dset.completion) == 1:
        perms = result.permutations
        scales = [s[0] for s in result.completion_scales]
        key = {(p, s): i for i, (p, s) in enumerate(zip(perms, scales))}
        n = len(result.dset.elements)
        import math

        if len(set(perms)) == math.factorial(n) and len(key) == result.order:
            table, _ = _group_table(result.matrices)
            componentwise = all(
                table[i][j]
                == key[
                    (
                        tuple(perms[i][perms[j][k]] for k in range(n)),
                        scales[i] * scales[j],
                    )
                ]
                for i in range(result.order)
                for j in range(result.order)
            )
            if componentwise:
                return "sym4-x-2"
    pairs = _pair_partition(result.dset.elements)
    if pairs and len(pairs) == 3:
        pair_of = {}
        for k, (i, j) in enumerate(pairs):
            pair_of[i] = k
            pair_of[j] = k
        induced = set()
        for sigma in result.permutations:
            induced.add(tuple(pair_of[sigma[pairs[k][0]]] for k in range(3)))
        if len(induced) == 6:
            return "contains-sym3"
    return f"other-{result.order}"
