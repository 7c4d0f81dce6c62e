"""Enumeration of idempotents and Virasoro vectors, with the sum analysis.

Conventions: an idempotent is an element w with w x w = w, excluding 0 and the
identity.  Its type counts the support of the v-part Q: empty support is type
0, a single generator is type 1, anything larger is type 2.  Type-0
idempotents form a continuum (the rank-one projections of the Jordan part),
so they are only ever reported through a symbolic family plus the
distinguished members (1/16) t^2 attached to shell vectors.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from . import algebra as algmod
from . import lattice as latmod
from . import polysolve
from .algebra import AlgebraElement, Degree2Algebra, conjugate, form_eval, identity_element, pq_split, product
from .errors import InfiniteFamily, WrongCase
from .rationals import encode_vector, format_rational


@dataclass
class IdempotentRecord:
    element: AlgebraElement
    type: int
    norm: Fraction
    p_part: AlgebraElement
    q_part: AlgebraElement
    complement: AlgebraElement
    conjugate: AlgebraElement
    complement_index: int | None = None
    conjugate_index: int | None = None

    def to_json(self) -> dict:
        return {
            "coords": encode_vector(self.element.coords),
            "type": self.type,
            "norm": format_rational(self.norm),
            "p_part": encode_vector(self.p_part.coords),
            "q_part": encode_vector(self.q_part.coords),
            "complement_index": self.complement_index,
            "conjugate_index": self.conjugate_index,
        }


@dataclass
class VirasoroRecord:
    element: AlgebraElement
    central_charge: Fraction
    half: AlgebraElement

    def to_json(self) -> dict:
        return {
            "coords": encode_vector(self.element.coords),
            "central_charge": format_rational(self.central_charge),
            "half_idempotent": encode_vector(self.half.coords),
        }


@dataclass
class VirasoroEnumeration:
    status: str  # "finite" | "positive_dimensional"
    records: list[VirasoroRecord]
    verdict: polysolve.SolveVerdict

    def to_json(self, variables=None) -> dict:
        return {
            "status": self.status,
            "count": len(self.records),
            "records": [r.to_json() for r in self.records],
            "solver": self.verdict.to_json(variables),
        }


def element_type(w: AlgebraElement) -> int:
    support = sum(1 for c in w.coords[3:] if c != 0)
    return min(support, 2)


def _record(alg: Degree2Algebra, w: AlgebraElement) -> IdempotentRecord:
    p, q = pq_split(w)
    return IdempotentRecord(
        element=w,
        type=element_type(w),
        norm=form_eval(w, w),
        p_part=p,
        q_part=q,
        complement=identity_element(alg) - w,
        conjugate=conjugate(w),
    )


def _link_records(records: list[IdempotentRecord]) -> list[IdempotentRecord]:
    index = {rec.element.coords: i for i, rec in enumerate(records)}
    for rec in records:
        rec.complement_index = index.get(rec.complement.coords)
        rec.conjugate_index = index.get(rec.conjugate.coords)
    return records


def distinguished_type0(alg: Degree2Algebra) -> list[IdempotentRecord]:
    """The members (1/16) t^2 of the type-0 family, one per shell vector."""
    out = []
    for vec in alg.shell_vectors:
        w = algmod.vector_square(alg, vec).scale(Fraction(1, 16))
        out.append(_record(alg, w))
    return _link_records(out)


def type0_family_description(alg: Degree2Algebra) -> dict:
    """Symbolic description of the type-0 continuum."""
    return {
        "family": "w = (1/16) u^2 for u in H with (u,u) = 4, and complements 1 - w",
        "norm": format_rational(Fraction(1, 8)),
        "distinguished": [r.to_json() for r in distinguished_type0(alg)],
    }


def _typed_systems(alg: Degree2Algebra, type_filter: int):
    nshell = alg.dim - 3
    if type_filter == 1:
        return [(j,) for j in range(nshell)]
    sizes = range(2, nshell + 1)
    return [s for size in sizes for s in combinations(range(nshell), size)]


def enumerate_idempotents(alg: Degree2Algebra, type_filter: int, norm=None):
    """Complete finite list of idempotents of the given type (1 or 2).

    Type 0 is a continuum: requesting it without a norm raises InfiniteFamily,
    and requesting it with the family norm 1/8 returns only the distinguished
    members (1/16) t^2 for shell vectors t.  A positive-dimensional solver
    verdict on a typed system also raises InfiniteFamily.
    """
    norm = None if norm is None else Fraction(norm)
    if type_filter == 0:
        if norm is None:
            raise InfiniteFamily(
                "type-0 idempotents form a continuum; pass norm=1/8 for the distinguished members"
            )
        if norm != Fraction(1, 8):
            return []
        records = distinguished_type0(alg)
        return records

    ident = identity_element(alg)
    found: list[AlgebraElement] = []
    for support in _typed_systems(alg, type_filter):
        system = polysolve.idempotent_system(alg, norm=norm, support=support)
        verdict = polysolve.solve(system)
        if verdict.status == polysolve.STATUS_POSITIVE_DIMENSIONAL:
            raise InfiniteFamily(
                f"idempotents with v-support {support} form a positive-dimensional family"
            )
        for sol in verdict.rational_solutions:
            w = alg.element(sol)
            if any(w.coords[3 + j] == 0 for j in support):
                continue  # smaller support; belongs to another type
            if w.is_zero() or w == ident:
                continue
            found.append(w)
    seen = set()
    records = []
    for w in sorted(found, key=lambda e: e.coords):
        if w.coords in seen:
            continue
        seen.add(w.coords)
        assert w.is_idempotent()
        records.append(_record(alg, w))
    for rec in records:
        assert rec.type == type_filter
        if norm is not None:
            assert rec.norm == norm
    return _link_records(records)


def typed_solver_verdicts(alg: Degree2Algebra, type_filter: int, norm=None):
    """The raw solver verdicts behind enumerate_idempotents, per v-support."""
    out = {}
    norm = None if norm is None else Fraction(norm)
    for support in _typed_systems(alg, type_filter):
        system = polysolve.idempotent_system(alg, norm=norm, support=support)
        out[support] = polysolve.solve(system)
    return out


_VIRASORO_VERDICTS: dict[tuple, polysolve.SolveVerdict] = {}


def enumerate_virasoro(alg: Degree2Algebra, central_charge) -> VirasoroEnumeration:
    """All u with u x u = 2u and (u,u) = c/2, or a positive-dimensional flag."""
    c = Fraction(central_charge)
    key = (alg.lattice.gram, c)
    verdict = _VIRASORO_VERDICTS.get(key)
    if verdict is None:
        system = polysolve.virasoro_system(alg, c)
        verdict = polysolve.solve(system)
        _VIRASORO_VERDICTS[key] = verdict
    if verdict.status == polysolve.STATUS_POSITIVE_DIMENSIONAL:
        return VirasoroEnumeration("positive_dimensional", [], verdict)
    records = []
    for sol in verdict.rational_solutions:
        u = alg.element(sol)
        if u.is_zero():
            continue
        assert product(u, u) == u.scale(2) and form_eval(u, u) == c / 2
        records.append(VirasoroRecord(element=u, central_charge=c, half=u.scale(Fraction(1, 2))))
    return VirasoroEnumeration("finite", records, verdict)


@dataclass
class PairVerdict:
    left: AlgebraElement
    right: AlgebraElement
    sum_is_idempotent: bool
    product_zero: bool | None
    form_zero: bool | None
    right_minus_left_idempotent: bool
    left_minus_right_idempotent: bool

    def to_json(self) -> dict:
        return {
            "left": encode_vector(self.left.coords),
            "right": encode_vector(self.right.coords),
            "sum_is_idempotent": self.sum_is_idempotent,
            "product_zero": self.product_zero,
            "form_zero": self.form_zero,
            "right_minus_left_idempotent": self.right_minus_left_idempotent,
            "left_minus_right_idempotent": self.left_minus_right_idempotent,
        }


def sum_analysis(elements, alg: Degree2Algebra) -> list[PairVerdict]:
    """Pairwise sum/difference idempotency over a finite list.

    For every unordered pair the sum w1 + w2 is tested; when it is idempotent,
    the necessary conditions w1 x w2 = 0 and (w1, w2) = 0 are verified.  Both
    differences are tested too, which exhibits proper summands: if w - w' is a
    nonzero idempotent then w' is a proper summand of w.
    """
    elems = [e.element if isinstance(e, IdempotentRecord) else e for e in elements]
    out = []
    for i, j in combinations(range(len(elems)), 2):
        w1, w2 = elems[i], elems[j]
        s = w1 + w2
        is_idem = s.is_idempotent()
        prod_zero = form_zero = None
        if is_idem:
            prod_zero = product(w1, w2).is_zero()
            form_zero = form_eval(w1, w2) == 0
            assert prod_zero and form_zero, "sum lemma violated by exact arithmetic"
        d12 = w2 - w1
        d21 = w1 - w2
        out.append(
            PairVerdict(
                w1,
                w2,
                is_idem,
                prod_zero,
                form_zero,
                (not d12.is_zero()) and d12.is_idempotent(),
                (not d21.is_zero()) and d21.is_idempotent(),
            )
        )
    return out


def proper_summands(elements, alg: Degree2Algebra) -> list[AlgebraElement]:
    """Elements of the list that are proper summands of a nontrivial idempotent.

    w' is marked when w' + w'' is an idempotent other than the identity for
    some w'' in the list, or when w - w' is a nonzero idempotent for some w in
    the list with w itself not the identity.
    """
    elems = [e.element if isinstance(e, IdempotentRecord) else e for e in elements]
    ident = identity_element(alg)
    marked = []
    for i, w1 in enumerate(elems):
        hit = False
        for j, w2 in enumerate(elems):
            if i == j:
                continue
            s = w1 + w2
            if s != ident and s.is_idempotent():
                hit = True
                break
            d = w2 - w1
            if w2 != ident and not d.is_zero() and d.is_idempotent():
                hit = True
                break
        if hit:
            marked.append(w1)
    return marked


def proper_summand_set(alg: Degree2Algebra) -> list[IdempotentRecord]:
    """The idempotents that occur as proper summands, for the 5-dimensional
    two-generator case with |b| = 1; they come in orthogonal conjugate pairs."""
    cls = latmod.classify(alg.lattice)
    if cls.label != latmod.LABEL_ROOTLESS_RANK2_NORM4 or cls.params["b"] != 1 or alg.dim != 5:
        raise WrongCase(f"proper-summand analysis needs the |b|=1 five-dimensional case, got {cls.label}")
    finite = enumerate_idempotents(alg, 1) + enumerate_idempotents(alg, 2)
    universe = [r.element for r in finite] + [r.element for r in distinguished_type0(alg)]
    marked = proper_summands(universe, alg)
    marked_coords = {w.coords for w in marked}
    records = [r for r in finite if r.element.coords in marked_coords]
    for rec in records:
        assert rec.type == 1 and rec.norm == Fraction(1, 16)
    # order as orthogonal pairs: each record next to its conjugate
    ordered: list[IdempotentRecord] = []
    used = set()
    for rec in records:
        if rec.element.coords in used:
            continue
        partner = next(r for r in records if r.element.coords == rec.conjugate.coords)
        assert form_eval(rec.element, partner.element) == 0
        ordered.extend([rec, partner])
        used.update({rec.element.coords, partner.element.coords})
    return _link_records(ordered)
