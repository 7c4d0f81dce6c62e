"""Exact solver for small quadratic polynomial systems over the rationals.

The pipeline is: a lexicographic Groebner basis by Buchberger's algorithm
(integer coefficients, content reduction after every cancellation, first-in
pair selection with the coprime and chain criteria), dimension read off the
leading-monomial staircase, then back-substitution through the triangular
eliminants.  Each univariate eliminant is split with the rational root
theorem; branches that end in a factor of degree >= 2 with no rational root
are counted in `irrational_root_flags` instead of being solved.

Monomials are exponent tuples; comparing tuples directly gives the pure lex
order with the first declared variable most significant.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, isqrt

from . import algebra as algmod
from ._linalg import inverse
from .errors import DegreeTooHigh, TooManyVariables
from .rationals import format_rational, parse_rational

Mono = tuple[int, ...]

STATUS_ZERO_DIMENSIONAL = "zero_dimensional"
STATUS_POSITIVE_DIMENSIONAL = "positive_dimensional"
STATUS_INCONSISTENT = "inconsistent"


def _mono_mul(a: Mono, b: Mono) -> Mono:
    return tuple(x + y for x, y in zip(a, b))


def _mono_div(a: Mono, b: Mono) -> Mono:
    return tuple(x - y for x, y in zip(a, b))


def _mono_divides(a: Mono, b: Mono) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _mono_lcm(a: Mono, b: Mono) -> Mono:
    return tuple(max(x, y) for x, y in zip(a, b))


class Poly:
    """Sparse multivariate polynomial with Fraction coefficients."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms=None):
        self.n = n
        self.terms: dict[Mono, Fraction] = {}
        if terms:
            for m, c in terms.items():
                c = Fraction(c)
                if c != 0:
                    self.terms[tuple(m)] = c

    @classmethod
    def constant(cls, n: int, c) -> "Poly":
        return cls(n, {(0,) * n: Fraction(c)})

    @classmethod
    def variable(cls, n: int, i: int) -> "Poly":
        e = [0] * n
        e[i] = 1
        return cls(n, {tuple(e): Fraction(1)})

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return isinstance(other, Poly) and self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, tuple(sorted(self.terms.items()))))

    def __add__(self, other):
        if not isinstance(other, Poly):
            other = Poly.constant(self.n, other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = out.get(m, Fraction(0)) + c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return Poly(self.n, out)

    def __sub__(self, other):
        if not isinstance(other, Poly):
            other = Poly.constant(self.n, other)
        return self + other.scale(-1)

    def scale(self, c) -> "Poly":
        c = Fraction(c)
        if c == 0:
            return Poly(self.n)
        return Poly(self.n, {m: v * c for m, v in self.terms.items()})

    def mul_term(self, c, mono: Mono) -> "Poly":
        c = Fraction(c)
        if c == 0:
            return Poly(self.n)
        return Poly(self.n, {_mono_mul(m, mono): v * c for m, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, Poly):
            return self.scale(other)
        out: dict[Mono, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = _mono_mul(m1, m2)
                v = out.get(m, Fraction(0)) + c1 * c2
                if v:
                    out[m] = v
                else:
                    out.pop(m, None)
        return Poly(self.n, out)

    __rmul__ = __mul__

    def lm(self) -> Mono | None:
        return max(self.terms) if self.terms else None

    def lc(self) -> Fraction:
        m = self.lm()
        return self.terms[m] if m is not None else Fraction(0)

    def degree(self) -> int:
        return max((sum(m) for m in self.terms), default=0)

    def support(self) -> set[int]:
        out: set[int] = set()
        for m in self.terms:
            out.update(i for i, e in enumerate(m) if e)
        return out

    def primitive(self) -> "Poly":
        """Clear denominators, divide out integer content, make lc positive."""
        if not self.terms:
            return self
        den = 1
        for c in self.terms.values():
            den = den * c.denominator // gcd(den, c.denominator)
        num = 0
        for c in self.terms.values():
            num = gcd(num, abs(c.numerator * (den // c.denominator)))
        factor = Fraction(den, num)
        if self.terms[self.lm()] < 0:
            factor = -factor
        return self.scale(factor)

    def substitute(self, i: int, value) -> "Poly":
        value = Fraction(value)
        out: dict[Mono, Fraction] = {}
        for m, c in self.terms.items():
            e = m[i]
            if e:
                c = c * value**e
                m = m[:i] + (0,) + m[i + 1 :]
            if c:
                v = out.get(m, Fraction(0)) + c
                if v:
                    out[m] = v
                else:
                    out.pop(m, None)
        return Poly(self.n, out)

    def evaluate(self, point) -> Fraction:
        total = Fraction(0)
        for m, c in self.terms.items():
            v = c
            for i, e in enumerate(m):
                if e:
                    v *= Fraction(point[i]) ** e
            total += v
        return total

    def univariate_coeffs(self, i: int) -> list[Fraction]:
        """Ascending coefficient list, valid only when support() <= {i}."""
        deg = max((m[i] for m in self.terms), default=0)
        out = [Fraction(0)] * (deg + 1)
        for m, c in self.terms.items():
            out[m[i]] += c
        return out

    def pretty(self, names) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms, reverse=True):
            c = self.terms[m]
            body = "*".join(
                f"{names[i]}^{e}" if e > 1 else names[i] for i, e in enumerate(m) if e
            )
            parts.append(f"{format_rational(c)}" + (f"*{body}" if body else ""))
        return " + ".join(parts)

    def __repr__(self):
        return self.pretty([f"x{i}" for i in range(self.n)])


@dataclass
class PolySystem:
    variables: tuple[str, ...]
    polynomials: list[Poly]

    def __post_init__(self):
        self.variables = tuple(self.variables)
        n = len(self.variables)
        for p in self.polynomials:
            assert p.n == n, "polynomial arity differs from variable list"

    def to_json(self) -> dict:
        polys = []
        for p in self.polynomials:
            q = p.primitive()
            polys.append(
                [
                    {"exponents": list(m), "coeff": int(q.terms[m])}
                    for m in sorted(q.terms, reverse=True)
                ]
            )
        return {"variables": list(self.variables), "polynomials": polys}

    @classmethod
    def from_json(cls, payload: dict) -> "PolySystem":
        names = tuple(str(v) for v in payload["variables"])
        n = len(names)
        polys = []
        for rec in payload["polynomials"]:
            terms = {tuple(t["exponents"]): Fraction(t["coeff"]) for t in rec}
            polys.append(Poly(n, terms))
        return cls(names, polys)


# ---------------------------------------------------------------------------
# Groebner machinery


def _spoly(f: Poly, g: Poly) -> Poly:
    lmf, lmg = f.lm(), g.lm()
    lcf, lcg = f.lc(), g.lc()
    big = _mono_lcm(lmf, lmg)
    l = abs(lcf.numerator * lcg.numerator) // gcd(abs(lcf.numerator), abs(lcg.numerator))
    return f.mul_term(Fraction(l) / lcf, _mono_div(big, lmf)) - g.mul_term(
        Fraction(l) / lcg, _mono_div(big, lmg)
    )


def _reduce(p: Poly, basis: list[Poly]) -> Poly:
    """Full reduction of p modulo basis, fraction-free with content reduction."""
    if not basis:
        return p
    lms = [(g.lm(), g.lc(), g) for g in basis if g]
    while p:
        hit = None
        for m in sorted(p.terms, reverse=True):
            for lmg, lcg, g in lms:
                if _mono_divides(lmg, m):
                    hit = (m, lmg, lcg, g)
                    break
            if hit:
                break
        if hit is None:
            break
        m, lmg, lcg, g = hit
        coef = p.terms[m]
        p = p.scale(lcg) - g.mul_term(coef, _mono_div(m, lmg))
        p = p.primitive()
    return p


def groebner(polys: list[Poly]) -> list[Poly]:
    """Reduced lexicographic Groebner basis, primitive integer coefficients.

    Deterministic: first-in pair selection, final basis sorted by decreasing
    leading monomial.
    """
    basis = []
    for p in polys:
        q = p.primitive()
        if q and q not in basis:
            basis.append(q)
    if not basis:
        return []

    pairs = deque((i, j) for j in range(len(basis)) for i in range(j))
    handled: set[tuple[int, int]] = set()
    while pairs:
        i, j = pairs.popleft()
        handled.add((i, j))
        f, g = basis[i], basis[j]
        lmf, lmg = f.lm(), g.lm()
        big = _mono_lcm(lmf, lmg)
        if big == _mono_mul(lmf, lmg):
            continue  # coprime leading terms
        chain = False
        for k, h in enumerate(basis):
            if k in (i, j) or not _mono_divides(h.lm(), big):
                continue
            if (min(i, k), max(i, k)) in handled and (min(j, k), max(j, k)) in handled:
                chain = True
                break
        if chain:
            continue
        r = _reduce(_spoly(f, g), basis)
        if r:
            basis.append(r.primitive())
            new = len(basis) - 1
            pairs.extend((k, new) for k in range(new))

    return _interreduce(basis)


def _interreduce(basis: list[Poly]) -> list[Poly]:
    basis = sorted({g.primitive() for g in basis if g}, key=lambda g: g.lm())
    keep: list[Poly] = []
    for i, g in enumerate(basis):
        lm = g.lm()
        redundant = any(
            _mono_divides(h.lm(), lm) and (h.lm() != lm or j < i)
            for j, h in enumerate(basis)
            if j != i
        )
        if not redundant:
            keep.append(g)
    changed = True
    while changed:
        changed = False
        for i in range(len(keep)):
            others = keep[:i] + keep[i + 1 :]
            r = _reduce(keep[i], others).primitive()
            if r != keep[i]:
                keep[i] = r
                changed = True
    return sorted(keep, key=lambda g: g.lm(), reverse=True)


def _is_inconsistent(gb: list[Poly]) -> bool:
    return any(g.lm() == (0,) * g.n for g in gb)


def _dimension(gb: list[Poly], active: tuple[int, ...]) -> int:
    """Krull dimension of the ideal, from the leading-monomial staircase.

    dim = max size of a variable subset S such that no leading monomial is
    supported inside S.
    """
    from itertools import combinations

    supports = [frozenset(i for i, e in enumerate(g.lm()) if e) for g in gb]
    for size in range(len(active), 0, -1):
        for sub in combinations(active, size):
            s = set(sub)
            if all(not supp <= s for supp in supports):
                return size
    return 0


def _pure_power_degrees(gb: list[Poly], active) -> dict[int, int] | None:
    """For zero-dimensional staircases: minimal pure-power degree per variable."""
    out: dict[int, int] = {}
    for v in active:
        best = None
        for g in gb:
            m = g.lm()
            if all(e == 0 for i, e in enumerate(m) if i != v) and m[v] > 0:
                best = m[v] if best is None else min(best, m[v])
        if best is None:
            return None
        out[v] = best
    return out


def _standard_monomial_count(gb: list[Poly], active) -> int:
    degs = _pure_power_degrees(gb, active)
    assert degs is not None
    lms = [g.lm() for g in gb]
    from itertools import product as iproduct

    ranges = [range(degs[v]) for v in active]
    count = 0
    for exps in iproduct(*ranges):
        mono = [0] * (gb[0].n if gb else 0)
        for v, e in zip(active, exps):
            mono[v] = e
        mono = tuple(mono)
        if not any(_mono_divides(m, mono) for m in lms):
            count += 1
    return count


# ---------------------------------------------------------------------------
# Univariate rational roots


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small, large = [], []
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
    return small + large[::-1]


def rational_roots(coeffs) -> tuple[list[tuple[Fraction, int]], int]:
    """Rational roots (with multiplicity) of a univariate polynomial.

    `coeffs` is ascending.  Returns (roots, residual_degree) where
    residual_degree is the degree left after dividing out every rational root;
    a residual of degree >= 2 has no rational roots.
    """
    cs = [Fraction(c) for c in coeffs]
    while cs and cs[-1] == 0:
        cs.pop()
    if not cs:
        raise ValueError("zero polynomial has every rational as a root")
    den = 1
    for c in cs:
        den = den * c.denominator // gcd(den, c.denominator)
    ints = [int(c * den) for c in cs]
    g = 0
    for c in ints:
        g = gcd(g, abs(c))
    ints = [c // g for c in ints]

    roots: list[tuple[Fraction, int]] = []
    k = 0
    while ints[0] == 0:
        ints = ints[1:]
        k += 1
    if k:
        roots.append((Fraction(0), k))
    if len(ints) == 1:
        return roots, 0

    def deflate(poly, root):
        # synthetic division by (x - root); exact, remainder asserted zero
        out = [Fraction(0)] * (len(poly) - 1)
        carry = Fraction(0)
        for i in range(len(poly) - 1, 0, -1):
            carry = Fraction(poly[i]) + carry * root
            out[i - 1] = carry
        assert Fraction(poly[0]) + carry * root == 0
        return out

    candidates = set()
    for p in _divisors(ints[0]):
        for q in _divisors(ints[-1]):
            if gcd(p, q) == 1:
                candidates.add(Fraction(p, q))
                candidates.add(Fraction(-p, q))
    poly = [Fraction(c) for c in ints]
    for cand in sorted(candidates):
        mult = 0
        while len(poly) > 1 and sum(c * cand**i for i, c in enumerate(poly)) == 0:
            poly = deflate(poly, cand)
            mult += 1
        if mult:
            roots.append((cand, mult))
    roots.sort()
    return roots, len(poly) - 1


# ---------------------------------------------------------------------------
# Solving


@dataclass
class SolveVerdict:
    status: str
    rational_solutions: tuple[tuple[Fraction, ...], ...]
    irrational_root_flags: int
    dimension: int | None
    quotient_dimension: int | None
    groebner_basis: list[Poly] = field(repr=False, default_factory=list)

    def to_json(self, variables=None) -> dict:
        names = list(variables) if variables else None
        return {
            "status": self.status,
            "rational_solutions": [
                [format_rational(x) for x in sol] for sol in self.rational_solutions
            ],
            "irrational_root_flags": self.irrational_root_flags,
            "dimension": self.dimension,
            "quotient_dimension": self.quotient_dimension,
            "groebner_basis": [
                g.pretty(names) if names else repr(g) for g in self.groebner_basis
            ],
        }


def solve(system: PolySystem) -> SolveVerdict:
    """Solve; every returned tuple re-substitutes to exact zero (asserted)."""
    n = len(system.variables)
    if n > 8:
        raise TooManyVariables(f"{n} variables, limit is 8")
    for p in system.polynomials:
        if p.degree() > 2:
            raise DegreeTooHigh(f"input degree {p.degree()} exceeds 2")

    polys = [p for p in system.polynomials if p]
    gb = groebner(polys)
    active = tuple(range(n))
    if not gb:
        if n == 0:
            return SolveVerdict(STATUS_ZERO_DIMENSIONAL, ((),), 0, None, 1, [])
        return SolveVerdict(STATUS_POSITIVE_DIMENSIONAL, (), 0, n, None, [])
    if _is_inconsistent(gb):
        return SolveVerdict(STATUS_INCONSISTENT, (), 0, None, 0, gb)
    dim = _dimension(gb, active)
    if dim > 0:
        return SolveVerdict(STATUS_POSITIVE_DIMENSIONAL, (), 0, dim, None, gb)

    assignments, flags = _back_substitute(gb, active)
    sols = tuple(sorted(tuple(a[i] for i in range(n)) for a in assignments))
    for sol in sols:
        for p in system.polynomials:
            assert p.evaluate(sol) == 0, "solver soundness violation"
    qdim = _standard_monomial_count(gb, active)
    return SolveVerdict(STATUS_ZERO_DIMENSIONAL, sols, flags, None, qdim, gb)


def _back_substitute(gb: list[Poly], active: tuple[int, ...]):
    if not active:
        assert not gb, "constants should have been caught as inconsistent"
        return [dict()], 0
    last = active[-1]
    univ = [g for g in gb if g.support() <= {last}]
    assert univ, "zero-dimensional ideal must have a univariate eliminant"
    coeffs = univ[0].univariate_coeffs(last)
    for extra in univ[1:]:
        coeffs = _poly1_gcd(coeffs, extra.univariate_coeffs(last))
    roots, residual = rational_roots(coeffs)
    flags = 1 if residual >= 2 else 0
    out = []
    for root, _mult in roots:
        substituted = [q for q in (g.substitute(last, root) for g in gb) if q]
        sub_gb = groebner(substituted)
        if _is_inconsistent(sub_gb):
            # cannot happen over an algebraically closed field; defensive only
            continue
        rec, fl = _back_substitute(sub_gb, active[:-1])
        flags += fl
        for assignment in rec:
            assignment[last] = root
            out.append(assignment)
    return out, flags


def _poly1_gcd(a, b):
    a = [Fraction(x) for x in a]
    b = [Fraction(x) for x in b]

    def trim(p):
        while p and p[-1] == 0:
            p.pop()
        return p

    a, b = trim(a), trim(b)
    while b:
        # a mod b
        while len(a) >= len(b) and a:
            f = a[-1] / b[-1]
            shift = len(a) - len(b)
            for i, c in enumerate(b):
                a[i + shift] -= f * c
            a = trim(a)
        a, b = b, a
    return a if a else [Fraction(0)]


def eliminant(verdict: SolveVerdict, var_index: int):
    """The univariate member of the Groebner basis in the given variable.

    Returns ascending primitive integer coefficients, or None when the basis
    has no member supported on that variable alone.
    """
    univ = [g for g in verdict.groebner_basis if g and g.support() <= {var_index}]
    if not univ:
        return None
    coeffs = univ[0].univariate_coeffs(var_index)
    for extra in univ[1:]:
        coeffs = _poly1_gcd(coeffs, extra.univariate_coeffs(var_index))
    p = Poly(1, {(i,): c for i, c in enumerate(coeffs)}).primitive()
    deg = max((m[0] for m in p.terms), default=0)
    out = [0] * (deg + 1)
    for m, c in p.terms.items():
        out[m[0]] = int(c)
    return out


# ---------------------------------------------------------------------------
# Systems attached to an algebra


def _default_names(dim: int) -> tuple[str, ...]:
    return tuple(f"c{i}" for i in range(dim))


def _generic_coords(alg, basis_elements, n):
    """Algebra coordinates of sum_i z_i B_i as linear polynomials in z."""
    coords = []
    for a in range(alg.dim):
        terms = {}
        for i, b in enumerate(basis_elements):
            if b.coords[a]:
                e = [0] * n
                e[i] = 1
                terms[tuple(e)] = b.coords[a]
        coords.append(Poly(n, terms))
    return coords


def _square_coords(alg, w_coords, n):
    out = [Poly(n) for _ in range(alg.dim)]
    for i in range(alg.dim):
        if not w_coords[i]:
            continue
        for j in range(alg.dim):
            if not w_coords[j]:
                continue
            prod = w_coords[i] * w_coords[j]
            for k, m in enumerate(alg.mult[i][j]):
                if m:
                    out[k] = out[k] + prod.scale(m)
    return out


def _form_poly(alg, u_coords, v_coords, n):
    total = Poly(n)
    for i in range(alg.dim):
        if not u_coords[i]:
            continue
        for j in range(alg.dim):
            if alg.form[i][j] and v_coords[j]:
                total = total + (u_coords[i] * v_coords[j]).scale(alg.form[i][j])
    return total


def _resolve_basis(alg, basis_elements):
    if basis_elements is None:
        return [alg.basis_element(i) for i in range(alg.dim)], None
    basis_elements = list(basis_elements)
    if len(basis_elements) != alg.dim:
        raise ValueError("a coordinate basis must have exactly dim elements")
    cols = tuple(tuple(b.coords[a] for b in basis_elements) for a in range(alg.dim))
    return basis_elements, inverse(cols)


def _coordinate_equations(alg, diff_coords, inv, n):
    if inv is None:
        return list(diff_coords)
    eqs = []
    for k in range(alg.dim):
        total = Poly(n)
        for a in range(alg.dim):
            if inv[k][a] and diff_coords[a]:
                total = total + diff_coords[a].scale(inv[k][a])
        eqs.append(total)
    return eqs


def idempotent_system(alg, norm=None, support=None, basis=None, names=None) -> PolySystem:
    """Coordinate equations of w x w = w for a generic element w.

    `support` restricts the v-part: indices listed keep their coordinate free
    but gain the linear unit-pairing equation (w, t^2) = 1 for their shell
    vector t (forced for any idempotent whose v-coordinate there is nonzero);
    all other v-coordinates are constrained to zero.  `basis` replaces the
    coordinate system by an arbitrary spanning list of elements, mutually
    exclusive with `support`.  `norm` appends (w, w) = norm.
    """
    if basis is not None and support is not None:
        raise ValueError("support restriction requires the standard basis")
    n = alg.dim
    names = tuple(names) if names else _default_names(n)
    basis_elements, inv = _resolve_basis(alg, basis)
    w = _generic_coords(alg, basis_elements, n)
    sq = _square_coords(alg, w, n)
    eqs = _coordinate_equations(alg, [sq[a] - w[a] for a in range(n)], inv, n)
    if support is not None:
        support = tuple(sorted(set(support)))
        nshell = alg.dim - 3
        for v in range(nshell):
            if v not in support:
                eqs.append(Poly.variable(n, 3 + v))
        for v in support:
            sq_el = algmod.vector_square(alg, alg.shell_vectors[v])
            pairing = _form_poly(alg, w, [Poly.constant(n, c) for c in sq_el.coords], n)
            eqs.append(pairing - Poly.constant(n, 1))
    if norm is not None:
        eqs.append(_form_poly(alg, w, w, n) - Poly.constant(n, Fraction(norm)))
    return PolySystem(names, eqs)


def virasoro_system(alg, central_charge, basis=None, names=None) -> PolySystem:
    """Equations u x u = 2u together with (u, u) = c/2."""
    n = alg.dim
    names = tuple(names) if names else _default_names(n)
    basis_elements, inv = _resolve_basis(alg, basis)
    u = _generic_coords(alg, basis_elements, n)
    sq = _square_coords(alg, u, n)
    eqs = _coordinate_equations(alg, [sq[a] - u[a].scale(2) for a in range(n)], inv, n)
    eqs.append(_form_poly(alg, u, u, n) - Poly.constant(n, Fraction(central_charge) / 2))
    return PolySystem(names, eqs)


# ---------------------------------------------------------------------------
# Independent oracle: bounded exhaustive search


def farey_values(bound: int) -> list[Fraction]:
    """All reduced p/q with |p| <= bound and 1 <= q <= bound, ascending."""
    vals = {Fraction(0)}
    for q in range(1, bound + 1):
        for p in range(1, bound + 1):
            if gcd(p, q) == 1:
                vals.add(Fraction(p, q))
                vals.add(Fraction(-p, q))
    return sorted(vals)


def rational_box_solutions(system: PolySystem, bound: int):
    """Exhaustive sweep over the rational box; independent of the Groebner path.

    Intended as a completeness oracle for systems with <= 3 variables; cost is
    |F(bound)|^nvars evaluations, pruned by substituting one variable at a time
    and discarding branches that already hit a nonzero constant.
    """
    n = len(system.variables)
    values = farey_values(bound)
    return sorted(_box_iter(system.polynomials, values, n, ()))


def _box_iter(polys, values, n, prefix):
    if len(prefix) == n:
        if not polys:
            yield prefix
        return
    idx = len(prefix)
    for v in values:
        subs = []
        dead = False
        for p in polys:
            q = p.substitute(idx, v)
            if not q:
                continue
            if not q.support():
                dead = True  # nonzero constant: no solution down this branch
                break
            subs.append(q)
        if not dead:
            yield from _box_iter(subs, values, n, prefix + (v,))
