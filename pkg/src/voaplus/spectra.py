"""Adjoint-multiplication spectra: ad(w) matrices, characteristic polynomials
by fraction-free (Bareiss) elimination, rational eigenvalues and exact
eigenspaces.  Eigenvalues are only ever reported over the rationals; what is
left of the characteristic polynomial after dividing out rational roots is
flagged, not factored."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from ._linalg import kernel, primitive_integer_vector
from .algebra import AlgebraElement, Degree2Algebra, product
from .polysolve import rational_roots
from .rationals import encode_matrix, encode_vector, format_rational


@dataclass
class Eigenvalue:
    value: Fraction
    algebraic_multiplicity: int
    geometric_multiplicity: int
    eigenbasis: tuple[tuple[int, ...], ...]

    def to_json(self) -> dict:
        return {
            "value": format_rational(self.value),
            "algebraic_multiplicity": self.algebraic_multiplicity,
            "geometric_multiplicity": self.geometric_multiplicity,
            "eigenbasis": [list(v) for v in self.eigenbasis],
        }


@dataclass
class AdSpectrum:
    element: AlgebraElement
    matrix: tuple[tuple[Fraction, ...], ...]
    char_poly: tuple[Fraction, ...]  # ascending, monic
    eigenvalues: tuple[Eigenvalue, ...]
    irrational_factor_flags: int
    residual_degree: int

    def rational_eigenvalue_multiset(self) -> tuple[Fraction, ...]:
        out = []
        for ev in self.eigenvalues:
            out.extend([ev.value] * ev.algebraic_multiplicity)
        return tuple(sorted(out))

    def to_json(self) -> dict:
        return {
            "element": encode_vector(self.element.coords),
            "matrix": encode_matrix(self.matrix),
            "char_poly_ascending": encode_vector(self.char_poly),
            "eigenvalues": [ev.to_json() for ev in self.eigenvalues],
            "irrational_factor_flags": self.irrational_factor_flags,
            "residual_degree": self.residual_degree,
        }


def ad_matrix(alg: Degree2Algebra, w: AlgebraElement):
    """Multiplication-by-w operator; column j holds the coords of w x basis_j."""
    cols = [product(w, alg.basis_element(j)).coords for j in range(alg.dim)]
    return tuple(tuple(cols[j][i] for j in range(alg.dim)) for i in range(alg.dim))


def _poly_mul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return out


def _poly_sub(a, b):
    n = max(len(a), len(b))
    out = [Fraction(0)] * n
    for i, x in enumerate(a):
        out[i] += x
    for i, y in enumerate(b):
        out[i] -= y
    return out


def _poly_trim(a):
    while len(a) > 1 and a[-1] == 0:
        a.pop()
    return a


def _poly_exact_div(a, b):
    """Long division with zero remainder asserted; valid inside Bareiss."""
    a = _poly_trim([Fraction(x) for x in a])
    b = _poly_trim([Fraction(x) for x in b])
    assert any(b), "division by zero polynomial"
    out = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    while len(a) >= len(b) and any(a):
        shift = len(a) - len(b)
        f = a[-1] / b[-1]
        out[shift] = f
        for i, c in enumerate(b):
            a[i + shift] -= f * c
        a = _poly_trim(a)
    assert not any(a), "Bareiss division was not exact"
    return out


def charpoly(matrix) -> tuple[Fraction, ...]:
    """Monic det(xI - M) by fraction-free elimination on the polynomial matrix."""
    n = len(matrix)
    den = 1
    for row in matrix:
        for x in row:
            x = Fraction(x)
            den = den * x.denominator // gcd(den, x.denominator)
    scaled = [[int(Fraction(x) * den) for x in row] for row in matrix]

    # entries of yI - N as ascending integer coefficient lists
    work = [
        [
            _poly_trim([Fraction(-scaled[i][j]), Fraction(1)] if i == j else [Fraction(-scaled[i][j])])
            for j in range(n)
        ]
        for i in range(n)
    ]
    prev = [Fraction(1)]
    for k in range(n - 1):
        pivot = work[k][k]
        assert any(pivot), "characteristic matrix pivot vanished"
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = _poly_sub(_poly_mul(work[i][j], pivot), _poly_mul(work[i][k], work[k][j]))
                work[i][j] = _poly_exact_div(num, prev)
            work[i][k] = [Fraction(0)]
        prev = pivot
    det = work[n - 1][n - 1]
    det = det + [Fraction(0)] * (n + 1 - len(det))
    # undo the denominator scaling: det is char poly of den*M evaluated at den*x
    return tuple(det[j] * Fraction(1, den) ** (n - j) for j in range(n + 1))


def ad_spectrum(alg: Degree2Algebra, w: AlgebraElement) -> AdSpectrum:
    """Exact spectrum of ad(w): rational eigenvalues with both multiplicities
    and primitive integer eigenbases."""
    m = ad_matrix(alg, w)
    cp = charpoly(m)
    roots, residual = rational_roots(cp)
    eigen = []
    for value, mult in roots:
        shifted = tuple(
            tuple(m[i][j] - (value if i == j else 0) for j in range(alg.dim))
            for i in range(alg.dim)
        )
        basis = [primitive_integer_vector(v) for v in kernel(shifted)]
        eigen.append(
            Eigenvalue(
                value=value,
                algebraic_multiplicity=mult,
                geometric_multiplicity=len(basis),
                eigenbasis=tuple(sorted(basis)),
            )
        )
    total = sum(ev.algebraic_multiplicity for ev in eigen) + residual
    assert total == alg.dim, "multiplicities plus residual degree must fill the dimension"
    return AdSpectrum(
        element=w,
        matrix=m,
        char_poly=cp,
        eigenvalues=tuple(eigen),
        irrational_factor_flags=1 if residual >= 2 else 0,
        residual_degree=residual,
    )
