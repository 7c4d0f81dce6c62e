"""Vectorized exhaustive rational-box sweep, independent of the Groebner path.

Candidates are all reduced p/q with |p| <= bound, 1 <= q <= bound.  Each
polynomial is cleared to integer coefficients and evaluated homogeneously in
(p_i, q_i), so everything stays exact int64 (headroom asserted).
"""

from fractions import Fraction
from math import gcd

import numpy as np


def farey(bound):
    vals = {Fraction(0)}
    for q in range(1, bound + 1):
        for p in range(1, bound + 1):
            if gcd(p, q) == 1:
                vals.add(Fraction(p, q))
                vals.add(Fraction(-p, q))
    return sorted(vals)


def _cleared_terms(poly):
    den = 1
    for c in poly.terms.values():
        den = den * c.denominator // gcd(den, c.denominator)
    return [(mono, int(c * den)) for mono, c in poly.terms.items()]


def _eval_grid(poly, num_arrays, den_arrays, degs):
    total = None
    for mono, c in _cleared_terms(poly):
        term = np.full_like(num_arrays[0], c)
        for i, e in enumerate(mono):
            term = term * num_arrays[i] ** e * den_arrays[i] ** (degs[i] - e)
        total = term if total is None else total + term
    return total


def box_solutions(system, bound):
    """All solutions of the system inside the Farey box, exact."""
    n = len(system.variables)
    values = farey(bound)
    nums = np.array([v.numerator for v in values], dtype=np.int64)
    dens = np.array([v.denominator for v in values], dtype=np.int64)

    degs = []
    for i in range(n):
        degs.append(max(max((m[i] for m in p.terms), default=0) for p in system.polynomials))
    max_coef = max(abs(c) for p in system.polynomials for _, c in _cleared_terms(p))
    nterms = max(len(p.terms) for p in system.polynomials)
    assert max_coef * nterms * bound ** sum(degs) < 2**62, "int64 headroom check"

    if n == 1:
        mask = np.ones(len(values), dtype=bool)
        for p in system.polynomials:
            mask &= _eval_grid(p, [nums], [dens], degs) == 0
        return sorted((values[i],) for i in np.nonzero(mask)[0])

    if n == 2:
        out = []
        g_nums = nums[None, :]
        g_dens = dens[None, :]
        for v in values:
            a_nums = np.full((1, len(values)), v.numerator, dtype=np.int64)
            a_dens = np.full((1, len(values)), v.denominator, dtype=np.int64)
            mask = np.ones((1, len(values)), dtype=bool)
            for p in system.polynomials:
                mask &= _eval_grid(p, [a_nums, g_nums], [a_dens, g_dens], degs) == 0
            out.extend((v, values[j]) for j in np.nonzero(mask[0])[0])
        return sorted(out)

    if n == 3:
        out = []
        yy, zz = np.meshgrid(np.arange(len(values)), np.arange(len(values)), indexing="ij")
        ny, dy = nums[yy], dens[yy]
        nz, dz = nums[zz], dens[zz]
        for v in values:
            nx = np.full_like(ny, v.numerator)
            dx = np.full_like(dy, v.denominator)
            mask = np.ones_like(ny, dtype=bool)
            for p in system.polynomials:
                mask &= _eval_grid(p, [nx, ny, nz], [dx, dy, dz], degs) == 0
            out.extend((v, values[a], values[b]) for a, b in zip(*np.nonzero(mask)))
        return sorted(out)

    raise ValueError("oracle supports at most 3 variables")
