"""The exact quadratic-system solver: Groebner bases, back-substitution,
irrational flags, and the six idempotents of the triangular algebra.

Run:  python demos/03_polynomial_solver.py
"""

from fractions import Fraction as F

from voaplus import build, idempotent_system, solve, v_element, validate, vector_square
from voaplus.polysolve import Poly, PolySystem

print("== a univariate taste ==")
verdict = solve(PolySystem(("x",), [Poly(1, {(2,): 1, (0,): -2})]))
print("x^2 = 2:", verdict.status, "| rational solutions:", verdict.rational_solutions,
      "| irrational branches flagged:", verdict.irrational_root_flags)

print("\n== a symmetric pair ==")
system = PolySystem(
    ("x", "y"),
    [Poly(2, {(1, 0): 1, (0, 1): 1, (0, 0): -3}), Poly(2, {(1, 1): 1, (0, 0): -2})],
)
verdict = solve(system)
print("x+y=3, xy=2:", [tuple(map(str, s)) for s in verdict.rational_solutions])
print("reduced basis:", [g.pretty(system.variables) for g in verdict.groebner_basis])

print("\n== idempotents of norm 1/16 on the triangular algebra ==")
alg = build(validate([[4, -2], [-2, 4]]))
basis = [
    vector_square(alg, (1, 0)),
    vector_square(alg, (0, 1)),
    vector_square(alg, (1, 1)),
    v_element(alg, (1, 0)),
    v_element(alg, (0, 1)),
    v_element(alg, (1, 1)),
]
system = idempotent_system(alg, norm=F(1, 16), basis=basis, names=tuple("abcdef"))
print("equations:")
for p in system.polynomials:
    print("   ", p.pretty(system.variables), "= 0")
verdict = solve(system)
print("status:", verdict.status, "| count:", len(verdict.rational_solutions))
for sol in verdict.rational_solutions:
    print("   ", tuple(map(str, sol)))
print("the six solutions are one +- pair per shell direction, permuted cyclically")

print("\n== dropping the norm equation exposes the projection continuum ==")
unconstrained = idempotent_system(alg, basis=basis, names=tuple("abcdef"))
pinned = list(unconstrained.polynomials) + [Poly.variable(6, i) for i in (3, 4, 5)]
verdict = solve(PolySystem(unconstrained.variables, pinned))
print("tensor-part idempotents:", verdict.status, "| dimension:", verdict.dimension)
