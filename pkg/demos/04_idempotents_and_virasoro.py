"""Classifying idempotents by v-support, enumerating Virasoro vectors, and
the sum analysis that exposes proper summands.

Run:  python demos/04_idempotents_and_virasoro.py
"""

from fractions import Fraction as F

from voaplus import (
    build,
    enumerate_idempotents,
    enumerate_virasoro,
    proper_summand_set,
    sum_analysis,
    validate,
)
from voaplus.classify import distinguished_type0, typed_solver_verdicts

alg = build(validate([[4, 1], [1, 4]]))

print("== type 1: a single v-generator in the support ==")
records = enumerate_idempotents(alg, 1)
for rec in records:
    print(f"  norm {rec.norm}:  {rec.element}")
print("eight in total; four of norm 1/16, four of norm 3/16 (their complements)")

print("\n== type 2 has no rational points here ==")
((support, verdict),) = typed_solver_verdicts(alg, 2).items()
print(f"support {support}: {len(verdict.rational_solutions)} rational of at most "
      f"{verdict.quotient_dimension} complex; {verdict.irrational_root_flags} irrational branch(es)")

print("\n== type 0 is a continuum; distinguished members only ==")
for rec in distinguished_type0(alg):
    print("  ", rec.element, " norm", rec.norm)

print("\n== central-charge-1/2 Virasoro vectors ==")
for key, gram in (("b=0", [[4, 0], [0, 4]]), ("|b|=2", [[4, -2], [-2, 4]])):
    enum = enumerate_virasoro(build(validate(gram)), F(1, 2))
    print(f"  {key}: {len(enum.records)} vectors, halves are the norm-1/16 idempotents")

print("\n== sums and proper summands ==")
small = enumerate_idempotents(alg, 1, norm=F(1, 16))
for pv in sum_analysis(small, alg):
    if pv.sum_is_idempotent:
        print("  idempotent sum:", pv.left, " + ", pv.right)
summands = proper_summand_set(alg)
print("proper summands of nontrivial idempotents:", len(summands),
      "(the norm-1/16 ones, in orthogonal conjugate pairs)")
