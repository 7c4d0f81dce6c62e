"""Adjoint spectra: exact characteristic polynomials, eigenvalues, eigenspaces.

Run:  python demos/05_spectra.py
"""

from fractions import Fraction as F

from voaplus import ad_spectrum, build, enumerate_idempotents, identity_element, validate

alg = build(validate([[4, 1], [1, 4]]))

print("== the multiplication operator of the identity ==")
sp = ad_spectrum(alg, identity_element(alg))
print("char poly (ascending):", [str(c) for c in sp.char_poly])
print("eigenvalues:", [(str(e.value), e.algebraic_multiplicity) for e in sp.eigenvalues])

print("\n== spectra separate the two idempotent norms ==")
for rec in enumerate_idempotents(alg, 1):
    sp = ad_spectrum(alg, rec.element)
    print(f"  norm {rec.norm}: eigenvalues {[str(v) for v in sp.rational_eigenvalue_multiset()]}")

print("\nnorm 1/16 shows 1, 0, 0, 1/4, 1/32; norm 3/16 the complementary 0, 1, 1, 3/4, 31/32")

print("\n== eigenbases are exact integer vectors ==")
rec = enumerate_idempotents(alg, 1, norm=F(1, 16))[0]
sp = ad_spectrum(alg, rec.element)
for ev in sp.eigenvalues:
    print(f"  eigenvalue {ev.value}: {list(ev.eigenbasis)}")
