"""The degree-2 algebra: structure constants, bilinear form, identity.

Run:  python demos/02_degree2_algebra.py
"""

from fractions import Fraction as F

from voaplus import (
    build,
    form_eval,
    identity_element,
    pair_tensor,
    product,
    v_element,
    validate,
    vector_square,
    virasoro_element,
)

alg = build(validate([[4, 1], [1, 4]]))
print("basis:", alg.basis, " dimension:", alg.dim)

r2 = vector_square(alg, (1, 0))
s2 = vector_square(alg, (0, 1))
rs = pair_tensor(alg, (1, 0), (0, 1))
vr = v_element(alg, (1, 0))
vs = v_element(alg, (0, 1))

print("\n== products ==")
print("r^2 x s^2      =", product(r2, s2))
print("rs  x rs       =", product(rs, rs))
print("r^2 x rs       =", product(r2, rs))
print("r^2 x v_r      =", product(r2, vr))
print("v_r x v_r      =", product(vr, vr))
print("v_r x v_s      =", product(vr, vs), "  (inner product 1 kills it)")

print("\n== the form ==")
print("(r^2, r^2) =", form_eval(r2, r2), "  (rs, rs) =", form_eval(rs, rs),
      "  (v_r, v_r) =", form_eval(vr, vr))

print("\n== identity and conformal element ==")
ident = identity_element(alg)
omega = virasoro_element(alg)
print("identity:", ident)
print("omega = 2*identity:", omega)
print("(identity, identity) =", form_eval(ident, ident), "  (omega, omega) =", form_eval(omega, omega))
print("identity really is an identity:",
      all(product(ident, alg.basis_element(i)) == alg.basis_element(i) for i in range(alg.dim)))

print("\n== a triangular shell multiplies v-generators into each other ==")
tri = build(validate([[4, -2], [-2, 4]]))
print("basis:", tri.basis)
print("v_r x v_s =", product(v_element(tri, (1, 0)), v_element(tri, (0, 1))))

print("\n== halved shell squares give central charge 1/2 ==")
w = vector_square(alg, (1, 0)).scale(F(1, 16)) + vr.scale(F(1, 4))
print("w =", w)
print("w x w = 2w:", product(w, w) == w.scale(2), " (w,w) =", form_eval(w, w))
