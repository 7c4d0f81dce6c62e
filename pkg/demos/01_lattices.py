"""Rank-2 even lattices: validation, norm shells, and the case analysis.

Run:  python demos/01_lattices.py
"""

from voaplus import classify_lattice, index_determinant_check, shell, validate

print("== validating Gram matrices ==")
lat = validate([[4, 1], [1, 4]])
print("accepted:", lat.gram, "det =", lat.det)
for bad in ([[2, 3], [3, 2]], [[3, 0], [0, 4]]):
    try:
        validate(bad)
    except Exception as exc:
        print(f"rejected {bad}: {type(exc).__name__}: {exc}")

print("\n== norm shells ==")
print("this lattice has no norm-2 vectors:", shell(lat, 1).vectors)
print("its norm-4 classes:", shell(lat, 2).vectors)
a2 = validate([[2, -1], [-1, 2]])
print("the hexagonal root lattice has three root pairs:", shell(a2, 1).vectors)
tri = validate([[4, -2], [-2, 4]])
print("the doubled hexagonal lattice has three norm-4 pairs:", shell(tri, 2).vectors)

print("\n== case analysis ==")
for gram in ([[2, 0], [0, 2]], [[2, -1], [-1, 2]], [[2, 1], [1, 4]],
             [[4, 1], [1, 4]], [[4, 6], [6, 12]], [[4, 0], [0, 8]], [[6, 1], [1, 6]]):
    cls = classify_lattice(validate(gram))
    print(f"{gram}  ->  {cls.label}  {cls.params}")
print("note: [[4,6],[6,12]] reduces to a two-norm4-generator basis with |b| = 2")

print("\n== sublattice index vs determinant ==")
square = validate([[2, 0], [0, 2]])
index, holds = index_determinant_check(square, [(2, 0), (0, 1)])
print(f"index of span{{2e1, e2}}: {index}; det relation det(M) = det(L)*index^2 holds: {holds}")
