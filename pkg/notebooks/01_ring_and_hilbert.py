# Walk through the graded ring G(A_n) for small n: component dimensions,
# the Hilbert function, and how it matches the Specht-module count.

from gclab import combinatorics as comb
from gclab.gc_ring import GcRing, column_monomials
from gclab.rep_theory import decompose

ring = GcRing(4)

# degree-one piece in row 1: four variables, one linear relation
d = (1, 0, 0)
print(d, "monomials:", len(column_monomials(4, d)), "dim:", ring.dim(d))

# the top-degree piece is spanned by a single class
print("top:", ring.basis_monomials((1, 1, 1)))

# a component can vanish for structural reasons (too many boxes in one row)
print("(3,0,0):", ring.dim((3, 0, 0)))

h = ring.hilbert_function()
print("Hilbert function:", h, "total", sum(h))

# the same numbers from tableau counting alone
print("formula:", comb.hilbert_formula(4, 0), comb.d_of_n(4))

# component by component
for d in ring.multidegrees(2):
    dec = decompose(4, d, ring=ring)
    pieces = " + ".join(f"{k}*V{mu.parts}" for mu, k, _ in dec.summands) or "0"
    print(d, ring.dim(d), "=", pieces)

# larger n, dimensions only
for n in (5, 6):
    print(n, GcRing(n).hilbert_function(), comb.d_of_n(n))
