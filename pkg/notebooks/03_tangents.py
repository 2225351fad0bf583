# Negative tangents: every negatively graded map I -> B should come from a
# derivative.  First a ring where this fails, then G(A_n) and its quotients.

from gclab import tangents

toy = tangents.toy_tnt()
print("k[x]/(x^2):", toy.tnt, "witness:", toy.witness)

rep = tangents.tnt_check(4)
for s in rep.shifts:
    print(s.e, "hom", s.dim_hom, "derivations", s.dim_deriv)
print("n=4:", rep.tnt, rep.dim_hom_neg, rep.dim_derivation_span)

# the plain syzygy method gives the same answer, only slower
print("free method:", tangents.tnt_check(4, method="free").tnt)

rep5 = tangents.tnt_check(5)
print("n=5:", rep5.tnt, rep5.dim_hom_neg)

# quotients by socle elements of the lowest degree
for n, r in ((4, 12), (5, 40)):
    q = tangents.quotient_workflow(n, r)
    print(f"n={n} r={r}:", q.tnt, q.hilbert)

# n = 6 takes about a minute each
# print(tangents.tnt_check(6).tnt)
# print(tangents.quotient_workflow(6, 50).hilbert)
