# Socle of G(A_n) in its lowest degree, produced from polytabloids via theta.

from gclab.gc_ring import GcQuotient, GcRing
from gclab.rep_theory import socle_basis_min_degree, socle_shape, span_dim, theta_maps

ring = GcRing(4)
print("socle dims by degree:", ring.socle_dims_by_degree())
print("first socle degree:", ring.min_socle_degree())

d = (1, 1, 0)
print("shape used:", socle_shape(4).parts)
for theta in theta_maps(ring, d, socle_shape(4)):
    print("T =", theta.T.rows())

vecs = socle_basis_min_degree(ring, d)
for v in vecs:
    print(ring.vector_json(v))
print("span:", span_dim(vecs, ring.dim(d)), "socle component:", ring.socle_component(d).dim)

# killing the whole degree-2 socle leaves a Gorenstein ring
gens = []
for d in ring.multidegrees(2):
    if ring.dim(d):
        gens += socle_basis_min_degree(ring, d)
q = GcQuotient(ring, gens)
print("r =", q.r, "Hilbert function:", q.hilbert_function())

# n = 6: the admissible multidegree (1,1,1,0,0) carries one copy of V(3,3)
ring6 = GcRing(6)
vecs = socle_basis_min_degree(ring6, (1, 1, 1, 0, 0))
print("n=6 span:", span_dim(vecs, ring6.dim((1, 1, 1, 0, 0))))
