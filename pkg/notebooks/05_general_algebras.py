# Galois-closure ideals for arbitrary finite algebras given by structure constants.

from gclab.gc_general import (
    agrees_with_simplified,
    algebra,
    char_poly,
    export_ideal,
    gc_ideal,
    square_zero,
    total_dim,
)

A2 = square_zero(2)
print(export_ideal(gc_ideal(A2)))
print("rank:", total_dim(A2), total_dim(square_zero(3)))

# Q x Q: e is idempotent, so the ideal is not homogeneous and only gets exported
E = algebra(["1", "e"], {("e", "e"): {"e": 1}})
print(char_poly(E, [0, 1]))
print(export_ideal(gc_ideal(E)))

# for A_4 the raw ideal and the short presentation agree
print(agrees_with_simplified(4))
