"""Exact computations with the Galois closures G(A_n) of square-zero algebras."""

from .combinatorics import Partition, big_r, d_of_n, hilbert_formula, kostka, specht_dim
from .gc_ring import GcQuotient, GcRing, RingVector, get_ring
from .linalg import Subspace, SparseMatrix, is_in_span, kernel_basis, quotient_dim, rref

__version__ = "0.1.0"
