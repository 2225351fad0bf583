from itertools import product

import pytest

from gclab.combinatorics import CombinatoricsError, Partition, Tableau, partitions, specht_dim
from gclab.gc_ring import GcRing, get_ring
from gclab.rep_theory import (
    admissible_socle_multidegrees,
    alpha,
    decompose,
    polytabloid,
    sigma_inverse,
    socle_basis_min_degree,
    socle_shape,
    span_dim,
    standard_numbering,
    theta_apply,
    theta_image_vectors,
    theta_maps,
)


def _summands(dec):
    return {(mu.parts, k, v) for mu, k, v in dec.summands}


def test_decompose_examples():
    dec = decompose(4, (1, 1, 0), ring=GcRing(4))
    assert dec.lam == Partition((2, 1, 1))
    assert _summands(dec) == {((2, 1, 1), 1, 3), ((2, 2), 1, 2)}
    assert dec.total == 5
    assert _summands(decompose(4, (1, 1, 1))) == {((1, 1, 1, 1), 1, 1)}
    assert _summands(decompose(4, (2, 0, 0))) == {((2, 2), 1, 2)}
    assert decompose(4, (3, 1, 0)).summands == ()


def test_alpha_examples():
    assert alpha((1, 1, 1, 1)) == (0, 0, 0, 0)
    assert alpha((1, 1, 2, 3), (2, 1, 1, 0)) == (0, 0, 1, 2)
    with pytest.raises(CombinatoricsError):
        alpha((1, 1, 2, 3), (3, 1, 0, 0))


def test_sigma_inverse_is_stable_descending():
    assert sigma_inverse((2, 1, 1, 0)) == (1, 2, 3, 4)
    assert sigma_inverse((1, 1, 2)) == (3, 1, 2)


def test_polytabloid_examples():
    assert polytabloid([[1, 2, 3]]).as_dict() == {((1, 2, 3),): 1}
    assert polytabloid([[1], [2]]).as_dict() == {((1,), (2,)): 1, ((2,), (1,)): -1}
    assert len(polytabloid([[1, 2], [3, 4]]).expansion) == 4


def test_theta_nonzero_and_linear():
    ring = GcRing(4)
    (theta,) = theta_maps(ring, (2, 0, 0), (2, 2))
    t = standard_numbering(Partition((2, 2)))
    key = tuple(tuple(r) for r in t)
    assert not theta_apply(theta, {key: 1}).is_zero()
    assert theta_apply(theta, {}).is_zero()
    assert theta_apply(theta, {key: 2}).coords == tuple((k, 2 * a) for k, a in theta_apply(theta, {key: 1}).coords)


def test_theta_rejects_wrong_content():
    ring = GcRing(4)
    from gclab.rep_theory import ThetaMap

    with pytest.raises(CombinatoricsError):
        ThetaMap(4, (1, 1, 0), Tableau(Partition((2, 2)), (1, 1, 2, 2)), ring)


def test_theta_injective_up_to_n5():
    for n in range(2, 6):
        ring = get_ring(n)
        for d in ring.multidegrees():
            if not ring.dim(d):
                continue
            lam_1 = max((n - sum(d),) + d)
            for mu in partitions(n):
                if mu[0] != lam_1:
                    continue
                for theta in theta_maps(ring, d, mu):
                    assert span_dim(theta_image_vectors(theta), ring.dim(d)) == specht_dim(mu)


def test_socle_shapes():
    assert socle_shape(4) == Partition((2, 2))
    assert socle_shape(5) == Partition((2, 2, 1))
    assert socle_shape(6) == Partition((3, 3))


def test_socle_basis_examples():
    ring4 = GcRing(4)
    vecs = socle_basis_min_degree(ring4, (1, 1, 0))
    assert len(vecs) == 2 and span_dim(vecs, ring4.dim((1, 1, 0))) == 2
    ring5 = get_ring(5)
    vecs = socle_basis_min_degree(ring5, (1, 1, 1, 0))
    assert span_dim(vecs, ring5.dim((1, 1, 1, 0))) == 2 * 5
    ring6 = get_ring(6)
    vecs = socle_basis_min_degree(ring6, (1, 1, 1, 0, 0))
    assert span_dim(vecs, ring6.dim((1, 1, 1, 0, 0))) == 5


def test_admissible_multidegrees():
    assert admissible_socle_multidegrees(4) == []
    six = admissible_socle_multidegrees(6)
    assert len(six) == 10 and all(sorted(d) == [0, 0, 1, 1, 1] for d in six)
    eight = admissible_socle_multidegrees(8)
    assert all(sum(d) == 4 and max(d) <= 2 for d in eight)
    # coefficient of x^4 in (1 + x + x^2)^7
    brute = sum(1 for c in product(range(3), repeat=7) if sum(c) == 4)
    assert len(eight) == brute == 161
