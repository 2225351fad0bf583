import json

import pytest

from gclab.gc_general import (
    AlgebraError,
    agrees_with_simplified,
    algebra,
    char_poly,
    check_newton_girard,
    column_permutation_stable,
    export_ideal,
    gc_ideal,
    graded_dims,
    load_algebra,
    square_zero,
    total_dim,
    truncated_polynomial,
)
from gclab.gc_ring import hilbert_function


def test_char_poly_examples():
    A = square_zero(4)
    assert char_poly(A, [1, 0, 0, 0]) == [1, 4, 6, 4, 1]
    assert char_poly(A, [0, 1, 0, 0]) == [1, 0, 0, 0, 0]
    B = truncated_polynomial(2)
    assert char_poly(B, [0, 1]) == [1, 0, 0]
    C = algebra(["1", "e"], {("e", "e"): {"e": 1}})
    assert char_poly(C, [0, 1]) == [1, 1, 0]


def test_associativity_rejected():
    with pytest.raises(AlgebraError):
        algebra(["1", "a", "b"], {("a", "a"): {"b": 1}, ("a", "b"): {"a": 1}})


def test_export_a2():
    text = export_ideal(gc_ideal(square_zero(2)))
    lines = [l for l in text.splitlines() if not l.startswith("#")]
    assert lines == ["x_1_1 + x_1_2", "x_1_1*x_1_2"]
    assert text == export_ideal(gc_ideal(square_zero(2)))


def test_export_rank_one_is_empty():
    out = gc_ideal(algebra(["1"], {}))
    assert out.generators == []
    assert export_ideal(out) == "# n = 1\n# basis = 1\n"


def test_export_a4_is_stable():
    a = export_ideal(gc_ideal(square_zero(4)))
    b = export_ideal(gc_ideal(square_zero(4)))
    assert a == b
    body = [l for l in a.splitlines() if not l.startswith("#")]
    assert len(body) == 3 * 4
    assert body[0] == "x_1_1 + x_1_2 + x_1_3 + x_1_4"
    js = json.loads(export_ideal(gc_ideal(square_zero(4)), "json"))
    assert js["n"] == 4 and len(js["generators"]) == 12


def test_small_ranks_equal_factorial():
    assert total_dim(square_zero(2)) == 2
    assert total_dim(square_zero(3)) == 6
    assert graded_dims(gc_ideal(square_zero(3))) == list(hilbert_function(3))


def test_non_homogeneous_input_only_exports():
    A = algebra(["1", "e"], {("e", "e"): {"e": 1}})
    assert total_dim(A) is None
    assert export_ideal(gc_ideal(A))


def test_newton_girard():
    for n in range(2, 6):
        assert check_newton_girard(n)


def test_column_permutation_stability():
    for n in range(2, 5):
        assert column_permutation_stable(gc_ideal(square_zero(n)))


def test_agrees_with_simplified_n4():
    out = agrees_with_simplified(4)
    assert out["agree"]
    assert out["graded_dims"] == [1, 9, 21, 1]


def test_load_algebra(tmp_path):
    p = tmp_path / "alg.json"
    p.write_text(json.dumps({"labels": ["1", "x", "y"], "products": [["x", "x", {"y": "1/1"}]]}))
    A = load_algebra(str(p))
    assert A.consts == truncated_polynomial(3).consts
    assert not A.is_square_zero
    assert char_poly(A, [0, 1, 0]) == [1, 0, 0, 0]
