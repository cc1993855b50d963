import json
from fractions import Fraction

import pytest

from fockschur import (
    BasisConfig,
    Cutoffs,
    LaurentSlice,
    MultiIndex,
    OneParticleVector,
    Scalar,
    TuplePair,
    elementary_schur,
    matrix_element_closed,
    schur_terms,
)
from fockschur import serialize as ser


def test_scalar_forms():
    assert ser.scalar_to_json(Scalar(1)) == "1"
    assert ser.scalar_to_json(Scalar(Fraction(1, 2))) == "1/2"
    assert ser.scalar_to_json(Scalar(Fraction(-3, 4))) == "-3/4"
    assert ser.scalar_to_json(Scalar(1, Fraction(1, 3))) == {"re": "1", "im": "1/3"}


def test_scalar_round_trip():
    for s in (Scalar(0), Scalar(Fraction(5, 7)), Scalar(Fraction(-1, 2), 3)):
        assert ser.scalar_from_json(ser.scalar_to_json(s)) == s
    assert ser.scalar_from_json("2/4") == Scalar(Fraction(1, 2))
    assert ser.scalar_from_json(3) == Scalar(3)
    with pytest.raises(ValueError):
        ser.scalar_from_json([1, 2])


def test_multiindex_round_trip():
    p = MultiIndex({1: 2, 4: 1})
    assert ser.multiindex_to_json(p) == {"1": 2, "4": 1}
    assert ser.multiindex_from_json(ser.multiindex_to_json(p)) == p
    assert ser.multiindex_from_json({}) == MultiIndex()


def test_vector_round_trip():
    v = OneParticleVector({1: Scalar(Fraction(1, 2)), 3: Scalar(0, 1)})
    obj = ser.vector_to_json(v, 3)
    assert obj["modes"] == 3
    back, modes = ser.vector_from_json(obj)
    assert back == v and modes == 3
    # JSON text round trip as the CLI would see it
    back2, _ = ser.vector_from_json(json.loads(json.dumps(obj)))
    assert back2 == v


def test_basis_round_trip(complex_basis_2):
    for config in (BasisConfig.identity(3), complex_basis_2):
        back = ser.basis_from_json(ser.basis_to_json(config))
        assert back == config


def test_basis_from_json_rejects_bad_matrix():
    with pytest.raises(ValueError, match="orthonormal"):
        ser.basis_from_json({"modes": 2, "F": [["1", "1"], ["0", "1"]]})


def test_cutoffs_round_trip():
    c = Cutoffs(K=3, M=5, D=2)
    obj = ser.cutoffs_to_json(c)
    assert obj == {"modes": 3, "order": 5, "degree": 2}
    assert ser.cutoffs_from_json(obj) == c


def test_pair_round_trip():
    pair = TuplePair(MultiIndex({1: 1}), MultiIndex({2: 3}))
    assert ser.pair_from_json(ser.pair_to_json(pair)) == pair


def test_schur_operator_round_trip():
    op = schur_terms(1, Cutoffs(K=2, M=3, D=2))
    back = ser.schur_operator_from_json(ser.schur_operator_to_json(op))
    assert back == op


def test_laurent_round_trip():
    slice_ = matrix_element_closed(
        OneParticleVector.basis(1),
        OneParticleVector.basis(1),
        BasisConfig.identity(2),
        Cutoffs(K=2, M=3, D=3),
    )
    back = ser.laurent_from_json(ser.laurent_to_json(slice_))
    assert back == slice_


def test_polynomial_round_trip():
    poly = elementary_schur(4, 3)
    back = ser.polynomial_from_json(ser.polynomial_to_json(poly))
    assert back == poly


def test_text_rendering():
    op = schur_terms(1, Cutoffs(K=2, M=1, D=2))
    assert ser.schur_operator_text(op) == "f_1"
    op = schur_terms(0, Cutoffs(K=2, M=0, D=2))
    assert ser.schur_operator_text(op) == "1"
    op = schur_terms(9, Cutoffs(K=2, M=2, D=2))
    assert ser.schur_operator_text(op) == "0"
    op = schur_terms(-2, Cutoffs(K=2, M=2, D=2))
    assert ser.schur_operator_text(op) == "g_2* + (1/2) (g_1*)^2"


def test_polynomial_text():
    assert ser.polynomial_text(elementary_schur(2, 2)) == "x_2 + (1/2) x_1^2"
    assert ser.polynomial_text(elementary_schur(0, 2)) == "1"


def test_laurent_text():
    slice_ = LaurentSlice(
        {0: Scalar(1), 1: Scalar(1), -2: Scalar(Fraction(1, 6))},
        Cutoffs(K=2, M=2, D=2),
    )
    assert ser.laurent_text(slice_) == "1/6 z^-2 + 1 + z"


def test_latex_rendering():
    op = schur_terms(-2, Cutoffs(K=2, M=2, D=2))
    assert (
        ser.schur_operator_latex(op)
        == "g_{2}^{\\ast} + \\frac{1}{2} \\left(g_{1}^{\\ast}\\right)^{2}"
    )
    assert (
        ser.polynomial_latex(elementary_schur(2, 2))
        == "x_{2} + \\frac{1}{2} x_{1}^{2}"
    )
    slice_ = LaurentSlice({-1: Scalar(2), 1: Scalar(1)}, Cutoffs(K=1, M=1, D=1))
    assert ser.laurent_latex(slice_) == "2 z^{-1} + z"
    assert ser.scalar_latex(Scalar(Fraction(-1, 2), Fraction(1, 3))) in (
        "-\\frac{1}{2} + \\frac{1}{3} i",
    )
