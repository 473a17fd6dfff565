import itertools
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from quiverloci import schuboracle as so
from quiverloci.polyengine import LinearForm, MultiPoly, XVar, substitute_linear

X = [XVar("x", i) for i in range(1, 7)]
Y = [XVar("y", i) for i in range(1, 7)]


@pytest.mark.parametrize("n", [2, 3, 4])
def test_two_descent_routes_agree(n):
    for w in itertools.permutations(range(1, n + 1)):
        assert so.double_schubert(w, X, Y) == so.double_schubert_via_w0(w, X, Y)


def test_small_cases():
    x1, x2, y1, y2 = (MultiPoly.var(v) for v in (X[0], X[1], Y[0], Y[1]))
    assert so.double_schubert((1, 2, 3), X, Y) == 1
    assert so.double_schubert((2, 1), X, Y) == x1 - y1
    assert so.double_schubert((1, 3, 2), X, Y) == x1 + x2 - y1 - y2


@pytest.mark.parametrize("n", [3, 4])
def test_degree_is_length_and_single_version_is_positive(n):
    for w in itertools.permutations(range(1, n + 1)):
        f = so.double_schubert(w, X, Y)
        assert f.is_homogeneous() and f.degree() == sum(so.lehmer_code(w))
        single = substitute_linear(f, {y: LinearForm() for y in Y})
        assert single and all(c > 0 for c in single.terms.values() if c)


def test_stability_under_embedding():
    assert so.double_schubert((2, 1, 3), X, Y) == so.double_schubert((2, 1), X, Y)


@given(st.integers(1, 3), st.integers(1, 3), st.integers(0, 2))
def test_rectangle_against_jacobi_trudi(p, q, r):
    assert so.jacobi_trudi_check(p, q, X[: p + r], Y[: q + r], trials=3, seed=p * 9 + q * 3 + r)


@pytest.mark.parametrize("p,q,r", [(1, 1, 1), (2, 1, 1), (2, 2, 1), (1, 2, 2)])
def test_rectangle_tableaux_count(p, q, r):
    # with y = 0 and every x = 1 the double Schur polynomial counts SSYT with entries in 1..p+r
    f = so.double_schur_rect(p, q, X[: p + r], Y[: q + r])
    pt = {v: Fraction(1) for v in X[: p + r]} | {v: Fraction(0) for v in Y[: q + r]}
    assert f.evaluate(pt) == so.count_ssyt(p, q, p + r)


def test_rectangle_permutation_code():
    w = so.rectangle_permutation(2, 3, 1)
    assert so.lehmer_code(w) == (0, 3, 3, 0, 0, 0)


def test_input_validation():
    with pytest.raises(ValueError):
        so.double_schubert((1, 1, 2), X, Y)
    with pytest.raises(ValueError):
        so.double_schur_rect(2, 2, X[:3], Y[:2])
    with pytest.raises(ValueError):
        so.double_schubert((3, 2, 1), X[:1], Y)
    with pytest.raises(ValueError):
        so.component_formula_a3(X[:1], X[1:4], X[4:6])
