import pytest
from hypothesis import given, settings, strategies as st

from quiverloci import collapsing as col
from quiverloci import polyengine as pe
from quiverloci import quiverkit as qk
from quiverloci import repkit as rk
from quiverloci import rootsys
from quiverloci import selftest as stt
from quiverloci.polyengine import Reflection, XVar

A3 = qk.equioriented_a(3)
RO3 = qk.default_order(A3)
ORBITS_232 = qk.enumerate_orbits(qk.root_system_of(A3), RO3, (2, 3, 2))


def test_a3_block_structure():
    q, ro, d, m = stt.a3_case()
    bs = col.block_structure(q, ro, d, m)
    assert bs.support_composition(1) == (2, 0, 0)
    assert bs.support_composition(2) == (2, 1, 0)
    assert bs.support_composition(3) == (0, 1, 1)
    assert len(col.z_weights(bs)) == 7
    assert col.expected_operator_count(bs) == 3


def test_a3_golden():
    ok, detail = stt.check_a3_golden()
    assert ok, detail


@pytest.mark.parametrize("m", ORBITS_232)
def test_greedy_agrees_with_the_word(m):
    assert col.multidegree_greedy(A3, RO3, (2, 3, 2), m) == col.multidegree(A3, RO3, (2, 3, 2), m).multidegree


def _alternative_word(bs):
    # another reduced word of each w0 w0^P, with the vertices visited backwards
    word = []
    for v in reversed(bs.quiver.vertices):
        w = rootsys.w0_wP(bs.composition(v))
        letters = list(reversed(rootsys.reduced_word(rootsys.inverse(w))))
        assert rootsys.word_to_permutation(letters, len(w)) == w
        word.extend(Reflection.transposition(XVar(v, i), XVar(v, i + 1)) for i in letters)
    return word


@pytest.mark.parametrize("q,d", [(A3, (2, 3, 2)), (stt.D4_QUIVER, (1, 2, 1, 1))])
def test_result_does_not_depend_on_the_reduced_word(q, d):
    ro = qk.default_order(q)
    for m in qk.enumerate_orbits(qk.root_system_of(q), ro, d):
        bs = col.block_structure(q, ro, d, m)
        H, K = col.class_of_Z(bs)
        alt = _alternative_word(bs)
        assert col.apply_word(H, alt, pe.divided_difference)[0] == col.multidegree(q, ro, d, m).multidegree
        assert col.apply_word(K, alt, pe.demazure)[0] == col.kpolynomial(q, ro, d, m)


@pytest.mark.parametrize("m", ORBITS_232)
def test_multidegree_is_gl_symmetric(m):
    f = col.multidegree(A3, RO3, (2, 3, 2), m).multidegree
    for r in col.gl_reflections(A3, (2, 3, 2)):
        assert not pe.divided_difference(f, r)
        assert pe.apply_reflection(f, r) == f


@pytest.mark.parametrize("m", ORBITS_232)
def test_kpolynomial_stable_under_further_demazure(m):
    K = col.kpolynomial(A3, RO3, (2, 3, 2), m)
    for r in col.gl_reflections(A3, (2, 3, 2)):
        assert pe.demazure(K, r) == K


@pytest.mark.parametrize("m", ORBITS_232)
def test_degree_is_codimension_and_k_lowest_term(m):
    res = col.analyze_orbit(A3, RO3, (2, 3, 2), m, with_kpoly=True)
    assert res.multidegree.is_homogeneous()
    assert res.codim == rk.codim_orbit(A3, RO3, m)
    assert col.k_to_h_compatible(A3, RO3, (2, 3, 2), m, res)


def test_dense_orbit_class_is_one():
    dense = next(m for m in ORBITS_232 if rk.codim_orbit(A3, RO3, m) == 0)
    res = col.analyze_orbit(A3, RO3, (2, 3, 2), dense, with_kpoly=True)
    assert res.multidegree == 1 and res.kpolynomial == 1


def test_zero_orbit_is_product_of_all_weights():
    d = (1, 2, 1)
    zero = next(m for m in qk.enumerate_orbits(qk.root_system_of(A3), RO3, d) if sum(m) == 4)
    f = col.multidegree(A3, RO3, d, zero).multidegree
    expected = pe.MultiPoly.constant(1)
    for t, h in A3.arrows:
        for r in range(1, d[A3.index(t)] + 1):
            for c in range(1, d[A3.index(h)] + 1):
                expected = expected * pe.LinearForm.diff(XVar(t, r), XVar(h, c)).to_poly()
    assert f == expected


@settings(max_examples=15)
@given(st.tuples(st.integers(0, 2), st.integers(0, 2)), st.integers(0, 1000))
def test_summation_formula_on_a2(d, seed):
    q = qk.equioriented_a(2)
    ro = qk.default_order(q)
    for m in qk.enumerate_orbits(qk.root_system_of(q), ro, d):
        assert col.sum_formula_check(q, ro, d, m, trials=3, seed=seed)


def test_summation_check_reports():
    q, ro, d, m = stt.a3_case()
    reports = col.sum_formula_reports(q, ro, d, m, trials=4, seed=11)
    assert [r.side for r in reports] == ["H", "K"] and all(r.ok for r in reports)
    with pytest.raises(ValueError):
        col.sum_formula_reports(q, ro, d, m, trials=0)


def test_orbit_errors():
    with pytest.raises(col.OrbitError):
        col.multidegree(A3, RO3, (2, 3, 2), (1, 0, 0, 0, 0, 0))
    with pytest.raises(col.OrbitError):
        col.multidegree(A3, RO3, (2, 3, 2), (1, 0, 0))
    with pytest.raises(col.OrbitError):
        col.block_structure(A3, RO3, (1, 0, 0), (-1, 2, 0, 0, 0, 0))


def test_type_e_results_carry_a_warning():
    q = qk.Quiver.from_arrows([(1, 2), (2, 3), (3, 4), (4, 5), (3, 6)])
    ro = qk.default_order(q)
    d = (1, 1, 1, 0, 0, 1)
    m = qk.enumerate_orbits(qk.root_system_of(q), ro, d)[-1]
    res = col.analyze_orbit(q, ro, d, m, with_kpoly=True)
    assert not res.certified and col.E_WARNING in res.warnings
    assert col.k_to_h_compatible(q, ro, d, m, res)
    plain = col.analyze_orbit(q, ro, d, m)
    assert plain.certified and not plain.warnings


def test_sl2_and_sl3():
    assert col.generic_multidegree(col.sl2_data()) == 2
    assert col.generic_multidegree(col.sl3_data()) == 6
    assert col.word_multidegree(col.sl3_data()) == 6
    assert col.generic_sum_check(col.sl3_data(), trials=5, seed=4)


def test_kempf_data_validation():
    data = col.sl2_data()
    with pytest.raises(ValueError):
        col.KempfData(data.varset, data.y_weights, frozenset({7}), data.simple_reflections, data.wp_word, data.wp_reps, data.pbeta)
