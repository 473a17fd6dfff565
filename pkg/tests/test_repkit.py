import itertools
import pytest
from hypothesis import given, strategies as st

from quiverloci import quiverkit as qk
from quiverloci import repkit as rk
from quiverloci import selftest as stt
from quiverloci.rootsys import DynkinDiagram

A3 = qk.equioriented_a(3)
RO3 = qk.default_order(A3)


def test_indecomposables_have_root_dimensions_and_trivial_endomorphisms():
    for q in qk.all_orientations(DynkinDiagram.standard("D", 4))[:3] + [A3]:
        ro = qk.default_order(q)
        for j in range(1, len(ro) + 1):
            V = rk.indecomposable(q, ro, j)
            assert V.dims == ro.gammas[j - 1]
            assert rk.hom_dim(V, V) == 1
            assert rk.ext_dim(V, V) == 0


def test_euler_form_is_hom_minus_ext():
    q = stt.D4_QUIVER
    ro = qk.default_order(q)
    for u, w in itertools.product(range(len(ro)), repeat=2):
        U, W = rk.indecomposable_beta(q, ro, u), rk.indecomposable_beta(q, ro, w)
        assert rk.hom_dim(U, W) - rk.ext_dim(U, W) == qk.euler_form(q, U.dims, W.dims)


def test_hom_and_ext_triangularity():
    # beta order: Ext(beta_u, beta_w) = 0 for u >= w and Hom(beta_u, beta_w) = 0 for u < w
    for q in (A3, stt.D4_QUIVER):
        ro = qk.default_order(q)
        H, E = rk.hom_table(q, ro), rk.ext_table(q, ro)
        N = len(ro)
        assert all(E[u][w] == 0 for u in range(N) for w in range(N) if u >= w)
        assert all(H[u][w] == 0 for u in range(N) for w in range(N) if u < w)


def test_ext_vanishing_sweep():
    assert stt.ext_zero_sweep()


def test_codim_a3_orbit():
    q, ro, d, m = stt.a3_case()
    assert rk.codim_orbit(q, ro, m) == 4


def test_dense_orbit_has_codim_zero():
    for d in [(1, 2, 1), (2, 3, 2), (3, 1, 2)]:
        orbits = qk.enumerate_orbits(qk.root_system_of(A3), RO3, d)
        codims = sorted(rk.codim_orbit(A3, RO3, m) for m in orbits)
        assert codims[0] == 0 and codims.count(0) == 1


def test_zero_orbit_codim_is_full_space():
    d = (2, 1, 2)
    m = next(m for m in qk.enumerate_orbits(qk.root_system_of(A3), RO3, d) if sum(m) == sum(d))
    assert rk.codim_orbit(A3, RO3, m) == 2 * 1 + 1 * 2


@given(st.tuples(st.integers(0, 2), st.integers(0, 2), st.integers(0, 2)))
def test_decompose_round_trip(d):
    for m in qk.enumerate_orbits(qk.root_system_of(A3), RO3, d):
        assert rk.decompose(A3, RO3, rk.rep_from_multiplicities(A3, RO3, m)) == m


def test_decompose_explicit_matrix():
    # 1 -> 2 -> 3 with an isomorphism then zero: I_{12} + S_3
    rep = rk.Representation.from_matrices(A3, (1, 1, 1), [[[1]], [[0]]])
    m = rk.decompose(A3, RO3, rep)
    assert qk.multiplicities_to_json(RO3, m) == {"110": 1, "001": 1}


def test_reflection_functor_round_trip():
    q = A3
    V = rk.indecomposable(q, RO3, 3)
    sink = q.sinks()[0]
    W = rk.reflection_functor(V, sink, "plus")
    back = rk.reflection_functor(W, sink, "minus")
    assert back.dims == V.dims
    assert rk.hom_dim(back, V) == 1


def test_poset_properties():
    for d in [(2, 2), (1, 2), (3, 2)]:
        q = qk.equioriented_a(2)
        ro = qk.default_order(q)
        P = rk.degeneration_poset(q, ro, qk.enumerate_orbits(qk.root_system_of(q), ro, d))
        assert P.is_partial_order()
        [top] = P.maxima()
        assert rk.codim_orbit(q, ro, P.orbits[top]) == 0


def test_codim_monotone_along_degenerations():
    d = (1, 2, 1)
    orbits = qk.enumerate_orbits(qk.root_system_of(A3), RO3, d)
    P = rk.degeneration_poset(A3, RO3, orbits)
    for u, w in P.hasse:
        assert rk.codim_orbit(A3, RO3, P.orbits[u]) > rk.codim_orbit(A3, RO3, P.orbits[w])


def test_degeneration_needs_equal_dimensions():
    with pytest.raises(rk.RepresentationError):
        rk.degeneration_leq(A3, RO3, (1, 0, 0, 0, 0, 0), (0, 0, 0, 0, 0, 1))


def test_hom_matches_nullspace_of_d_matrix():
    U = rk.indecomposable_beta(A3, RO3, 1)
    V = rk.indecomposable_beta(A3, RO3, 3)
    cols = sum(a * b for a, b in zip(U.dims, V.dims))
    assert rk.hom_dim(U, V) == cols - rk.rank_d(U, V)
