import pytest
from hypothesis import given, strategies as st

from quiverloci import quiverkit as qk
from quiverloci import selftest as stt
from quiverloci.rootsys import DynkinDiagram


def test_a3_equioriented_beta_order():
    ro = qk.default_order(qk.equioriented_a(3))
    keys = [qk.root_key(b) for b in ro.betas]
    assert keys == ["100", "110", "010", "111", "011", "001"]


def test_every_positive_root_once():
    for series, rank in (("A", 4), ("D", 5), ("E", 6)):
        for q in qk.all_orientations(DynkinDiagram.standard(series, rank))[:4]:
            ro = qk.default_order(q)
            assert sorted(ro.gammas) == sorted(qk.root_system_of(q).positive_roots)
            assert qk.validate_adapted(q, ro.word)


@pytest.mark.parametrize(
    "arrows",
    [
        [(1, 2), (2, 1)],  # double edge
        [(1, 2), (2, 3), (3, 1)],  # cycle
        [(1, 2), (1, 1)],  # loop
        [(1, 2), (3, 4)],  # disconnected
        [(1, 2), (1, 3), (1, 4), (1, 5)],  # D~4
        [(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (3, 7), (7, 8)],  # E~7 style branch
    ],
)
def test_non_dynkin_rejected(arrows):
    with pytest.raises(qk.QuiverError):
        qk.validate_dynkin(qk.Quiver.from_arrows(arrows))


def test_identification_of_types():
    assert qk.validate_dynkin(stt.D4_QUIVER).name == "D4"
    e6 = qk.Quiver.from_arrows([(1, 2), (2, 3), (3, 4), (4, 5), (3, 6)])
    assert qk.validate_dynkin(e6).name == "E6"
    assert qk.validate_dynkin(qk.equioriented_a(5)).name == "A5"


def test_d4_word_and_ar_layout():
    parts = stt.d4_checks()
    assert parts["word validates"]
    assert parts["matrix rows 1-9"]
    assert parts["AR placements"]
    assert parts["AR arrows"]


def test_d4_tail_of_the_root_order():
    # the word 213423142341 ends with reflections at 3, 4, 1 and so with the simples alpha3, alpha4, alpha1
    ro = qk.root_order(qk.root_system_of(stt.D4_QUIVER), stt.D4_WORD)
    assert ro.gammas[9:] == ((0, 0, 1, 0), (0, 0, 0, 1), (1, 0, 0, 0))


def test_d4_displayed_matrix_is_a_commutation_class_sibling():
    alt = (2, 1, 3, 4, 2, 3, 1, 4, 2, 4, 1, 3)
    assert qk.validate_adapted(stt.D4_QUIVER, alt)
    ro = qk.root_order(qk.root_system_of(stt.D4_QUIVER), alt)
    assert ro.gammas == stt.D4_MATRIX


def test_invalid_word_rejected():
    assert not qk.validate_adapted(stt.D4_QUIVER, (1, 2, 3, 4, 2, 3, 1, 4, 2, 3, 4, 1))
    assert not qk.validate_adapted(qk.equioriented_a(2), (1, 2, 1))


def test_ar_dot():
    dot = qk.ar_quiver(qk.root_system_of(stt.D4_QUIVER), stt.D4_WORD).to_dot()
    assert dot.startswith("digraph AR") and dot.count("->") == 15


def test_multiplicities_json_round_trip():
    ro = qk.default_order(qk.equioriented_a(3))
    m = (0, 2, 0, 0, 1, 1)
    assert qk.multiplicities_from_json(ro, qk.multiplicities_to_json(ro, m)) == m
    with pytest.raises(ValueError):
        qk.multiplicities_from_json(ro, {"101": 1})


@given(st.lists(st.integers(0, 2), min_size=3, max_size=3))
def test_enumerated_orbits_have_the_right_dimension(d):
    q = qk.equioriented_a(3)
    ro = qk.default_order(q)
    orbits = qk.enumerate_orbits(qk.root_system_of(q), ro, d)
    assert orbits and len(set(orbits)) == len(orbits)
    assert all(qk.dimension_of(ro, m) == tuple(d) for m in orbits)


def test_kostant_partition_counts():
    q = qk.equioriented_a(2)
    ro = qk.default_order(q)
    assert len(qk.enumerate_orbits(qk.root_system_of(q), ro, (2, 3))) == 3


def test_euler_form_on_simples():
    q = qk.equioriented_a(2)
    assert qk.euler_form(q, (1, 0), (0, 1)) == -1
    assert qk.euler_form(q, (0, 1), (1, 0)) == 0
    assert qk.euler_form(q, (1, 1), (1, 1)) == 1


def test_dimvec_rejects_bad_input():
    q = qk.equioriented_a(2)
    with pytest.raises(ValueError):
        qk.dimvec(q, (1, -1))
    with pytest.raises(ValueError):
        qk.dimvec(q, (1, 2, 3))
