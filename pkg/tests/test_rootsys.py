import itertools

import pytest
from hypothesis import given, strategies as st

from quiverloci import rootsys as rs

COUNTS = {("A", 1): 1, ("A", 3): 6, ("A", 5): 15, ("D", 4): 12, ("D", 5): 20, ("E", 6): 36, ("E", 7): 63, ("E", 8): 120}


@pytest.mark.parametrize("series,rank", sorted(COUNTS))
def test_positive_root_count_matches_closure(series, rank):
    R = rs.build_root_system(rs.DynkinDiagram.standard(series, rank))
    assert len(R.positive_roots) == COUNTS[series, rank] == rs.positive_root_count(series, rank)


def test_highest_root_e8():
    R = rs.build_root_system(rs.DynkinDiagram.standard("E", 8))
    assert max(sum(r) for r in R.positive_roots) == 29


@pytest.mark.parametrize("series,rank", [("B", 3), ("D", 3), ("E", 5), ("E", 9), ("A", 0)])
def test_rejects_non_ade(series, rank):
    with pytest.raises(rs.DiagramError):
        rs.DynkinDiagram.standard(series, rank)


def test_cartan_is_symmetric_with_two_on_diagonal():
    C = rs.cartan_matrix(rs.DynkinDiagram.standard("D", 5))
    assert all(C[i][i] == 2 for i in range(5))
    assert all(C[i][j] == C[j][i] for i in range(5) for j in range(5))


perms = st.integers(1, 6).flatmap(lambda n: st.permutations(list(range(1, n + 1)))).map(tuple)


@given(perms)
def test_reduced_word_round_trip(w):
    word = rs.reduced_word(w)
    assert len(word) == rs.length(w)
    assert rs.word_to_permutation(word, len(w)) == w


@given(perms, st.data())
def test_compose_inverse(w, data):
    v = tuple(data.draw(st.permutations(list(range(1, len(w) + 1)))))
    assert rs.compose(w, rs.inverse(w)) == tuple(range(1, len(w) + 1))
    assert rs.inverse(rs.compose(w, v)) == rs.compose(rs.inverse(v), rs.inverse(w))


compositions = st.lists(st.integers(1, 3), min_size=1, max_size=3)


@given(compositions)
def test_coset_reps_count_is_multinomial(parts):
    reps = rs.min_coset_reps(parts)
    assert len(reps) == len(set(reps)) == rs.multinomial(parts)


@given(compositions)
def test_w0_wP_length(parts):
    m = sum(parts)
    expected = (m * (m - 1) - sum(p * (p - 1) for p in parts)) // 2
    assert rs.w0_wP_length(parts) == expected == len(rs.reduced_word_w0wP(parts))


def test_longest_young_element_fixes_blocks():
    wp = rs.longest_young_element([2, 1, 3])
    assert wp == (2, 1, 3, 6, 5, 4)


def test_all_permutations():
    assert sorted(rs.all_permutations(3)) == sorted(itertools.permutations(range(1, 4)))
