import pytest

from knot_workbench.curves import (
    big_c,
    circle_number,
    coh_odd,
    faces,
    get_curve,
    invariant_summary,
    reread,
    seifert_number,
    seifert_state,
    tau_state,
)
from knot_workbench.moves import MoveType, apply, enumerate_moves


@pytest.mark.parametrize("name", ["O", "INF", "T3", "F4", "PY", "PF", "PC", "S74", "CLASP"])
def test_face_count_is_crossings_plus_two(name):
    projection = get_curve(name)
    assert len(faces(projection)) == projection.crossings + 2


def test_trefoil_faces(trefoil):
    assert sorted(face.degree for face in faces(trefoil)) == [2, 2, 2, 3, 3]
    split = sorted((face.degree, face.is_coherent) for face in faces(trefoil))
    assert split == [(2, False), (2, False), (2, False), (3, True), (3, True)]


def test_big_c(trivial, infinity, flower):
    assert (big_c(trivial), big_c(infinity), big_c(flower)) == (0, 1, 1)


def test_coh_odd_values(trivial, infinity, flower):
    assert coh_odd(trivial) == 0
    # a 1-gon is a coherent odd polygon
    assert coh_odd(infinity) == 1
    assert coh_odd(flower) == 0
    assert coh_odd(get_curve("PC")) == 1


def test_seifert_numbers(trivial, trefoil):
    assert seifert_number(trivial) == 1
    assert seifert_number(trefoil) == 2
    assert seifert_number(get_curve("PY")) == 4
    assert seifert_number(get_curve("CLASP")) == 3


def test_circle_numbers(trivial, infinity, trefoil):
    assert circle_number(trivial) == 1
    assert circle_number(infinity) == 1
    assert circle_number(trefoil) == 3
    assert circle_number(trefoil) != circle_number(get_curve("F4"))


def test_arrangement_has_a_region_more_than_circles(flower):
    for state in (seifert_state(flower), tau_state(flower)):
        assert state.tree.number_of_nodes() == state.count + 1


def test_invariant_summary(trefoil):
    summary = invariant_summary(trefoil)
    assert summary["c"] == 3
    assert summary["C"] == 1
    assert summary["s"] == 2
    assert summary["tau"] == 3
    assert len(summary["faces"]) == 5


def _preserved(corpus, move_types, compute):
    violations = []
    for projection in corpus:
        before = compute(projection)
        for site in enumerate_moves(projection, move_types):
            after = compute(apply(projection, site))
            if after != before:
                violations.append((str(projection), site.to_dict()))
    return violations


def test_coh_odd_unchanged_by_weak_rii_and_strong_riii(small_corpus):
    assert _preserved(small_corpus, [MoveType.WRII, MoveType.SRIII], coh_odd) == []


def test_big_c_unchanged_by_weak_moves_and_strong_riii(small_corpus):
    moves = [MoveType.WRII, MoveType.WRIII, MoveType.SRIII]
    assert _preserved(small_corpus, moves, big_c) == []


def test_seifert_arrangement_unchanged_by_weak_moves(small_corpus):
    assert _preserved(small_corpus, [MoveType.WRII, MoveType.WRIII], seifert_state) == []


def test_tau_arrangement_unchanged_by_ri_and_strong_rii(small_corpus):
    assert _preserved(small_corpus, [MoveType.RI, MoveType.SRII], tau_state) == []


def test_coherence_does_not_depend_on_orientation(small_corpus):
    for projection in small_corpus:
        if projection.is_trivial:
            continue
        backwards = reread(projection, 0, reverse=True)
        forward = sorted((f.degree, f.is_coherent) for f in faces(projection))
        assert sorted((f.degree, f.is_coherent) for f in faces(backwards)) == forward


@pytest.mark.slow
def test_big_c_unchanged_up_to_six_crossings(corpus_to_six):
    moves = [MoveType.WRII, MoveType.WRIII, MoveType.SRIII]
    assert _preserved(corpus_to_six, moves, big_c) == []


@pytest.mark.slow
def test_coh_odd_unchanged_up_to_six_crossings(corpus_to_six):
    assert _preserved(corpus_to_six, [MoveType.WRII, MoveType.SRIII], coh_odd) == []


@pytest.mark.slow
def test_seifert_arrangement_unchanged_up_to_six_crossings(corpus_to_six):
    moves = [MoveType.WRII, MoveType.WRIII]
    assert _preserved(corpus_to_six, moves, seifert_state) == []


@pytest.mark.slow
def test_tau_arrangement_unchanged_up_to_six_crossings(corpus_to_six):
    assert _preserved(corpus_to_six, [MoveType.RI, MoveType.SRII], tau_state) == []
