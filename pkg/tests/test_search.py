import dataclasses

import pytest

from knot_workbench.config import SearchBudget
from knot_workbench.curves import TRIVIAL, canonical_key, get_curve, projection_from_key
from knot_workbench.moves import MoveSet, MoveType, apply, enumerate_moves
from knot_workbench.search import (
    MACRO_TEMPLATES,
    NotFound,
    Witness,
    cross_check,
    double_occurrence_words,
    enumerate_corpus,
    equiv_witness,
    expand_macro,
    find_in_class,
    reachable_fixed_c,
    simulate_move,
    replay,
    untangle,
    verify_witness,
)

RI_ONLY = MoveSet.of(MoveType.RI)
BUDGET = SearchBudget(node_cap=200_000, time_cap=60.0)


def test_double_occurrence_words():
    assert sorted(double_occurrence_words(2)) == [(1, 1, 2, 2), (1, 2, 1, 2), (1, 2, 2, 1)]
    assert len(list(double_occurrence_words(3))) == 15


def test_small_corpus_sizes():
    assert enumerate_corpus(0) == [TRIVIAL]
    assert len(enumerate_corpus(1)) == 2


def test_corpus_is_sorted_and_distinct(small_corpus):
    keys = [p.key for p in small_corpus]
    assert len(set(keys)) == len(keys)
    assert [p.crossings for p in small_corpus] == sorted(p.crossings for p in small_corpus)


def test_move_closure_stays_inside_enumeration():
    report = cross_check(3)
    assert report["only_closure"] == []


def test_single_kink_witness(infinity):
    witness = equiv_witness(infinity, TRIVIAL, RI_ONLY, BUDGET)
    assert isinstance(witness, Witness)
    assert witness.length == 1
    assert verify_witness(witness)
    assert replay(witness).is_trivial


def test_identical_curves_need_no_moves(trefoil):
    witness = equiv_witness(trefoil, trefoil, MoveSet.of(), BUDGET)
    assert witness.found and witness.length == 0


def test_witness_dict_form(infinity):
    witness = equiv_witness(infinity, TRIVIAL, RI_ONLY, BUDGET)
    assert Witness.from_dict(witness.to_dict()) == witness


def test_tampered_witness_is_rejected(infinity):
    witness = equiv_witness(infinity, TRIVIAL, RI_ONLY, BUDGET)
    assert not verify_witness(dataclasses.replace(witness, move_set=MoveSet.of(MoveType.SRII)))
    assert not verify_witness(dataclasses.replace(witness, end=canonical_key(infinity)))


def test_parity_blocks_a_search_without_ri(infinity):
    budget = SearchBudget(node_cap=2_000, time_cap=10.0, c_max=3)
    result = equiv_witness(infinity, TRIVIAL, MoveSet.of(MoveType.SRII, MoveType.WRII), budget)
    assert isinstance(result, NotFound)
    assert not result.found
    assert result.to_dict()["found"] is False


def test_trefoil_untangles_under_ri_and_strong_riii(trefoil):
    moves = MoveSet.of(MoveType.RI, MoveType.SRIII)
    witness = equiv_witness(trefoil, TRIVIAL, moves, BUDGET, True)
    assert isinstance(witness, Witness)
    assert verify_witness(witness)


def test_p_y_is_one_strong_riii_from_trefoil(trefoil):
    moves = MoveSet.of(MoveType.SRIII)
    witness = equiv_witness(get_curve("PY"), trefoil, moves, BUDGET, True)
    assert isinstance(witness, Witness)
    assert witness.length == 1


def test_trefoil_class_under_weak_riii_is_a_singleton(trefoil):
    members = reachable_fixed_c(trefoil, MoveSet.of(MoveType.WRIII), True)
    assert members == {canonical_key(trefoil, True)}


def test_flower_class_under_strong_riii_is_a_singleton(flower):
    members = reachable_fixed_c(flower, MoveSet.of(MoveType.SRIII), True)
    assert members == {canonical_key(flower, True)}


def test_fixed_class_needs_riii_moves(trefoil):
    with pytest.raises(ValueError):
        reachable_fixed_c(trefoil, RI_ONLY)
    with pytest.raises(ValueError):
        reachable_fixed_c(trefoil, MoveSet.of(MoveType.SRIII, MoveType.WRII))


def test_fixed_class_is_closed_under_riii(small_corpus):
    moves = MoveSet.of(MoveType.SRIII, MoveType.WRIII)
    for projection in small_corpus:
        if projection.crossings < 3:
            continue
        members = reachable_fixed_c(projection, moves)
        assert canonical_key(projection) in members
        for key in members:
            member = projection_from_key(key)
            assert member.crossings == projection.crossings
            for site in enumerate_moves(member, moves):
                assert canonical_key(apply(member, site)) in members


def test_find_in_class(trefoil):
    moves = RI_ONLY | MoveSet.of(MoveType.SRIII)
    found = find_in_class(trefoil, moves, lambda p: p.is_trivial, BUDGET, True)
    assert isinstance(found, Witness)
    assert verify_witness(found)


def test_expand_macro():
    strong = MoveSet.of(MoveType.SRII)
    assert expand_macro(MoveType.SRII, strong) == (MoveType.SRII,)
    assert expand_macro(MoveType.WRIII, strong) == MACRO_TEMPLATES[MoveType.WRIII]
    with pytest.raises(ValueError):
        expand_macro(MoveType.RI, strong)


def test_untangle_under_a_contracting_set(trefoil):
    moves = MoveSet.of(MoveType.RI, MoveType.SRII, MoveType.SRIII)
    witness = untangle(trefoil, moves, BUDGET, True)
    assert isinstance(witness, Witness)
    assert witness.move_set == moves
    assert verify_witness(witness)


@pytest.mark.slow
def test_catalog_witnesses():
    moves = MoveSet.of(MoveType.RI, MoveType.WRIII)
    witness = equiv_witness(get_curve("T3"), get_curve("F4"), moves, SearchBudget(), True)
    assert isinstance(witness, Witness)
    assert verify_witness(witness)


def test_simulate_move_matches_the_template(infinity):
    path = simulate_move(infinity, TRIVIAL, (MoveType.RI,))
    assert path is not None and len(path) == 1
    assert simulate_move(infinity, TRIVIAL, (MoveType.SRII,)) is None
