import pytest

from knot_workbench.curves import TRIVIAL, get_curve
from knot_workbench.errors import BudgetExceededError, KnotWorkbenchError
from knot_workbench.knots import (
    KnotDiagram,
    LaurentPoly,
    canonical_genus,
    jones,
    jones_table,
    knot_summary,
    lift_K,
    trivializing_number,
    w_invariant,
)
from knot_workbench.moves import MoveType, apply, enumerate_moves
from knot_workbench.search import enumerate_corpus


def test_laurent_arithmetic():
    x = LaurentPoly.monomial(1)
    one = LaurentPoly.one()
    assert (x + one) * (x - one) == x**2 - one
    assert (x + one).shift(-3).low == -3
    assert LaurentPoly(0, [0, 0]).is_zero
    assert LaurentPoly.from_terms({-1: 2, 1: -1}).format() == "-t + 2t^-1"


def test_laurent_variable_changes():
    poly = LaurentPoly.from_terms({4: 1, -8: 3})
    assert poly.invert_variable() == LaurentPoly.from_terms({-4: 1, 8: 3})
    assert poly.rescale(4) == LaurentPoly.from_terms({1: 1, -2: 3})
    with pytest.raises(ValueError):
        LaurentPoly.monomial(3).rescale(2)


def test_positive_lift(trefoil):
    diagram = lift_K(trefoil)
    assert diagram.crossing_signs == (1, 1, 1)
    assert diagram.writhe == 3


def test_diagram_needs_one_bit_per_crossing(trefoil):
    with pytest.raises(KnotWorkbenchError):
        KnotDiagram(trefoil, (1,))


def test_jones_of_unknotted_lifts(infinity):
    assert jones(lift_K(TRIVIAL)) == LaurentPoly.one()
    assert jones(lift_K(infinity)) == LaurentPoly.one()


def test_positive_trefoil_is_knotted(trefoil):
    assert jones(lift_K(trefoil)) != LaurentPoly.one()


def test_only_alternating_trefoil_diagrams_are_knotted(trefoil):
    table = jones_table(trefoil)
    assert len(table) == 8
    assert sum(1 for poly in table.values() if poly != LaurentPoly.one()) == 2


def test_state_sum_budget(flower):
    with pytest.raises(BudgetExceededError):
        jones(lift_K(flower), max_crossings=4)
    with pytest.raises(BudgetExceededError):
        trivializing_number(flower, max_crossings=4)


def test_trivializing_numbers(trivial, infinity, trefoil):
    assert trivializing_number(trivial) == 0
    assert trivializing_number(infinity) == 0
    assert trivializing_number(trefoil) == 2


def test_canonical_genus(trivial, trefoil):
    assert canonical_genus(trivial) == 0
    assert canonical_genus(trefoil) == 1


def test_w_invariant(trivial):
    assert w_invariant(trivial) == 0
    assert w_invariant(get_curve("S74")) == 2


def test_knot_summary(trefoil):
    summary = knot_summary(trefoil)
    assert summary["tr"] == 2
    assert summary["g"] == 1
    assert summary["W"] == 0
    assert summary["jones"] != "1"


def _preserved(c_max, move_types, compute):
    violations = []
    for projection in enumerate_corpus(c_max):
        before = compute(projection)
        for site in enumerate_moves(projection, move_types):
            if compute(apply(projection, site)) != before:
                violations.append((str(projection), site.to_dict()))
    return violations


def test_jones_of_lift_unchanged_by_ri_and_weak_riii():
    def compute(projection):
        return jones(lift_K(projection))

    assert _preserved(3, [MoveType.RI, MoveType.WRIII], compute) == []


def test_w_unchanged_by_ri_and_weak_moves():
    assert _preserved(3, [MoveType.RI, MoveType.WRII, MoveType.WRIII], w_invariant) == []


@pytest.mark.slow
def test_w_unchanged_up_to_six_crossings():
    moves = [MoveType.RI, MoveType.WRII, MoveType.WRIII]
    for projection in enumerate_corpus(6):
        before = w_invariant(projection)
        for site in enumerate_moves(projection, moves):
            result = apply(projection, site)
            if result.crossings <= 8:
                assert w_invariant(result) == before


@pytest.mark.slow
def test_jones_of_lift_unchanged_up_to_six_crossings(corpus_to_six):
    for projection in corpus_to_six:
        before = jones(lift_K(projection))
        for site in enumerate_moves(projection, [MoveType.RI, MoveType.WRIII]):
            assert jones(lift_K(apply(projection, site))) == before


def _switched(diagram):
    return KnotDiagram(diagram.projection, tuple(1 - bit for bit in diagram.over))


def test_mirror_diagram_inverts_the_variable(trefoil):
    positive = lift_K(trefoil)
    assert jones(_switched(positive)) == jones(positive).invert_variable()
    assert jones(_switched(positive)) != jones(positive)


def test_mirror_pairs_on_small_curves(small_corpus):
    for projection in small_corpus:
        for diagram in (lift_K(projection), KnotDiagram.from_mask(projection, 0)):
            assert jones(_switched(diagram)) == jones(diagram).invert_variable()
