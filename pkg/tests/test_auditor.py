import pytest

from knot_workbench.auditor import (
    CANONICAL_CASES,
    CASES,
    CONTRACTING,
    J_PLUS,
    J_PLUS_QUOTE,
    CanonicalFormSeparation,
    CertificateKind,
    CitedFact,
    InvariantSeparation,
    RelationId,
    WitnessSeq,
    audit_tables,
    case_of,
    distinctness_matrix,
    register_invariant,
    relation_pairs,
    run_audit,
    unregister_invariant,
)
from knot_workbench.auditor.contracting import (
    audit_macro_and_contracting,
    check_equivalences,
    check_generation,
)
from knot_workbench.auditor.resolver import J_PLUS_SCOPE
from knot_workbench.auditor.tables import audit_condition_one, audit_single_triviality
from knot_workbench.config import MacroBudget
from knot_workbench.errors import AuditFailure
from knot_workbench.moves import MoveSet, MoveType


@pytest.fixture
def j_plus():
    """A stand-in J+ that tells the curve shaped like infinity from the trefoil curve."""
    register_invariant(J_PLUS, lambda p: 0 if p.crossings == 1 else 2, J_PLUS_SCOPE)
    yield
    unregister_invariant(J_PLUS)


def test_thirty_two_cases():
    assert len(CASES) == 32
    assert len({moves.types for moves in CASES.values()}) == 32
    assert all(MoveType.RI in CASES[case] for case in CONTRACTING)


def test_twenty_relations_and_their_pairs():
    assert len(CANONICAL_CASES) == 20
    assert len(relation_pairs()) == 190


def test_relation_ids():
    assert RelationId(10).representative == RelationId(11)
    assert RelationId(15).representative == RelationId(14)
    assert RelationId(3).is_contracting
    assert str(RelationId(24)) == "(24) {wRIII}"
    with pytest.raises(ValueError):
        RelationId(33)


def test_case_of():
    assert case_of(MoveSet.of(MoveType.WRII, MoveType.WRIII)) == 21
    assert case_of(MoveSet.of()) == 1


def test_contracting_sets_generate_every_move_type():
    assert check_generation() == {7: True, 8: True, 9: True}


def test_equivalent_cases_use_their_own_moves():
    assert all(check_equivalences([]).values())


def test_parity_separates_infinity_from_trivial(resolver):
    certificate = resolver.cheap(11, resolver.key_of("INF"), resolver.key_of("O"))
    assert isinstance(certificate, InvariantSeparation)
    assert certificate.invariant == "parity"
    assert not certificate.equal
    assert certificate.verify()


def test_canonical_form_under_ri(resolver):
    certificate = resolver.cheap(25, resolver.key_of("T3"), resolver.key_of("O"))
    assert isinstance(certificate, CanonicalFormSeparation)
    assert not certificate.equal
    assert certificate.verify()


def test_isotopy_case(resolver):
    trefoil, p_y = resolver.key_of("T3"), resolver.key_of("PY")
    assert resolver.cheap(1, trefoil, trefoil).equal
    certificate = resolver.cheap(1, trefoil, p_y)
    assert certificate.kind is CertificateKind.CANONICAL_FORM
    assert not certificate.equal
    assert certificate.verify()


def test_circle_number_separates_torus_curves(resolver):
    certificate = resolver.by_invariant(
        25, "tau", resolver.key_of("T3"), resolver.key_of("F4")
    )
    assert certificate is not None
    assert certificate.verify()
    forged = InvariantSeparation(25, certificate.curves, False, "tau", (0, 1))
    assert not forged.verify()


def test_invariant_outside_its_scope_is_not_used(resolver):
    assert resolver.by_invariant(14, "s", resolver.key_of("T3"), resolver.key_of("PY")) is None


def test_witness_certificate(resolver):
    certificate = resolver.search(29, resolver.key_of("INF"), resolver.key_of("O"))
    assert isinstance(certificate, WitnessSeq)
    assert certificate.equal
    assert certificate.verify()
    # the same witness does not certify a relation without RI
    assert not WitnessSeq.of(11, certificate.witness).verify()


def test_cited_fact_for_infinity_and_trefoil(resolver):
    infinity, trefoil = resolver.key_of("INF"), resolver.key_of("T3")
    for case in (13, 14, 15):
        certificate = resolver.cited(case, infinity, trefoil)
        assert isinstance(certificate, CitedFact)
        assert not certificate.machine_checked
        assert certificate.to_dict()["cited_quote"] == J_PLUS_QUOTE
    assert resolver.cited(11, infinity, trefoil) is None
    assert resolver.cited(14, infinity, resolver.key_of("O")) is None


def test_registered_j_plus_replaces_the_cited_fact(j_plus, resolver):
    infinity, trefoil = resolver.key_of("INF"), resolver.key_of("T3")
    assert resolver.cited(14, infinity, trefoil) is None
    certificate = resolver.cheap(14, infinity, trefoil)
    assert isinstance(certificate, InvariantSeparation)
    assert certificate.invariant == J_PLUS
    assert certificate.machine_checked


def test_expect_rejects_a_wrong_claim(resolver):
    with pytest.raises(AuditFailure) as failure:
        resolver.expect(11, "INF", "O", True)
    assert failure.value.certificate is not None


def test_store_deduplicates_and_sorts(store, resolver):
    trefoil = resolver.key_of("T3")
    later = resolver.cheap(25, trefoil, resolver.key_of("O"))
    earlier = resolver.cheap(1, trefoil, resolver.key_of("PY"))
    store.add(later)
    store.add(later)
    store.add(earlier)
    assert len(store) == 2
    assert [c.case for c in store.flush()] == [1, 25]
    assert store.verify_all() == []
    assert store.to_dict()["machine_checked"] == 2


def test_condition_one(resolver):
    report = audit_condition_one(resolver)
    assert len(report.rows) == 19
    for row in report.rows:
        expected = "=" if row.case >= 25 else "≠"
        assert row.cells["[∞] vs [O]"] == expected


def test_single_triviality_table(resolver):
    single = audit_single_triviality(resolver)
    trivial_cases = {row.case for row in single.rows if row.cells["single trivial"] == "yes"}
    assert trivial_cases == {16, 17, 19, 21, 22, 23, 24}


def test_unknown_table(resolver):
    with pytest.raises(ValueError):
        audit_tables(resolver, (6,))


def test_audit_report_for_one_table():
    report = run_audit(tables=(1,))
    assert report.passed
    summary = report.summary()
    assert summary["tables"] == ["1"]
    assert summary["cited"] == 0
    assert summary["certificates"] == summary["machine_checked"]


@pytest.mark.slow
def test_all_tables(resolver):
    reports = audit_tables(resolver, (2, 3, 4, 5))
    ri_group = reports[1]
    assert ri_group.row(30).cells["[3_1] vs [4_1]"] == "="
    assert ri_group.row(32).notes == ["W(7_4) = 2 ≠ 0 = W(O)"]
    non_single = reports[3]
    assert non_single.row(14).cells["[∞] vs [3_1]"] == "≠"


@pytest.mark.slow
def test_distinctness_matrix(resolver):
    matrix = distinctness_matrix(resolver)
    assert matrix.complete
    assert len(matrix.separations) == 190
    assert matrix.cited_pairs() == [(11, 14)]
    assert matrix.machine_checked_count == 189


@pytest.mark.slow
def test_contracting_sets_untangle_the_small_corpus(store):
    report = audit_macro_and_contracting(store, MacroBudget(corpus_max_crossings=3))
    assert report.passed
    assert set(report.untangled) == set(CONTRACTING)
