import pytest

from knot_workbench.curves import TRIVIAL, canonical_key, get_curve, reread
from knot_workbench.errors import IllegalSiteError
from knot_workbench.moves import (
    MoveKind,
    MoveSet,
    MoveSite,
    MoveType,
    apply,
    apply_sequence,
    enumerate_moves,
    inverse_site,
    neighbours,
)
from knot_workbench.search import enumerate_corpus


def test_parse_move_set():
    assert MoveSet.parse("RI, wRII,sRIII") == MoveSet.of(
        MoveType.RI, MoveType.WRII, MoveType.SRIII
    )
    assert MoveSet.parse("RII") == MoveSet.of(MoveType.SRII, MoveType.WRII)
    assert MoveSet.parse("strongRIII") == MoveSet.of(MoveType.SRIII)
    with pytest.raises(ValueError):
        MoveSet.parse("RIV")


def test_move_set_operations():
    weak = MoveSet.of("wRII", "wRIII")
    assert weak <= MoveSet.full()
    assert not MoveSet.full() <= weak
    assert len(weak | MoveSet.of(MoveType.RI)) == 3
    assert MoveKind.WRII_UP in weak
    assert MoveKind.SRII_DOWN not in weak
    assert weak.label == "{wRII, wRIII}"
    assert MoveSet.of().label == "{}"


def test_kind_inverse_and_delta():
    for kind in MoveKind:
        assert kind.inverse.inverse is kind
        assert kind.delta == -kind.inverse.delta
        assert kind.inverse.move_type is kind.move_type


def test_sites_on_trivial():
    sites = enumerate_moves(TRIVIAL)
    assert [site.kind for site in sites] == [
        MoveKind.RI_UP,
        MoveKind.RI_UP,
        MoveKind.SRII_UP,
        MoveKind.SRII_UP,
    ]
    # O admits no weak RII
    assert enumerate_moves(TRIVIAL, [MoveType.WRII]) == []


def test_kink_on_trivial_gives_infinity(infinity):
    result = apply(TRIVIAL, MoveSite(MoveKind.RI_UP, (0, 1)))
    assert canonical_key(result, True) == canonical_key(infinity, True)


def test_strong_rii_on_trivial_gives_clasp():
    result = apply(TRIVIAL, MoveSite(MoveKind.SRII_UP, (-1, 1)))
    assert canonical_key(result, True) == canonical_key(get_curve("CLASP"), True)


def test_clasp_has_a_strong_bigon():
    clasp = get_curve("CLASP")
    sites = [s for s in enumerate_moves(clasp) if s.kind is MoveKind.SRII_DOWN]
    assert sites
    assert apply(clasp, sites[0]).is_trivial


def test_infinity_loses_its_kink(infinity):
    (site,) = [s for s in enumerate_moves(infinity) if s.kind is MoveKind.RI_DOWN]
    assert apply(infinity, site).is_trivial


def test_trefoil_has_a_strong_triangle(trefoil):
    sites = enumerate_moves(trefoil, [MoveType.SRIII])
    assert sites
    assert all(site.kind is MoveKind.SRIII for site in sites)
    assert apply(trefoil, sites[0]).crossings == 3


def test_missing_triangles(trefoil, flower):
    assert enumerate_moves(trefoil, [MoveType.WRIII]) == []
    assert enumerate_moves(flower, [MoveType.SRIII]) == []


def test_weak_bigon_removal_on_trefoil(trefoil):
    sites = [s for s in enumerate_moves(trefoil, [MoveType.WRII]) if s.kind is MoveKind.WRII_DOWN]
    assert len(sites) == 3
    assert all(apply(trefoil, site).crossings == 1 for site in sites)


def test_illegal_sites_are_rejected(trefoil):
    with pytest.raises(IllegalSiteError):
        apply(trefoil, MoveSite(MoveKind.RI_DOWN, (0,)))
    with pytest.raises(IllegalSiteError):
        apply(TRIVIAL, MoveSite(MoveKind.WRII_UP, (-1, 1)))
    with pytest.raises(IllegalSiteError):
        apply(trefoil, MoveSite(MoveKind.RI_UP, (0, 2)))
    with pytest.raises(IllegalSiteError):
        apply(trefoil, MoveSite(MoveKind.RI_UP, (99, 1)))


def test_site_dict_form():
    site = MoveSite(MoveKind.WRII_UP, (3, 8))
    assert MoveSite.from_dict(site.to_dict()) == site


def test_crossing_change_matches_kind():
    for projection in enumerate_corpus(3):
        for site in enumerate_moves(projection):
            assert apply(projection, site).crossings == projection.crossings + site.kind.delta


def test_up_moves_and_riii_are_undone():
    for projection in enumerate_corpus(3):
        for site in enumerate_moves(projection):
            if site.kind.delta < 0:
                continue
            result = apply(projection, site)
            back = inverse_site(projection, site, result)
            assert back.kind is site.kind.inverse
            assert apply(result, back).key == projection.key


def test_neighbours_respect_crossing_cap(trefoil):
    for site, result in neighbours(trefoil, c_max=3):
        assert site.kind.delta <= 0
        assert result.crossings <= 3


def test_apply_sequence(infinity):
    up = MoveSite(MoveKind.RI_UP, (0, 1))
    twice = apply_sequence(TRIVIAL, [up, up])
    assert twice.crossings == 2


def test_site_strength_does_not_depend_on_orientation(small_corpus):
    face_moves = [MoveType.SRII, MoveType.WRII, MoveType.SRIII, MoveType.WRIII]

    def outcomes(projection):
        return {
            (site.kind, canonical_key(apply(projection, site)))
            for site in enumerate_moves(projection, face_moves)
            if site.kind.delta <= 0
        }

    for projection in small_corpus:
        if projection.is_trivial:
            continue
        assert outcomes(reread(projection, 0, reverse=True)) == outcomes(projection)
