import json

import pytest

from knot_workbench.curves import (
    CATALOG,
    TRIVIAL,
    KnotProjection,
    canonical_form,
    canonical_key,
    closed_braid,
    connected_sum,
    connected_sum_decompose,
    decompose_with_gluing,
    get_curve,
    in_strong13_family,
    mirror,
    parse_gauss_code,
    projection_from_key,
    read_gauss_file,
    realizations,
    realize,
    reassemble,
    reread,
)
from knot_workbench.errors import GaussCodeError, NonRealizableError

CROSSINGS = {
    "O": 0,
    "INF": 1,
    "CLASP": 2,
    "T3": 3,
    "PY": 3,
    "F4": 4,
    "T5": 5,
    "S74": 7,
    "PF": 8,
    "PC": 8,
}


@pytest.mark.parametrize("name,crossings", CROSSINGS.items())
def test_catalog_crossing_numbers(name, crossings):
    projection = get_curve(name)
    assert projection.crossings == crossings
    assert projection.euler_ok()


def test_catalog_names_are_case_insensitive():
    assert get_curve("@t3") == get_curve("T3")
    with pytest.raises(KeyError):
        get_curve("@nope")


def test_catalog_lists_every_named_curve():
    assert set(CATALOG) == set(CROSSINGS)


def test_parse_gauss_code_renumbers_by_first_appearance():
    code = parse_gauss_code("5 7 5 7  # comment")
    assert code.word == (1, 2, 1, 2)
    assert code.n == 2


@pytest.mark.parametrize("text", ["1 2 1", "1 x 1", "1 1 1 1"])
def test_parse_gauss_code_rejects_bad_words(text):
    with pytest.raises(GaussCodeError):
        parse_gauss_code(text)


def test_projection_validates_signs_and_labels():
    with pytest.raises(GaussCodeError):
        KnotProjection((1, 1), (2,))
    with pytest.raises(GaussCodeError):
        KnotProjection((2, 2), (1,))
    with pytest.raises(GaussCodeError):
        KnotProjection((1, 2, 1, 2), (1,))


def test_odd_interlacement_is_not_realizable():
    with pytest.raises(NonRealizableError):
        realize((1, 2, 1, 2))


def test_realize_empty_word_is_trivial():
    assert realize(()) is TRIVIAL
    assert TRIVIAL.is_trivial
    assert str(TRIVIAL) == "O"


def test_key_does_not_depend_on_base_point_or_direction(trefoil):
    key = canonical_key(trefoil)
    for start in range(len(trefoil.word)):
        for reverse in (False, True):
            assert canonical_key(reread(trefoil, start, reverse)) == key


def test_reflection_is_identified_only_when_allowed():
    projection = get_curve("PC")
    assert canonical_key(mirror(projection), allow_reflection=True) == canonical_key(
        projection, allow_reflection=True
    )


def test_chiral_kink_necklace_needs_reflection():
    # six kinks around a circle, sides read as the chiral necklace 001011
    word = (1, 1, 2, 2, 3, 3, 4, 4, 5, 5, 6, 6)
    chiral = KnotProjection(word, (-1, -1, 1, -1, 1, 1))
    assert canonical_key(chiral) != canonical_key(mirror(chiral))
    assert canonical_key(chiral, allow_reflection=True) == canonical_key(
        mirror(chiral), allow_reflection=True
    )


def test_key_recovers_canonical_representative(flower):
    key = canonical_key(flower)
    representative = projection_from_key(key)
    assert representative == canonical_form(flower)
    assert representative.key == key


def test_json_form(trefoil):
    data = trefoil.to_json()
    assert set(data) == {"code", "config"}
    assert KnotProjection.from_json(json.dumps(data)).key == trefoil.key


def test_connected_sum_and_decomposition(infinity):
    twice = connected_sum(infinity, infinity)
    assert twice.crossings == 2
    summands = connected_sum_decompose(twice)
    assert len(summands) == 2
    assert {canonical_key(s, allow_reflection=True) for s in summands} == {
        canonical_key(infinity, allow_reflection=True)
    }


def test_p_y_splits_into_three_infinity_curves():
    summands = connected_sum_decompose(get_curve("PY"))
    assert [s.crossings for s in summands] == [1, 1, 1]


def test_trivial_has_no_summands(trivial):
    assert connected_sum_decompose(trivial) == []
    assert decompose_with_gluing(trivial).reassemble() == trivial


def test_nested_kinks_reassemble_in_place():
    nested = KnotProjection((1, 1, 2, 3, 3, 2), (-1, 1, 1))
    split = decompose_with_gluing(nested)
    assert [s.crossings for s in split.summands] == [1, 1, 1]
    assert sorted(pos for order in split.positions for pos in order) == list(range(6))
    assert reassemble(split).key == nested.key
    assert connected_sum(*split.summands).key != nested.key


def test_decomposition_reassembles_every_small_curve(small_corpus):
    for projection in small_corpus:
        assert decompose_with_gluing(projection).reassemble() == projection


@pytest.mark.parametrize(
    "name,expected", [("O", True), ("INF", True), ("T3", True), ("PY", True), ("F4", False)]
)
def test_strong13_family(name, expected):
    assert in_strong13_family(get_curve(name)) is expected


def test_closed_braid():
    assert closed_braid((1,), 2).crossings == 1
    with pytest.raises(GaussCodeError):
        closed_braid((1, 1), 2)
    with pytest.raises(GaussCodeError):
        closed_braid((3,), 2)


def test_read_gauss_file(tmp_path, infinity):
    path = tmp_path / "curves.txt"
    path.write_text(
        "# three curves\n"
        "O\n"
        "1 2 3 1 2 3  # trefoil\n"
        "\n"
        f"{json.dumps(infinity.to_json())}\n",
        encoding="utf-8",
    )
    curves = read_gauss_file(path)
    assert [p.crossings for p in curves] == [0, 3, 1]
    assert curves[0].is_trivial


def test_read_gauss_file_missing(tmp_path):
    with pytest.raises(FileNotFoundError):
        read_gauss_file(tmp_path / "missing.txt")


def test_realizations():
    assert realizations(()) == [TRIVIAL]
    assert realizations((1, 2, 1, 2)) == []
    trefoil = realizations((1, 2, 3, 1, 2, 3))
    assert trefoil and trefoil[0] == realize((1, 2, 3, 1, 2, 3))
