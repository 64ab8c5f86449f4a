import functools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import reference_compare
from urdu_index.collation import (
    DEFAULT_COLLATION,
    URDU_ALPHABET,
    CollationTable,
    compare_terms,
    load_collation,
)
from urdu_index.errors import FormatError

mixed = st.text(
    alphabet=st.one_of(st.sampled_from(URDU_ALPHABET), st.characters(exclude_categories=("Cs",))),
    max_size=8,
)


def test_alif_madda_before_beh():
    assert compare_terms("آیا", "بات") < 0


def test_equal():
    assert compare_terms("جنت", "جنت") == 0


def test_prefix_first():
    assert compare_terms("جن", "جنت") < 0


def test_unranked_after_ranked():
    assert compare_terms("ے", "1") < 0
    assert compare_terms("ے", "a") < 0
    assert compare_terms("1", "a") < 0


def test_yeh_order():
    assert compare_terms("ی", "ے") < 0
    assert compare_terms("ہ", "ی") < 0


def test_alphabet_is_forty_letters():
    assert len(URDU_ALPHABET) == len(set(URDU_ALPHABET)) == 40


@given(mixed, mixed)
def test_matches_reference(a, b):
    assert compare_terms(a, b) == reference_compare(a, b)


@given(mixed, mixed)
def test_antisymmetric_and_injective(a, b):
    assert compare_terms(a, b) == -compare_terms(b, a)
    assert (compare_terms(a, b) == 0) == (a == b)


def test_top_codepoints_still_ordered():
    hi = [chr(0x10FFFF), chr(0x10FFFE), chr(0x10FFD0), chr(0x10FF00), "a", "ا"]
    expected = sorted(hi, key=functools.cmp_to_key(reference_compare))
    assert sorted(hi, key=DEFAULT_COLLATION.sort_key) == expected


def test_load_collation(tmp_path):
    p = tmp_path / "alpha.txt"
    p.write_text("ب\nU+0627\n\n", encoding="utf-8")
    table = load_collation(p)
    assert compare_terms("ب", "ا", table) < 0


def test_load_collation_rejects_duplicates(tmp_path):
    p = tmp_path / "alpha.txt"
    p.write_text("ب\nب\n", encoding="utf-8")
    with pytest.raises(FormatError):
        load_collation(p)


def test_multichar_entry_rejected():
    with pytest.raises(ValueError):
        CollationTable(["اب"])
