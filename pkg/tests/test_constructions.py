"""Witness families: targets, explicit preimage lists, and small witnesses."""

from __future__ import annotations

import pytest

from scsort import (
    FAMILIES,
    PATTERNS,
    complement,
    construct,
    construct_preimages,
    cro,
    expected_fertility,
    fertility,
    index_of,
    min_n,
    preimages,
    small_witness,
)

DIRECT = ((1, 2, 3), (3, 1, 2), (2, 1, 3))
MIRRORED = ((3, 2, 1), (1, 3, 2), (2, 3, 1))


def family_range(sigma, max_len):
    """Admissible n values keeping the target length at most max_len."""
    return range(min_n(sigma), max_len)


# --- targets ---

def test_construct_known_targets():
    assert construct("123", 3) == (3, 2, 1, 4)
    assert construct("321", 3) == (2, 3, 4, 1)
    assert construct("312", 3) == (1, 2, 4, 3)
    assert construct("132", 3) == (4, 3, 1, 2)
    assert construct("213", 6) == (1, 2, 4, 3, 5, 6, 7)
    assert construct("231", 6) == (7, 6, 4, 5, 3, 2, 1)


def test_construct_minimum_n():
    assert min_n("213") == 6 and min_n("231") == 6
    for sigma in DIRECT[:2] + MIRRORED[:2]:
        assert min_n(sigma) == 1
    with pytest.raises(ValueError, match="n >= 6"):
        construct("213", 5)
    with pytest.raises(ValueError, match="n >= 6"):
        construct_preimages("231", 4)
    with pytest.raises(ValueError):
        construct("123", 0)


def test_target_lengths():
    for sigma in PATTERNS:
        for n in family_range(sigma, 9):
            assert len(construct(sigma, n)) == n + 1


def test_expected_fertility_table():
    for sigma in ((1, 2, 3), (3, 2, 1), (3, 1, 2), (1, 3, 2)):
        assert [expected_fertility(sigma, n) for n in range(1, 5)] == [1, 2, 3, 4]
    for sigma in ((2, 1, 3), (2, 3, 1)):
        assert [expected_fertility(sigma, n) for n in (6, 7, 8)] == [5, 6, 7]
        with pytest.raises(ValueError):
            expected_fertility(sigma, 5)


def test_mirrored_targets_are_complements():
    for direct, mirrored in zip(DIRECT, MIRRORED):
        for n in family_range(mirrored, 9):
            assert construct(mirrored, n) == complement(construct(direct, n))


def test_231_target_printed_form():
    # descending run from n+1 down to 6, then the fixed tail 45321
    for n in (6, 7, 8):
        assert construct("231", n) == \
            tuple(range(n + 1, 5, -1)) + (4, 5, 3, 2, 1)


# --- explicit preimage lists ---

def test_preimage_lists_known_values():
    assert construct_preimages("123", 3) == (
        (4, 1, 2, 3), (4, 3, 1, 2), (4, 3, 2, 1))
    assert construct_preimages("312", 3) == (
        (3, 1, 4, 2), (3, 2, 1, 4), (3, 4, 2, 1))
    assert construct_preimages("213", 6) == (
        (7, 1, 2, 4, 6, 3, 5),
        (7, 1, 2, 4, 6, 5, 3),
        (7, 1, 2, 6, 4, 5, 3),
        (7, 1, 6, 2, 4, 5, 3),
        (7, 6, 1, 2, 4, 5, 3),
    )


def test_preimage_lists_sorted_and_sized():
    for sigma in PATTERNS:
        for n in family_range(sigma, 9):
            pres = construct_preimages(sigma, n)
            assert list(pres) == sorted(pres)
            assert len(pres) == expected_fertility(sigma, n)
            assert all(len(t) == n + 1 for t in pres)


def test_mirrored_preimage_lists_are_complements():
    for direct, mirrored in zip(DIRECT, MIRRORED):
        for n in family_range(mirrored, 8):
            assert construct_preimages(mirrored, n) == \
                tuple(sorted(complement(t) for t in construct_preimages(direct, n)))


def test_lists_match_brute_force():
    for sigma in PATTERNS:
        for n in family_range(sigma, 7):
            report = preimages(sigma, construct(sigma, n))
            assert report.preimages == construct_preimages(sigma, n)
            assert report.count == expected_fertility(sigma, n)


# --- small witnesses ---

def test_small_witness_fixed_tables():
    assert small_witness("213", 1) == (4, 3, 2, 1)
    assert small_witness("213", 2) == (1, 2, 4, 3)
    assert small_witness("213", 3) == (1, 3, 5, 2, 4)
    assert small_witness("213", 4) == (1, 2, 3, 4)
    assert small_witness("231", 1) == (1, 2, 3, 4)
    assert small_witness("231", 2) == (4, 3, 1, 2)
    assert small_witness("231", 3) == (5, 3, 1, 4, 2)
    assert small_witness("231", 4) == (4, 3, 2, 1)


def test_small_witness_delegates_to_families():
    assert small_witness("213", 5) == construct("213", 6)
    assert small_witness("231", 7) == construct("231", 8)
    assert small_witness("123", 4) == construct("123", 4)
    assert small_witness("321", 1) == construct("321", 1)


def test_small_witness_rejects_nonpositive():
    with pytest.raises(ValueError):
        small_witness("123", 0)


def test_small_witness_has_requested_fertility():
    for sigma in PATTERNS:
        for f in range(1, 6):
            assert fertility(sigma, small_witness(sigma, f)) == f


# --- order preservation on the 213/231 witness preimages ---

def test_pattern_popped_prefix_keeps_input_order():
    for sigma in ((2, 1, 3), (2, 3, 1)):
        target = construct(sigma, 6)
        for tau in preimages(sigma, target).preimages:
            k = cro(sigma, tau)
            positions = [index_of(tau, target[i]) for i in range(k)]
            assert positions == sorted(positions)


def test_families_registry():
    assert set(FAMILIES) == set(PATTERNS)
    fam = FAMILIES[(2, 1, 3)]
    assert fam.min_n == 6
    assert fam.target(6) == construct("213", 6)
    assert fam.expected_fertility(6) == 5
    assert fam.preimage_list(6) == construct_preimages("213", 6)
