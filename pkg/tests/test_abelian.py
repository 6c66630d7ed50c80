import itertools
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ziminwords import encounters, zimin_pattern
from ziminwords.abelian import (
    AbelianAssignment,
    abelian_equiv,
    abelian_occurrence,
    assignments_of_width,
    claim1_bound,
    claim1_probability,
    claim2_bound,
    claim2_probability,
    delta_upper_bound,
    encounters_abelian_zimin,
    encounters_abelian_zimin_naive,
    g_lower_bound,
    g_upper_bound,
    g_upper_recurrence,
    g_value,
    parikh,
)
from ziminwords.search import longest_avoiding


def binary_words(max_len):
    for n in range(max_len + 1):
        for bits in itertools.product("01", repeat=n):
            yield "".join(bits)


def test_parikh_and_equivalence():
    assert parikh("abca") == {"a": 2, "b": 1, "c": 1}
    assert abelian_equiv("ab", "ba")
    assert not abelian_equiv("aab", "abb")
    assert abelian_equiv("", "")
    assert not abelian_equiv("a", "aa")


@given(st.text(alphabet="abc", max_size=10), st.text(alphabet="abc", max_size=10))
def test_abelian_equiv_is_sort_equality(u, v):
    assert abelian_equiv(u, v) == (sorted(u) == sorted(v))


def test_assignment_width():
    lam = AbelianAssignment((2, 1))
    assert lam.width == 2 * 2 + 1
    assert AbelianAssignment((1, 1, 1)).width == 4 + 2 + 1
    with pytest.raises(ValueError):
        AbelianAssignment((0, 1))


def test_assignments_of_width_enumeration():
    lams = list(assignments_of_width(2, 5))
    assert [l.lengths for l in lams] == [(1, 3), (2, 1)]
    for n in (2, 3):
        for width in range(2**n - 1, 12):
            for lam in assignments_of_width(n, width):
                assert lam.width == width


def test_abelian_occurrence_examples():
    assert abelian_occurrence("abcba", 0, 2, AbelianAssignment((2, 1)))
    assert not abelian_occurrence("abcde", 0, 2, AbelianAssignment((2, 1)))
    assert abelian_occurrence("aba", 0, 2, AbelianAssignment((1, 1)))
    with pytest.raises(ValueError):
        abelian_occurrence("ab", 0, 2, AbelianAssignment((1, 1)))


def test_encounters_examples():
    assert encounters_abelian_zimin("abcba", 2) is not None
    assert encounters_abelian_zimin("ab", 2) is None
    j, lam = encounters_abelian_zimin("abcba", 2)
    assert j == 0 and lam.lengths == (1, 3)  # a | bcb | a comes first


def test_exact_encounter_implies_abelian():
    for w in binary_words(9):
        for n in (2, 3):
            if len(w) >= 2**n - 1 and encounters(w, zimin_pattern(n)) is not None:
                assert encounters_abelian_zimin(w, n) is not None


def test_matches_naive_oracle_n2():
    for w in binary_words(9):
        got = encounters_abelian_zimin(w, 2) is not None
        assert got == encounters_abelian_zimin_naive(w, 2)


def test_naive_oracle_ternary_spotcheck():
    for w in ["aabbcc", "abcabc", "aabbc", "abc"]:
        assert (encounters_abelian_zimin(w, 2) is not None) == encounters_abelian_zimin_naive(w, 2)


def test_g_values():
    assert g_value(1, 2)[0] == 1
    assert g_value(1, 5)[0] == 1
    g22, cert22 = g_value(2, 2)
    assert g22 == 5 and cert22.exhausted
    g23, cert23 = g_value(2, 3)
    assert g23 == 7 and cert23.exhausted


def test_g_at_most_f():
    for n, k in [(2, 2), (2, 3)]:
        g, gcert = g_value(n, k)
        f = longest_avoiding(n, k).implied_f()
        assert g <= f
        # abelian-avoiding words avoid exactly as well
        assert len(gcert.witness) <= f - 1


def test_g_lower_bound_values():
    assert g_lower_bound(3, 2) == 1
    assert g_lower_bound(4, 2) == 2
    assert g_lower_bound(3, 10) == 1
    assert g_lower_bound(5, 2) == 2 ** (32 // 7 - 1)


def test_g_upper_bounds():
    assert g_upper_bound(1, 2) == 2**8
    assert g_upper_bound(1, 5) == 2**20
    assert g_upper_recurrence(1, 4) == 1
    assert g_upper_recurrence(2, 2) == 4
    assert g_upper_recurrence(2, 9) == 4
    # recurrence from g(1,k)=1 stays below the closed form
    for n in (2, 3):
        for k in (2, 3):
            assert g_upper_recurrence(n, k) <= g_upper_bound(n, k)


def test_delta_upper_bound_values():
    assert delta_upper_bound(2, 2, 3) == Fraction(81, 2)
    assert delta_upper_bound(3, 2, 10) == Fraction(10**5, 2**4)


def test_claim1_probabilities():
    assert claim1_probability(2, 1, 2) == Fraction(1, 2)
    assert claim1_probability(2, 2, 2) == Fraction(3, 8)
    assert claim1_probability(3, 1, 3) == Fraction(1, 9)
    for k in (2, 3):
        for h in (1, 2, 3):
            for m in (2, 3):
                assert claim1_probability(k, h, m) <= claim1_bound(k, m)


def test_claim2_probabilities():
    assert claim2_probability(2, 2, AbelianAssignment((1, 1))) == Fraction(1, 2)
    assert claim2_probability(2, 2, AbelianAssignment((2, 1))) <= Fraction(1, 2)
    assert claim2_probability(1, 3, AbelianAssignment((1,))) == 1
    for k in (2, 3):
        for n in (1, 2):
            for width in range(2**n - 1, 7):
                for lam in assignments_of_width(n, width):
                    assert claim2_probability(n, k, lam) <= claim2_bound(n, k)
