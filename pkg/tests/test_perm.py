"""Permutations, composition, and the weak order relation, checked
against definitions applied from scratch: explicit inversion counting
and inversion-set containment."""

from math import factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

from weakbruhat.perm import (
    Permutation,
    adjacent_transposition,
    all_permutations,
    compose,
    identity,
    leq_weak,
    longest_element,
    parse_permutation,
)


def inversion_values(pi):
    return {
        (b, a)
        for i, a in enumerate(pi.word)
        for b in pi.word[i + 1 :]
        if a > b
    }


perm_words = st.permutations(range(1, 7))


def test_validation():
    with pytest.raises(ValueError):
        Permutation(())
    with pytest.raises(ValueError):
        Permutation((1, 1, 2))
    with pytest.raises(ValueError):
        Permutation((0, 1, 2))
    with pytest.raises(ValueError):
        Permutation((1, 2, 4))


@given(perm_words)
def test_length_counts_inversions(word):
    pi = Permutation(word)
    n = pi.size
    brute = sum(1 for i in range(n) for j in range(i + 1, n) if word[i] > word[j])
    assert pi.length == brute


@given(perm_words)
def test_inverse_involution(word):
    pi = Permutation(word)
    assert pi.inverse().inverse() == pi
    assert compose(pi, pi.inverse()) == identity(pi.size)
    assert compose(pi.inverse(), pi) == identity(pi.size)
    assert pi.inverse().length == pi.length


@given(perm_words, perm_words, perm_words)
def test_compose_associative(a, b, c):
    x, y, z = Permutation(a), Permutation(b), Permutation(c)
    assert compose(compose(x, y), z) == compose(x, compose(y, z))


def test_compose_applies_right_first():
    sigma = Permutation((2, 4, 1, 3))
    s2 = adjacent_transposition(4, 2)
    # right multiplication swaps word positions 2 and 3
    assert compose(sigma, s2) == Permutation((2, 1, 4, 3))
    assert compose(sigma, s2).word == (2, 1, 4, 3)
    with pytest.raises(ValueError):
        compose(sigma, identity(3))


def test_call_is_one_indexed():
    pi = Permutation((3, 1, 2))
    assert (pi(1), pi(2), pi(3)) == (3, 1, 2)


def test_complement():
    assert Permutation((2, 4, 1, 3)).complement() == Permutation((3, 1, 4, 2))
    for pi in all_permutations(4):
        assert pi.complement().complement() == pi
        assert pi.complement().length == 6 - pi.length


def test_descents_and_covers():
    pi = Permutation((2, 4, 5, 1, 6, 3))
    assert pi.descent_set() == frozenset({3, 5})
    ups = pi.upper_covers()
    assert len(ups) == 6 - 1 - 2  # one cover per ascent
    for up in ups:
        assert up.length == pi.length + 1
    downs = pi.lower_covers()
    assert len(downs) == 2
    for down in downs:
        assert down.length == pi.length - 1
        assert leq_weak(down, pi)


def test_longest_element():
    w0 = longest_element(4)
    assert w0.word == (4, 3, 2, 1)
    assert w0.length == 6
    assert identity(4).length == 0
    for pi in all_permutations(4):
        assert leq_weak(pi, w0)
        assert leq_weak(identity(4), pi)


def test_leq_weak_matches_inversion_containment():
    for n in (2, 3, 4):
        perms = list(all_permutations(n))
        for u in perms:
            for v in perms:
                expected = inversion_values(u) <= inversion_values(v)
                assert leq_weak(u, v) == expected


def test_leq_weak_fixtures():
    assert not leq_weak(Permutation((2, 1, 3, 4)), Permutation((1, 2, 4, 3)))
    assert leq_weak(Permutation((4, 1, 3, 2)), Permutation((4, 3, 1, 2)))


def test_contains_pattern():
    assert Permutation((2, 4, 1, 3)).contains_pattern((2, 3, 1))
    assert Permutation((2, 4, 1, 3)).contains_pattern(Permutation((2, 4, 1, 3)))
    assert not Permutation((1, 4, 2, 3, 6, 5)).contains_pattern((2, 4, 1, 3))
    assert not Permutation((3, 2, 1)).contains_pattern((1, 2))
    assert not Permutation((1, 2)).contains_pattern((1, 2, 3))
    assert Permutation((1,)).contains_pattern((1,))


def test_all_permutations_lex_and_complete():
    words = [p.word for p in all_permutations(4)]
    assert len(words) == factorial(4)
    assert words == sorted(words)
    assert words[0] == (1, 2, 3, 4)
    assert words[-1] == (4, 3, 2, 1)


def test_parse_permutation():
    assert parse_permutation("4132").word == (4, 1, 3, 2)
    assert parse_permutation("4,1,3,2").word == (4, 1, 3, 2)
    assert parse_permutation(" 10,2,3,4,5,6,7,8,9,1 ").size == 10
    for bad in ("", "125", "1,2,2", "abc", "0"):
        with pytest.raises(ValueError):
            parse_permutation(bad)


def test_str_forms():
    assert str(Permutation((4, 1, 3, 2))) == "4132"
    big = identity(10)
    assert str(big) == "1,2,3,4,5,6,7,8,9,10"


def test_times_s_range_checked():
    pi = identity(4)
    with pytest.raises(ValueError):
        pi.times_s(0)
    with pytest.raises(ValueError):
        pi.times_s(4)
    assert pi.times_s(2).word == (1, 3, 2, 4)
