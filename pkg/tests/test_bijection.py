"""The pairing (u, v) -> v^{-1} u on the intervals around a word.

For separable words this hits every permutation exactly once; the two
smallest non-separable words break it, and those are the only failures
at size 4."""

import pytest

from weakbruhat.bijection import (
    PAIR_TABLE_GUARD,
    build_pair_table,
    check_bijection,
    invert_phi,
    phi,
    phi_prime,
)
from weakbruhat.errors import GuardExceeded
from weakbruhat.perm import Permutation, all_permutations, compose, identity, longest_element
from weakbruhat.separable import is_separable
from weakbruhat.weak_order import interval


def test_phi_fixtures():
    u = Permutation((1, 4, 3, 2))
    v = Permutation((4, 3, 1, 2))
    assert phi(u, v) == compose(u.inverse(), v)
    assert phi(u, u) == identity(4)
    assert phi(identity(4), v) == v


def test_phi_prime_is_inverse_image():
    u = Permutation((2, 1, 3))
    v = Permutation((3, 2, 1))
    assert phi_prime(u, v) == phi(u, v).inverse()
    assert phi_prime(u, v) == compose(v.inverse(), u)


def test_bijection_holds_for_separable_4132():
    report = check_bijection(Permutation((4, 1, 3, 2)))
    assert report.is_bijection
    assert report.collisions == ()


@pytest.mark.parametrize("word", [(2, 4, 1, 3), (3, 1, 4, 2)])
def test_bijection_fails_for_non_separable(word):
    report = check_bijection(Permutation(word))
    assert not report.is_bijection
    assert report.collisions
    for image, pairs in report.collisions:
        assert len(pairs) >= 2
        for u, v in pairs:
            assert phi(u, v) == image


@pytest.mark.parametrize("n", range(1, 5))
def test_failure_set_is_exactly_non_separable(n):
    for pi in all_permutations(n):
        assert check_bijection(pi).is_bijection == is_separable(pi)


@pytest.mark.parametrize("n", range(1, 5))
def test_invert_phi_round_trip(n):
    for pi in all_permutations(n):
        if not is_separable(pi):
            continue
        below = set(interval(identity(n), pi).elements())
        above = set(interval(pi, longest_element(n)).elements())
        for w in all_permutations(n):
            u, v = invert_phi(pi, w)
            assert phi(u, v) == w
            assert u in below
            assert v in above


def test_invert_phi_size_mismatch():
    with pytest.raises(ValueError):
        invert_phi(Permutation((2, 1)), Permutation((1, 2, 3)))


def test_pair_table_4132():
    table = build_pair_table(Permutation((4, 1, 3, 2)))
    assert len(table.entries) == 24
    images = {w.word for w in table.entries.values()}
    assert len(images) == 24


def test_pair_table_csv():
    # below 312 = {123, 132, 312}, above = {312, 321}: six pairs
    csv = build_pair_table(Permutation((3, 1, 2))).to_csv()
    lines = csv.strip().split("\n")
    assert lines[0] == "u,v,w"
    assert len(lines) == 1 + 6
    images = [line.split(",")[2] for line in lines[1:]]
    assert images == sorted(images)


def test_pair_table_guard():
    big = longest_element(PAIR_TABLE_GUARD + 1)
    with pytest.raises(GuardExceeded, match="force"):
        build_pair_table(big)
    with pytest.raises(GuardExceeded, match="force"):
        check_bijection(big)
