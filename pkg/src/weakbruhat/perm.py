"""Permutations in one-line notation, with the operations that drive
the (right) weak order: inversion count, covers, pattern containment
and the order test itself.

A permutation of size n is a word of the integers 1..n, each exactly
once.  Composition follows (sigma tau)(i) = sigma(tau(i)), so
multiplying by the adjacent transposition s_i on the right swaps the
letters at word positions i and i+1:

>>> print(compose(parse_permutation("2413"), adjacent_transposition(4, 2)))
2143
"""

from __future__ import annotations

from itertools import combinations, permutations
from typing import Iterable, Iterator


class Permutation:
    """Immutable permutation of {1, ..., n} stored as its word.

    >>> p = Permutation((4, 1, 3, 2))
    >>> p.length
    4
    >>> sorted(p.descent_set())
    [1, 3]
    >>> print(p.inverse())
    2431
    """

    __slots__ = ("word", "_length")

    def __init__(self, word: Iterable[int]):
        w = tuple(word)
        if not w:
            raise ValueError("empty word: permutations have size at least 1")
        if sorted(w) != list(range(1, len(w) + 1)):
            raise ValueError(f"not a rearrangement of 1..{len(w)}: {w}")
        self.word = w
        self._length: int | None = None

    @property
    def size(self) -> int:
        return len(self.word)

    @property
    def length(self) -> int:
        """Number of inversions: pairs i < j with word[i] > word[j]."""
        if self._length is None:
            w = self.word
            self._length = sum(
                1
                for i in range(len(w))
                for j in range(i + 1, len(w))
                if w[i] > w[j]
            )
        return self._length

    def __call__(self, i: int) -> int:
        return self.word[i - 1]

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Permutation) and self.word == other.word

    def __hash__(self) -> int:
        return hash(self.word)

    def __repr__(self) -> str:
        return f"Permutation({self.word!r})"

    def __str__(self) -> str:
        if self.size <= 9:
            return "".join(str(a) for a in self.word)
        return ",".join(str(a) for a in self.word)

    def inverse(self) -> "Permutation":
        inv = [0] * self.size
        for i, a in enumerate(self.word, start=1):
            inv[a - 1] = i
        return Permutation(inv)

    def complement(self) -> "Permutation":
        """Each letter a replaced by n+1-a.

        >>> print(Permutation((2, 4, 1, 3)).complement())
        3142
        """
        n = self.size
        return Permutation(n + 1 - a for a in self.word)

    def descent_set(self) -> frozenset[int]:
        """Positions i with word[i] > word[i+1] (1-indexed)."""
        w = self.word
        return frozenset(i for i in range(1, len(w)) if w[i - 1] > w[i])

    def times_s(self, i: int) -> "Permutation":
        """Right product with s_i: swaps word positions i and i+1."""
        if not 1 <= i < self.size:
            raise ValueError(f"transposition index {i} out of range")
        w = list(self.word)
        w[i - 1], w[i] = w[i], w[i - 1]
        return Permutation(w)

    def upper_covers(self) -> tuple["Permutation", ...]:
        """Weak order covers above: swap any ascent, length + 1."""
        w = self.word
        return tuple(
            self.times_s(i) for i in range(1, len(w)) if w[i - 1] < w[i]
        )

    def lower_covers(self) -> tuple["Permutation", ...]:
        """Weak order covers below: swap any descent, length - 1."""
        return tuple(self.times_s(i) for i in sorted(self.descent_set()))

    def contains_pattern(self, pattern) -> bool:
        """Naive subsequence scan for an order-isomorphic copy.

        >>> Permutation((2, 4, 1, 3)).contains_pattern((2, 3, 1))
        True
        >>> Permutation((1, 4, 2, 3, 6, 5)).contains_pattern((2, 4, 1, 3))
        False
        """
        if not isinstance(pattern, Permutation):
            pattern = Permutation(pattern)
        pat = pattern.word
        k = len(pat)
        if k > self.size:
            return False
        pairs = [
            (i, j, pat[i] < pat[j])
            for i in range(k)
            for j in range(i + 1, k)
        ]
        for vals in combinations(self.word, k):
            if all((vals[i] < vals[j]) == asc for i, j, asc in pairs):
                return True
        return False


def identity(n: int) -> Permutation:
    return Permutation(range(1, n + 1))


def longest_element(n: int) -> Permutation:
    """The reversal n, n-1, ..., 1, top of the weak order."""
    return Permutation(range(n, 0, -1))


def adjacent_transposition(n: int, i: int) -> Permutation:
    """s_i in S_n, swapping i and i+1."""
    if not 1 <= i < n:
        raise ValueError(f"adjacent transposition index {i} out of range for n={n}")
    return identity(n).times_s(i)


def compose(sigma: Permutation, tau: Permutation) -> Permutation:
    """(sigma tau)(i) = sigma(tau(i))."""
    if sigma.size != tau.size:
        raise ValueError(f"size mismatch: {sigma.size} vs {tau.size}")
    sw = sigma.word
    return Permutation(sw[t - 1] for t in tau.word)


def leq_weak(u: Permutation, v: Permutation) -> bool:
    """Weak order comparison via length additivity:
    u <= v iff length(u) + length(inverse(u) v) = length(v).

    >>> leq_weak(parse_permutation("2134"), parse_permutation("1243"))
    False
    >>> leq_weak(parse_permutation("4132"), parse_permutation("4312"))
    True
    """
    if u.size != v.size:
        raise ValueError(f"size mismatch: {u.size} vs {v.size}")
    return u.length + compose(u.inverse(), v).length == v.length


def parse_permutation(text: str) -> Permutation:
    """Parse the compact digit form ("4132") or the comma form
    ("10,3,1,2,...").  Commas decide which form applies.

    >>> parse_permutation("4132").word
    (4, 1, 3, 2)
    """
    text = text.strip()
    if not text:
        raise ValueError("empty permutation text")
    if "," in text:
        try:
            word = [int(part) for part in text.split(",")]
        except ValueError:
            raise ValueError(f"bad comma-separated permutation: {text!r}") from None
    else:
        if not text.isdigit():
            raise ValueError(f"bad permutation word: {text!r}")
        word = [int(ch) for ch in text]
    return Permutation(word)


def all_permutations(n: int) -> Iterator[Permutation]:
    """All of S_n in lexicographic word order."""
    for word in permutations(range(1, n + 1)):
        yield Permutation(word)


if __name__ == "__main__":
    import doctest

    doctest.testmod()
