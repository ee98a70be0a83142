"""Intervals in the weak order on S_n: enumeration, rank generating
functions, saturated chain counts, reduced words, and the full
comparability matrix for one symmetric group.

Interval enumeration walks upward from the bottom through covers,
pruning by comparison with the top, so the work is proportional to the
interval actually returned.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .errors import GuardExceeded, IncomparableEndpoints
from .perm import Permutation, all_permutations, leq_weak
from .qpoly import IntPoly

INTERVAL_GUARD = 10


@dataclass(frozen=True)
class Interval:
    """A weak order interval, elements grouped by rank offset from the
    bottom.  ranks[k] holds the elements of length length(bottom) + k,
    sorted by word."""

    bottom: Permutation
    top: Permutation
    ranks: tuple[tuple[Permutation, ...], ...]

    @property
    def size(self) -> int:
        return sum(len(r) for r in self.ranks)

    def elements(self) -> Iterator[Permutation]:
        for rank in self.ranks:
            yield from rank


def interval(bottom: Permutation, top: Permutation, force: bool = False) -> Interval:
    """All w with bottom <= w <= top, by upward BFS with pruning."""
    if bottom.size != top.size:
        raise ValueError(f"size mismatch: {bottom.size} vs {top.size}")
    if bottom.size > INTERVAL_GUARD and not force:
        raise GuardExceeded(
            f"interval enumeration guarded at n <= {INTERVAL_GUARD} "
            f"(got {bottom.size}); pass force=True (--force) to override"
        )
    if not leq_weak(bottom, top):
        raise IncomparableEndpoints(f"{bottom} is not below {top} in the weak order")
    ranks = []
    frontier = [bottom]
    seen = {bottom.word}
    while frontier:
        ranks.append(tuple(sorted(frontier, key=lambda p: p.word)))
        nxt = []
        for w in frontier:
            for c in w.upper_covers():
                if c.word not in seen and leq_weak(c, top):
                    seen.add(c.word)
                    nxt.append(c)
        frontier = nxt
    return Interval(bottom, top, tuple(ranks))


def rank_gf(iv: Interval) -> IntPoly:
    """Rank generating function: coefficient k counts rank k."""
    return IntPoly(len(r) for r in iv.ranks)


def saturated_chains(u: Permutation, v: Permutation) -> int:
    """Number of saturated chains u = w_0 < w_1 < ... < w_k = v where
    every step is a cover."""
    if not leq_weak(u, v):
        raise IncomparableEndpoints(f"{u} is not below {v} in the weak order")
    memo: dict[tuple[int, ...], int] = {}

    def count(w: Permutation) -> int:
        if w == v:
            return 1
        got = memo.get(w.word)
        if got is not None:
            return got
        total = 0
        for c in w.upper_covers():
            if leq_weak(c, v):
                total += count(c)
        memo[w.word] = total
        return total

    return count(u)


def all_saturated_chains(
    u: Permutation, v: Permutation
) -> list[tuple[Permutation, ...]]:
    """Explicit listing companion to saturated_chains."""
    if not leq_weak(u, v):
        raise IncomparableEndpoints(f"{u} is not below {v} in the weak order")
    out: list[tuple[Permutation, ...]] = []
    chain = [u]

    def walk(w: Permutation) -> None:
        if w == v:
            out.append(tuple(chain))
            return
        for c in w.upper_covers():
            if leq_weak(c, v):
                chain.append(c)
                walk(c)
                chain.pop()

    walk(u)
    return out


def reduced_words(pi: Permutation) -> set[tuple[int, ...]]:
    """All reduced words: index sequences (i_1, ..., i_l) with
    pi = s_{i_1} ... s_{i_l} and l = length(pi).  Peeling a descent off
    the right end shortens the element by one, so the words build up
    from the identity.

    >>> sorted(reduced_words(Permutation((3, 2, 1))))
    [(1, 2, 1), (2, 1, 2)]
    """
    memo: dict[tuple[int, ...], set[tuple[int, ...]]] = {}

    def words(w: Permutation) -> set[tuple[int, ...]]:
        if w.length == 0:
            return {()}
        got = memo.get(w.word)
        if got is not None:
            return got
        out = set()
        for i in sorted(w.descent_set()):
            for r in words(w.times_s(i)):
                out.add(r + (i,))
        memo[w.word] = out
        return out

    return words(pi)


class ComparabilityMatrix:
    """Bit-packed matrix M[u][v] = (u <= v) over all of S_n in
    lexicographic word order."""

    __slots__ = ("n", "words", "_index", "_packed", "below_counts")

    def __init__(self, n, words, packed, below_counts):
        self.n = n
        self.words = words
        self._index = {w: i for i, w in enumerate(words)}
        self._packed = packed
        self.below_counts = below_counts

    def index(self, pi: Permutation) -> int:
        return self._index[pi.word]

    def get(self, u, v) -> bool:
        i = u if isinstance(u, int) else self.index(u)
        j = v if isinstance(v, int) else self.index(v)
        byte = self._packed[i, j >> 3]
        return bool(byte >> (7 - (j & 7)) & 1)


def _inversion_mask(word: tuple[int, ...], n: int) -> int:
    # bit per value pair (a, b), a < b, set when a appears after b
    mask = 0
    for i in range(n):
        for j in range(i + 1, n):
            a, b = word[i], word[j]
            if a > b:
                lo, hi = b, a
                mask |= 1 << ((lo - 1) * n - lo * (lo - 1) // 2 + (hi - lo - 1))
    return mask


def comparability_matrix(n: int, force: bool = False) -> ComparabilityMatrix:
    """Comparability of every pair in S_n at once.

    u <= v in the weak order exactly when the inversion pairs of u form
    a subset of those of v, so each permutation becomes one machine
    word and a row is a vectorized subset test.
    """
    import numpy as np

    if n > 8 and not force:
        raise GuardExceeded(
            f"comparability matrix guarded at n <= 8 (got {n}); "
            "pass force=True (--force) to override"
        )
    words = tuple(p.word for p in all_permutations(n))
    total = len(words)
    masks = np.fromiter(
        (_inversion_mask(w, n) for w in words), dtype=np.uint64, count=total
    )
    row_bytes = (total + 7) // 8
    packed = np.empty((total, row_bytes), dtype=np.uint8)
    below_counts = np.zeros(total, dtype=np.int64)
    for i in range(total):
        row = (masks & masks[i]) == masks[i]
        below_counts += row
        packed[i] = np.packbits(row)
    return ComparabilityMatrix(n, words, packed, below_counts)


def interval_json(iv: Interval) -> dict:
    return {
        "bottom": str(iv.bottom),
        "top": str(iv.top),
        "ranks": [[str(p) for p in rank] for rank in iv.ranks],
    }


def hasse_dot(iv: Interval) -> str:
    """DOT rendering of the interval's Hasse diagram, one rank per row."""
    members = {p.word for p in iv.elements()}
    lines = ["digraph interval {", "  rankdir=BT;", "  node [shape=plaintext];"]
    for rank in iv.ranks:
        row = " ".join(f'"{p}";' for p in rank)
        lines.append(f"  {{ rank=same; {row} }}")
    for rank in iv.ranks:
        for w in rank:
            for c in w.upper_covers():
                if c.word in members:
                    lines.append(f'  "{w}" -> "{c}";')
    lines.append("}")
    return "\n".join(lines)


if __name__ == "__main__":
    import doctest

    doctest.testmod()
