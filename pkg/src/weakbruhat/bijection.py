"""The pairing (u, v) -> inverse(u) v between the two intervals around
a permutation and the whole symmetric group.

For separable pi the map from {u <= pi} x {v >= pi} is a bijection onto
S_n.  check_bijection verifies that extensionally from the actual
intervals; invert_phi reconstructs the unique preimage of a target w by
recursion over pi's block structure, self-verifying its answer (and
falling back to brute-force search at small sizes) since the
construction is easy to get subtly wrong.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial

from .errors import GuardExceeded, InternalInversionFailure, NotSeparable
from .perm import Permutation, compose, identity, leq_weak, longest_element
from .separable import block_split, is_separable
from .weak_order import interval

PAIR_TABLE_GUARD = 7


def phi(u: Permutation, v: Permutation) -> Permutation:
    """compose(inverse(u), v).

    >>> print(phi(Permutation((1, 2)), Permutation((2, 1))))
    21
    """
    return compose(u.inverse(), v)


def phi_prime(u: Permutation, v: Permutation) -> Permutation:
    """compose(inverse(v), u); the inverse permutation of phi(u, v)."""
    return compose(v.inverse(), u)


@dataclass(frozen=True)
class PairTable:
    pi: Permutation
    entries: dict

    def to_csv(self) -> str:
        """Rows (u, v, w) sorted by w, then u."""
        lines = ["u,v,w"]
        items = sorted(
            self.entries.items(), key=lambda item: (item[1].word, item[0][0].word)
        )
        for (u, v), w in items:
            lines.append(f"{u},{v},{w}")
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class BijectionReport:
    is_bijection: bool
    collisions: tuple


def build_pair_table(pi: Permutation, force: bool = False) -> PairTable:
    """Every (u, v) with u <= pi <= v, mapped through phi."""
    if pi.size > PAIR_TABLE_GUARD and not force:
        raise GuardExceeded(
            f"pair table guarded at n <= {PAIR_TABLE_GUARD} (got {pi.size}); "
            "pass force=True (--force) to override"
        )
    below = list(interval(identity(pi.size), pi, force=force).elements())
    above = list(interval(pi, longest_element(pi.size), force=force).elements())
    entries = {(u, v): phi(u, v) for u in below for v in above}
    return PairTable(pi, entries)


def check_bijection(pi: Permutation, force: bool = False) -> BijectionReport:
    """Is phi a bijection onto S_n from the two intervals around pi?

    >>> check_bijection(Permutation((4, 1, 3, 2))).is_bijection
    True
    >>> report = check_bijection(Permutation((2, 4, 1, 3)))
    >>> report.is_bijection
    False
    """
    table = build_pair_table(pi, force=force)
    by_image: dict[tuple[int, ...], list] = {}
    for (u, v), w in table.entries.items():
        by_image.setdefault(w.word, []).append((u, v))
    collisions = tuple(
        (Permutation(word), tuple(sorted(pairs, key=lambda p: (p[0].word, p[1].word))))
        for word, pairs in sorted(by_image.items())
        if len(pairs) > 1
    )
    full = len(table.entries) == factorial(pi.size) and not collisions
    return BijectionReport(is_bijection=full, collisions=collisions)


def _construct(pi: Permutation, w: Permutation):
    n = pi.size
    if n == 1:
        return pi, pi
    split = block_split(pi)
    if split is None:
        raise NotSeparable(f"{pi} has no prefix block split")
    if split.kind == "high-low":
        # Complements exchange the two interval roles and flip the
        # split to low-high, so solve there and map the answer back.
        u2, v2 = _construct(pi.complement(), w.inverse())
        return v2.complement(), u2.complement()
    m = split.m
    pi_a = Permutation(pi.word[:m])
    pi_b = Permutation(tuple(a - m for a in pi.word[m:]))
    w1 = Permutation(tuple(a for a in w.word if a <= m))
    w2 = Permutation(tuple(a - m for a in w.word if a > m))
    u1, v1 = _construct(pi_a, w1)
    u2, v2 = _construct(pi_b, w2)
    u = Permutation(u1.word + tuple(a + m for a in u2.word))
    v_word = list(v1.word) + [a + m for a in v2.word]
    # Shift the low letters rightward to the positions they hold in w,
    # highest of the m first; every adjacent swap passes a high letter,
    # so the result stays above the concatenation in the weak order.
    targets = [i for i, a in enumerate(w.word, start=1) if a <= m]
    for p in range(m, 0, -1):
        letter = v_word.pop(p - 1)
        v_word.insert(targets[p - 1] - 1, letter)
    return u, Permutation(v_word)


def invert_phi(pi: Permutation, w: Permutation):
    """The unique (u, v) with u <= pi <= v and phi(u, v) = w.

    The recursive construction is always verified before returning; if
    it ever misfires, small sizes fall back to searching the pair table
    directly.

    >>> u, v = invert_phi(Permutation((4, 1, 3, 2)), Permutation((2, 3, 1, 4)))
    >>> print(u, v)
    1432 4312
    >>> phi(u, v)
    Permutation((2, 3, 1, 4))
    """
    if pi.size != w.size:
        raise ValueError(f"size mismatch: {pi.size} vs {w.size}")
    if not is_separable(pi):
        raise NotSeparable(f"{pi} contains 3142 or 2413")
    u, v = _construct(pi, w)
    if phi(u, v) == w and leq_weak(u, pi) and leq_weak(pi, v):
        return u, v
    if pi.size <= 6:
        for (bu, bv), bw in build_pair_table(pi).entries.items():
            if bw == w:
                return bu, bv
    raise InternalInversionFailure(
        f"no verified preimage of {w} for pi = {pi} (construction gave {u}, {v})"
    )


if __name__ == "__main__":
    import doctest

    doctest.testmod()
