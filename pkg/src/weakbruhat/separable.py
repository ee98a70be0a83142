"""Separable permutations: detection, separating trees, and the
closed-form rank generating functions they admit.

A permutation is separable when it avoids both 3142 and 2413;
equivalently it decomposes recursively into blocks, recorded here as a
binary separating tree whose internal nodes are positive (left block of
smaller values) or negative (left block of larger values).  Two
independent evaluation routes are kept side by side on purpose: a
recursion over block splits, and a closed formula read off the tree.
Tests confirm they agree with each other and with brute-force interval
enumeration.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .errors import Not231Avoiding, NotSeparable
from .perm import Permutation
from .qpoly import ONE, IntPoly, q_binomial, q_factorial, q_int

POSITIVE = "positive"
NEGATIVE = "negative"

_FORBIDDEN = ((3, 1, 4, 2), (2, 4, 1, 3))


def is_separable(pi: Permutation) -> bool:
    """True when pi avoids both 3142 and 2413.

    >>> is_separable(Permutation((4, 2, 3, 1)))
    True
    >>> is_separable(Permutation((2, 4, 1, 3)))
    False
    """
    return not any(pi.contains_pattern(p) for p in _FORBIDDEN)


@dataclass(frozen=True)
class BlockSplit:
    """A prefix block boundary: the first m letters form the value
    block {1..m} (low-high) or {n-m+1..n} (high-low)."""

    m: int
    kind: str  # "low-high" or "high-low"


def _scan_prefix_blocks(word, lo: int, hi: int, largest: bool = False):
    """Prefix length m < len(word) whose letters form a value block
    anchored at lo or hi.  Smallest m by default."""
    best = None
    mn = mx = word[0]
    for m in range(1, len(word)):
        a = word[m - 1]
        if a < mn:
            mn = a
        if a > mx:
            mx = a
        if mx - mn + 1 == m:
            if mn == lo:
                found = (m, "low-high")
            elif mx == hi:
                found = (m, "high-low")
            else:
                continue
            if not largest:
                return found
            best = found
    return best


def block_split(pi: Permutation):
    """Canonical (smallest-m) prefix block split, or None when the word
    has no prefix block at all.

    >>> block_split(Permutation((4, 1, 3, 2)))
    BlockSplit(m=1, kind='high-low')
    >>> block_split(Permutation((2, 4, 1, 3))) is None
    True
    """
    if pi.size == 1:
        return None
    found = _scan_prefix_blocks(pi.word, 1, pi.size)
    return BlockSplit(*found) if found else None


@dataclass(frozen=True)
class Leaf:
    value: int

    @property
    def size(self) -> int:
        return 1

    @property
    def lo(self) -> int:
        return self.value

    @property
    def hi(self) -> int:
        return self.value


@dataclass(frozen=True)
class Internal:
    left: "TreeNode"
    right: "TreeNode"
    sign: str
    size: int
    lo: int
    hi: int


TreeNode = Union[Leaf, Internal]


def _make_internal(left: TreeNode, right: TreeNode) -> Internal:
    if left.hi < right.lo:
        sign = POSITIVE
    elif left.lo > right.hi:
        sign = NEGATIVE
    else:
        raise ValueError(
            f"child subranges interleave: [{left.lo},{left.hi}] vs [{right.lo},{right.hi}]"
        )
    return Internal(
        left,
        right,
        sign,
        left.size + right.size,
        min(left.lo, right.lo),
        max(left.hi, right.hi),
    )


@dataclass(frozen=True)
class SeparatingTree:
    root: TreeNode

    def leaves(self) -> tuple[int, ...]:
        """Leaf values left to right; spells the source word."""
        out: list[int] = []

        def walk(node: TreeNode) -> None:
            if isinstance(node, Leaf):
                out.append(node.value)
            else:
                walk(node.left)
                walk(node.right)

        walk(self.root)
        return tuple(out)


def separating_tree(pi: Permutation, largest: bool = False) -> SeparatingTree:
    """Canonical separating tree, splitting at the smallest valid
    prefix block each time (largest=True picks the other extreme, for
    checking that tree choice does not matter).

    >>> t = separating_tree(Permutation((4, 2, 3, 1)))
    >>> t.root.sign, t.root.right.sign, t.root.right.left.sign
    ('negative', 'negative', 'positive')
    """
    if not is_separable(pi):
        raise NotSeparable(f"{pi} contains 3142 or 2413")

    def build(word, lo: int, hi: int) -> TreeNode:
        if len(word) == 1:
            return Leaf(word[0])
        found = _scan_prefix_blocks(word, lo, hi, largest)
        if found is None:
            raise NotSeparable(f"{pi} has a block with no prefix split")
        m, kind = found
        if kind == "low-high":
            left = build(word[:m], lo, lo + m - 1)
            right = build(word[m:], lo + m, hi)
        else:
            left = build(word[:m], hi - m + 1, hi)
            right = build(word[m:], lo, hi - m)
        return _make_internal(left, right)

    return SeparatingTree(build(pi.word, 1, pi.size))


def _internal_nodes(root: TreeNode):
    """(node, parent) pairs over internal nodes, parent None at root."""
    stack = [(root, None)]
    while stack:
        node, parent = stack.pop()
        if isinstance(node, Internal):
            yield node, parent
            stack.append((node.left, node))
            stack.append((node.right, node))


def gf_below_closed(tree: SeparatingTree) -> IntPoly:
    """Closed formula for the rank generating function of the interval
    from the identity up to the tree's permutation.

    Collect the negative nodes whose parent is not negative and the
    positive nodes whose parent is not positive (root and leaves
    excluded from both); the value is the ratio of the q-factorials of
    their leaf counts, times [n]! when the root is negative.

    >>> print(gf_below_closed(separating_tree(Permutation((4, 1, 3, 2)))))
    1 + 2*q + 2*q^2 + 2*q^3 + q^4
    """
    root = tree.root
    if isinstance(root, Leaf):
        return ONE
    num, den = ONE, ONE
    for node, parent in _internal_nodes(root):
        if parent is None:
            continue
        if node.sign == NEGATIVE and parent.sign != NEGATIVE:
            num = num * q_factorial(node.size)
        elif node.sign == POSITIVE and parent.sign != POSITIVE:
            den = den * q_factorial(node.size)
    if root.sign == NEGATIVE:
        num = num * q_factorial(root.size)
    return num.exact_div(den)


def gf_above_closed(tree: SeparatingTree) -> IntPoly:
    """Mirror of gf_below_closed for the interval from the permutation
    up to the reversal: the ratio is inverted and [n]! attaches to a
    positive root instead.

    >>> print(gf_above_closed(separating_tree(Permutation((4, 1, 3, 2)))))
    1 + q + q^2
    """
    root = tree.root
    if isinstance(root, Leaf):
        return ONE
    num, den = ONE, ONE
    for node, parent in _internal_nodes(root):
        if parent is None:
            continue
        if node.sign == POSITIVE and parent.sign != POSITIVE:
            num = num * q_factorial(node.size)
        elif node.sign == NEGATIVE and parent.sign != NEGATIVE:
            den = den * q_factorial(node.size)
    if root.sign == POSITIVE:
        num = num * q_factorial(root.size)
    return num.exact_div(den)


def _below_rec(word) -> IntPoly:
    if len(word) == 1:
        return ONE
    lo, hi = min(word), max(word)
    found = _scan_prefix_blocks(word, lo, hi)
    if found is None:
        raise NotSeparable(f"block {word} has no prefix split")
    m, kind = found
    value = _below_rec(word[:m]) * _below_rec(word[m:])
    if kind == "high-low":
        value = q_binomial(len(word), m) * value
    return value


def _above_rec(word) -> IntPoly:
    if len(word) == 1:
        return ONE
    lo, hi = min(word), max(word)
    found = _scan_prefix_blocks(word, lo, hi)
    if found is None:
        raise NotSeparable(f"block {word} has no prefix split")
    m, kind = found
    value = _above_rec(word[:m]) * _above_rec(word[m:])
    if kind == "low-high":
        value = q_binomial(len(word), m) * value
    return value


def gf_below_recursive(pi: Permutation) -> IntPoly:
    """Rank generating function of the lower interval by recursion on
    block splits: a low-high split multiplies the pieces, a high-low
    split adds a Gaussian binomial factor for interleaving the blocks.
    """
    if not is_separable(pi):
        raise NotSeparable(f"{pi} contains 3142 or 2413")
    return _below_rec(pi.word)


def gf_above_recursive(pi: Permutation) -> IntPoly:
    """Rank generating function of the upper interval; dual recursion
    (the binomial factor attaches to low-high splits instead)."""
    if not is_separable(pi):
        raise NotSeparable(f"{pi} contains 3142 or 2413")
    return _above_rec(pi.word)


def gf_below_231(pi: Permutation) -> IntPoly:
    """Product formula for 231-avoiding permutations: c_i is the
    distance from position i to the first later position carrying a
    larger letter (to one past the end when none does), and the value
    is the product of the q-integers [c_i].

    >>> print(gf_below_231(Permutation((1, 4, 2, 3, 6, 5))))
    1 + 2*q + 2*q^2 + q^3
    """
    if pi.contains_pattern((2, 3, 1)):
        raise Not231Avoiding(f"{pi} contains 231")
    w = pi.word
    n = len(w)
    value = ONE
    for i in range(n):
        j = i + 1
        while j < n and w[j] < w[i]:
            j += 1
        value = value * q_int(j - i)
    return value


def gf_above_from_complement(pi: Permutation) -> IntPoly:
    """Upper interval generating function obtained by dividing [n]! by
    the lower one; the division is exact for separable input."""
    if not is_separable(pi):
        raise NotSeparable(f"{pi} contains 3142 or 2413")
    return q_factorial(pi.size).exact_div(gf_below_recursive(pi))


def tree_json(tree: SeparatingTree) -> dict:
    def encode(node: TreeNode) -> dict:
        if isinstance(node, Leaf):
            return {"leaf": node.value}
        return {"sign": node.sign, "children": [encode(node.left), encode(node.right)]}

    return encode(tree.root)


def tree_dot(tree: SeparatingTree) -> str:
    """DOT rendering with signed internal nodes and letter leaves."""
    lines = ["digraph separating_tree {"]
    counter = 0

    def emit(node: TreeNode) -> str:
        nonlocal counter
        name = f"n{counter}"
        counter += 1
        if isinstance(node, Leaf):
            lines.append(f'  {name} [label="{node.value}" shape=plaintext];')
        else:
            label = "Positive Node" if node.sign == POSITIVE else "Negative Node"
            lines.append(f'  {name} [label="{label}"];')
            for child in (node.left, node.right):
                child_name = emit(child)
                lines.append(f"  {name} -> {child_name};")
        return name

    emit(tree.root)
    lines.append("}")
    return "\n".join(lines)


if __name__ == "__main__":
    import doctest

    doctest.testmod()
