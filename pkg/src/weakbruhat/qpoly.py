"""Exact integer polynomials in one variable q, plus the classical
q-analogs built from them: q-integers, q-factorials, Gaussian binomial
coefficients and cyclotomic polynomials.

Everything here is exact arithmetic over the integers.  Division is
offered only in exact form: IntPoly.exact_div raises NonzeroRemainder
when the divisor does not divide, so a try/except around it doubles as
the divisibility test used elsewhere in the package.

>>> print(q_factorial(3))
1 + 2*q + 2*q^2 + q^3
>>> print(q_binomial(4, 2))
1 + q + 2*q^2 + q^3 + q^4
>>> print(cyclotomic(6))
1 - q + q^2
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Iterator

from .errors import NonzeroRemainder


class IntPoly:
    """Dense polynomial with integer coefficients.

    coeffs[k] holds the coefficient of q^k.  Trailing zeros are stripped
    on construction, so equal polynomials compare equal as tuples.  The
    zero polynomial has an empty coefficient tuple and degree -1.

    >>> IntPoly((1, 2, 0, 0)).coeffs
    (1, 2)
    >>> IntPoly((1, 1)) * IntPoly((1, 1))
    IntPoly((1, 2, 1))
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, IntPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"IntPoly({self.coeffs!r})"

    def __add__(self, other: "IntPoly") -> "IntPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, c in enumerate(b):
            out[k] += c
        return IntPoly(out)

    def __neg__(self) -> "IntPoly":
        return IntPoly(-c for c in self.coeffs)

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        return self + (-other)

    def __mul__(self, other: "IntPoly") -> "IntPoly":
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai == 0:
                continue
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
        return IntPoly(out)

    def evaluate(self, x: int) -> int:
        """Value at an integer point, by Horner's rule.

        >>> q_factorial(4).evaluate(1)
        24
        """
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def exact_div(self, other: "IntPoly") -> "IntPoly":
        """Quotient self/other when the division is exact over Z[q].

        Raises NonzeroRemainder otherwise, so this is also the
        divisibility test.

        >>> print(q_factorial(4).exact_div(q_factorial(2)))
        1 + 2*q + 3*q^2 + 3*q^3 + 2*q^4 + q^5
        >>> q_factorial(3).exact_div(IntPoly((0, 1)))
        Traceback (most recent call last):
            ...
        weakbruhat.errors.NonzeroRemainder: remainder is not zero
        """
        if not other:
            raise ZeroDivisionError("division by the zero polynomial")
        if not self:
            return IntPoly()
        num = list(self.coeffs)
        den = other.coeffs
        dd = len(den) - 1
        lead = den[-1]
        if len(num) - 1 < dd:
            raise NonzeroRemainder("remainder is not zero")
        quot = [0] * (len(num) - dd)
        for k in range(len(quot) - 1, -1, -1):
            c = num[dd + k]
            if c % lead:
                raise NonzeroRemainder("remainder is not zero")
            f = c // lead
            quot[k] = f
            if f:
                for j, dj in enumerate(den):
                    num[k + j] -= f * dj
        if any(num):
            raise NonzeroRemainder("remainder is not zero")
        return IntPoly(quot)

    def reverse(self) -> "IntPoly":
        """Coefficient sequence read backwards (q^deg * p(1/q)).

        >>> IntPoly((1, 1, 2)).reverse()
        IntPoly((2, 1, 1))
        """
        if not self:
            raise ValueError("reverse of the zero polynomial is undefined")
        return IntPoly(reversed(self.coeffs))

    def is_symmetric(self) -> bool:
        """True when the coefficient sequence is palindromic."""
        if not self:
            raise ValueError("symmetry of the zero polynomial is undefined")
        return self.coeffs == tuple(reversed(self.coeffs))

    def is_unimodal(self) -> bool:
        """True when coefficients rise (weakly) then fall (weakly).

        Only defined for nonzero polynomials with nonnegative
        coefficients; anything else is rejected.
        """
        if not self:
            raise ValueError("unimodality of the zero polynomial is undefined")
        if any(c < 0 for c in self.coeffs):
            raise ValueError("unimodality requires nonnegative coefficients")
        descended = False
        for prev, nxt in zip(self.coeffs, self.coeffs[1:]):
            if nxt < prev:
                descended = True
            elif nxt > prev and descended:
                return False
        return True

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                term = str(mag)
            else:
                var = "q" if k == 1 else f"q^{k}"
                term = var if mag == 1 else f"{mag}*{var}"
            if not parts:
                parts.append(term if c > 0 else "-" + term)
            else:
                parts.append(("+ " if c > 0 else "- ") + term)
        return " ".join(parts)

    def coeff_strings(self) -> list[str]:
        """Machine form: coefficients as decimal strings, ascending."""
        return [str(c) for c in self.coeffs]

    @classmethod
    def from_coeff_strings(cls, strings: Iterable[str]) -> "IntPoly":
        return cls(int(s) for s in strings)


ZERO = IntPoly()
ONE = IntPoly((1,))


def q_int(i: int) -> IntPoly:
    """The q-integer [i] = 1 + q + ... + q^(i-1); [0] = 0.

    >>> print(q_int(4))
    1 + q + q^2 + q^3
    """
    if i < 0:
        raise ValueError(f"q_int of negative {i}")
    return IntPoly([1] * i)


@lru_cache(maxsize=None)
def q_factorial(n: int) -> IntPoly:
    """[n]! = [1][2]...[n], the generating function of S_n by inversions.

    >>> q_factorial(0)
    IntPoly((1,))
    >>> q_factorial(3).evaluate(1)
    6
    """
    if n < 0:
        raise ValueError(f"q_factorial of negative {n}")
    if n == 0:
        return ONE
    return q_factorial(n - 1) * q_int(n)


def q_binomial(n: int, m: int) -> IntPoly:
    """Gaussian binomial [n]!/([m]![n-m]!), exact by construction.

    >>> print(q_binomial(3, 1))
    1 + q + q^2
    >>> q_binomial(2, 3)
    Traceback (most recent call last):
        ...
    ValueError: q_binomial requires 0 <= m <= n, got n=2 m=3
    """
    if not 0 <= m <= n:
        raise ValueError(f"q_binomial requires 0 <= m <= n, got n={n} m={m}")
    return q_factorial(n).exact_div(q_factorial(m) * q_factorial(n - m))


_cyclotomic_cache: dict[int, IntPoly] = {}


def cyclotomic(d: int) -> IntPoly:
    """The d-th cyclotomic polynomial, by dividing q^d - 1 through by
    the cyclotomics of the proper divisors of d.  Results are cached.

    >>> print(cyclotomic(1))
    -1 + q
    >>> print(cyclotomic(12))
    1 - q^2 + q^4
    """
    if d < 1:
        raise ValueError(f"cyclotomic index must be positive, got {d}")
    got = _cyclotomic_cache.get(d)
    if got is not None:
        return got
    p = IntPoly([-1] + [0] * (d - 1) + [1])
    for e in range(1, d):
        if d % e == 0:
            p = p.exact_div(cyclotomic(e))
    _cyclotomic_cache[d] = p
    return p


def _totients_upto(limit: int) -> list[int]:
    phi = list(range(limit + 1))
    for p in range(2, limit + 1):
        if phi[p] == p:  # p prime
            for k in range(p, limit + 1, p):
                phi[k] -= phi[k] // p
    return phi


def _candidate_orders(degree: int) -> Iterator[int]:
    # Any cyclotomic factor of p has phi(d) = deg(cyclotomic(d)) <= deg(p),
    # and phi(d) >= sqrt(d/2) bounds the search range.
    limit = 2 * degree * degree + 1
    phi = _totients_upto(limit)
    for d in range(1, limit + 1):
        if phi[d] <= degree:
            yield d


def is_cyclotomic_product(p: IntPoly) -> bool:
    """True when p is a product of cyclotomic polynomials.

    Requires a nonzero polynomial with constant term 1.  Works by
    greedy exact division: each candidate order is divided out to
    exhaustion; by unique factorization over Z[q] the order of removal
    cannot change the outcome.

    >>> is_cyclotomic_product(q_binomial(4, 2))
    True
    >>> is_cyclotomic_product(IntPoly((1, 1, 0, 1)))
    False
    """
    if not p:
        raise ValueError("zero polynomial")
    if p.coeffs[0] != 1:
        raise ValueError("constant term must be 1")
    if p == ONE:
        return True
    # A cyclotomic product with constant term 1 contains an even number
    # of q-1 factors and is therefore palindromic; reject early.
    if not p.is_symmetric():
        return False
    current = p
    for d in _candidate_orders(current.degree):
        phi_d = cyclotomic(d).degree
        while phi_d <= current.degree:
            try:
                current = current.exact_div(cyclotomic(d))
            except NonzeroRemainder:
                break
            if current == ONE:
                return True
    return current == ONE


if __name__ == "__main__":
    import doctest

    doctest.testmod()
