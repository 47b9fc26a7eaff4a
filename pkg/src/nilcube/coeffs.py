"""Exact coefficient arithmetic: GF(p) residues and arbitrary-precision rationals.

Characteristic 0 uses fractions.Fraction (always reduced, positive
denominator).  The ring-of-definition condition "all pivot inverses lie in
Z[1/2,1/3]" is checked a posteriori through denominator_support /
is_23_smooth rather than by restricting the arithmetic.
"""

from __future__ import annotations

from fractions import Fraction


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


class Field:
    """The prime field GF(p), or Q when characteristic is 0."""

    def __init__(self, characteristic: int):
        if characteristic != 0 and not _is_prime(characteristic):
            raise ValueError(f"characteristic must be 0 or prime, got {characteristic}")
        self.p = characteristic

    def __repr__(self):
        return f"Field({self.p})"

    def __eq__(self, other):
        return isinstance(other, Field) and self.p == other.p

    def __hash__(self):
        return hash(("Field", self.p))

    @property
    def zero(self):
        return Fraction(0) if self.p == 0 else 0

    @property
    def one(self):
        return Fraction(1) if self.p == 0 else 1

    def of(self, n: int):
        """Image of the integer n in the field."""
        return Fraction(n) if self.p == 0 else n % self.p

    def add(self, a, b):
        return a + b if self.p == 0 else (a + b) % self.p

    def sub(self, a, b):
        return a - b if self.p == 0 else (a - b) % self.p

    def mul(self, a, b):
        return a * b if self.p == 0 else (a * b) % self.p

    def neg(self, a):
        return -a if self.p == 0 else (-a) % self.p

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("inverse of zero")
        return 1 / a if self.p == 0 else pow(a, self.p - 2, self.p)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def parse(self, text: str):
        """Scalar from its serialized form: "num/den" or an integer string."""
        if self.p == 0:
            return Fraction(text)
        return int(text) % self.p

    def serialize(self, a) -> str:
        return str(a)


def arith(field: Field, a, b, op: str):
    """Dispatch form of the four field operations."""
    try:
        f = {"add": field.add, "sub": field.sub, "mul": field.mul, "div": field.div}[op]
    except KeyError:
        raise ValueError(f"unknown op {op!r}") from None
    return f(a, b)


def _prime_factors(n: int) -> set[int]:
    n = abs(n)
    out = set()
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.add(f)
            while n % f == 0:
                n //= f
        f += 1 if f == 2 else 2
    if n > 1:
        out.add(n)
    return out


def denominator_support(a: Fraction) -> set[int]:
    """Primes dividing the reduced denominator of a rational scalar."""
    if not isinstance(a, Fraction):
        raise ValueError("denominator_support is defined in characteristic 0 only")
    return _prime_factors(a.denominator)


def is_23_smooth_numerator(a: Fraction) -> bool:
    """True iff 1/a lies in Z[1/2,1/3], i.e. numerator(a) has only 2,3 as prime factors."""
    return denominator_support(1 / a) <= {2, 3}
