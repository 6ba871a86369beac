"""Exact arithmetic in Q/Z.

Every Brauer class in this package is modelled by its invariant, an element
of Q/Z.  :class:`Invariant` always holds the reduced representative
``num/den`` with ``0 <= num < den``, so ``==`` and ``hash`` are structural.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from ._arith import factor, is_prime, split_prime_part

__all__ = [
    "Invariant",
    "CyclicSubgroup",
    "add",
    "scale",
    "order",
    "same_cyclic_subgroup",
    "primary_part",
]


@dataclass(frozen=True, order=True)
class Invariant:
    """A class in Q/Z, stored as a reduced fraction in [0, 1).

    Any integer pair is accepted and brought to canonical form, so
    ``Invariant(18, 8) == Invariant(1, 4)`` and ``Invariant(-1, 3) ==
    Invariant(2, 3)``.
    """

    num: int = 0
    den: int = 1

    def __post_init__(self):
        num, den = int(self.num), int(self.den)
        if den == 0:
            raise ZeroDivisionError("invariant with zero denominator")
        if den < 0:
            num, den = -num, -den
        num %= den
        g = gcd(num, den)
        object.__setattr__(self, "num", num // g)
        object.__setattr__(self, "den", den // g)

    @classmethod
    def parse(cls, value) -> Invariant:
        """Build from ``"num/den"``, an int, a Fraction or another Invariant."""
        if isinstance(value, Invariant):
            return value
        if isinstance(value, bool):
            raise TypeError("booleans are not invariants")
        if isinstance(value, int):
            return cls(value, 1)
        if isinstance(value, Fraction):
            return cls(value.numerator, value.denominator)
        if isinstance(value, str):
            text = value.strip()
            if "/" in text:
                a, _, b = text.partition("/")
                try:
                    return cls(int(a), int(b))
                except ValueError:
                    pass
            else:
                try:
                    return cls(int(text), 1)
                except ValueError:
                    pass
            raise ValueError(f"cannot parse invariant {value!r}")
        raise TypeError(f"cannot build an invariant from {type(value).__name__}")

    @classmethod
    def zero(cls) -> Invariant:
        return cls(0, 1)

    def as_fraction(self) -> Fraction:
        return Fraction(self.num, self.den)

    @property
    def order(self) -> int:
        return self.den

    def is_zero(self) -> bool:
        return self.num == 0

    def __add__(self, other):
        if not isinstance(other, Invariant):
            return NotImplemented
        return add(self, other)

    def __neg__(self):
        return Invariant(-self.num, self.den)

    def __sub__(self, other):
        if not isinstance(other, Invariant):
            return NotImplemented
        return add(self, -other)

    def __mul__(self, n):
        if isinstance(n, bool) or not isinstance(n, int):
            return NotImplemented
        return scale(self, n)

    __rmul__ = __mul__

    def __str__(self):
        return f"{self.num}/{self.den}"


def add(a: Invariant, b: Invariant) -> Invariant:
    return Invariant(a.num * b.den + b.num * a.den, a.den * b.den)


def scale(a: Invariant, n: int) -> Invariant:
    """``n * a`` in Q/Z; the order drops to ``order(a) / gcd(order(a), n)``."""
    return Invariant(a.num * n, a.den)


def order(a: Invariant) -> int:
    return a.den


def same_cyclic_subgroup(a: Invariant, b: Invariant) -> bool:
    """Decide whether ``a`` and ``b`` generate the same subgroup of Q/Z.

    Cyclic subgroups of Q/Z are determined by their order (the subgroup of
    order n is ``(1/n)Z/Z``), so equal orders is the whole test.
    """
    return a.den == b.den


def primary_part(a: Invariant, p: int) -> Invariant:
    """The p-primary component of ``a``.

    Splits ``den = p^k * m`` and uses ``1 = u*m + v*p^k`` with ``u = m^-1 mod
    p^k``; the p-part is then ``num*u / p^k``.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    pk, m = split_prime_part(a.den, p)
    if pk == 1:
        return Invariant.zero()
    u = pow(m, -1, pk)
    return Invariant(a.num * u, pk)


def primary_decomposition(a: Invariant) -> dict[int, Invariant]:
    """All nonzero primary parts of ``a``, keyed by prime."""
    return {p: primary_part(a, p) for p in sorted(factor(a.den))}


@dataclass(frozen=True)
class CyclicSubgroup:
    """The subgroup of Q/Z generated by ``generator``."""

    generator: Invariant

    @property
    def size(self) -> int:
        return self.generator.den

    def elements(self) -> frozenset[Invariant]:
        return frozenset(scale(self.generator, k) for k in range(self.size))

    def __contains__(self, x: Invariant) -> bool:
        # (1/n)Z/Z contains x iff order(x) | n
        return self.size % x.den == 0

    def __eq__(self, other):
        if not isinstance(other, CyclicSubgroup):
            return NotImplemented
        return same_cyclic_subgroup(self.generator, other.generator)

    def __hash__(self):
        return hash(self.size)
