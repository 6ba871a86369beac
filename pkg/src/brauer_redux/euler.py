"""Riemann-Roch and numerical-polynomial arithmetic for twisted sheaves.

Covers the curve formula chi = deg + rank * (1 - g), Hilbert-type polynomials
m -> chi(V (x) L^m) with their t-th finite difference, and the rank and
period-index arithmetic coming from the Fourier-Mukai transform on a
principally polarized abelian variety.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Sequence

from .errors import BrauerReduxError

__all__ = [
    "MAX_DEGREE",
    "NumericalPolynomial",
    "RRInput",
    "twisted_euler_char",
    "alternating_binomial_sum",
    "leading_coefficient_times_factorial",
    "fm_twisted_rank",
    "period_index_bound_check",
]

MAX_DEGREE = 12


def _frac(x) -> Fraction:
    if isinstance(x, float):
        raise TypeError("use exact rationals, not floats")
    return Fraction(x)


class NumericalPolynomial:
    """Integer-valued polynomial with rational coefficients.

    Coefficients are given in ascending monomial order.  Construction fails
    unless the polynomial takes integer values on Z, which is checked on its
    coordinates in the binomial basis ``C(m, k)``.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Sequence, *, check: bool = True):
        cs = [_frac(c) for c in coeffs]
        while len(cs) > 1 and cs[-1] == 0:
            cs.pop()
        if not cs:
            cs = [Fraction(0)]
        if len(cs) - 1 > MAX_DEGREE:
            raise BrauerReduxError(f"degree {len(cs) - 1} exceeds {MAX_DEGREE}")
        self._coeffs = tuple(cs)
        if check:
            bad = [c for c in self.binomial_coordinates() if c.denominator != 1]
            if bad:
                raise BrauerReduxError(f"polynomial {self} is not integer-valued")

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._coeffs

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        if len(self._coeffs) == 1 and self._coeffs[0] == 0:
            return -1
        return len(self._coeffs) - 1

    @property
    def leading(self) -> Fraction:
        return self._coeffs[-1]

    def __call__(self, m) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self._coeffs):
            acc = acc * m + c
        return acc

    def binomial_coordinates(self) -> list[Fraction]:
        """``b`` with ``self(m) == sum(b[k] * C(m, k))``; ``b[k]`` is the k-th forward difference at 0."""
        n = len(self._coeffs) - 1
        vals = [self(j) for j in range(n + 1)]
        return [
            sum((-1) ** (k - j) * comb(k, j) * vals[j] for j in range(k + 1))
            for k in range(n + 1)
        ]

    @classmethod
    def from_binomial(cls, coords: Sequence) -> NumericalPolynomial:
        """Build ``sum(coords[k] * C(m, k))`` in the monomial basis."""
        out = [Fraction(0)] * max(len(coords), 1)
        for k, b in enumerate(coords):
            b = _frac(b)
            if b == 0:
                continue
            # C(m, k) = m (m-1) ... (m-k+1) / k!
            poly = [Fraction(1)]
            for j in range(k):
                poly = [Fraction(0)] + poly
                for s in range(len(poly) - 1):
                    poly[s] -= j * poly[s + 1]
            for s, c in enumerate(poly):
                out[s] += b * c / factorial(k)
        return cls(out)

    def __eq__(self, other):
        if not isinstance(other, NumericalPolynomial):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(self._coeffs)

    def __repr__(self):
        return f"NumericalPolynomial({[str(c) for c in self._coeffs]})"

    def __str__(self):
        terms = [f"({c})*m^{k}" for k, c in enumerate(self._coeffs) if c]
        return " + ".join(terms) or "0"

    @classmethod
    def from_json(cls, obj, *, check: bool = True) -> NumericalPolynomial:
        coeffs = obj["coeffs"] if isinstance(obj, dict) else obj
        return cls([Fraction(str(c)) for c in coeffs], check=check)

    def to_json(self):
        return {"coeffs": [str(c) for c in self._coeffs]}


@dataclass(frozen=True)
class RRInput:
    """Degree, rank and genus for the twisted Riemann-Roch formula.

    Twisted degrees live in ``(1/n) Z``; use :meth:`from_scaled` to pass
    ``n * deg`` and ``n`` and get the integral degree back.
    """

    deg: int
    rank: int
    genus: int

    def __post_init__(self):
        if self.rank < 1:
            raise BrauerReduxError("rank must be >= 1")
        if self.genus < 0:
            raise BrauerReduxError("genus must be >= 0")

    @classmethod
    def from_scaled(cls, scaled_deg: int, n: int, rank: int, genus: int) -> RRInput:
        if n < 1:
            raise BrauerReduxError("n must be >= 1")
        if scaled_deg % n:
            raise BrauerReduxError(f"degree {scaled_deg}/{n} is not an integer")
        return cls(scaled_deg // n, rank, genus)


def twisted_euler_char(x: RRInput) -> int:
    return x.deg + x.rank * (1 - x.genus)


def alternating_binomial_sum(chi: NumericalPolynomial, t: int, m: int) -> Fraction:
    """``sum_j (-1)^j C(t, j) chi(m + t - j)``, the t-th forward difference at m."""
    if t < 0:
        raise BrauerReduxError("t must be non-negative")
    return sum(
        ((-1) ** j * comb(t, j) * chi(m + t - j) for j in range(t + 1)),
        Fraction(0),
    )


def leading_coefficient_times_factorial(chi: NumericalPolynomial, t: int) -> Fraction:
    if chi.degree != t:
        raise BrauerReduxError(f"polynomial has degree {chi.degree}, expected {t}")
    return factorial(t) * chi.leading


def fm_twisted_rank(g: int, n: int) -> int:
    """Rank ``n**g`` of the transform of a line bundle numerically equal to L^n.

    Its Euler characteristic squares to ``#K(L^n) = #A[n] = n**(2g)``.
    """
    if g < 1 or n < 1:
        raise BrauerReduxError("g and n must be positive")
    rank = n**g
    assert rank * rank == n ** (2 * g)
    return rank


def period_index_bound_check(per: int, ind: int, g: int, odd_order: bool = False) -> bool:
    """True iff ``ind`` divides ``per**g``.

    With ``odd_order`` set, ``per`` is the period of the Brauer class rather
    than of the torsor; the divisibility tested is the same.
    """
    if per < 1 or ind < 1 or g < 1:
        raise BrauerReduxError("per, ind and g must be positive")
    return per**g % ind == 0
