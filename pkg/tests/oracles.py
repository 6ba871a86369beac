"""Brute-force reference implementations.

Nothing here imports from brauer_redux: these work on plain Fractions and
integer sets so they can check the library independently.
"""

from fractions import Fraction
from functools import reduce
from math import comb, gcd


def mod1(x: Fraction) -> Fraction:
    return x - (x.numerator // x.denominator)


def ind(x: Fraction) -> int:
    """Order of x in Q/Z."""
    return mod1(x).denominator


def subgroup(a: int, n: int) -> frozenset:
    """Subgroup of Z/n generated by a, by listing multiples."""
    return frozenset((k * a) % n for k in range(n))


def valuation(n: int, p: int) -> int:
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e


def capacity_has_point(d: int, p: int, cpc: int) -> bool:
    return valuation(d, p) > cpc


def genus1_splitting_degrees(beta: Fraction, p: int, cpc: int, bound: int):
    """All d <= bound with ind(beta_E) | ind(C_E) in the capacity model."""
    out = []
    for d in range(1, bound + 1):
        curve_index = 1 if capacity_has_point(d, p, cpc) else p
        if curve_index % ind(beta * d) == 0:
            out.append(d)
    return out


def genus1_min_gcd(beta: Fraction, p: int, cpc: int, bound: int):
    ds = genus1_splitting_degrees(beta, p, cpc, bound)
    return min(ds), reduce(gcd, ds)


def flat_general_min(i, strata, beta: Fraction):
    """min of r * deg * ind(obstruction + beta) over every (r, point) with r | i.

    ``strata`` maps (r, d) to a list of (residue_degree, Fraction) pairs.
    """
    costs = [
        r * deg * ind(obs + beta)
        for (r, _d), pts in strata.items()
        if i % r == 0
        for deg, obs in pts
    ]
    return min(costs) if costs else None


def integer_valued_on_window(coeffs, start=-7, width=None) -> bool:
    """Evaluate on deg+1 (or ``width``) consecutive integers and test integrality."""
    deg = len(coeffs) - 1
    width = width or 2 * deg + 1
    for m in range(start, start + width):
        v = sum(Fraction(c) * m**k for k, c in enumerate(coeffs))
        if v.denominator != 1:
            return False
    return True


def binomial_to_monomial(coords):
    """Monomial coefficients of sum coords[k] * C(m, k), via interpolation.

    Evaluates the binomial sum at 0..n and solves the Vandermonde system over
    Fractions by Gaussian elimination.
    """
    n = len(coords) - 1
    xs = list(range(n + 1))
    ys = [sum(Fraction(c) * comb(x, k) for k, c in enumerate(coords)) for x in xs]
    rows = [[Fraction(x) ** j for j in range(n + 1)] + [y] for x, y in zip(xs, ys)]
    for col in range(n + 1):
        piv = next(r for r in range(col, n + 1) if rows[r][col] != 0)
        rows[col], rows[piv] = rows[piv], rows[col]
        pv = rows[col][col]
        rows[col] = [v / pv for v in rows[col]]
        for r in range(n + 1):
            if r != col and rows[r][col] != 0:
                f = rows[r][col]
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[col])]
    return [rows[j][-1] for j in range(n + 1)]
