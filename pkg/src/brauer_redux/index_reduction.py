"""Index of a Brauer class after pulling back to the function field of a curve.

The basic quantity is the beta-index reduction of a family of obstructed
points,

    iota_beta(points) = min over p of [kappa(p):k] * ind(alpha(p) + beta),

and the index of ``beta`` over k(X) is the minimum of ``r * iota_beta`` over
the moduli strata of rank ``r | i``.  For genus-1 curves over local fields the
answer reduces to a search over extension degrees, and in the capacity model
to a closed form.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from types import MappingProxyType
from typing import Iterable, Mapping

from ._arith import is_prime, split_prime_part, vp
from .brauer import LocalClass, LocalExtension, local_index, restrict_local
from .curves import CapacityCurveModel, CurveModel, curve_index_after_extension
from .errors import BoundExhaustedError, BrauerReduxError, NoPointsError
from .invariants import Invariant, add

__all__ = [
    "ObstructedPoint",
    "ModuliData",
    "iota",
    "iota_witness",
    "general_index_reduction",
    "general_index_reduction_witness",
    "svdb_divisibility_check",
    "genus1_splits",
    "default_search_bound",
    "genus1_index_reduction_min",
    "genus1_index_reduction_gcd",
    "genus1_search",
    "capacity_closed_form",
    "closed_form_for",
    "homogeneous_reduction_check",
]


@dataclass(frozen=True)
class ObstructedPoint:
    """A closed point of a moduli space with its Brauer obstruction."""

    residue_degree: int
    obstruction: Invariant = field(default_factory=Invariant.zero)

    def __post_init__(self):
        if int(self.residue_degree) < 1:
            raise BrauerReduxError("residue degree must be >= 1")
        object.__setattr__(self, "residue_degree", int(self.residue_degree))
        object.__setattr__(self, "obstruction", Invariant.parse(self.obstruction))

    def cost(self, beta: Invariant) -> int:
        return self.residue_degree * add(self.obstruction, beta).den

    @classmethod
    def from_json(cls, obj) -> ObstructedPoint:
        if isinstance(obj, Mapping):
            return cls(int(obj["residue_degree"]), Invariant.parse(obj.get("obstruction", "0/1")))
        deg, inv = obj
        return cls(int(deg), Invariant.parse(inv))

    def to_json(self):
        return [self.residue_degree, str(self.obstruction)]


def _points(seq) -> tuple[ObstructedPoint, ...]:
    return tuple(p if isinstance(p, ObstructedPoint) else ObstructedPoint.from_json(p) for p in seq)


@dataclass(frozen=True)
class ModuliData:
    """Point data for the moduli of stable twisted sheaves on a curve X.

    ``i`` is the index of beta over k, ``D`` the index of X and ``delta``
    the index of Pic^1.  ``strata[(r, d)]`` holds the points of the moduli of
    rank ``r`` and degree ``r*d``; the key stores the unmultiplied ``d`` with
    ``0 <= d < D``.  ``deg0_points`` are the points of Pic^0.
    """

    i: int
    D: int
    delta: int
    strata: Mapping[tuple[int, int], tuple[ObstructedPoint, ...]] = field(default_factory=dict)
    deg0_points: tuple[ObstructedPoint, ...] = ()

    def __post_init__(self):
        for name in ("i", "D", "delta"):
            if int(getattr(self, name)) < 1:
                raise BrauerReduxError(f"{name} must be a positive integer")
        if self.D % self.delta:
            raise BrauerReduxError(f"delta={self.delta} does not divide D={self.D}")
        clean = {}
        for key, pts in self.strata.items():
            r, d = (int(x) for x in key)
            if r < 1 or not 0 <= d < self.D:
                raise BrauerReduxError(f"stratum key {(r, d)} outside r >= 1, 0 <= d < {self.D}")
            clean[(r, d)] = _points(pts)
        object.__setattr__(self, "strata", MappingProxyType(dict(sorted(clean.items()))))
        object.__setattr__(self, "deg0_points", _points(self.deg0_points))

    @classmethod
    def from_json(cls, obj) -> ModuliData:
        strata = {}
        for entry in obj.get("strata", []):
            key = (int(entry["r"]), int(entry["d"]))
            strata[key] = strata.get(key, ()) + _points(entry.get("points", []))
        return cls(
            int(obj["i"]),
            int(obj["D"]),
            int(obj.get("delta", 1)),
            strata,
            _points(obj.get("deg0_points", [])),
        )

    def to_json(self):
        return {
            "i": self.i,
            "D": self.D,
            "delta": self.delta,
            "strata": [
                {"r": r, "d": d, "points": [p.to_json() for p in pts]}
                for (r, d), pts in self.strata.items()
            ],
            "deg0_points": [p.to_json() for p in self.deg0_points],
        }


def iota_witness(points: Iterable[ObstructedPoint], beta: Invariant):
    """Return ``(iota, minimizing point)``; ties go to the first point."""
    best = None
    for pt in points:
        c = pt.cost(beta)
        if best is None or c < best[0]:
            best = (c, pt)
    if best is None:
        raise NoPointsError()
    return best


def iota(points: Iterable[ObstructedPoint], beta: Invariant) -> int:
    return iota_witness(points, beta)[0]


def general_index_reduction_witness(data: ModuliData, beta: Invariant):
    """Return ``(index, (r, d, point))`` realizing the minimum.

    Strata with ``r`` not dividing ``i``, and strata with no points, are
    skipped.
    """
    best = None
    for (r, d), pts in data.strata.items():
        if data.i % r or not pts:
            continue
        val, pt = iota_witness(pts, beta)
        val *= r
        if best is None or val < best[0]:
            best = (val, (r, d, pt))
    if best is None:
        raise NoPointsError("no points in any stratum of rank dividing i")
    return best


def general_index_reduction(data: ModuliData, beta: Invariant) -> int:
    return general_index_reduction_witness(data, beta)[0]


def _rank1_min(data: ModuliData, beta: Invariant):
    vals = [iota(data.strata[(1, d)], beta) for d in range(data.D) if data.strata.get((1, d))]
    return min(vals) if vals else None


def svdb_divisibility_check(data: ModuliData, beta: Invariant, computed_index: int) -> bool:
    """Check that the smallest rank-1 reduction divides ``delta * computed_index``.

    This holds for genuine geometric data; a False answer means the
    scenario is inconsistent.  With no rank-1 points at all the minimum is
    infinite and the check fails.
    """
    m = _rank1_min(data, beta)
    if m is None:
        return False
    return (data.delta * computed_index) % m == 0


def homogeneous_reduction_check(data: ModuliData, beta: Invariant, computed_index: int) -> bool:
    """Whether the index over the function field is realized by Pic^0 points."""
    if not data.deg0_points:
        raise NoPointsError("no degree-0 points")
    return computed_index == iota(data.deg0_points, beta)


# -- genus one curves over local fields -------------------------------------


def _as_local(beta) -> LocalClass:
    if isinstance(beta, LocalClass):
        return beta
    return LocalClass(Invariant.parse(beta))


def genus1_splits(beta, model: CurveModel, ext: LocalExtension | int) -> bool:
    """Does ``beta`` die on the function field of C after base change to E?

    Over a local field a class splits on k(C) iff its index divides the index
    of the curve.
    """
    beta = _as_local(beta)
    return curve_index_after_extension(model, ext) % local_index(restrict_local(beta, ext)) == 0


def default_search_bound(beta, model: CurveModel) -> int:
    i = local_index(_as_local(beta))
    if isinstance(model, CapacityCurveModel):
        return i * model.p ** (model.cpc + 1)
    return i * max([1, *model.table])


def _check_bound(i: int, bound: int) -> None:
    # degree i always kills beta, so bound >= i guarantees a hit
    if bound < i:
        raise BoundExhaustedError(f"search bound {bound} is below ind(beta) = {i}")


def genus1_index_reduction_min(beta, model: CurveModel, bound: int | None = None) -> int:
    """Smallest degree ``d <= bound`` with ``genus1_splits`` true."""
    return genus1_search(beta, model, bound)["min"]


def _gcd_route(i: int, model: CurveModel, bound: int):
    # A qualifying d needs i/gcd(i, d) | ind(C_E), and ind(C_E) divides
    # model.index_bound(), so d must be a multiple of step.
    step = i // gcd(i, model.index_bound())
    g = 0
    drops = []
    for d in range(step, bound + 1, step):
        if g and d % g == 0:
            continue
        if model.index_after(d) % (i // gcd(i, d)) == 0:
            g = gcd(g, d)
            drops.append(d)
            if g == step:
                break
    return g, drops


def genus1_index_reduction_gcd(beta, model: CurveModel, bound: int | None = None) -> int:
    """gcd of all degrees ``d <= bound`` with ``i/gcd(i, d) | ind(C_E)``."""
    return genus1_search(beta, model, bound)["gcd"]


def genus1_search(beta, model: CurveModel, bound: int | None = None, routes=("min", "gcd")):
    """Run the requested routes and return values with their witnesses.

    The result maps ``"min"``/``"gcd"`` to values, plus ``"bound"``,
    ``"min_degree"`` and ``"gcd_degrees"`` (the degrees at which the running
    gcd dropped).
    """
    beta = _as_local(beta)
    i = local_index(beta)
    if bound is None:
        bound = default_search_bound(beta, model)
    _check_bound(i, bound)
    out = {"bound": bound}
    if "min" in routes:
        for d in range(1, bound + 1):
            if genus1_splits(beta, model, d):
                out["min"] = d
                out["min_degree"] = d
                break
        else:
            raise BoundExhaustedError(f"no splitting degree up to {bound}")
    if "gcd" in routes:
        g, drops = _gcd_route(i, model, bound)
        if not g:
            raise BoundExhaustedError(f"no qualifying degree up to {bound}")
        out["gcd"] = g
        out["gcd_degrees"] = drops
    return out


def capacity_closed_form(m: int, p: int, n: int, cpc: int) -> int:
    """Index over k(C) of a class of index ``m * p**n`` (p prime, p not dividing m).

    ``m * p**n`` when ``cpc < n - 1``, otherwise ``m * p**(n - 1)``.
    """
    if not is_prime(p):
        raise BrauerReduxError(f"{p} is not prime")
    if m < 1 or m % p == 0:
        raise BrauerReduxError(f"m={m} must be positive and prime to p={p}")
    if n < 1:
        raise BrauerReduxError("n must be positive")
    if cpc < 0:
        raise BrauerReduxError("capacity must be non-negative")
    return m * p**n if cpc < n - 1 else m * p ** (n - 1)


def closed_form_for(beta, model: CapacityCurveModel) -> int:
    """Closed form for a capacity model; needs ``p | ind(beta)``."""
    i = local_index(_as_local(beta))
    pn, m = split_prime_part(i, model.p)
    if pn == 1:
        raise BrauerReduxError(f"closed form needs p={model.p} to divide ind(beta)={i}")
    return capacity_closed_form(m, model.p, vp(pn, model.p), model.cpc)
