"""Genus-1 curves over a local field, seen only through their index.

Two models are provided.  :class:`CapacityCurveModel` is a curve of prime
index ``p`` whose points over an extension depend only on the p-adic
valuation of the degree: ``C(E)`` is nonempty iff ``v_p([E:k]) > cpc``.
:class:`TabulatedCurveModel` takes an explicit degree -> index table, for
data computed elsewhere.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Mapping, Union

from ._arith import is_prime, lcm_all, vp
from .brauer import LocalExtension
from .errors import BrauerReduxError

__all__ = [
    "SPLIT",
    "CapacityCurveModel",
    "TabulatedCurveModel",
    "CurveModel",
    "curve_index_after_extension",
    "capacity_of",
    "model_from_json",
]

#: returned by :func:`capacity_of` when no pointless extension exists
SPLIT = "split"


@dataclass(frozen=True)
class CapacityCurveModel:
    p: int
    cpc: int = 0

    def __post_init__(self):
        if not is_prime(self.p):
            raise BrauerReduxError(f"curve index {self.p} is not prime")
        if self.cpc < 0:
            raise BrauerReduxError("capacity must be non-negative")

    def has_point(self, degree: int) -> bool:
        return vp(degree, self.p) > self.cpc

    def index_after(self, degree: int) -> int:
        return 1 if self.has_point(degree) else self.p

    @property
    def index(self) -> int:
        return self.p

    def index_bound(self) -> int:
        """A common multiple of every index this curve can take."""
        return self.p

    def to_json(self):
        return {"model": "capacity", "p": self.p, "cpc": self.cpc}


@dataclass(frozen=True)
class TabulatedCurveModel:
    """Curve index looked up by extension degree, ``default_index`` otherwise."""

    table: Mapping[int, int] = field(default_factory=dict)
    default_index: int = 1

    def __post_init__(self):
        clean = {}
        for d, idx in self.table.items():
            d, idx = int(d), int(idx)
            if d < 1 or idx < 1:
                raise BrauerReduxError(f"bad table entry {d}: {idx}")
            clean[d] = idx
        if self.default_index < 1:
            raise BrauerReduxError("default index must be >= 1")
        object.__setattr__(self, "table", MappingProxyType(dict(sorted(clean.items()))))

    def index_after(self, degree: int) -> int:
        return self.table.get(degree, self.default_index)

    def has_point(self, degree: int) -> bool:
        # over a local field a genus-1 curve has a point iff its index is 1
        return self.index_after(degree) == 1

    @property
    def index(self) -> int:
        return self.index_after(1)

    def index_bound(self) -> int:
        return lcm_all([self.default_index, *self.table.values()])

    def to_json(self):
        return {
            "model": "table",
            "table": {str(k): v for k, v in self.table.items()},
            "default": self.default_index,
        }


CurveModel = Union[CapacityCurveModel, TabulatedCurveModel]


def _degree(ext) -> int:
    return ext.degree if isinstance(ext, LocalExtension) else int(ext)


def curve_index_after_extension(model: CurveModel, ext: LocalExtension | int) -> int:
    return model.index_after(_degree(ext))


def capacity_of(model: CurveModel, search_bound: int, p: int | None = None):
    """Largest ``v_p(d)`` over degrees ``d <= search_bound`` with no point.

    ``p`` defaults to the curve's index over k, which must then be prime.
    Returns :data:`SPLIT` when every degree up to the bound has a point
    (in particular when the curve already has a k-point).
    """
    if search_bound < 1:
        raise BrauerReduxError("search bound must be >= 1")
    if p is None:
        if isinstance(model, CapacityCurveModel):
            p = model.p
        else:
            p = model.index
            if p == 1:
                return SPLIT
    if not is_prime(p):
        raise BrauerReduxError(f"capacity needs a prime index, got {p}")
    best = None
    for d in range(1, search_bound + 1):
        if not model.has_point(d):
            r = vp(d, p)
            if best is None or r > best:
                best = r
    return SPLIT if best is None else best


def model_from_json(obj) -> CurveModel:
    kind = obj.get("model")
    if kind == "capacity":
        return CapacityCurveModel(int(obj["p"]), int(obj.get("cpc", 0)))
    if kind == "table":
        return TabulatedCurveModel(
            {int(k): int(v) for k, v in obj.get("table", {}).items()},
            int(obj.get("default", 1)),
        )
    raise BrauerReduxError(f"unknown curve model {kind!r}")
