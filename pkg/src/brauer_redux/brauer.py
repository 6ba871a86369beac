"""Local and global Brauer classes as invariant data.

A local class is a single invariant in Q/Z; restriction along a finite
extension of degree d multiplies the invariant by d.  A global class is a
finite map from place labels to local invariants summing to zero.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Mapping, Optional

from ._arith import lcm_all
from .errors import BrauerReduxError, ReciprocityError
from .invariants import Invariant, add, scale

__all__ = [
    "LocalClass",
    "LocalExtension",
    "GlobalClass",
    "GlobalExtensionProfile",
    "local_index",
    "restrict_local",
    "global_index",
    "restrict_global",
]


@dataclass(frozen=True)
class LocalClass:
    inv: Invariant = field(default_factory=Invariant.zero)

    def __post_init__(self):
        object.__setattr__(self, "inv", Invariant.parse(self.inv))

    @property
    def index(self) -> int:
        return self.inv.den

    # period equals index over a local field
    period = index

    @classmethod
    def from_json(cls, obj) -> LocalClass:
        if isinstance(obj, Mapping):
            return cls(Invariant.parse(obj["inv"]))
        return cls(Invariant.parse(obj))

    def to_json(self):
        return {"inv": str(self.inv)}


@dataclass(frozen=True)
class LocalExtension:
    """Finite extension of a local field, recorded by its degree.

    Ramification ``e`` and inertia ``f`` are optional metadata; index
    computations only look at ``degree``.
    """

    degree: int
    e: Optional[int] = None
    f: Optional[int] = None

    def __post_init__(self):
        if self.degree < 1:
            raise BrauerReduxError(f"extension degree must be >= 1, got {self.degree}")
        if (self.e is None) != (self.f is None):
            raise BrauerReduxError("give both e and f or neither")
        if self.e is not None and self.e * self.f != self.degree:
            raise BrauerReduxError(
                f"e*f = {self.e * self.f} does not match degree {self.degree}"
            )

    @classmethod
    def from_json(cls, obj) -> LocalExtension:
        if isinstance(obj, int):
            return cls(obj)
        return cls(int(obj["degree"]), obj.get("e"), obj.get("f"))

    def to_json(self):
        out = {"degree": self.degree}
        if self.e is not None:
            out.update(e=self.e, f=self.f)
        return out


def local_index(c: LocalClass) -> int:
    return c.inv.den


def restrict_local(c: LocalClass, ext: LocalExtension | int) -> LocalClass:
    """Base change of a local class; its index becomes ``i / gcd(i, [E:k])``."""
    d = ext.degree if isinstance(ext, LocalExtension) else int(ext)
    return LocalClass(scale(c.inv, d))


class GlobalClass:
    """Brauer class over a global field, given by its local invariants.

    Zero entries are dropped.  The constructor raises
    :class:`ReciprocityError` unless the invariants sum to 0 in Q/Z.
    """

    __slots__ = ("_places",)

    def __init__(self, places: Mapping[str, object] | None = None):
        clean = {}
        total = Invariant.zero()
        for label, value in (places or {}).items():
            inv = Invariant.parse(value)
            total = add(total, inv)
            if not inv.is_zero():
                clean[str(label)] = inv
        if not total.is_zero():
            raise ReciprocityError(f"local invariants sum to {total}, not 0")
        self._places = MappingProxyType(dict(sorted(clean.items())))

    @property
    def places(self) -> Mapping[str, Invariant]:
        return self._places

    @property
    def index(self) -> int:
        return global_index(self)

    def __eq__(self, other):
        if not isinstance(other, GlobalClass):
            return NotImplemented
        return dict(self._places) == dict(other._places)

    def __hash__(self):
        return hash(tuple(self._places.items()))

    def __repr__(self):
        inner = ", ".join(f"{k}: {v}" for k, v in self._places.items())
        return f"GlobalClass({{{inner}}})"

    @classmethod
    def from_json(cls, obj) -> GlobalClass:
        return cls(obj.get("places", {}))

    def to_json(self):
        return {"places": {k: str(v) for k, v in self._places.items()}}


@dataclass(frozen=True)
class GlobalExtensionProfile:
    """Splitting data of a degree ``total_degree`` extension L/k.

    ``local_degrees[v]`` lists the local degrees [L_w : k_v] of the places w
    above v; each list sums to ``total_degree``.
    """

    total_degree: int
    local_degrees: Mapping[str, tuple[int, ...]] = field(default_factory=dict)

    def __post_init__(self):
        if self.total_degree < 1:
            raise BrauerReduxError("total degree must be >= 1")
        frozen = {}
        for v, degs in self.local_degrees.items():
            degs = tuple(int(x) for x in degs)
            if not degs or min(degs) < 1:
                raise BrauerReduxError(f"place {v}: local degrees must be positive")
            if sum(degs) != self.total_degree:
                raise BrauerReduxError(
                    f"place {v}: local degrees {list(degs)} do not sum to {self.total_degree}"
                )
            frozen[str(v)] = degs
        object.__setattr__(self, "local_degrees", MappingProxyType(frozen))

    @classmethod
    def from_json(cls, obj) -> GlobalExtensionProfile:
        return cls(int(obj["degree"]), obj.get("places", {}))

    def to_json(self):
        return {
            "degree": self.total_degree,
            "places": {k: list(v) for k, v in self.local_degrees.items()},
        }


def global_index(c: GlobalClass) -> int:
    """lcm of the local indices."""
    return lcm_all(inv.den for inv in c.places.values())


def restrict_global(c: GlobalClass, profile: GlobalExtensionProfile) -> GlobalClass:
    """Restrict ``c`` to L.  A place ``v`` splits into ``v.1, v.2, ...``."""
    out = {}
    for v, inv in c.places.items():
        degs = profile.local_degrees.get(v)
        if degs is None:
            raise BrauerReduxError(f"profile does not cover place {v!r} where the class is nonzero")
        for j, d in enumerate(degs, start=1):
            out[f"{v}.{j}"] = scale(inv, d)
    return GlobalClass(out)
