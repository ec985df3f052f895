"""
Certificate Data Transfer Objects
"""
from dataclasses import dataclass, field
from typing import Optional, Tuple

from ...models.polycategory import PolyMap


@dataclass
class FactorizationFailure:
    """A target polymap with zero or several factorizations"""
    target: PolyMap
    factorizations: Tuple[PolyMap, ...] = ()

    def describe(self) -> str:
        if not self.factorizations:
            return f"no factorization of {self.target}"
        found = ', '.join(f.id for f in self.factorizations)
        return f"{len(self.factorizations)} factorizations of {self.target}: {found}"


@dataclass
class UniversalityCertificate:
    """Outcome of a universality check at one position"""
    polymap: PolyMap
    side: str
    index: int
    checked_instances: int = 0
    bound: int = 0
    bound_relative: bool = False
    skipped_instances: int = 0
    failure: Optional[FactorizationFailure] = None

    @property
    def passed(self) -> bool:
        return self.failure is None

    def describe(self) -> str:
        where = f"{self.polymap} {self.side}-universal at {self.index}"
        if self.passed:
            return f"{where}: {self.checked_instances} instances factor uniquely"
        return f"{where} fails: {self.failure.describe()}"


@dataclass
class UniversalObjectResult:
    """A universal object found by search, with its witness and certificate"""
    object: str
    witness: PolyMap
    kind: str
    certificate: Optional[UniversalityCertificate] = None
    partner: Optional[PolyMap] = None  # cap of a dual pair

    def describe(self) -> str:
        text = f"{self.kind} {self.object} via {self.witness}"
        if self.partner is not None:
            text += f" and {self.partner}"
        return text


@dataclass
class CartesianCertificate:
    """Outcome of a cartesianness check relative to a functor"""
    polymap: PolyMap
    side: str
    index: int
    functor: str
    checked_instances: int = 0
    bound: int = 0
    bound_relative: bool = False
    failure: Optional[FactorizationFailure] = None
    base: Optional[PolyMap] = None

    @property
    def passed(self) -> bool:
        return self.failure is None

    def describe(self) -> str:
        where = f"{self.polymap} {self.side}-cartesian at {self.index} over {self.functor}"
        if self.passed:
            return f"{where}: {self.checked_instances} instances lift uniquely"
        base = f" (over base {self.base})" if self.base is not None else ''
        return f"{where} fails{base}: {self.failure.describe()}"


@dataclass
class Lift:
    """A pullback or pushforward: the fibre object and its cartesian polymap"""
    object: str
    polymap: PolyMap
    certificate: CartesianCertificate = field(repr=False, default=None)

    def describe(self) -> str:
        return f"{self.object} via {self.polymap}"
