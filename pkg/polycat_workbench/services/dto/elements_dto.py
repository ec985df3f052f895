"""
Elements Data Transfer Objects
"""
from dataclasses import dataclass, field
from typing import Dict, Tuple

from ...models.distributor import Element
from ...models.functor import PolyFunctor
from ...models.polycategory import PolyMap
from ...models.table_polycategory import TablePolycategory


def element_object(base_obj: str, fibre_obj: str) -> str:
    """Name of the object (A, R) of a polycategory of elements"""
    return f"{base_obj}:{fibre_obj}"


def element_polymap_id(f: PolyMap, name: str) -> str:
    return f"{f.id}|{name}"


@dataclass
class ElementsConstruction:
    """The polycategory of elements with its projection and the origin of each polymap"""
    polycategory: TablePolycategory
    projection: PolyFunctor
    origin: Dict[PolyMap, Tuple[PolyMap, Element]] = field(default_factory=dict, repr=False)

    def over(self, f: PolyMap) -> Tuple[PolyMap, ...]:
        """Polymaps of the construction lying over the base polymap f"""
        return tuple(sorted(e for e, (base, _) in self.origin.items() if base == f))

    def describe(self) -> str:
        P = self.polycategory
        return f"{P.name}: {len(P.objects)} objects, {len(self.origin)} polymaps over {self.projection.target.name}"
