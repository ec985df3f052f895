"""
Fibration Data Transfer Objects
"""
from dataclasses import dataclass, field
from typing import Dict, Tuple

from ...models.functor import PolyFunctor
from ...models.polycategory import PolyMap
from ...models.table_polycategory import TablePolycategory

Shape = Tuple[int, int]


@dataclass
class FrobeniusMonoid:
    """An arity-indexed family (m,n) -> A^m -> A^n closed under in-bound composition"""
    object: str
    family: Dict[Shape, PolyMap]
    bound: int
    functor: PolyFunctor = field(default=None, repr=False, compare=False)

    def at(self, m: int, n: int) -> PolyMap:
        return self.family[(m, n)]

    def describe(self) -> str:
        entries = ' '.join(f"{m}{n}={f.id}" for (m, n), f in sorted(self.family.items()))
        return f"frobenius({self.object}) {entries}"


@dataclass
class RefinementPullback:
    """E x_B B' with its two projections"""
    polycategory: TablePolycategory
    to_source: PolyFunctor
    to_refinement: PolyFunctor
