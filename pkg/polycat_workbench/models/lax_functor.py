"""
Lax Normal Functors into Distributors
Fibre categories, distributors over base polymaps, normality and laxity tables
"""
import logging
from typing import Dict, Iterator, Mapping, Optional, Tuple

from ..exceptions import PolycatError
from .distributor import Element, FinDistributor
from .fin_category import FinCategory
from .polycategory import FinPolycategory, PolyMap

_logger = logging.getLogger(__name__)

LaxityKey = Tuple[PolyMap, int, PolyMap, int]
Laxity = Dict[LaxityKey, Dict[Tuple[Element, Element], str]]


def composite_tuple(left: Tuple[Tuple[str, ...], Tuple[str, ...]], i: int,
                    right: Tuple[Tuple[str, ...], Tuple[str, ...]], j: int) -> Tuple[Tuple[str, ...], Tuple[str, ...]]:
    """Object tuples of a composite element, laid out like a composite boundary"""
    (lin, lout), (rin, rout) = left, right
    return rin[:j] + lin + rin[j + 1:], lout[:i] + rout + lout[i + 1:]


class LaxNormalFunctor:
    """
    A lax normal functor from a base polycategory into distributors

    A base polymap f: Γ -> Δ carries a distributor whose inputs are the
    fibres over Γ (acted on contravariantly) and whose outputs are the
    fibres over Δ. normality[A] identifies the elements of the identity
    distributor with fibre morphisms; laxity[(f, i, g, j)][(x, y)] is the
    element of the distributor over g after f assigned to the pair.
    """

    def __init__(self, base: FinPolycategory, fibres: Mapping[str, FinCategory],
                 distributors: Mapping[PolyMap, FinDistributor], normality: Mapping[str, Mapping[Element, str]],
                 laxity: Laxity, name: str = '', construction: str = ''):
        self.base = base
        self.fibres: Dict[str, FinCategory] = dict(fibres)
        self.distributors: Dict[PolyMap, FinDistributor] = dict(distributors)
        self.normality: Dict[str, Dict[Element, str]] = {obj: dict(table) for obj, table in normality.items()}
        self.laxity: Laxity = {key: dict(table) for key, table in laxity.items()}
        self.name = name or 'lax'
        self.construction = construction
        missing = [obj for obj in base.objects if obj not in self.fibres]
        if missing:
            raise PolycatError(f"{self.name}: no fibre over {', '.join(missing)}")

    def fibre(self, obj: str) -> FinCategory:
        return self.fibres[obj]

    def distributor(self, f: PolyMap) -> FinDistributor:
        try:
            return self.distributors[f]
        except KeyError:
            raise PolycatError(f"{self.name}: no distributor over {f}")

    def base_polymaps(self) -> Iterator[PolyMap]:
        return iter(sorted(self.distributors, key=lambda f: (f.boundary.shape, f.boundary, f.id)))

    def mu(self, f: PolyMap, i: int, g: PolyMap, j: int, x: Element, y: Element) -> Optional[Element]:
        """Laxity applied to a pair; None when the table has no entry"""
        name = self.laxity.get((f, i, g, j), {}).get((x, y))
        if name is None:
            return None
        ins, outs = composite_tuple(x[:2], i, y[:2], j)
        return ins, outs, name

    def unit_element(self, obj: str, morphism_id: str) -> Element:
        """The element of the identity distributor matching a fibre morphism"""
        for element, mid in self.normality[obj].items():
            if mid == morphism_id:
                return element
        raise PolycatError(f"{self.name}: fibre morphism {morphism_id} has no normality element")

    def with_laxity(self, key: LaxityKey, pair: Tuple[Element, Element], name: str) -> 'LaxNormalFunctor':
        """Copy with one laxity entry redirected"""
        laxity = {k: dict(v) for k, v in self.laxity.items()}
        laxity[key][pair] = name
        return LaxNormalFunctor(self.base, self.fibres, self.distributors, self.normality, laxity,
                                name=f"{self.name}-mutant", construction=self.construction)

    def describe(self) -> str:
        elements = sum(d.size() for d in self.distributors.values())
        return (f"{self.name} over {self.base.name}: {len(self.fibres)} fibres, "
                f"{len(self.distributors)} distributors, {elements} elements")
