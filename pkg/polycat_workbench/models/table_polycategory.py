"""
Table Polycategories
Arity-bounded germs presented by explicit hom, identity and composition tables
"""
import logging
from collections import defaultdict
from typing import Dict, Iterable, Iterator, Mapping, Optional, Sequence, Tuple

from ..constants import ERROR_MESSAGES
from ..exceptions import InvariantError, OutOfBound, PolycatError
from ..utils import lists_up_to
from .polycategory import Boundary, FinPolycategory, PolyMap, plan_composition, try_plan

_logger = logging.getLogger(__name__)

CompositionKey = Tuple[PolyMap, int, PolyMap, int]


class TablePolycategory(FinPolycategory):
    """
    Polycategory germ: homs nonempty only up to the arity bound

    Composition is a table defined exactly on the planar requests whose
    composite stays within the bound. Laws are only asserted where every
    term stays in bound; every decision on a table is bound-relative.
    """

    def __init__(self, objects: Iterable[str], arity_bound: int, polymaps: Iterable[PolyMap],
                 identities: Mapping[str, PolyMap], composition: Mapping[CompositionKey, PolyMap],
                 name: str = '', validate: bool = True):
        if arity_bound < 1:
            raise InvariantError(f"Arity bound must be positive, got {arity_bound}", check='arity_bound')
        self._objects = tuple(sorted(set(objects)))
        self._bound = arity_bound
        self.name = name or 'table'
        homs = defaultdict(list)
        for f in polymaps:
            homs[f.boundary].append(f)
        self._homs: Dict[Boundary, Tuple[PolyMap, ...]] = {
            boundary: tuple(sorted(set(maps))) for boundary, maps in homs.items()
        }
        self._identities = dict(identities)
        self._composition = dict(composition)
        if validate:
            self.validate()

    @property
    def objects(self) -> Tuple[str, ...]:
        return self._objects

    @property
    def arity_bound(self) -> int:
        return self._bound

    @property
    def bound_relative(self) -> bool:
        return True

    @property
    def composition_table(self) -> Dict[CompositionKey, PolyMap]:
        return dict(self._composition)

    def hom(self, domain, codomain) -> Tuple[PolyMap, ...]:
        boundary = Boundary(tuple(domain), tuple(codomain))
        self.check_bound(boundary)
        return self._homs.get(boundary, ())

    def identity(self, obj: str) -> PolyMap:
        try:
            return self._identities[obj]
        except KeyError:
            raise PolycatError(f"Unknown object {obj} in {self.name}")

    def compose(self, f: PolyMap, i: int, g: PolyMap, j: int) -> PolyMap:
        boundary = plan_composition(f.boundary, i, g.boundary, j)
        if not self.within_bound(boundary):
            raise OutOfBound(f"{ERROR_MESSAGES['out_of_bound']}: {boundary} exceeds {self._bound}",
                             arity=boundary.shape, bound=self._bound)
        try:
            return self._composition[(f, i, g, j)]
        except KeyError:
            raise PolycatError(f"No composition entry for {f.id}[{i}] into {g.id}[{j}] in {self.name}")

    def boundaries(self) -> Iterator[Boundary]:
        return iter(sorted(self._homs, key=lambda b: (len(b.domain), len(b.codomain), b)))

    def polymaps(self) -> Iterator[PolyMap]:
        for boundary in self.boundaries():
            yield from self._homs[boundary]

    def validate(self):
        """
        Check identities, boundaries and exact definedness of composition

        Raises:
            InvariantError: naming the failing check
        """
        for boundary in self._homs:
            if not self.within_bound(boundary):
                raise InvariantError(f"Hom {boundary} exceeds arity bound {self._bound}", check='bound')
            for obj in boundary.domain + boundary.codomain:
                if obj not in self._objects:
                    raise InvariantError(f"Unknown object {obj} in hom {boundary}", check='objects')
        for obj in self._objects:
            identity = self._identities.get(obj)
            if identity is None or identity.boundary != Boundary((obj,), (obj,)):
                raise InvariantError(f"identity({obj}) must have boundary {obj} -> {obj}", check='identity')
            if identity not in self._homs.get(identity.boundary, ()):
                raise InvariantError(f"identity({obj}) is not a listed polymap", check='identity')
        maps = list(self.polymaps())
        expected = 0
        for f in maps:
            for i in range(len(f.codomain)):
                for g in maps:
                    for j in range(len(g.domain)):
                        boundary = try_plan(f.boundary, i, g.boundary, j)
                        if boundary is None or not self.within_bound(boundary):
                            continue
                        expected += 1
                        result = self._composition.get((f, i, g, j))
                        if result is None:
                            raise InvariantError(
                                f"Composition undefined for planar request {f.id}[{i}] into {g.id}[{j}]",
                                check='composition_total')
                        if result.boundary != boundary or result not in self._homs.get(boundary, ()):
                            raise InvariantError(
                                f"Composite of {f.id}[{i}] into {g.id}[{j}] has wrong boundary {result.boundary}",
                                check='composite_boundary')
        if expected != len(self._composition):
            raise InvariantError(
                f"Composition table has {len(self._composition) - expected} entries outside planar in-bound requests",
                check='composition_exact')
        _logger.debug(f"Validated table polycategory {self.name}: {len(maps)} polymaps, {expected} composites")

    def with_composition(self, overrides: Mapping[CompositionKey, PolyMap], name: Optional[str] = None
                         ) -> 'TablePolycategory':
        """Copy with some composition entries replaced (used to build mutants)"""
        composition = dict(self._composition)
        composition.update(overrides)
        return TablePolycategory(self._objects, self._bound, self.polymaps(), self._identities,
                                 composition, name or f"{self.name}-mutant")


def materialize(P: FinPolycategory, arity_bound: Optional[int] = None, name: str = '') -> TablePolycategory:
    """
    Tabulate a polycategory up to an arity bound

    Args:
        P: Any finite presentation
        arity_bound: Bound of the germ (defaults to P's bound)
        name: Name of the result

    Returns:
        TablePolycategory germ of P, closed under every composite within the bound
    """
    bound = arity_bound or P.arity_bound
    if P.bound_relative:
        bound = min(bound, P.arity_bound)
    maps = []
    for domain in lists_up_to(P.objects, bound):
        for codomain in lists_up_to(P.objects, bound):
            maps.extend(P.hom(domain, codomain))
    composition = {}
    for f in maps:
        for i in range(len(f.codomain)):
            for g in maps:
                for j in range(len(g.domain)):
                    boundary = try_plan(f.boundary, i, g.boundary, j)
                    if boundary is None or len(boundary.domain) > bound or len(boundary.codomain) > bound:
                        continue
                    composition[(f, i, g, j)] = P.compose(f, i, g, j)
    identities = {obj: P.identity(obj) for obj in P.objects}
    return TablePolycategory(P.objects, bound, maps, identities, composition,
                             name or f"{P.name}@{bound}", validate=False)


def identities_only(objects: Sequence[str], arity_bound: int, name: str = '') -> TablePolycategory:
    """Polycategory whose only polymaps are identities"""
    identities = {obj: PolyMap(f"id_{obj}", Boundary((obj,), (obj,))) for obj in objects}
    composition = {(ident, 0, ident, 0): ident for ident in identities.values()}
    return TablePolycategory(objects, arity_bound, identities.values(), identities, composition,
                             name or f"identities({','.join(sorted(objects))})")
