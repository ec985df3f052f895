"""
Finite Categories
Objects, morphisms and composition tables for fibres of lax functors
"""
import logging
from dataclasses import dataclass
from typing import Dict, Iterable, Mapping, Sequence, Tuple

from ..exceptions import InvariantError, PolycatError
from .monoid_polycategory import FiniteMonoid

_logger = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class Morphism:
    id: str
    source: str
    target: str

    def __str__(self) -> str:
        return f"{self.id}: {self.source} -> {self.target}"


class FinCategory:
    """
    A finite category

    composition maps (first, second) to the identifier of second ∘ first,
    for exactly the composable pairs.
    """

    def __init__(self, objects: Iterable[str], morphisms: Iterable[Morphism], identities: Mapping[str, str],
                 composition: Mapping[Tuple[str, str], str], name: str = '', validate: bool = True):
        self.objects: Tuple[str, ...] = tuple(sorted(set(objects)))
        self._morphisms: Dict[str, Morphism] = {}
        for m in morphisms:
            if m.id in self._morphisms:
                raise InvariantError(f"Duplicate morphism {m.id}", check='morphisms')
            self._morphisms[m.id] = m
        self._identities = dict(identities)
        self._composition = dict(composition)
        self.name = name or 'category'
        self._homs: Dict[Tuple[str, str], Tuple[Morphism, ...]] = {}
        for m in sorted(self._morphisms.values()):
            self._homs.setdefault((m.source, m.target), ())
            self._homs[(m.source, m.target)] += (m,)
        if validate:
            self.validate()

    @property
    def morphisms(self) -> Tuple[Morphism, ...]:
        return tuple(sorted(self._morphisms.values()))

    @property
    def composition_table(self) -> Dict[Tuple[str, str], str]:
        return dict(self._composition)

    def morphism(self, morphism_id: str) -> Morphism:
        try:
            return self._morphisms[morphism_id]
        except KeyError:
            raise PolycatError(f"Unknown morphism {morphism_id} in {self.name}")

    def hom(self, source: str, target: str) -> Tuple[Morphism, ...]:
        return self._homs.get((source, target), ())

    def identity(self, obj: str) -> Morphism:
        return self.morphism(self._identities[obj])

    def is_identity(self, m: Morphism) -> bool:
        return self._identities.get(m.source) == m.id

    def compose(self, first: Morphism, second: Morphism) -> Morphism:
        """second ∘ first"""
        if first.target != second.source:
            raise PolycatError(f"{first} and {second} are not composable")
        return self.morphism(self._composition[(first.id, second.id)])

    def validate(self):
        """
        Check identities, exact composition and the category laws

        Raises:
            InvariantError: naming the failing check
        """
        for m in self._morphisms.values():
            if m.source not in self.objects or m.target not in self.objects:
                raise InvariantError(f"{m} leaves the objects of {self.name}", check='objects')
        for obj in self.objects:
            ident = self._morphisms.get(self._identities.get(obj, ''))
            if ident is None or (ident.source, ident.target) != (obj, obj):
                raise InvariantError(f"identity({obj}) must be a listed morphism {obj} -> {obj}",
                                     check='identity')
        composable = [(f, g) for f in self._morphisms.values() for g in self._morphisms.values()
                      if f.target == g.source]
        if len(composable) != len(self._composition):
            raise InvariantError(f"Composition of {self.name} must be defined on exactly the composable pairs",
                                 check='composition_exact')
        for f, g in composable:
            result = self._morphisms.get(self._composition.get((f.id, g.id), ''))
            if result is None or (result.source, result.target) != (f.source, g.target):
                raise InvariantError(f"{g.id} after {f.id} is missing or has the wrong boundary",
                                     check='composition_total')
        for m in self._morphisms.values():
            if (self.compose(self.identity(m.source), m) != m
                    or self.compose(m, self.identity(m.target)) != m):
                raise InvariantError(f"Identity law fails at {m}", check='unit')
        leaving: Dict[str, list] = {obj: [] for obj in self.objects}
        for m in self._morphisms.values():
            leaving[m.source].append(m)
        for f, g in composable:
            for h in leaving[g.target]:
                if self.compose(self.compose(f, g), h) != self.compose(f, self.compose(g, h)):
                    raise InvariantError(f"Associativity fails at {f.id}, {g.id}, {h.id}", check='associativity')
        _logger.debug(f"Validated category {self.name}: {len(self.objects)} objects, "
                      f"{len(self._morphisms)} morphisms")

    def __eq__(self, other) -> bool:
        return (isinstance(other, FinCategory) and self.objects == other.objects
                and self._morphisms == other._morphisms and self._composition == other._composition)

    def __hash__(self):
        return hash((self.objects, tuple(sorted(self._morphisms))))

    def describe(self) -> str:
        return f"{self.name} ({len(self.objects)} objects, {len(self._morphisms)} morphisms)"


def monoid_category(objects: Sequence[str], monoid: FiniteMonoid, name: str = '') -> FinCategory:
    """
    Every hom-set is the monoid, composition is multiplication

    Morphism m: X -> Y is named "m:X>Y". With the trivial monoid this is the
    codiscrete category; with one object it is the monoid as a category.
    """
    morphisms = [Morphism(f"{m}:{x}>{y}", x, y) for x in objects for y in objects for m in monoid.carrier]
    identities = {x: f"{monoid.unit}:{x}>{x}" for x in objects}
    composition = {}
    for x in objects:
        for y in objects:
            for z in objects:
                for a in monoid.carrier:
                    for b in monoid.carrier:
                        composition[(f"{a}:{x}>{y}", f"{b}:{y}>{z}")] = f"{monoid.mult(b, a)}:{x}>{z}"
    return FinCategory(objects, morphisms, identities, composition, name=name or 'monoidal-fibre', validate=False)


def codiscrete(objects: Sequence[str], name: str = '') -> FinCategory:
    trivial = FiniteMonoid(('e',), 'e', {('e', 'e'): 'e'})
    return monoid_category(objects, trivial, name=name or f"codiscrete({','.join(objects)})")


def discrete(objects: Sequence[str], name: str = '') -> FinCategory:
    """Only identities, named "id:X\""""
    morphisms = [Morphism(f"id:{x}", x, x) for x in objects]
    identities = {x: f"id:{x}" for x in objects}
    composition = {(f"id:{x}", f"id:{x}"): f"id:{x}" for x in objects}
    return FinCategory(objects, morphisms, identities, composition, name=name or f"discrete({','.join(objects)})",
                       validate=False)
