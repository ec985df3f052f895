"""
Functors of Polycategories
Object and polymap assignments between finite presentations
"""
from typing import Callable, Dict, Mapping, Optional

from ..constants import TERMINAL_ARROW
from ..exceptions import PolycatError
from .monoid_polycategory import terminal
from .polycategory import Boundary, FinPolycategory, PolyMap

PolymapRule = Callable[[PolyMap], str]


class PolyFunctor:
    """
    Functor p: source -> target

    Objects map through obj_map; a polymap f maps to the target polymap
    whose identifier is rule(f) and whose boundary is obj_map applied to
    the boundary of f. Functor laws are not assumed: check_functor
    verifies them.
    """

    def __init__(self, source: FinPolycategory, target: FinPolycategory, obj_map: Mapping[str, str],
                 rule: PolymapRule, name: str = ''):
        missing = [obj for obj in source.objects if obj not in obj_map]
        if missing:
            raise PolycatError(f"Object map is not total: missing {', '.join(missing)}")
        self.source = source
        self.target = target
        self.obj_map: Dict[str, str] = dict(obj_map)
        self.rule = rule
        self.name = name or f"{source.name}->{target.name}"

    @classmethod
    def from_id_table(cls, source, target, obj_map, id_map: Mapping[str, str], name: str = '') -> 'PolyFunctor':
        """Functor whose polymap assignment depends on identifiers only"""
        table = dict(id_map)

        def rule(f: PolyMap) -> str:
            try:
                return table[f.id]
            except KeyError:
                raise PolycatError(f"Polymap map is not total: missing {f.id}")
        return cls(source, target, obj_map, rule, name)

    @classmethod
    def from_polymap_table(cls, source, target, obj_map, table: Mapping[PolyMap, PolyMap],
                           name: str = '') -> 'PolyFunctor':
        """Functor given by an explicit polymap-to-polymap table"""
        table = dict(table)

        def rule(f: PolyMap) -> str:
            try:
                return table[f].id
            except KeyError:
                raise PolycatError(f"Polymap map is not total: missing {f}")
        return cls(source, target, obj_map, rule, name)

    def map_object(self, obj: str) -> str:
        return self.obj_map[obj]

    def map_list(self, objects) -> tuple:
        return tuple(self.obj_map[obj] for obj in objects)

    def map_boundary(self, boundary: Boundary) -> Boundary:
        return Boundary(self.map_list(boundary.domain), self.map_list(boundary.codomain))

    def apply(self, f: PolyMap) -> PolyMap:
        return PolyMap(self.rule(f), self.map_boundary(f.boundary))

    __call__ = apply

    def fibre_objects(self, base_obj: str) -> tuple:
        """Source objects lying over a target object"""
        return tuple(obj for obj in self.source.objects if self.obj_map[obj] == base_obj)


def identity_functor(P: FinPolycategory) -> PolyFunctor:
    return PolyFunctor(P, P, {obj: obj for obj in P.objects}, lambda f: f.id, name=f"id({P.name})")


def unique_functor_to_terminal(P: FinPolycategory, arity_bound: Optional[int] = None) -> PolyFunctor:
    """The functor collapsing every object to * and every polymap to the unique arrow of its arity"""
    target = terminal(arity_bound or P.arity_bound)
    obj_map = {obj: target.objects[0] for obj in P.objects}
    return PolyFunctor(P, target, obj_map, lambda f: TERMINAL_ARROW, name=f"!({P.name})")


def compose_functors(q: PolyFunctor, p: PolyFunctor, name: str = '') -> PolyFunctor:
    """q ∘ p"""
    obj_map = {obj: q.obj_map[p.obj_map[obj]] for obj in p.source.objects}
    return PolyFunctor(p.source, q.target, obj_map, lambda f: q.rule(p.apply(f)),
                       name or f"{q.name}.{p.name}")
