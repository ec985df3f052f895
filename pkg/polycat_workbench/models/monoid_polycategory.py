"""
Monoid Polycategories
Commutative-monoid-valued presentations: hom(Γ; Δ) = M at every arity
"""
import logging
from dataclasses import dataclass, field
from typing import Dict, Mapping, Optional, Sequence, Tuple

from ..constants import DEFAULT_ARITY_BOUND, ERROR_MESSAGES, TERMINAL_ARROW, TERMINAL_OBJECT
from ..exceptions import InvariantError, NotAMonoid, NotCommutative, PolycatError
from .polycategory import Boundary, FinPolycategory, PolyMap, plan_composition

_logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FiniteMonoid:
    """Finite monoid given by its full multiplication table"""
    carrier: Tuple[str, ...]
    unit: str
    table: Mapping[Tuple[str, str], str] = field(hash=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, 'carrier', tuple(sorted(self.carrier)))
        object.__setattr__(self, 'table', dict(self.table))

    def mult(self, a: str, b: str) -> str:
        return self.table[(a, b)]

    def validate(self, require_commutative: bool = True):
        """
        Check totality, unit laws, associativity and (optionally) commutativity

        Raises:
            NotAMonoid: naming the failing pair or triple
            NotCommutative: naming a non-commuting pair
        """
        elements = self.carrier
        if len(set(elements)) != len(elements):
            raise NotAMonoid(f"{ERROR_MESSAGES['not_a_monoid']}: duplicate carrier elements")
        if self.unit not in elements:
            raise NotAMonoid(f"{ERROR_MESSAGES['not_a_monoid']}: unit {self.unit} not in carrier",
                             witness=(self.unit,))
        for a in elements:
            for b in elements:
                value = self.table.get((a, b))
                if value not in elements:
                    raise NotAMonoid(f"{ERROR_MESSAGES['not_a_monoid']}: mult({a}, {b}) undefined",
                                     witness=(a, b))
        for a in elements:
            if self.mult(self.unit, a) != a or self.mult(a, self.unit) != a:
                raise NotAMonoid(f"{ERROR_MESSAGES['not_a_monoid']}: unit law fails at {a}",
                                 witness=(a,))
        for a in elements:
            for b in elements:
                for c in elements:
                    if self.mult(self.mult(a, b), c) != self.mult(a, self.mult(b, c)):
                        raise NotAMonoid(
                            f"{ERROR_MESSAGES['not_a_monoid']}: associativity fails at ({a}, {b}, {c})",
                            witness=(a, b, c))
        if require_commutative:
            for a in elements:
                for b in elements:
                    if self.mult(a, b) != self.mult(b, a):
                        raise NotCommutative(
                            f"{ERROR_MESSAGES['not_commutative']}: {a}*{b} != {b}*{a}", pair=(a, b))

    def product(self, other: 'FiniteMonoid') -> 'FiniteMonoid':
        """Componentwise product monoid, elements written "a.b\""""
        carrier = tuple(f"{a}.{b}" for a in self.carrier for b in other.carrier)
        table = {}
        for a in self.carrier:
            for b in other.carrier:
                for c in self.carrier:
                    for d in other.carrier:
                        table[(f"{a}.{b}", f"{c}.{d}")] = f"{self.mult(a, c)}.{other.mult(b, d)}"
        return FiniteMonoid(carrier, f"{self.unit}.{other.unit}", table)

    def is_invertible(self, a: str) -> bool:
        return any(self.mult(a, b) == self.unit and self.mult(b, a) == self.unit for b in self.carrier)


def cyclic_monoid(order: int, unit_name: Optional[str] = None) -> FiniteMonoid:
    """Z/n under addition, elements "0".."n-1\""""
    carrier = tuple(str(k) for k in range(order))
    table = {(str(a), str(b)): str((a + b) % order) for a in range(order) for b in range(order)}
    return FiniteMonoid(carrier, unit_name or '0', table)


def boolean_monoid() -> FiniteMonoid:
    """({0,1}, and, 1)"""
    table = {(a, b): str(int(a) & int(b)) for a in '01' for b in '01'}
    return FiniteMonoid(('0', '1'), '1', table)


class MonoidPolycategory(FinPolycategory):
    """
    Polycategory with hom(Γ; Δ) = M for all lists over its objects

    With a single object this is the one-object polycategory of a commutative
    monoid; with several objects every hom-set is still M (the codiscrete
    coloured variant). Composition is g ∘ f = mult(g, f) and the identity is
    the unit, so every law reduces to a monoid identity and holds at all arities.
    """

    def __init__(self, monoid: FiniteMonoid, arity_bound: int = DEFAULT_ARITY_BOUND,
                 objects: Sequence[str] = (TERMINAL_OBJECT,), name: str = ''):
        if arity_bound < 1:
            raise InvariantError(f"Arity bound must be positive, got {arity_bound}", check='arity_bound')
        if not objects or len(set(objects)) != len(objects):
            raise InvariantError("Objects must be nonempty and unique", check='objects')
        monoid.validate(require_commutative=True)
        self.monoid = monoid
        self._bound = arity_bound
        self._objects = tuple(sorted(objects))
        self.name = name or 'monoid'
        _logger.debug(f"Built monoid polycategory {self.name} over {len(monoid.carrier)} elements")

    @property
    def objects(self) -> Tuple[str, ...]:
        return self._objects

    @property
    def arity_bound(self) -> int:
        return self._bound

    @property
    def bound_relative(self) -> bool:
        return False

    def hom(self, domain, codomain) -> Tuple[PolyMap, ...]:
        if any(obj not in self._objects for obj in tuple(domain) + tuple(codomain)):
            return ()
        boundary = Boundary(tuple(domain), tuple(codomain))
        return tuple(PolyMap(element, boundary) for element in self.monoid.carrier)

    def identity(self, obj: str) -> PolyMap:
        if obj not in self._objects:
            raise PolycatError(f"Unknown object {obj} in {self.name}")
        return PolyMap(self.monoid.unit, Boundary((obj,), (obj,)))

    def compose(self, f: PolyMap, i: int, g: PolyMap, j: int) -> PolyMap:
        boundary = plan_composition(f.boundary, i, g.boundary, j)
        return PolyMap(self.monoid.mult(g.id, f.id), boundary)

    def contains(self, f: PolyMap) -> bool:
        return (f.id in self.monoid.carrier
                and all(obj in self._objects for obj in f.domain + f.codomain))

    def with_bound(self, arity_bound: int) -> 'MonoidPolycategory':
        return MonoidPolycategory(self.monoid, arity_bound, self._objects, self.name)


def from_monoid(carrier: Sequence[str], unit: str, table: Dict[Tuple[str, str], str],
                arity_bound: int = DEFAULT_ARITY_BOUND, objects: Sequence[str] = (TERMINAL_OBJECT,),
                name: str = '') -> MonoidPolycategory:
    """
    Build a MonoidPolycategory from a multiplication table

    Raises:
        NotAMonoid: table is not a monoid
        NotCommutative: interchange would fail
    """
    return MonoidPolycategory(FiniteMonoid(tuple(carrier), unit, table), arity_bound, objects, name)


def terminal(arity_bound: int = DEFAULT_ARITY_BOUND) -> MonoidPolycategory:
    """The terminal polycategory: one object and a unique arrow at every arity"""
    monoid = FiniteMonoid((TERMINAL_ARROW,), TERMINAL_ARROW, {(TERMINAL_ARROW, TERMINAL_ARROW): TERMINAL_ARROW})
    return MonoidPolycategory(monoid, arity_bound, (TERMINAL_OBJECT,), name=f"terminal({arity_bound})")


def is_terminal(P: FinPolycategory) -> bool:
    return (isinstance(P, MonoidPolycategory) and P.objects == (TERMINAL_OBJECT,)
            and P.monoid.carrier == (TERMINAL_ARROW,))
