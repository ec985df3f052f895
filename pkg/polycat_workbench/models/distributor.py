"""
Finite Distributors
Multivariable distributors between finite categories, with their actions
"""
import itertools
import logging
from dataclasses import dataclass
from typing import Callable, Dict, Iterator, List, Mapping, Optional, Sequence, Tuple

from ..constants import SIDE_IN, SIDE_OUT
from ..exceptions import InvariantError, PolycatError
from .fin_category import FinCategory

_logger = logging.getLogger(__name__)

Tuples = Tuple[Tuple[str, ...], Tuple[str, ...]]
Element = Tuple[Tuple[str, ...], Tuple[str, ...], str]
ActionKey = Tuple[str, int, str, Tuple[str, ...], Tuple[str, ...], str]


def replaced(objects: Sequence[str], slot: int, obj: str) -> Tuple[str, ...]:
    return tuple(objects[:slot]) + (obj,) + tuple(objects[slot + 1:])


@dataclass(frozen=True, order=True)
class CoendClass:
    """A class of the coend quotient with its canonical representative (X, x, y)"""
    representative: Tuple[str, str, str]
    left: Tuples
    right: Tuples
    index: int
    size: int = 1

    @property
    def name(self) -> str:
        obj, x, y = self.representative
        return f"({x},{obj},{y})"


class FinDistributor:
    """
    Distributor from input categories to output categories

    elements[(ins, outs)] lists the element names at an object tuple. A
    morphism m: a -> b of input category k acts contravariantly, sending an
    element at b in slot k to one at a; an output morphism acts covariantly.
    actions[(side, slot, m.id, ins, outs, name)] is the resulting name.
    """

    def __init__(self, inputs: Sequence[FinCategory], outputs: Sequence[FinCategory],
                 elements: Mapping[Tuples, Sequence[str]], actions: Mapping[ActionKey, str], name: str = '',
                 classes: Optional[Dict[Element, CoendClass]] = None,
                 members: Optional[Dict[Tuples, Dict[Tuple[str, str, str], str]]] = None):
        self.inputs = tuple(inputs)
        self.outputs = tuple(outputs)
        self._elements: Dict[Tuples, Tuple[str, ...]] = {
            (tuple(ins), tuple(outs)): tuple(sorted(names)) for (ins, outs), names in elements.items() if names
        }
        self._actions = dict(actions)
        self.name = name or 'distributor'
        self.classes = classes or {}
        self.members = members or {}

    @classmethod
    def from_rule(cls, inputs: Sequence[FinCategory], outputs: Sequence[FinCategory],
                  elements: Callable[[Tuple[str, ...], Tuple[str, ...]], Sequence[str]],
                  act: Callable[[str, int, object, Tuple[str, ...], Tuple[str, ...], str], str],
                  name: str = '') -> 'FinDistributor':
        """Tabulate element sets and actions given as functions"""
        shell = cls(inputs, outputs, {}, {}, name)
        table = {key: tuple(elements(*key)) for key in shell.tuples()}
        shell._elements = {key: tuple(sorted(names)) for key, names in table.items() if names}
        actions = {}
        for (ins, outs), names in shell._elements.items():
            for side, slot, m in shell.acting_morphisms(ins, outs):
                for x in names:
                    actions[(side, slot, m.id, ins, outs, x)] = act(side, slot, m, ins, outs, x)
        shell._actions = actions
        return shell

    @property
    def boundary(self) -> Tuple[Tuple[str, ...], Tuple[str, ...]]:
        return tuple(c.name for c in self.inputs), tuple(c.name for c in self.outputs)

    @property
    def action_table(self) -> Dict[ActionKey, str]:
        return dict(self._actions)

    def tuples(self) -> Iterator[Tuples]:
        """Every object tuple in canonical order"""
        for ins in itertools.product(*(c.objects for c in self.inputs)):
            for outs in itertools.product(*(c.objects for c in self.outputs)):
                yield ins, outs

    def elements_at(self, ins: Sequence[str], outs: Sequence[str]) -> Tuple[str, ...]:
        return self._elements.get((tuple(ins), tuple(outs)), ())

    def elements(self) -> Iterator[Element]:
        for ins, outs in self.tuples():
            for x in self.elements_at(ins, outs):
                yield ins, outs, x

    def size(self) -> int:
        return sum(len(names) for names in self._elements.values())

    def acting_morphisms(self, ins: Tuple[str, ...], outs: Tuple[str, ...]):
        """(side, slot, morphism) for every morphism that acts on the tuple"""
        for slot, category in enumerate(self.inputs):
            for m in category.morphisms:
                if m.target == ins[slot]:
                    yield SIDE_IN, slot, m
        for slot, category in enumerate(self.outputs):
            for m in category.morphisms:
                if m.source == outs[slot]:
                    yield SIDE_OUT, slot, m

    def act(self, side: str, slot: int, morphism_id: str, element: Element) -> Element:
        """Act on an element; returns the element at the moved tuple"""
        ins, outs, x = element
        category = self.inputs[slot] if side == SIDE_IN else self.outputs[slot]
        m = category.morphism(morphism_id)
        try:
            result = self._actions[(side, slot, morphism_id, tuple(ins), tuple(outs), x)]
        except KeyError:
            raise PolycatError(f"{self.name}: no action of {m} on {x} at {ins}; {outs}")
        if side == SIDE_IN:
            return replaced(ins, slot, m.source), tuple(outs), result
        return tuple(ins), replaced(outs, slot, m.target), result

    def class_of(self, element: Element) -> CoendClass:
        return self.classes[element]

    def validate(self, commuting: bool = True):
        """
        Check totality and functoriality of the actions

        Identities act trivially, composites act as the successive actions,
        and actions in different slots commute.

        Raises:
            InvariantError: naming the failing check
        """
        for (ins, outs), names in self._elements.items():
            if len(ins) != len(self.inputs) or len(outs) != len(self.outputs):
                raise InvariantError(f"{self.name}: tuple {ins}; {outs} has the wrong length", check='tuples')
            for side, slot, m in self.acting_morphisms(ins, outs):
                for x in names:
                    moved = self.act(side, slot, m.id, (ins, outs, x))
                    if moved[2] not in self.elements_at(moved[0], moved[1]):
                        raise InvariantError(f"{self.name}: {m.id} sends {x} outside the element sets",
                                             check='actions_total')
        for element in self.elements():
            ins, outs, _ = element
            for side, categories, objects in ((SIDE_IN, self.inputs, ins), (SIDE_OUT, self.outputs, outs)):
                for slot, category in enumerate(categories):
                    ident = category.identity(objects[slot])
                    if self.act(side, slot, ident.id, element) != element:
                        raise InvariantError(f"{self.name}: identity {ident.id} moves {element[2]}",
                                             check='action_unit')
            for side, slot, first in self.acting_morphisms(ins, outs):
                category = self.inputs[slot] if side == SIDE_IN else self.outputs[slot]
                moved = self.act(side, slot, first.id, element)
                for _, _, second in (t for t in self.acting_morphisms(moved[0], moved[1])
                                     if t[0] == side and t[1] == slot):
                    if side == SIDE_IN:
                        whole = category.compose(second, first)
                    else:
                        whole = category.compose(first, second)
                    if self.act(side, slot, second.id, moved) != self.act(side, slot, whole.id, element):
                        raise InvariantError(f"{self.name}: action of {whole.id} is not the composite action",
                                             check='action_composition')
            if commuting:
                self._check_commuting(element)
        _logger.debug(f"Validated distributor {self.name}: {self.size()} elements")

    def _check_commuting(self, element: Element):
        ins, outs, _ = element
        moves: List = list(self.acting_morphisms(ins, outs))
        for (side1, slot1, m1), (side2, slot2, m2) in itertools.combinations(moves, 2):
            if (side1, slot1) == (side2, slot2):
                continue
            one = self.act(side2, slot2, m2.id, self.act(side1, slot1, m1.id, element))
            two = self.act(side1, slot1, m1.id, self.act(side2, slot2, m2.id, element))
            if one != two:
                raise InvariantError(f"{self.name}: actions of {m1.id} and {m2.id} do not commute",
                                     check='action_interchange')

    def describe(self) -> str:
        ins, outs = self.boundary
        return f"{self.name}: {','.join(ins) or '.'} -|-> {','.join(outs) or '.'} ({self.size()} elements)"
