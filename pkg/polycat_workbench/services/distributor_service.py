"""
Distributor Service
Hom distributors, coend composition, co-Yoneda and associativity bijections,
representability in one variable
"""
import logging
from typing import Dict, Tuple

from networkx.utils import UnionFind

from ..constants import SIDE_IN, SIDE_OUT
from ..exceptions import BoundaryMismatch, IndexOutOfRange, PlanarityViolation
from ..models.distributor import CoendClass, Element, FinDistributor, replaced
from ..models.fin_category import FinCategory
from ..models.lax_functor import composite_tuple
from ..models.polycategory import Boundary, planarity_violations
from ..utils import describe_list
from .dto import CheckReport, Decision

_logger = logging.getLogger(__name__)

Node = Tuple[str, str, str]


def hom_distributor(C: FinCategory) -> FinDistributor:
    """C(-, =): elements at (X; Y) are the morphisms X -> Y, acting by composition"""

    def act(side, slot, m, ins, outs, x):
        current = C.morphism(x)
        return C.compose(m, current).id if side == SIDE_IN else C.compose(current, m).id

    return FinDistributor.from_rule([C], [C], lambda ins, outs: [m.id for m in C.hom(ins[0], outs[0])], act,
                                    name=f"hom({C.name})")


def slot_owner(composite_slot: int, cut: int, inner: int) -> Tuple[str, int]:
    """Which factor ('outer' or 'inner') owns a composite slot, and its own index"""
    if composite_slot < cut:
        return 'outer', composite_slot
    if composite_slot < cut + inner:
        return 'inner', composite_slot - cut
    return 'outer', composite_slot - inner + 1


def compose_distributors(p: FinDistributor, i: int, q: FinDistributor, j: int) -> FinDistributor:
    """
    Feed output i of p into input j of q through the coend over the shared category

    Elements at each outer tuple are classes of triples (X, x, y) under
    (X', a.x, y) ~ (X, x, y.a) for a: X -> X', computed by union-find.
    Each class is named after its least triple.

    Raises:
        IndexOutOfRange, BoundaryMismatch, PlanarityViolation
    """
    if not 0 <= i < len(p.outputs):
        raise IndexOutOfRange(f"Output {i} of {p.name}", index=i, length=len(p.outputs))
    if not 0 <= j < len(q.inputs):
        raise IndexOutOfRange(f"Input {j} of {q.name}", index=j, length=len(q.inputs))
    shared = p.outputs[i]
    if shared != q.inputs[j]:
        raise BoundaryMismatch(f"{p.name} output {i} is {shared.name}, {q.name} input {j} is {q.inputs[j].name}",
                               error_code='boundary_mismatch')
    sides = planarity_violations(Boundary(*p.boundary), i, Boundary(*q.boundary), j)
    if sides:
        raise PlanarityViolation(f"Distributor composite crosses wires on the {' and '.join(sides)} side",
                                 sides=sides)
    inputs = q.inputs[:j] + p.inputs + q.inputs[j + 1:]
    outputs = p.outputs[:i] + q.outputs + p.outputs[i + 1:]
    mp, nq = len(p.inputs), len(q.outputs)
    elements: Dict = {}
    classes: Dict[Element, CoendClass] = {}
    lookup: Dict[Tuple, Dict[Node, str]] = {}
    shell = FinDistributor(inputs, outputs, {}, {})
    for ins, outs in shell.tuples():
        q_left, p_ins, q_right = ins[:j], ins[j:j + mp], ins[j + mp:]
        p_left, q_outs, p_right = outs[:i], outs[i:i + nq], outs[i + nq:]

        def p_tuple(obj):
            return p_ins, p_left + (obj,) + p_right

        def q_tuple(obj):
            return q_left + (obj,) + q_right, q_outs

        nodes = [(obj, x, y) for obj in shared.objects for x in p.elements_at(*p_tuple(obj))
                 for y in q.elements_at(*q_tuple(obj))]
        if not nodes:
            continue
        partition = UnionFind(nodes)
        for a in shared.morphisms:
            for x in p.elements_at(*p_tuple(a.source)):
                moved_x = p.act(SIDE_OUT, i, a.id, p_tuple(a.source) + (x,))[2]
                for y in q.elements_at(*q_tuple(a.target)):
                    moved_y = q.act(SIDE_IN, j, a.id, q_tuple(a.target) + (y,))[2]
                    partition.union((a.target, moved_x, y), (a.source, x, moved_y))
        groups = sorted(sorted(group) for group in partition.to_sets())
        names = []
        lookup[(ins, outs)] = {}
        for index, group in enumerate(groups):
            obj = group[0][0]
            cls = CoendClass(group[0], p_tuple(obj), q_tuple(obj), index, len(group))
            names.append(cls.name)
            classes[(ins, outs, cls.name)] = cls
            for node in group:
                lookup[(ins, outs)][node] = cls.name
        elements[(ins, outs)] = names

    def act(side, slot, m, ins, outs, name):
        cls = classes[(ins, outs, name)]
        obj, x, y = cls.representative
        if side == SIDE_IN:
            owner, own = slot_owner(slot, j, mp)
            if owner == 'inner':
                x = p.act(SIDE_IN, own, m.id, cls.left + (x,))[2]
            else:
                y = q.act(SIDE_IN, own, m.id, cls.right + (y,))[2]
            target = (replaced(ins, slot, m.source), outs)
        else:
            owner, own = slot_owner(slot, i, nq)
            if owner == 'inner':
                y = q.act(SIDE_OUT, own, m.id, cls.right + (y,))[2]
            else:
                x = p.act(SIDE_OUT, own, m.id, cls.left + (x,))[2]
            target = (ins, replaced(outs, slot, m.target))
        return lookup[target][(obj, x, y)]

    actions = {}
    for (ins, outs), names in elements.items():
        for side, slot, m in shell.acting_morphisms(ins, outs):
            for name in names:
                actions[(side, slot, m.id, ins, outs, name)] = act(side, slot, m, ins, outs, name)
    result = FinDistributor(inputs, outputs, elements, actions, name=f"{q.name}.{p.name}", classes=classes,
                            members=lookup)
    _logger.debug(f"Composed {p.name}[{i}] into {q.name}[{j}]: {result.size()} classes")
    return result


def class_of_node(composite: FinDistributor, tuples, node: Node) -> str:
    """Name of the class containing any triple at a tuple of the composite"""
    return composite.members[tuple(tuples)][node]


def co_yoneda_check(D: FinDistributor) -> CheckReport:
    """
    Composing with a hom distributor gives back D, slot by slot

    On an input slot [(X, m, x)] maps to x.m; on an output slot
    [(X, x, m)] maps to m.x. Each map must be well defined on classes,
    bijective at every tuple and commute with every action.
    """
    report = CheckReport(f"co-yoneda({D.name})")
    cases = [(SIDE_IN, k) for k in range(len(D.inputs))] + [(SIDE_OUT, k) for k in range(len(D.outputs))]
    for side, k in cases:
        if side == SIDE_IN:
            composite = compose_distributors(hom_distributor(D.inputs[k]), 0, D, k)
        else:
            composite = compose_distributors(D, k, hom_distributor(D.outputs[k]), 0)
        bijection: Dict[Element, Element] = {}
        for element in composite.elements():
            cls = composite.class_of(element)
            obj, a, b = cls.representative
            if side == SIDE_IN:
                image = D.act(SIDE_IN, k, a, cls.right + (b,))
            else:
                image = D.act(SIDE_OUT, k, b, cls.left + (a,))
            report.checked += 1
            if image[:2] != element[:2]:
                report.fail(f"{side} slot {k}: {element[2]} lands at another tuple")
            bijection[element] = image
        for ins, outs in D.tuples():
            images = sorted(bijection[(ins, outs, name)][2] for name in composite.elements_at(ins, outs))
            if images != sorted(D.elements_at(ins, outs)):
                report.fail(f"{side} slot {k}: not a bijection at {describe_list(ins)}; {describe_list(outs)}")
        for element, image in bijection.items():
            for s, slot, m in composite.acting_morphisms(element[0], element[1]):
                if bijection[composite.act(s, slot, m.id, element)] != D.act(s, slot, m.id, image):
                    report.fail(f"{side} slot {k}: action of {m.id} not preserved at {element[2]}")
    return report


def associator_check(p: FinDistributor, i: int, q: FinDistributor, k: int, r: FinDistributor, l: int,
                     j: int) -> CheckReport:
    """
    The canonical bijection between the two bracketings of p, q and r

    Left: (q after p at (i, j)) then r at output i + k into input l.
    Right: p into (r after q at (k, l)) at input l + j.
    [(Y, [(X, x, y)], z)] is sent to [(X, x, [(Y, y, z)])].
    """
    pq = compose_distributors(p, i, q, j)
    left = compose_distributors(pq, i + k, r, l)
    qr = compose_distributors(q, k, r, l)
    right = compose_distributors(p, i, qr, l + j)
    report = CheckReport(f"associator({p.name},{q.name},{r.name})")
    images: Dict[Element, Element] = {}
    for element in left.elements():
        outer = left.class_of(element)
        obj_y, c1, z = outer.representative
        inner = pq.class_of(outer.left + (c1,))
        obj_x, x, y = inner.representative
        w_tuple = composite_tuple(inner.right, k, outer.right, l)
        w = class_of_node(qr, w_tuple, (obj_y, y, z))
        image_tuple = composite_tuple(inner.left, i, w_tuple, l + j)
        image = image_tuple + (class_of_node(right, image_tuple, (obj_x, x, w)),)
        report.checked += 1
        if image[:2] != element[:2]:
            report.fail(f"{element[2]} moves from {element[:2]} to {image[:2]}")
        images[element] = image
    if sorted(images.values()) != sorted(right.elements()) or len(set(images.values())) != len(images):
        report.fail("the canonical map is not a bijection")
    return report


def _universal_element(D: FinDistributor, side: str, slot: int, ins, outs):
    """A representing object and element for the variable at slot, with the rest fixed"""
    category = D.inputs[slot] if side == SIDE_IN else D.outputs[slot]
    fixed = ins if side == SIDE_IN else outs

    def tuple_at(obj):
        return (replaced(ins, slot, obj), outs) if side == SIDE_IN else (ins, replaced(outs, slot, obj))

    for obj in category.objects:
        for u in D.elements_at(*tuple_at(obj)):
            universal = True
            for other in category.objects:
                arrows = category.hom(other, obj) if side == SIDE_IN else category.hom(obj, other)
                image = sorted(D.act(side, slot, m.id, tuple_at(obj) + (u,))[2] for m in arrows)
                if image != sorted(D.elements_at(*tuple_at(other))):
                    universal = False
                    break
            if universal:
                return obj, u
    return None


def representable_in(D: FinDistributor, side: str, slot: int) -> Decision:
    """
    Representability of D in one variable, every other variable held fixed

    An output variable is represented by (R, u) when m -> m.u is a bijection
    from C(R, Y) onto the elements with Y in the slot, for every Y; an input
    variable by u.m over C(Y, R).
    """
    categories = D.inputs if side == SIDE_IN else D.outputs
    if not 0 <= slot < len(categories):
        raise IndexOutOfRange(f"{side} slot {slot} of {D.name}", index=slot, length=len(categories))
    decision = Decision(f"representable({D.name}, {side} {slot})", True)
    checked = 0
    seen = set()
    for ins, outs in D.tuples():
        anchor = (replaced(ins, slot, '_'), outs) if side == SIDE_IN else (ins, replaced(outs, slot, '_'))
        if anchor in seen:
            continue
        seen.add(anchor)
        checked += 1
        found = _universal_element(D, side, slot, ins, outs)
        if found is None:
            decision.holds = False
            decision.evidence.append(f"no universal element with {describe_list(anchor[0])}; "
                                     f"{describe_list(anchor[1])} fixed")
            return decision
    decision.evidence.append(f"{checked} parameter tuples represented")
    return decision
