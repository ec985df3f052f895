"""
Elements Service
Lax normal functors into distributors: generators, coherence checks, the
polycategory of elements, the fibres functor of a functor, round trips and
the representability versus bifibration cross-check
"""
import logging
import random
from collections import defaultdict
from typing import Callable, Dict, Iterator, List, Mapping, Optional, Sequence, Tuple

from ..constants import (
    CONSTRUCTION_DIAGONAL, CONSTRUCTION_FIBRES, CONSTRUCTION_SINGLETON, CONSTRUCTION_TWISTED, ELEMENTS_ARITY_BOUND,
    SIDE_IN, SIDE_OUT, TWIST_MONOIDS,
)
from ..exceptions import InvariantError, PolycatError
from ..models.distributor import Element, FinDistributor
from ..models.fin_category import FinCategory, Morphism, discrete, monoid_category
from ..models.functor import PolyFunctor
from ..models.lax_functor import Laxity, LaxNormalFunctor, composite_tuple
from ..models.monoid_polycategory import FiniteMonoid, MonoidPolycategory, is_terminal, terminal
from ..models.polycategory import Boundary, FinPolycategory, PolyMap
from ..models.table_polycategory import TablePolycategory, materialize
from .axiom_service import check_axioms
from .distributor_service import compose_distributors, representable_in, slot_owner
from .dto import CheckReport, Decision, ElementsConstruction, element_object, element_polymap_id
from .fibration_service import check_functor, decide_bifibration
from .universal_service import decide_birepresentable

_logger = logging.getLogger(__name__)

LaxityEntry = Tuple[PolyMap, int, PolyMap, int, PolyMap]
LaxityRule = Callable[[PolyMap, int, PolyMap, int, PolyMap, Element, Element], str]


def base_germ(P: FinPolycategory) -> FinPolycategory:
    """P itself when its bound is small enough, otherwise its germ at the elements bound"""
    if P.arity_bound <= ELEMENTS_ARITY_BOUND:
        return P
    if isinstance(P, MonoidPolycategory):
        return P.with_bound(ELEMENTS_ARITY_BOUND)
    return materialize(P, ELEMENTS_ARITY_BOUND, name=P.name)


def laxity_keys(base: FinPolycategory) -> Iterator[LaxityEntry]:
    """(f, i, g, j, g after f) for every in-bound planar cut of the base"""
    maps = list(base.polymaps())
    by_input = defaultdict(list)
    for g in maps:
        for j, obj in enumerate(g.domain):
            by_input[obj].append((g, j))
    for f in maps:
        for i, obj in enumerate(f.codomain):
            for g, j in by_input[obj]:
                h = base.try_compose(f, i, g, j)
                if h is not None:
                    yield f, i, g, j, h


def _tabulate_laxity(base: FinPolycategory, distributors: Mapping[PolyMap, FinDistributor],
                     rule: LaxityRule) -> Laxity:
    laxity: Laxity = {}
    for f, i, g, j, h in laxity_keys(base):
        at_input = defaultdict(list)
        for y in distributors[g].elements():
            at_input[y[0][j]].append(y)
        table = {}
        for x in distributors[f].elements():
            for y in at_input[x[1][i]]:
                table[(x, y)] = rule(f, i, g, j, h, x, y)
        laxity[(f, i, g, j)] = table
    return laxity


def _fibres_of(fibres: Mapping[str, FinCategory], f: PolyMap):
    return [fibres[obj] for obj in f.domain], [fibres[obj] for obj in f.codomain]


# Generators

def twisted_functor(base: FinPolycategory, monoid: FiniteMonoid, fibre_objects: Sequence[str] = ('u',),
                    name: str = '', construction: str = CONSTRUCTION_TWISTED) -> LaxNormalFunctor:
    """
    Every fibre is the monoid category on fibre_objects, every element set is M

    Morphisms act by multiplication and the laxity multiplies the two
    elements, so the result is a coherent pseudofunctor represented by the
    unit in every variable.
    """
    monoid.validate(require_commutative=True)
    base = base_germ(base)
    fibre = monoid_category(fibre_objects, monoid, name=f"{'x'.join(fibre_objects)}.M")
    fibres = {obj: fibre for obj in base.objects}

    def label(morphism: Morphism) -> str:
        return morphism.id.split(':', 1)[0]

    def act(side, slot, m, ins, outs, x):
        return monoid.mult(x, label(m)) if side == SIDE_IN else monoid.mult(label(m), x)

    distributors = {}
    for f in base.polymaps():
        inputs, outputs = _fibres_of(fibres, f)
        distributors[f] = FinDistributor.from_rule(inputs, outputs, lambda ins, outs: monoid.carrier, act,
                                                   name=f"F({f.id}: {f.boundary})")
    normality = {obj: {((m.source,), (m.target,), label(m)): m.id for m in fibre.morphisms}
                 for obj in base.objects}
    laxity = _tabulate_laxity(base, distributors, lambda f, i, g, j, h, x, y: monoid.mult(y[2], x[2]))
    functor = LaxNormalFunctor(base, fibres, distributors, normality, laxity,
                               name=name or f"twisted({base.name})", construction=construction)
    _logger.debug(f"Built {functor.describe()}")
    return functor


def singleton_functor(base: FinPolycategory, name: str = '') -> LaxNormalFunctor:
    """One fibre object, one element everywhere"""
    trivial = FiniteMonoid(*TWIST_MONOIDS['trivial'])
    return twisted_functor(base, trivial, ('u',), name=name or f"singleton({base.name})",
                           construction=CONSTRUCTION_SINGLETON)


def diagonal_functor(base: FinPolycategory, labels: Sequence[str] = ('0', '1'), name: str = '') -> LaxNormalFunctor:
    """
    Discrete fibres; one element exactly at the constant tuples

    The distributor over a nullary-input polymap is not representable in
    its outputs once there are two labels.
    """
    base = base_germ(base)
    fibre = discrete(labels)
    fibres = {obj: fibre for obj in base.objects}
    distributors = {}
    for f in base.polymaps():
        inputs, outputs = _fibres_of(fibres, f)
        distributors[f] = FinDistributor.from_rule(
            inputs, outputs, lambda ins, outs: ['d'] if len(set(ins + outs)) <= 1 else [],
            lambda side, slot, m, ins, outs, x: x, name=f"F({f.id}: {f.boundary})")
    normality = {obj: {((x,), (x,), 'd'): f"id:{x}" for x in labels} for obj in base.objects}
    laxity = _tabulate_laxity(base, distributors, lambda *args: 'd')
    return LaxNormalFunctor(base, fibres, distributors, normality, laxity,
                            name=name or f"diagonal({base.name})", construction=CONSTRUCTION_DIAGONAL)


def category_as_polycategory(C: FinCategory, arity_bound: int = ELEMENTS_ARITY_BOUND) -> TablePolycategory:
    """C with its morphisms as unary polymaps and nothing else"""

    def as_polymap(m: Morphism) -> PolyMap:
        return PolyMap(m.id, Boundary((m.source,), (m.target,)))

    maps = {m.id: as_polymap(m) for m in C.morphisms}
    composition = {(maps[first], 0, maps[second], 0): maps[result]
                   for (first, second), result in C.composition_table.items()}
    identities = {obj: maps[C.identity(obj).id] for obj in C.objects}
    return TablePolycategory(C.objects, arity_bound, maps.values(), identities, composition, name=C.name)


def presheaf_functor(C: FinCategory, sets: Mapping[str, Sequence[str]],
                     restrict: Mapping[Tuple[str, str], str], name: str = '') -> LaxNormalFunctor:
    """
    A set-valued presheaf as a lax functor over C

    restrict[(m, y)] is the restriction along m: B -> B' of y in sets[B'].
    The element '*' sits at (x; y) exactly when y restricts to x.
    """
    base = category_as_polycategory(C)
    table = dict(restrict)
    for obj in C.objects:
        for x in sets[obj]:
            table.setdefault((C.identity(obj).id, x), x)
    fibres = {obj: discrete(sets[obj], name=f"P({obj})") for obj in C.objects}
    distributors = {}
    for f in base.polymaps():
        distributors[f] = FinDistributor.from_rule(
            [fibres[f.domain[0]]], [fibres[f.codomain[0]]],
            lambda ins, outs, m=f.id: ['*'] if table.get((m, outs[0])) == ins[0] else [],
            lambda side, slot, m, ins, outs, x: x, name=f"P({f.id})")
    normality = {obj: {((x,), (x,), '*'): f"id:{x}" for x in sets[obj]} for obj in C.objects}
    laxity = _tabulate_laxity(base, distributors, lambda *args: '*')
    return LaxNormalFunctor(base, fibres, distributors, normality, laxity, name=name or f"presheaf({C.name})")


def _relabelled(F: LaxNormalFunctor, rng: random.Random, name: str) -> LaxNormalFunctor:
    """Same functor with the element names at every tuple permuted"""
    renames: Dict[Tuple, Dict[str, str]] = {}

    def rename(f: PolyMap, element: Element) -> Element:
        ins, outs, x = element
        return ins, outs, renames[(f, ins, outs)][x]

    distributors = {}
    for f in F.base_polymaps():
        D = F.distributor(f)
        elements = {}
        for ins, outs in D.tuples():
            names = list(D.elements_at(ins, outs))
            shuffled = list(names)
            rng.shuffle(shuffled)
            renames[(f, ins, outs)] = dict(zip(names, shuffled))
            elements[(ins, outs)] = shuffled

        actions = {}
        for (side, slot, mid, ins, outs, x) in D.action_table:
            moved = rename(f, D.act(side, slot, mid, (ins, outs, x)))
            actions[(side, slot, mid, ins, outs, rename(f, (ins, outs, x))[2])] = moved[2]
        distributors[f] = FinDistributor(D.inputs, D.outputs, elements, actions, name=D.name)

    normality = {obj: {rename(F.base.identity(obj), e): m for e, m in table.items()}
                 for obj, table in F.normality.items()}
    laxity: Laxity = {}
    for f, i, g, j, h in laxity_keys(F.base):
        laxity[(f, i, g, j)] = {
            (rename(f, x), rename(g, y)): rename(h, composite_tuple(x[:2], i, y[:2], j) + (z,))[2]
            for (x, y), z in F.laxity.get((f, i, g, j), {}).items()
        }
    return LaxNormalFunctor(F.base, F.fibres, distributors, normality, laxity, name=name,
                            construction=F.construction)


def random_lax_functor(seed: int, max_fibre: int = 2, max_elements: int = 2) -> LaxNormalFunctor:
    """
    A seeded random lax normal functor

    The base is terminal or the codiscrete two-object polycategory, the
    fibres are monoid categories on up to max_fibre objects over a small
    commutative monoid, and element names are permuted per tuple.
    """
    rng = random.Random(seed)
    names = sorted(name for name, (carrier, _, _) in TWIST_MONOIDS.items() if len(carrier) <= max_elements)
    monoid_name = rng.choice(names)
    monoid = FiniteMonoid(*TWIST_MONOIDS[monoid_name])
    if rng.random() < 0.5:
        base = terminal(ELEMENTS_ARITY_BOUND)
        size = rng.randint(1, max(1, max_fibre))
    else:
        base = MonoidPolycategory(FiniteMonoid(*TWIST_MONOIDS['trivial']), ELEMENTS_ARITY_BOUND, ('a', 'b'),
                                  name='codiscrete(a,b)')
        size = 1
    objects = [f"x{k}" for k in range(size)]
    F = twisted_functor(base, monoid, objects)
    _logger.debug(f"Random lax functor {seed}: {monoid_name} over {base.name}, fibre size {size}")
    return _relabelled(F, rng, name=f"random({seed})")


# The fibres functor of a functor

def _fibre_category(p: PolyFunctor, base: FinPolycategory, obj: str) -> Tuple[FinCategory, Dict[str, PolyMap]]:
    E = p.source
    identity = base.identity(obj)
    objects = p.fibre_objects(obj)
    vertical: Dict[str, PolyMap] = {}
    for x in objects:
        for y in objects:
            for phi in E.hom((x,), (y,)):
                if p(phi) == identity:
                    vertical[str(phi)] = phi
    morphisms = [Morphism(mid, phi.domain[0], phi.codomain[0]) for mid, phi in vertical.items()]
    identities = {x: str(E.identity(x)) for x in objects}
    composition = {}
    for first, phi in vertical.items():
        for second, psi in vertical.items():
            if phi.codomain == psi.domain:
                composition[(first, second)] = str(E.compose(phi, 0, psi, 0))
    return FinCategory(objects, morphisms, identities, composition, name=f"fibre({obj})", validate=False), vertical


def fibres_functor(p: PolyFunctor, name: str = '') -> LaxNormalFunctor:
    """
    The lax normal functor of fibres of p

    The fibre over A has the objects over A and the unary polymaps over the
    identity of A. The distributor over f has the polymaps over f as
    elements, acted on by composition, and the laxity composes in the source.
    """
    E = p.source
    base = base_germ(p.target)
    fibres: Dict[str, FinCategory] = {}
    vertical: Dict[str, Dict[str, PolyMap]] = {}
    for obj in base.objects:
        fibres[obj], vertical[obj] = _fibre_category(p, base, obj)

    def polymap_of(element: Element) -> PolyMap:
        ins, outs, x = element
        return PolyMap(x, Boundary(ins, outs))

    distributors = {}
    for f in base.polymaps():
        inputs, outputs = _fibres_of(fibres, f)

        def elements(ins, outs, f=f):
            boundary = Boundary(ins, outs)
            if not E.within_bound(boundary):
                return []
            return [phi.id for phi in E.hom(ins, outs) if p(phi) == f]

        def act(side, slot, m, ins, outs, x, f=f):
            phi = PolyMap(x, Boundary(ins, outs))
            if side == SIDE_IN:
                return E.compose(vertical[f.domain[slot]][m.id], 0, phi, slot).id
            return E.compose(phi, slot, vertical[f.codomain[slot]][m.id], 0).id

        distributors[f] = FinDistributor.from_rule(inputs, outputs, elements, act, name=f"fibres({f.id}: {f.boundary})")
    normality = {obj: {((phi.domain[0],), (phi.codomain[0],), phi.id): mid for mid, phi in vertical[obj].items()}
                 for obj in base.objects}
    laxity = _tabulate_laxity(base, distributors,
                              lambda f, i, g, j, h, x, y: E.compose(polymap_of(x), i, polymap_of(y), j).id)
    functor = LaxNormalFunctor(base, fibres, distributors, normality, laxity, name=name or f"fibres({p.name})",
                               construction=CONSTRUCTION_FIBRES)
    _logger.info(f"Fibres functor of {p.name}: {functor.describe()}")
    return functor


# Coherence

def _check_structure(F: LaxNormalFunctor, report: CheckReport):
    for obj in F.base.objects:
        report.checked += 1
        try:
            F.fibre(obj).validate()
        except InvariantError as e:
            report.fail(f"fibre over {obj}: {e.message}")
    for f in F.base.polymaps():
        report.checked += 1
        try:
            D = F.distributor(f)
        except PolycatError as e:
            report.fail(e.message)
            continue
        inputs, outputs = _fibres_of(F.fibres, f)
        if list(D.inputs) != inputs or list(D.outputs) != outputs:
            report.fail(f"distributor over {f} does not match the fibres of its boundary")
            continue
        try:
            D.validate()
        except (InvariantError, PolycatError) as e:
            report.fail(f"distributor over {f}: {e.message}")


def _check_normality(F: LaxNormalFunctor, report: CheckReport):
    for obj in F.base.objects:
        fibre = F.fibre(obj)
        D = F.distributor(F.base.identity(obj))
        table = F.normality.get(obj, {})
        report.checked += 1
        if sorted(table) != sorted(D.elements()):
            report.fail(f"normality over {obj} does not cover the identity distributor")
            continue
        if sorted(table.values()) != sorted(m.id for m in fibre.morphisms):
            report.fail(f"normality over {obj} is not a bijection onto the fibre morphisms")
            continue
        for element, mid in table.items():
            m = fibre.morphism(mid)
            if element[:2] != ((m.source,), (m.target,)):
                report.fail(f"normality sends {element[2]} to {mid} with another boundary")
                continue
            for side, slot, a in D.acting_morphisms(*element[:2]):
                report.checked += 1
                whole = fibre.compose(a, m) if side == SIDE_IN else fibre.compose(m, a)
                if table[D.act(side, slot, a.id, element)] != whole.id:
                    report.fail(f"normality over {obj} does not turn the action of {a.id} on {element[2]} "
                                f"into composition")


def _pairs(F: LaxNormalFunctor, f: PolyMap, i: int, g: PolyMap, j: int) -> Iterator[Tuple[Element, Element]]:
    at_input = defaultdict(list)
    for y in F.distributor(g).elements():
        at_input[y[0][j]].append(y)
    for x in F.distributor(f).elements():
        for y in at_input[x[1][i]]:
            yield x, y


def _check_laxity_total(F: LaxNormalFunctor, report: CheckReport):
    for f, i, g, j, h in laxity_keys(F.base):
        target = F.distributor(h)
        for x, y in _pairs(F, f, i, g, j):
            report.checked += 1
            z = F.mu(f, i, g, j, x, y)
            if z is None:
                report.fail(f"laxity {f.id}[{i}] into {g.id}[{j}] undefined on ({x[2]}, {y[2]})")
            elif z[2] not in target.elements_at(z[0], z[1]):
                report.fail(f"laxity {f.id}[{i}] into {g.id}[{j}] sends ({x[2]}, {y[2]}) outside F({h.id})")


def _check_naturality(F: LaxNormalFunctor, report: CheckReport):
    for f, i, g, j, h in laxity_keys(F.base):
        Df, Dg, Dh = F.distributor(f), F.distributor(g), F.distributor(h)
        for x, y in _pairs(F, f, i, g, j):
            z = F.mu(f, i, g, j, x, y)
            for side, slot, m in Dh.acting_morphisms(z[0], z[1]):
                report.checked += 1
                if side == SIDE_IN:
                    owner, own = slot_owner(slot, j, len(f.domain))
                    on_x = owner == 'inner'
                else:
                    owner, own = slot_owner(slot, i, len(g.codomain))
                    on_x = owner == 'outer'
                if on_x:
                    moved = (Df.act(side, own, m.id, x), y)
                else:
                    moved = (x, Dg.act(side, own, m.id, y))
                if F.mu(f, i, g, j, *moved) != Dh.act(side, slot, m.id, z):
                    report.fail(f"naturality of laxity {f.id}[{i}] into {g.id}[{j}] fails at "
                                f"({x[2]}, {y[2]}) under {m.id}")


def _check_dinaturality(F: LaxNormalFunctor, report: CheckReport):
    for f, i, g, j, h in laxity_keys(F.base):
        Df, Dg = F.distributor(f), F.distributor(g)
        fibre = F.fibre(f.codomain[i])
        at_input = defaultdict(list)
        for y in Dg.elements():
            at_input[y[0][j]].append(y)
        for x in Df.elements():
            for a in fibre.morphisms:
                if a.source != x[1][i]:
                    continue
                pushed = Df.act(SIDE_OUT, i, a.id, x)
                for y in at_input[a.target]:
                    report.checked += 1
                    if F.mu(f, i, g, j, pushed, y) != F.mu(f, i, g, j, x, Dg.act(SIDE_IN, j, a.id, y)):
                        report.fail(f"dinaturality of laxity {f.id}[{i}] into {g.id}[{j}] fails at "
                                    f"({x[2]}, {y[2]}) across {a.id}")


def _check_units(F: LaxNormalFunctor, report: CheckReport):
    for f in F.base.polymaps():
        D = F.distributor(f)
        for element in D.elements():
            ins, outs, _ = element
            for j, obj in enumerate(f.domain):
                ident = F.base.identity(obj)
                for m in F.fibre(obj).morphisms:
                    if m.target != ins[j]:
                        continue
                    report.checked += 1
                    if F.mu(ident, 0, f, j, F.unit_element(obj, m.id), element) != D.act(SIDE_IN, j, m.id, element):
                        report.fail(f"left unit of {f.id} at input {j} fails on {element[2]} with {m.id}")
            for i, obj in enumerate(f.codomain):
                ident = F.base.identity(obj)
                for m in F.fibre(obj).morphisms:
                    if m.source != outs[i]:
                        continue
                    report.checked += 1
                    if F.mu(f, i, ident, 0, element, F.unit_element(obj, m.id)) != D.act(SIDE_OUT, i, m.id, element):
                        report.fail(f"right unit of {f.id} at output {i} fails on {element[2]} with {m.id}")


def check_lax_normal(F: LaxNormalFunctor) -> CheckReport:
    """
    Verify a lax normal functor elementwise

    Checked in order: fibres and distributors, normality, totality of the
    laxity, its naturality in every outer action, its dinaturality at the
    cut, the unit laws against normality, and associativity with both
    interchanges through the law checker on the elements table.
    """
    report = CheckReport(f"lax-normal({F.name})")
    _check_structure(F, report)
    if report.passed:
        _check_normality(F, report)
    if report.passed:
        _check_laxity_total(F, report)
    if report.passed:
        _check_naturality(F, report)
        _check_dinaturality(F, report)
        _check_units(F, report)
    if report.passed:
        construction = _assemble(F, validate=False)
        axioms = check_axioms(construction.polycategory)
        report.checked += sum(axioms.instances.values())
        for c in axioms.counterexamples:
            report.fail(f"coherence ({c.law}): {c.describe()}")
    if not report.passed:
        report.notes.append(f"{len(report.failures)} failures")
    _logger.info(f"check_lax_normal({F.name}): {report.checked} instances, {len(report.failures)} failures")
    return report


# The polycategory of elements

def _assemble(F: LaxNormalFunctor, validate: bool) -> ElementsConstruction:
    base = F.base
    objects = {element_object(A, R): A for A in base.objects for R in F.fibre(A).objects}

    def lift(f: PolyMap, element: Element) -> PolyMap:
        ins, outs, x = element
        return PolyMap(element_polymap_id(f, x), Boundary(
            tuple(element_object(A, R) for A, R in zip(f.domain, ins)),
            tuple(element_object(A, R) for A, R in zip(f.codomain, outs))))

    origin: Dict[PolyMap, Tuple[PolyMap, Element]] = {}
    for f in base.polymaps():
        for element in F.distributor(f).elements():
            origin[lift(f, element)] = (f, element)
    identities = {}
    for A in base.objects:
        fibre = F.fibre(A)
        for R in fibre.objects:
            identities[element_object(A, R)] = lift(base.identity(A), F.unit_element(A, fibre.identity(R).id))
    composition = {}
    for f, i, g, j, h in laxity_keys(base):
        for x, y in _pairs(F, f, i, g, j):
            z = F.mu(f, i, g, j, x, y)
            if z is None:
                raise InvariantError(f"{F.name}: laxity {f.id}[{i}] into {g.id}[{j}] undefined on ({x[2]}, {y[2]})",
                                     check='laxity_total')
            composition[(lift(f, x), i, lift(g, y), j)] = lift(h, z)
    P = TablePolycategory(objects, base.arity_bound, origin, identities, composition,
                          name=f"elements({F.name})", validate=validate)
    table = {e: f for e, (f, _) in origin.items()}
    projection = PolyFunctor.from_polymap_table(P, base, objects, table, name=f"pi({F.name})")
    return ElementsConstruction(P, projection, origin)


def build_elements(F: LaxNormalFunctor) -> ElementsConstruction:
    """
    The polycategory of elements of F with its projection to the base

    Objects are pairs (A, R) named "A:R"; the polymaps over f are the
    elements of F(f); composites are (g after f, laxity of the pair).

    Raises:
        InvariantError: the laxity is not total or the table is malformed
    """
    construction = _assemble(F, validate=True)
    _logger.info(f"Built {construction.describe()}")
    return construction


def check_elements(construction: ElementsConstruction, F: Optional[LaxNormalFunctor] = None) -> CheckReport:
    """Axioms of the elements polycategory, functoriality of the projection, and hom cardinalities"""
    P = construction.polycategory
    report = CheckReport(f"elements {P.name}")
    axioms = check_axioms(P)
    report.checked += sum(axioms.instances.values())
    for c in axioms.counterexamples:
        report.fail(c.describe())
    functor = check_functor(construction.projection)
    report.checked += functor.checked
    report.failures.extend(functor.failures)
    if F is not None:
        for f in F.base_polymaps():
            report.checked += 1
            if len(construction.over(f)) != F.distributor(f).size():
                report.fail(f"{len(construction.over(f))} polymaps over {f}, F({f.id}) has "
                            f"{F.distributor(f).size()} elements")
    if P.bound_relative:
        report.notes.append(f"bound-relative: decided up to arity {P.arity_bound}")
    return report


# Round trips

def roundtrip_check(F: LaxNormalFunctor) -> CheckReport:
    """
    Fibres of the projection of the elements of F recover F

    The comparison sends R to "A:R", a fibre morphism m to the polymap of its
    normality element and an element x over f to the polymap "f|x", then
    checks it is bijective and commutes with every action and the laxity.
    """
    report = CheckReport(f"roundtrip({F.name})")
    construction = build_elements(F)
    back = fibres_functor(construction.projection)

    def translate(f: PolyMap, element: Element) -> Element:
        ins, outs, x = element
        return (tuple(element_object(A, R) for A, R in zip(f.domain, ins)),
                tuple(element_object(A, R) for A, R in zip(f.codomain, outs)),
                element_polymap_id(f, x))

    morphisms: Dict[str, Dict[str, str]] = {}
    for A in F.base.objects:
        fibre, image = F.fibre(A), back.fibre(A)
        report.checked += 1
        if sorted(image.objects) != sorted(element_object(A, R) for R in fibre.objects):
            report.fail(f"fibre objects over {A} differ")
            continue
        ident = F.base.identity(A)
        morphisms[A] = {}
        for m in fibre.morphisms:
            unit = translate(ident, F.unit_element(A, m.id))
            morphisms[A][m.id] = str(PolyMap(unit[2], Boundary(unit[0], unit[1])))
        if sorted(morphisms[A].values()) != sorted(m.id for m in image.morphisms):
            report.fail(f"fibre morphisms over {A} are not in bijection")
            continue
        for m1 in fibre.morphisms:
            for m2 in fibre.morphisms:
                if m1.target != m2.source:
                    continue
                report.checked += 1
                whole = image.compose(image.morphism(morphisms[A][m1.id]), image.morphism(morphisms[A][m2.id]))
                if whole.id != morphisms[A][fibre.compose(m1, m2).id]:
                    report.fail(f"composition of {m1.id} then {m2.id} over {A} is not preserved")
    if not report.passed:
        return report
    for f in F.base_polymaps():
        D, image = F.distributor(f), back.distributor(f)
        report.checked += 1
        if sorted(translate(f, e) for e in D.elements()) != sorted(image.elements()):
            report.fail(f"elements over {f} are not in bijection")
            continue
        for element in D.elements():
            for side, slot, m in D.acting_morphisms(element[0], element[1]):
                report.checked += 1
                obj = f.domain[slot] if side == SIDE_IN else f.codomain[slot]
                moved = image.act(side, slot, morphisms[obj][m.id], translate(f, element))
                if moved != translate(f, D.act(side, slot, m.id, element)):
                    report.fail(f"action of {m.id} on {element[2]} over {f.id} is not preserved")
    for f, i, g, j, h in laxity_keys(F.base):
        for x, y in _pairs(F, f, i, g, j):
            report.checked += 1
            if back.mu(f, i, g, j, translate(f, x), translate(g, y)) != translate(h, F.mu(f, i, g, j, x, y)):
                report.fail(f"laxity {f.id}[{i}] into {g.id}[{j}] on ({x[2]}, {y[2]}) is not preserved")
    _logger.info(f"roundtrip({F.name}): {report.checked} checks, {len(report.failures)} failures")
    return report


def roundtrip_functor_check(p: PolyFunctor) -> CheckReport:
    """
    The elements of the fibres functor of p recover the source of p

    "A:S" goes to S and the polymap "f|phi" to phi; the comparison must be a
    functor, bijective on objects and on polymaps within the elements bound,
    and commute with the projections.
    """
    report = CheckReport(f"roundtrip({p.name})")
    F = fibres_functor(p)
    construction = build_elements(F)
    E = p.source
    obj_map = {element_object(A, S): S for A in F.base.objects for S in F.fibre(A).objects}
    table = {e: PolyMap(x, Boundary(ins, outs)) for e, (f, (ins, outs, x)) in construction.origin.items()}
    comparison = PolyFunctor.from_polymap_table(construction.polycategory, E, obj_map, table,
                                                name=f"compare({p.name})")
    functor = check_functor(comparison)
    report.checked += functor.checked
    report.failures.extend(functor.failures)
    report.checked += 1
    if sorted(obj_map.values()) != sorted(E.objects):
        report.fail("objects are not in bijection")
    expected = sorted(phi for phi in E.polymaps() if max(phi.boundary.shape) <= ELEMENTS_ARITY_BOUND)
    report.checked += 1
    if sorted(table.values()) != expected:
        report.fail(f"{len(table)} polymaps of the elements, {len(expected)} of {E.name} within the bound")
    for e, phi in table.items():
        report.checked += 1
        if p(phi) != construction.projection(e):
            report.fail(f"{e.id} and its image lie over different base polymaps")
    _logger.info(f"roundtrip({p.name}): {report.checked} checks, {len(report.failures)} failures")
    return report


# Representability and the cross-check

def mvar_check(F: LaxNormalFunctor) -> Decision:
    """Representability of every distributor in every variable"""
    decision = Decision(f"representable({F.name})", True)
    count = 0
    for f in F.base_polymaps():
        D = F.distributor(f)
        variables = [(SIDE_IN, k) for k in range(len(f.domain))] + [(SIDE_OUT, k) for k in range(len(f.codomain))]
        for side, slot in variables:
            count += 1
            result = representable_in(D, side, slot)
            if not result.holds:
                decision.holds = False
                decision.evidence.append(f"F({f}) is not representable at {side} {slot}: {result.evidence[0]}")
    if decision.holds:
        decision.evidence.append(f"all {count} variables represented")
    _logger.info(f"mvar({F.name}) {decision.verdict}: {count} variables")
    return decision


def is_pseudo(F: LaxNormalFunctor) -> Decision:
    """Each laxity component maps the coend classes bijectively onto the composite's elements"""
    decision = Decision(f"pseudo({F.name})", True)
    count = 0
    for f, i, g, j, h in laxity_keys(F.base):
        composite = compose_distributors(F.distributor(f), i, F.distributor(g), j)
        target = F.distributor(h)
        for ins, outs in composite.tuples():
            images: List[str] = []
            for name in composite.elements_at(ins, outs):
                cls = composite.class_of((ins, outs, name))
                _, x, y = cls.representative
                z = F.mu(f, i, g, j, cls.left + (x,), cls.right + (y,))
                images.append(z[2] if z is not None else '?')
            count += 1
            if sorted(images) != sorted(target.elements_at(ins, outs)):
                decision.holds = False
                decision.evidence.append(f"laxity {f.id}[{i}] into {g.id}[{j}] is not bijective at "
                                         f"{ins}; {outs}")
                return decision
    decision.evidence.append(f"{count} laxity components bijective")
    return decision


def grothendieck_crosscheck(F: LaxNormalFunctor) -> Decision:
    """
    Representable pseudofunctor versus bifibred projection, decided independently

    Over the terminal base the elements polycategory must also be
    birepresentable exactly when the projection is a bifibration.
    """
    mvar = mvar_check(F)
    pseudo = is_pseudo(F)
    construction = build_elements(F)
    bifib = decide_bifibration(construction.projection)
    left = mvar.holds and pseudo.holds
    agree = left == bifib.holds
    evidence = [f"representable: {mvar.verdict}", f"pseudo: {pseudo.verdict}", f"bifibration: {bifib.verdict}"]
    evidence += mvar.evidence[:1] + pseudo.evidence[:1] + bifib.evidence[:2]
    if is_terminal(F.base):
        birep = decide_birepresentable(construction.polycategory)
        evidence.append(f"birepresentable: {birep.verdict}")
        agree = agree and birep.holds == bifib.holds
    decision = Decision(question=f"representable pseudofunctor({F.name}) == bifibred elements",
                        holds=agree, evidence=evidence, notes=bifib.notes, agreement=agree)
    if not agree:
        _logger.error(f"Grothendieck cross-check disagreement on {F.name}")
    return decision
