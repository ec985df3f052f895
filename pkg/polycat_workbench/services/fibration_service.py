"""
Fibration Service
Functor checks, cartesian polymaps, (bi)fibration decisions, Frobenius monoids,
polyfibers and refinement pullbacks
"""
import itertools
import logging
from collections import defaultdict
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from ..constants import SIDE_IN, SIDE_OUT, TERMINAL_OBJECT
from ..exceptions import IndexOutOfRange, PolycatError
from ..models.functor import PolyFunctor, compose_functors, unique_functor_to_terminal
from ..models.monoid_polycategory import terminal
from ..models.polycategory import Boundary, FinPolycategory, PolyMap, try_plan
from ..models.table_polycategory import TablePolycategory
from ..utils import describe_list, lists_up_to
from .dto import CartesianCertificate, CheckReport, Decision, FrobeniusMonoid, Lift, RefinementPullback
from .universal_service import _factor_uniquely, decide_birepresentable

_logger = logging.getLogger(__name__)

Shape = Tuple[int, int]


def check_functor(F: PolyFunctor) -> CheckReport:
    """
    Verify that F preserves identities and every in-scope composite

    Returns:
        CheckReport naming each failing identity or composite
    """
    source, target = F.source, F.target
    report = CheckReport(f"functor {F.name}")
    for obj in source.objects:
        report.checked += 1
        image_obj = F.map_object(obj)
        if image_obj not in target.objects:
            report.fail(f"object {obj} maps to {image_obj}, not an object of {target.name}")
            continue
        if F(source.identity(obj)) != target.identity(image_obj):
            report.fail(f"identity of {obj} maps to {F(source.identity(obj))}, not {target.identity(image_obj)}")
    maps = list(source.polymaps())
    images = {}
    for f in maps:
        try:
            images[f] = F(f)
        except PolycatError as e:
            report.fail(f"{f} has no image: {e.message}")
            continue
        if not target.contains(images[f]):
            report.fail(f"{f} maps to {images[f]}, not a polymap of {target.name}")
    by_input = defaultdict(list)
    for g in images:
        for j, obj in enumerate(g.domain):
            by_input[obj].append((g, j))
    for f in images:
        for i, obj in enumerate(f.codomain):
            for g, j in by_input[obj]:
                composite = source.try_compose(f, i, g, j)
                if composite is None:
                    continue
                expected = target.try_compose(images[f], i, images[g], j)
                if expected is None:
                    continue
                report.checked += 1
                actual = F(composite)
                if actual != expected:
                    report.fail(f"composite {f.id}[{i}] into {g.id}[{j}] = {composite.id} maps to {actual.id}, "
                                f"expected {expected.id}")
    _logger.info(f"Functor {F.name}: {report.checked} checks, {len(report.failures)} failures")
    return report


def _grouped(p: PolyFunctor, maps: Sequence[PolyMap]) -> Dict[PolyMap, List[PolyMap]]:
    groups = defaultdict(list)
    for f in maps:
        groups[p(f)].append(f)
    return groups


def _in_bound(p: PolyFunctor, boundary: Boundary) -> bool:
    return p.source.within_bound(boundary) and p.target.within_bound(p.map_boundary(boundary))


def is_in_cartesian(p: PolyFunctor, psi: PolyMap, j: int) -> CartesianCertificate:
    """
    Check that psi: Π1,R,Π2 -> Σ over g is in-cartesian in R relative to p

    For every fibre list Π, Σ1, Σ2 (planar against Π1, Π2) and every base
    f: p(Π) -> p(Σ1),A,p(Σ2), composing with psi must biject the lifts of f
    onto the polymaps Π1,Π,Π2 -> Σ1,Σ,Σ2 lying over g after f.

    Raises:
        IndexOutOfRange: no input j
    """
    if not 0 <= j < len(psi.domain):
        raise IndexOutOfRange(f"Input {j} of {psi}", index=j, length=len(psi.domain))
    E, B = p.source, p.target
    g = p(psi)
    pi1, obj, pi2 = psi.domain[:j], psi.domain[j], psi.domain[j + 1:]
    cert = CartesianCertificate(psi, SIDE_IN, j, p.name, bound=E.arity_bound,
                                bound_relative=E.bound_relative or B.bound_relative)
    for sigma1 in lists_up_to(E.objects, E.arity_bound - 1):
        if sigma1 and pi1:
            continue
        for sigma2 in lists_up_to(E.objects, E.arity_bound - 1 - len(sigma1)):
            if sigma2 and pi2:
                continue
            for pi in lists_up_to(E.objects, E.arity_bound):
                kb = Boundary(pi, sigma1 + (obj,) + sigma2)
                xb = Boundary(pi1 + pi + pi2, sigma1 + psi.codomain + sigma2)
                if not (_in_bound(p, kb) and _in_bound(p, xb)):
                    continue
                base = p.map_boundary(kb)
                lifts = _grouped(p, E.hom(kb.domain, kb.codomain))
                targets = _grouped(p, E.hom(xb.domain, xb.codomain))
                for f in B.hom(base.domain, base.codomain):
                    cert.checked_instances += 1
                    over = B.compose(f, len(sigma1), g, j)
                    failure = _factor_uniquely(E, lifts.get(f, []), targets.get(over, []),
                                               lambda k: E.compose(k, len(sigma1), psi, j))
                    if failure is not None:
                        cert.failure, cert.base = failure, f
                        return cert
    return cert


def is_out_cartesian(p: PolyFunctor, phi: PolyMap, i: int) -> CartesianCertificate:
    """
    Check that phi: Π -> Σ1,S,Σ2 over f is out-cartesian in S relative to p

    Raises:
        IndexOutOfRange: no output i
    """
    if not 0 <= i < len(phi.codomain):
        raise IndexOutOfRange(f"Output {i} of {phi}", index=i, length=len(phi.codomain))
    E, B = p.source, p.target
    f = p(phi)
    sigma1, obj, sigma2 = phi.codomain[:i], phi.codomain[i], phi.codomain[i + 1:]
    cert = CartesianCertificate(phi, SIDE_OUT, i, p.name, bound=E.arity_bound,
                                bound_relative=E.bound_relative or B.bound_relative)
    for pi1 in lists_up_to(E.objects, E.arity_bound - 1):
        if pi1 and sigma1:
            continue
        for pi2 in lists_up_to(E.objects, E.arity_bound - 1 - len(pi1)):
            if pi2 and sigma2:
                continue
            for sigma in lists_up_to(E.objects, E.arity_bound):
                kb = Boundary(pi1 + (obj,) + pi2, sigma)
                xb = Boundary(pi1 + phi.domain + pi2, sigma1 + sigma + sigma2)
                if not (_in_bound(p, kb) and _in_bound(p, xb)):
                    continue
                base = p.map_boundary(kb)
                lifts = _grouped(p, E.hom(kb.domain, kb.codomain))
                targets = _grouped(p, E.hom(xb.domain, xb.codomain))
                for g in B.hom(base.domain, base.codomain):
                    cert.checked_instances += 1
                    over = B.compose(f, i, g, len(pi1))
                    failure = _factor_uniquely(E, lifts.get(g, []), targets.get(over, []),
                                               lambda k: E.compose(phi, i, k, len(pi1)))
                    if failure is not None:
                        cert.failure, cert.base = failure, g
                        return cert
    return cert


class CartesianCache:
    """Memo of cartesian certificates for one functor"""

    def __init__(self, p: PolyFunctor):
        self.p = p
        self._store: Dict[Tuple[PolyMap, str, int], CartesianCertificate] = {}

    def get(self, psi: PolyMap, side: str, index: int) -> CartesianCertificate:
        key = (psi, side, index)
        if key not in self._store:
            check = is_in_cartesian if side == SIDE_IN else is_out_cartesian
            self._store[key] = check(self.p, psi, index)
        return self._store[key]


def pullback_exists(p: PolyFunctor, f: PolyMap, j: int, pi1: Sequence[str], pi2: Sequence[str],
                    sigma: Sequence[str], cache: Optional[CartesianCache] = None) -> Optional[Lift]:
    """
    Search a fibre object R over the input j of f with an in-cartesian lift Π1,R,Π2 -> Σ of f

    Returns:
        Lift or None
    """
    cache = cache or CartesianCache(p)
    E = p.source
    pi1, pi2, sigma = tuple(pi1), tuple(pi2), tuple(sigma)
    for obj in p.fibre_objects(f.domain[j]):
        boundary = Boundary(pi1 + (obj,) + pi2, sigma)
        if not E.within_bound(boundary):
            return None
        for psi in E.hom(boundary.domain, boundary.codomain):
            if p(psi) != f:
                continue
            cert = cache.get(psi, SIDE_IN, j)
            if cert.passed:
                return Lift(obj, psi, cert)
    return None


def pushforward_exists(p: PolyFunctor, f: PolyMap, i: int, pi: Sequence[str], sigma1: Sequence[str],
                       sigma2: Sequence[str], cache: Optional[CartesianCache] = None) -> Optional[Lift]:
    """Search a fibre object S over the output i of f with an out-cartesian lift Π -> Σ1,S,Σ2 of f"""
    cache = cache or CartesianCache(p)
    E = p.source
    pi, sigma1, sigma2 = tuple(pi), tuple(sigma1), tuple(sigma2)
    for obj in p.fibre_objects(f.codomain[i]):
        boundary = Boundary(pi, sigma1 + (obj,) + sigma2)
        if not E.within_bound(boundary):
            return None
        for phi in E.hom(boundary.domain, boundary.codomain):
            if p(phi) != f:
                continue
            cert = cache.get(phi, SIDE_OUT, i)
            if cert.passed:
                return Lift(obj, phi, cert)
    return None


def _refinements(p: PolyFunctor, objects: Sequence[str]) -> Iterator[Tuple[str, ...]]:
    """Every fibre list Π with p(Π) = objects"""
    return itertools.product(*(p.fibre_objects(obj) for obj in objects))


def _base_polymaps(p: PolyFunctor) -> List[PolyMap]:
    return [f for f in p.target.polymaps() if p.source.within_bound(f.boundary)]


def decide_pull_fibration(p: PolyFunctor, cache: Optional[CartesianCache] = None) -> Decision:
    """Every base polymap, input and fibre tuple has an in-cartesian lift"""
    cache = cache or CartesianCache(p)
    decision = Decision(f"pull-fibration({p.name})", True)
    count = 0
    for f in _base_polymaps(p):
        for j in range(len(f.domain)):
            for pi1 in _refinements(p, f.domain[:j]):
                for pi2 in _refinements(p, f.domain[j + 1:]):
                    for sigma in _refinements(p, f.codomain):
                        count += 1
                        if pullback_exists(p, f, j, pi1, pi2, sigma, cache) is None:
                            decision.holds = False
                            decision.evidence.append(
                                f"no pullback of {f} at input {j} for {describe_list(pi1)}; "
                                f"{describe_list(pi2)}; {describe_list(sigma)}")
                            return decision
    decision.evidence.append(f"pullbacks exist for all {count} lifting problems")
    return decision


def decide_push_fibration(p: PolyFunctor, cache: Optional[CartesianCache] = None) -> Decision:
    """Every base polymap, output and fibre tuple has an out-cartesian lift"""
    cache = cache or CartesianCache(p)
    decision = Decision(f"push-fibration({p.name})", True)
    count = 0
    for f in _base_polymaps(p):
        for i in range(len(f.codomain)):
            for pi in _refinements(p, f.domain):
                for sigma1 in _refinements(p, f.codomain[:i]):
                    for sigma2 in _refinements(p, f.codomain[i + 1:]):
                        count += 1
                        if pushforward_exists(p, f, i, pi, sigma1, sigma2, cache) is None:
                            decision.holds = False
                            decision.evidence.append(
                                f"no pushforward of {f} at output {i} for {describe_list(pi)}; "
                                f"{describe_list(sigma1)}; {describe_list(sigma2)}")
                            return decision
    decision.evidence.append(f"pushforwards exist for all {count} lifting problems")
    return decision


def decide_bifibration(p: PolyFunctor) -> Decision:
    cache = CartesianCache(p)
    pull = decide_pull_fibration(p, cache)
    push = decide_push_fibration(p, cache)
    decision = Decision(f"bifibration({p.name})", pull.holds and push.holds,
                        evidence=pull.evidence + push.evidence)
    if p.source.bound_relative or p.target.bound_relative:
        decision.notes.append(f"bound-relative: decided up to arity {p.source.arity_bound}")
    _logger.info(f"bifibration({p.name}) {decision.verdict}")
    return decision


def birep_bifib_crosscheck(P: FinPolycategory) -> Decision:
    """Birepresentability of P and bifibrancy of P -> terminal, decided independently"""
    birep = decide_birepresentable(P)
    bifib = decide_bifibration(unique_functor_to_terminal(P))
    agree = birep.holds == bifib.holds
    decision = Decision(
        question=f"birepresentable({P.name}) == bifibred over terminal",
        holds=agree,
        evidence=[f"birepresentable: {birep.verdict}", f"bifibration: {bifib.verdict}"]
        + birep.evidence[:1] + bifib.evidence[:2],
        notes=birep.notes,
        agreement=agree,
    )
    if not agree:
        _logger.error(f"Cross-check disagreement on {P.name}: {birep.verdict} vs {bifib.verdict}")
    return decision


def cartesian_composition_check(p: PolyFunctor) -> CheckReport:
    """Composites of cartesian polymaps are cartesian at the induced position"""
    report = CheckReport(f"cartesian composition over {p.name}")
    cache = CartesianCache(p)
    E = p.source
    maps = list(E.polymaps())
    by_input = defaultdict(list)
    for g in maps:
        for j, obj in enumerate(g.domain):
            by_input[obj].append((g, j))
    for f in maps:
        for i, obj in enumerate(f.codomain):
            for g, j in by_input[obj]:
                composite = E.try_compose(f, i, g, j)
                if composite is None:
                    continue
                if cache.get(g, SIDE_IN, j).passed:
                    for a in range(len(f.domain)):
                        if cache.get(f, SIDE_IN, a).passed:
                            report.checked += 1
                            if not cache.get(composite, SIDE_IN, j + a).passed:
                                report.fail(f"{g.id} after {f.id} is not in-cartesian at {j + a}")
                if cache.get(f, SIDE_OUT, i).passed:
                    for c in range(len(g.codomain)):
                        if cache.get(g, SIDE_OUT, c).passed:
                            report.checked += 1
                            if not cache.get(composite, SIDE_OUT, i + c).passed:
                                report.fail(f"{g.id} after {f.id} is not out-cartesian at {i + c}")
    return report


def cartesian_over_cartesian_check(p: PolyFunctor, q: PolyFunctor,
                                   composite: Optional[PolyFunctor] = None) -> CheckReport:
    """
    A p-cartesian polymap over a q-cartesian polymap is (q after p)-cartesian

    Args:
        p: Functor P -> E
        q: Functor E -> B
        composite: Functor standing for q after p (defaults to the actual composite)
    """
    composite = composite or compose_functors(q, p)
    report = CheckReport(f"cartesian over cartesian for {composite.name}")
    p_cache, q_cache, pq_cache = CartesianCache(p), CartesianCache(q), CartesianCache(composite)
    for psi in p.source.polymaps():
        image = p(psi)
        for side, size in ((SIDE_IN, len(psi.domain)), (SIDE_OUT, len(psi.codomain))):
            for index in range(size):
                if not (p_cache.get(psi, side, index).passed and q_cache.get(image, side, index).passed):
                    continue
                report.checked += 1
                cert = pq_cache.get(psi, side, index)
                if not cert.passed:
                    report.fail(cert.describe())
    return report


def _frobenius_shapes(bound: int) -> List[Shape]:
    return sorted(((m, n) for m in range(bound + 1) for n in range(bound + 1)),
                  key=lambda s: (s[0] + s[1], s[0]))


def _closure_constraints(bound: int) -> Dict[Shape, List[Tuple[Shape, int, Shape, int, Shape]]]:
    """Planar in-bound composites between shapes, indexed by their latest-assigned shape"""
    order = {shape: k for k, shape in enumerate(_frobenius_shapes(bound))}
    constraints = defaultdict(list)
    for s1 in order:
        for s2 in order:
            for i in range(s1[1]):
                for j in range(s2[0]):
                    if (i > 0 and j > 0) or (i < s1[1] - 1 and j < s2[0] - 1):
                        continue
                    s3 = (s1[0] + s2[0] - 1, s1[1] + s2[1] - 1)
                    if s3 not in order:
                        continue
                    last = max((s1, s2, s3), key=order.get)
                    constraints[last].append((s1, i, s2, j, s3))
    return constraints


def frobenius_monoids(P: FinPolycategory, obj: str, bound: Optional[int] = None,
                      limit: Optional[int] = None) -> List[FrobeniusMonoid]:
    """
    Enumerate arity-indexed families on obj closed under planar composition

    The (1,1) member is the identity. Families are truncated at bound and
    closure is checked among in-bound composites. Each family is returned
    together with the functor terminal(bound) -> P it defines, which has
    been functor-checked.
    """
    if obj not in P.objects:
        raise PolycatError(f"Unknown object {obj} in {P.name}")
    bound = min(bound or P.arity_bound, P.arity_bound)
    shapes = _frobenius_shapes(bound)
    constraints = _closure_constraints(bound)
    candidates = {(m, n): P.hom((obj,) * m, (obj,) * n) for m, n in shapes}
    candidates[(1, 1)] = (P.identity(obj),)
    results: List[FrobeniusMonoid] = []
    family: Dict[Shape, PolyMap] = {}

    def consistent(shape: Shape) -> bool:
        for s1, i, s2, j, s3 in constraints[shape]:
            if P.compose(family[s1], i, family[s2], j) != family[s3]:
                return False
        return True

    def search(k: int):
        if limit is not None and len(results) >= limit:
            return
        if k == len(shapes):
            results.append(_package_frobenius(P, obj, dict(family), bound))
            return
        shape = shapes[k]
        for candidate in candidates[shape]:
            family[shape] = candidate
            if consistent(shape):
                search(k + 1)
            del family[shape]

    search(0)
    _logger.info(f"Found {len(results)} Frobenius families on {obj} in {P.name} up to arity {bound}")
    return results


def _package_frobenius(P, obj, family, bound) -> FrobeniusMonoid:
    source = terminal(bound)
    functor = PolyFunctor(source, P, {TERMINAL_OBJECT: obj},
                          lambda f: family[(len(f.domain), len(f.codomain))].id,
                          name=f"frobenius({obj})")
    report = check_functor(functor)
    if not report.passed:
        raise PolycatError(f"Frobenius family on {obj} is not a functor: {report.failures[0]}")
    return FrobeniusMonoid(obj, family, bound, functor)


def polyfiber(p: PolyFunctor, fm: FrobeniusMonoid) -> TablePolycategory:
    """
    The sub-polycategory of source objects over fm.object and polymaps over its family

    Raises:
        InvariantError: the result is not closed (p is not a functor)
    """
    E = p.source
    bound = min(E.arity_bound, fm.bound)
    objects = p.fibre_objects(fm.object)
    maps = []
    for domain in lists_up_to(objects, bound):
        for codomain in lists_up_to(objects, bound):
            over = fm.family[(len(domain), len(codomain))]
            maps.extend(psi for psi in E.hom(domain, codomain) if p(psi) == over)
    composition = {}
    for f in maps:
        for i in range(len(f.codomain)):
            for g in maps:
                for j in range(len(g.domain)):
                    boundary = try_plan(f.boundary, i, g.boundary, j)
                    if boundary is None or len(boundary.domain) > bound or len(boundary.codomain) > bound:
                        continue
                    composition[(f, i, g, j)] = E.compose(f, i, g, j)
    identities = {obj: E.identity(obj) for obj in objects}
    return TablePolycategory(objects, bound, maps, identities, composition, name=f"polyfiber({p.name})")


def _pair(left: str, right: str) -> str:
    return f"({left},{right})"


def refinement_pullback(p: PolyFunctor, s: PolyFunctor, bound: Optional[int] = None) -> RefinementPullback:
    """
    E x_B B' for p: E -> B and s: B' -> B, with both projections

    Objects are pairs (R, X) with p(R) = s(X); polymaps are pairs lying over
    the same base polymap; composition is componentwise.
    """
    if p.target is not s.target and p.target.name != s.target.name:
        raise PolycatError(f"Functors {p.name} and {s.name} do not share a target")
    E, R = p.source, s.source
    bound = bound or min(E.arity_bound, R.arity_bound)
    pairs = {_pair(a, x): (a, x) for a in E.objects for x in R.objects if p.map_object(a) == s.map_object(x)}
    objects = sorted(pairs)
    to_source, to_refinement = {}, {}
    maps = []
    for domain in lists_up_to(objects, bound):
        for codomain in lists_up_to(objects, bound):
            left = Boundary(tuple(pairs[o][0] for o in domain), tuple(pairs[o][0] for o in codomain))
            right = Boundary(tuple(pairs[o][1] for o in domain), tuple(pairs[o][1] for o in codomain))
            for psi in E.hom(left.domain, left.codomain):
                for phi in R.hom(right.domain, right.codomain):
                    if p(psi) != s(phi):
                        continue
                    joint = PolyMap(_pair(psi.id, phi.id), Boundary(domain, codomain))
                    maps.append(joint)
                    to_source[joint], to_refinement[joint] = psi, phi
    composition = {}
    for f in maps:
        for i in range(len(f.codomain)):
            for g in maps:
                for j in range(len(g.domain)):
                    boundary = try_plan(f.boundary, i, g.boundary, j)
                    if boundary is None or len(boundary.domain) > bound or len(boundary.codomain) > bound:
                        continue
                    left = E.compose(to_source[f], i, to_source[g], j)
                    right = R.compose(to_refinement[f], i, to_refinement[g], j)
                    composition[(f, i, g, j)] = PolyMap(_pair(left.id, right.id), boundary)
    identities = {}
    for obj in objects:
        a, x = pairs[obj]
        identities[obj] = PolyMap(_pair(E.identity(a).id, R.identity(x).id), Boundary((obj,), (obj,)))
    product = TablePolycategory(objects, bound, maps, identities, composition,
                                name=f"{E.name} x {R.name}")
    return RefinementPullback(
        product,
        PolyFunctor.from_polymap_table(product, E, {o: pairs[o][0] for o in objects}, to_source,
                                       name=f"pr({E.name})"),
        PolyFunctor.from_polymap_table(product, R, {o: pairs[o][1] for o in objects}, to_refinement,
                                       name=f"pr({R.name})"),
    )


def refinement_pullback_check(p: PolyFunctor, s: PolyFunctor, bound: Optional[int] = None) -> CheckReport:
    """
    Lifts along s(f) in E give lifts along f in the pullback, for pulls and pushes

    For every polymap f of B' and every fibre tuple over f in the pullback,
    whenever E has the cartesian lift of s(f) at the first components, the
    projection to B' has one too.
    """
    pulled = refinement_pullback(p, s, bound)
    q = pulled.to_refinement
    report = CheckReport(f"refinement pullback of {p.name} along {s.name}")
    p_cache, q_cache = CartesianCache(p), CartesianCache(q)

    firsts = pulled.to_source.map_list

    for f in q.target.polymaps():
        if not pulled.polycategory.within_bound(f.boundary):
            continue
        base = s(f)
        for j in range(len(f.domain)):
            for pi1 in _refinements(q, f.domain[:j]):
                for pi2 in _refinements(q, f.domain[j + 1:]):
                    for sigma in _refinements(q, f.codomain):
                        if pullback_exists(p, base, j, firsts(pi1), firsts(pi2), firsts(sigma), p_cache) is None:
                            continue
                        report.checked += 1
                        if pullback_exists(q, f, j, pi1, pi2, sigma, q_cache) is None:
                            report.fail(f"no pullback of {f} at input {j} in {pulled.polycategory.name}")
        for i in range(len(f.codomain)):
            for pi in _refinements(q, f.domain):
                for sigma1 in _refinements(q, f.codomain[:i]):
                    for sigma2 in _refinements(q, f.codomain[i + 1:]):
                        if pushforward_exists(p, base, i, firsts(pi), firsts(sigma1), firsts(sigma2),
                                              p_cache) is None:
                            continue
                        report.checked += 1
                        if pushforward_exists(q, f, i, pi, sigma1, sigma2, q_cache) is None:
                            report.fail(f"no pushforward of {f} at output {i} in {pulled.polycategory.name}")
    return report
