"""
Universality Service
Unique-factorization certificates, universal objects, duals and birepresentability
"""
import logging
from collections import defaultdict
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from ..constants import (
    SIDE_IN, SIDE_OUT, UNIVERSAL_IN, UNIVERSAL_LEFT_DUAL, UNIVERSAL_OUT, UNIVERSAL_PAR, UNIVERSAL_RIGHT_DUAL,
    UNIVERSAL_TENSOR,
)
from ..exceptions import IndexOutOfRange
from ..models.polycategory import Boundary, FinPolycategory, PolyMap
from ..utils import describe_list, lists_up_to
from .dto import CheckReport, Decision, FactorizationFailure, UniversalityCertificate, UniversalObjectResult

_logger = logging.getLogger(__name__)

DUAL_CONDITIONS = [
    'cup out-universal at the dual',
    'cap in-universal at the dual',
    'cup out-universal at the object',
    'cap in-universal at the object',
    'snake identities',
]


class CertificateCache:
    """Memo of certificates keyed by (polymap, side, index)"""

    def __init__(self):
        self._store: Dict[Tuple[PolyMap, str, int], UniversalityCertificate] = {}

    def get(self, P, u, side, index):
        key = (u, side, index)
        if key not in self._store:
            check = is_out_universal if side == SIDE_OUT else is_in_universal
            self._store[key] = check(P, u, index)
        return self._store[key]


def _context_pairs(P: FinPolycategory, total: int) -> Iterator[Tuple[Tuple[str, ...], Tuple[str, ...]]]:
    """Pairs of object lists with combined length at most total"""
    for left in lists_up_to(P.objects, total):
        for right in lists_up_to(P.objects, total - len(left)):
            yield left, right


def _factor_uniquely(P, sources: Sequence[PolyMap], targets: Sequence[PolyMap], compose_one
                     ) -> Optional[FactorizationFailure]:
    """None when compose_one restricts to a bijection sources -> targets"""
    preimages = defaultdict(list)
    for k in sources:
        preimages[compose_one(k)].append(k)
    for target in targets:
        found = preimages.get(target, [])
        if len(found) != 1:
            return FactorizationFailure(target, tuple(found))
    return None


def is_out_universal(P: FinPolycategory, u: PolyMap, i: int) -> UniversalityCertificate:
    """
    Check that every h through the output context of u factors uniquely as k after u

    Quantifies Γ1, Γ2, Δ with h: Γ1,Γ,Γ2 -> Δ1,Δ,Δ2 and k: Γ1,A,Γ2 -> Δ,
    subject to Γ1 or Δ1 empty and Γ2 or Δ2 empty. Instances where h or k
    leave the arity bound are skipped and counted.

    Raises:
        IndexOutOfRange: no output i
    """
    if not 0 <= i < len(u.codomain):
        raise IndexOutOfRange(f"Output {i} of {u}", index=i, length=len(u.codomain))
    obj = u.codomain[i]
    delta1, delta2 = u.codomain[:i], u.codomain[i + 1:]
    cert = UniversalityCertificate(u, SIDE_OUT, i, bound=P.arity_bound, bound_relative=P.bound_relative)
    for gamma1, gamma2 in _context_pairs(P, P.arity_bound):
        if (delta1 and gamma1) or (delta2 and gamma2):
            continue
        for delta in lists_up_to(P.objects, P.arity_bound):
            kb = Boundary(gamma1 + (obj,) + gamma2, delta)
            hb = Boundary(gamma1 + u.domain + gamma2, delta1 + delta + delta2)
            if not (P.within_bound(kb) and P.within_bound(hb)):
                cert.skipped_instances += 1
                continue
            cert.checked_instances += 1
            failure = _factor_uniquely(P, P.hom(kb.domain, kb.codomain), P.hom(hb.domain, hb.codomain),
                                       lambda k: P.compose(u, i, k, len(gamma1)))
            if failure is not None:
                cert.failure = failure
                _logger.debug(cert.describe())
                return cert
    if cert.skipped_instances and P.bound_relative:
        _logger.debug(f"{u} out-universality skipped {cert.skipped_instances} instances beyond bound")
    return cert


def is_in_universal(P: FinPolycategory, n: PolyMap, j: int) -> UniversalityCertificate:
    """
    Check that every h through the input context of n factors uniquely as n after k

    Raises:
        IndexOutOfRange: no input j
    """
    if not 0 <= j < len(n.domain):
        raise IndexOutOfRange(f"Input {j} of {n}", index=j, length=len(n.domain))
    obj = n.domain[j]
    gamma1, gamma2 = n.domain[:j], n.domain[j + 1:]
    cert = UniversalityCertificate(n, SIDE_IN, j, bound=P.arity_bound, bound_relative=P.bound_relative)
    for delta1, delta2 in _context_pairs(P, P.arity_bound):
        if (delta1 and gamma1) or (delta2 and gamma2):
            continue
        for gamma in lists_up_to(P.objects, P.arity_bound):
            kb = Boundary(gamma, delta1 + (obj,) + delta2)
            hb = Boundary(gamma1 + gamma + gamma2, delta1 + n.codomain + delta2)
            if not (P.within_bound(kb) and P.within_bound(hb)):
                cert.skipped_instances += 1
                continue
            cert.checked_instances += 1
            failure = _factor_uniquely(P, P.hom(kb.domain, kb.codomain), P.hom(hb.domain, hb.codomain),
                                       lambda k: P.compose(k, len(delta1), n, j))
            if failure is not None:
                cert.failure = failure
                _logger.debug(cert.describe())
                return cert
    return cert


def find_out_universal(P: FinPolycategory, gamma: Sequence[str], delta1: Sequence[str] = (),
                       delta2: Sequence[str] = (), kind: str = UNIVERSAL_OUT,
                       cache: Optional[CertificateCache] = None) -> Optional[UniversalObjectResult]:
    """First certified out-universal Γ -> Δ1,A,Δ2 in (object, polymap) order"""
    cache = cache or CertificateCache()
    gamma, delta1, delta2 = tuple(gamma), tuple(delta1), tuple(delta2)
    for obj in P.objects:
        boundary = Boundary(gamma, delta1 + (obj,) + delta2)
        if not P.within_bound(boundary):
            return None
        for u in P.hom(boundary.domain, boundary.codomain):
            cert = cache.get(P, u, SIDE_OUT, len(delta1))
            if cert.passed:
                return UniversalObjectResult(obj, u, kind, cert)
    return None


def find_in_universal(P: FinPolycategory, gamma1: Sequence[str] = (), gamma2: Sequence[str] = (),
                      delta: Sequence[str] = (), kind: str = UNIVERSAL_IN,
                      cache: Optional[CertificateCache] = None) -> Optional[UniversalObjectResult]:
    """First certified in-universal Γ1,A,Γ2 -> Δ in (object, polymap) order"""
    cache = cache or CertificateCache()
    gamma1, gamma2, delta = tuple(gamma1), tuple(gamma2), tuple(delta)
    for obj in P.objects:
        boundary = Boundary(gamma1 + (obj,) + gamma2, delta)
        if not P.within_bound(boundary):
            return None
        for n in P.hom(boundary.domain, boundary.codomain):
            cert = cache.get(P, n, SIDE_IN, len(gamma1))
            if cert.passed:
                return UniversalObjectResult(obj, n, kind, cert)
    return None


def find_tensor(P: FinPolycategory, gamma: Sequence[str], cache=None) -> Optional[UniversalObjectResult]:
    return find_out_universal(P, gamma, kind=UNIVERSAL_TENSOR, cache=cache)


def find_par(P: FinPolycategory, delta: Sequence[str], cache=None) -> Optional[UniversalObjectResult]:
    return find_in_universal(P, delta=delta, kind=UNIVERSAL_PAR, cache=cache)


def right_snakes(P: FinPolycategory, cup: PolyMap, cap: PolyMap) -> bool:
    """cup: . -> A,D and cap: D,A -> . compose to both identities"""
    obj, dual = cup.codomain
    return (P.try_compose(cup, 1, cap, 0) == P.identity(obj)
            and P.try_compose(cup, 0, cap, 1) == P.identity(dual))


def left_snakes(P: FinPolycategory, cup: PolyMap, cap: PolyMap) -> bool:
    """cup: . -> L,A and cap: A,L -> . compose to both identities"""
    dual, obj = cup.codomain
    return (P.try_compose(cup, 0, cap, 1) == P.identity(obj)
            and P.try_compose(cup, 1, cap, 0) == P.identity(dual))


def _find_dual(P, obj, kind, cache):
    cache = cache or CertificateCache()
    if P.arity_bound < 2:
        return None
    for dual in P.objects:
        if kind == UNIVERSAL_RIGHT_DUAL:
            cups = P.hom((), (obj, dual))
            caps = P.hom((dual, obj), ())
            snakes, universal_at = right_snakes, 1
        else:
            cups = P.hom((), (dual, obj))
            caps = P.hom((obj, dual), ())
            snakes, universal_at = left_snakes, 0
        for cup in cups:
            for cap in caps:
                if not snakes(P, cup, cap):
                    continue
                cert = cache.get(P, cup, SIDE_OUT, universal_at)
                if not cert.passed:
                    _logger.error(f"{kind} pair {cup.id}, {cap.id} satisfies the snakes but the cup "
                                  f"is not out-universal: {cert.describe()}")
                return UniversalObjectResult(dual, cup, kind, cert, partner=cap)
    return None


def find_right_dual(P: FinPolycategory, obj: str, cache=None) -> Optional[UniversalObjectResult]:
    """
    Right dual D of obj with cup: . -> obj,D and cap: D,obj -> .

    The returned certificate independently checks that the cup is
    out-universal at D.
    """
    return _find_dual(P, obj, UNIVERSAL_RIGHT_DUAL, cache)


def find_left_dual(P: FinPolycategory, obj: str, cache=None) -> Optional[UniversalObjectResult]:
    """Left dual L of obj with cup: . -> L,obj and cap: obj,L -> ."""
    return _find_dual(P, obj, UNIVERSAL_LEFT_DUAL, cache)


def dual_conditions(P: FinPolycategory, obj: str, dual: str, cache=None) -> Dict[str, bool]:
    """
    The five equivalent characterizations of dual as a right dual of obj

    Each condition is decided on its own, by search over the relevant hom-set.
    """
    cache = cache or CertificateCache()
    if P.arity_bound < 2:
        return {name: False for name in DUAL_CONDITIONS}
    cups = P.hom((), (obj, dual))
    caps = P.hom((dual, obj), ())
    return {
        DUAL_CONDITIONS[0]: any(cache.get(P, cup, SIDE_OUT, 1).passed for cup in cups),
        DUAL_CONDITIONS[1]: any(cache.get(P, cap, SIDE_IN, 0).passed for cap in caps),
        DUAL_CONDITIONS[2]: any(cache.get(P, cup, SIDE_OUT, 0).passed for cup in cups),
        DUAL_CONDITIONS[3]: any(cache.get(P, cap, SIDE_IN, 1).passed for cap in caps),
        DUAL_CONDITIONS[4]: any(right_snakes(P, cup, cap) for cup in cups for cap in caps),
    }


def _context_text(left, mid, right) -> str:
    return ','.join(part for part in (describe_list(left) if left else '', mid,
                                      describe_list(right) if right else '') if part)


def _all_universal_objects(P, cache) -> Tuple[bool, List[str]]:
    """Characterization by universal objects for every surrounding context"""
    bound = P.arity_bound
    count = 0
    for gamma in lists_up_to(P.objects, bound):
        for delta1, delta2 in _context_pairs(P, bound - 1):
            if find_out_universal(P, gamma, delta1, delta2, cache=cache) is None:
                return False, [f"no out-universal object for {describe_list(gamma)} -> "
                               f"{_context_text(delta1, '_', delta2)}"]
            count += 1
    for delta in lists_up_to(P.objects, bound):
        for gamma1, gamma2 in _context_pairs(P, bound - 1):
            if find_in_universal(P, gamma1, gamma2, delta, cache=cache) is None:
                return False, [f"no in-universal object for {_context_text(gamma1, '_', gamma2)} -> "
                               f"{describe_list(delta)}"]
            count += 1
    return True, [f"universal objects exist for all {count} contexts"]


def _connectives(P, cache) -> Tuple[bool, List[str]]:
    """Characterization by tensors, pars and both duals"""
    evidence = []
    for gamma in lists_up_to(P.objects, P.arity_bound):
        found = find_tensor(P, gamma, cache)
        if found is None:
            return False, evidence + [f"no tensor of ({describe_list(gamma)})"]
        evidence.append(f"tensor({describe_list(gamma)}) = {found.describe()}")
    for delta in lists_up_to(P.objects, P.arity_bound):
        found = find_par(P, delta, cache)
        if found is None:
            return False, evidence + [f"no par of ({describe_list(delta)})"]
        evidence.append(f"par({describe_list(delta)}) = {found.describe()}")
    for obj in P.objects:
        for finder, label in ((find_right_dual, 'right dual'), (find_left_dual, 'left dual')):
            found = finder(P, obj, cache)
            if found is None:
                return False, evidence + [f"no {label} of {obj}"]
            evidence.append(f"{label}({obj}) = {found.describe()}")
    return True, evidence


def decide_birepresentable(P: FinPolycategory) -> Decision:
    """
    Decide birepresentability by both characterizations and compare them

    Returns:
        Decision holding when both characterizations hold; agreement records
        whether they coincided
    """
    cache = CertificateCache()
    by_objects, evidence_a = _all_universal_objects(P, cache)
    by_connectives, evidence_b = _connectives(P, cache)
    decision = Decision(
        question=f"birepresentable({P.name})",
        holds=by_objects and by_connectives,
        evidence=evidence_a + evidence_b,
        agreement=by_objects == by_connectives,
    )
    if P.bound_relative:
        decision.notes.append(f"bound-relative: decided up to arity {P.arity_bound}")
    if not decision.agreement:
        _logger.error(f"Birepresentability characterizations disagree on {P.name}: "
                      f"universal objects {by_objects}, connectives {by_connectives}")
    _logger.info(f"birepresentable({P.name}) {decision.verdict}")
    return decision


def tensor_uniqueness_check(P: FinPolycategory, gamma: Sequence[str]) -> CheckReport:
    """
    Every two tensors of gamma are related by exactly one invertible unary polymap

    Collects every certified tensor witness, then for each ordered pair
    (m, m') requires a unique phi with phi after m = m', and phi invertible.
    """
    report = CheckReport(f"tensor uniqueness for ({describe_list(gamma)})")
    cache = CertificateCache()
    witnesses = []
    for obj in P.objects:
        boundary = Boundary(tuple(gamma), (obj,))
        if not P.within_bound(boundary):
            continue
        witnesses.extend(m for m in P.hom(boundary.domain, boundary.codomain)
                         if cache.get(P, m, SIDE_OUT, 0).passed)
    for m in witnesses:
        for other in witnesses:
            report.checked += 1
            source, target = m.codomain[0], other.codomain[0]
            matches = [phi for phi in P.hom((source,), (target,)) if P.compose(m, 0, phi, 0) == other]
            if len(matches) != 1:
                report.fail(f"{len(matches)} comparison maps from {m} to {other}")
                continue
            phi = matches[0]
            inverse = [psi for psi in P.hom((target,), (source,))
                       if P.compose(phi, 0, psi, 0) == P.identity(source)
                       and P.compose(psi, 0, phi, 0) == P.identity(target)]
            if not inverse:
                report.fail(f"comparison {phi} is not invertible")
    return report


def universal_composition_check(P: FinPolycategory) -> CheckReport:
    """
    Composites of universal polymaps along their cut are universal at the induced position

    In-clause: f in-universal at a, g in-universal at its cut input j, so
    g after f is in-universal at j + a. Out-clause: f out-universal at its
    cut output i, g out-universal at c, so the composite is out-universal at
    i + c.
    """
    report = CheckReport('universal composition')
    cache = CertificateCache()
    maps = list(P.polymaps())
    by_input = defaultdict(list)
    for g in maps:
        for j, obj in enumerate(g.domain):
            by_input[obj].append((g, j))
    for f in maps:
        for i, obj in enumerate(f.codomain):
            for g, j in by_input[obj]:
                composite = P.try_compose(f, i, g, j)
                if composite is None:
                    continue
                if cache.get(P, g, SIDE_IN, j).passed:
                    for a in range(len(f.domain)):
                        if cache.get(P, f, SIDE_IN, a).passed:
                            report.checked += 1
                            if not cache.get(P, composite, SIDE_IN, j + a).passed:
                                report.fail(f"{g.id} after {f.id} at ({i}, {j}) is not in-universal at {j + a}")
                if cache.get(P, f, SIDE_OUT, i).passed:
                    for c in range(len(g.codomain)):
                        if cache.get(P, g, SIDE_OUT, c).passed:
                            report.checked += 1
                            if not cache.get(P, composite, SIDE_OUT, i + c).passed:
                                report.fail(f"{g.id} after {f.id} at ({i}, {j}) is not out-universal at {i + c}")
    _logger.info(f"Universal composition on {P.name}: {report.checked} composites, {len(report.failures)} failures")
    return report
