"""
Norm Service
Exact gauges, polars, projective/injective norms, pullbacks and pushforwards
"""
import itertools
import logging
import random
from fractions import Fraction
from typing import List, Sequence, Tuple

import numpy as np
import sympy

from ..constants import (
    MAX_NORM_DIM, MAX_POLAR_VERTICES, MAX_TENSOR_ORDER, NORM_KIND_EXTENDED, NORM_KIND_NORM,
    NORM_KIND_SEMINORM, RANDOM_DENOMINATOR_RANGE, RANDOM_NUMERATOR_RANGE,
)
from ..exceptions import Degenerate, DimMismatch, DimTooLarge, InvariantError, NotSpanning
from ..models.norm import (
    ExtendedRational, NormResult, PolyLinearMap, PolytopeNorm, TensorElement, Vector, as_vector,
    contract, fraction_array, outer, product_tuples,
)
from ..utils import (
    dot, format_rational, format_vector, from_sympy, matrix_rank, random_rational, sympy_matrix,
    symmetrize,
)
from . import simplex
from .dto import CheckReport, Decision
from .linear_service import compose_linear, identity_map, is_contractive, universal_map_tensors

_logger = logging.getLogger(__name__)


# ---------------------------------------------------------------------------
# Evaluation
# ---------------------------------------------------------------------------

def _check_length(x: Sequence, dim: int, label: str = 'vector'):
    if len(x) != dim:
        raise DimMismatch(f"{label} {format_vector(x)} has dimension {len(x)}, expected {dim}",
                          expected=dim, found=len(x))


def _lp_gauge(vertices: Sequence[Vector], x: Vector) -> simplex.LPResult:
    dim = len(x)
    A = [[v[r] for v in vertices] for r in range(dim)]
    return simplex.minimize([Fraction(1)] * len(vertices), A, list(x))


def gauge(vertices: Sequence[Sequence[Fraction]], x: Sequence[Fraction]) -> Fraction:
    """
    Minkowski gauge of conv(vertices) at x

    min sum(l) subject to sum(l_v v) = x, l >= 0, solved exactly.

    Raises:
        NotSpanning: vertices do not span the space of x
        DimMismatch: a vertex of the wrong length
    """
    x = as_vector(x)
    vertices = [as_vector(v) for v in vertices]
    for v in vertices:
        _check_length(v, len(x), 'vertex')
    if matrix_rank(vertices) != len(x):
        raise NotSpanning(f"{len(vertices)} vertices do not span dimension {len(x)}",
                          error_code='not_spanning')
    result = _lp_gauge(vertices, x)
    if result.status != simplex.OPTIMAL:
        raise InvariantError(f"Gauge LP ended {result.status} on a spanning symmetric family", check='gauge')
    return result.value


def gauge_extended(vertices: Sequence[Sequence[Fraction]], x: Sequence[Fraction]) -> ExtendedRational:
    """Gauge that is +inf off the span of vertices"""
    x = as_vector(x)
    if not any(x):
        return ExtendedRational.of(0)
    vertices = [as_vector(v) for v in vertices]
    if not vertices:
        return ExtendedRational.infinity()
    result = _lp_gauge(vertices, x)
    if result.status == simplex.INFEASIBLE:
        return ExtendedRational.infinity()
    return ExtendedRational.of(result.value)


def dual_norm_eval(norm: PolytopeNorm, phi: Sequence[Fraction]) -> Fraction:
    """sup of |phi(a)| over the unit ball, attained at a vertex"""
    _check_length(phi, norm.dim, 'covector')
    return max((abs(dot(phi, v)) for v in norm.vertices), default=Fraction(0))


def norm_value(norm, x: Sequence[Fraction]) -> ExtendedRational:
    """
    Value of a PolytopeNorm or a NormResult at x

    Covector presentations are a max of |c.x|, vertex presentations a gauge.
    """
    x = as_vector(x)
    _check_length(x, norm.dim)
    if isinstance(norm, PolytopeNorm):
        return ExtendedRational.of(max(abs(dot(f, x)) for f in norm.dual_vertices))
    if norm.covectors is not None:
        return ExtendedRational.of(max((abs(dot(c, x)) for c in norm.covectors), default=Fraction(0)))
    return gauge_extended(norm.vertices, x)


# ---------------------------------------------------------------------------
# Polars and constructors
# ---------------------------------------------------------------------------

def polar_vertices(vertices: Sequence[Sequence[Fraction]], dim: int) -> List[Vector]:
    """
    Vertices of the polar of conv(vertices) by facet enumeration

    Each dim-subset of independent vertices determines the covector taking
    the value 1 on all of them; it is a facet when no vertex exceeds 1.

    Raises:
        DimTooLarge: dim or the vertex count exceeds the caps
        Degenerate: the vertices do not span
    """
    vertices = symmetrize(vertices)
    if dim > MAX_NORM_DIM:
        raise DimTooLarge(f"Polar of dimension {dim} exceeds {MAX_NORM_DIM}", dim=dim, cap=MAX_NORM_DIM)
    if len(vertices) > MAX_POLAR_VERTICES:
        raise DimTooLarge(f"{len(vertices)} vertices exceed {MAX_POLAR_VERTICES}",
                          dim=len(vertices), cap=MAX_POLAR_VERTICES)
    for v in vertices:
        _check_length(v, dim, 'vertex')
    if matrix_rank(vertices) != dim:
        raise Degenerate(f"Vertex cloud of rank {matrix_rank(vertices)} in dimension {dim}",
                         error_code='degenerate')
    ones = sympy.Matrix([1] * dim)
    facets = set()
    for subset in itertools.combinations(vertices, dim):
        matrix = sympy_matrix(subset)
        if matrix.det() == 0:
            continue
        f = tuple(from_sympy(c) for c in matrix.LUsolve(ones))
        if all(dot(f, v) <= 1 for v in vertices):
            facets.add(f)
    polar = symmetrize(facets)
    _logger.debug(f"Polar of {len(vertices)} vertices in dimension {dim}: {len(polar)} facets")
    return polar


def norm_from_vertices(vertices: Sequence[Sequence[Fraction]], dim: int, name: str = '') -> PolytopeNorm:
    """PolytopeNorm with unit ball conv(±vertices), extreme points only"""
    dual = polar_vertices(vertices, dim)
    return PolytopeNorm(dim, polar_vertices(dual, dim), dual, name=name).validate()


def norm_from_covectors(covectors: Sequence[Sequence[Fraction]], dim: int, name: str = '') -> PolytopeNorm:
    """PolytopeNorm whose value is max |c.x| over the covectors"""
    return norm_from_vertices(polar_vertices(covectors, dim), dim, name=name)


def _unit(dim: int, k: int, value=1) -> Vector:
    return tuple(Fraction(value) if r == k else Fraction(0) for r in range(dim))


def _signs(dim: int) -> List[Tuple[int, ...]]:
    return list(itertools.product((1, -1), repeat=dim))


def weighted_l1(weights: Sequence[Fraction], name: str = '') -> PolytopeNorm:
    """||x|| = sum w_k |x_k|"""
    weights = as_vector(weights)
    if any(w <= 0 for w in weights):
        raise InvariantError("Weights must be positive", check='weights')
    dim = len(weights)
    vertices = symmetrize(_unit(dim, k, 1 / w) for k, w in enumerate(weights))
    dual = [tuple(s * w for s, w in zip(signs, weights)) for signs in _signs(dim)]
    return PolytopeNorm(dim, vertices, dual, name=name or f"l1{list(map(str, weights))}")


def weighted_linf(weights: Sequence[Fraction], name: str = '') -> PolytopeNorm:
    """||x|| = max w_k |x_k|, the dual of the l1 norm with weights 1/w_k"""
    weights = as_vector(weights)
    if any(w <= 0 for w in weights):
        raise InvariantError("Weights must be positive", check='weights')
    dual = weighted_l1([1 / w for w in weights])
    return PolytopeNorm(len(weights), dual.dual_vertices, dual.vertices,
                        name=name or f"linf{list(map(str, weights))}")


def l1(dim: int) -> PolytopeNorm:
    return weighted_l1([1] * dim, name=f"l1({dim})")


def linf(dim: int) -> PolytopeNorm:
    return weighted_linf([1] * dim, name=f"linf({dim})")


def scaled(norm: PolytopeNorm, factor) -> PolytopeNorm:
    """The norm factor * ||x||"""
    factor = Fraction(factor)
    if factor <= 0:
        raise InvariantError(f"Scale factor {format_rational(factor)} must be positive", check='scale')
    return PolytopeNorm(norm.dim, [tuple(x / factor for x in v) for v in norm.vertices],
                        [tuple(x * factor for x in f) for f in norm.dual_vertices],
                        name=f"{format_rational(factor)}*{norm.name}")


def dual_of(norm: PolytopeNorm) -> PolytopeNorm:
    return norm.dual()


# ---------------------------------------------------------------------------
# Tensor norms
# ---------------------------------------------------------------------------

def _check_factors(u: TensorElement, norms: Sequence[PolytopeNorm]):
    if len(norms) > MAX_TENSOR_ORDER:
        raise DimTooLarge(f"Tensor order {len(norms)} exceeds {MAX_TENSOR_ORDER}", dim=len(norms),
                          cap=MAX_TENSOR_ORDER)
    if tuple(n.dim for n in norms) != u.dims:
        raise DimMismatch(f"Tensor of shape {u.dims} against factors {tuple(n.dim for n in norms)}",
                          expected=u.dims, found=tuple(n.dim for n in norms))


def projective_vertices(norms: Sequence[PolytopeNorm]) -> List[Vector]:
    """Deduplicated elementary tensors of factor vertices"""
    return sorted({outer(vectors) for vectors in product_tuples([n.vertices for n in norms])})


def injective_covectors(norms: Sequence[PolytopeNorm]) -> List[Vector]:
    return sorted({outer(vectors) for vectors in product_tuples([n.dual_vertices for n in norms])})


def projective_norm(u: TensorElement, norms: Sequence[PolytopeNorm]) -> Fraction:
    """inf over decompositions u = sum of elementary tensors of the product of factor norms"""
    _check_factors(u, norms)
    return gauge(projective_vertices(norms), u.flat())


def injective_norm(u: TensorElement, norms: Sequence[PolytopeNorm]) -> Fraction:
    """sup of |(phi1 x ... x phin)(u)| over dual unit balls"""
    _check_factors(u, norms)
    return max(abs(Fraction(contract(u.coefficients, phis).item()))
               for phis in product_tuples([n.dual_vertices for n in norms]))


def projective_unit_ball(norms: Sequence[PolytopeNorm]) -> PolytopeNorm:
    dim = int(np.prod([n.dim for n in norms]))
    return norm_from_vertices(projective_vertices(norms), dim,
                              name=f"proj({','.join(n.name for n in norms)})")


def injective_unit_ball(norms: Sequence[PolytopeNorm]) -> PolytopeNorm:
    dim = int(np.prod([n.dim for n in norms]))
    return norm_from_vertices(polar_vertices(injective_covectors(norms), dim), dim,
                              name=f"inj({','.join(n.name for n in norms)})")


def _crossnorm_condition(candidate: PolytopeNorm, factors: Sequence[PolytopeNorm], condition: int):
    """First failing product for one crossnorm inequality, with the number checked"""
    if condition == 1:
        families = [n.vertices for n in factors]
        evaluate = lambda t: norm_value(candidate, t).value  # noqa: E731
    else:
        families = [n.dual_vertices for n in factors]
        evaluate = lambda t: dual_norm_eval(candidate, t)  # noqa: E731
    checked = 0
    for vectors in product_tuples(families):
        checked += 1
        value = evaluate(outer(vectors))
        if value > 1:
            return tuple(vectors), value, checked
    return None, None, checked


def is_crossnorm(candidate: PolytopeNorm, factors: Sequence[PolytopeNorm]) -> Decision:
    """
    Both crossnorm inequalities, checked on vertex and dual-vertex products

    Condition 1: ||v1 x ... x vn|| <= 1 for factor vertices.
    Condition 2: ||phi1 x ... x phin||* <= 1 for factor dual vertices.
    """
    total = int(np.prod([n.dim for n in factors]))
    if candidate.dim != total:
        raise DimMismatch(f"Candidate of dimension {candidate.dim} on a tensor space of dimension {total}",
                          expected=total, found=candidate.dim)
    decision = Decision(f"crossnorm({candidate.name})", True)
    for condition in (1, 2):
        witness, value, checked = _crossnorm_condition(candidate, factors, condition)
        if witness is not None:
            decision.holds = False
            decision.evidence.append(
                f"condition {condition} fails at {' x '.join(format_vector(v) for v in witness)}: "
                f"{format_rational(value)}")
            decision.notes.append(f"condition {condition}")
            return decision
        decision.evidence.append(f"condition {condition}: {checked} products within the unit ball")
    return decision


def crossnorm_contractive_equivalence(candidate: PolytopeNorm, factors: Sequence[PolytopeNorm]) -> Decision:
    """
    Crossnorm iff the universal m and w are contractive, both sides decided

    Condition 1 is compared with m and condition 2 with w. Verdicts must
    agree and so must the witnesses: the first failing product of condition
    1 is the state tuple m fails at, and the effect tuple w fails at is a
    failing product of condition 2. The decision's witness is the pair of
    condition witnesses.
    """
    total = int(np.prod([n.dim for n in factors]))
    if candidate.dim != total:
        raise DimMismatch(f"Candidate of dimension {candidate.dim} on a tensor space of dimension {total}",
                          expected=total, found=candidate.dim)
    m, w, _, _ = universal_map_tensors([n.dim for n in factors])
    m_contractive = is_contractive(m, factors, [candidate])
    w_contractive = is_contractive(w, [candidate], factors)
    witness1, _, _ = _crossnorm_condition(candidate, factors, 1)
    witness2, _, _ = _crossnorm_condition(candidate, factors, 2)
    agreement = (witness1 is None) == m_contractive.holds and (witness2 is None) == w_contractive.holds
    if agreement and witness1 is not None:
        agreement = m_contractive.witness[0] == witness1
    if agreement and witness2 is not None:
        agreement = dual_norm_eval(candidate, outer(w_contractive.witness[1])) > 1
    crossnorm = witness1 is None and witness2 is None
    decision = Decision(f"crossnorm({candidate.name}) iff m and w contractive", agreement, agreement=agreement,
                        witness=(witness1, witness2))
    decision.evidence.append(f"condition 1: {'holds' if witness1 is None else 'fails'}; "
                             f"m contractive: {m_contractive.verdict}")
    decision.evidence.append(f"condition 2: {'holds' if witness2 is None else 'fails'}; "
                             f"w contractive: {w_contractive.verdict}")
    decision.evidence.append(f"crossnorm: {'holds' if crossnorm else 'fails'}")
    for side in (m_contractive, w_contractive):
        if not side.holds:
            decision.evidence.append(side.evidence[0])
    _logger.info(f"Crossnorm equivalence for {candidate.name}: crossnorm {crossnorm}, agreement {agreement}")
    return decision


def extremality_check(candidate: PolytopeNorm, factors: Sequence[PolytopeNorm],
                      tensors: Sequence[TensorElement]) -> CheckReport:
    """injective(u) <= candidate(u) <= projective(u) on every given tensor"""
    report = CheckReport(f"extremality({candidate.name})")
    for u in tensors:
        report.checked += 1
        low = injective_norm(u, factors)
        value = norm_value(candidate, u.flat()).value
        high = projective_norm(u, factors)
        if not low <= value <= high:
            report.fail(f"{format_vector(u.flat())}: injective {format_rational(low)}, candidate "
                        f"{format_rational(value)}, projective {format_rational(high)}")
    return report


# ---------------------------------------------------------------------------
# Pullbacks and pushforwards
# ---------------------------------------------------------------------------

def _check_norms(dims: Sequence[int], norms: Sequence, label: str):
    if len(dims) != len(norms):
        raise DimMismatch(f"{len(norms)} {label} norms for {len(dims)} spaces",
                          expected=len(dims), found=len(norms))
    for size, norm in zip(dims, norms):
        if norm.dim != size:
            raise DimMismatch(f"{label} norm of dimension {norm.dim} on a space of dimension {size}",
                              expected=size, found=norm.dim)


def pullback_norm(g: PolyLinearMap, j: int, context_norms: Sequence[PolytopeNorm],
                  output_norms: Sequence[PolytopeNorm]) -> NormResult:
    """
    Norm on input j of g making g contractive with the least room

    x -> max |(phi)g(a1.., x, ..am)| over context vertices and dual output
    vertices; the family of those covectors is the presentation. A seminorm
    when g is not injective in input j.
    """
    others = g.input_dims[:j] + g.input_dims[j + 1:]
    _check_norms(others, context_norms, 'context')
    _check_norms(g.output_dims, output_norms, 'output')
    dim = g.input_dims[j]
    covectors = set()
    for states in product_tuples([n.vertices for n in context_norms]):
        slots = list(states[:j]) + [None] + list(states[j:])
        for effects in product_tuples([n.dual_vertices for n in output_norms]):
            covectors.add(g.partial(slots, effects))
    covectors = tuple(symmetrize(covectors))
    if matrix_rank(list(covectors)) < dim:
        return NormResult(NORM_KIND_SEMINORM, dim, covectors=covectors,
                          notes=[f"{g.name or 'map'} is not injective in input {j}"])
    result = NormResult(NORM_KIND_NORM, dim, covectors=covectors)
    if dim <= MAX_NORM_DIM and len(covectors) <= MAX_POLAR_VERTICES:
        vertices = polar_vertices(covectors, dim)
        norm = PolytopeNorm(dim, vertices, polar_vertices(vertices, dim), name=f"pull({g.name},{j})")
        result.norm = norm.validate()
        result.vertices = norm.vertices
        result.covectors = norm.dual_vertices
    else:
        result.notes.append(f"unit ball vertices not reconstructed above dimension {MAX_NORM_DIM}")
    _logger.debug(f"Pullback along {g.name} at {j}: {result.describe()}")
    return result


def pushforward_norm(f: PolyLinearMap, i: int, input_norms: Sequence[PolytopeNorm],
                     context_norms: Sequence[PolytopeNorm]) -> NormResult:
    """
    Norm on output i of f: gauge over every (phi1, -, phi2)f(a)

    Extended (+inf off the image) when f is not surjective in output i.
    """
    others = f.output_dims[:i] + f.output_dims[i + 1:]
    _check_norms(f.input_dims, input_norms, 'input')
    _check_norms(others, context_norms, 'context')
    dim = f.output_dims[i]
    vertices = set()
    for states in product_tuples([n.vertices for n in input_norms]):
        for effects in product_tuples([n.dual_vertices for n in context_norms]):
            slots = list(effects[:i]) + [None] + list(effects[i:])
            vertices.add(f.partial(states, slots))
    vertices = tuple(symmetrize(vertices))
    if matrix_rank(list(vertices)) < dim:
        return NormResult(NORM_KIND_EXTENDED, dim, vertices=vertices,
                          notes=[f"{f.name or 'map'} is not surjective in output {i}; +inf off the image"])
    result = NormResult(NORM_KIND_NORM, dim, vertices=vertices)
    if dim <= MAX_NORM_DIM and len(vertices) <= MAX_POLAR_VERTICES:
        dual = polar_vertices(vertices, dim)
        norm = PolytopeNorm(dim, polar_vertices(dual, dim), dual, name=f"push({f.name},{i})")
        result.norm = norm.validate()
        result.vertices = norm.vertices
        result.covectors = norm.dual_vertices
    else:
        result.notes.append(f"unit ball facets not reconstructed above dimension {MAX_NORM_DIM}")
    _logger.debug(f"Pushforward along {f.name} at {i}: {result.describe()}")
    return result


def norm_makes_contractive(kind: str, h: PolyLinearMap, index: int, norms: Sequence[PolytopeNorm],
                           result: NormResult) -> Decision:
    """
    Contractivity of h once the computed norm is placed at index

    For kind pull, norms are the context inputs followed by the outputs;
    for kind push, the inputs followed by the context outputs.

    Raises:
        DimTooLarge: the result is a norm whose unit ball was not reconstructed
        InvariantError: the result is a seminorm or an extended norm
    """
    if result.norm is None:
        if result.is_norm:
            raise DimTooLarge(f"Unit ball of dimension {result.dim} was not reconstructed: "
                              f"{'; '.join(result.notes)}", dim=result.dim, cap=MAX_NORM_DIM)
        raise InvariantError(f"A {result.kind} result has no unit ball to test against", check='norm')
    norms = list(norms)
    if kind == 'pull':
        inputs = norms[:len(h.input_dims) - 1]
        inputs.insert(index, result.norm)
        return is_contractive(h, inputs, norms[len(h.input_dims) - 1:])
    inputs = norms[:len(h.input_dims)]
    outputs = norms[len(h.input_dims):]
    outputs.insert(index, result.norm)
    return is_contractive(h, inputs, outputs)


# ---------------------------------------------------------------------------
# Sampling and factorization
# ---------------------------------------------------------------------------

def random_vector(rng: random.Random, dim: int) -> Vector:
    return tuple(random_rational(rng, RANDOM_NUMERATOR_RANGE, RANDOM_DENOMINATOR_RANGE) for _ in range(dim))


def random_tensor(rng: random.Random, dims: Sequence[int]) -> TensorElement:
    return TensorElement.from_flat(dims, random_vector(rng, int(np.prod(dims))))


def random_map(rng: random.Random, input_dims: Sequence[int], output_dims: Sequence[int],
               name: str = 'h') -> PolyLinearMap:
    shape = tuple(input_dims) + tuple(output_dims)
    flat = random_vector(rng, int(np.prod(shape)) if shape else 1)
    return PolyLinearMap(input_dims, output_dims, fraction_array(list(flat), shape), name=name)


def contraction_constant(h: PolyLinearMap, input_norms: Sequence[PolytopeNorm],
                         output_norms: Sequence[PolytopeNorm]) -> Fraction:
    """max |(phi)h(a)| over vertex and dual-vertex tuples"""
    best = Fraction(0)
    for states in product_tuples([n.vertices for n in input_norms]):
        partial = contract(h.coefficients, states)
        for effects in product_tuples([n.dual_vertices for n in output_norms]):
            best = max(best, abs(Fraction(contract(partial, effects).item())))
    return best


def normalized(h: PolyLinearMap, input_norms, output_norms) -> PolyLinearMap:
    """h rescaled to have contraction constant exactly 1 (zero maps unchanged)"""
    constant = contraction_constant(h, input_norms, output_norms)
    return h.scaled(1 / constant) if constant else h


def factorization_check(kind: str, factors: Sequence[PolytopeNorm], target: PolytopeNorm,
                        samples: int, seed: int) -> CheckReport:
    """
    Contractive maps factor contractively through the universal norms

    kind m: h: A1..An -> C contractive gives h': A1 x .. x An -> C
    contractive for the projective norm. kind w: h: C -> A1..An gives h'
    into the injective norm. kind identity: h: A -> C through the
    pushforward along the identity.
    """
    rng = random.Random(seed)
    dims = tuple(n.dim for n in factors)
    total = int(np.prod(dims))
    report = CheckReport(f"factorization({kind})")
    if kind == 'm':
        universal = projective_unit_ball(factors)
    elif kind == 'w':
        universal = injective_unit_ball(factors)
    elif kind == 'identity':
        universal = pushforward_norm(identity_map(factors[0].dim), 0, [factors[0]], []).norm
    else:
        raise InvariantError(f"Unknown factorization kind {kind!r}", check='kind')
    for k in range(samples):
        if kind == 'm':
            h = normalized(random_map(rng, dims, (target.dim,)), factors, [target])
            factored = PolyLinearMap((total,), (target.dim,), h.coefficients.reshape(total, target.dim), name="h'")
            inputs, outputs = [universal], [target]
        elif kind == 'w':
            h = normalized(random_map(rng, (target.dim,), dims), [target], factors)
            factored = PolyLinearMap((target.dim,), (total,), h.coefficients.reshape(target.dim, total), name="h'")
            inputs, outputs = [target], [universal]
        else:
            h = normalized(random_map(rng, (factors[0].dim,), (target.dim,)), factors, [target])
            factored = compose_linear(identity_map(factors[0].dim), 0, h, 0)
            inputs, outputs = [universal], [target]
        report.checked += 1
        decision = is_contractive(factored, inputs, outputs)
        if not decision.holds:
            report.fail(f"sample {k}: {decision.evidence[0]}")
    _logger.info(f"Factorization check {kind}: {report.checked} samples, {len(report.failures)} failures")
    return report
