"""
Polylinear Map Service
Composition, universal maps, A-kernels and A-images, contractivity
"""
import logging
from fractions import Fraction
from typing import List, Sequence, Tuple

import numpy as np
import sympy

from ..constants import MAX_TENSOR_ORDER
from ..exceptions import DimMismatch, DimTooLarge, IndexOutOfRange, PlanarityViolation
from ..models.norm import PolyLinearMap, Vector, contract, product_tuples, zeros
from ..models.polycategory import Boundary, planarity_violations
from ..utils import format_rational, format_vector, from_sympy, sympy_matrix
from .dto import Decision

_logger = logging.getLogger(__name__)


def identity_map(dim: int) -> PolyLinearMap:
    array = zeros((dim, dim))
    for k in range(dim):
        array[k, k] = Fraction(1)
    return PolyLinearMap((dim,), (dim,), array, name=f"id{dim}")


def compose_linear(f: PolyLinearMap, i: int, g: PolyLinearMap, j: int) -> PolyLinearMap:
    """
    Feed output i of f into input j of g

    Raises:
        IndexOutOfRange, DimMismatch, PlanarityViolation
    """
    if not 0 <= i < len(f.output_dims):
        raise IndexOutOfRange(f"Output {i} of {f.name or 'map'}", index=i, length=len(f.output_dims))
    if not 0 <= j < len(g.input_dims):
        raise IndexOutOfRange(f"Input {j} of {g.name or 'map'}", index=j, length=len(g.input_dims))
    if f.output_dims[i] != g.input_dims[j]:
        raise DimMismatch(f"Cut joins dimension {f.output_dims[i]} to {g.input_dims[j]}",
                          expected=f.output_dims[i], found=g.input_dims[j])
    fb = Boundary(tuple(map(str, f.input_dims)), tuple(map(str, f.output_dims)))
    gb = Boundary(tuple(map(str, g.input_dims)), tuple(map(str, g.output_dims)))
    sides = planarity_violations(fb, i, gb, j)
    if sides:
        raise PlanarityViolation(f"Polylinear composite crosses wires on the {' and '.join(sides)} side",
                                 sides=sides)
    mf, nf = len(f.input_dims), len(f.output_dims)
    mg, ng = len(g.input_dims), len(g.output_dims)
    joined = np.tensordot(f.coefficients, g.coefficients, axes=([mf + i], [j]))
    # axes of joined: f inputs, f outputs without i, g inputs without j, g outputs
    f_in = list(range(mf))
    f_out = list(range(mf, mf + nf - 1))
    g_in = list(range(mf + nf - 1, mf + nf - 1 + mg - 1))
    g_out = list(range(mf + nf - 1 + mg - 1, mf + nf - 1 + mg - 1 + ng))
    order = g_in[:j] + f_in + g_in[j:] + f_out[:i] + g_out + f_out[i:]
    inputs = g.input_dims[:j] + f.input_dims + g.input_dims[j + 1:]
    outputs = f.output_dims[:i] + g.output_dims + f.output_dims[i + 1:]
    coefficients = np.transpose(joined, order) if order else joined
    return PolyLinearMap(inputs, outputs, coefficients, name=f"{g.name}.{f.name}")


def universal_map_tensors(dims: Sequence[int]) -> Tuple[PolyLinearMap, PolyLinearMap, PolyLinearMap, PolyLinearMap]:
    """
    The canonical m, w, cup and cap for A = A1 ⊗ ... ⊗ An

    m: A1..An -> A sends a basis tuple to its flat index, w: A -> A1..An is
    its transpose, cup: . -> A, A* and cap: A*, A -> . are identity pairings.
    """
    dims = tuple(dims)
    if len(dims) > MAX_TENSOR_ORDER:
        raise DimTooLarge(f"Tensor order {len(dims)} exceeds {MAX_TENSOR_ORDER}", dim=len(dims),
                          cap=MAX_TENSOR_ORDER)
    total = int(np.prod(dims)) if dims else 1
    m = zeros(dims + (total,))
    w = zeros((total,) + dims)
    for flat, index in enumerate(np.ndindex(*dims)):
        m[index + (flat,)] = Fraction(1)
        w[(flat,) + index] = Fraction(1)
    pairing = zeros((total, total))
    for k in range(total):
        pairing[k, k] = Fraction(1)
    return (
        PolyLinearMap(dims, (total,), m, name='m'),
        PolyLinearMap((total,), dims, w, name='w'),
        PolyLinearMap((), (total, total), pairing.copy(), name='cup'),
        PolyLinearMap((total, total), (), pairing.copy(), name='cap'),
    )


def _flattening(coefficients: np.ndarray, axis: int) -> sympy.Matrix:
    """Matrix with the given axis as rows and every other index as columns"""
    moved = np.moveaxis(coefficients, axis, 0)
    rows = moved.reshape(moved.shape[0], -1)
    return sympy_matrix(rows.tolist())


def _basis(vectors) -> List[Vector]:
    return [tuple(from_sympy(x) for x in vector) for vector in vectors]


def A_kernel(g: PolyLinearMap, j: int) -> List[Vector]:
    """Basis of {x : g(a1.., x, ..am) = 0 for all other arguments}"""
    if not 0 <= j < len(g.input_dims):
        raise IndexOutOfRange(f"Input {j} of {g.name or 'map'}", index=j, length=len(g.input_dims))
    return _basis(_flattening(g.coefficients, j).T.nullspace())


def A_image(f: PolyLinearMap, i: int) -> List[Vector]:
    """Basis of the span of every partial evaluation leaving output i open"""
    if not 0 <= i < len(f.output_dims):
        raise IndexOutOfRange(f"Output {i} of {f.name or 'map'}", index=i, length=len(f.output_dims))
    return _basis(_flattening(f.coefficients, len(f.input_dims) + i).columnspace())


def is_A_injective(g: PolyLinearMap, j: int) -> bool:
    return not A_kernel(g, j)


def is_A_surjective(f: PolyLinearMap, i: int) -> bool:
    return len(A_image(f, i)) == f.output_dims[i]


def is_contractive(f: PolyLinearMap, input_norms: Sequence, output_norms: Sequence) -> Decision:
    """
    Every input-vertex tuple and dual-output-vertex tuple evaluates to at most 1

    Norm arguments expose vertices (inputs) and dual_vertices (outputs):
    PolytopeNorm and NormResult both qualify.

    Returns:
        Decision whose first evidence entry is the witness when it fails
    """
    if len(input_norms) != len(f.input_dims) or len(output_norms) != len(f.output_dims):
        raise DimMismatch(f"{f.name or 'map'} needs {len(f.input_dims)} input and "
                          f"{len(f.output_dims)} output norms")
    for norm, size in zip(list(input_norms) + list(output_norms), f.input_dims + f.output_dims):
        if norm.dim != size:
            raise DimMismatch(f"Norm of dimension {norm.dim} on a space of dimension {size}",
                              expected=size, found=norm.dim)
    decision = Decision(f"contractive({f.name or 'map'})", True)
    checked = 0
    for states in product_tuples([n.vertices for n in input_norms]):
        partial = contract(f.coefficients, states)
        for effects in product_tuples([n.dual_vertices for n in output_norms]):
            checked += 1
            value = abs(Fraction(contract(partial, effects).item()))
            if value > 1:
                decision.holds = False
                decision.evidence.append(
                    f"witness states {' '.join(format_vector(a) for a in states) or '.'} effects "
                    f"{' '.join(format_vector(e) for e in effects) or '.'} give {format_rational(value)}")
                decision.witness = (tuple(states), tuple(effects))
                return decision
    decision.evidence.append(f"{checked} vertex tuples evaluate within the unit interval")
    return decision
