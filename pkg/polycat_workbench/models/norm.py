"""
Polytope Norms and Polylinear Maps
Exact-rational data for the normed-space computations
"""
import functools
import itertools
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

import numpy as np

from ..constants import NORM_KIND_EXTENDED, NORM_KIND_NORM, NORM_KIND_SEMINORM
from ..exceptions import DimMismatch, InvariantError
from ..utils import dot, format_rational, format_vector, matrix_rank, negate

_logger = logging.getLogger(__name__)

Vector = Tuple[Fraction, ...]


@functools.total_ordering
@dataclass(frozen=True)
class ExtendedRational:
    """A rational or +infinity"""
    value: Optional[Fraction] = None

    @classmethod
    def infinity(cls) -> 'ExtendedRational':
        return cls(None)

    @classmethod
    def of(cls, value) -> 'ExtendedRational':
        return cls(Fraction(value))

    @property
    def is_infinite(self) -> bool:
        return self.value is None

    def __lt__(self, other) -> bool:
        if not isinstance(other, ExtendedRational):
            other = ExtendedRational.of(other)
        if self.is_infinite:
            return False
        return other.is_infinite or self.value < other.value

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExtendedRational):
            if self.is_infinite:
                return False
            return self.value == other
        return self.value == other.value

    def __hash__(self):
        return hash(self.value)

    def __str__(self) -> str:
        return 'inf' if self.is_infinite else format_rational(self.value)


def as_vector(values) -> Vector:
    return tuple(Fraction(x) for x in values)


def fraction_array(values, shape=None) -> np.ndarray:
    """Object array of Fractions, optionally reshaped"""
    array = np.array(values, dtype=object)
    array = np.vectorize(Fraction, otypes=[object])(array) if array.size else array
    return array.reshape(shape) if shape is not None else array


def zeros(shape) -> np.ndarray:
    return np.full(tuple(shape), Fraction(0), dtype=object)


def contract(array: np.ndarray, vectors: Sequence[Sequence[Fraction]]) -> np.ndarray:
    """Contract the leading axes of array with vectors, in order"""
    result = array
    for vector in vectors:
        result = np.tensordot(result, np.array(list(vector), dtype=object), axes=([0], [0]))
    return result


def scalar(array) -> Fraction:
    return Fraction(array.item() if isinstance(array, np.ndarray) else array)


def outer(vectors: Sequence[Sequence[Fraction]]) -> Vector:
    """Flattened outer product v1 ⊗ ... ⊗ vn (C order)"""
    result = [Fraction(1)]
    for vector in vectors:
        result = [a * b for a in result for b in vector]
    return tuple(result)


@dataclass(frozen=True)
class PolytopeNorm:
    """
    Norm whose unit ball is conv(vertices), presented with its polar dual_vertices

    Both lists are closed under negation and span the space; every pairing
    is at most 1 in absolute value and each vertex and dual vertex attains 1.
    """
    dim: int
    vertices: Tuple[Vector, ...]
    dual_vertices: Tuple[Vector, ...]
    name: str = field(default='', compare=False)

    def __post_init__(self):
        object.__setattr__(self, 'vertices', tuple(sorted(set(as_vector(v) for v in self.vertices))))
        object.__setattr__(self, 'dual_vertices', tuple(sorted(set(as_vector(f) for f in self.dual_vertices))))

    def validate(self) -> 'PolytopeNorm':
        """
        Check symmetry, spanning and the duality certificate

        Raises:
            DimMismatch: a vector of the wrong length
            InvariantError: naming the failing check
        """
        for family, label in ((self.vertices, 'vertices'), (self.dual_vertices, 'dual vertices')):
            for v in family:
                if len(v) != self.dim:
                    raise DimMismatch(f"{label} entry {format_vector(v)} has dimension {len(v)}",
                                      expected=self.dim, found=len(v))
            members = set(family)
            if any(negate(v) not in members for v in family):
                raise InvariantError(f"{label} of {self.name or 'norm'} are not closed under negation",
                                     check='symmetric')
            if matrix_rank(list(family)) != self.dim:
                raise InvariantError(f"{label} of {self.name or 'norm'} do not span dimension {self.dim}",
                                     check='spanning')
        for v in self.vertices:
            pairings = [abs(dot(f, v)) for f in self.dual_vertices]
            if max(pairings) != 1:
                raise InvariantError(f"Vertex {format_vector(v)} pairs to {format_rational(max(pairings))}, not 1",
                                     check='duality')
        for f in self.dual_vertices:
            pairings = [abs(dot(f, v)) for v in self.vertices]
            if max(pairings) != 1:
                raise InvariantError(
                    f"Dual vertex {format_vector(f)} pairs to {format_rational(max(pairings))}, not 1",
                    check='duality')
        return self

    def dual(self) -> 'PolytopeNorm':
        return PolytopeNorm(self.dim, self.dual_vertices, self.vertices, name=f"dual({self.name})")

    def describe(self) -> str:
        return (f"{self.name or 'norm'} (dim {self.dim}): vertices "
                + ' '.join(format_vector(v) for v in self.vertices))


@dataclass(frozen=True)
class TensorElement:
    """An element of A1 ⊗ ... ⊗ An as a rational coefficient array"""
    dims: Tuple[int, ...]
    coefficients: np.ndarray = field(compare=False)

    def __post_init__(self):
        object.__setattr__(self, 'dims', tuple(self.dims))
        if tuple(self.coefficients.shape) != self.dims:
            raise DimMismatch(f"Tensor coefficients have shape {self.coefficients.shape}, expected {self.dims}",
                              expected=self.dims, found=tuple(self.coefficients.shape))

    @classmethod
    def from_flat(cls, dims: Sequence[int], flat: Sequence[Fraction]) -> 'TensorElement':
        return cls(tuple(dims), fraction_array(list(flat), tuple(dims)))

    @classmethod
    def elementary(cls, vectors: Sequence[Sequence[Fraction]]) -> 'TensorElement':
        return cls.from_flat([len(v) for v in vectors], outer(vectors))

    @classmethod
    def from_terms(cls, dims: Sequence[int], terms: Sequence[Tuple[Fraction, Sequence[int]]]) -> 'TensorElement':
        array = zeros(dims)
        for coefficient, index in terms:
            array[tuple(index)] += Fraction(coefficient)
        return cls(tuple(dims), array)

    def flat(self) -> Vector:
        return tuple(Fraction(x) for x in self.coefficients.reshape(-1))

    @property
    def total_dim(self) -> int:
        return int(np.prod(self.dims)) if self.dims else 1

    def __eq__(self, other) -> bool:
        return isinstance(other, TensorElement) and self.dims == other.dims and self.flat() == other.flat()

    def __hash__(self):
        return hash((self.dims, self.flat()))


@dataclass(frozen=True)
class PolyLinearMap:
    """
    Multilinear map from input spaces to output spaces

    Coefficient axes are the input basis indices followed by the output
    basis indices; evaluation against states and effects is full contraction.
    """
    input_dims: Tuple[int, ...]
    output_dims: Tuple[int, ...]
    coefficients: np.ndarray = field(compare=False)
    name: str = field(default='', compare=False)

    def __post_init__(self):
        object.__setattr__(self, 'input_dims', tuple(self.input_dims))
        object.__setattr__(self, 'output_dims', tuple(self.output_dims))
        expected = self.input_dims + self.output_dims
        if tuple(self.coefficients.shape) != expected:
            raise DimMismatch(f"Coefficients of {self.name or 'map'} have shape {self.coefficients.shape}, "
                              f"expected {expected}", expected=expected, found=tuple(self.coefficients.shape))

    def evaluate(self, states: Sequence[Sequence[Fraction]], effects: Sequence[Sequence[Fraction]]) -> Fraction:
        """(φ1..φn) f (a1..am)"""
        if len(states) != len(self.input_dims) or len(effects) != len(self.output_dims):
            raise DimMismatch(f"{self.name or 'map'} takes {len(self.input_dims)} states and "
                              f"{len(self.output_dims)} effects")
        for vector, size in zip(list(states) + list(effects), self.input_dims + self.output_dims):
            if len(vector) != size:
                raise DimMismatch(f"Argument of dimension {len(vector)} where {size} expected",
                                  expected=size, found=len(vector))
        return scalar(contract(self.coefficients, list(states) + list(effects)))

    def partial(self, states: Sequence[Optional[Sequence[Fraction]]],
                effects: Sequence[Optional[Sequence[Fraction]]]) -> Vector:
        """Contract every argument except the single None slot; returns a vector"""
        arguments = list(states) + list(effects)
        open_slots = [k for k, v in enumerate(arguments) if v is None]
        if len(open_slots) != 1:
            raise InvariantError("Exactly one argument slot must stay open", check='partial')
        axis = open_slots[0]
        array = np.moveaxis(self.coefficients, axis, -1)
        result = contract(array, [v for v in arguments if v is not None])
        return tuple(Fraction(x) for x in np.asarray(result).reshape(-1))

    def scaled(self, factor) -> 'PolyLinearMap':
        factor = Fraction(factor)
        return PolyLinearMap(self.input_dims, self.output_dims, self.coefficients * factor,
                             name=f"{factor}*{self.name}")

    def __eq__(self, other) -> bool:
        return (isinstance(other, PolyLinearMap) and self.input_dims == other.input_dims
                and self.output_dims == other.output_dims
                and list(self.coefficients.reshape(-1)) == list(other.coefficients.reshape(-1)))

    def __hash__(self):
        return hash((self.input_dims, self.output_dims))


@dataclass
class NormResult:
    """
    A computed norm on one space

    Pullbacks are presented by a covector family (value = max |c.x|),
    pushforwards by a vertex family (value = gauge). kind is seminorm when
    the covectors do not span, extended when the vertices do not span.
    """
    kind: str
    dim: int
    covectors: Optional[Tuple[Vector, ...]] = None
    vertices: Optional[Tuple[Vector, ...]] = None
    norm: Optional[PolytopeNorm] = None
    notes: List[str] = field(default_factory=list)

    @property
    def is_norm(self) -> bool:
        return self.kind == NORM_KIND_NORM

    @property
    def dual_vertices(self) -> Optional[Tuple[Vector, ...]]:
        return self.covectors

    def describe(self) -> str:
        family = self.vertices if self.vertices is not None else self.covectors or ()
        label = 'vertices' if self.vertices is not None else 'covectors'
        return f"{self.kind} (dim {self.dim}), {len(family)} {label}"


NORM_KINDS = (NORM_KIND_NORM, NORM_KIND_SEMINORM, NORM_KIND_EXTENDED)


def product_tuples(families: Sequence[Sequence[Vector]]):
    """Every tuple with one member from each family, in canonical order"""
    return itertools.product(*families)
