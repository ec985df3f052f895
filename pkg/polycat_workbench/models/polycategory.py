"""
Polycategory Interface
Boundaries, polymaps, the planar cut rule and the contract every finite presentation implements
"""
from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Iterator, Sequence, Tuple

from ..constants import ERROR_MESSAGES
from ..exceptions import IndexOutOfRange, OutOfBound, PlanarityViolation, TypeMismatch
from ..utils import describe_list, lists_up_to


@dataclass(frozen=True, order=True)
class Boundary:
    """Ordered input and output lists of a polymap"""
    domain: Tuple[str, ...] = ()
    codomain: Tuple[str, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, 'domain', tuple(self.domain))
        object.__setattr__(self, 'codomain', tuple(self.codomain))

    @property
    def shape(self) -> Tuple[int, int]:
        return len(self.domain), len(self.codomain)

    def __str__(self) -> str:
        return f"{describe_list(self.domain)} -> {describe_list(self.codomain)}"


@dataclass(frozen=True, order=True)
class PolyMap:
    """A polymap: identifier unique within its hom-set, plus its boundary"""
    id: str
    boundary: Boundary

    @property
    def domain(self) -> Tuple[str, ...]:
        return self.boundary.domain

    @property
    def codomain(self) -> Tuple[str, ...]:
        return self.boundary.codomain

    def __str__(self) -> str:
        return f"{self.id}: {self.boundary}"


@dataclass(frozen=True)
class CompositionRequest:
    """Cut output i of f against input j of g"""
    f: PolyMap
    i: int
    g: PolyMap
    j: int


def plan_composition(fb: Boundary, i: int, gb: Boundary, j: int) -> Boundary:
    """
    Composite boundary of cutting output i of f into input j of g

    The composite is Γ1', Γ, Γ2' -> Δ1, Δ', Δ2 where f: Γ -> Δ1, A, Δ2 and
    g: Γ1', A, Γ2' -> Δ'. Facing contexts may not both be nonempty.

    Args:
        fb: Boundary of the polymap providing the output
        i: Output index of f
        gb: Boundary of the polymap receiving the input
        j: Input index of g

    Returns:
        The composite boundary
    """
    if not 0 <= i < len(fb.codomain):
        raise IndexOutOfRange(f"{ERROR_MESSAGES['index_out_of_range']}: output {i} of {fb}",
                              index=i, length=len(fb.codomain))
    if not 0 <= j < len(gb.domain):
        raise IndexOutOfRange(f"{ERROR_MESSAGES['index_out_of_range']}: input {j} of {gb}",
                              index=j, length=len(gb.domain))
    if fb.codomain[i] != gb.domain[j]:
        raise TypeMismatch(f"{ERROR_MESSAGES['type_mismatch']}: {fb.codomain[i]} vs {gb.domain[j]}",
                           expected=fb.codomain[i], found=gb.domain[j])
    sides = planarity_violations(fb, i, gb, j)
    if sides:
        raise PlanarityViolation(f"{ERROR_MESSAGES['planarity']} on the {' and '.join(sides)} side",
                                 sides=sides)
    return Boundary(gb.domain[:j] + fb.domain + gb.domain[j + 1:],
                    fb.codomain[:i] + gb.codomain + fb.codomain[i + 1:])


def planarity_violations(fb: Boundary, i: int, gb: Boundary, j: int) -> Tuple[str, ...]:
    """Names of the sides ('left', 'right') where both facing contexts are nonempty"""
    sides = []
    if fb.codomain[:i] and gb.domain[:j]:
        sides.append('left')
    if fb.codomain[i + 1:] and gb.domain[j + 1:]:
        sides.append('right')
    return tuple(sides)


def try_plan(fb: Boundary, i: int, gb: Boundary, j: int):
    """plan_composition returning None instead of raising for rejected cuts"""
    if not (0 <= i < len(fb.codomain) and 0 <= j < len(gb.domain)):
        return None
    if fb.codomain[i] != gb.domain[j] or planarity_violations(fb, i, gb, j):
        return None
    return Boundary(gb.domain[:j] + fb.domain + gb.domain[j + 1:],
                    fb.codomain[:i] + gb.codomain + fb.codomain[i + 1:])


class FinPolycategory(ABC):
    """Contract of a finitely presented polycategory"""

    name: str = ''

    @property
    @abstractmethod
    def objects(self) -> Tuple[str, ...]:
        """Objects in canonical (sorted) order"""

    @property
    @abstractmethod
    def arity_bound(self) -> int:
        """Largest input and output arity enumerated by decision procedures"""

    @property
    @abstractmethod
    def bound_relative(self) -> bool:
        """True when laws only hold within the bound (table germs)"""

    @abstractmethod
    def hom(self, domain: Sequence[str], codomain: Sequence[str]) -> Tuple[PolyMap, ...]:
        """
        Polymaps with the given boundary, sorted by identifier

        Args:
            domain: Input objects
            codomain: Output objects

        Returns:
            Tuple of PolyMap (may be empty)
        """

    @abstractmethod
    def identity(self, obj: str) -> PolyMap:
        """Identity polymap A -> A"""

    @abstractmethod
    def compose(self, f: PolyMap, i: int, g: PolyMap, j: int) -> PolyMap:
        """
        Cut output i of f into input j of g

        Returns:
            The composite polymap
        """

    def within_bound(self, boundary: Boundary) -> bool:
        bound = self.arity_bound
        return len(boundary.domain) <= bound and len(boundary.codomain) <= bound

    def check_bound(self, boundary: Boundary):
        if not self.within_bound(boundary):
            raise OutOfBound(f"{ERROR_MESSAGES['out_of_bound']}: {boundary} exceeds {self.arity_bound}",
                             arity=boundary.shape, bound=self.arity_bound)

    def boundaries(self) -> Iterator[Boundary]:
        """Every boundary within the arity bound, shortest lists first"""
        for domain in lists_up_to(self.objects, self.arity_bound):
            for codomain in lists_up_to(self.objects, self.arity_bound):
                yield Boundary(domain, codomain)

    def polymaps(self) -> Iterator[PolyMap]:
        """Every polymap within the arity bound, in canonical order"""
        for boundary in self.boundaries():
            yield from self.hom(boundary.domain, boundary.codomain)

    def contains(self, f: PolyMap) -> bool:
        if not self.within_bound(f.boundary) and self.bound_relative:
            return False
        if any(obj not in self.objects for obj in f.domain + f.codomain):
            return False
        return f in self.hom(f.domain, f.codomain)

    def try_compose(self, f: PolyMap, i: int, g: PolyMap, j: int):
        """compose, or None when the cut is rejected or leaves the bound"""
        boundary = try_plan(f.boundary, i, g.boundary, j)
        if boundary is None or not self.within_bound(boundary):
            return None
        return self.compose(f, i, g, j)

    def describe(self) -> str:
        kind = 'bound-relative' if self.bound_relative else 'exact'
        return f"{self.name or type(self).__name__} ({len(self.objects)} objects, bound {self.arity_bound}, {kind})"
