"""
Free Polycategory Service
Tree enumeration, the free polycategory on a signature and its law check
"""
import logging
from functools import lru_cache
from typing import Dict, List, Sequence, Tuple

from ..constants import DEFAULT_ARITY_BOUND, DEFAULT_MAX_NODES, FREE_LAW_ITEM_NODES
from ..exceptions import PolycatError
from ..models.polycategory import Boundary, FinPolycategory, PolyMap, try_plan
from ..models.signature import PolySignature, TreePolymap, generator_tree, graft, identity_tree
from .axiom_service import LawChecker
from .dto import AxiomReport

_logger = logging.getLogger(__name__)


def two_operation_signature() -> PolySignature:
    """Types A, B with f: A,B -> B and g: B -> A,A"""
    return PolySignature.build(['A', 'B'], [('f', ['A', 'B'], ['B']), ('g', ['B'], ['A', 'A'])],
                               name='fg')


def _extensions(tree: TreePolymap, generators: Sequence[TreePolymap]):
    """Every planar graft of one generator onto a tree, in both directions"""
    for gen in generators:
        for i in range(len(tree.codomain)):
            for j in range(len(gen.domain)):
                if try_plan(tree.boundary, i, gen.boundary, j) is not None:
                    yield graft(tree, i, gen, j)
        for i in range(len(gen.codomain)):
            for j in range(len(tree.domain)):
                if try_plan(gen.boundary, i, tree.boundary, j) is not None:
                    yield graft(gen, i, tree, j)


@lru_cache(maxsize=16)
def _levels(signature: PolySignature, max_nodes: int) -> Tuple[Tuple[TreePolymap, ...], ...]:
    """Trees grouped by node count, deduplicated by canonical encoding"""
    generators = [generator_tree(signature, op.name) for op in signature.operations]
    levels = [tuple(identity_tree(signature, obj) for obj in signature.types)]
    if max_nodes >= 1:
        levels.append(tuple(sorted(set(generators), key=TreePolymap.encoding)))
    for size in range(2, max_nodes + 1):
        found: Dict[str, TreePolymap] = {}
        for tree in levels[-1]:
            for candidate in _extensions(tree, generators):
                found.setdefault(candidate.encoding(), candidate)
        levels.append(tuple(found[key] for key in sorted(found)))
        _logger.debug(f"Enumerated {len(found)} trees with {size} nodes over {signature.name}")
    return tuple(levels)


def enumerate_trees(signature: PolySignature, boundary: Boundary, max_nodes: int = DEFAULT_MAX_NODES
                    ) -> List[TreePolymap]:
    """
    All trees with the given boundary and at most max_nodes nodes

    Returns:
        Duplicate-free list sorted by canonical encoding
    """
    if max_nodes < 0:
        raise PolycatError(f"max_nodes must be non-negative, got {max_nodes}")
    result = [tree for level in _levels(signature, max_nodes) for tree in level
              if tree.boundary == boundary]
    return sorted(result, key=TreePolymap.encoding)


def all_trees(signature: PolySignature, max_nodes: int = DEFAULT_MAX_NODES) -> List[TreePolymap]:
    return [tree for level in _levels(signature, max_nodes) for tree in level]


class FreePolycategory(FinPolycategory):
    """
    The free polycategory on a signature, truncated to trees of bounded size

    Polymap identifiers are canonical encodings. Composites larger than the
    node budget are still computed, so laws compare exactly; only the
    enumerated hom-sets are truncated, which makes decisions bound-relative.
    """

    def __init__(self, signature: PolySignature, arity_bound: int = DEFAULT_ARITY_BOUND,
                 max_nodes: int = DEFAULT_MAX_NODES):
        self.signature = signature
        self.max_nodes = max_nodes
        self._bound = arity_bound
        self.name = f"free({signature.name}, {max_nodes} nodes)"
        self._trees: Dict[str, TreePolymap] = {}
        self._homs: Dict[Boundary, Tuple[PolyMap, ...]] = {}
        for tree in all_trees(signature, max_nodes):
            if self.within_bound(tree.boundary):
                self._trees[tree.encoding()] = tree
        by_boundary: Dict[Boundary, List[PolyMap]] = {}
        for key, tree in self._trees.items():
            by_boundary.setdefault(tree.boundary, []).append(PolyMap(key, tree.boundary))
        self._homs = {b: tuple(sorted(maps)) for b, maps in by_boundary.items()}

    @property
    def objects(self) -> Tuple[str, ...]:
        return self.signature.types

    @property
    def arity_bound(self) -> int:
        return self._bound

    @property
    def bound_relative(self) -> bool:
        return True

    def hom(self, domain, codomain) -> Tuple[PolyMap, ...]:
        return self._homs.get(Boundary(tuple(domain), tuple(codomain)), ())

    def boundaries(self):
        return iter(sorted(self._homs, key=lambda b: (len(b.domain), len(b.codomain), b)))

    def tree(self, f: PolyMap) -> TreePolymap:
        try:
            return self._trees[f.id]
        except KeyError:
            raise PolycatError(f"Unknown tree {f.id} in {self.name}")

    def wrap(self, tree: TreePolymap) -> PolyMap:
        self._trees.setdefault(tree.encoding(), tree)
        return PolyMap(tree.encoding(), tree.boundary)

    def identity(self, obj: str) -> PolyMap:
        return self.wrap(identity_tree(self.signature, obj))

    def compose(self, f: PolyMap, i: int, g: PolyMap, j: int) -> PolyMap:
        return self.wrap(graft(self.tree(f), i, self.tree(g), j))


def check_free_laws(signature: PolySignature, max_item_nodes: int = FREE_LAW_ITEM_NODES,
                    arity_bound: int = DEFAULT_ARITY_BOUND) -> AxiomReport:
    """
    Check the five laws as canonical-encoding equalities

    Each law instance draws its polymaps from trees of at most max_item_nodes
    nodes, so an instance involves at most three times that many nodes.
    """
    P = FreePolycategory(signature, arity_bound, max_item_nodes)
    report = LawChecker(P).run()
    _logger.info(f"Free laws on {signature.name}: {sum(report.instances.values())} instances, "
                 f"{len(report.counterexamples)} counterexamples")
    return report
