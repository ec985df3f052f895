"""
Poly-Signatures and Planar Trees
Typed operations and the planar trees that are the polymaps of the free polycategory
"""
import logging
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import networkx as nx

from ..constants import ERROR_MESSAGES
from ..exceptions import InvariantError, MalformedTree, UnknownOperation, UnknownType
from .polycategory import Boundary, plan_composition

_logger = logging.getLogger(__name__)

# A port is ('dom', k) or ('cod', k) on the boundary, or ('in', node, k) / ('out', node, k) on a node
Port = Tuple

LEAF = '$'


@dataclass(frozen=True)
class Operation:
    name: str
    domain: Tuple[str, ...]
    codomain: Tuple[str, ...]

    @property
    def boundary(self) -> Boundary:
        return Boundary(self.domain, self.codomain)


@dataclass(frozen=True)
class PolySignature:
    """Types plus named operations with list-valued domain and codomain"""
    types: Tuple[str, ...]
    operations: Tuple[Operation, ...]
    name: str = field(default='signature', compare=False)

    def __post_init__(self):
        object.__setattr__(self, 'types', tuple(sorted(set(self.types))))
        object.__setattr__(self, 'operations', tuple(self.operations))
        seen = set()
        for op in self.operations:
            if op.name in seen:
                raise InvariantError(f"Duplicate operation name {op.name}", check='operation_names')
            seen.add(op.name)
            for obj in op.domain + op.codomain:
                if obj not in self.types:
                    raise UnknownType(f"{ERROR_MESSAGES['unknown_type']}: {obj} in operation {op.name}")

    @classmethod
    def build(cls, types: Iterable[str], operations: Iterable[Tuple[str, Sequence[str], Sequence[str]]],
              name: str = 'signature') -> 'PolySignature':
        ops = tuple(Operation(op_name, tuple(dom), tuple(cod)) for op_name, dom, cod in operations)
        return cls(tuple(types), ops, name)

    def operation(self, name: str) -> Operation:
        for op in self.operations:
            if op.name == name:
                return op
        raise UnknownOperation(f"{ERROR_MESSAGES['unknown_operation']}: {name}")

    def require_type(self, name: str):
        if name not in self.types:
            raise UnknownType(f"{ERROR_MESSAGES['unknown_type']}: {name}")


@dataclass(frozen=True)
class TreeEdge:
    id: int
    type: str
    source: Port
    target: Port


class TreePolymap:
    """
    Planar typed tree with a boundary of free edges

    Nodes are (node id, operation name). Each edge runs from a boundary input
    or a node output to a node input or a boundary output. Equality and
    hashing go through the canonical encoding.
    """

    def __init__(self, signature: PolySignature, nodes: Sequence[Tuple[int, str]],
                 edges: Sequence[TreeEdge], boundary: Boundary):
        self.signature = signature
        self.nodes: Tuple[Tuple[int, str], ...] = tuple(nodes)
        self.edges: Tuple[TreeEdge, ...] = tuple(edges)
        self.boundary = boundary
        self._encoding: Optional[str] = None

    @property
    def domain(self) -> Tuple[str, ...]:
        return self.boundary.domain

    @property
    def codomain(self) -> Tuple[str, ...]:
        return self.boundary.codomain

    @property
    def size(self) -> int:
        return len(self.nodes)

    def encoding(self) -> str:
        if self._encoding is None:
            self._encoding = canonical_encoding(self)
        return self._encoding

    def __eq__(self, other) -> bool:
        if not isinstance(other, TreePolymap):
            return NotImplemented
        return self.boundary == other.boundary and self.encoding() == other.encoding()

    def __hash__(self) -> int:
        return hash(self.encoding())

    def __repr__(self) -> str:
        return f"TreePolymap({self.encoding()})"

    def edge_at(self, port: Port) -> TreeEdge:
        for edge in self.edges:
            if edge.source == port or edge.target == port:
                return edge
        raise MalformedTree(f"{ERROR_MESSAGES['malformed_tree']}: no edge at port {port}")


def identity_tree(signature: PolySignature, type_name: str) -> TreePolymap:
    """The node-free tree: one edge from boundary input 0 to boundary output 0"""
    signature.require_type(type_name)
    edge = TreeEdge(0, type_name, ('dom', 0), ('cod', 0))
    return TreePolymap(signature, (), (edge,), Boundary((type_name,), (type_name,)))


def generator_tree(signature: PolySignature, op_name: str) -> TreePolymap:
    """One node labelled op_name, each port wired to the boundary"""
    op = signature.operation(op_name)
    edges = [TreeEdge(0, obj, ('dom', k), ('in', 0, k)) for k, obj in enumerate(op.domain)]
    edges += [TreeEdge(0, obj, ('out', 0, k), ('cod', k)) for k, obj in enumerate(op.codomain)]
    return TreePolymap(signature, ((0, op.name),), _numbered(edges), op.boundary)


def _numbered(edges: Iterable[TreeEdge]) -> Tuple[TreeEdge, ...]:
    ordered = sorted(edges, key=lambda e: (repr(e.source), repr(e.target)))
    return tuple(TreeEdge(k, e.type, e.source, e.target) for k, e in enumerate(ordered))


def graft(t1: TreePolymap, i: int, t2: TreePolymap, j: int) -> TreePolymap:
    """
    Graft output i of t1 onto input j of t2

    The two free edges at the cut merge into one internal edge; every other
    boundary port is renumbered to the composite boundary.

    Raises:
        PlanarityViolation, TypeMismatch, IndexOutOfRange: as plan_composition
    """
    boundary = plan_composition(t1.boundary, i, t2.boundary, j)
    offset = max((node_id for node_id, _ in t1.nodes), default=-1) + 1
    m1 = len(t1.domain)
    n2 = len(t2.codomain)

    def remap_first(port: Port) -> Port:
        if port[0] == 'dom':
            return ('dom', j + port[1])
        if port[0] == 'cod':
            k = port[1]
            return ('cod', k) if k < i else ('cod', k - 1 + n2)
        return port

    def remap_second(port: Port) -> Port:
        if port[0] == 'dom':
            k = port[1]
            return ('dom', k) if k < j else ('dom', k - 1 + m1)
        if port[0] == 'cod':
            return ('cod', i + port[1])
        return (port[0], port[1] + offset, port[2])

    cut_out = t1.edge_at(('cod', i))
    cut_in = t2.edge_at(('dom', j))
    edges = [TreeEdge(0, cut_out.type, remap_first(cut_out.source), remap_second(cut_in.target))]
    edges += [TreeEdge(0, e.type, remap_first(e.source), remap_first(e.target))
              for e in t1.edges if e is not cut_out]
    edges += [TreeEdge(0, e.type, remap_second(e.source), remap_second(e.target))
              for e in t2.edges if e is not cut_in]
    nodes = t1.nodes + tuple((node_id + offset, op) for node_id, op in t2.nodes)
    return TreePolymap(t1.signature, nodes, _numbered(edges), boundary)


def check_tree(t: TreePolymap):
    """
    Structural checks: saturated, well-typed ports and a tree-shaped underlying graph

    Raises:
        MalformedTree: naming the defect
    """
    ops: Dict[int, object] = {}
    for node_id, op_name in t.nodes:
        if node_id in ops:
            raise MalformedTree(f"{ERROR_MESSAGES['malformed_tree']}: duplicate node {node_id}")
        ops[node_id] = t.signature.operation(op_name)
    expected: Dict[Port, str] = {}
    for k, obj in enumerate(t.domain):
        expected[('dom', k)] = obj
    for k, obj in enumerate(t.codomain):
        expected[('cod', k)] = obj
    for node_id, op in ops.items():
        for k, obj in enumerate(op.domain):
            expected[('in', node_id, k)] = obj
        for k, obj in enumerate(op.codomain):
            expected[('out', node_id, k)] = obj
    used = set()
    graph = nx.MultiGraph()
    for node_id in ops:
        graph.add_node(('node', node_id))
    for port in expected:
        if port[0] in ('dom', 'cod'):
            graph.add_node(port)
    for edge in t.edges:
        if edge.source[0] not in ('dom', 'out') or edge.target[0] not in ('in', 'cod'):
            raise MalformedTree(f"{ERROR_MESSAGES['malformed_tree']}: edge {edge.id} is misoriented")
        for port in (edge.source, edge.target):
            if port not in expected:
                raise MalformedTree(f"{ERROR_MESSAGES['malformed_tree']}: unknown port {port}")
            if port in used:
                raise MalformedTree(f"{ERROR_MESSAGES['malformed_tree']}: port {port} used twice")
            if expected[port] != edge.type:
                raise MalformedTree(
                    f"{ERROR_MESSAGES['malformed_tree']}: edge {edge.id} of type {edge.type} at {port} "
                    f"expecting {expected[port]}")
            used.add(port)
        graph.add_edge(_vertex(edge.source), _vertex(edge.target))
    missing = sorted(set(expected) - used, key=repr)
    if missing:
        raise MalformedTree(f"{ERROR_MESSAGES['malformed_tree']}: unsaturated port {missing[0]}")
    if not nx.is_tree(graph):
        raise MalformedTree(f"{ERROR_MESSAGES['malformed_tree']}: underlying graph is not a tree")


def _vertex(port: Port):
    if port[0] in ('dom', 'cod'):
        return port
    return ('node', port[1])


def _cyclic_ports(op, entry: Port) -> List[Port]:
    """Ports of a node clockwise after the entry: inputs left to right, then outputs right to left"""
    node_id = entry[1]
    ring = [('in', node_id, k) for k in range(len(op.domain))]
    ring += [('out', node_id, k) for k in reversed(range(len(op.codomain)))]
    start = ring.index(entry)
    return ring[start + 1:] + ring[:start]


class _Walker:
    """Planar depth-first traversal recording the order boundary leaves are met"""

    def __init__(self, t: TreePolymap):
        self.t = t
        self.ops = {node_id: t.signature.operation(op_name) for node_id, op_name in t.nodes}
        self.labels = dict(t.nodes)
        self.by_port: Dict[Port, TreeEdge] = {}
        for edge in t.edges:
            self.by_port[edge.source] = edge
            self.by_port[edge.target] = edge
        self.leaves: List[Port] = []

    def arrive(self, port: Port) -> str:
        """Encoding of the subtree reached through port"""
        if port[0] in ('dom', 'cod'):
            self.leaves.append(port)
            return LEAF
        op = self.ops[port[1]]
        tag = 'i' if port[0] == 'in' else 'o'
        children = []
        for other in _cyclic_ports(op, port):
            edge = self.by_port[other]
            far = edge.target if edge.source == other else edge.source
            children.append(edge.type + self.arrive(far))
        return f"{self.labels[port[1]]}@{tag}{port[2]}[{','.join(children)}]"


def _clockwise_boundary(boundary: Boundary) -> List[Port]:
    return ([('dom', k) for k in range(len(boundary.domain))]
            + [('cod', k) for k in reversed(range(len(boundary.codomain)))])


def canonical_encoding(t: TreePolymap) -> str:
    """
    Deterministic planar linearization of a tree

    Open trees are walked from the leftmost input (or the rightmost output
    when there are no inputs) and must meet the boundary leaves in clockwise
    order; closed trees take the least walk over every edge and direction.

    Raises:
        MalformedTree: structural defect or non-planar boundary order
    """
    check_tree(t)
    ring = _clockwise_boundary(t.boundary)
    if ring:
        walker = _Walker(t)
        start = ring[0]
        edge = walker.by_port[start]
        far = edge.target if edge.source == start else edge.source
        walker.leaves.append(start)
        text = edge.type + walker.arrive(far)
        if walker.leaves != ring:
            raise MalformedTree(f"{ERROR_MESSAGES['malformed_tree']}: boundary order is not planar")
        return f"{t.boundary}::{text}"
    if not t.edges:
        return f"{t.boundary}::" + ','.join(sorted(op for _, op in t.nodes))
    candidates = []
    for edge in t.edges:
        for near, far in ((edge.source, edge.target), (edge.target, edge.source)):
            walker = _Walker(t)
            candidates.append(f"{edge.type}<{walker.arrive(near)}|{walker.arrive(far)}")
    return f"{t.boundary}::{min(candidates)}"
