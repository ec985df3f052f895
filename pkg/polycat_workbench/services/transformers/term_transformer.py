"""
Term Transformer
Turns free polycategory expressions into trees and trees into DOT graphs
"""
import logging
import re
from typing import List, Tuple

from ...exceptions import InputSyntaxError
from ...models.signature import PolySignature, TreePolymap, generator_tree, graft, identity_tree

_logger = logging.getLogger(__name__)

_TOKEN = re.compile(r'\s*(?:(?P<punct>[\[\](),])|(?P<word>[^\s\[\](),]+))')

Token = Tuple[str, str, int, int]


def _tokenize(text: str) -> List[Token]:
    """(kind, text, line, column) with 1-based positions"""
    tokens = []
    position = 0
    while position < len(text):
        match = _TOKEN.match(text, position)
        if match is None or match.end() == position:
            break
        start = match.start('punct') if match.group('punct') else match.start('word')
        line = text.count('\n', 0, start) + 1
        column = start - (text.rfind('\n', 0, start) + 1) + 1
        kind = 'punct' if match.group('punct') else 'word'
        tokens.append((kind, match.group(kind), line, column))
        position = match.end()
    line = text.count('\n') + 1
    tokens.append(('end', '', line, len(text) - (text.rfind('\n') + 1) + 1))
    return tokens


class _ExpressionParser:
    """Recursive descent over id[A], op[name] and graft(e, i, e, j)"""

    def __init__(self, text: str, signature: PolySignature):
        self.tokens = _tokenize(text)
        self.position = 0
        self.signature = signature

    def peek(self) -> Token:
        return self.tokens[self.position]

    def fail(self, message: str, token: Token):
        raise InputSyntaxError(f"{message} at line {token[2]}, column {token[3]}", line=token[2], column=token[3])

    def expect(self, text: str) -> Token:
        token = self.peek()
        if token[1] != text or token[0] == 'end':
            self.fail(f"Expected {text!r}, found {token[1] or 'end of input'!r}", token)
        self.position += 1
        return token

    def word(self) -> str:
        token = self.peek()
        if token[0] != 'word':
            self.fail(f"Expected a name, found {token[1] or 'end of input'!r}", token)
        self.position += 1
        return token[1]

    def index(self) -> int:
        token = self.peek()
        if token[0] != 'word' or not token[1].isdigit():
            self.fail(f"Expected an index, found {token[1] or 'end of input'!r}", token)
        self.position += 1
        return int(token[1])

    def expression(self) -> TreePolymap:
        token = self.peek()
        head = self.word()
        if head == 'id':
            self.expect('[')
            name = self.word()
            self.expect(']')
            return identity_tree(self.signature, name)
        if head == 'op':
            self.expect('[')
            name = self.word()
            self.expect(']')
            return generator_tree(self.signature, name)
        if head == 'graft':
            self.expect('(')
            first = self.expression()
            self.expect(',')
            i = self.index()
            self.expect(',')
            second = self.expression()
            self.expect(',')
            j = self.index()
            self.expect(')')
            return graft(first, i, second, j)
        self.fail(f"Unknown term {head!r}", token)

    def parse(self) -> TreePolymap:
        tree = self.expression()
        token = self.peek()
        if token[0] != 'end':
            self.fail(f"Unexpected {token[1]!r} after the expression", token)
        return tree


def _quoted(text: str) -> str:
    return '"' + text.replace('\\', '\\\\').replace('"', '\\"') + '"'


def _dot_vertex(port) -> str:
    if port[0] == 'dom':
        return f"in{port[1]}"
    if port[0] == 'cod':
        return f"out{port[1]}"
    return f"n{port[1]}"


class TermTransformer:
    """Transforms between expressions, trees and DOT"""

    @staticmethod
    def parse_expression(text: str, signature: PolySignature) -> TreePolymap:
        """
        Parse an expression over the signature

        Raises:
            InputSyntaxError: with line and column
            UnknownType, UnknownOperation, TypeMismatch, PlanarityViolation, IndexOutOfRange
        """
        tree = _ExpressionParser(text, signature).parse()
        _logger.debug(f"Parsed expression into {tree.size} nodes with boundary {tree.boundary}")
        return tree

    @staticmethod
    def tree_to_dot(tree: TreePolymap, name: str = 'tree') -> str:
        """One digraph, boundary on the left and right, edges labelled by their type"""
        lines = [f"digraph {_quoted(name)} {{", '  rankdir=LR;']
        for k in range(len(tree.domain)):
            lines.append(f"  in{k} [shape=point, xlabel={_quoted(tree.domain[k])}];")
        for node_id, op_name in sorted(tree.nodes):
            lines.append(f"  n{node_id} [label={_quoted(op_name)}];")
        for k in range(len(tree.codomain)):
            lines.append(f"  out{k} [shape=point, xlabel={_quoted(tree.codomain[k])}];")
        for edge in sorted(tree.edges, key=lambda e: e.id):
            lines.append(f"  {_dot_vertex(edge.source)} -> {_dot_vertex(edge.target)} "
                         f"[label={_quoted(edge.type)}];")
        lines.append('}')
        return '\n'.join(lines) + '\n'
