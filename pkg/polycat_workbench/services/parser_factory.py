"""
Presentation Parser Factory
Manages parser registration and turns input documents into presentations
"""
import json
import logging
import os
from dataclasses import dataclass, field
from typing import Any, Dict, Optional, Type

from ..constants import INPUT_KINDS
from ..exceptions import InputSyntaxError, PolycatError, SchemaError
from ..models.workspace import WorkspaceConfiguration
from .parsers.base_parser import IPresentationParser

_logger = logging.getLogger(__name__)


class ParserFactory:
    """Factory for creating parsers by document kind"""

    # Registry of available parsers
    _parser_registry: Dict[str, Type[IPresentationParser]] = {}

    @classmethod
    def register_parser(cls, kind: str, parser_class: Type[IPresentationParser]):
        """Register a parser for a kind"""
        cls._parser_registry[kind] = parser_class
        _logger.debug(f"Registered parser: {kind}")

    @classmethod
    def get_available_parsers(cls) -> Dict[str, Type[IPresentationParser]]:
        return cls._parser_registry.copy()

    @classmethod
    def create_parser(cls, kind: str) -> IPresentationParser:
        """
        Raises:
            SchemaError: no parser for the kind
        """
        if kind not in cls._parser_registry:
            known = ', '.join(k for k in INPUT_KINDS if k in cls._parser_registry)
            raise SchemaError(f"Unknown kind {kind!r}; expected one of {known}", path=['kind'])
        return cls._parser_registry[kind]()


@dataclass
class ParseContext:
    """Directory for relative references and the active configuration"""
    base_dir: str = '.'
    configuration: WorkspaceConfiguration = field(default_factory=WorkspaceConfiguration)

    def load(self, value: Any, expected: Optional[str] = None) -> Any:
        """A nested document given inline or as a path relative to base_dir"""
        if isinstance(value, str):
            return parse_input(os.path.join(self.base_dir, value), self.configuration, expected)
        return load_document(value, self, expected)


def load_document(data: Any, context: Optional[ParseContext] = None, expected: Optional[str] = None) -> Any:
    """
    Build a presentation from decoded JSON

    Raises:
        SchemaError: not an object, unknown kind, or a schema violation
        InvariantError: a construction-time check fails
    """
    context = context or ParseContext()
    if not isinstance(data, dict) or not isinstance(data.get('kind'), str):
        raise SchemaError("Document must be an object with a string 'kind'", path=['kind'])
    kind = data['kind']
    if expected is not None and kind != expected:
        raise SchemaError(f"Expected a {expected} document, found {kind}", path=['kind'])
    return ParserFactory.create_parser(kind).parse(data, context)


def parse_text(text: str, context: Optional[ParseContext] = None, expected: Optional[str] = None) -> Any:
    """
    Raises:
        InputSyntaxError: with the line and column of the JSON error
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise InputSyntaxError(f"Invalid JSON at line {e.lineno}, column {e.colno}: {e.msg}",
                               line=e.lineno, column=e.colno)
    return load_document(data, context, expected)


def parse_input(path: str, configuration: Optional[WorkspaceConfiguration] = None,
                expected: Optional[str] = None) -> Any:
    """Read and build the presentation in a UTF-8 file"""
    try:
        with open(path, encoding='utf-8') as handle:
            text = handle.read()
    except OSError as e:
        raise PolycatError(f"Cannot read {path}: {e.strerror}", error_code='io')
    context = ParseContext(os.path.dirname(os.path.abspath(path)), configuration or WorkspaceConfiguration())
    presentation = parse_text(text, context, expected)
    _logger.info(f"Loaded {path}")
    return presentation


# Auto-register built-in parsers
def _register_builtin_parsers():
    """Register the parser of every input kind"""
    from .parsers.polycategory_parser import FunctorParser, MonoidPolycategoryParser, TablePolycategoryParser
    from .parsers.signature_parser import SignatureParser
    from .parsers.norm_parser import NormParser, PolymapParser, TensorParser
    from .parsers.category_parser import DistributorParser, FinCategoryParser, LaxFunctorParser

    for parser_class in (TablePolycategoryParser, MonoidPolycategoryParser, SignatureParser, FunctorParser,
                         NormParser, TensorParser, PolymapParser, FinCategoryParser, DistributorParser,
                         LaxFunctorParser):
        ParserFactory.register_parser(parser_class.kind, parser_class)


# Register parsers when module loads
_register_builtin_parsers()
