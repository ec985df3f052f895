"""
Base Presentation Parser Interface
Defines the contract every input kind implements
"""
import logging
from abc import ABC, abstractmethod
from typing import TYPE_CHECKING, Any, Dict, List, Sequence

from jsonschema import Draft202012Validator
from jsonschema.exceptions import best_match

from ...exceptions import SchemaError
from ...utils import parse_rational

if TYPE_CHECKING:
    from ..parser_factory import ParseContext

_logger = logging.getLogger(__name__)

RATIONAL = {'type': 'string', 'pattern': r'^\s*[+-]?\d+\s*(/\s*\d+)?\s*$'}
NAME = {'type': 'string', 'minLength': 1}
NAMES = {'type': 'array', 'items': NAME}
INDEX = {'type': 'integer', 'minimum': 0}
VECTOR = {'type': 'array', 'items': RATIONAL}
NESTED = {'type': ['object', 'string']}


class IPresentationParser(ABC):
    """Abstract base class for input kinds"""

    kind: str = ''

    @abstractmethod
    def schema(self) -> Dict[str, Any]:
        """
        JSON schema of the document body

        Returns:
            Draft 2020-12 schema; 'kind' and 'name' are always allowed
        """
        pass

    @abstractmethod
    def build(self, data: Dict[str, Any], context: 'ParseContext') -> Any:
        """
        Build the presentation from a schema-valid document

        Raises:
            InvariantError: a construction-time check fails
        """
        pass


class BasePresentationParser(IPresentationParser):
    """Schema validation shared by every kind"""

    def __init__(self):
        body = self.schema()
        properties = dict(body.get('properties', {}))
        properties.setdefault('kind', {'const': self.kind})
        properties.setdefault('name', NAME)
        self._validator = Draft202012Validator({**body, 'type': 'object', 'properties': properties,
                                                'required': ['kind'] + list(body.get('required', []))})

    def validate(self, data: Dict[str, Any]):
        """
        Raises:
            SchemaError: with the path to the offending field
        """
        error = best_match(self._validator.iter_errors(data))
        if error is not None:
            path = list(error.absolute_path)
            where = '/'.join(str(p) for p in path) or '<root>'
            raise SchemaError(f"{self.kind} document invalid at {where}: {error.message}", path=path)

    def parse(self, data: Dict[str, Any], context: 'ParseContext') -> Any:
        self.validate(data)
        presentation = self.build(data, context)
        _logger.debug(f"Parsed {self.kind} {data.get('name', '')}")
        return presentation


def rationals(values: Sequence[str]) -> List:
    return [parse_rational(v) for v in values]
