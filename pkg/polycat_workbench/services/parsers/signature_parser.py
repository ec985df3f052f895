"""
Signature Parser
Types and named operations of a free polycategory
"""
from typing import Any, Dict

from ...constants import KIND_SIGNATURE
from ...models.signature import PolySignature
from .base_parser import NAME, NAMES, BasePresentationParser


class SignatureParser(BasePresentationParser):

    kind = KIND_SIGNATURE

    def schema(self) -> Dict[str, Any]:
        return {
            'required': ['types', 'operations'],
            'properties': {
                'types': NAMES,
                'operations': {'type': 'array', 'items': {
                    'type': 'object', 'required': ['name', 'dom', 'cod'],
                    'properties': {'name': NAME, 'dom': NAMES, 'cod': NAMES},
                }},
            },
        }

    def build(self, data, context) -> PolySignature:
        operations = [(op['name'], op['dom'], op['cod']) for op in data['operations']]
        return PolySignature.build(data['types'], operations, name=data.get('name', 'signature'))
