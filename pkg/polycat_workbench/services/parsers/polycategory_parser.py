"""
Polycategory Parsers
Table and monoid presentations, and functors between them
"""
from typing import Any, Dict

from ...constants import KIND_FUNCTOR, KIND_MONOID_POLYCAT, KIND_TABLE_POLYCAT
from ...exceptions import InvariantError
from ...models.functor import PolyFunctor, identity_functor, unique_functor_to_terminal
from ...models.monoid_polycategory import from_monoid
from ...models.polycategory import Boundary, FinPolycategory, PolyMap
from ...models.table_polycategory import TablePolycategory
from .base_parser import INDEX, NAME, NAMES, NESTED, BasePresentationParser


class TablePolycategoryParser(BasePresentationParser):
    """
    Explicit germ: polymaps with globally unique ids, identities and
    composition entries {"f", "i", "g", "j", "result"}
    """

    kind = KIND_TABLE_POLYCAT

    def schema(self) -> Dict[str, Any]:
        return {
            'required': ['objects', 'bound', 'polymaps', 'identities', 'composition'],
            'properties': {
                'objects': NAMES,
                'bound': {'type': 'integer', 'minimum': 1},
                'polymaps': {'type': 'array', 'items': {
                    'type': 'object', 'required': ['id', 'dom', 'cod'],
                    'properties': {'id': NAME, 'dom': NAMES, 'cod': NAMES},
                }},
                'identities': {'type': 'object', 'additionalProperties': NAME},
                'composition': {'type': 'array', 'items': {
                    'type': 'object', 'required': ['f', 'i', 'g', 'j', 'result'],
                    'properties': {'f': NAME, 'i': INDEX, 'g': NAME, 'j': INDEX, 'result': NAME},
                }},
            },
        }

    def build(self, data, context) -> TablePolycategory:
        maps: Dict[str, PolyMap] = {}
        for entry in data['polymaps']:
            if entry['id'] in maps:
                raise InvariantError(f"Polymap id {entry['id']} is used twice", check='polymap_ids')
            maps[entry['id']] = PolyMap(entry['id'], Boundary(tuple(entry['dom']), tuple(entry['cod'])))

        def lookup(name: str, where: str) -> PolyMap:
            if name not in maps:
                raise InvariantError(f"{where} refers to unknown polymap {name}", check='references')
            return maps[name]

        identities = {obj: lookup(name, f"identity of {obj}") for obj, name in data['identities'].items()}
        composition = {}
        for entry in data['composition']:
            where = f"composition {entry['f']}[{entry['i']}] into {entry['g']}[{entry['j']}]"
            key = (lookup(entry['f'], where), entry['i'], lookup(entry['g'], where), entry['j'])
            if key in composition:
                raise InvariantError(f"{where} is listed twice", check='composition_exact')
            composition[key] = lookup(entry['result'], where)
        return TablePolycategory(data['objects'], data['bound'], maps.values(), identities, composition,
                                 name=data.get('name', 'table'))


class MonoidPolycategoryParser(BasePresentationParser):
    """Commutative monoid with its table as [a, b, a*b] rows; optional objects for the codiscrete variant"""

    kind = KIND_MONOID_POLYCAT

    def schema(self) -> Dict[str, Any]:
        return {
            'required': ['carrier', 'unit', 'table'],
            'properties': {
                'carrier': {'type': 'array', 'items': NAME, 'minItems': 1},
                'unit': NAME,
                'table': {'type': 'array', 'items': {'type': 'array', 'items': NAME, 'minItems': 3, 'maxItems': 3}},
                'objects': {'type': 'array', 'items': NAME, 'minItems': 1},
                'bound': {'type': 'integer', 'minimum': 1},
            },
        }

    def build(self, data, context) -> FinPolycategory:
        table = {(a, b): c for a, b, c in data['table']}
        kwargs = {'objects': data['objects']} if 'objects' in data else {}
        return from_monoid(data['carrier'], data['unit'], table,
                           arity_bound=data.get('bound', context.configuration.arity_bound),
                           name=data.get('name', 'monoid'), **kwargs)


class FunctorParser(BasePresentationParser):
    """
    Source and target given inline or by path; either id tables, or
    "identity": true, or "to_terminal": true
    """

    kind = KIND_FUNCTOR

    def schema(self) -> Dict[str, Any]:
        return {
            'required': ['source'],
            'properties': {
                'source': NESTED,
                'target': NESTED,
                'objects': {'type': 'object', 'additionalProperties': NAME},
                'polymaps': {'type': 'object', 'additionalProperties': NAME},
                'identity': {'type': 'boolean'},
                'to_terminal': {'type': 'boolean'},
            },
            'oneOf': [
                {'required': ['target', 'objects', 'polymaps']},
                {'required': ['identity']},
                {'required': ['to_terminal']},
            ],
        }

    def build(self, data, context) -> PolyFunctor:
        source = context.load(data['source'])
        if data.get('identity'):
            return identity_functor(source)
        if data.get('to_terminal'):
            return unique_functor_to_terminal(source)
        target = context.load(data['target'])
        return PolyFunctor.from_id_table(source, target, data['objects'], data['polymaps'],
                                         name=data.get('name', ''))
