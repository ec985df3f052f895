"""
Category Parsers
Finite categories, distributors between them, and lax normal functors
"""
from typing import Any, Dict

from ...constants import (
    CONSTRUCTION_DIAGONAL, CONSTRUCTION_FIBRES, CONSTRUCTION_SINGLETON, CONSTRUCTION_TWISTED, KIND_DISTRIBUTOR,
    KIND_FINCAT, KIND_FUNCTOR, KIND_LAXFUNCTOR, SIDE_IN, SIDE_OUT, TWIST_MONOIDS,
)
from ...exceptions import InvariantError
from ...models.distributor import FinDistributor
from ...models.fin_category import FinCategory, Morphism, codiscrete, discrete, monoid_category
from ...models.functor import PolyFunctor
from ...models.lax_functor import LaxNormalFunctor
from ...models.monoid_polycategory import FiniteMonoid
from ..distributor_service import hom_distributor
from ..elements_service import diagonal_functor, fibres_functor, singleton_functor, twisted_functor
from .base_parser import INDEX, NAME, NAMES, NESTED, BasePresentationParser

FIBRE_SHAPES = ('discrete', 'codiscrete')


class FinCategoryParser(BasePresentationParser):
    """
    Explicit tables, or a generated shape: "shape" discrete/codiscrete over
    objects, or "monoid" (a named small monoid) over objects
    """

    kind = KIND_FINCAT

    def schema(self) -> Dict[str, Any]:
        return {
            'required': ['objects'],
            'properties': {
                'objects': {'type': 'array', 'items': NAME, 'minItems': 1},
                'morphisms': {'type': 'array', 'items': {
                    'type': 'object', 'required': ['id', 'source', 'target'],
                    'properties': {'id': NAME, 'source': NAME, 'target': NAME},
                }},
                'identities': {'type': 'object', 'additionalProperties': NAME},
                'composition': {'type': 'array', 'items': {
                    'type': 'object', 'required': ['first', 'second', 'result'],
                    'properties': {'first': NAME, 'second': NAME, 'result': NAME},
                }},
                'shape': {'enum': list(FIBRE_SHAPES)},
                'monoid': {'enum': sorted(TWIST_MONOIDS)},
            },
            'oneOf': [
                {'required': ['morphisms', 'identities', 'composition']},
                {'required': ['shape']},
                {'required': ['monoid']},
            ],
        }

    def build(self, data, context) -> FinCategory:
        name = data.get('name', '')
        if 'shape' in data:
            category = discrete(data['objects'], name) if data['shape'] == 'discrete' \
                else codiscrete(data['objects'], name)
        elif 'monoid' in data:
            category = monoid_category(data['objects'], FiniteMonoid(*TWIST_MONOIDS[data['monoid']]), name)
        else:
            morphisms = [Morphism(m['id'], m['source'], m['target']) for m in data['morphisms']]
            composition = {(c['first'], c['second']): c['result'] for c in data['composition']}
            return FinCategory(data['objects'], morphisms, data['identities'], composition, name=name)
        category.validate()
        return category


class DistributorParser(BasePresentationParser):
    """
    The hom distributor of a category, or explicit element sets and actions;
    actions validate on load
    """

    kind = KIND_DISTRIBUTOR

    def schema(self) -> Dict[str, Any]:
        return {
            'properties': {
                'hom': NESTED,
                'inputs': {'type': 'array', 'items': NESTED},
                'outputs': {'type': 'array', 'items': NESTED},
                'elements': {'type': 'array', 'items': {
                    'type': 'object', 'required': ['ins', 'outs', 'names'],
                    'properties': {'ins': NAMES, 'outs': NAMES, 'names': NAMES},
                }},
                'actions': {'type': 'array', 'items': {
                    'type': 'object', 'required': ['side', 'slot', 'morphism', 'ins', 'outs', 'element', 'result'],
                    'properties': {
                        'side': {'enum': [SIDE_IN, SIDE_OUT]}, 'slot': INDEX, 'morphism': NAME,
                        'ins': NAMES, 'outs': NAMES, 'element': NAME, 'result': NAME,
                    },
                }},
            },
            'oneOf': [
                {'required': ['hom']},
                {'required': ['inputs', 'outputs', 'elements', 'actions']},
            ],
        }

    def build(self, data, context) -> FinDistributor:
        if 'hom' in data:
            return hom_distributor(context.load(data['hom'], KIND_FINCAT))
        inputs = [context.load(c, KIND_FINCAT) for c in data['inputs']]
        outputs = [context.load(c, KIND_FINCAT) for c in data['outputs']]
        elements = {}
        for entry in data['elements']:
            key = (tuple(entry['ins']), tuple(entry['outs']))
            if len(key[0]) != len(inputs) or len(key[1]) != len(outputs):
                raise InvariantError(f"Element tuple {entry['ins']}; {entry['outs']} has the wrong length",
                                     check='tuples')
            elements[key] = entry['names']
        actions = {(a['side'], a['slot'], a['morphism'], tuple(a['ins']), tuple(a['outs']), a['element']): a['result']
                   for a in data['actions']}
        distributor = FinDistributor(inputs, outputs, elements, actions, name=data.get('name', ''))
        distributor.validate()
        return distributor


class LaxFunctorParser(BasePresentationParser):
    """
    A lax normal functor by construction: fibres of a functor, singleton,
    diagonal over labels, or monoid-twisted over a base
    """

    kind = KIND_LAXFUNCTOR

    def schema(self) -> Dict[str, Any]:
        return {
            'required': ['construction'],
            'properties': {
                'construction': {'enum': [CONSTRUCTION_FIBRES, CONSTRUCTION_SINGLETON, CONSTRUCTION_DIAGONAL,
                                          CONSTRUCTION_TWISTED]},
                'base': NESTED,
                'functor': NESTED,
                'labels': {'type': 'array', 'items': NAME, 'minItems': 1},
                'monoid': {'enum': sorted(TWIST_MONOIDS)},
                'fibre_objects': {'type': 'array', 'items': NAME, 'minItems': 1},
            },
            'oneOf': [
                {'properties': {'construction': {'const': CONSTRUCTION_FIBRES}}, 'required': ['functor']},
                {'properties': {'construction': {'const': CONSTRUCTION_SINGLETON}}, 'required': ['base']},
                {'properties': {'construction': {'const': CONSTRUCTION_DIAGONAL}}, 'required': ['base']},
                {'properties': {'construction': {'const': CONSTRUCTION_TWISTED}}, 'required': ['base', 'monoid']},
            ],
        }

    def build(self, data, context) -> LaxNormalFunctor:
        name = data.get('name', '')
        construction = data['construction']
        if construction == CONSTRUCTION_FIBRES:
            functor: PolyFunctor = context.load(data['functor'], KIND_FUNCTOR)
            return fibres_functor(functor, name=name)
        base = context.load(data['base'])
        if construction == CONSTRUCTION_SINGLETON:
            return singleton_functor(base, name=name)
        if construction == CONSTRUCTION_DIAGONAL:
            return diagonal_functor(base, data.get('labels', ('0', '1')), name=name)
        monoid = FiniteMonoid(*TWIST_MONOIDS[data['monoid']])
        return twisted_functor(base, monoid, data.get('fibre_objects', ('u',)), name=name)
