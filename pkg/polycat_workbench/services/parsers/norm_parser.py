"""
Norm Parsers
Polytope norms, tensors and polylinear maps with rationals written "p/q"
"""
from typing import Any, Dict

import numpy as np

from ...constants import KIND_NORM, KIND_POLYMAP, KIND_TENSOR, NORM_PRESETS
from ...exceptions import DimMismatch, DimTooLarge
from ...models.norm import PolyLinearMap, PolytopeNorm, TensorElement, fraction_array
from ...utils import parse_rational
from ..linear_service import identity_map, universal_map_tensors
from ..norm_service import l1, linf, norm_from_vertices, scaled, weighted_l1, weighted_linf
from .base_parser import INDEX, RATIONAL, VECTOR, BasePresentationParser, rationals

UNIVERSAL_MAPS = ('m', 'w', 'cup', 'cap')
DIMS = {'type': 'array', 'items': {'type': 'integer', 'minimum': 1}}


def _check_order(dims, context):
    cap = context.configuration.max_tensor_order
    if len(dims) > cap:
        raise DimTooLarge(f"Tensor order {len(dims)} exceeds {cap}", dim=len(dims), cap=cap)


class NormParser(BasePresentationParser):
    """
    A preset ("l1" or "linf", by dim or by positive weights) or explicit
    vertices, with dual_vertices when known; an optional positive scale
    """

    kind = KIND_NORM

    def schema(self) -> Dict[str, Any]:
        return {
            'properties': {
                'preset': {'enum': NORM_PRESETS},
                'dim': {'type': 'integer', 'minimum': 1},
                'weights': {'type': 'array', 'items': RATIONAL, 'minItems': 1},
                'vertices': {'type': 'array', 'items': VECTOR, 'minItems': 1},
                'dual_vertices': {'type': 'array', 'items': VECTOR, 'minItems': 1},
                'scale': RATIONAL,
            },
            'oneOf': [
                {'required': ['preset', 'dim']},
                {'required': ['preset', 'weights']},
                {'required': ['vertices'], 'not': {'required': ['preset']}},
            ],
        }

    def build(self, data, context) -> PolytopeNorm:
        name = data.get('name', '')
        if 'preset' in data:
            if 'weights' in data:
                constructor = weighted_l1 if data['preset'] == 'l1' else weighted_linf
                norm = constructor(rationals(data['weights']), name=name)
            else:
                norm = l1(data['dim']) if data['preset'] == 'l1' else linf(data['dim'])
        else:
            vertices = [tuple(rationals(v)) for v in data['vertices']]
            dim = data.get('dim', len(vertices[0]))
            if 'dual_vertices' in data:
                dual = [tuple(rationals(f)) for f in data['dual_vertices']]
                norm = PolytopeNorm(dim, vertices, dual, name=name).validate()
            else:
                norm = norm_from_vertices(vertices, dim, name=name)
        if 'scale' in data:
            norm = scaled(norm, parse_rational(data['scale']))
        return norm


class TensorParser(BasePresentationParser):
    """Flat row-major coefficients, or terms {"coefficient", "index"}"""

    kind = KIND_TENSOR

    def schema(self) -> Dict[str, Any]:
        return {
            'required': ['dims'],
            'properties': {
                'dims': DIMS,
                'coefficients': VECTOR,
                'terms': {'type': 'array', 'items': {
                    'type': 'object', 'required': ['coefficient', 'index'],
                    'properties': {'coefficient': RATIONAL, 'index': {'type': 'array', 'items': INDEX}},
                }},
            },
            'oneOf': [{'required': ['coefficients']}, {'required': ['terms']}],
        }

    def build(self, data, context) -> TensorElement:
        dims = tuple(data['dims'])
        _check_order(dims, context)
        if 'coefficients' in data:
            flat = rationals(data['coefficients'])
            if len(flat) != int(np.prod(dims)):
                raise DimMismatch(f"{len(flat)} coefficients for dims {list(dims)}",
                                  expected=int(np.prod(dims)), found=len(flat))
            return TensorElement.from_flat(dims, flat)
        terms = []
        for term in data['terms']:
            index = tuple(term['index'])
            if len(index) != len(dims) or any(k >= d for k, d in zip(index, dims)):
                raise DimMismatch(f"Index {list(index)} outside dims {list(dims)}", expected=dims, found=index)
            terms.append((parse_rational(term['coefficient']), index))
        return TensorElement.from_terms(dims, terms)


class PolymapParser(BasePresentationParser):
    """
    A polylinear map: input and output dims with flat coefficients (input
    axes first), one of the universal maps m, w, cup, cap over dims, or the
    identity on a space
    """

    kind = KIND_POLYMAP

    def schema(self) -> Dict[str, Any]:
        return {
            'properties': {
                'inputs': DIMS,
                'outputs': DIMS,
                'coefficients': VECTOR,
                'universal': {'enum': list(UNIVERSAL_MAPS)},
                'dims': DIMS,
                'identity': {'type': 'integer', 'minimum': 1},
            },
            'oneOf': [
                {'required': ['inputs', 'outputs', 'coefficients']},
                {'required': ['universal', 'dims']},
                {'required': ['identity']},
            ],
        }

    def build(self, data, context) -> PolyLinearMap:
        if 'identity' in data:
            return identity_map(data['identity'])
        if 'universal' in data:
            _check_order(data['dims'], context)
            return universal_map_tensors(data['dims'])[UNIVERSAL_MAPS.index(data['universal'])]
        inputs, outputs = tuple(data['inputs']), tuple(data['outputs'])
        shape = inputs + outputs
        flat = rationals(data['coefficients'])
        if len(flat) != int(np.prod(shape)):
            raise DimMismatch(f"{len(flat)} coefficients for shape {list(shape)}",
                              expected=int(np.prod(shape)), found=len(flat))
        return PolyLinearMap(inputs, outputs, fraction_array(flat, shape), name=data.get('name', 'map'))
