from .polycategory import Boundary, CompositionRequest, FinPolycategory, PolyMap
from .monoid_polycategory import FiniteMonoid, MonoidPolycategory, from_monoid, is_terminal, terminal
from .table_polycategory import TablePolycategory, identities_only, materialize
from .functor import PolyFunctor, compose_functors, identity_functor, unique_functor_to_terminal
from .signature import Operation, PolySignature, TreePolymap
from .norm import ExtendedRational, NormResult, PolyLinearMap, PolytopeNorm, TensorElement
from .fin_category import FinCategory, Morphism
from .distributor import FinDistributor
from .lax_functor import LaxNormalFunctor
from .workspace import Workspace, WorkspaceConfiguration

__all__ = [
    'Boundary',
    'CompositionRequest',
    'FinPolycategory',
    'PolyMap',
    'FiniteMonoid',
    'MonoidPolycategory',
    'from_monoid',
    'is_terminal',
    'terminal',
    'TablePolycategory',
    'identities_only',
    'materialize',
    'PolyFunctor',
    'compose_functors',
    'identity_functor',
    'unique_functor_to_terminal',
    'Operation',
    'PolySignature',
    'TreePolymap',
    'ExtendedRational',
    'NormResult',
    'PolyLinearMap',
    'PolytopeNorm',
    'TensorElement',
    'FinCategory',
    'Morphism',
    'FinDistributor',
    'LaxNormalFunctor',
    'Workspace',
    'WorkspaceConfiguration',
]
