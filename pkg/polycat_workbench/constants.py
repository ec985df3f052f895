"""
Polycategory Workbench Constants
Centralized defaults, input kinds and report vocabulary
"""

# Arity bounds
DEFAULT_ARITY_BOUND = 4
ARITY_BOUND_ENV = 'POLYCAT_ARITY_BOUND'
ELEMENTS_ARITY_BOUND = 2  # lax functors are materialized up to this arity

# Norm engine caps
MAX_NORM_DIM = 4          # polar step (facet enumeration) refuses beyond this
MAX_TENSOR_ORDER = 3
MAX_POLAR_VERTICES = 64

# Randomized suites
DEFAULT_SEED = 20240229
SEED_ENV = 'POLYCAT_SEED'
RANDOM_NUMERATOR_RANGE = 5
RANDOM_DENOMINATOR_RANGE = 4

# Free polycategory
DEFAULT_MAX_NODES = 6
FREE_LAW_ITEM_NODES = 2   # law instances draw f, g, h from trees of at most this size

# Terminal polycategory
TERMINAL_OBJECT = '*'
TERMINAL_ARROW = '!'

# Input kinds
KIND_TABLE_POLYCAT = 'table-polycat'
KIND_MONOID_POLYCAT = 'monoid-polycat'
KIND_SIGNATURE = 'signature'
KIND_FUNCTOR = 'functor'
KIND_NORM = 'norm'
KIND_TENSOR = 'tensor'
KIND_POLYMAP = 'polymap'
KIND_FINCAT = 'fincat'
KIND_DISTRIBUTOR = 'distributor'
KIND_LAXFUNCTOR = 'laxfunctor'

INPUT_KINDS = [
    KIND_TABLE_POLYCAT,
    KIND_MONOID_POLYCAT,
    KIND_SIGNATURE,
    KIND_FUNCTOR,
    KIND_NORM,
    KIND_TENSOR,
    KIND_POLYMAP,
    KIND_FINCAT,
    KIND_DISTRIBUTOR,
    KIND_LAXFUNCTOR,
]

# Law names
LAW_LEFT_UNIT = 'left-unit'
LAW_RIGHT_UNIT = 'right-unit'
LAW_ASSOCIATIVITY = 'associativity'
LAW_INPUT_INTERCHANGE = 'input-interchange'
LAW_OUTPUT_INTERCHANGE = 'output-interchange'

LAWS = [
    LAW_LEFT_UNIT,
    LAW_RIGHT_UNIT,
    LAW_ASSOCIATIVITY,
    LAW_INPUT_INTERCHANGE,
    LAW_OUTPUT_INTERCHANGE,
]

# Sides and positions
SIDE_IN = 'in'
SIDE_OUT = 'out'

# Universal object kinds
UNIVERSAL_TENSOR = 'tensor'
UNIVERSAL_PAR = 'par'
UNIVERSAL_LEFT_DUAL = 'leftDual'
UNIVERSAL_RIGHT_DUAL = 'rightDual'
UNIVERSAL_IN = 'inUniversal'
UNIVERSAL_OUT = 'outUniversal'

# Norm result kinds
NORM_KIND_NORM = 'norm'
NORM_KIND_SEMINORM = 'seminorm'
NORM_KIND_EXTENDED = 'extended'

NORM_PRESETS = ['l1', 'linf']

# Lax functor constructions
CONSTRUCTION_FIBRES = 'fibres'
CONSTRUCTION_SINGLETON = 'singleton'
CONSTRUCTION_DIAGONAL = 'diagonal'
CONSTRUCTION_TWISTED = 'monoid-twisted'

# Small commutative monoids used by the twisted generator
TWIST_MONOIDS = {
    'trivial': (('e',), 'e', {('e', 'e'): 'e'}),
    'z2': (('e', 'a'), 'e', {
        ('e', 'e'): 'e', ('e', 'a'): 'a', ('a', 'e'): 'a', ('a', 'a'): 'e',
    }),
    'bool': (('0', '1'), '1', {
        ('0', '0'): '0', ('0', '1'): '0', ('1', '0'): '0', ('1', '1'): '1',
    }),
    'z3': (('0', '1', '2'), '0', {
        (str(a), str(b)): str((a + b) % 3) for a in range(3) for b in range(3)
    }),
}

# Verdicts and exit codes
VERDICT_HOLDS = 'holds'
VERDICT_FAILS = 'fails'
EXIT_HOLDS = 0
EXIT_FAILS = 1
EXIT_INPUT_ERROR = 2

# Logging
LOG_FORMAT = '%(asctime)s %(levelname)s %(name)s: %(message)s'
DEFAULT_LOG_LEVEL = 'WARNING'

# Error Messages
ERROR_MESSAGES = {
    'type_mismatch': 'Type mismatch at the cut',
    'index_out_of_range': 'Index out of range',
    'planarity': 'Composition violates planarity',
    'out_of_bound': 'Composite leaves the represented arity bound',
    'not_a_monoid': 'Multiplication table is not a monoid',
    'not_commutative': 'Monoid is not commutative',
    'unknown_type': 'Unknown type',
    'unknown_operation': 'Unknown operation',
    'malformed_tree': 'Malformed tree',
    'not_spanning': 'Vertex set does not span the space',
    'dim_mismatch': 'Dimension mismatch',
    'dim_too_large': 'Dimension exceeds configured cap',
    'degenerate': 'Degenerate vertex cloud',
    'boundary_mismatch': 'Boundary categories do not match at the cut',
    'unknown_command': 'Unknown command',
}
