"""
Polycategory Workbench Exceptions
Specific exceptions for malformed requests and inputs
"""


class PolycatError(Exception):
    """Base exception for workbench errors"""
    def __init__(self, message, error_code=None, context=None):
        self.message = message
        self.error_code = error_code
        self.context = context
        super().__init__(self.message)


class PlanarityViolation(PolycatError):
    """Raised when a cut would make wires cross"""
    def __init__(self, message, sides=None, **kwargs):
        self.sides = tuple(sides or ())
        super().__init__(message, error_code='planarity', **kwargs)


class TypeMismatch(PolycatError):
    """Raised when the objects at a cut differ"""
    def __init__(self, message, expected=None, found=None, **kwargs):
        self.expected = expected
        self.found = found
        super().__init__(message, error_code='type_mismatch', **kwargs)


class IndexOutOfRange(PolycatError):
    """Raised when a cut position does not exist"""
    def __init__(self, message, index=None, length=None, **kwargs):
        self.index = index
        self.length = length
        super().__init__(message, error_code='index_out_of_range', **kwargs)


class OutOfBound(PolycatError):
    """Raised when a query leaves the represented arity germ"""
    def __init__(self, message, arity=None, bound=None, **kwargs):
        self.arity = arity
        self.bound = bound
        super().__init__(message, error_code='out_of_bound', **kwargs)


class InvariantError(PolycatError):
    """Raised when a construction-time check fails"""
    def __init__(self, message, check=None, **kwargs):
        self.check = check
        kwargs.setdefault('error_code', 'invariant')
        super().__init__(message, **kwargs)


class NotAMonoid(InvariantError):
    """Raised when a multiplication table is not a monoid"""
    def __init__(self, message, witness=None, **kwargs):
        self.witness = witness
        super().__init__(message, check='monoid', error_code='not_a_monoid', **kwargs)


class NotCommutative(InvariantError):
    """Raised when a monoid fails commutativity (interchange would fail)"""
    def __init__(self, message, pair=None, **kwargs):
        self.pair = pair
        super().__init__(message, check='commutativity', error_code='not_commutative', **kwargs)


class UnknownType(PolycatError):
    """Raised when a signature has no such type"""
    pass


class UnknownOperation(PolycatError):
    """Raised when a signature has no such operation"""
    pass


class MalformedTree(PolycatError):
    """Raised when a tree fails its structural checks"""
    pass


class NotSpanning(PolycatError):
    """Raised when a vertex set does not span its space"""
    pass


class DimMismatch(PolycatError):
    """Raised when vector, tensor or norm dimensions disagree"""
    def __init__(self, message, expected=None, found=None, **kwargs):
        self.expected = expected
        self.found = found
        super().__init__(message, error_code='dim_mismatch', **kwargs)


class DimTooLarge(PolycatError):
    """Raised when a computation would exceed the configured caps"""
    def __init__(self, message, dim=None, cap=None, **kwargs):
        self.dim = dim
        self.cap = cap
        super().__init__(message, error_code='dim_too_large', **kwargs)


class Degenerate(PolycatError):
    """Raised when a vertex cloud is affinely dependent"""
    pass


class BoundaryMismatch(PolycatError):
    """Raised when distributor boundaries disagree at a cut"""
    pass


class InputSyntaxError(PolycatError):
    """Raised when an input file or expression cannot be tokenized"""
    def __init__(self, message, line=None, column=None, **kwargs):
        self.line = line
        self.column = column
        super().__init__(message, error_code='syntax', **kwargs)


class SchemaError(PolycatError):
    """Raised when an input document does not match its kind's schema"""
    def __init__(self, message, path=None, **kwargs):
        self.path = list(path or [])
        super().__init__(message, error_code='schema', **kwargs)


class UnknownCommand(PolycatError):
    """Raised for an unrecognised command line"""
    pass
