"""
Workspace
Resolved configuration and the presentations loaded for one command
"""
import logging
import os
from dataclasses import dataclass
from typing import Any, Dict, Mapping, Optional, Tuple

from ..constants import (
    ARITY_BOUND_ENV, DEFAULT_ARITY_BOUND, DEFAULT_SEED, MAX_NORM_DIM, MAX_TENSOR_ORDER, SEED_ENV,
)
from ..exceptions import InvariantError, PolycatError

_logger = logging.getLogger(__name__)


def _from_environment(environ: Mapping[str, str], name: str) -> Optional[int]:
    raw = environ.get(name)
    if raw is None or raw.strip() == '':
        return None
    try:
        return int(raw)
    except ValueError:
        raise InvariantError(f"{name} must be an integer, got {raw!r}", check=name)


@dataclass(frozen=True)
class WorkspaceConfiguration:
    """Arity bound, dimension caps and random seed for one run"""
    arity_bound: int = DEFAULT_ARITY_BOUND
    seed: int = DEFAULT_SEED
    max_norm_dim: int = MAX_NORM_DIM
    max_tensor_order: int = MAX_TENSOR_ORDER

    def __post_init__(self):
        if self.arity_bound < 1:
            raise InvariantError(f"Arity bound must be positive, got {self.arity_bound}", check='arity_bound')
        if self.max_norm_dim < 1 or self.max_tensor_order < 1:
            raise InvariantError("Dimension caps must be positive", check='caps')

    @classmethod
    def resolve(cls, arity_bound: Optional[int] = None, seed: Optional[int] = None,
                environ: Optional[Mapping[str, str]] = None) -> 'WorkspaceConfiguration':
        """
        Explicit flag, then environment variable, then default

        Raises:
            InvariantError: unparsable environment value or non-positive bound
        """
        environ = os.environ if environ is None else environ
        if arity_bound is None:
            arity_bound = _from_environment(environ, ARITY_BOUND_ENV)
        if seed is None:
            seed = _from_environment(environ, SEED_ENV)
        configuration = cls(
            arity_bound=DEFAULT_ARITY_BOUND if arity_bound is None else arity_bound,
            seed=DEFAULT_SEED if seed is None else seed,
        )
        _logger.debug(f"Configuration: bound {configuration.arity_bound}, seed {configuration.seed}")
        return configuration


class Workspace:
    """Loaded presentations keyed by unique name"""

    def __init__(self, configuration: Optional[WorkspaceConfiguration] = None):
        self.configuration = configuration or WorkspaceConfiguration()
        self._items: Dict[str, Any] = {}

    def add(self, name: str, presentation: Any) -> Any:
        if name in self._items:
            raise PolycatError(f"A presentation named {name!r} is already loaded", error_code='duplicate_name')
        self._items[name] = presentation
        _logger.debug(f"Workspace holds {name}")
        return presentation

    def get(self, name: str) -> Any:
        try:
            return self._items[name]
        except KeyError:
            raise PolycatError(f"No presentation named {name!r}")

    def names(self) -> Tuple[str, ...]:
        return tuple(sorted(self._items))

    def __contains__(self, name: str) -> bool:
        return name in self._items

    def __len__(self) -> int:
        return len(self._items)
