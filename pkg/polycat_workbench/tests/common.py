"""
Shared fixtures for the test suites
"""
import os

from ..models.monoid_polycategory import boolean_monoid, cyclic_monoid, MonoidPolycategory, terminal
from ..models.table_polycategory import identities_only

DATA_DIR = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), 'data')


def data_path(name: str) -> str:
    return os.path.join(DATA_DIR, name)


def small_corpus():
    """Exact presentations small enough for exhaustive checks"""
    return [
        terminal(2),
        terminal(3),
        MonoidPolycategory(cyclic_monoid(2), 2, name='z2'),
        MonoidPolycategory(cyclic_monoid(3), 2, name='z3'),
        MonoidPolycategory(boolean_monoid(), 2, name='bool'),
    ]


def identity_corpus():
    return [identities_only(['A'], 2), identities_only(['A', 'B'], 2)]
