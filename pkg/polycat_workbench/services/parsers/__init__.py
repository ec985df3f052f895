from .base_parser import BasePresentationParser, IPresentationParser

__all__ = [
    'BasePresentationParser',
    'IPresentationParser',
]
