from .term_transformer import TermTransformer

__all__ = ['TermTransformer']
