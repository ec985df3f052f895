from .parser_factory import ParseContext, ParserFactory, load_document, parse_input, parse_text

__all__ = [
    'ParseContext',
    'ParserFactory',
    'load_document',
    'parse_input',
    'parse_text',
]
