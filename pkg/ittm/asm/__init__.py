from .source import AsmSource, Line
from .parser import parse, format, format_line
from .validate import validate, assemble, disassemble
from .macros import *
from .index import encode_index, decode_index, is_valid_index, NOOP
