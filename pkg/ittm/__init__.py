from .ordinal import Ordinal, as_ordinal, parse_cnf, format_cnf
from .real import RealSpec, parse_real, format_real
from .machine import Program, Budgets, run, run_eventual, run_with_real_oracle, run_with_set_oracle, trace
from .asm import parse, assemble, disassemble, encode_index, decode_index
