from .program import Program, Action, LEFT, STAY, RIGHT, MOVES, INPUT, SCRATCH, OUTPUT, ORACLE, all_reads
from .config import Budgets, Configuration, canonical_view
from .outcome import RunOutcome, Halted, BudgetExhausted, NoLoopFound, Stabilized, NotStabilized
from .oracles import register_predicate, get_predicate
from .step import step
from .loops import Loop, detect_loop, limit_config, audit_cycle, scan_block
from .run import Runner, run, run_with_real_oracle, run_with_set_oracle, run_eventual, semi_decide, writes, clocks
from .trace import trace, encode_events, decode_events
