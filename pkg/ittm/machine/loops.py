"""
Successor stepping inside one w-block, with loop detection.

Exact repeats are found with Brent's algorithm over whole configurations, the
tapes being compared through an incremental xor digest of their deltas first.
Shift repeats are looked for at the steps where the head reaches a new
rightmost cell, again with Brent checkpoints over that subsequence.
"""
import logging
from typing import *

from ..default_params import SOUNDNESS_CYCLES
from ..ordinal import Ordinal, add, block_limit
from ..real import RealSpec, TapeView, limsup_delta, eventually_periodic, with_periodic_tail
from .config import Configuration, canonical_view
from .oracles import Predicate, ask
from .program import Program, ORACLE, OUTPUT

logger = logging.getLogger(__name__)

Sink = Callable[[dict], None]

EXACT, SHIFT = 'exact', 'shift'


class Loop(NamedTuple):
    kind: str
    # step, counted from the start of the block, at which the cycle starts
    start: int
    length: int
    shift: int
    # leftmost cell visited inside the cycle
    frontier: int
    entry: Configuration
    exit: Configuration
    # cells written with 1 inside the cycle, per tape
    ones: Tuple[FrozenSet[int], ...]
    output_changes: bool
    queried: bool


class Scan(NamedTuple):
    # 'halt', 'loop', 'exhausted' or 'clock'
    kind: str
    steps: int
    config: Configuration
    loop: Optional[Loop]
    block_max: List[TapeView]
    last_change: Optional[int]


class _Checkpoint:
    __slots__ = ('state', 'head', 'pending', 'digest', 'deltas', 'step', 'ones', 'queried', 'min_head', 'changed', 'bumped')

    def __init__(self, state, head, pending, digest, deltas, step, n_tapes):
        self.state, self.head, self.pending, self.digest = state, head, pending, digest
        self.deltas = [dict(d) for d in deltas]
        self.step = step
        self.ones = [set() for _ in range(n_tapes)]
        self.queried = False
        self.min_head = head
        self.changed = False
        # a move left was clamped at cell 0
        self.bumped = False

    def config(self, bases: Sequence[RealSpec], stage: Ordinal) -> Configuration:
        tapes = []
        for base, delta in zip(bases, self.deltas):
            view = TapeView(base)
            view.delta = dict(delta)
            tapes.append(view)
        return Configuration(self.state, self.head, tapes, stage, self.pending)


def _digest(deltas: Sequence[Dict[int, int]]) -> int:
    digest = 0
    for t, delta in enumerate(deltas):
        for n in delta:
            digest ^= hash((t, n))
    return digest


def _cell(base: RealSpec, delta: Dict[int, int], n: int) -> int:
    value = delta.get(n)
    return base.bit(n) if value is None else value


def _shift_match(checkpoint: _Checkpoint, state: str, head: int, pending: bool,
                 bases: Sequence[RealSpec], deltas: Sequence[Dict[int, int]]) -> bool:
    shift = head - checkpoint.head
    if state != checkpoint.state or pending != checkpoint.pending or shift <= 0:
        return False
    # clamping at cell 0 does not translate, nor do oracle answers
    if checkpoint.bumped or checkpoint.queried:
        return False

    frontier = checkpoint.min_head
    # cheap look around the head first
    for base, old, new in zip(bases, checkpoint.deltas, deltas):
        for n in range(max(frontier, checkpoint.head - 4), checkpoint.head + 1):
            if _cell(base, old, n) != _cell(base, new, n + shift):
                return False

    for base, old, new in zip(bases, checkpoint.deltas, deltas):
        if not base.shift_invariant(frontier, shift):
            return False
        stop = max(max(old, default=-1), max(new, default=-1) - shift) + 1
        for n in range(frontier, stop):
            if _cell(base, old, n) != _cell(base, new, n + shift):
                return False
    return True


def _max_view(view: TapeView, ones: Iterable[int]) -> TapeView:
    result = view.copy()
    for n in ones:
        result.write(n, 1)
    return result


def _shift_block_max(start: Sequence[TapeView], block_ones, entry: Configuration, entry_ones,
                     frontier: int, shift: int, reach: int) -> List[TapeView]:
    """
    Cell-wise maximum over the whole block of a shift loop.

    From ``stop`` on every cell repeats, with period ``shift``, the maximum its
    mirror cell reached since the cycle was entered.
    """
    m, d = frontier, shift
    result = []
    for view, ones, entered, cycle_ones in zip(start, block_ones, entry.tapes, entry_ones):
        stop = max(m + d, reach, view.frontier, entered.frontier)
        before = [int(view.peek(n) or n in ones) for n in range(stop)]
        since = {}
        for n in range(m, stop):
            since[n] = int(entered.peek(n) or n in cycle_ones)
            if n >= m + d:
                since[n] = max(since[n], since[n - d])

        bits = [before[n] if n < m else max(before[n], since[n]) for n in range(stop)]
        period = [since[n] for n in range(stop - d, stop)]
        result.append(TapeView(eventually_periodic(bits, period)))
    return result


def scan_block(program: Program, config: Configuration, steps_per_block: int,
               member: Predicate = None, sink: Sink = None, step_limit: int = None) -> Scan:
    """
    Steps ``config`` (owned and mutated by the scan) until it halts, a loop is found,
    ``steps_per_block`` steps pass, or ``step_limit`` steps pass.
    """
    transitions, halt = program.transitions, program.halt
    tapes = config.tapes
    n_tapes = len(tapes)
    bases = [t.base for t in tapes]
    deltas = [t.delta for t in tapes]
    stage0 = config.stage
    state, head, pending = config.state, config.head, config.pending

    start_views = [t.copy() for t in tapes]
    block_ones = [set() for _ in range(n_tapes)]
    digest = _digest(deltas)
    tortoise = _Checkpoint(state, head, pending, digest, deltas, 0, n_tapes)
    record = _Checkpoint(state, head, pending, digest, deltas, 0, n_tapes)
    power, lam = 1, 0
    record_power, record_lam = 1, 0
    max_head = head
    last_change = None
    limit = steps_per_block if step_limit is None else min(steps_per_block, step_limit)

    def finish(kind, steps, loop=None, block_max=None):
        config.state, config.head, config.pending = state, head, pending
        config.stage = add(stage0, Ordinal.of(steps))
        for tape in tapes:
            tape.touched_max = max(tape.touched_max, max_head)
        if block_max is None:
            block_max = [_max_view(view, ones) for view, ones in zip(start_views, block_ones)]
        return Scan(kind, steps, config, loop, block_max, last_change)

    steps = 0
    while steps < limit:
        steps += 1
        cells = [_cell(bases[t], deltas[t], head) for t in range(n_tapes)]
        read = cells
        if pending:
            read = list(cells)
            read[ORACLE] = ask(member, tapes[ORACLE])
            pending = False

        action = transitions[state, tuple(read)]
        changed = []
        for t, bit in enumerate(action.write):
            if bit != cells[t]:
                if bit == bases[t].bit(head):
                    del deltas[t][head]
                else:
                    deltas[t][head] = bit
                digest ^= hash((t, head))
                changed.append((t, head, bit))
                if t == OUTPUT:
                    last_change = steps
                    tortoise.changed = record.changed = True
            if bit:
                block_ones[t].add(head)
                tortoise.ones[t].add(head)
                record.ones[t].add(head)

        if action.query:
            pending = True
            tortoise.queried = record.queried = True
        if head + action.move < 0:
            tortoise.bumped = record.bumped = True
        head = max(0, head + action.move)
        state = action.target
        if head < record.min_head:
            record.min_head = head

        if sink is not None:
            stage = str(add(stage0, Ordinal.of(steps)))
            sink({'event': 'step', 'stage': stage, 'state': state, 'head': head,
                  'changed_cells': [list(c) for c in changed], 'level': 0})
            if action.query:
                sink({'event': 'oracle-query', 'stage': stage, 'state': state, 'head': head,
                      'changed_cells': [], 'level': 0})

        if state == halt:
            return finish('halt', steps)

        lam += 1
        if state == tortoise.state and head == tortoise.head and pending == tortoise.pending \
                and digest == tortoise.digest and deltas == tortoise.deltas:
            entry = tortoise.config(bases, add(stage0, Ordinal.of(tortoise.step)))
            loop = Loop(EXACT, tortoise.step, lam, 0, 0, entry, None,
                        tuple(map(frozenset, tortoise.ones)), tortoise.changed, tortoise.queried)
            scan = finish('loop', steps)
            return scan._replace(loop=loop._replace(exit=config.copy()))
        if lam == power:
            tortoise = _Checkpoint(state, head, pending, digest, deltas, steps, n_tapes)
            power, lam = 2 * power, 0

        if head > max_head:
            max_head = head
            record_lam += 1
            if _shift_match(record, state, head, pending, bases, deltas):
                entry = record.config(bases, add(stage0, Ordinal.of(record.step)))
                loop = Loop(SHIFT, record.step, steps - record.step, head - record.head, record.min_head, entry,
                            None, tuple(map(frozenset, record.ones)), record.changed, record.queried)
                block_max = _shift_block_max(start_views, block_ones, entry, record.ones,
                                             record.min_head, head - record.head, max_head + 1)
                scan = finish('loop', steps, block_max=block_max)
                return scan._replace(loop=loop._replace(exit=config.copy()))
            if record_lam == record_power:
                record = _Checkpoint(state, head, pending, digest, deltas, steps, n_tapes)
                record_power, record_lam = 2 * record_power, 0

    kind = 'exhausted' if step_limit is None or steps_per_block <= step_limit else 'clock'
    return finish(kind, steps)


def detect_loop(program: Program, config: Configuration, steps_per_block: int,
                member: Predicate = None) -> Optional[Loop]:
    """The first loop met while stepping from ``config``, ``None`` if the block budget runs out first."""
    scan = scan_block(program, config.copy(), steps_per_block, member)
    return scan.loop


def limit_config(program: Program, loop: Loop, level: int = 1,
                 homes: Sequence[RealSpec] = None) -> Configuration:
    """The configuration at the limit of a forever repeating level-1 loop."""
    exit = loop.exit
    if loop.kind == EXACT:
        tapes = []
        for view, ones in zip(exit.tapes, loop.ones):
            result = TapeView(view.base, limsup_delta([view, _max_view(view, ones)], view), view.touched_max)
            tapes.append(result)
    else:
        m, d = loop.frontier, loop.shift
        # cells below m + d are final at the exit, the rest repeat cells m .. m + d - 1
        tapes = [with_periodic_tail(view, m, [view.peek(n) for n in range(m, m + d)]) for view in exit.tapes]

    if homes is not None:
        tapes = [canonical_view(view, home) for view, home in zip(tapes, homes)]
    return Configuration(program.limit, 0, tapes, block_limit(exit.stage, level))


def audit_cycle(program: Program, loop: Loop, cycles: int = SOUNDNESS_CYCLES, member: Predicate = None) -> List[str]:
    """
    Replays ``cycles`` more periods of a level-1 loop by brute force and returns the
    claims the replay contradicts: every period must end in the (shifted) entry
    configuration, and each cell the replay settles must carry its limit bit.
    """
    problems = []
    limit = limit_config(program, loop)
    entry = loop.entry
    config = entry.copy()
    shift = loop.shift
    seen_max = [{} for _ in config.tapes]

    for cycle in range(1, cycles + 1):
        for _ in range(loop.length):
            head = config.head
            read = [tape.peek(head) for tape in config.tapes]
            if config.pending:
                read[ORACLE] = ask(member, config.tapes[ORACLE])
            action = program.action(config.state, tuple(read))
            for t, (tape, bit) in enumerate(zip(config.tapes, action.write)):
                seen = seen_max[t].setdefault(head, tape.peek(head))
                tape.write(head, bit)
                seen_max[t][head] = max(seen, bit)
            config.head = max(0, head + action.move)
            config.state = action.target
            config.pending = action.query
            if config.state == program.halt:
                return problems + [f'the loop halts during replay {cycle}']

        moved = cycle * shift
        if config.state != entry.state or config.head != entry.head + moved:
            problems.append(f'replay {cycle} ends in {config.state} at cell {config.head}')
            continue
        for t, (now, then) in enumerate(zip(config.tapes, entry.tapes)):
            stop = max(then.frontier, now.frontier - moved, entry.head + 1)
            if any(now.peek(n + moved) != then.peek(n) for n in range(loop.frontier, stop)):
                problems.append(f'replay {cycle} differs from the entry on tape {t}')

    # the head never returns below this cell
    settled = loop.frontier + cycles * shift
    for t, tape in enumerate(config.tapes):
        for n, value in sorted(seen_max[t].items()):
            if shift and n >= settled:
                continue
            actual = tape.peek(n) if shift else value
            expected = limit.tapes[t].peek(n)
            if actual != expected:
                problems.append(f'cell {n} of tape {t} has limit bit {expected}, replay gives {actual}')
    return problems
