import logging
from typing import *

from ..ordinal import Ordinal, ZERO, OMEGA, add, compare, block_limit, as_ordinal, LESS, GREATER
from ..real import RealSpec, TapeView, EMPTY, join_views
from .config import Budgets, Configuration, canonical_view
from .loops import Sink, scan_block, limit_config
from .oracles import Predicate, get_predicate
from .outcome import RunOutcome, Halted, BudgetExhausted, NoLoopFound, Stabilized, NotStabilized
from .program import Program

logger = logging.getLogger(__name__)


class BlockResult(NamedTuple):
    halted: bool
    # stage reached, relative to the start of the block
    elapsed: Ordinal
    end: Configuration
    block_max: List[TapeView]
    # relative stage of the last change of the output tape, if any
    last_change: Optional[Ordinal]
    # the block ends where it started, and nothing inside it rises above that
    closed: bool


class _Stop(Exception):
    def __init__(self, outcome: RunOutcome):
        super().__init__(outcome)
        self.outcome = outcome


def _latest(results: Sequence[BlockResult], offsets: Sequence[Ordinal]) -> Optional[Ordinal]:
    latest = None
    for result, offset in zip(results, offsets):
        if result.last_change is not None:
            latest = add(offset, result.last_change)
    return latest


class Runner:
    """
    Runs a program through transfinite stages.

    A level-k block starts at a multiple of w^k and consists of level-(k-1) blocks;
    when their start configurations repeat, the run jumps to the next multiple of
    w^k. Level 1 blocks are stepped by ``scan_block``. Blocks of level
    ``max_accel_level + 1`` are never accelerated: a repeat there ends the run.
    """

    def __init__(self, program: Program, budgets: Budgets, member: Predicate = None,
                 sink: Sink = None, eventual: bool = False):
        self.program = program
        self.budgets = budgets
        self.member = member
        self.sink = sink
        self.eventual = eventual
        # replaying memoized blocks would drop their events from a trace
        self.memo = {} if sink is None else None
        self.homes: List[RealSpec] = []

    def run(self, config: Configuration) -> RunOutcome:
        self.homes = [tape.base for tape in config.tapes]
        try:
            result = self._block(self.budgets.max_accel_level + 1, config)
        except _Stop as e:
            return e.outcome

        assert result.halted
        stage = result.end.stage
        self._emit('halt', result.end)
        if self.eventual:
            return Stabilized(result.end.output, result.last_change or ZERO, stage)
        return Halted(stage, result.end.output, result.end)

    def _emit(self, event: str, config: Configuration, level: int = 0, **extra):
        if self.sink is not None:
            self.sink({'event': event, 'stage': str(config.stage), 'state': config.state, 'head': config.head,
                       'changed_cells': [], 'level': level, **extra})

    def _exhausted(self, config: Configuration, reason: str, diverges: bool = False) -> _Stop:
        logger.info('Budget exhausted at %s: %s', config.stage, reason)
        if self.eventual:
            return _Stop(NotStabilized(config.stage, reason))
        return _Stop(BudgetExhausted(config.stage, config, reason, diverges))

    def _no_loop(self, config: Configuration, level: int, diagnostics: str) -> _Stop:
        logger.info('No loop found at level %d from %s: %s', level, config.stage, diagnostics)
        if self.eventual:
            return _Stop(NotStabilized(config.stage, diagnostics))
        return _Stop(NoLoopFound(config.stage, level, diagnostics))

    def _block(self, level: int, config: Configuration) -> BlockResult:
        clock = self.budgets.clock_bound
        if compare(config.stage, clock) != LESS:
            raise self._exhausted(config, f'clock bound {clock} reached')

        key = None
        if self.memo is not None:
            key = level, config.key()
            result = self.memo.get(key)
            if result is not None:
                return self._place(result, config)

        if level == 1:
            result = self._scan(config)
        else:
            result = self._climb(level, config)

        if key is not None:
            self.memo[key] = result
        return self._place(result, config)

    def _place(self, result: BlockResult, config: Configuration) -> BlockResult:
        end = result.end.copy()
        end.stage = add(config.stage, result.elapsed)
        if not result.halted and compare(end.stage, self.budgets.clock_bound) == GREATER:
            raise self._exhausted(config, f'clock bound {self.budgets.clock_bound} reached')
        return result._replace(end=end)

    def _steps_left(self, stage: Ordinal) -> Optional[int]:
        clock = self.budgets.clock_bound
        if compare(add(stage, OMEGA), clock) != GREATER:
            return None
        return clock.finite_part - stage.finite_part

    def _scan(self, config: Configuration) -> BlockResult:
        scan = scan_block(self.program, config.copy(), self.budgets.steps_per_block, self.member, self.sink,
                          self._steps_left(config.stage))
        last = None if scan.last_change is None else Ordinal.of(scan.last_change)

        if scan.kind == 'halt':
            return BlockResult(True, Ordinal.of(scan.steps), scan.config, scan.block_max, last, False)
        if scan.kind == 'clock':
            raise self._exhausted(scan.config, f'clock bound {self.budgets.clock_bound} reached')
        if scan.kind == 'exhausted':
            raise self._no_loop(scan.config, 1, f'no loop within {scan.steps} steps')

        loop = scan.loop
        limit = limit_config(self.program, loop, 1, self.homes)
        logger.debug('%s loop of length %d (shift %d) from %s, limit at %s',
                     loop.kind, loop.length, loop.shift, loop.entry.stage, limit.stage)
        self._emit('loop-detected', scan.config, 1, **({'shift': loop.shift} if loop.shift else {}))
        self._emit('limit-jump', limit, 1)

        if loop.output_changes or limit.output != scan.config.output:
            last = OMEGA
        closed = limit.same(config) and all(m == t for m, t in zip(scan.block_max, config.tapes))
        return BlockResult(False, OMEGA, limit, scan.block_max, last, closed)

    def _climb(self, level: int, config: Configuration) -> BlockResult:
        seen: Dict[tuple, int] = {}
        results: List[BlockResult] = []
        offsets: List[Ordinal] = []
        offset = ZERO
        current = config

        for index in range(self.budgets.blocks_per_level + 1):
            key = current.key()
            if key in seen:
                return self._accelerate(level, config, current, results, offsets, seen[key])
            if index == self.budgets.blocks_per_level:
                break
            seen[key] = index

            result = self._block(level - 1, current)
            if result.halted:
                last = _latest(results + [result], offsets + [offset])
                return result._replace(elapsed=add(offset, result.elapsed), last_change=last)

            results.append(result)
            offsets.append(offset)
            offset = add(offset, result.elapsed)
            current = result.end

        if level > self.budgets.max_accel_level:
            raise self._exhausted(current, f'no repeat among {len(results)} blocks of level {level - 1}')
        raise self._no_loop(current, level, f'no repeat among {len(results)} blocks of level {level - 1}')

    def _accelerate(self, level: int, config: Configuration, current: Configuration,
                    results: List[BlockResult], offsets: List[Ordinal], start: int) -> BlockResult:
        cycle = results[start:]
        churn = any(result.last_change is not None for result in cycle)
        self._emit('loop-detected', current, level)

        if level > self.budgets.max_accel_level:
            return self._top_cycle(current, cycle, churn, _latest(results, offsets), config.stage)

        tapes = [
            canonical_view(join_views([result.block_max[t] for result in cycle]), home)
            for t, home in enumerate(self.homes)
        ]
        elapsed = Ordinal.omega_power(level)
        limit = Configuration(self.program.limit, 0, tapes, block_limit(config.stage, level))
        logger.debug('Level %d repeat of %d blocks, limit at %s', level, len(cycle), limit.stage)
        self._emit('limit-jump', limit, level)

        last = elapsed if churn else _latest(results, offsets)
        block_max = [join_views([result.block_max[t] for result in results]) for t in range(len(tapes))]
        closed = limit.same(config) and all(m == t for m, t in zip(block_max, config.tapes))
        return BlockResult(False, elapsed, limit, block_max, last, closed)

    def _top_cycle(self, current: Configuration, cycle: Sequence[BlockResult], churn: bool,
                   last: Optional[Ordinal], start: Ordinal):
        level = self.budgets.max_accel_level
        if self.eventual and not churn:
            since = ZERO if last is None else add(start, last)
            raise _Stop(Stabilized(current.output, since, current.stage))
        if self.eventual:
            raise _Stop(NotStabilized(current.stage, f'the output keeps changing across blocks of level {level}'))

        diverges = any(result.closed for result in cycle)
        raise self._exhausted(current, f'repeat of blocks of level {level} past the acceleration limit', diverges)


def _initial(program: Program, x: RealSpec, oracle: RealSpec = EMPTY) -> Configuration:
    return Configuration.initial(program, x, oracle)


def run(program: Program, x: RealSpec = EMPTY, budgets: Budgets = None, sink: Sink = None) -> RunOutcome:
    if program.arity != 3:
        raise ValueError(f'{program!r} needs an oracle tape.')
    return Runner(program, budgets or Budgets(), sink=sink).run(_initial(program, x))


def run_with_real_oracle(program: Program, x: RealSpec, oracle: RealSpec, budgets: Budgets = None,
                         sink: Sink = None) -> RunOutcome:
    if program.arity != 4:
        raise ValueError(f'{program!r} has no oracle tape.')
    return Runner(program, budgets or Budgets(), sink=sink).run(_initial(program, x, oracle))


def run_with_set_oracle(program: Program, x: RealSpec, member: Union[str, Predicate], budgets: Budgets = None,
                        sink: Sink = None) -> RunOutcome:
    """The oracle tape starts empty; a query replaces the next oracle bit read by the membership answer."""
    if program.arity != 4:
        raise ValueError(f'{program!r} has no oracle tape.')
    if isinstance(member, str):
        member = get_predicate(member)
    return Runner(program, budgets or Budgets(), member, sink).run(_initial(program, x))


def run_eventual(program: Program, x: RealSpec = EMPTY, budgets: Budgets = None, sink: Sink = None,
                 oracle: RealSpec = EMPTY) -> Union[Stabilized, NotStabilized]:
    return Runner(program, budgets or Budgets(), sink=sink, eventual=True).run(_initial(program, x, oracle))


def semi_decide(program: Program, x: RealSpec = EMPTY, budgets: Budgets = None) -> Optional[bool]:
    """``True`` when the run halts; never a rejecting answer, ``None`` stands for "not yet"."""
    outcome = run(program, x, budgets)
    return True if isinstance(outcome, Halted) else None


def writes(program: Program, budgets: Budgets = None) -> Optional[RealSpec]:
    """The real written on input 0, if the run halts within budgets."""
    outcome = run(program, EMPTY, budgets)
    return outcome.output.as_spec() if isinstance(outcome, Halted) else None


def clocks(program: Program, alpha: Union[int, str, Ordinal], budgets: Budgets = None) -> bool:
    outcome = run(program, EMPTY, budgets)
    return isinstance(outcome, Halted) and outcome.stage == as_ordinal(alpha)
