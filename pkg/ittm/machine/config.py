from typing import *
from dataclasses import dataclass, field

from ..default_params import CLOCK_BOUND, STEPS_PER_BLOCK, MAX_ACCEL_LEVEL, BLOCKS_PER_LEVEL
from ..ordinal import Ordinal, ZERO, as_ordinal
from ..real import RealSpec, TapeView, EMPTY, tails_agree
from .program import Program, TAPE_NAMES, OUTPUT


@dataclass(frozen=True)
class Budgets:
    clock_bound: Ordinal = field(default_factory=lambda: as_ordinal(CLOCK_BOUND))
    steps_per_block: int = STEPS_PER_BLOCK
    max_accel_level: int = MAX_ACCEL_LEVEL
    blocks_per_level: int = BLOCKS_PER_LEVEL

    def __post_init__(self):
        object.__setattr__(self, 'clock_bound', as_ordinal(self.clock_bound))
        if not self.clock_bound:
            raise ValueError('The clock bound must be positive.')
        for name in ('steps_per_block', 'max_accel_level', 'blocks_per_level'):
            if getattr(self, name) < 1:
                raise ValueError(f'{name} must be positive, got {getattr(self, name)}.')

    def to_json(self) -> dict:
        return {
            'clock_bound': str(self.clock_bound), 'steps_per_block': self.steps_per_block,
            'max_accel_level': self.max_accel_level, 'blocks_per_level': self.blocks_per_level,
        }


class Configuration:
    __slots__ = ('state', 'head', 'tapes', 'stage', 'pending')

    def __init__(self, state: str, head: int, tapes: Sequence[TapeView], stage: Ordinal = ZERO, pending: bool = False):
        assert head >= 0
        self.state = state
        self.head = head
        self.tapes = list(tapes)
        self.stage = stage
        # an oracle answer is due on the next read
        self.pending = pending

    @classmethod
    def initial(cls, program: Program, x: RealSpec, oracle: RealSpec = EMPTY) -> 'Configuration':
        tapes = [TapeView(x), TapeView(), TapeView()]
        if program.arity == 4:
            tapes.append(TapeView(oracle))
        return cls(program.start, 0, tapes)

    def copy(self) -> 'Configuration':
        return Configuration(self.state, self.head, [t.copy() for t in self.tapes], self.stage, self.pending)

    def key(self) -> tuple:
        return self.state, self.head, self.pending, tuple(t.key() for t in self.tapes)

    def same(self, other: 'Configuration') -> bool:
        return self.state == other.state and self.head == other.head and self.pending == other.pending \
               and self.tapes == other.tapes

    @property
    def output(self) -> TapeView:
        return self.tapes[OUTPUT]

    def to_json(self) -> dict:
        return {
            'state': self.state, 'head': self.head, 'stage': str(self.stage),
            'tapes': {name: _describe(t) for name, t in zip(TAPE_NAMES, self.tapes)},
        }

    def __repr__(self):
        return f'Configuration({self.state}, head={self.head}, stage={self.stage})'


def _describe(view: TapeView) -> str:
    try:
        return view.literal()
    except ValueError:
        return repr(view)


def canonical_view(view: TapeView, home: RealSpec) -> TapeView:
    """
    Re-expresses ``view`` over its tape's initial real ``home`` whenever their tails agree,
    so that equal tape contents always get equal representations.
    """
    if view.base == home:
        return view
    spec = view.as_spec()
    form = spec.periodic_form()
    stop = len(form[0]) if form is not None else 0
    if spec == home or tails_agree(home, spec, stop):
        result = TapeView(home, {n: spec.bit(n) for n in range(stop)})
    else:
        result = TapeView(spec)
    result.touched_max = view.touched_max
    return result
