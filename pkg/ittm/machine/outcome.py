from typing import *

from ..ordinal import Ordinal
from ..real import TapeView
from .config import Configuration


class Halted(NamedTuple):
    stage: Ordinal
    output: TapeView
    config: Configuration

    definite = True

    def to_json(self) -> dict:
        return {'outcome': 'halted', 'stage': str(self.stage), 'output': self.output.literal()}


class BudgetExhausted(NamedTuple):
    stage: Ordinal
    config: Configuration
    reason: str
    # the run provably never halts
    diverges: bool = False

    definite = False

    def to_json(self) -> dict:
        return {'outcome': 'budget_exhausted', 'stage': str(self.stage), 'reason': self.reason,
                'diverges': self.diverges, 'config': self.config.to_json()}


class NoLoopFound(NamedTuple):
    stage: Ordinal
    level: int
    diagnostics: str

    definite = False

    def to_json(self) -> dict:
        return {'outcome': 'no_loop_found', 'stage': str(self.stage), 'level': self.level,
                'diagnostics': self.diagnostics}


class Stabilized(NamedTuple):
    output: TapeView
    since: Ordinal
    stage: Ordinal

    definite = True

    def to_json(self) -> dict:
        return {'outcome': 'stabilized', 'output': self.output.literal(), 'since': str(self.since),
                'stage': str(self.stage)}


class NotStabilized(NamedTuple):
    stage: Ordinal
    diagnostics: str

    definite = False

    def to_json(self) -> dict:
        return {'outcome': 'not_stabilized', 'stage': str(self.stage), 'diagnostics': self.diagnostics}


RunOutcome = Union[Halted, BudgetExhausted, NoLoopFound, Stabilized, NotStabilized]
