import json
from typing import *

from ..real import RealSpec, EMPTY
from ..utils import dump_json_line
from .config import Budgets
from .oracles import Predicate
from .outcome import RunOutcome
from .program import Program
from .run import Runner, _initial

EVENTS = ('step', 'loop-detected', 'limit-jump', 'oracle-query', 'halt')


def trace(program: Program, x: RealSpec = EMPTY, budgets: Budgets = None, sink: Callable[[dict], None] = None,
          oracle: RealSpec = EMPTY, member: Predicate = None) -> Tuple[List[dict], RunOutcome]:
    """Runs the program and collects its events, forwarding each one to ``sink`` as it happens."""
    events = []

    def collect(event):
        assert event['event'] in EVENTS, event
        events.append(event)
        if sink is not None:
            sink(event)

    outcome = Runner(program, budgets or Budgets(), member, collect).run(_initial(program, x, oracle))
    return events, outcome


def encode_events(events: Iterable[dict]) -> str:
    return ''.join(dump_json_line(event) + '\n' for event in events)


def decode_events(text: str) -> List[dict]:
    return [json.loads(line) for line in text.splitlines() if line.strip()]
