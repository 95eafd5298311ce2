from typing import *

from ..ordinal import successor
from .config import Configuration
from .oracles import Predicate, ask
from .program import Program, ORACLE


def read_at(config: Configuration, member: Predicate = None) -> Tuple[int, ...]:
    """The bits under the head, with a due oracle answer in place of the oracle bit."""
    read = [tape.bit_at(config.head) for tape in config.tapes]
    if config.pending:
        if member is None:
            raise ValueError('An oracle answer is due but no membership predicate was given.')
        read[ORACLE] = ask(member, config.tapes[ORACLE])
    return tuple(read)


def step(program: Program, config: Configuration, member: Predicate = None) -> Configuration:
    """One successor step. A move left from cell 0 stays at cell 0."""
    if config.state == program.halt:
        raise ValueError("Can't step a halted configuration.")

    result = config.copy()
    action = program.action(config.state, read_at(config, member))
    for tape, bit in zip(result.tapes, action.write):
        tape.write(config.head, bit)

    result.head = max(0, config.head + action.move)
    result.state = action.target
    result.pending = action.query
    result.stage = successor(config.stage)
    return result
