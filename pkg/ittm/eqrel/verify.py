"""Checking on sample pairs that a program reduces one relation to another."""
from typing import *
from dataclasses import dataclass
import logging

import pandas as pd

from ..errors import InadmissibleInput
from ..machine import Program, Budgets, Halted, Stabilized, run, run_eventual
from ..real import RealSpec, parse_real
from ..utils import parallel_map, load_json
from .relations import Relation

logger = logging.getLogger(__name__)

MODES = ('computable', 'eventual')
VERDICTS = ('pass', 'fail', 'inconclusive')


def _image(x: RealSpec, program: Program, budgets: Budgets, mode: str) -> Optional[RealSpec]:
    if mode == 'computable':
        outcome = run(program, x, budgets)
        return outcome.output.as_spec() if isinstance(outcome, Halted) else None

    outcome = run_eventual(program, x, budgets)
    return outcome.output.as_spec() if isinstance(outcome, Stabilized) else None


@dataclass
class Report:
    program: str
    source: Relation
    target: Relation
    mode: str
    budgets: Budgets
    pairs: pd.DataFrame

    @property
    def passed(self) -> bool:
        return not (self.pairs['verdict'] == 'fail').any()

    @property
    def failures(self) -> pd.DataFrame:
        return self.pairs[self.pairs['verdict'] == 'fail']

    def to_json(self) -> dict:
        def cell(value):
            return None if pd.isna(value) else bool(value)

        return {
            'program': self.program,
            'relations': [self.source.to_json(), self.target.to_json()],
            'mode': self.mode,
            'budgets': self.budgets.to_json(),
            'pairs': [
                {'x': row.x, 'y': row.y, 'source': cell(row.source), 'target': cell(row.target),
                 'verdict': row.verdict}
                for row in self.pairs.itertuples()
            ],
            'passed': self.passed,
        }


def _verdict(source: bool, images: Tuple[Optional[RealSpec], Optional[RealSpec]], target: Relation):
    fx, fy = images
    if fx is None or fy is None:
        return None, 'inconclusive'
    try:
        related = target(fx, fy)
    except InadmissibleInput as e:
        logger.info('image outside the target relation: %s', e)
        return None, 'fail'
    return related, 'pass' if related == source else 'fail'


def verify_reduction(program: Program, source: Relation, target: Relation, samples: Sequence[Tuple[RealSpec, RealSpec]],
                     budgets: Budgets = None, mode: str = 'computable', n_jobs: int = 1) -> Report:
    """
    For every sample pair checks ``x E y  iff  f(x) F f(y)``.

    Inputs are run once each, in parallel with ``n_jobs``; a run without a
    definite outcome makes its pairs inconclusive rather than failing them.
    """
    if mode not in MODES:
        raise ValueError(f"Unknown mode {mode!r}, choose one of {MODES}.")
    budgets = budgets or Budgets()
    samples = [tuple(pair) for pair in samples]

    inputs = sorted({x for pair in samples for x in pair}, key=lambda x: x.literal())
    images = dict(zip(inputs, parallel_map(_image, inputs, n_jobs, program, budgets, mode)))

    rows = []
    for x, y in samples:
        related = source(x, y)
        mapped, verdict = _verdict(related, (images[x], images[y]), target)
        rows.append({'x': x.literal(), 'y': y.literal(), 'source': related, 'target': mapped, 'verdict': verdict})
        if verdict == 'fail':
            logger.info('witness pair %s, %s', x.literal(), y.literal())

    pairs = pd.DataFrame(rows, columns=['x', 'y', 'source', 'target', 'verdict'])
    return Report(program.name, source, target, mode, budgets, pairs)


def load_samples(path: str) -> List[Tuple[RealSpec, RealSpec]]:
    """A JSON list of ``[x, y]`` real literals."""
    return [(parse_real(x), parse_real(y)) for x, y in load_json(path)]
