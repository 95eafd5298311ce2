"""The shipped programs: each one is written as ``<name>.ittm`` next to a ``manifest.json``."""
from typing import *
import os
import logging

from ..asm import format as format_source, disassemble, encode_index, NOOP
from ..default_params import WO_FIELD_BOUND
from ..machine import Program
from ..utils import save_json, load_json, parallel_map
from .demos import copy_input, parity_of_prefix, any_one, toggler
from .dovetail import dovetailer, gap_finder, jump_enumerator
from .eck import eck_to_wo, relation_writer, chain_pairs
from .flags import flag_flash_detector
from .milestones import milestone
from .wo import wo_decider, linearity_check, count_through

logger = logging.getLogger(__name__)

MANIFEST = 'manifest.json'


def curated_universe() -> List[Program]:
    """Halts at once, halts at 3, never halts."""
    return [NOOP, milestone('finite', 3), toggler()]


def curated_classical() -> List[Program]:
    """Classical writers of orders of size 2 always, 4 when input cell 0 is set, and a non-order."""
    return [
        relation_writer(chain_pairs(2), name='chain_2'),
        relation_writer(chain_pairs(4), gate=True, name='gated_chain_4'),
        relation_writer([(0, 1), (1, 0)], name='two_cycle'),
    ]


# name -> (builder, parameters)
CATALOG: Dict[str, Tuple[Callable[..., Program], dict]] = {
    'milestone_finite_5': (milestone, {'kind': 'finite', 'args': [5]}),
    'milestone_omega': (milestone, {'kind': 'omega', 'args': []}),
    'milestone_omega_plus_3': (milestone, {'kind': 'omega_plus', 'args': [3]}),
    'milestone_omega_times_2': (milestone, {'kind': 'omega_times', 'args': [2]}),
    'milestone_omega_squared': (milestone, {'kind': 'omega_squared', 'args': []}),
    'flag_flash_detector': (flag_flash_detector, {}),
    'copy_input': (copy_input, {}),
    'parity_of_prefix_3': (parity_of_prefix, {'n': 3}),
    'any_one': (any_one, {}),
    'toggler': (toggler, {}),
    'linearity_check': (linearity_check, {'bound': WO_FIELD_BOUND}),
    'wo_decider': (wo_decider, {'bound': WO_FIELD_BOUND}),
    'count_through': (count_through, {'bound': WO_FIELD_BOUND}),
    'dovetailer_curated': (dovetailer, {'universe': 'curated'}),
    'gap_finder_curated': (gap_finder, {'universe': 'curated'}),
    'jump_enumerator_curated': (jump_enumerator, {'universe': 'curated'}),
    'eck_to_wo_curated': (eck_to_wo, {'universe': 'curated_classical', 'time': 32}),
}

UNIVERSES = {'curated': curated_universe, 'curated_classical': curated_classical}


def build(name: str) -> Program:
    if name not in CATALOG:
        raise KeyError(f"Unknown stdlib program {name!r}, choose one of {sorted(CATALOG)}.")
    builder, params = CATALOG[name]
    params = dict(params)
    if builder is milestone:
        program = milestone(params['kind'], *params['args'])
    else:
        if isinstance(params.get('universe'), str):
            params['universe'] = UNIVERSES[params['universe']]()
        program = builder(**params)
    program.name = name
    return program


def corpus(names: Iterable[str] = None) -> Dict[str, Program]:
    return {name: build(name) for name in (names or CATALOG)}


def _write_one(name: str, directory: str) -> dict:
    program = build(name)
    with open(os.path.join(directory, f'{name}.ittm'), 'w') as f:
        f.write(format_source(disassemble(program)))
    logger.info('wrote %s (%d states)', name, len(program.states))
    return {'name': name, 'file': f'{name}.ittm', 'params': CATALOG[name][1], 'states': len(program.states),
            'index': hex(encode_index(program))}


def write_stdlib(directory: str, names: Iterable[str] = None, n_jobs: int = 1) -> List[dict]:
    os.makedirs(directory, exist_ok=True)
    entries = parallel_map(_write_one, sorted(names or CATALOG), n_jobs, directory)
    save_json(entries, os.path.join(directory, MANIFEST))
    return entries


def read_manifest(directory: str) -> Dict[str, dict]:
    return {entry['name']: entry for entry in load_json(os.path.join(directory, MANIFEST))}
