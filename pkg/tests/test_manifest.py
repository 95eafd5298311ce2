import os

import pytest

from ittm.asm import assemble, decode_index
from ittm.machine import run
from ittm.stdlib import CATALOG, build, corpus, write_stdlib, read_manifest, curated_universe, curated_classical

NAMES = ['milestone_omega', 'copy_input', 'toggler', 'parity_of_prefix_3']


def test_build():
    program = build('milestone_omega')
    assert program.name == 'milestone_omega'
    assert str(run(program).stage) == 'w+1'
    with pytest.raises(KeyError):
        build('nope')


def test_curated_universes():
    assert [p.name for p in curated_universe()] == ['#0', 'finite_3', 'toggler']
    assert [p.name for p in curated_classical()] == ['chain_2', 'gated_chain_4', 'two_cycle']


def test_corpus():
    programs = corpus(NAMES)
    assert sorted(programs) == sorted(NAMES)
    assert all(program.name == name for name, program in programs.items())


@pytest.mark.parametrize('n_jobs', [1, 2])
def test_write_stdlib(tmp_path, n_jobs):
    entries = write_stdlib(str(tmp_path), NAMES, n_jobs)
    assert [entry['name'] for entry in entries] == sorted(NAMES)

    manifest = read_manifest(str(tmp_path))
    for name in NAMES:
        entry = manifest[name]
        with open(os.path.join(tmp_path, entry['file'])) as f:
            program = assemble(f.read())
        assert program == build(name)
        assert program.name == name
        assert decode_index(int(entry['index'], 16)) == build(name).canonical()
        assert entry['states'] == len(program.states)
        assert entry['params'] == CATALOG[name][1]


@pytest.mark.slow
def test_every_entry_builds():
    for name, program in corpus().items():
        assert program.name == name
        assert program.arity == 3
