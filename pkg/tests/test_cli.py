import json
import os
import subprocess
import sys

import pytest

from ittm.cli import parse_args, main
from ittm.real import parse_real

SOURCE = '''
@name marker
@start s
@limit l
@halt h
s (_ _ _) -> write(_ _ _) move(R) goto s
l (_ _ _) -> write(_ _ 1) move(S) goto h
'''


def call(capsys, *argv):
    code = main(parse_args(argv))
    return code, capsys.readouterr().out


def test_run(capsys):
    code, out = call(capsys, 'run', 'stdlib:milestone_omega_plus_3')
    assert code == 0
    assert json.loads(out) == {'outcome': 'halted', 'stage': 'w+3', 'output': 'fs{}'}


def test_run_out_of_budget(capsys):
    code, out = call(capsys, 'run', 'stdlib:toggler', '--clock', 'w*3')
    assert code == 2
    assert json.loads(out)['outcome'] == 'budget_exhausted'


def test_run_eventual(capsys):
    code, out = call(capsys, 'run', 'stdlib:toggler', '--eventual', '--accel', '2')
    assert code == 0
    assert json.loads(out)['outcome'] == 'stabilized'


def test_run_by_index(capsys):
    code, out = call(capsys, 'run', '0x0', '--input', 'fs{1,2}')
    assert code == 0
    assert json.loads(out)['stage'] == '1'


def test_assemble(capsys, tmp_path):
    source, canonical = tmp_path / 'marker.ittm', tmp_path / 'canonical.ittm'
    source.write_text(SOURCE)
    code, out = call(capsys, 'assemble', str(source), '--out', str(canonical))
    assert code == 0
    result = json.loads(out)
    assert (result['name'], result['states']) == ('marker', 3)
    assert result['index'].startswith('0x')

    code, out = call(capsys, 'run', str(canonical))
    assert json.loads(out)['output'] == 'fs{0}'


def test_trace(capsys, tmp_path):
    source = tmp_path / 'marker.ittm'
    source.write_text(SOURCE)
    code, out = call(capsys, 'trace', str(source))
    lines = [json.loads(line) for line in out.splitlines()]
    assert code == 0
    assert lines[-2]['event'] == 'halt'
    assert lines[-1] == {'outcome': 'halted', 'stage': 'w+1', 'output': 'fs{0}'}


@pytest.mark.parametrize('x, accept', [('fs{2}', True), ('fs{1,2}', False)])
def test_wo(capsys, x, accept):
    code, out = call(capsys, 'wo', x, '--bound', '3')
    result = json.loads(out)
    assert code == 0
    assert result['accept'] == accept
    assert not result['overflow']


def test_wo_overflow(capsys):
    code, out = call(capsys, 'wo', 'fs{40}', '--bound', '3')
    result = json.loads(out)
    assert code == 0
    assert result['accept'] is None
    assert result['overflow']


def test_jump_inadmissible(capsys):
    code, out = call(capsys, 'jump', 'curated', '--input', 'fs{20}')
    result = json.loads(out)
    assert code == 0
    assert result['indices'] == []
    assert result['inadmissible']


@pytest.mark.slow
def test_jump(capsys):
    code, out = call(capsys, 'jump', 'curated')
    result = json.loads(out)
    assert code == 0
    assert result['indices'] == [0, 1]
    assert not result['inadmissible']


@pytest.mark.slow
def test_gaps(capsys):
    code, out = call(capsys, 'gaps', 'curated', '--jobs', '2')
    result = json.loads(out)
    assert code == 0
    assert result['gap'] is not None
    assert [row['halts'] for row in result['programs']] == [True, True, False]


def test_reduce_verify(capsys, tmp_path):
    samples = tmp_path / 'samples.json'
    samples.write_text(json.dumps([['fs{1}', 'fs{1}'], ['fs{1}', 'fs{0}']]))
    code, out = call(capsys, 'reduce-verify', 'stdlib:copy_input', 'eq', 'eq', str(samples), '--jobs', '2')
    result = json.loads(out)
    assert code == 0
    assert result['passed']
    assert [pair['verdict'] for pair in result['pairs']] == ['pass', 'pass']


def test_reduce_verify_failure(capsys, tmp_path):
    samples = tmp_path / 'samples.json'
    samples.write_text(json.dumps([['fs{1}', 'fs{0}']]))
    code, out = call(capsys, 'reduce-verify', '0x0', 'eq', 'eq', str(samples))
    assert code == 0
    assert not json.loads(out)['passed']


@pytest.mark.parametrize('argv', [
    [],
    ['frobnicate'],
    ['run'],
    ['run', 'stdlib:nope'],
    ['run', 'stdlib:toggler', '--input', 'fs{x}'],
    ['run', 'stdlib:toggler', '--clock', 'w^'],
    ['run', 'stdlib:toggler', '--block-steps', 'many'],
    ['run', 'no/such/file.ittm'],
    ['reduce-verify', 'stdlib:copy_input', 'eq', 'E7', 'samples.json'],
])
def test_usage_errors(capsys, argv):
    with pytest.raises(SystemExit) as e:
        main(parse_args(argv))
    assert e.value.code == 1
    assert 'error' in json.loads(capsys.readouterr().err.strip().splitlines()[-1])


def test_verbose(capsys):
    code, _ = call(capsys, '-vv', 'run', 'stdlib:milestone_finite_5')
    assert code == 0


@pytest.mark.slow
@pytest.mark.parametrize('argv', [
    ['run', 'stdlib:milestone_omega_times_2'],
    ['trace', 'stdlib:copy_input', '--input', 'ep{1|10}'],
    ['gaps', 'curated', '--jobs', '2'],
    ['reduce-verify', 'stdlib:copy_input', 'E0', 'E0', 'SAMPLES', '--jobs', '2'],
])
def test_output_is_reproducible(tmp_path, argv):
    samples = tmp_path / 'samples.json'
    samples.write_text(json.dumps([['fs{1}', 'fs{1,5}'], ['ep{|1}', 'ep{0|1}'], ['fs{}', 'ep{|01}']]))
    argv = [str(samples) if arg == 'SAMPLES' else arg for arg in argv]
    script = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), 'run_ittm.py')
    outputs = [subprocess.run([sys.executable, script, *argv], stdout=subprocess.PIPE, check=True).stdout
               for _ in range(2)]
    assert outputs[0]
    assert outputs[0] == outputs[1]
