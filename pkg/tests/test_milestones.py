import pytest

from ittm.machine import run, run_eventual, Halted, Stabilized, BudgetExhausted, Budgets
from ittm.ordinal import parse_cnf
from ittm.real import parse_real, EMPTY
from ittm.stdlib import milestone, milestone_stage, flag_flash_detector, toggler

MILESTONES = [
    (('finite', 1), '1'),
    (('finite', 5), '5'),
    (('omega',), 'w+1'),
    (('omega_plus', 3), 'w+3'),
    (('omega_times', 2), 'w*2+1'),
    (('omega_times', 3), 'w*3+1'),
    (('omega_times_plus', 2, 4), 'w*2+4'),
    (('omega_squared',), 'w^2+1'),
    (('omega_squared_plus', 2), 'w^2+2'),
]


@pytest.mark.parametrize('args, stage', MILESTONES)
def test_milestone_stages(args, stage):
    assert milestone_stage(*args) == parse_cnf(stage)
    outcome = run(milestone(*args))
    assert isinstance(outcome, Halted)
    assert outcome.stage == parse_cnf(stage)


def test_milestones_ignore_the_input():
    outcome = run(milestone('omega_times', 2), parse_real('ep{|1}'))
    assert outcome.stage == parse_cnf('w*2+1')


@pytest.mark.parametrize('args', [('nope',), ('finite', 0), ('omega_times', -1)])
def test_bad_milestones(args):
    with pytest.raises(ValueError):
        milestone(*args)


def test_milestone_names():
    assert milestone('omega_times_plus', 2, 4).name == 'omega_times_plus_2_4'


@pytest.mark.parametrize('x, changed', [('fs{}', 0), ('fs{0}', 1)])
def test_flag_flash_detector(x, changed):
    outcome = run(flag_flash_detector(), parse_real(x))
    assert isinstance(outcome, Halted)
    assert outcome.stage > parse_cnf('w^2')
    assert outcome.stage < parse_cnf('w^2+w')
    assert outcome.output.peek(0) == 1
    assert outcome.output.peek(1) == changed


def test_toggler_never_halts_but_output_is_stable():
    outcome = run(toggler(), EMPTY, Budgets(max_accel_level=2))
    assert isinstance(outcome, BudgetExhausted)
    assert outcome.diverges

    outcome = run_eventual(toggler(), EMPTY, Budgets(max_accel_level=2))
    assert isinstance(outcome, Stabilized)
    assert outcome.output.as_spec() == EMPTY
