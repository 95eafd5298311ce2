from itertools import permutations

import pytest
from hypothesis import given, settings, strategies as st

from ittm.eqrel import chain_code, chain_pairs, is_well_order, random_relation
from ittm.machine import run, Halted
from ittm.ordinal import parse_cnf, OMEGA
from ittm.real import parse_real, encode_relation, EMPTY
from ittm.stdlib import (wo_decider, linearity_check, count_through, wo_layout, wo_verdict as verdict, copy_input,
                          parity_of_prefix, any_one, demos)

BOUND = 4


@pytest.fixture(scope='module')
def decider():
    return wo_decider(BOUND)


def decide(program, x):
    outcome = run(program, x)
    assert isinstance(outcome, Halted)
    assert outcome.stage < parse_cnf('w^2')
    return outcome.output.peek(0), outcome.output.peek(1)


@pytest.mark.parametrize('x', [
    EMPTY,
    chain_code(1, [2]),
    chain_code(3),
    chain_code(4, [3, 1, 0, 2]),
])
def test_accepts_well_orders(decider, x):
    assert decide(decider, x) == (1, 0)


@pytest.mark.parametrize('pairs', [
    {(0, 0)},
    {(0, 1), (1, 0)},
    {(0, 1), (0, 2)},
    {(0, 1), (1, 2)},
    {(0, 1), (1, 2), (2, 0)},
])
def test_rejects_other_relations(decider, pairs):
    assert decide(decider, encode_relation(pairs)) == (0, 0)


def test_overflow(decider):
    assert decide(decider, chain_code(2, [0, BOUND + 1])) == (0, 1)
    assert decide(decider, parse_real('fs{1000}')) == (0, 1)


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 3), st.floats(0, 1), st.booleans(), st.integers(0, 2 ** 16))
def test_agrees_with_brute_force(size, density, linear, seed):
    import numpy as np

    pairs = random_relation(size, density, linear, np.random.RandomState(seed))
    assert decide(wo_decider(BOUND), encode_relation(pairs)) == (int(is_well_order(pairs)), 0)


def test_linearity_check():
    program = linearity_check(BOUND)
    for pairs, linear in [(set(), 1), ({(1, 0)}, 1), ({(0, 1), (1, 0)}, 0), ({(0, 1), (0, 2)}, 0)]:
        outcome = run(program, encode_relation(pairs))
        assert outcome.stage.is_finite
        assert outcome.output.peek(0) == linear


def test_layout():
    cells = wo_layout(BOUND)
    assert cells['answer'] == (2, 0)
    assert len(set(cells.values())) == len(cells)
    with pytest.raises(ValueError):
        wo_decider(0)


@pytest.mark.parametrize('x', ['fs{}', 'fs{0,3}', 'ep{1|10}'])
def test_copy_input(x):
    outcome = run(copy_input(), parse_real(x))
    assert outcome.stage == OMEGA + 1
    assert outcome.output.as_spec() == parse_real(x)


@pytest.mark.parametrize('x, parity', [('fs{}', 0), ('fs{0,2,7}', 0), ('fs{1}', 1), ('ep{|1}', 1)])
def test_parity_of_prefix(x, parity):
    outcome = run(parity_of_prefix(3), parse_real(x))
    assert outcome.stage.is_finite
    assert outcome.output.as_spec() == (parse_real('fs{0}') if parity else EMPTY)


def test_any_one():
    assert run(any_one(), parse_real('fs{5}')).output.peek(0) == 1
    outcome = run(any_one())
    assert outcome.stage == OMEGA + 1
    assert outcome.output.peek(0) == 0


def test_demos_halt_before_omega_squared():
    for name, program in demos(BOUND).items():
        for x in (EMPTY, chain_code(2)):
            outcome = run(program, x)
            assert isinstance(outcome, Halted), name
            assert outcome.stage < parse_cnf('w^2'), name


def test_overflow_is_inconclusive(decider):
    outcome = run(decider, chain_code(3, [1, 3, 5]))
    assert verdict(outcome) is None
    assert verdict(run(wo_decider(6), chain_code(3, [1, 3, 5]))) is True
    assert verdict(run(wo_decider(6), encode_relation({(1, 3), (3, 5), (5, 1)}))) is False


def test_non_linear_generated_input_is_rejected_before_omega(decider):
    # 0 and 2 are both in the field and unrelated
    outcome = run(decider, parse_real('gen{desc_chain}'))
    assert isinstance(outcome, Halted)
    assert outcome.stage.is_finite
    assert verdict(outcome) is False


def test_three_cycle_fails_the_linearity_check():
    outcome = run(linearity_check(BOUND), encode_relation({(0, 1), (1, 2), (2, 0)}))
    assert outcome.stage.is_finite
    assert outcome.output.peek(0) == 0


@pytest.mark.parametrize('pairs', [{(0, 1), (1, 2), (2, 0)}, {(3, 1), (1, 0), (0, 3), (2, 3)}])
def test_count_through_rejects_through_the_master_flag(pairs):
    outcome = run(count_through(BOUND), encode_relation(pairs))
    assert isinstance(outcome, Halted)
    # the guess keeps moving up to w, and the flag read there decides
    assert OMEGA < outcome.stage < OMEGA + OMEGA
    assert outcome.output.peek(0) == 0


@pytest.mark.parametrize('x', [EMPTY, chain_code(3), chain_code(4, [2, 0, 3, 1])])
def test_count_through_accepts_linear_orders(x):
    outcome = run(count_through(BOUND), x)
    assert isinstance(outcome, Halted)
    assert OMEGA < outcome.stage < OMEGA + OMEGA
    assert outcome.output.peek(0) == 1


def test_all_small_linear_orders():
    program = wo_decider(5)
    for size in range(6):
        for order in permutations(range(size)):
            pairs = chain_pairs(order)
            assert verdict(run(program, encode_relation(pairs))) is is_well_order(pairs), order


@pytest.mark.slow
def test_random_relations_up_to_eight_elements():
    import numpy as np

    program = wo_decider(8)
    random_state = np.random.RandomState(0)
    for _ in range(200):
        size = int(random_state.randint(0, 9))
        pairs = random_relation(size, float(random_state.uniform(0, .6)), bool(random_state.randint(2)),
                                random_state)
        assert verdict(run(program, encode_relation(pairs))) is is_well_order(pairs), sorted(pairs)
