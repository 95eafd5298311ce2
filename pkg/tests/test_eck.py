from itertools import combinations_with_replacement

import pytest

from ittm.eqrel import eck_supremum, computed_orders, rel_Eck, rel_isoWO, verify_reduction, chain_code, \
    relation_of, order_type
from ittm.machine import run, Halted
from ittm.ordinal import OMEGA
from ittm.real import parse_real, encode_relation, EMPTY
from ittm.stdlib import eck_to_wo, relation_writer, chain_pairs, curated_classical

TIME = 32


@pytest.fixture(scope='module')
def reduction():
    return eck_to_wo(curated_classical(), TIME)


def test_chain_pairs():
    assert chain_pairs(3) == [(0, 1), (0, 2), (1, 2)]
    assert chain_pairs(1) == []


@pytest.mark.parametrize('gate, x, ones', [(False, 'fs{}', 'fs{2,5,8}'), (True, 'fs{}', 'fs{}'),
                                           (True, 'fs{0}', 'fs{2,5,8}')])
def test_relation_writer(gate, x, ones):
    outcome = run(relation_writer(chain_pairs(3), gate), parse_real(x))
    assert outcome.stage.is_finite
    assert outcome.output.as_spec() == parse_real(ones)


def test_host_supremum():
    universe = curated_classical()
    assert computed_orders(EMPTY, universe, TIME) == {0, 2}
    assert eck_supremum(EMPTY, universe, TIME) == 2
    assert eck_supremum(parse_real('fs{0}'), universe, TIME) == 4
    assert eck_supremum(parse_real('fs{0}'), universe, time=10) == 2


@pytest.mark.slow
@pytest.mark.parametrize('x, size', [('fs{}', 2), ('fs{0}', 4), ('fs{1,2,3}', 2), ('ep{|1}', 4)])
def test_machine_matches_host(reduction, x, size):
    outcome = run(reduction, parse_real(x))
    assert isinstance(outcome, Halted)
    assert outcome.stage < OMEGA
    assert outcome.output.as_spec() == chain_code(size)
    assert order_type(relation_of(outcome.output.as_spec())) == size


@pytest.mark.slow
def test_orders_outside_the_bound_do_not_count():
    universe = [relation_writer(chain_pairs(5)), relation_writer(chain_pairs(3))]
    assert eck_supremum(EMPTY, universe, TIME, bound=4) == 3
    outcome = run(eck_to_wo(universe, TIME, bound=4))
    assert outcome.output.as_spec() == chain_code(3)


def test_nothing_counts():
    universe = [relation_writer([(0, 1), (1, 0)])]
    assert eck_supremum(EMPTY, universe, TIME) == 0
    assert run(eck_to_wo(universe, 8, bound=2)).output.as_spec() == EMPTY


@pytest.mark.slow
def test_reduces_to_isomorphism_of_well_orders(reduction):
    samples = [(parse_real(x), parse_real(y)) for x, y in
               [('fs{}', 'fs{1}'), ('fs{}', 'fs{0}'), ('fs{0}', 'fs{0,3}'), ('fs{5}', 'ep{|1}')]]
    report = verify_reduction(reduction, rel_Eck(curated_classical(), TIME), rel_isoWO(), samples)
    assert report.passed
    assert report.pairs['verdict'].tolist() == ['pass'] * 4
    assert report.pairs['source'].tolist() == [True, False, True, False]


def test_bad_parameters():
    with pytest.raises(ValueError):
        eck_to_wo(curated_classical(), time=0)
    with pytest.raises(ValueError):
        eck_to_wo(curated_classical(), bound=0)


@pytest.mark.slow
def test_reduction_over_a_sweep_of_pairs(reduction):
    inputs = [parse_real(x) for x in ['fs{}', 'fs{0}', 'fs{1}', 'fs{0,1}', 'fs{5}', 'fs{0,3}', 'fs{1,2,3}',
                                      'fs{0,7}', 'ep{|1}', 'ep{|01}']]
    samples = list(combinations_with_replacement(inputs, 2))
    assert len(samples) >= 50
    report = verify_reduction(reduction, rel_Eck(curated_classical(), TIME), rel_isoWO(), samples, n_jobs=2)
    assert report.passed
    assert set(report.pairs['verdict']) == {'pass'}
    assert report.pairs['source'].any() and not report.pairs['source'].all()
