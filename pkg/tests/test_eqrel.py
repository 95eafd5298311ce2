import json

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from ittm.asm import NOOP
from ittm.errors import InadmissibleInput
from ittm.eqrel import field, is_linear, is_well_founded, is_well_order, order_type, chain_pairs, chain_code, \
    relation_of, random_relation, random_linear_code, rel_eq, rel_E0, rel_Eset, rel_Eck, rel_isoWO, get_relation, \
    RELATIONS, enumerated_set, verify_reduction, load_samples
from ittm.machine import Budgets
from ittm.real import parse_real, encode_relation, EMPTY
from ittm.stdlib import copy_input, toggler, curated_classical


def test_orders():
    assert field({(0, 3), (3, 5)}) == {0, 3, 5}
    assert is_linear(chain_pairs([2, 0, 1]))
    assert not is_linear({(0, 1), (1, 2)})
    assert not is_linear({(0, 1), (1, 2), (2, 0)})
    assert is_linear(set())
    assert is_well_founded({(0, 1), (1, 2)})
    assert not is_well_founded({(0, 1), (1, 0)})
    assert order_type(chain_pairs([4, 1, 7])) == 3
    with pytest.raises(ValueError):
        order_type({(0, 1), (1, 0)})


def test_chain_code():
    assert chain_code(3) == encode_relation({(0, 1), (0, 2), (1, 2)})
    assert relation_of(chain_code(2, [5, 3])) == {(5, 3)}
    with pytest.raises(ValueError):
        chain_code(2, [1])
    with pytest.raises(InadmissibleInput):
        relation_of(parse_real('ep{|1}'))


@given(st.integers(0, 6), st.integers(0, 2 ** 16))
def test_random_linear_orders(size, seed):
    pairs = random_relation(size, linear=True, random_state=np.random.RandomState(seed))
    assert is_well_order(pairs)
    assert len(field(pairs)) == (size if size > 1 else 0)
    assert all(isinstance(n, int) for pair in pairs for n in pair)
    code = random_linear_code(size, np.random.RandomState(seed))
    assert relation_of(code) == pairs


@given(st.lists(st.tuples(st.integers(0, 4), st.integers(0, 4)), max_size=10))
def test_well_order_is_linear_and_acyclic(pairs):
    pairs = set(pairs)
    assert is_well_order(pairs) == (is_linear(pairs) and is_well_founded(pairs))


def test_eq():
    eq = rel_eq()
    assert eq(parse_real('ep{1|01}'), parse_real('ep{|10}'))
    assert not eq(parse_real('fs{1}'), parse_real('fs{2}'))
    with pytest.raises(InadmissibleInput):
        eq(parse_real('gen{primes}'), EMPTY)


def test_E0():
    E0 = rel_E0()
    assert E0(parse_real('fs{1,2,3}'), EMPTY)
    assert E0(parse_real('ep{0000|01}'), parse_real('ep{11|01}'))
    assert not E0(parse_real('ep{|01}'), parse_real('ep{|10}'))
    assert not E0(parse_real('ep{|1}'), EMPTY)


def test_Eset():
    x = encode_relation({(0, 1), (2, 1)})
    y = encode_relation({(5, 1), (3, 1), (1, 0)})
    assert enumerated_set(x) == {frozenset({1}), frozenset()}
    assert rel_Eset()(x, encode_relation({(7, 1)}))
    assert not rel_Eset()(x, y)
    with pytest.raises(InadmissibleInput):
        rel_Eset()(x, parse_real('ep{|1}'))


def test_isoWO():
    iso = rel_isoWO()
    assert iso(chain_code(3), chain_code(3, [9, 4, 6]))
    assert not iso(chain_code(3), chain_code(2))
    with pytest.raises(InadmissibleInput):
        iso(encode_relation({(0, 1), (1, 0)}), EMPTY)


def test_registry():
    assert sorted(RELATIONS) == ['E0', 'Eck', 'Eset', 'eq', 'isoWO']
    assert get_relation('Eck', universe=[NOOP], time=4).truncation == {'universe': 1, 'time': 4, 'bound': 4}
    assert get_relation('eq').to_json() == {'name': 'eq', 'domain': 'eventually periodic', 'truncation': {}}
    with pytest.raises(KeyError):
        get_relation('E1')


def test_identity_reduces_eq_to_eq():
    samples = [(parse_real(x), parse_real(y)) for x, y in [('fs{1}', 'fs{1}'), ('fs{1}', 'ep{|1}'), ('fs{}', 'fs{}')]]
    report = verify_reduction(copy_input(), rel_eq(), rel_eq(), samples)
    assert report.passed
    assert report.failures.empty
    assert report.to_json()['passed']


def test_failing_reduction():
    # a constant map does not reduce eq to eq
    samples = [(parse_real('fs{1}'), parse_real('fs{2}'))]
    report = verify_reduction(NOOP, rel_eq(), rel_eq(), samples)
    assert not report.passed
    assert report.failures[['x', 'y']].values.tolist() == [['fs{1}', 'fs{2}']]


def test_inconclusive_pairs(small_budgets):
    samples = [(EMPTY, parse_real('fs{0}'))]
    report = verify_reduction(toggler(), rel_eq(), rel_eq(), samples, small_budgets)
    assert report.passed
    assert report.pairs['verdict'].tolist() == ['inconclusive']

    report = verify_reduction(toggler(), rel_eq(), rel_eq(), samples, Budgets(max_accel_level=2), mode='eventual',
                               n_jobs=2)
    assert report.pairs['verdict'].tolist() == ['fail']
    with pytest.raises(ValueError):
        verify_reduction(toggler(), rel_eq(), rel_eq(), samples, mode='sometimes')


def test_load_samples(tmp_path):
    path = tmp_path / 'samples.json'
    path.write_text(json.dumps([['fs{1}', 'ep{|01}']]))
    assert load_samples(path) == [(parse_real('fs{1}'), parse_real('ep{|01}'))]


bits = st.lists(st.sampled_from('01'), max_size=6).map(''.join)
periodic_reals = st.builds(lambda prefix, period: parse_real(f'ep{{{prefix}|{period}}}'), bits,
                           bits.filter(bool))
finite_reals = st.sets(st.integers(0, 30), max_size=6).map(
    lambda ones: parse_real('fs{' + ','.join(map(str, sorted(ones))) + '}'))
well_order_codes = st.lists(st.integers(0, 6), unique=True, max_size=5).map(lambda order: chain_code(len(order), order))


def _equivalence(relation, x, y, z):
    assert relation(x, x)
    assert relation(x, y) == relation(y, x)
    if relation(x, y) and relation(y, z):
        assert relation(x, z)


@pytest.mark.parametrize('relation', [rel_eq(), rel_E0()], ids=['eq', 'E0'])
@settings(max_examples=60, deadline=None)
@given(x=periodic_reals, y=periodic_reals, z=periodic_reals)
def test_periodic_relations_are_equivalences(relation, x, y, z):
    _equivalence(relation, x, y, z)


@pytest.mark.parametrize('relation', [rel_Eset(), rel_Eck(curated_classical(), 16)], ids=['Eset', 'Eck'])
@settings(max_examples=40, deadline=None)
@given(x=finite_reals, y=finite_reals, z=finite_reals)
def test_finite_support_relations_are_equivalences(relation, x, y, z):
    _equivalence(relation, x, y, z)


@settings(max_examples=60, deadline=None)
@given(x=well_order_codes, y=well_order_codes, z=well_order_codes)
def test_isomorphism_of_well_orders_is_an_equivalence(x, y, z):
    _equivalence(rel_isoWO(), x, y, z)
