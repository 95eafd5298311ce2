import pytest

from ittm.machine import Budgets


def pytest_configure(config):
    config.addinivalue_line('markers', 'slow: runs that accelerate through several limit levels')


@pytest.fixture
def budgets():
    return Budgets()


@pytest.fixture
def small_budgets():
    return Budgets('w^2', steps_per_block=10_000, max_accel_level=2, blocks_per_level=16)
