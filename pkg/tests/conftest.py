"""
共享 fixture：常用的域和带种子的随机数发生器
"""

import random

import pytest

from core.algebra.fields import RATIONALS, ext_field, prime_field


@pytest.fixture
def f29():
    return prime_field(29)


@pytest.fixture
def f29sq():
    return ext_field(29, 2)


@pytest.fixture
def f101():
    return prime_field(101)


@pytest.fixture
def rationals():
    return RATIONALS


@pytest.fixture
def rng():
    return random.Random("tests:0")


@pytest.fixture(params=["F29", "F29^2", "F101", "Q"])
def any_field(request):
    return {
        "F29": prime_field(29),
        "F29^2": ext_field(29, 2),
        "F101": prime_field(101),
        "Q": RATIONALS,
    }[request.param]
