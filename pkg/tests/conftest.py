import numpy as np
import pytest

from multisep import make_state, tensor_product

SQ2 = 1 / np.sqrt(2)


def crandn(rng, *shape):
    return rng.standard_normal(shape) + 1j * rng.standard_normal(shape)


def random_state(rng, dims):
    v = crandn(rng, int(np.prod(dims)))
    return make_state(dims, v / np.linalg.norm(v))


def random_product(rng, dims):
    return tensor_product([crandn(rng, n) for n in dims])


@pytest.fixture
def rng():
    return np.random.default_rng(20261014)


@pytest.fixture
def bell():
    return make_state([2, 2], [SQ2, 0, 0, SQ2])


@pytest.fixture
def ghz3():
    return make_state([2, 2, 2], [SQ2, 0, 0, 0, 0, 0, 0, SQ2])


@pytest.fixture
def w3():
    s = 1 / np.sqrt(3)
    return make_state([2, 2, 2], [0, s, s, 0, s, 0, 0, 0])
