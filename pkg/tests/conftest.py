import random

import pytest

from subrank import field_create


@pytest.fixture(scope="session")
def gf4():
    return field_create(2, 1, 2, [1, 1, 1])


@pytest.fixture(scope="session")
def gf8():
    return field_create(2, 1, 3)


@pytest.fixture(scope="session")
def gf16():
    return field_create(2, 1, 4)


@pytest.fixture(scope="session")
def gf64():
    return field_create(2, 1, 6)


@pytest.fixture
def rng():
    return random.Random(0xC0DE)
