import pytest

from sqspiral.verify import _table


@pytest.fixture(scope="session")
def table400():
    return _table(400)


@pytest.fixture(scope="session")
def table2000():
    return _table(2000)


@pytest.fixture(scope="session")
def table100k():
    return _table(100000)
