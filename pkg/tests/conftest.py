import pytest

from filtropt import context_for


@pytest.fixture(scope="session")
def ctx3():
    return context_for(3)


@pytest.fixture(scope="session")
def ctx4():
    return context_for(4)


@pytest.fixture(scope="session")
def ctx5():
    return context_for(5)


@pytest.fixture(scope="session")
def ctx7():
    return context_for(7)
