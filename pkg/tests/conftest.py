import pytest

from datasets import fixtures


@pytest.fixture
def squeezed():
    return fixtures.squeezed_path()


@pytest.fixture
def triangle():
    return fixtures.shared_triangle()


@pytest.fixture
def edgeless():
    return fixtures.edgeless_bar()


@pytest.fixture
def threaded():
    return fixtures.threaded_bar()


@pytest.fixture
def offset():
    return fixtures.offset_paths()


@pytest.fixture
def opposite():
    return fixtures.opposite_orders()


@pytest.fixture
def claw():
    return fixtures.claw()
