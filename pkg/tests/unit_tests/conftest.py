import pytest

from swatchlink.grammar.catalog import TileCatalog
from swatchlink.grammar.reference import ReferenceTables
from swatchlink.helpers.logger import Logger


@pytest.fixture(scope="session")
def catalog():
    return TileCatalog.load()


@pytest.fixture(scope="session")
def tables():
    return ReferenceTables.load()


@pytest.fixture
def logger():
    return Logger(save_logs=False, verbose=False)
