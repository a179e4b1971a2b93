import pytest

from util import FIXTURES


@pytest.fixture
def fixtures_dir():
    return FIXTURES
