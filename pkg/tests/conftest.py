import pytest

from exls.parsing import parse_element


@pytest.fixture
def P():
    return parse_element
