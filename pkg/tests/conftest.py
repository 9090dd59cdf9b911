"""Shared fixtures."""

import pytest

from src.census.enumerate import set_enumeration_ceiling
from src.constants import MAX_ENUMERATION_SIZE
from src.games.core import STAR, ZERO, intern


@pytest.fixture(autouse=True)
def default_ceiling():
    """Reset the enumeration ceiling that the CLI and runner set globally."""
    set_enumeration_ceiling(MAX_ENUMERATION_SIZE)
    yield
    set_enumeration_ceiling(MAX_ENUMERATION_SIZE)


@pytest.fixture
def star_two():
    """*2 = {0,*|0,*}."""
    return intern([ZERO, STAR], [ZERO, STAR])
