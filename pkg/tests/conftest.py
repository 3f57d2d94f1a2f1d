from collections.abc import Iterator

import pytest

from muposet.logging import setup_logging
from muposet.patternposet import MobiusCache


@pytest.fixture
def mobius_cache() -> MobiusCache:
    return MobiusCache()


@pytest.fixture(autouse=True)
def _reset_logging() -> Iterator[None]:
    yield
    setup_logging()
