import pytest

from grifchar import root_system


_CACHE = {}


@pytest.fixture
def rs_factory():
    """Memoized root-system constructor; systems are immutable so
    sharing across tests is safe."""

    def make(family, rank):
        key = (family, rank)
        if key not in _CACHE:
            _CACHE[key] = root_system(family, rank)
        return _CACHE[key]

    return make
