import pytest

from coxanc import build_group


@pytest.fixture(scope="session")
def group():
    """Session-wide cache of built group tables, keyed by descriptor."""
    cache = {}

    def get(descriptor):
        if descriptor not in cache:
            cache[descriptor] = build_group(descriptor)
        return cache[descriptor]

    return get
