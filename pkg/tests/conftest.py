import pytest

from hortonlab import small_horton


@pytest.fixture(scope="session")
def small():
    cache = {}

    def get(k):
        if k not in cache:
            cache[k] = small_horton(k)
        return cache[k]

    return get
