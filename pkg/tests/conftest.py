import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from hamcircle.corpus import bundled_corpus, generic_product  # noqa: E402
from hamcircle.generators import gen_cpn  # noqa: E402


@pytest.fixture(scope="session")
def cp1():
    return gen_cpn(1)


@pytest.fixture(scope="session")
def cp2():
    return gen_cpn(2)


@pytest.fixture(scope="session")
def cp4():
    return gen_cpn(4)


@pytest.fixture(scope="session")
def cp2xcp2():
    return generic_product(2, 2)


@pytest.fixture(scope="session")
def corpus():
    return bundled_corpus()
