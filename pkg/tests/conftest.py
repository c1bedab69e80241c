import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from qstrat import examples as EX


@pytest.fixture(scope="session")
def algA():
    return EX.example_A()


@pytest.fixture(scope="session")
def algB():
    return EX.example_B()


@pytest.fixture(scope="session")
def qsl2_2():
    return EX.quantum_sl2(2)


@pytest.fixture(scope="session")
def qsl2_4():
    return EX.quantum_sl2(4)


@pytest.fixture(scope="session")
def semiinf_3():
    return EX.semi_infinite(3)
