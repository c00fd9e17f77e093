import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from gammahom import ClassKind, ClassSpec, generate


@pytest.fixture(scope="session")
def posets3():
    return generate(ClassSpec(ClassKind.POSETS, 3))


@pytest.fixture(scope="session")
def posets4():
    return generate(ClassSpec(ClassKind.POSETS, 4))


@pytest.fixture(scope="session")
def digraphs2():
    return generate(ClassSpec(ClassKind.ALL_DIGRAPHS, 2))


@pytest.fixture(scope="session")
def digraphs3():
    return generate(ClassSpec(ClassKind.ALL_DIGRAPHS, 3))


@pytest.fixture(scope="session")
def digraphs4():
    return generate(ClassSpec(ClassKind.ALL_DIGRAPHS, 4), budget=4)


@pytest.fixture(scope="session")
def proper_acyclic3():
    return generate(ClassSpec(ClassKind.PROPER_ACYCLIC, 3))


@pytest.fixture(scope="session")
def odd_cycle_free4():
    return generate(ClassSpec(ClassKind.ODD_CYCLE_FREE, 4))
