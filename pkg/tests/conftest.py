import pytest

from jacklax.arith import DEFAULT_SPEC_POINTS, SpecializedField, SymbolicField
from jacklax.session import Workspace


@pytest.fixture(scope="session")
def sym():
    return Workspace(SymbolicField())


@pytest.fixture(scope="session")
def spec():
    return Workspace(SpecializedField(DEFAULT_SPEC_POINTS[0]))


@pytest.fixture(scope="session")
def spec_all():
    return [Workspace(SpecializedField(p)) for p in DEFAULT_SPEC_POINTS]
