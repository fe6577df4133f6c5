import pytest
from hypothesis import HealthCheck, settings

from subalg import (
    QQ,
    ConstructionParams,
    PrimeField,
    build_bkml,
    witness_system,
)

settings.register_profile(
    "suite",
    max_examples=30,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("suite")


@pytest.fixture(scope="session")
def fields():
    return [QQ, PrimeField(2), PrimeField(7), PrimeField(32003)]


@pytest.fixture(scope="session")
def params_8152():
    return ConstructionParams(n=8, k=2, m=1, l=5)


@pytest.fixture(scope="session")
def full_8152(params_8152):
    return build_bkml(params_8152, QQ)


@pytest.fixture(scope="session")
def witness_8152(params_8152):
    return witness_system(params_8152, QQ)
