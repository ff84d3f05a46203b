import os

import pytest
from hypothesis import HealthCheck, settings
from loguru import logger

from speckit.predicates import basis_all, bell, ghz_all_fixed, zeros_param

settings.register_profile("dev", max_examples=30, deadline=None)
settings.register_profile("ci", max_examples=200, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.getenv("HYPOTHESIS_PROFILE", "dev"))


@pytest.fixture(autouse=True)
def quiet_logger():
    """Drop sinks added by a test (the CLI installs one per invocation)"""
    yield
    logger.remove()


@pytest.fixture
def basis2():
    return basis_all(2)


@pytest.fixture
def bell_states():
    return bell()


@pytest.fixture
def ghz3_all():
    return ghz_all_fixed(3)


@pytest.fixture
def zeros():
    return zeros_param()
