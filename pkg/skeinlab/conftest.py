"""Shared pytest fixtures and hypothesis profiles."""
import os

import pytest
from hypothesis import HealthCheck, settings

from skeinlab.diagrams.builtins import BUILTIN_DIAGRAMS

settings.register_profile('default', max_examples=60, deadline=None)
settings.register_profile('ci', max_examples=200, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.getenv('HYPOTHESIS_PROFILE', 'default'))


@pytest.fixture
def builtin_diagram():
    """Factory for built-in diagrams by name."""
    def make(name: str):
        return BUILTIN_DIAGRAMS[name]()
    return make
