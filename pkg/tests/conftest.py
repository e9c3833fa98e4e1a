import os

import hypothesis
from hypothesis import HealthCheck
import pytest

from islandpoly.conf import settings

# The settings fixture below is reset once per test, not per example
_SHARED = dict(deadline=None,
               suppress_health_check=[HealthCheck.function_scoped_fixture])

hypothesis.settings.register_profile('ci', max_examples=60,
                                     derandomize=True, **_SHARED)
hypothesis.settings.register_profile('fast', max_examples=5, **_SHARED)
hypothesis.settings.register_profile('debugger', report_multiple_bugs=False,
                                     **_SHARED)
hypothesis.settings.load_profile(os.getenv('HYPOTHESIS_PROFILE', 'ci'))


@pytest.fixture(autouse=True)
def isolated_settings(tmp_path, monkeypatch):
    """Point the settings at a throwaway config file for every test."""

    monkeypatch.setattr(settings, 'file', tmp_path / 'config.ini')
    monkeypatch.setattr(settings, 'config', None)
    monkeypatch.setattr(settings, 'cache', {})
    for key in ('ENUMERATION_VERTEX_LIMIT', 'ENUMERATION_THREADS',
                'PARALLEL_MIN_VERTICES', 'PARALLEL_CHUNKS_PER_WORKER',
                'LOG_TO_FILE'):
        monkeypatch.delenv(key, raising=False)
    yield settings
