import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))


@pytest.fixture(scope="session")
def cache_dir(tmp_path_factory):
    """A session-wide cache directory shared across tests."""
    return tmp_path_factory.mktemp("zerocache")


@pytest.fixture(autouse=True)
def _isolated_cache_env(monkeypatch, cache_dir):
    monkeypatch.setenv("LZEROS_CACHE_DIR", str(cache_dir))
