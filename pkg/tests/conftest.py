import os

os.environ.setdefault("MPLBACKEND", "Agg")

import pytest


@pytest.fixture(autouse=True)
def isolated_cache(tmp_path, monkeypatch):
    # keep every test away from the user's real cache directory
    monkeypatch.setenv("NILPORB_CACHE_DIR", str(tmp_path / "cache"))
