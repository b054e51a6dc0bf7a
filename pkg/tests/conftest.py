"""Pytest fixtures shared by the whole suite.
Covers output isolation and the hypothesis profile.
"""

from collections.abc import Iterator
from pathlib import Path

import pytest
from hypothesis import settings

import config

settings.register_profile("strategic-lab", derandomize=True, deadline=None)
settings.load_profile("strategic-lab")


@pytest.fixture(autouse=True)
def isolated_output(tmp_path: Path, monkeypatch: pytest.MonkeyPatch) -> Iterator[Path]:
    """Point default output and log directories at a per-test temp dir."""
    monkeypatch.setattr(config, "OUTPUT_DIR", tmp_path / "output")
    monkeypatch.setattr(config, "LOG_DIR", tmp_path / "logs")
    yield tmp_path
