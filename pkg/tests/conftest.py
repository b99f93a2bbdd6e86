from __future__ import annotations

from pathlib import Path

import pytest

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture
def odc9_file() -> Path:
    return FIXTURES / "odc9.txt"
