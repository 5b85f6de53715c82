"""Test-suite conventions: keep the env-configurable dimension cap at its default."""

import pytest


@pytest.fixture(autouse=True)
def _default_dimension_cap(monkeypatch):
    monkeypatch.delenv("BOOLDIFF_NMAX", raising=False)
