"""Shared fixtures: every slide re-validates its output during the tests."""
import pytest

from stairtab import config


@pytest.fixture(autouse=True)
def check_invariants(monkeypatch):
    monkeypatch.setattr(config, "CHECK_INVARIANTS", True)


@pytest.fixture
def fixtures_dir():
    return config.FIXTURES_DIR
