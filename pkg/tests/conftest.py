"""Shared pytest configuration.

Tests marked ``slow`` (the large reproduction sweeps) are skipped by
default; set ``REPDYN_SLOW=1`` to run them.
"""

import os

import pytest


def pytest_collection_modifyitems(config, items):
    if os.environ.get("REPDYN_SLOW") == "1":
        return
    skip_slow = pytest.mark.skip(reason="long-running sweep; set REPDYN_SLOW=1 to run")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)
