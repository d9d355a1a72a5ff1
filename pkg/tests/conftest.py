import os

import pytest

FULL = os.environ.get("SETHOM_FULL") == "1"


def pytest_collection_modifyitems(config, items):
    if FULL:
        return
    skip = pytest.mark.skip(reason="long run; set SETHOM_FULL=1")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)

