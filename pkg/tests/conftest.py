import json
import pathlib
import sys

import pytest
from hypothesis import HealthCheck, settings

TESTS = pathlib.Path(__file__).parent
sys.path.insert(0, str(TESTS))

settings.register_profile("walg", deadline=None, max_examples=40, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("walg")


@pytest.fixture(scope="session")
def char_golden():
    return json.loads((TESTS / "golden" / "char_tables.json").read_text())
