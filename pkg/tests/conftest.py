import os

import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

LONG = os.environ.get("RECTCOUNT_LONG") == "1"

long_running = pytest.mark.skipif(not LONG, reason="set RECTCOUNT_LONG=1 to run")
