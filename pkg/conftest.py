from __future__ import annotations

import sys
from pathlib import Path

from hypothesis import HealthCheck
from hypothesis import settings

# Add tests to path
sys.path.insert(0, str(Path(__file__).parent))

# Exact arithmetic is slow; keep property runs reproducible and bounded
settings.register_profile(
    "default",
    max_examples=50,
    deadline=None,
    derandomize=True,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")
