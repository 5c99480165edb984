import os

from hypothesis import HealthCheck, settings

settings.register_profile(
    "dkforge",
    max_examples=int(os.getenv("DKFORGE_EXAMPLES", "25")),
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("dkforge")
