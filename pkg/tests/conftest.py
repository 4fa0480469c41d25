from hypothesis import HealthCheck, settings

settings.register_profile(
    "exact",
    max_examples=200,
    derandomize=True,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("exact")
