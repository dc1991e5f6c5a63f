"""Shared test configuration.

Every hypothesis suite runs derandomized so failures reproduce exactly;
deadlines are off because exact rational arithmetic has no useful wall-clock
bound per example.
"""

from hypothesis import settings

settings.register_profile("exact", derandomize=True, max_examples=60, deadline=None)
settings.load_profile("exact")
