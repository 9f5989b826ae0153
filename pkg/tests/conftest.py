import hypothesis
import numpy as np
import pytest

# derandomized profile: property tests draw the same examples every run,
# matching the determinism contract of the suites themselves
hypothesis.settings.register_profile(
    "suite", max_examples=25, deadline=None, derandomize=True
)
hypothesis.settings.load_profile("suite")


@pytest.fixture
def rng():
    return np.random.default_rng(1234)
