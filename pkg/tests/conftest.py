import pytest
from click.testing import CliRunner
from hypothesis import HealthCheck, settings as hypothesis_settings

from algebra.combinat import Partition

hypothesis_settings.register_profile(
    "kernel",
    max_examples=40,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
hypothesis_settings.load_profile("kernel")


@pytest.fixture
def runner():
    return CliRunner()


@pytest.fixture
def small_shapes():
    return [Partition(p) for p in ([], [1], [2], [1, 1], [3], [2, 1], [1, 1, 1], [2, 2], [3, 1])]
