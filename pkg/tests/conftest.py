from hypothesis import HealthCheck, settings

settings.register_profile(
    "ci",
    max_examples=60,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
    derandomize=True,
    print_blob=True,
)
settings.load_profile("ci")

import pytest  # noqa: E402
from click.testing import CliRunner  # noqa: E402

from baumsweet.models.seq import baum_sweet_bits  # noqa: E402


@pytest.fixture
def runner():
    return CliRunner()


@pytest.fixture
def b_prefix():
    # los 20 primeros términos de Baum-Sweet
    return [1, 1, 0, 1, 1, 0, 0, 1, 0, 1, 0, 0, 1, 0, 0, 1, 1, 0, 0, 1]


@pytest.fixture
def b_bits():
    return baum_sweet_bits(1 << 12)
