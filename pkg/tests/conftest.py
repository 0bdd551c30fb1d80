import pytest
from hypothesis import HealthCheck, settings

from roughlattice.approx import ApproxContext
from roughlattice.relation import Relation, Universe

settings.register_profile(
    "ci",
    deadline=None,
    derandomize=True,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.filter_too_much],
)
settings.load_profile("ci")


def _reflexive_plus(n, extra):
    return Relation.from_pairs(Universe.of_size(n), [(x, x) for x in range(n)] + list(extra))


@pytest.fixture
def fork():
    """0 below both 1 and 2: R(0) = U, R(1) = {1}, R(2) = {2}."""
    return _reflexive_plus(3, [(0, 1), (0, 2)])


@pytest.fixture
def fork_ctx(fork):
    return ApproxContext.of(fork)


@pytest.fixture
def vee():
    """0 and 1 both below 2, with no common lower bound."""
    return _reflexive_plus(3, [(0, 2), (1, 2)])


@pytest.fixture
def vee_ctx(vee):
    return ApproxContext.of(vee)


@pytest.fixture
def identity2():
    return Relation.identity(Universe.of_size(2))
