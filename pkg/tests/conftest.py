import resource

import pytest

from ziqqurath import fixtures

# keep runaway constructions from taking the machine down
_soft, _hard = resource.getrlimit(resource.RLIMIT_AS)
_cap = 8 << 30
if _hard == resource.RLIM_INFINITY or _hard > _cap:
    resource.setrlimit(resource.RLIMIT_AS, (_cap, _hard))


@pytest.fixture(scope="session")
def fx():
    return fixtures.standard_fixtures(3)


@pytest.fixture(scope="session")
def pointed_fx(fx):
    return {k: v for k, v in fx.items() if v.point is not None}


@pytest.fixture(scope="session")
def brown():
    return fixtures.brown_fixture()


@pytest.fixture(scope="session")
def fixture_n2():
    return fixtures.ziqqurath_fixture_n2()
