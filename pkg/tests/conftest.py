import pytest

from galmckay.chartab import dixon_schneider
from galmckay.zoo import agl18_normalizer, small_group


@pytest.fixture(scope="session")
def sz8_table():
    from galmckay.verify import global_table
    return global_table("2B2", 1)


@pytest.fixture(scope="session")
def psl28_table():
    from galmckay.verify import global_table
    return global_table("PSL2", 1)


@pytest.fixture(scope="session")
def agl168_table():
    return dixon_schneider(agl18_normalizer())


@pytest.fixture(scope="session")
def su32_ext_table():
    return dixon_schneider(small_group("su3_2_ext"))
