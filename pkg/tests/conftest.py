import pytest

from st3.catalog import build_catalog


@pytest.fixture(scope="session")
def catalog_ext():
    return build_catalog(extended=True)


@pytest.fixture(scope="session")
def catalog(catalog_ext):
    return [g for g in catalog_ext if g.realizable]


@pytest.fixture(scope="session")
def by_name(catalog_ext):
    return {g.name: g for g in catalog_ext}
