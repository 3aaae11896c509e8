import pytest

from atdist import CostConfig, ExactSimilarity, LevenshteinSimilarity, corpus


@pytest.fixture
def exact():
    return ExactSimilarity()


@pytest.fixture
def lev():
    return LevenshteinSimilarity()


@pytest.fixture
def cfg():
    return CostConfig()


@pytest.fixture(scope="session")
def trees():
    return corpus()
