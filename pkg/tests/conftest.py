import pytest

from proccat.laws import run_suites


@pytest.fixture(scope="session")
def full_reports():
    """One full harness run shared by the law and acceptance tests."""
    return run_suites()
