def pytest_addoption(parser):
    parser.addoption(
        "--seed",
        action="store",
        type=int,
        default=20260809,
        help="seed for the randomized property tests",
    )


import pytest


@pytest.fixture
def seed(request):
    return request.config.getoption("--seed")
