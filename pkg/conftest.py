import pytest


def pytest_addoption(parser):
    parser.addoption("--slow", action="store_true", default=False, help="roda as varreduras exaustivas")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--slow"):
        return
    skip_slow = pytest.mark.skip(reason="use --slow para rodar")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)
