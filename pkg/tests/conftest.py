"""Shared pytest configuration."""


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: acceptance cases on 12 to 16 crossing cables; deselect with -m 'not slow'")
