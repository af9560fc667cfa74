def pytest_configure(config):
    config.addinivalue_line("markers", "slow: exhaustive sweep, takes minutes")
