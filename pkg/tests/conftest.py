import os

import pytest

FIXTURES_DIR = os.path.join(os.path.dirname(__file__), "fixtures")


@pytest.fixture
def fixture_path():
    def _path(name: str) -> str:
        return os.path.join(FIXTURES_DIR, name)

    return _path


@pytest.fixture
def read_fixture(fixture_path):
    def _read(name: str) -> str:
        with open(fixture_path(name), "r", encoding="utf-8") as file:
            return file.read()

    return _read
