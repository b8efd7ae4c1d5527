import pytest

from idemspec.config_manager import ConfigManager, ensure_within
from idemspec.constants import DEFAULT_GUARDS, Guard
from idemspec.errors import GuardExceeded


@pytest.fixture
def config():
    manager = ConfigManager()
    manager.clear_overrides()
    yield manager
    manager.clear_overrides()


def test_config_manager_is_a_singleton():
    assert ConfigManager() is ConfigManager()


def test_default_guard(config, monkeypatch):
    monkeypatch.delenv("IDEMSPEC_MAX_TENSOR_PAIRS", raising=False)
    config.config.remove_section("guards")
    assert config.get_guard(Guard.TENSOR_PAIRS) == DEFAULT_GUARDS[Guard.TENSOR_PAIRS]


def test_environment_overrides_default(config, monkeypatch):
    monkeypatch.setenv("IDEMSPEC_MAX_CARRIER", "7")
    assert config.get_guard("carrier") == 7


def test_non_integer_environment_is_ignored(config, monkeypatch):
    monkeypatch.setenv("IDEMSPEC_MAX_CLOSED_SETS", "many")
    config.config.remove_section("guards")
    assert config.get_guard(Guard.CLOSED_SETS) == DEFAULT_GUARDS[Guard.CLOSED_SETS]


def test_config_file_section(config, monkeypatch):
    monkeypatch.delenv("IDEMSPEC_MAX_SHEAF_LATTICE", raising=False)
    config.config.read_dict({"guards": {"sheaf_lattice": "9"}})
    try:
        assert config.get_guard(Guard.SHEAF_LATTICE) == 9
    finally:
        config.config.remove_section("guards")


def test_override_wins_over_environment(config, monkeypatch):
    monkeypatch.setenv("IDEMSPEC_MAX_FREE_MODULE", "100")
    config.override(Guard.FREE_MODULE, 3)
    assert config.get_guard(Guard.FREE_MODULE) == 3


def test_ensure_within_reports_the_bound(config):
    config.override(Guard.CARRIER, 4)
    ensure_within(Guard.CARRIER, 4)
    with pytest.raises(GuardExceeded) as e:
        ensure_within(Guard.CARRIER, 5)
    assert (e.value.guard, e.value.bound, e.value.requested) == ("carrier", 4, 5)


def test_unknown_guard_name(config):
    with pytest.raises(ValueError):
        config.get_guard("colours")
