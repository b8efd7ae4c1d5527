import configparser
import os
from importlib.metadata import PackageNotFoundError, version
from typing import Dict, Union

from idemspec import constants, logging
from idemspec.constants import Guard
from idemspec.errors import GuardExceeded
from idemspec.utils import get_os, singleton


@singleton
class ConfigManager(object):
    def __init__(self):
        self.config = configparser.ConfigParser()
        self.overrides: Dict[Guard, int] = {}
        self.load()

    @staticmethod
    def get_config_path():
        return constants.DEFAULT_CONFIG[get_os()]

    def get_config_file_path(self):
        return os.path.join(self.get_config_path(), constants.CONFIG_FILE_NAME)

    def load(self):
        config_file_path = self.get_config_file_path()
        if os.path.exists(config_file_path):
            self.config = configparser.ConfigParser()
            self.config.read(config_file_path)
            logging.debug(f"loaded config from {config_file_path}")

    def override(self, guard: Union[Guard, str], bound: int):
        """Pin a guard for the rest of the process; used by CLI flags."""
        self.overrides[Guard(guard)] = int(bound)

    def clear_overrides(self):
        self.overrides.clear()

    def get_guard(self, guard: Union[Guard, str]) -> int:
        guard = Guard(guard)
        if guard in self.overrides:
            return self.overrides[guard]

        env_key = (
            constants.ENV_MAX_CARRIER
            if guard == Guard.CARRIER
            else constants.ENV_GUARD_PREFIX + guard.value.upper()
        )
        env_value = os.getenv(env_key)
        if env_value:
            try:
                return int(env_value)
            except ValueError:
                logging.warning(f"ignoring non-integer {env_key}={env_value!r}")

        if self.config.has_option(constants.CONFIG_SECTION_GUARDS, guard.value):
            return self.config.getint(constants.CONFIG_SECTION_GUARDS, guard.value)

        return constants.DEFAULT_GUARDS[guard]

    def ensure_within(self, guard: Union[Guard, str], requested: int):
        bound = self.get_guard(guard)
        if requested > bound:
            logging.info(f"rejecting {Guard(guard).value}={requested}, bound {bound}")
            raise GuardExceeded(Guard(guard).value, bound, requested)

    def fill_print_env(self, table):
        table.add_row("Config Path", self.get_config_file_path())
        for guard in Guard:
            table.add_row(f"max {guard.value}", str(self.get_guard(guard)))

    def get_cli_version(self):
        try:
            return version("idemspec")
        except PackageNotFoundError:
            return "0.0.0"


def ensure_within(guard: Union[Guard, str], requested: int):
    ConfigManager().ensure_within(guard, requested)
