import os
from enum import Enum


class OS(str, Enum):
    WINDOWS = "windows"
    MACOS = "macos"
    LINUX = "linux"


class Guard(str, Enum):
    """Size bounds enforced before any exhaustive search."""

    CARRIER = "carrier"
    CONGRUENCE_CARRIER = "congruence_carrier"
    TENSOR_PAIRS = "tensor_pairs"
    CLOSED_SETS = "closed_sets"
    FREE_MODULE = "free_module"
    ENUMERATION = "enumeration"
    SHEAF_LATTICE = "sheaf_lattice"


DEFAULT_GUARDS = {
    Guard.CARRIER: 16,
    Guard.CONGRUENCE_CARRIER: 6,
    Guard.TENSOR_PAIRS: 36,
    Guard.CLOSED_SETS: 16,
    Guard.FREE_MODULE: 64,
    Guard.ENUMERATION: 5,
    Guard.SHEAF_LATTICE: 16,
}


class MapKind(str, Enum):
    SUP_PRESERVING = "sup"
    TOP_PRESERVING = "top"


class AlgebraKind(str, Enum):
    SEMIRING = "semiring"
    MONOID = "monoid"
    RING = "ring"


class BlockKind(str, Enum):
    CIM = "cim"
    SEMIRING = "semiring"
    TOP = "top"
    MODULE = "module"
    MONOID = "monoid"
    RING = "ring"


class Suite(str, Enum):
    DUALITY = "duality"
    ADJUNCTION = "adjunction"
    LOCALIZATION_ORACLE = "localization-oracle"
    SHEAF = "sheaf"
    PATCHING = "patching"
    TENSOR = "tensor"


class CheckStatus(str, Enum):
    PASS = "pass"
    FAIL = "fail"
    SKIPPED = "skipped"


class OutputFormat(str, Enum):
    JSON = "json"
    YAML = "yaml"
    TABLE = "table"


DEFAULT_CONFIG = {
    OS.WINDOWS: os.path.join(os.path.expanduser("~"), "AppData", "Local", "idemspec"),
    OS.MACOS: os.path.join(os.path.expanduser("~"), "Library", "Application Support", "idemspec"),
    OS.LINUX: os.path.join(os.path.expanduser("~"), ".config", "idemspec"),
}

CONFIG_FILE_NAME = "config.ini"
CONFIG_SECTION_GUARDS = "guards"

ENV_LOG_LEVEL = "IDEMSPEC_LOG_LEVEL"
ENV_MAX_CARRIER = "IDEMSPEC_MAX_CARRIER"
ENV_GUARD_PREFIX = "IDEMSPEC_MAX_"

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2

MAX_WORKERS = 4
