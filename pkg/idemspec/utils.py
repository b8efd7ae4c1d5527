import functools
import itertools
import platform
from typing import Iterable, Iterator, Sequence, Tuple, TypeVar

from idemspec import constants

T = TypeVar("T")


def singleton(cls):
    """
    Decorator that implements the Singleton pattern for the decorated class.

    e.g.
    @singleton
    class MyClass:
        pass

    """
    instances = {}

    @functools.wraps(cls)
    def get_instance(*args, **kwargs):
        if cls not in instances:
            instances[cls] = cls(*args, **kwargs)
        return instances[cls]

    return get_instance


def get_os():
    os_identifier = platform.system().lower()

    if "win" in os_identifier and "darwin" not in os_identifier:
        return constants.OS.WINDOWS
    elif "darwin" in os_identifier:
        return constants.OS.MACOS
    return constants.OS.LINUX


def subsets(items: Sequence[T], max_size: int = -1) -> Iterator[Tuple[T, ...]]:
    """All subsets of ``items`` in order of increasing size."""
    top = len(items) if max_size < 0 else min(max_size, len(items))
    for size in range(top + 1):
        yield from itertools.combinations(items, size)


def bits(mask: int) -> Iterator[int]:
    i = 0
    while mask:
        if mask & 1:
            yield i
        mask >>= 1
        i += 1


def to_mask(indices: Iterable[int]) -> int:
    mask = 0
    for i in indices:
        mask |= 1 << i
    return mask
