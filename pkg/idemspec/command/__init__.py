from . import common, verify

__all__ = ["common", "verify"]
