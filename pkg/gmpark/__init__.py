"""gmpark package exports."""

from importlib.metadata import version

__version__ = version(__package__)  # type: ignore
