"""Helpers for reading CLI document arguments."""

from pathlib import Path

from gmpark.errors import MalformedInputError

INLINE_PREFIXES = ("{", "[")


def read_source(source: str | Path) -> str:
    """Return inline JSON text unchanged, otherwise the contents of the named file."""
    text = str(source).strip()
    if text.startswith(INLINE_PREFIXES):
        return text
    try:
        candidate = Path(text).expanduser()
    except (TypeError, ValueError, RuntimeError) as exc:
        message = f"cannot interpret document argument: {source!r}"
        raise MalformedInputError(message) from exc
    try:
        return candidate.read_text(encoding="utf-8")
    except OSError as exc:
        message = f"cannot read document {str(candidate)}: {exc.strerror or exc}"
        raise MalformedInputError(message) from exc
