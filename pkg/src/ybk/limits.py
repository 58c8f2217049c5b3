"""Global cap on word/table enumeration sizes.

Exhaustive checks materialize tables indexed by N**n words.  The cap keeps
those tables at desk scale; the YBK_LIMIT environment variable overrides it.
"""

import os

from .errors import Overflow

DEFAULT_LIMIT = 2 ** 20
ENV_VAR = "YBK_LIMIT"


def encoding_limit() -> int:
    raw = os.environ.get(ENV_VAR)
    if raw is None:
        return DEFAULT_LIMIT
    try:
        value = int(raw)
    except ValueError as exc:
        raise Overflow(f"{ENV_VAR} must be an integer, got {raw!r}") from exc
    if value < 1:
        raise Overflow(f"{ENV_VAR} must be positive, got {value}")
    return value


def check_count(count: int, what: str) -> None:
    """Raise Overflow when an enumeration of `count` items exceeds the cap."""
    limit = encoding_limit()
    if count > limit:
        raise Overflow(
            f"{what} needs {count} entries, above the limit {limit}"
            f" (override with {ENV_VAR})"
        )
