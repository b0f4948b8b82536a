"""Size caps for the exhaustive parts of the library.

Defaults can be overridden through environment variables
(``HYPERHOPF_MAX_HYPERTREE_N`` and friends) or at runtime with
:func:`set_limits`.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, fields, replace

from .errors import SizeLimitExceeded

_ENV_PREFIX = "HYPERHOPF_"


@dataclass(frozen=True)
class Limits:
    hypertree_n: int = 7
    partition_n: int = 9
    # dense boolean order matrices: 20k elements is already 400 MB
    poset_elements: int = 20_000
    isomorphism_elements: int = 2_000
    words: int = 2_000_000

    @classmethod
    def from_env(cls, environ=None) -> "Limits":
        environ = os.environ if environ is None else environ
        kwargs = {}
        for f in fields(cls):
            key = f"{_ENV_PREFIX}MAX_{f.name.upper()}"
            if key in environ:
                kwargs[f.name] = int(environ[key])
        return cls(**kwargs)


_current = Limits.from_env()


def current() -> Limits:
    return _current


def set_limits(limits: Limits | None = None, **overrides) -> Limits:
    """Replace the process-wide caps; returns the previous value."""
    global _current
    previous = _current
    base = _current if limits is None else limits
    _current = replace(base, **overrides)
    return previous


def check(what: str, requested: int, cap: int | None, default_field: str) -> None:
    if cap is None:
        cap = getattr(_current, default_field)
    if requested > cap:
        raise SizeLimitExceeded(what, requested, cap)
