import os
from dataclasses import dataclass
from typing import Mapping

from .exceptions import ConfigurationError


def _read_int(environ: Mapping[str, str], name: str, default: int) -> int:
    raw = environ.get(name)
    if raw is None or raw.strip() == "":
        return default

    try:
        value = int(raw)
    except ValueError:
        raise ConfigurationError(
            "{} must be an integer, got {!r}".format(name, raw),
            variable=name
        )

    if value < 1:
        raise ConfigurationError(
            "{} must be positive, got {}".format(name, value),
            variable=name
        )
    return value


@dataclass(frozen=True)
class Settings:
    threads: int = 1
    max_evaluations: int = 10 ** 9
    max_seconds: float = 15 * 60
    exhaustive_limit: int = 2 ** 26
    search_distance_max_length: int = 80

    @classmethod
    def from_env(cls, environ: Mapping[str, str] = None) -> "Settings":
        """
        Build settings from environment variables.

        CYCLOCODE_THREADS caps the worker count (defaults to the machine
        parallelism); CYCLOCODE_MAX_EVALUATIONS and CYCLOCODE_MAX_SECONDS
        override the minimum-distance budget.
        """
        if environ is None:
            environ = os.environ

        return cls(
            threads=_read_int(environ, "CYCLOCODE_THREADS", os.cpu_count() or 1),
            max_evaluations=_read_int(environ, "CYCLOCODE_MAX_EVALUATIONS", cls.max_evaluations),
            max_seconds=_read_int(environ, "CYCLOCODE_MAX_SECONDS", int(cls.max_seconds)),
        )
