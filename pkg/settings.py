"""Runtime configuration: caps, default primes and verification mode."""

import os
from contextlib import contextmanager
from dataclasses import dataclass, replace

DEFAULT_GENERATOR_CAP = 18
DEFAULT_EXHAUSTIVE_CAP = 14
DEFAULT_PRIMES = (2, 32003)
DEFAULT_REJECTION_ATTEMPTS = 10_000

_TRUE = {"1", "true", "yes", "on"}


@dataclass(frozen=True)
class Settings:
    generator_cap: int = DEFAULT_GENERATOR_CAP
    exhaustive_cap: int = DEFAULT_EXHAUSTIVE_CAP
    primes: tuple = DEFAULT_PRIMES
    verify: bool = False
    rejection_attempts: int = DEFAULT_REJECTION_ATTEMPTS
    reduce_strands: bool = True


def _env_int(name, default):
    raw = os.environ.get(name)
    if not raw:
        return default
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"{name} must be an integer, got {raw!r}")


def _env_flag(name, default):
    raw = os.environ.get(name)
    if raw is None or not raw.strip():
        return default
    return raw.strip().lower() in _TRUE


def _env_primes(name, default):
    raw = os.environ.get(name)
    if not raw:
        return default
    try:
        return tuple(int(p) for p in raw.split(",") if p.strip())
    except ValueError:
        raise ValueError(f"{name} must be a comma-separated list of primes, got {raw!r}")


def load_settings():
    """Build settings from the environment, falling back to the defaults."""
    return Settings(
        generator_cap=_env_int("BETTI_GENERATOR_CAP", DEFAULT_GENERATOR_CAP),
        exhaustive_cap=_env_int("BETTI_EXHAUSTIVE_CAP", DEFAULT_EXHAUSTIVE_CAP),
        primes=_env_primes("BETTI_PRIMES", DEFAULT_PRIMES),
        verify=_env_flag("BETTI_VERIFY", False),
        rejection_attempts=_env_int("BETTI_REJECTION_ATTEMPTS", DEFAULT_REJECTION_ATTEMPTS),
        reduce_strands=_env_flag("BETTI_REDUCE_STRANDS", True),
    )


_current = None


def get_settings():
    global _current
    if _current is None:
        _current = load_settings()
    return _current


@contextmanager
def override(**changes):
    """Temporarily replace individual settings fields."""
    global _current
    previous = get_settings()
    _current = replace(previous, **changes)
    try:
        yield _current
    finally:
        _current = previous
