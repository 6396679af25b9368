"""Python access to socialgrid reduced substrates through the C boundary."""

from socialgrid._socialgrid import (
    ABI_VERSION,
    ERR_CLOSED,
    ERR_CONFIG,
    ERR_EPISODE_DONE,
    ERR_INVALID_ARGUMENT,
    ERR_NOT_FOUND,
    Registry,
    Session,
    SocialGridError,
    abi_version,
    native_run,
)
from socialgrid.agents import NoopAgent, RandomAgent, run_agents

__all__ = [
    "ABI_VERSION",
    "ERR_CLOSED",
    "ERR_CONFIG",
    "ERR_EPISODE_DONE",
    "ERR_INVALID_ARGUMENT",
    "ERR_NOT_FOUND",
    "NoopAgent",
    "RandomAgent",
    "Registry",
    "Session",
    "SocialGridError",
    "abi_version",
    "native_run",
    "run_agents",
]

if abi_version() != ABI_VERSION:
    raise ImportError(f"socialgrid ABI mismatch: library {abi_version()}, module {ABI_VERSION}")
