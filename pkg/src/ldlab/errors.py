"""Shared error types and the memory guard used by table/matrix allocators."""

import os

DEFAULT_MAX_MEM = 1 << 31  # bytes


class DomainError(ValueError):
    """An input violates a documented precondition."""


class ResourceError(RuntimeError):
    """A computation would exceed a configured resource bound."""


class AmbiguousInverseError(DomainError):
    """Left division a \\ b has several solutions (row of a is not injective at b)."""


class StepCapError(ResourceError):
    """A stepped process hit its step cap; `partial` holds the count reached."""

    def __init__(self, message: str, partial: int):
        super().__init__(message)
        self.partial = partial


def max_mem_bytes() -> int:
    """Allocation cap in bytes, from LDLAB_MAX_MEM when set."""
    raw = os.environ.get("LDLAB_MAX_MEM")
    if raw is None:
        return DEFAULT_MAX_MEM
    try:
        value = int(raw)
    except ValueError:
        raise DomainError(f"LDLAB_MAX_MEM must be an integer byte count, got {raw!r}") from None
    if value <= 0:
        raise DomainError("LDLAB_MAX_MEM must be positive")
    return value


def guard_alloc(nbytes: int, what: str) -> None:
    cap = max_mem_bytes()
    if nbytes > cap:
        raise ResourceError(f"{what} needs about {nbytes} bytes, over the LDLAB_MAX_MEM cap of {cap}")
