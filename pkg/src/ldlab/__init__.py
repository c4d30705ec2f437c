"""Left-distributive structures and their braid-order applications.

Submodules: laver (periodic tables), magma (finite LD structures and
quandles), braid (Garside normal forms), order (braid orders and ordinal
ranks), homology (rack cochain complexes), ybe (set-theoretic Yang-Baxter
solutions), invariants (colouring counts and presentations), conjugacy
(positive conjugacy classes), games (crossing-removal games), cli.
"""

from .errors import (AmbiguousInverseError, DomainError, ResourceError,
                     StepCapError)

__version__ = "0.1.0"

__all__ = [
    "AmbiguousInverseError",
    "DomainError",
    "ResourceError",
    "StepCapError",
    "__version__",
]
