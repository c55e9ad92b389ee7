"""Garside normal forms and Dehornoy-structure orders on Artin groups."""

from ._core import (
    Group,
    ParseError,
    TrichotomyViolation,
    __version__,
    braid_group,
    dihedral_group,
    handle_reduction_sign,
    run,
)

__all__ = [
    "Group",
    "ParseError",
    "TrichotomyViolation",
    "__version__",
    "braid_group",
    "dihedral_group",
    "handle_reduction_sign",
    "run",
]
