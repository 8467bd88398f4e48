"""Call-by-need evaluation workbench.

Python bindings over the C++ core: three evaluation strategies (closed,
open, useful) for lambda-terms with explicit substitutions, normal-form
predicates, variable-set analyses, a brute-force property oracle, and the
size-explosion benchmark family.
"""

from ._cbneed import (
    ProgramParseError,
    check,
    oracle,
    parse,
    run,
    size_explosion_point,
    unfold,
)

__all__ = [
    "ProgramParseError",
    "check",
    "oracle",
    "parse",
    "run",
    "size_explosion_point",
    "unfold",
]
