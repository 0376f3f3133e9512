"""Backend selection for the refinement kernel.

The compiled ``_refine_c`` module is used when importable, unless
``HTGAUT_PURE_PYTHON=1`` is set. :func:`use` switches at runtime (benchmarks
and the kernel equivalence tests rely on it).
"""

from __future__ import annotations

import os
from types import ModuleType

from htgaut.aut import _refine_py

try:
    from htgaut.aut import _refine_c
except ImportError:  # extension not built
    _refine_c = None

BACKENDS: dict[str, ModuleType] = {"python": _refine_py}
if _refine_c is not None:
    BACKENDS["cython"] = _refine_c

refine = individualize = target_cell = is_automorphism = None
backend = ""


def use(name: str) -> None:
    global refine, individualize, target_cell, is_automorphism, backend
    impl = BACKENDS[name]
    refine = impl.refine
    individualize = impl.individualize
    target_cell = impl.target_cell
    is_automorphism = impl.is_automorphism
    backend = name


def available() -> list[str]:
    return list(BACKENDS)


use("cython" if _refine_c is not None and os.environ.get("HTGAUT_PURE_PYTHON") != "1" else "python")
