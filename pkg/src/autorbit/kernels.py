"""Backend selection for the hot kernels.

The compiled extension (``autorbit._speedups``) is picked at import time when
available; otherwise the pure-Python kernels serve.  Either way results are
identical: the compiled kernels raise OverflowError on anything that might
not fit 64-bit words and the dispatcher falls back to the unbounded pure
implementations for that call.

Set ``AUTORBIT_BACKEND=pure`` (or ``=compiled``) to force a backend at import
time.  ``forced()`` swaps the backend temporarily; it mutates module state and
is meant for benchmarking and tests, not for concurrent use.
"""

from __future__ import annotations

import os
from contextlib import contextmanager
from typing import Sequence

from . import _kernels_py

try:
    from . import _speedups as _compiled
except ImportError:
    _compiled = None

_env = os.environ.get("AUTORBIT_BACKEND", "auto")
if _env not in ("auto", "compiled", "pure"):
    raise RuntimeError(f"AUTORBIT_BACKEND must be auto, compiled or pure, not {_env!r}")
if _env == "compiled" and _compiled is None:
    raise RuntimeError("AUTORBIT_BACKEND=compiled but autorbit._speedups is not built")

_active = "compiled" if (_compiled is not None and _env != "pure") else "pure"


def compiled_available() -> bool:
    return _compiled is not None


def active_backend() -> str:
    return _active


@contextmanager
def forced(name: str):
    """Temporarily force the 'pure' or 'compiled' backend."""
    global _active
    if name not in ("pure", "compiled"):
        raise ValueError(f"unknown backend {name!r}")
    if name == "compiled" and _compiled is None:
        raise RuntimeError("compiled kernels are not built")
    previous = _active
    _active = name
    try:
        yield
    finally:
        _active = previous


def pgroup_sweep(fs: Sequence[int], es: Sequence[int]) -> list[int]:
    if _active == "compiled":
        try:
            return _compiled.pgroup_sweep(fs, es)
        except OverflowError:
            pass
    return _kernels_py.pgroup_sweep(fs, es)


def snf_diagonal(rows: int, cols: int, entries: Sequence[int]) -> list[int]:
    if _active == "compiled":
        try:
            return _compiled.snf_diagonal(rows, cols, entries)
        except OverflowError:
            pass
    return _kernels_py.snf_diagonal(rows, cols, entries)
