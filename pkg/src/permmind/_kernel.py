"""Kernel backend selection.

The counting kernels exist twice: compiled (`_speedups`, Cython) and pure
Python (`_purepy`).  The compiled one is picked when it imported cleanly and
the PERMMIND_PURE environment variable is unset.  `set_backend` rebinds the
module-level names, so callers that use attribute access
(`_kernel.black_count(...)`) can be switched at runtime, which is what the
parity tests and the backend benchmark do.
"""

import os

from . import _purepy

try:
    from . import _speedups as _compiled
except ImportError:
    _compiled = None

_BACKENDS = {"pure": _purepy, "compiled": _compiled}

active_backend = None
black_count = None
partial_match_count = None
min_black_filter = None
partition_by_black = None


def available_backends():
    return [name for name, mod in _BACKENDS.items() if mod is not None]


def set_backend(name):
    mod = _BACKENDS.get(name)
    if mod is None:
        raise ValueError(f"kernel backend {name!r} is not available")
    global active_backend, black_count, partial_match_count
    global min_black_filter, partition_by_black
    active_backend = name
    black_count = mod.black_count
    partial_match_count = mod.partial_match_count
    min_black_filter = mod.min_black_filter
    partition_by_black = mod.partition_by_black


if _compiled is not None and not os.environ.get("PERMMIND_PURE"):
    set_backend("compiled")
else:
    set_backend("pure")
