"""Kernel backend selection.

The compiled extension is used when importable; otherwise the pure-Python
reference kernels take over. ``KGHIER_BACKEND=python`` or ``=cython`` forces
one side at import time (the latter raises if the extension was not built),
and :func:`use_backend` switches at runtime, which the benchmark and the
backend-agreement tests rely on.
"""

import os

from . import _kernels_py

_BACKENDS = {"python": _kernels_py}
try:
    from . import _kernels

    _BACKENDS["cython"] = _kernels
except ImportError:
    pass

BACKEND = ""
intersection_size = None
pair_intersections = None
emit_pair_keys = None


def available_backends() -> list[str]:
    """Importable backend names, compiled one first when present."""
    return [name for name in ("cython", "python") if name in _BACKENDS]


def use_backend(name: str) -> str:
    """Bind the module-level kernel functions to one backend."""
    global BACKEND, intersection_size, pair_intersections, emit_pair_keys
    if name == "auto":
        name = "cython" if "cython" in _BACKENDS else "python"
    if name not in _BACKENDS:
        raise ImportError(
            f"kernel backend {name!r} unavailable; built: {available_backends()}"
        )
    impl = _BACKENDS[name]
    BACKEND = name
    intersection_size = impl.intersection_size
    pair_intersections = impl.pair_intersections
    emit_pair_keys = impl.emit_pair_keys
    return name


_requested = os.environ.get("KGHIER_BACKEND", "auto").lower()
if _requested not in ("auto", "cython", "python"):
    raise ImportError(
        f"KGHIER_BACKEND must be 'auto', 'cython' or 'python', got {_requested!r}"
    )
use_backend(_requested)
