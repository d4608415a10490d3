"""Kernel selection.

The compiled ``_kernels`` extension is used when it imports; otherwise the
pure-Python ``_pykernels`` module. ``PASCALDET_BACKEND=python`` forces the
fallback, ``PASCALDET_BACKEND=compiled`` makes a missing extension an error.
"""

import os

from pascaldet import _pykernels

_choice = os.environ.get("PASCALDET_BACKEND", "auto").lower()
if _choice not in ("auto", "python", "compiled"):
    raise ImportError(f"PASCALDET_BACKEND must be auto, python or compiled, not {_choice!r}")

kernels = _pykernels
BACKEND = "python"

if _choice != "python":
    try:
        from pascaldet import _kernels
    except ImportError:
        if _choice == "compiled":
            raise
    else:
        kernels = _kernels
        BACKEND = "compiled"


def available():
    """Map of backend name to kernel module, for tests and benchmarks."""
    out = {"python": _pykernels}
    try:
        from pascaldet import _kernels
    except ImportError:
        pass
    else:
        out["compiled"] = _kernels
    return out
