"""Kernel selection: the compiled extension when importable, else pure Python.

Set ``FCHROMATIC_PURE=1`` to force the pure-Python kernels.
"""

import os

from . import _pure

if os.environ.get("FCHROMATIC_PURE", "") not in ("", "0"):
    kernels = _pure
    NAME = "pure"
else:
    try:
        from . import _kernels as kernels
        NAME = "compiled"
    except ImportError:
        kernels = _pure
        NAME = "pure"
