"""Selects the compiled kernels when built, the NumPy fallback otherwise.

Set ``AGCAUCHY_PURE_PYTHON=1`` to force the fallback.  Both backends take
the field's full addition and multiplication tables, so they only serve
fields with ``q <= 256``; larger fields use the scalar paths in the
calling modules.
"""

import os

from . import _kernels_py

if os.environ.get("AGCAUCHY_PURE_PYTHON"):
    _impl = _kernels_py
else:
    try:
        from . import _kernels as _impl
    except ImportError:
        _impl = _kernels_py

BACKEND = "compiled" if _impl is not _kernels_py else "python"

act_flat = _impl.act_flat
cauchy_fill = _impl.cauchy_fill
