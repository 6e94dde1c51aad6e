"""Backend selection: compiled kernels when the extension built, else pure.

Set DOMSET_PURE=1 to force the pure-Python kernels (used by the benchmark
and by tests that compare the two backends).
"""

from __future__ import annotations

import os

if os.environ.get("DOMSET_PURE"):
    from . import _kernels as _impl

    BACKEND = "python"
else:
    try:
        from . import _ckernels as _impl  # type: ignore[no-redef]

        BACKEND = "cython"
    except ImportError:
        from . import _kernels as _impl  # type: ignore[no-redef]

        BACKEND = "python"

scan_max_f = _impl.scan_max_f
search_leq = _impl.search_leq
make_memo = _impl.make_memo
