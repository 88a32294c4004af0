"""Kernel selection: compiled extension when available, pure Python otherwise.

Set ``UWRT_PURE_PYTHON=1`` in the environment to force the fallback (used by
the benchmark for a fair comparison and by CI to exercise both paths).
"""

from __future__ import annotations

import os

if os.environ.get("UWRT_PURE_PYTHON"):
    from . import _fallback as _impl
else:
    try:
        from . import _speedups as _impl  # type: ignore[no-redef]
    except ImportError:
        from . import _fallback as _impl  # type: ignore[no-redef]

BACKEND: str = _impl.BACKEND
lp_mul = _impl.lp_mul
lp_submul = _impl.lp_submul
lp_addmul = _impl.lp_addmul
cyc_mulreduce = _impl.cyc_mulreduce
