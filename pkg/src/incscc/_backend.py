"""Kernel backend selection.

Imports the compiled extension when present, otherwise the pure-Python
fallback. Set INCSCC_PURE_PYTHON=1 to force the fallback (used by the
backend comparison benchmark and by tests that need both paths).
"""

import os

if os.environ.get("INCSCC_PURE_PYTHON", "") not in ("", "0"):
    from incscc import _kernels_py as _impl

    COMPILED = False
else:
    try:
        from incscc import _kernels as _impl  # type: ignore[no-redef]

        COMPILED = True
    except ImportError:
        from incscc import _kernels_py as _impl  # type: ignore[no-redef]

        COMPILED = False

tarjan_labels = _impl.tarjan_labels
BACKEND = "compiled" if COMPILED else "python"
