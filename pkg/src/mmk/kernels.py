"""Search-kernel dispatch: the compiled extension when built, pure Python otherwise.

Set MMK_PURE_PYTHON=1 to force the fallback (used by the backend-equivalence
tests and the benchmark).
"""

import os

if os.environ.get("MMK_PURE_PYTHON"):
    from . import _kernels_py as _impl

    HAVE_COMPILED = False
else:
    try:
        from . import _kernels as _impl

        HAVE_COMPILED = True
    except ImportError:
        from . import _kernels_py as _impl

        HAVE_COMPILED = False

backend = "compiled" if HAVE_COMPILED else "python"

enumerate_simplex = _impl.enumerate_simplex
search_support = _impl.search_support
