"""Numerical kernels with a selectable backend.

Set CORRWALK_BACKEND=numpy to force the pure-numpy reference
implementations, or CORRWALK_BACKEND=numba to require the jit-compiled
ones (an ImportError is raised if numba is missing).  When the variable is
unset the jit backend is used if numba imports, otherwise the reference
backend.  ``BACKEND`` names the backend actually in use.
"""

import os

_requested = os.environ.get("CORRWALK_BACKEND", "").strip().lower()

if _requested == "numpy":
    from . import reference as _impl

    BACKEND = "numpy"
elif _requested == "numba":
    from . import jit as _impl

    BACKEND = "numba"
elif _requested == "":
    try:
        from . import jit as _impl

        BACKEND = "numba"
    except ImportError:
        from . import reference as _impl

        BACKEND = "numpy"
else:
    raise ValueError(
        f"CORRWALK_BACKEND must be 'numpy' or 'numba', got {_requested!r}"
    )

log_f_table = _impl.log_f_table
evolve_pmf = _impl.evolve_pmf
path_product_sums = _impl.path_product_sums
walk_final_positions = _impl.walk_final_positions
absorb_final_positions = _impl.absorb_final_positions

__all__ = [
    "BACKEND",
    "log_f_table",
    "evolve_pmf",
    "path_product_sums",
    "walk_final_positions",
    "absorb_final_positions",
]
