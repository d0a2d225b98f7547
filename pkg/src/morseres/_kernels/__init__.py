"""Hot-loop kernels with a compiled backend and a pure-Python fallback.

The compiled extension ``_ckernels`` is used when it was built; otherwise, or
when the environment variable ``MORSERES_PURE_PYTHON`` is set, the functions
come from ``_pykernels``. ``BACKEND`` names the active implementation.
"""
import os

from . import _pykernels as pure

try:
    from . import _ckernels as compiled
except ImportError:  # extension not built
    compiled = None

if compiled is not None and not os.environ.get("MORSERES_PURE_PYTHON"):
    _active = compiled
    BACKEND = "cython"
else:
    _active = pure
    BACKEND = "python"

subset_labels = _active.subset_labels
rank_mod_p = _active.rank_mod_p
koszul_homology = _active.koszul_homology
find_cycle = _active.find_cycle
reach = _active.reach

__all__ = [
    "BACKEND",
    "compiled",
    "pure",
    "subset_labels",
    "rank_mod_p",
    "koszul_homology",
    "find_cycle",
    "reach",
]
