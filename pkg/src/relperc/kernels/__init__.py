"""Kernel backend selection.

The compiled extension is used when it was built; otherwise the NumPy
reference implementations take over.  ``BACKEND`` reports which one is live.
Both backends produce identical integer results (connectivity decisions,
counts, component sizes); float results agree to rounding.
"""

from . import _fallback

try:
    from . import _ckernels as _active

    BACKEND = "compiled"
except ImportError:  # extension not built; pure-Python install
    _active = _fallback
    BACKEND = "python"

connectivity_table = _active.connectivity_table
count_connected_masks = _active.count_connected_masks
largest_component_growth = _active.largest_component_growth
poisson_binomial_pmf = _active.poisson_binomial_pmf

__all__ = [
    "BACKEND",
    "connectivity_table",
    "count_connected_masks",
    "largest_component_growth",
    "poisson_binomial_pmf",
]
