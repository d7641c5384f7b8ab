"""renormalab: a numerical laboratory for renormalization of real unimodal maps.

Computes the renormalization operator on truncated analytic germs, its fixed
points, periodic orbits and spectra, and cross-validates the universal
scaling constants against parameter-space cascades, together with
parameter-plane experiments (zoom self-similarity, gap statistics) and
Hausdorff-dimension estimates for bounded-combinatorics parameter sets.
"""

__version__ = "0.1.0"

from .dd import Scalar  # noqa: F401
from .series import PowerGerm, quadratic_germ  # noqa: F401
