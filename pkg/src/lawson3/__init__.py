"""Lawson minimal surfaces in the 3-sphere.

Construction pipeline (tiling, least-area disk, halfturn-orbit assembly),
symmetry-group generation, exact orbifold Euler-number certificates, and
discrete Willmore-energy reports.
"""

from .config import DEFAULT_TOLS, Tolerances
from .kernels import BACKEND
from .symmetry import LawsonParams

__version__ = "0.1.0"

__all__ = ["BACKEND", "DEFAULT_TOLS", "LawsonParams", "Tolerances", "__version__"]
