"""Generalized Zernike (disk) polynomials.

Evaluation, exact rational coefficients and norms, Gauss-Jacobi and disk
quadrature, least-squares/projection fitting, and in-process access to the
command-line verifier.
"""

try:
    from ._diskpoly import *  # noqa: F401,F403  (wheel layout)
except ImportError:
    from _diskpoly import *  # noqa: F401,F403  (in-tree build)

__version__ = "0.1.0"
