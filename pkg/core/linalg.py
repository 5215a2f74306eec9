"""
Déterminants par LU complexe et puissances entières avec garde de pôle.
"""

import warnings

import numpy as np
import scipy.linalg as spl

from config import Config
from .errors import PoleError


def lu_determinant(matrix) -> complex:
    """det(A) = (-1)^{#permutations} · Π diag(U), LU avec pivot partiel."""
    a = np.asarray(matrix, dtype=np.complex128)
    if a.size == 0:
        return complex(1.0)
    with warnings.catch_warnings():
        # Pivot nul exact : le déterminant vaut 0, ce n'est pas une erreur ici
        warnings.simplefilter("ignore", spl.LinAlgWarning)
        lu, piv = spl.lu_factor(a, check_finite=True)
    swaps = int(np.count_nonzero(piv != np.arange(piv.size)))
    det = complex(np.prod(np.diag(lu)))
    return -det if swaps % 2 else det


def int_power(base: complex, exponent: int, at: complex, pole_tol: float = Config.POLE_TOL) -> complex:
    """base^k pour k entier ; PoleError (au point `at`) si k < 0 et base ≈ 0."""
    base = complex(base)
    if exponent >= 0:
        return base ** exponent
    if abs(base) < pole_tol:
        raise PoleError(at, exponent)
    return 1.0 / base ** (-exponent)


def one_minus_u2_power(u: complex, exponent: int, pole_tol: float = Config.POLE_TOL) -> complex:
    """(1 - u²)^k ; pôle en u² = 1 quand k < 0."""
    return int_power(1 - u * u, exponent, u, pole_tol)
