"""Clebsch-Gordan coupling of spin-j with spin-1/2.

Spins and magnetic quantum numbers are passed doubled (``two_j = 2j``,
``two_m = 2m``) so half-integers stay exact.

Basis conventions shared by the whole package:

* product basis ``|m_a> (x) |m_b>`` with ``m_a = j, j-1, ..., -j`` (major)
  and ``m_b = +1/2, -1/2`` (minor);
* total-spin basis ``|J, M>`` with the ``J = j+1/2`` block first and the
  ``J = j-1/2`` block second, ``M`` descending inside each block.
"""
from dataclasses import dataclass
from math import sqrt

import numpy as np

PLUS = "plus"
MINUS = "minus"


def check_two_j(two_j):
    """Validate a doubled spin label and return it as ``int``."""
    if isinstance(two_j, bool) or int(two_j) != two_j:
        raise ValueError(f"two_j must be an integer, got {two_j!r}")
    two_j = int(two_j)
    if two_j < 1:
        raise ValueError(f"two_j must be >= 1, got {two_j}")
    return two_j


@dataclass(frozen=True)
class CGPair:
    """Amplitudes of ``|J, M> = a |M-1/2> |up> + b |M+1/2> |down>``."""

    a: float
    b: float
    branch: str
    two_m: int


def cg_pair(two_j, two_m, branch):
    """Clebsch-Gordan amplitudes for total spin ``j +/- 1/2`` at ``M = two_m/2``.

    ``a_+ = sqrt((j+1/2+M)/(2j+1))``, ``b_+ = sqrt((j+1/2-M)/(2j+1))``,
    ``a_- = -sqrt((j+1/2-M)/(2j+1))``, ``b_- = sqrt((j+1/2+M)/(2j+1))``.
    """
    two_j = check_two_j(two_j)
    if branch not in (PLUS, MINUS):
        raise ValueError(f"unknown branch {branch!r}")
    two_big_j = two_j + 1 if branch == PLUS else two_j - 1
    if abs(two_m) > two_big_j or (two_m - two_big_j) % 2:
        raise ValueError(f"2m={two_m} is not a valid projection for 2J={two_big_j}")
    # (j + 1/2 +/- M) / (2j + 1), all doubled
    up = (two_j + 1 + two_m) / (2 * (two_j + 1))
    down = (two_j + 1 - two_m) / (2 * (two_j + 1))
    if branch == PLUS:
        return CGPair(sqrt(up), sqrt(down), branch, two_m)
    return CGPair(-sqrt(down), sqrt(up), branch, two_m)


def product_index(two_j, two_ma, two_mb):
    """Row index of ``|m_a> (x) |m_b>`` in the product basis."""
    return (two_j - two_ma) // 2 * 2 + (0 if two_mb > 0 else 1)


def total_basis_labels(two_j):
    """``(branch, 2M)`` for each total-spin basis slot, in package order."""
    labels = [(PLUS, tm) for tm in range(two_j + 1, -two_j - 2, -2)]
    labels += [(MINUS, tm) for tm in range(two_j - 1, -two_j, -2)]
    return labels


def coupling_unitary(two_j):
    """Real orthogonal matrix whose columns are ``|J, M>`` in the product basis."""
    two_j = check_two_j(two_j)
    n = 2 * (two_j + 1)
    u = np.zeros((n, n))
    for col, (branch, two_m) in enumerate(total_basis_labels(two_j)):
        pair = cg_pair(two_j, two_m, branch)
        # components falling outside -j..j carry a zero amplitude
        if abs(two_m - 1) <= two_j:
            u[product_index(two_j, two_m - 1, +1), col] = pair.a
        if abs(two_m + 1) <= two_j:
            u[product_index(two_j, two_m + 1, -1), col] = pair.b
    return u
