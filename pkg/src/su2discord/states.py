"""SU(2)-invariant states of a spin-j (x) spin-1/2 pair.

The family has one parameter ``f``, the total weight on the ``J = j-1/2``
multiplet: ``f/2j`` on each of its ``2j`` states and ``(1-f)/(2j+2)`` on
each of the ``2j+2`` states of the ``J = j+1/2`` multiplet.
"""
from dataclasses import dataclass

import numpy as np

from .angular import MINUS, PLUS, cg_pair, check_two_j, product_index, total_basis_labels
from .linalg import DensityMatrix


@dataclass(frozen=True)
class SU2State:
    two_j: int
    f: float

    def __post_init__(self):
        object.__setattr__(self, "two_j", check_two_j(self.two_j))
        f = float(self.f)
        if not 0.0 <= f <= 1.0:
            raise ValueError(f"F must lie in [0, 1], got {self.f!r}")
        object.__setattr__(self, "f", f)

    @property
    def j(self):
        return self.two_j / 2

    @property
    def dim_a(self):
        return self.two_j + 1

    @property
    def weight_minus(self):
        """Eigenvalue on the ``J = j-1/2`` multiplet."""
        return self.f / self.two_j

    @property
    def weight_plus(self):
        """Eigenvalue on the ``J = j+1/2`` multiplet."""
        return (1.0 - self.f) / (self.two_j + 2)


def build_total_basis(s):
    """Diagonal density matrix in the total-spin basis."""
    diag = [
        s.weight_plus if branch == PLUS else s.weight_minus
        for branch, _ in total_basis_labels(s.two_j)
    ]
    return DensityMatrix(np.diag(diag).astype(complex), s.dim_a, 2)


def build_product_basis(s):
    """Density matrix in the product basis, assembled multiplet by multiplet.

    Each ``|J, M><J, M|`` contributes ``a^2``, ``ab`` and ``b^2`` blocks
    between ``|M-1/2, up>`` and ``|M+1/2, down>``.
    """
    two_j = s.two_j
    n = 2 * s.dim_a
    rho = np.zeros((n, n), dtype=complex)
    for branch, two_m in total_basis_labels(two_j):
        weight = s.weight_plus if branch == PLUS else s.weight_minus
        if weight == 0.0:
            continue
        pair = cg_pair(two_j, two_m, branch)
        amps = []
        if abs(two_m - 1) <= two_j:
            amps.append((product_index(two_j, two_m - 1, +1), pair.a))
        if abs(two_m + 1) <= two_j:
            amps.append((product_index(two_j, two_m + 1, -1), pair.b))
        for r, x in amps:
            for c, y in amps:
                rho[r, c] += weight * x * y
    return DensityMatrix(rho, s.dim_a, 2)


def reduced_states(s):
    """Both marginals are maximally mixed: ``(I/(2j+1), I/2)``."""
    return np.eye(s.dim_a, dtype=complex) / s.dim_a, np.eye(2, dtype=complex) / 2


def state_spectrum(s):
    """Eigenvalues ``{f/2j x 2j, (1-f)/(2j+2) x (2j+2)}``, descending."""
    vals = np.array([s.weight_minus] * s.two_j + [s.weight_plus] * (s.two_j + 2))
    return np.sort(vals)[::-1]


def spin_matrices(two_j):
    """``(Sx, Sy, Sz)`` for spin ``two_j/2`` in the ``m`` descending basis."""
    j = two_j / 2
    m = j - np.arange(two_j + 1)
    # <m+1| S+ |m> = sqrt(j(j+1) - m(m+1))
    raise_amp = np.sqrt(j * (j + 1) - m[1:] * (m[1:] + 1))
    sp = np.diag(raise_amp, 1).astype(complex)
    sm = sp.conj().T
    sx = (sp + sm) / 2
    sy = (sp - sm) / 2j
    sz = np.diag(m).astype(complex)
    return sx, sy, sz


def rotation(two_j, axis, angle):
    """``exp(-i angle n.S)`` via eigendecomposition of the Hermitian generator."""
    n = np.asarray(axis, dtype=float)
    n = n / np.linalg.norm(n)
    gen = sum(c * s for c, s in zip(n, spin_matrices(two_j)))
    vals, vecs = np.linalg.eigh(gen)
    return (vecs * np.exp(-1j * angle * vals)) @ vecs.conj().T


def total_spin(two_j):
    """Components of ``J = S_a (x) 1 + 1 (x) S_b`` on the product space."""
    ia, ib = np.eye(two_j + 1), np.eye(2)
    return tuple(
        np.kron(sa, ib) + np.kron(ia, sb)
        for sa, sb in zip(spin_matrices(two_j), spin_matrices(1))
    )
