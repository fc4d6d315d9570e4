"""Dense complex matrix kernel: tensor products, partial trace and
transpose, Hermitian spectra and entropies.

Matrices are plain ``numpy`` arrays. A bipartite state is wrapped in
:class:`DensityMatrix`, which carries the subsystem dimensions and checks
the physical invariants on construction.
"""
from dataclasses import dataclass

import numpy as np

HERMITIAN_TOL = 1e-12
TRACE_TOL = 1e-12
PSD_SLACK = 1e-10

A = "A"
B = "B"


@dataclass(frozen=True)
class DensityMatrix:
    """Hermitian, unit-trace, positive semidefinite operator on C^dim_a (x) C^dim_b.

    ``dim_a`` is the spin-j side (2j+1) and ``dim_b`` the spin-1/2 side (2).
    """

    mat: np.ndarray
    dim_a: int
    dim_b: int

    def __post_init__(self):
        mat = np.asarray(self.mat, dtype=complex)
        object.__setattr__(self, "mat", mat)
        n = self.dim_a * self.dim_b
        if mat.shape != (n, n):
            raise ValueError(
                f"matrix shape {mat.shape} does not match dims "
                f"{self.dim_a} x {self.dim_b}"
            )
        asym = np.max(np.abs(mat - mat.conj().T))
        if asym > HERMITIAN_TOL:
            raise ValueError(f"matrix is not Hermitian (asymmetry {asym:.3g})")
        tr = np.trace(mat).real
        if abs(tr - 1.0) > TRACE_TOL:
            raise ValueError(f"trace is {tr!r}, expected 1")
        lowest = np.linalg.eigvalsh(mat)[0]
        if lowest < -PSD_SLACK:
            raise ValueError(f"matrix is not PSD (eigenvalue {lowest:.3g})")


def _check_dims(mat, dim_a, dim_b):
    n = dim_a * dim_b
    if mat.shape != (n, n):
        raise ValueError(
            f"matrix shape {mat.shape} does not match dims {dim_a} x {dim_b}"
        )


def _unpack(rho, dim_a=None, dim_b=None):
    if isinstance(rho, DensityMatrix):
        return rho.mat, rho.dim_a, rho.dim_b
    mat = np.asarray(rho, dtype=complex)
    if dim_a is None or dim_b is None:
        raise ValueError("dim_a and dim_b are required for a bare matrix")
    _check_dims(mat, dim_a, dim_b)
    return mat, dim_a, dim_b


def tensor(a, b):
    """Kronecker product ``a (x) b`` with the ``a`` index major."""
    return np.kron(np.asarray(a, dtype=complex), np.asarray(b, dtype=complex))


def partial_trace(rho, keep=A, dim_a=None, dim_b=None):
    """Reduced state on subsystem ``keep``.

    Parameters
    ----------
    rho : DensityMatrix or array
        Bipartite operator. Bare arrays need ``dim_a`` and ``dim_b``.
    keep : {"A", "B"}
        Subsystem to keep; the other one is traced out.

    Returns
    -------
    numpy.ndarray
        ``dim_a x dim_a`` or ``dim_b x dim_b`` matrix.
    """
    mat, da, db = _unpack(rho, dim_a, dim_b)
    t = mat.reshape(da, db, da, db)
    if keep == A:
        return np.einsum("ibjb->ij", t)
    if keep == B:
        return np.einsum("aiaj->ij", t)
    raise ValueError(f"unknown subsystem {keep!r}")


def partial_transpose(rho, which=B, dim_a=None, dim_b=None):
    """Transpose the indices of subsystem ``which`` only."""
    mat, da, db = _unpack(rho, dim_a, dim_b)
    t = mat.reshape(da, db, da, db)
    if which == A:
        t = t.transpose(2, 1, 0, 3)
    elif which == B:
        t = t.transpose(0, 3, 2, 1)
    else:
        raise ValueError(f"unknown subsystem {which!r}")
    return t.reshape(da * db, da * db)


def hermitian_eigenvalues(m):
    """Real eigenvalues of a Hermitian matrix, in descending order.

    Raises ``ValueError`` when ``m`` is not square or its anti-Hermitian
    part exceeds ``HERMITIAN_TOL`` (scaled by the largest entry when that
    is above one).
    """
    if isinstance(m, DensityMatrix):
        m = m.mat
    m = np.asarray(m, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    scale = max(1.0, float(np.max(np.abs(m))))
    asym = np.max(np.abs(m - m.conj().T))
    if asym > HERMITIAN_TOL * scale:
        raise ValueError(f"matrix is not Hermitian (asymmetry {asym:.3g})")
    return np.linalg.eigvalsh(m)[::-1]


def entropy_of_spectrum(values):
    """Shannon entropy in bits of a probability list, ``0 log 0 = 0``.

    Values in ``[-PSD_SLACK, 0)`` are clipped to zero; anything lower is
    rejected.
    """
    p = np.asarray(values, dtype=float)
    if p.size and p.min() < -PSD_SLACK:
        raise ValueError(f"negative eigenvalue {p.min():.3g}")
    p = np.clip(p, 0.0, 1.0)
    p = p[p > 0]
    return float(max(0.0, -np.sum(p * np.log2(p))))


def von_neumann_entropy(rho):
    """``-tr rho log2 rho`` for a density matrix or Hermitian PSD array."""
    return entropy_of_spectrum(hermitian_eigenvalues(rho))


def binary_entropy(x):
    """``H(x) = -x log2 x - (1-x) log2 (1-x)``."""
    if x < -1e-12 or x > 1 + 1e-12:
        raise ValueError(f"binary entropy argument {x!r} outside [0, 1]")
    x = min(max(x, 0.0), 1.0)
    return entropy_of_spectrum([x, 1.0 - x])
