"""Brute-force route to discord and negativity.

Nothing here uses the closed forms: measurements on the qubit are
enumerated over the Bloch sphere, post-measurement states are built
numerically and their entropies come from the eigensolver. Works for any
``(d x 2)`` density matrix in the product basis.
"""
from dataclasses import dataclass
from math import acos, atan2, cos, pi, sin

import numpy as np

from .linalg import (
    A,
    B,
    hermitian_eigenvalues,
    partial_trace,
    partial_transpose,
    von_neumann_entropy,
)

PAULI = (
    np.array([[0, 1], [1, 0]], dtype=complex),
    np.array([[0, -1j], [1j, 0]], dtype=complex),
    np.array([[1, 0], [0, -1]], dtype=complex),
)
DEGENERATE_P = 1e-14
UNIT_TOL = 1e-12


@dataclass(frozen=True)
class MeasurementDirection:
    """Unit Bloch vector; outcome 0 projects onto ``+z.sigma``."""

    z1: float
    z2: float
    z3: float

    def __post_init__(self):
        norm = self.z1 ** 2 + self.z2 ** 2 + self.z3 ** 2
        if abs(norm - 1.0) > UNIT_TOL:
            raise ValueError(f"direction is not a unit vector (|z|^2 = {norm!r})")

    @classmethod
    def from_angles(cls, theta, phi):
        return cls(sin(theta) * cos(phi), sin(theta) * sin(phi), cos(theta))

    @property
    def vector(self):
        return np.array([self.z1, self.z2, self.z3])

    def angles(self):
        return acos(max(-1.0, min(1.0, self.z3))), atan2(self.z2, self.z1)


@dataclass(frozen=True)
class Outcome:
    p: float
    state: np.ndarray
    degenerate: bool


@dataclass(frozen=True)
class MeasurementEnsemble:
    outcomes: tuple


def direction_from_unitary(t, y):
    """Bloch direction measured by ``B_k = V |k><k| V^dag`` with ``V = t + i y.sigma``.

    Uses the sigma_3 column of the rotation ``V^dag sigma_i V``:
    ``(2(t y2 + y1 y3), 2(-t y1 + y2 y3), t^2 + y3^2 - y1^2 - y2^2)``.
    """
    y1, y2, y3 = (float(v) for v in y)
    norm = t * t + y1 * y1 + y2 * y2 + y3 * y3
    if abs(norm - 1.0) > UNIT_TOL:
        raise ValueError(f"(t, y) is not normalized (t^2 + |y|^2 = {norm!r})")
    return MeasurementDirection(
        2 * (t * y2 + y1 * y3),
        2 * (-t * y1 + y2 * y3),
        t * t + y3 * y3 - y1 * y1 - y2 * y2,
    )


def projectors(d):
    """``((I + z.sigma)/2, (I - z.sigma)/2)``."""
    zs = sum(c * s for c, s in zip(d.vector, PAULI))
    eye = np.eye(2, dtype=complex)
    return (eye + zs) / 2, (eye - zs) / 2


def measure(rho, d):
    """Post-measurement ensemble of the spin-j side after measuring the qubit."""
    if rho.dim_b != 2:
        raise ValueError(f"measured subsystem must be a qubit, got dim_b={rho.dim_b}")
    eye_a = np.eye(rho.dim_a)
    outcomes = []
    for proj in projectors(d):
        op = np.kron(eye_a, proj)
        post = op @ rho.mat @ op
        p = float(np.trace(post).real)
        if p < DEGENERATE_P:
            outcomes.append(Outcome(p, np.zeros((rho.dim_a, rho.dim_a), complex), True))
            continue
        cond = partial_trace(post, A, rho.dim_a, 2) / p
        outcomes.append(Outcome(p, cond, False))
    return MeasurementEnsemble(tuple(outcomes))


def conditional_entropy(rho, d):
    """``sum_k p_k S(rho_k)`` for the measurement along ``d``."""
    return sum(
        o.p * von_neumann_entropy(o.state)
        for o in measure(rho, d).outcomes
        if not o.degenerate
    )


def _bloch_blocks(rho):
    # rho_a and the three tr_b[(1 (x) sigma_i) rho]; B_k gives (rho_a +/- z.M)/2
    t = rho.mat.reshape(rho.dim_a, 2, rho.dim_a, 2)
    rho_a = np.einsum("ibjb->ij", t)
    ms = np.stack([np.einsum("icjd,dc->ij", t, s) for s in PAULI])
    return rho_a, ms


def conditional_entropies(rho, directions):
    """Vectorized :func:`conditional_entropy` over an ``(n, 3)`` array of unit vectors."""
    rho_a, ms = _bloch_blocks(rho)
    z = np.asarray(directions, dtype=float).reshape(-1, 3)
    zm = np.einsum("nk,kij->nij", z, ms)
    total = np.zeros(len(z))
    for sign in (1.0, -1.0):
        unnorm = (rho_a[None] + sign * zm) / 2
        p = np.einsum("nii->n", unnorm).real
        ok = p >= DEGENERATE_P
        vals = np.linalg.eigvalsh(unnorm[ok] / p[ok, None, None])
        if vals.size and vals.min() < -1e-10:
            raise ValueError(f"negative conditional eigenvalue {vals.min():.3g}")
        vals = np.clip(vals, 0.0, 1.0)
        with np.errstate(divide="ignore", invalid="ignore"):
            ent = -np.sum(np.where(vals > 0, vals * np.log2(vals), 0.0), axis=1)
        total[ok] += p[ok] * ent
    return total


def sphere_grid(n_theta=64, n_phi=128):
    """``(n_theta * n_phi, 3)`` directions, cos(theta) uniform at cell centres."""
    if n_theta < 8 or n_phi < 8:
        raise ValueError("grid needs at least 8 points per angle")
    cos_t = 1.0 - (2 * np.arange(n_theta) + 1) / n_theta
    phi = 2 * pi * np.arange(n_phi) / n_phi
    ct, pp = np.meshgrid(cos_t, phi, indexing="ij")
    st = np.sqrt(1.0 - ct ** 2)
    return np.stack([st * np.cos(pp), st * np.sin(pp), ct], axis=-1).reshape(-1, 3)


def minimize_conditional_entropy(rho, grid=(64, 128), refine_steps=20):
    """Minimum of the measured conditional entropy over the qubit Bloch sphere.

    A full ``(theta, phi)`` grid scan is followed by ``refine_steps`` rounds
    of coordinate descent in the angles with a halving step.

    Returns
    -------
    minimum : float
        Smallest conditional entropy found, in bits.
    direction : MeasurementDirection
        Where it was found.
    spread : float
        Max minus min of the conditional entropy over the grid. Zero
        (up to round-off) when no measurement is preferred.
    """
    n_theta, n_phi = grid
    dirs = sphere_grid(n_theta, n_phi)
    vals = conditional_entropies(rho, dirs)
    # lexicographic tie-break: first grid index wins
    best = int(np.argmin(vals))
    spread = float(vals.max() - vals.min())
    best_val = float(vals[best])
    z = dirs[best]
    theta, phi = acos(max(-1.0, min(1.0, z[2]))), atan2(z[1], z[0])

    def at(th, ph):
        return float(conditional_entropies(
            rho, [[sin(th) * cos(ph), sin(th) * sin(ph), cos(th)]])[0])

    step_t, step_p = pi / n_theta, 2 * pi / n_phi
    for _ in range(refine_steps):
        for dt, dp in ((step_t, 0), (-step_t, 0), (0, step_p), (0, -step_p)):
            val = at(theta + dt, phi + dp)
            if val < best_val:
                best_val, theta, phi = val, theta + dt, phi + dp
        step_t /= 2
        step_p /= 2
    direction = MeasurementDirection.from_angles(theta, phi)
    return best_val, direction, spread


def numeric_discord(rho, grid=(64, 128), return_spread=False):
    """``S(rho_b) - S(rho) + min_B sum_k p_k S(rho_k)`` with measurements on b.

    With ``return_spread`` the landscape spread from the grid scan is
    returned as a second value.
    """
    s_b = von_neumann_entropy(partial_trace(rho, B))
    s_ab = von_neumann_entropy(rho)
    minimum, _, spread = minimize_conditional_entropy(rho, grid)
    discord = s_b - s_ab + minimum
    return (discord, spread) if return_spread else discord


def numeric_classical(rho, grid=(64, 128)):
    """``S(rho_a) - min_B sum_k p_k S(rho_k)``."""
    minimum, _, _ = minimize_conditional_entropy(rho, grid)
    return von_neumann_entropy(partial_trace(rho, A)) - minimum


def numeric_mutual(rho):
    return (
        von_neumann_entropy(partial_trace(rho, A))
        + von_neumann_entropy(partial_trace(rho, B))
        - von_neumann_entropy(rho)
    )


def negativity(rho):
    """Sum of the magnitudes of the negative eigenvalues of ``rho^{T_b}``."""
    vals = hermitian_eigenvalues(partial_transpose(rho, B))
    return float(-np.sum(vals[vals < 0]))


def random_directions(n, rng):
    v = rng.normal(size=(n, 3))
    return v / np.linalg.norm(v, axis=1, keepdims=True)


__all__ = [
    "MeasurementDirection",
    "MeasurementEnsemble",
    "Outcome",
    "direction_from_unitary",
    "projectors",
    "measure",
    "conditional_entropy",
    "conditional_entropies",
    "sphere_grid",
    "minimize_conditional_entropy",
    "numeric_discord",
    "numeric_classical",
    "numeric_mutual",
    "negativity",
    "random_directions",
]
