"""Closed-form correlation measures for the SU(2)-invariant family.

All quantities are in bits. Measurements for classical correlations and
discord act on the spin-1/2 subsystem.
"""
from dataclasses import asdict, dataclass
from math import log2, sqrt

import numpy as np

from .angular import PLUS, MINUS, cg_pair, check_two_j
from .linalg import binary_entropy, entropy_of_spectrum
from .states import SU2State

THRESHOLD_BAND = 1e-12


def _xlog2x(x):
    return x * log2(x) if x > 0 else 0.0


def _paired_values(two_j, center, deltas):
    # integer j: the n = j pair collapses onto the center and is kept once
    vals = []
    for n, d in enumerate(deltas):
        if two_j % 2 == 0 and 2 * n == two_j:
            vals.append(center)
        else:
            vals.extend((center + d, center - d))
    return np.array(vals)


def mutual_information(s):
    """``1 + log2(2j+1) + F log2(F/2j) + (1-F) log2((1-F)/(2j+2))``."""
    f, tj = s.f, s.two_j
    out = 1.0 + log2(tj + 1)
    if f > 0:
        out += f * log2(f / tj)
    if f < 1:
        out += (1 - f) * log2((1 - f) / (tj + 2))
    return out


def post_measurement_spectrum(s):
    """Eigenvalues of the conditional spin-j state after any qubit projective
    measurement.

    Returns ``2j+1`` values ``1/(2j+1) +/- (j-n)|F(2j+1)-j| / (j(j+1)(2j+1))``
    for ``n = 0 .. floor(j)``.
    """
    j = s.j
    center = 1 / (2 * j + 1)
    slope = abs(s.f * (2 * j + 1) - j) / (j * (j + 1) * (2 * j + 1))
    deltas = [(j - n) * slope for n in range(int(j) + 1)]
    return _paired_values(s.two_j, center, deltas)


def post_measurement_states_direct(s):
    """Diagonals of ``p_0 rho_0`` and ``p_1 rho_1`` for a measurement along z.

    Rotational symmetry moves any measurement direction onto z, where the
    conditional states are diagonal in ``m_a`` with weights taken straight
    from the Clebsch-Gordan amplitudes. Returns ``(unnormalized, spectra)``:
    the two raw diagonals (each of trace 1/2) and the same vectors scaled
    by 2, all indexed by ``m_a = j .. -j``.
    """
    tj = s.two_j
    up = np.zeros(tj + 1)
    down = np.zeros(tj + 1)
    for branch, weight, lo in ((MINUS, s.weight_minus, tj - 1), (PLUS, s.weight_plus, tj + 1)):
        for two_m in range(lo, -lo - 1, -2):
            pair = cg_pair(tj, two_m, branch)
            if abs(two_m - 1) <= tj:
                up[(tj - (two_m - 1)) // 2] += weight * pair.a ** 2
            if abs(two_m + 1) <= tj:
                down[(tj - (two_m + 1)) // 2] += weight * pair.b ** 2
    return (up, down), (2 * up, 2 * down)


def classical_correlations(s):
    """``log2(2j+1) + sum lambda log2 lambda`` over the conditional spectrum."""
    return log2(s.two_j + 1) - entropy_of_spectrum(post_measurement_spectrum(s))


def quantum_discord(s):
    """Mutual information minus classical correlations.

    Written out: ``1 + F log2(F/2j) + (1-F) log2((1-F)/(2j+2))
    - sum lambda log2 lambda``.
    """
    f, tj = s.f, s.two_j
    out = 1.0
    if f > 0:
        out += f * log2(f / tj)
    if f < 1:
        out += (1 - f) * log2((1 - f) / (tj + 2))
    return out - sum(_xlog2x(x) for x in post_measurement_spectrum(s))


def discord_large_j(s):
    """Leading large-j form of the discord, evaluated as written.

    ``1 + F log2 F + (1-F) log2(1-F) - log2(2j+1) - sum L log2 L`` with
    ``L = 1/2j +/- (j-n)|2F-1|/(2j^2)``. Depends on ``F`` only through
    ``|2F-1|``, so it is symmetric under ``F -> 1-F``. The ``L`` do not sum
    to one at finite j.
    """
    j, f = s.j, s.f
    # fold onto F <= 1/2 so F and 1-F share one evaluation path
    lo = min(f, 1.0 - f)
    spread = 1.0 - 2.0 * lo
    deltas = [(j - n) * spread / (2 * j * j) for n in range(int(j) + 1)]
    lam = _paired_values(s.two_j, 1 / (2 * j), deltas)
    out = 1.0 + _xlog2x(lo) + _xlog2x(1.0 - lo) - log2(2 * j + 1)
    return out - sum(_xlog2x(x) for x in lam)


def separability_threshold(two_j):
    """``F_s = 2j/(2j+1)``; entangled exactly above it."""
    tj = check_two_j(two_j)
    return tj / (tj + 1)


def discord_zero_point(two_j):
    """``F_d = j/(2j+1)``, where the state is maximally mixed."""
    tj = check_two_j(two_j)
    return tj / (2 * (tj + 1))


def entanglement_of_formation(s):
    """Zero up to ``F_s``; above it ``H((sqrt F - sqrt(2j(1-F)))^2 / (2j+1))``."""
    f, tj = s.f, s.two_j
    if f <= separability_threshold(tj) + THRESHOLD_BAND:
        return 0.0
    x = (sqrt(f) - sqrt(tj * (1 - f))) ** 2 / (tj + 1)
    return binary_entropy(x)


@dataclass(frozen=True)
class CorrelationReport:
    two_j: int
    F: float
    mutual: float
    classical: float
    discord: float
    discord_large_j: float
    eof: float
    negativity: float

    def as_dict(self):
        return asdict(self)


def correlation_report(s):
    """Every measure at one ``(j, F)``; negativity comes from the numeric
    partial transpose."""
    from .oracle import negativity
    from .states import build_product_basis

    mutual = mutual_information(s)
    classical = classical_correlations(s)
    return CorrelationReport(
        two_j=s.two_j,
        F=s.f,
        mutual=mutual,
        classical=classical,
        discord=mutual - classical,
        discord_large_j=discord_large_j(s),
        eof=entanglement_of_formation(s),
        negativity=negativity(build_product_basis(s)),
    )


__all__ = [
    "SU2State",
    "CorrelationReport",
    "correlation_report",
    "mutual_information",
    "post_measurement_spectrum",
    "post_measurement_states_direct",
    "classical_correlations",
    "quantum_discord",
    "discord_large_j",
    "entanglement_of_formation",
    "separability_threshold",
    "discord_zero_point",
]
