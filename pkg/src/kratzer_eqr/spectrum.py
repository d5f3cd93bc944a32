"""Closed-form bound-state energies and the interdimensional degeneracy map.

E(n, M) = C - (mu/2 hbar^2) * (B / n_tilde)^2 with n_tilde = n + 1 + Lambda.
Because Lambda depends on (D, l) only through M = D + 2l, any two states
sharing (n, M) get bit-identical energies, which is the interdimensional
degeneracy (n, l, D) -> (n, l +- 1, D -+ 2).
"""

from __future__ import annotations

from dataclasses import dataclass

from .constants import DEFAULT_CONSTANTS, PhysicalConstants, two_mu_over_hbar2
from .potential import PotentialSpec, QuantumState, from_kratzer, from_modified_kratzer, lambda_param

__all__ = [
    "EnergyLevel",
    "energy_level",
    "kratzer_energy",
    "modified_kratzer_energy",
    "degenerate_partners",
]

# Closed-form results stay finite for any n, l, but published tables only
# cover small quantum numbers; the CLI warns beyond these.
MAX_TABLED_N = 200
MAX_TABLED_L = 200
MAX_TABLED_DIM = 12


@dataclass(frozen=True)
class EnergyLevel:
    """One bound level: its quantum state, energy (eV) and EQR parameters."""

    state: QuantumState
    energy: float
    lam: float
    n_tilde: float


def energy_level(
    spec: PotentialSpec,
    mass: float,
    state: QuantumState,
    constants: PhysicalConstants = DEFAULT_CONSTANTS,
) -> EnergyLevel:
    """Bound-state energy of `state` in the given potential."""
    tm = two_mu_over_hbar2(mass, constants)
    lam = lambda_param(spec, mass, state.M, constants)
    n_tilde = state.n + 1.0 + lam
    energy = spec.C - tm * spec.B**2 / (4.0 * n_tilde**2)
    return EnergyLevel(state=state, energy=energy, lam=lam, n_tilde=n_tilde)


def kratzer_energy(
    de: float,
    re: float,
    mass: float,
    state: QuantumState,
    constants: PhysicalConstants = DEFAULT_CONSTANTS,
) -> float:
    """Energy (eV) in the plain Kratzer well (asymptote at 0)."""
    return energy_level(from_kratzer(de, re), mass, state, constants).energy


def modified_kratzer_energy(
    de: float,
    re: float,
    mass: float,
    state: QuantumState,
    constants: PhysicalConstants = DEFAULT_CONSTANTS,
) -> float:
    """Energy (eV) in the +de-shifted well; always below de."""
    return energy_level(from_modified_kratzer(de, re), mass, state, constants).energy


def degenerate_partners(
    state: QuantumState,
    d_range: tuple[int, int] = (2, MAX_TABLED_DIM),
) -> list[QuantumState]:
    """All states sharing (n, M) with dimension inside d_range.

    The list includes `state` itself when its dimension is in range, ordered
    by increasing dimension. Only dimensions with the same parity as M can
    appear, since l = (M - D)/2 must be a non-negative integer.
    """
    d_min, d_max = d_range
    if d_min < 2:
        raise ValueError(f"dimensions below 2 are not supported, got d_min = {d_min}")
    if d_max < d_min:
        raise ValueError(f"empty dimension range ({d_min}, {d_max})")
    m = state.M
    partners = []
    start = d_min if (d_min - m) % 2 == 0 else d_min + 1
    for d in range(start, d_max + 1, 2):
        if d > m:
            break
        partners.append(QuantumState(n=state.n, l=(m - d) // 2, dim=d))
    return partners
