"""Kratzer-family potentials in A/r^2 - B/r + C normal form.

The Kratzer potential -De*(2*re/r - re^2/r^2) and its +De-shifted variant
De*((r-re)/r)^2 both fit this three-coefficient form, as does a pure
Coulomb tail (A = C = 0). The centrifugal term of the D-dimensional radial
equation folds into the same shape through the combined index M = D + 2l,
so every bound-state quantity below depends on (D, l) only via M.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .constants import DEFAULT_CONSTANTS, PhysicalConstants, two_mu_over_hbar2
from .errors import NoBoundState, NoClassicalRegion

__all__ = [
    "PotentialSpec",
    "QuantumState",
    "from_kratzer",
    "from_modified_kratzer",
    "lambda_param",
    "effective_potential",
    "effective_minimum",
    "turning_points",
]


@dataclass(frozen=True)
class PotentialSpec:
    """Coefficients of V(r) = A/r^2 - B/r + C.

    A: inverse-square strength (eV A^2), A >= 0.
    B: Coulomb strength (eV A), B > 0 so bound states below C exist.
    C: asymptotic offset (eV).
    """

    A: float
    B: float
    C: float

    def __post_init__(self) -> None:
        if self.A < 0.0:
            raise ValueError(f"A must be non-negative, got {self.A}")
        if not (self.B > 0.0):
            raise ValueError(f"B must be positive, got {self.B}")

    def value(self, r):
        """Bare potential V(r); r may be a scalar or array, all entries > 0."""
        r = np.asarray(r, dtype=float)
        if np.any(r <= 0.0):
            raise ValueError("r must be positive")
        out = self.A / r**2 - self.B / r + self.C
        return float(out) if out.ndim == 0 else out


@dataclass(frozen=True)
class QuantumState:
    """Quantum numbers (n, l) in spatial dimension dim >= 2."""

    n: int
    l: int
    dim: int

    def __post_init__(self) -> None:
        for name in ("n", "l", "dim"):
            v = getattr(self, name)
            if not isinstance(v, (int, np.integer)) or isinstance(v, bool):
                raise ValueError(f"{name} must be an integer, got {v!r}")
        if self.n < 0:
            raise ValueError(f"n must be >= 0, got {self.n}")
        if self.l < 0:
            raise ValueError(f"l must be >= 0, got {self.l}")
        if self.dim < 2:
            raise ValueError(f"dim must be >= 2, got {self.dim}")

    @property
    def M(self) -> int:
        """Combined angular/dimensional index D + 2l."""
        return self.dim + 2 * self.l


def from_kratzer(de: float, re: float) -> PotentialSpec:
    """Kratzer potential with well depth de (eV) and equilibrium length re (A)."""
    if not (de > 0.0):
        raise ValueError(f"de must be positive, got {de}")
    if not (re > 0.0):
        raise ValueError(f"re must be positive, got {re}")
    return PotentialSpec(A=de * re * re, B=2.0 * de * re, C=0.0)


def from_modified_kratzer(de: float, re: float) -> PotentialSpec:
    """Same well shifted by +de, so V(re) = 0 and V(inf) = de."""
    if not (de > 0.0):
        raise ValueError(f"de must be positive, got {de}")
    if not (re > 0.0):
        raise ValueError(f"re must be positive, got {re}")
    return PotentialSpec(A=de * re * re, B=2.0 * de * re, C=de)


def lambda_param(
    spec: PotentialSpec,
    mass: float,
    M: int,
    constants: PhysicalConstants = DEFAULT_CONSTANTS,
) -> float:
    """Effective angular index Lambda >= -1/2.

    Lambda*(Lambda+1) collects the true centrifugal barrier and the
    inverse-square part of the potential into a single term, keeping the
    (D, l) dependence entirely inside M = D + 2l.
    """
    if M < 2:
        raise ValueError(f"M must be >= 2, got {M}")
    tm = two_mu_over_hbar2(mass, constants)
    # 8*mu*A/hbar^2 == 4 * tm * A
    return 0.5 * (-1.0 + math.sqrt((M - 2.0) ** 2 + 4.0 * tm * spec.A))


def effective_potential(
    spec: PotentialSpec,
    mass: float,
    M: int,
    r,
    constants: PhysicalConstants = DEFAULT_CONSTANTS,
):
    """Effective radial potential Lambda(Lambda+1)*hbar^2/(2 mu r^2) - B/r + C."""
    r = np.asarray(r, dtype=float)
    if np.any(r <= 0.0):
        raise ValueError("r must be positive")
    tm = two_mu_over_hbar2(mass, constants)
    lam = lambda_param(spec, mass, M, constants)
    a_eff = lam * (lam + 1.0) / tm
    out = a_eff / r**2 - spec.B / r + spec.C
    return float(out) if out.ndim == 0 else out


def effective_minimum(
    spec: PotentialSpec,
    mass: float,
    M: int,
    constants: PhysicalConstants = DEFAULT_CONSTANTS,
) -> tuple[float, float]:
    """Location and value of the effective-potential minimum.

    The quadratic in x = 1/r has its vertex at x = B/(2*a_eff). Returns
    (r_min, V_min); for a_eff <= 0 there is no interior minimum and
    (0.0, -inf) is returned.
    """
    tm = two_mu_over_hbar2(mass, constants)
    lam = lambda_param(spec, mass, M, constants)
    a_eff = lam * (lam + 1.0) / tm
    if a_eff <= 0.0:
        return 0.0, -math.inf
    r_min = 2.0 * a_eff / spec.B
    return r_min, spec.C - spec.B**2 / (4.0 * a_eff)


def turning_points(
    spec: PotentialSpec,
    mass: float,
    M: int,
    E: float,
    constants: PhysicalConstants = DEFAULT_CONSTANTS,
) -> tuple[float, float]:
    """Classical turning points r_a <= r_b of the effective potential at energy E.

    Solves eps*r^2 - B*r + a_eff = 0 with eps = C - E. The larger root is
    computed from the quadratic formula and the smaller one from the root
    product, which stays accurate as E -> C where the roots separate by
    many orders of magnitude. For a vanishing inverse-square term the
    inner turning point degenerates to r_a = 0.
    """
    tm = two_mu_over_hbar2(mass, constants)
    lam = lambda_param(spec, mass, M, constants)
    a_eff = lam * (lam + 1.0) / tm
    eps = spec.C - E
    if eps <= 0.0:
        raise NoBoundState(f"E = {E} is not below the asymptote C = {spec.C}")
    if a_eff < 0.0:
        raise NoClassicalRegion(
            "effective potential is unbounded below (Lambda*(Lambda+1) < 0); "
            "no inner turning point exists"
        )
    disc = spec.B**2 - 4.0 * eps * a_eff
    if disc < 0.0:
        # allow E == V_min to round slightly below the vertex
        if disc > -1e-12 * spec.B**2:
            disc = 0.0
        else:
            raise NoClassicalRegion(
                f"E = {E} lies below the effective-potential minimum"
            )
    r_b = (spec.B + math.sqrt(disc)) / (2.0 * eps)
    r_a = a_eff / (eps * r_b) if a_eff > 0.0 else 0.0
    return r_a, r_b
