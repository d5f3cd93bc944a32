"""Unit system and physical constants.

Everything downstream works in a single internal unit system: energies in
eV, lengths in Angstrom, masses in atomic mass units (amu). The two
constants that tie these together are ``hbar_c`` (eV A) and ``amu_c2``
(eV per amu); both can be overridden, e.g. to calibrate against published
reference tables.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Mapping

__all__ = [
    "PhysicalConstants",
    "DEFAULT_CONSTANTS",
    "amu_to_energy",
    "wavenumber_to_ev",
    "two_mu_over_hbar2",
]

# 1 cm = 1e8 Angstrom
_ANGSTROM_PER_CM = 1.0e8


@dataclass(frozen=True)
class PhysicalConstants:
    """Conversion constants for the eV/Angstrom/amu unit system.

    hbar_c: reduced Planck constant times c, in eV A.
    amu_c2: rest energy of one atomic mass unit, in eV.
    """

    hbar_c: float = 1973.29
    amu_c2: float = 9.31494028e8

    def __post_init__(self) -> None:
        if not (self.hbar_c > 0.0):
            raise ValueError(f"hbar_c must be positive, got {self.hbar_c}")
        if not (self.amu_c2 > 0.0):
            raise ValueError(f"amu_c2 must be positive, got {self.amu_c2}")

    def replace(self, hbar_c: float | None = None, amu_c2: float | None = None) -> "PhysicalConstants":
        """Return a copy with any given field overridden."""
        return PhysicalConstants(
            hbar_c=self.hbar_c if hbar_c is None else hbar_c,
            amu_c2=self.amu_c2 if amu_c2 is None else amu_c2,
        )

    @classmethod
    def from_mapping(cls, data: Mapping[str, float], base: "PhysicalConstants" | None = None) -> "PhysicalConstants":
        """Build constants from a dict with optional hbar_c / amu_c2 keys."""
        base = base if base is not None else DEFAULT_CONSTANTS
        unknown = set(data) - {"hbar_c", "amu_c2"}
        if unknown:
            raise ValueError(f"unknown constants field(s): {sorted(unknown)}")
        return base.replace(
            hbar_c=data.get("hbar_c"),
            amu_c2=data.get("amu_c2"),
        )


DEFAULT_CONSTANTS = PhysicalConstants()


def amu_to_energy(mass: float, constants: PhysicalConstants = DEFAULT_CONSTANTS) -> float:
    """Rest energy (eV) of a mass given in amu."""
    if not (mass > 0.0):
        raise ValueError(f"mass must be positive, got {mass}")
    return mass * constants.amu_c2


def wavenumber_to_ev(w: float, constants: PhysicalConstants = DEFAULT_CONSTANTS) -> float:
    """Convert a spectroscopic wavenumber (cm^-1) to an energy (eV).

    E = 2 pi * hbar_c * w, with w expressed per Angstrom.
    """
    if w < 0.0:
        raise ValueError(f"wavenumber must be non-negative, got {w}")
    return w / _ANGSTROM_PER_CM * 2.0 * math.pi * constants.hbar_c


def two_mu_over_hbar2(mass: float, constants: PhysicalConstants = DEFAULT_CONSTANTS) -> float:
    """The recurring 2*mu/hbar^2 factor, in 1/(eV A^2)."""
    return 2.0 * amu_to_energy(mass, constants) / (constants.hbar_c * constants.hbar_c)
