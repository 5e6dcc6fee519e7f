"""Physical constants and species data used throughout the package.

Values are pinned here (CODATA 2018 / SI exact) rather than imported from
scipy.constants so that golden-number tests are bit-reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass

HBAR = 1.054571817e-34  # J s
K_B = 1.380649e-23  # J / K (exact SI)
ATOMIC_MASS_UNIT = 1.66053906660e-27  # kg


@dataclass(frozen=True)
class Species:
    """Atomic species preset: mass plus optional default interaction data."""

    name: str
    mass: float  # kg
    scattering_length: float | None = None  # m, s-wave
    three_body_l3: float | None = None  # m^6 / s


# 87Rb: 86.909180527 u; a = 5.31 nm (~100 Bohr radii, standard value for the
# F=1 ground state); L3 measured for F=1, m_F=-1.
RB87 = Species(
    name="rb87",
    mass=86.909180527 * ATOMIC_MASS_UNIT,
    scattering_length=5.31e-9,
    three_body_l3=5.8e-42,
)
RB87_L3_UNCERTAINTY = 1.9e-42  # m^6 / s, one sigma

# 174Yb: 173.9388664 u.  Mass preset only; scattering length must be supplied.
YB174 = Species(name="yb174", mass=173.9388664 * ATOMIC_MASS_UNIT)

SPECIES_PRESETS = {s.name: s for s in (RB87, YB174)}
