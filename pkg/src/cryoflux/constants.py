"""Physical constants (SI, 2019 redefinition values)."""

import math

HBAR = 1.054571817e-34      # J*s
K_B = 1.380649e-23          # J/K
LORENZ_NUMBER = 2.44e-8     # W*Ohm/K^2

# Unit conversions for presentation: 1 mW/cm^2 = 10 W/m^2
W_PER_M2_PER_MW_PER_CM2 = 10.0


def phonon_stefan_constant(speed: float) -> float:
    """One-sided blackbody phonon flux prefactor for a single branch.

    Flux with unit transmission is ``phonon_stefan_constant(v) * T**4``.
    """
    return math.pi**2 * K_B**4 / (120.0 * HBAR**3 * speed**2)
