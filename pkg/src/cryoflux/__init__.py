"""Cryogenic phonon heat-flux toolkit.

Simulates phonon heat transmission through layered acoustic-mirror stacks,
extracts heat integrals and effective thermal conductivities from cryogenic
measurement sequences via a self-consistent iterative procedure, and
evaluates packaging heat budgets (vias, bond wires, impedance stacks).
"""

__version__ = "0.1.0"

from .materials import (
    Material,
    Polarization,
    BulkConductivityTable,
    MissingPolarizationSpeed,
    OutOfRange,
    get_material,
    get_conductivity_table,
)
from .acoustics import LayerStack, StackGeometrySpec, transmission, generate_stack, fit_total_thickness
from .transport import SpectralGrid, SimulatedHeatCurve, one_sided_flux, net_flux, simulate_curve, blackbody_flux
from .analysis import (
    SensorCalibration,
    MeasurementSequence,
    HeatIntegralCurve,
    ConvergenceReport,
    calibrate_sequences,
    loocv_check,
    extract_heat_integral,
    align_offsets,
    exclude_outliers,
)
from .budget import (
    ViaSpec,
    ImpedanceStack,
    BondWireSpec,
    via_flux_normal,
    via_flux_superconducting,
    impedance_of_layer,
    bond_wire_power,
    lateral_gradient_bound,
    budget_check,
)
from .optimize import DesignProblem, optimize
