"""Material registry: acoustic properties and bulk thermal conductivity tables.

Acoustic impedance is always derived on the fly as density * speed, never
stored. Bulk conductivity tables interpolate log-log because the tabulated
lambda(T) data spans three or more decades over the sub-Kelvin range.
"""

from __future__ import annotations

import csv
import enum
import json
import math
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

import numpy as np


class MissingPolarizationSpeed(ValueError):
    """Requested a sound speed the material does not provide."""


class OutOfRange(ValueError):
    """Temperature outside the validity window of a conductivity table."""


class Polarization(enum.Enum):
    TRANSVERSE = "transverse"
    LONGITUDINAL = "longitudinal"


@dataclass(frozen=True)
class Material:
    """Isotropic acoustic material (speeds in m/s, density in kg/m^3)."""

    name: str
    density: float
    v_trans: float
    v_long: float | None = None
    debye_freq: float | None = None

    def __post_init__(self):
        if self.density <= 0:
            raise ValueError(f"{self.name}: density must be positive")
        if self.v_trans <= 0:
            raise ValueError(f"{self.name}: v_trans must be positive")
        if self.v_long is not None and self.v_long <= 0:
            raise ValueError(f"{self.name}: v_long must be positive")

    def speed(self, pol: Polarization, fallback_transverse: bool = False) -> float:
        if pol is Polarization.TRANSVERSE:
            return self.v_trans
        if self.v_long is None:
            if fallback_transverse:
                return self.v_trans
            raise MissingPolarizationSpeed(f"{self.name} has no longitudinal sound speed")
        return self.v_long

    def impedance(self, pol: Polarization = Polarization.TRANSVERSE) -> float:
        """Acoustic impedance density * speed, in kg/(m^2 s)."""
        return self.density * self.speed(pol)


def impedance(material: Material, polarization: Polarization) -> float:
    return material.impedance(polarization)


# Published acoustic data for the mirror materials (transverse branch only);
# the Si substrate values are implementer-supplied literature defaults and are
# overridable via a materials JSON file.
_BUILTIN_MATERIALS = {
    "SiO2": Material("SiO2", density=2.41e3, v_trans=3.53e3),
    "Ta": Material("Ta", density=1.66e4, v_trans=2.04e3),
    "W": Material("W", density=1.93e4, v_trans=2.74e3),
    "Ir": Material("Ir", density=2.25e4, v_trans=3.07e3),
    "Si": Material("Si", density=2329.0, v_trans=5840.0, v_long=8430.0),
}


def get_material(name: str) -> Material:
    try:
        return _BUILTIN_MATERIALS[name]
    except KeyError:
        raise KeyError(f"unknown material {name!r}; known: {sorted(_BUILTIN_MATERIALS)}") from None


def load_materials_json(path: str | Path) -> dict[str, Material]:
    """Load a ``{name: {density, v_trans, v_long?, debye_freq?}}`` JSON file."""
    with open(path, encoding="utf-8") as fh:
        raw = json.load(fh)
    out = {}
    for name, props in raw.items():
        out[name] = Material(
            name=name,
            density=float(props["density"]),
            v_trans=float(props["v_trans"]),
            v_long=float(props["v_long"]) if props.get("v_long") is not None else None,
            debye_freq=float(props["debye_freq"]) if props.get("debye_freq") is not None else None,
        )
    return out


class BulkConductivityTable:
    """lambda(T) knot table with log-log piecewise-linear interpolation.

    Valid for T in [T_first / 2, T_last * 2]; inside that margin, queries
    beyond the knot range follow the end-segment slope. Each segment is an
    exact power law, so integrals are evaluated in closed form.
    """

    def __init__(self, material_name: str, knots):
        knots = [(float(t), float(lam)) for t, lam in knots]
        if len(knots) < 2:
            raise ValueError("conductivity table needs at least two knots")
        temps = np.array([t for t, _ in knots])
        lams = np.array([lam for _, lam in knots])
        if np.any(np.diff(temps) <= 0):
            raise ValueError("knot temperatures must be strictly increasing")
        if np.any(lams <= 0):
            raise ValueError("lambda must be positive at every knot")
        self.material_name = material_name
        self.temps = temps
        self.lams = lams

    @property
    def t_min(self) -> float:
        return self.temps[0] / 2.0

    @property
    def t_max(self) -> float:
        return self.temps[-1] * 2.0

    def _check_range(self, T: float):
        if not (self.t_min <= T <= self.t_max):
            raise OutOfRange(
                f"{self.material_name}: T={T!r} K outside [{self.t_min}, {self.t_max}] K"
            )

    def lambda_at(self, T: float) -> float:
        self._check_range(T)
        lt = math.log(T)
        ltk = np.log(self.temps)
        i = int(np.clip(np.searchsorted(ltk, lt, side="right") - 1, 0, len(ltk) - 2))
        slope = math.log(self.lams[i + 1] / self.lams[i]) / (ltk[i + 1] - ltk[i])
        return float(self.lams[i] * math.exp(slope * (lt - ltk[i])))

    def integrate(self, t_lo: float, t_hi: float) -> float:
        """Exact integral of the interpolant over [t_lo, t_hi], in W/m."""
        if t_lo > t_hi:
            raise ValueError("t_lo must not exceed t_hi")
        self._check_range(t_lo)
        self._check_range(t_hi)
        if t_lo == t_hi:
            return 0.0
        # segment boundaries, extended by the end slopes to cover the margin
        edges = [t_lo]
        for t in self.temps:
            if t_lo < t < t_hi:
                edges.append(float(t))
        edges.append(t_hi)
        total = 0.0
        ltk = np.log(self.temps)
        for a, b in zip(edges[:-1], edges[1:]):
            mid = math.sqrt(a * b)
            i = int(np.clip(np.searchsorted(ltk, math.log(mid), side="right") - 1, 0, len(ltk) - 2))
            t_ref = self.temps[i]
            lam_ref = self.lams[i]
            s = math.log(self.lams[i + 1] / self.lams[i]) / (ltk[i + 1] - ltk[i])
            if abs(s + 1.0) < 1e-12:
                total += lam_ref * t_ref * math.log(b / a)
            else:
                total += lam_ref * t_ref / (s + 1.0) * ((b / t_ref) ** (s + 1.0) - (a / t_ref) ** (s + 1.0))
        return total


def bulk_lambda(table: BulkConductivityTable, T: float) -> float:
    return table.lambda_at(T)


def integrate_lambda(table: BulkConductivityTable, t_lo: float, t_hi: float) -> float:
    return table.integrate(t_lo, t_hi)


def load_conductivity_csv(path: str | Path, material_name: str | None = None) -> BulkConductivityTable:
    """Read a ``T_K,lambda_W_per_mK`` CSV into a conductivity table."""
    path = Path(path)
    knots = []
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.DictReader(row for row in fh if not row.startswith("#"))
        if reader.fieldnames is None or "T_K" not in reader.fieldnames or "lambda_W_per_mK" not in reader.fieldnames:
            raise ValueError(f"{path}: expected header 'T_K,lambda_W_per_mK'")
        for row in reader:
            knots.append((float(row["T_K"]), float(row["lambda_W_per_mK"])))
    return BulkConductivityTable(material_name or path.stem, knots)


_TABLE_FILES = {
    # Al-1%Si wire-bond alloy, superconducting regime (two published anchors)
    "al1si": "lambda_al1si.csv",
    # normal-state Al bond-wire alloy, digitized from the cited source
    "al1200": "lambda_al1200.csv",
    # bulk Si substrate, boundary-scattering regime (lambda ~ T^3)
    "si": "lambda_si.csv",
}
_table_cache: dict[str, BulkConductivityTable] = {}


def get_conductivity_table(name: str) -> BulkConductivityTable:
    if name not in _TABLE_FILES:
        raise KeyError(f"unknown conductivity table {name!r}; known: {sorted(_TABLE_FILES)}")
    if name not in _table_cache:
        ref = resources.files("cryoflux").joinpath("data", _TABLE_FILES[name])
        with resources.as_file(ref) as path:
            _table_cache[name] = load_conductivity_csv(path, material_name=name)
    return _table_cache[name]
