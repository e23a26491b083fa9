"""Plane-wave phonon transmission through layered stacks via transfer matrices.

Scalar per-polarization model: each branch propagates independently with no
mode conversion at interfaces. Refraction follows Snell's law on the slowness
sin(theta)/v; layers driven beyond their critical angle are handled on the
complex branch of cos(theta), which keeps the 2x2 characteristic matrix
unimodular so that R + T = 1 holds exactly for lossless stacks.
"""

from __future__ import annotations

import dataclasses
import enum
import math
from dataclasses import dataclass

import numpy as np

from .materials import Material, Polarization


class StackKind(enum.Enum):
    PERIODIC = "periodic"
    EXPONENTIAL_GRADED = "exponential_graded"


@dataclass(frozen=True)
class LayerStack:
    """Layers between two semi-infinite substrates (hot side first)."""

    hot_substrate: Material
    layers: tuple[tuple[Material, float], ...]
    cold_substrate: Material
    stack_id: str = ""

    def __post_init__(self):
        object.__setattr__(self, "layers", tuple((m, float(d)) for m, d in self.layers))
        for mat, d in self.layers:
            if d <= 0:
                raise ValueError(f"layer {mat.name}: thickness must be positive, got {d!r}")

    @property
    def total_thickness(self) -> float:
        return sum(d for _, d in self.layers)

    def reversed(self) -> "LayerStack":
        return LayerStack(self.cold_substrate, tuple(reversed(self.layers)),
                          self.hot_substrate, stack_id=self.stack_id)

    def transit_time(self, pol: Polarization) -> float:
        """Sum of d_i / v_i; sets the Fabry-Perot fringe period pi / transit."""
        return sum(d / m.speed(pol, fallback_transverse=True) for m, d in self.layers)


@dataclass(frozen=True)
class StackGeometrySpec:
    """Generator parameters for periodic or exponentially graded bilayer stacks."""

    kind: StackKind
    n_bilayers: int
    d0_a: float
    d0_b: float
    material_a: Material
    material_b: Material
    ratio: float = 1.0
    hot_substrate: Material | None = None
    cold_substrate: Material | None = None

    def __post_init__(self):
        if self.n_bilayers < 1:
            raise ValueError("n_bilayers must be >= 1")
        if self.d0_a <= 0 or self.d0_b <= 0:
            raise ValueError("first-bilayer thicknesses must be positive")
        if self.ratio < 1.0:
            raise ValueError("ratio must be >= 1")
        if self.kind is StackKind.PERIODIC and self.ratio != 1.0:
            raise ValueError("periodic stacks require ratio == 1")

    @property
    def total_thickness(self) -> float:
        s = sum(self.ratio**k for k in range(self.n_bilayers))
        return (self.d0_a + self.d0_b) * s


def generate_stack(spec: StackGeometrySpec, jitter_sigma: float = 0.0,
                   rng: np.random.Generator | None = None) -> LayerStack:
    """Expand a geometry spec into the explicit layer list.

    Bilayer k gets thicknesses (d0_a * r^k, d0_b * r^k). Optional Gaussian
    thickness jitter (relative sigma per layer) probes robustness to
    deposition variation; default off.
    """
    hot = spec.hot_substrate or spec.material_a
    cold = spec.cold_substrate or spec.material_a
    layers = []
    for k in range(spec.n_bilayers):
        scale = spec.ratio**k
        layers.append((spec.material_a, spec.d0_a * scale))
        layers.append((spec.material_b, spec.d0_b * scale))
    if jitter_sigma > 0.0:
        if rng is None:
            rng = np.random.default_rng(0)
        layers = [(m, d * max(1.0 + jitter_sigma * rng.standard_normal(), 1e-3))
                  for m, d in layers]
    kind = "per" if spec.kind is StackKind.PERIODIC else "exp"
    stack_id = f"{spec.material_a.name}-{spec.material_b.name}_{kind}_n{spec.n_bilayers}_r{spec.ratio:g}"
    return LayerStack(hot, tuple(layers), cold, stack_id=stack_id)


def fit_total_thickness(spec: StackGeometrySpec, target_total: float) -> StackGeometrySpec:
    """Rescale d0_a and d0_b by a common factor to hit the thickness budget."""
    if target_total <= 0:
        raise ValueError("target total thickness must be positive")
    factor = target_total / spec.total_thickness
    return dataclasses.replace(spec, d0_a=spec.d0_a * factor, d0_b=spec.d0_b * factor)


def _angles(stack: LayerStack, theta0: float, pol: Polarization):
    """Cosines of the propagation angle in each medium, complex where evanescent."""
    v0 = stack.hot_substrate.speed(pol, fallback_transverse=True)
    slowness = math.sin(theta0) / v0
    media = [stack.hot_substrate] + [m for m, _ in stack.layers] + [stack.cold_substrate]
    cosines = []
    for mat in media:
        v = mat.speed(pol, fallback_transverse=True)
        s = slowness * v
        cosines.append(np.sqrt(complex(1.0 - s * s)))
    return media, cosines


def transmission_and_reflection(stack: LayerStack, omega, theta0: float,
                                pol: Polarization = Polarization.TRANSVERSE):
    """Energy transmission and reflection coefficients for a plane wave.

    ``omega`` may be a scalar or an array; ``theta0`` is the incidence angle
    in the hot substrate. Returns (T, R) with R + T = 1 for lossless stacks.
    """
    omega_arr = np.asarray(omega, dtype=float)
    scalar = omega_arr.ndim == 0
    w = np.atleast_1d(omega_arr)
    if np.any(w <= 0):
        raise ValueError("omega must be positive")
    if not (0.0 <= theta0 < math.pi / 2):
        raise ValueError("theta0 must lie in [0, pi/2)")

    media, cosines = _angles(stack, theta0, pol)
    eta0 = media[0].density * media[0].speed(pol, True) * cosines[0].real
    eta_s = media[-1].density * media[-1].speed(pol, True) * cosines[-1]

    m11 = np.ones_like(w, dtype=complex)
    m12 = np.zeros_like(w, dtype=complex)
    m21 = np.zeros_like(w, dtype=complex)
    m22 = np.ones_like(w, dtype=complex)
    for (mat, d), cos_i in zip(stack.layers, cosines[1:-1]):
        v = mat.speed(pol, fallback_transverse=True)
        eta = mat.density * v * cos_i
        phase = w * d * cos_i / v
        c = np.cos(phase)
        s = np.sin(phase)
        a11, a12 = c, 1j * s / eta
        a21, a22 = 1j * eta * s, c
        m11, m12, m21, m22 = (
            m11 * a11 + m12 * a21,
            m11 * a12 + m12 * a22,
            m21 * a11 + m22 * a21,
            m21 * a12 + m22 * a22,
        )

    denom = eta0 * m11 + eta0 * eta_s * m12 + m21 + eta_s * m22
    t = 2.0 * eta0 / denom
    r = (eta0 * m11 + eta0 * eta_s * m12 - m21 - eta_s * m22) / denom
    T = (eta_s.real / eta0) * np.abs(t) ** 2
    R = np.abs(r) ** 2
    if scalar:
        return float(T[0]), float(R[0])
    return T, R


def transmission(stack: LayerStack, omega, theta0: float,
                 pol: Polarization = Polarization.TRANSVERSE):
    """Energy transmission coefficient in [0, 1]; see transmission_and_reflection."""
    T, _ = transmission_and_reflection(stack, omega, theta0, pol)
    return T
