"""Far-field double-slit coincidence patterns and Fourier mode extraction.

Each particle passes a double slit and lands at ``z`` on a screen a distance
``L`` away.  In the Fraunhofer limit the path lengths are ``L -+ theta z`` and
the amplitude of basis state ``i`` at ``(z_1, ..., z_n)`` is

    psi_i(z) = prod_p exp(i k sigma_ip theta z_p) / L,   sigma = -1 (slit 1), +1 (slit 2)

with the common phase ``exp(i n k L)`` dropped.  The coincidence density is
``sum_ij rho_ij psi_i conj(psi_j)``.  With constant amplitudes (oracle mode)
it is a trig polynomial of period ``pi / (k theta)`` per axis, so the
rectangle rule on a uniform periodic grid recovers every mode coefficient
exactly.  Display mode keeps the ``1/(L^(2n-1) [L + 2 theta sum sigma z])``
envelopes on the slit-resolved terms.
"""

import warnings
from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Callable, Optional

import numpy as np

from .errors import (
    DimensionMismatch,
    EnvelopeSingularity,
    FarFieldWarning,
    GridTooCoarse,
    ParameterOutOfRange,
)
from .interference2 import CoefficientGroups2Q, coefficient_groups_2q, i2_from_groups
from .interference3 import CoefficientGroups3Q, coefficient_groups_3q, i3_from_groups
from .states import as_array, partial_trace

DEFAULT_GRID = 16
MIN_GRID = 8
FAR_FIELD_RATIO = 1e-2
PARTICLE_INDEX = {"A": 0, "B": 1, "C": 2}


@dataclass(frozen=True)
class SlitGeometry:
    """Screen distance ``L``, half-opening angle ``theta``, wavenumber ``k``.

    ``d`` (slit spacing) is carried for the record only.  Defaults give a
    fringe period of 0.05 (in the units of ``L``).
    """

    L: float = 1.0
    theta: float = 0.01
    k: float = 2 * np.pi * 1e3
    d: Optional[float] = None

    def __post_init__(self):
        for name in ("L", "theta", "k"):
            v = getattr(self, name)
            if not (np.isfinite(v) and v > 0):
                raise ParameterOutOfRange(f"{name} must be positive, got {v}")
        if self.theta * self.period > FAR_FIELD_RATIO * self.L:
            warnings.warn(
                f"theta * period = {self.theta * self.period:.3g} is not small against "
                f"L = {self.L:.3g}; far-field approximation is poor", FarFieldWarning,
                stacklevel=2)

    @property
    def period(self) -> float:
        return np.pi / (self.k * self.theta)

    def axis(self, n: int = DEFAULT_GRID) -> np.ndarray:
        """``n`` uniform samples spanning ``[-period/2, period/2)``."""
        return -self.period / 2 + self.period * np.arange(n) / n


@dataclass(frozen=True, eq=False)
class GridDensity:
    """Density sampled on the tensor grid ``axes`` (one period per axis)."""

    axes: tuple
    values: np.ndarray
    labels: tuple = field(default=("zA", "zB", "zC"))

    @property
    def ndim(self) -> int:
        return len(self.axes)

    def oscillation_amplitude(self) -> float:
        """Half the peak-to-peak variation of ``values``."""
        return float((self.values.max() - self.values.min()) / 2)


def _slit_signs(n_qubits):
    # sigma_ip for every basis index i, qubit A most significant
    return np.array([[2 * ((i >> (n_qubits - 1 - p)) & 1) - 1 for p in range(n_qubits)]
                     for i in range(2 ** n_qubits)], dtype=float)


def path_amplitudes(g: SlitGeometry, coords) -> np.ndarray:
    """Amplitudes ``psi_i`` with shape ``coords[0].shape + (2**n,)``."""
    coords = np.broadcast_arrays(*[np.asarray(z, dtype=float) for z in coords])
    sig = _slit_signs(len(coords))
    phase = sum(sig[:, p] * coords[p][..., None] for p in range(len(coords)))
    return np.exp(1j * g.k * g.theta * phase) / g.L ** len(coords)


def _envelope_terms(rho, g, coords):
    n = len(coords)
    sig = _slit_signs(n)
    coords = np.broadcast_arrays(*[np.asarray(z, dtype=float) for z in coords])
    denom = g.L + 2 * g.theta * sum(sig[:, p] * coords[p][..., None] for p in range(n))
    bad = denom <= 0
    if np.any(bad):
        idx = np.argwhere(bad)[0]
        loc = tuple(np.asarray(c)[tuple(idx[:-1])] for c in coords)
        raise EnvelopeSingularity(f"envelope denominator vanishes near z={loc}", loc)
    diag = np.real(np.diag(rho))
    with_env = (diag / (g.L ** (2 * n - 1) * denom)).sum(axis=-1)
    flat = diag.sum() / g.L ** (2 * n)
    return with_env - flat


def farfield_density(m, g: SlitGeometry, *coords, envelope: bool = False):
    """Coincidence density at ``coords`` (one array-like per particle, broadcast)."""
    rho = as_array(m)
    n = len(coords)
    if rho.shape != (2 ** n, 2 ** n):
        raise DimensionMismatch(f"{n} coordinates need a {2 ** n}x{2 ** n} matrix, got {rho.shape}")
    psi = path_amplitudes(g, coords)
    dens = np.einsum("...i,ij,...j->...", psi, rho, psi.conj()).real
    if envelope:
        dens = dens + _envelope_terms(rho, g, coords)
    return dens if dens.ndim else float(dens)


def farfield_density_2q(m, g: SlitGeometry, zA, zB, envelope: bool = False):
    return farfield_density(m, g, zA, zB, envelope=envelope)


def farfield_density_3q(m, g: SlitGeometry, zA, zB, zC, envelope: bool = False):
    return farfield_density(m, g, zA, zB, zC, envelope=envelope)


def density_grid(m, g: SlitGeometry, n: int = DEFAULT_GRID, envelope: bool = False) -> GridDensity:
    rho = as_array(m)
    arity = int(np.log2(rho.shape[0]))
    axis = g.axis(n)
    mesh = np.meshgrid(*([axis] * arity), indexing="ij")
    values = farfield_density(rho, g, *mesh, envelope=envelope)
    return GridDensity((axis,) * arity, np.asarray(values))


def _trig_weights(g, axis, n):
    x = 2 * np.pi * axis / g.period
    return {"c": 2 * np.cos(x) / n, "s": 2 * np.sin(x) / n, "1": np.full(n, 1.0 / n)}


def project(values: np.ndarray, weights) -> float:
    """Contract every axis of ``values`` with its weight vector, first axis first."""
    out = values
    for w in weights:
        out = np.tensordot(w, out, axes=(0, 0))
    return float(out)


def _group_specs(arity):
    letters = "abc"[:arity]
    specs = {}
    for r in range(arity, 0, -1):
        for axes in combinations(range(arity), r):
            for trig in product("cs", repeat=r):
                trig = "".join(trig)
                if r == 1:
                    name = f"{letters[axes[0]]}_{'cos' if trig == 'c' else 'sin'}"
                elif r == arity == 2:
                    name = trig
                elif r == 3:
                    name = f"t_{trig}"
                else:
                    name = "".join(letters[a] for a in axes) + "_" + trig
                specs[name] = (axes, trig)
    return specs


def extract_mode_coefficients(density: Callable, g: SlitGeometry, arity: int,
                              n: int = DEFAULT_GRID):
    """Fourier-project a periodic coincidence density onto every mode.

    ``density(*coords)`` is evaluated on an ``n``-point periodic grid per axis.
    A mode on the axes ``S`` is projected with ``(2/period) trig`` on each axis
    in ``S`` and with the period average on the others, which is the Fourier
    coefficient of the marginal over the remaining particles.  The result is
    divided by the ``2/L^(2 arity)`` prefactor of the oscillatory terms.
    """
    if arity not in (2, 3):
        raise DimensionMismatch(f"arity must be 2 or 3, got {arity}")
    if n < MIN_GRID:
        raise GridTooCoarse(f"need at least {MIN_GRID} samples per axis, got {n}")
    axis = g.axis(n)
    mesh = np.meshgrid(*([axis] * arity), indexing="ij")
    values = np.asarray(density(*mesh), dtype=float)
    w = _trig_weights(g, axis, n)
    scale = g.L ** (2 * arity) / 2
    out = {}
    for name, (axes, trig) in _group_specs(arity).items():
        weights = [w[trig[axes.index(p)]] if p in axes else w["1"] for p in range(arity)]
        out[name] = project(values, weights) * scale
    cls = CoefficientGroups2Q if arity == 2 else CoefficientGroups3Q
    return cls(**out)


def marginal_pattern(m, g: SlitGeometry, particle: str, n: int = DEFAULT_GRID) -> GridDensity:
    """Single-particle pattern: joint density averaged over the other particles' period."""
    rho = as_array(m)
    arity = int(np.log2(rho.shape[0]))
    if rho.shape not in ((4, 4), (8, 8)):
        raise DimensionMismatch(f"expected 4x4 or 8x8, got {rho.shape}")
    p = PARTICLE_INDEX[particle.upper()]
    if p >= arity:
        raise DimensionMismatch(f"particle {particle} not present in a {arity}-particle state")
    grid = density_grid(rho, g, n)
    others = tuple(q for q in range(arity) if q != p)
    return GridDensity((grid.axes[p],), grid.values.mean(axis=others),
                       labels=(("zA", "zB", "zC")[p],))


def reduced_marginal(m, g: SlitGeometry, drop: str, n: int = DEFAULT_GRID) -> GridDensity:
    """Joint density of the remaining particles after averaging over ``drop``."""
    rho = as_array(m)
    arity = int(np.log2(rho.shape[0]))
    p = PARTICLE_INDEX[drop.upper()]
    grid = density_grid(rho, g, n)
    keep = tuple(q for q in range(arity) if q != p)
    return GridDensity(tuple(grid.axes[q] for q in keep), grid.values.mean(axis=p),
                       labels=tuple(("zA", "zB", "zC")[q] for q in keep))


@dataclass(frozen=True)
class VerificationReport:
    dim: int
    group_deviations: dict
    closed_form_totals: dict
    oracle_totals: dict
    total_deviations: dict

    @property
    def max_group_deviation(self) -> float:
        return max(self.group_deviations.values())

    @property
    def max_total_deviation(self) -> float:
        return max(self.total_deviations.values())

    @property
    def max_deviation(self) -> float:
        return max(self.max_group_deviation, self.max_total_deviation)

    def to_dict(self) -> dict:
        return {
            "kind": "verify",
            "dim": self.dim,
            "max_deviation": self.max_deviation,
            "group_deviations": dict(self.group_deviations),
            "closed_form_totals": dict(self.closed_form_totals),
            "oracle_totals": dict(self.oracle_totals),
            "total_deviations": dict(self.total_deviations),
        }


def _totals(report):
    if report.kind == "i2":
        return {"i2": report.total}
    return {"i3": report.total, "i_ghz": report.components["i_ghz"],
            "i_w": report.components["i_w"]}


def oracle_verify(m, g: Optional[SlitGeometry] = None, n: int = DEFAULT_GRID) -> VerificationReport:
    """Compare closed-form groups and quantifiers with their Fourier-extracted values."""
    g = g or SlitGeometry()
    rho = as_array(m)
    if rho.shape == (4, 4):
        closed, assemble, arity = coefficient_groups_2q(rho), i2_from_groups, 2
    elif rho.shape == (8, 8):
        closed, assemble, arity = coefficient_groups_3q(rho), i3_from_groups, 3
    else:
        raise DimensionMismatch(f"expected 4x4 or 8x8, got {rho.shape}")
    extracted = extract_mode_coefficients(lambda *z: farfield_density(rho, g, *z), g, arity, n)
    cd, ed = closed.as_dict(), extracted.as_dict()
    group_dev = {k: abs(cd[k] - ed[k]) for k in cd}
    ct, ot = _totals(assemble(closed)), _totals(assemble(extracted))
    return VerificationReport(rho.shape[0], group_dev, ct, ot, {k: abs(ct[k] - ot[k]) for k in ct})


def reduced_density_matrix(m, drop: str) -> np.ndarray:
    rho = as_array(m)
    arity = int(np.log2(rho.shape[0]))
    p = PARTICLE_INDEX[drop.upper()]
    return partial_trace(rho, [q for q in range(arity) if q != p], arity)
