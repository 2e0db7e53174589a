"""Two- and three-qubit states in the slit basis.

Basis index ``i`` (0-based here, 1-based in the ``rho_ij`` notation) encodes
which slit each particle traverses, with particle A as the most significant
bit: for two qubits ``|A1 B1>, |A1 B2>, |A2 B1>, |A2 B2>`` map to
``|00>, |01>, |10>, |11>``, and likewise ``|000>`` ... ``|111>`` for three.
"""

from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np

from .errors import (
    ArityMismatch,
    DimUnsupported,
    NegativeEigenvalue,
    NonHermitian,
    NonUnitary,
    NormDeviation,
    ParameterOutOfRange,
    TraceDeviation,
    UnknownState,
)

TRACE_TOL = 1e-12
EIGENVALUE_FLOOR = -1e-10
HERMITIAN_TOL = 1e-12
NORM_TOL = 1e-9
UNITARY_TOL = 1e-9

_DENSITY_DIMS = (4, 8)


def _readonly(a):
    a = np.array(a, dtype=complex)
    a.setflags(write=False)
    return a


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    """Hermitian 4x4 or 8x8 density matrix.

    The input is symmetrized as ``(M + M^H)/2`` on construction; the largest
    entry-wise change is kept in ``symmetrization_deviation``.
    """

    entries: np.ndarray
    symmetrization_deviation: float = field(default=0.0, init=False)

    def __post_init__(self):
        m = np.array(self.entries, dtype=complex)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise DimUnsupported(f"expected a square matrix, got shape {m.shape}")
        if m.shape[0] not in _DENSITY_DIMS:
            raise DimUnsupported(f"dimension {m.shape[0]} not supported (4 or 8)")
        sym = (m + m.conj().T) / 2
        object.__setattr__(self, "symmetrization_deviation", float(np.max(np.abs(m - sym))))
        object.__setattr__(self, "entries", _readonly(sym))

    @property
    def dim(self) -> int:
        return self.entries.shape[0]

    @property
    def n_qubits(self) -> int:
        return int(np.log2(self.dim))

    def element(self, i: int, j: int) -> complex:
        """Entry ``rho_ij`` with 1-based indices."""
        return complex(self.entries[i - 1, j - 1])

    def trace(self) -> float:
        return float(np.trace(self.entries).real)

    def eigenvalues(self) -> np.ndarray:
        return np.linalg.eigvalsh(self.entries)

    def purity(self) -> float:
        return float(np.trace(self.entries @ self.entries).real)

    def with_diagonal(self, diag) -> "DensityMatrix":
        m = np.array(self.entries)
        np.fill_diagonal(m, np.asarray(diag, dtype=float))
        return DensityMatrix(m)

    def __array__(self, dtype=None, copy=None):
        return np.asarray(self.entries, dtype=dtype)


@dataclass(frozen=True, eq=False)
class PureState:
    amplitudes: np.ndarray

    def __post_init__(self):
        v = np.array(self.amplitudes, dtype=complex).reshape(-1)
        if v.size not in (2, 4, 8):
            raise DimUnsupported(f"pure state dimension {v.size} not supported")
        dev = abs(np.linalg.norm(v) - 1.0)
        if dev > NORM_TOL:
            raise NormDeviation(f"state norm deviates from 1 by {dev:.3g}", dev)
        object.__setattr__(self, "amplitudes", _readonly(v))

    @classmethod
    def normalized(cls, amplitudes) -> "PureState":
        v = np.asarray(amplitudes, dtype=complex).reshape(-1)
        return cls(v / np.linalg.norm(v))

    @property
    def dim(self) -> int:
        return self.amplitudes.size

    def __array__(self, dtype=None, copy=None):
        return np.asarray(self.amplitudes, dtype=dtype)


class ValidationReport(NamedTuple):
    hermiticity_deviation: float
    trace_deviation: float
    min_eigenvalue: float
    passed: bool


def as_array(m) -> np.ndarray:
    if isinstance(m, DensityMatrix):
        return m.entries
    return np.asarray(m, dtype=complex)


def validate(m, *, trace_tol=TRACE_TOL, eig_floor=EIGENVALUE_FLOOR,
             herm_tol=HERMITIAN_TOL, raise_on_failure=True) -> ValidationReport:
    """Check Hermiticity, unit trace and positivity.

    Raw arrays are checked as given; a `DensityMatrix` is already symmetrized.
    With ``raise_on_failure`` the first violated invariant is raised
    (`NonHermitian`, `TraceDeviation`, `NegativeEigenvalue`, in that order).
    """
    a = as_array(m)
    if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] not in _DENSITY_DIMS:
        raise DimUnsupported(f"dimension {a.shape} not supported (4x4 or 8x8)")
    herm = float(np.max(np.abs(a - a.conj().T)))
    tr = np.trace(a)
    trace_dev = float(abs(tr.real - 1.0))
    emin = float(np.linalg.eigvalsh((a + a.conj().T) / 2)[0])
    report = ValidationReport(herm, trace_dev, emin,
                              herm <= herm_tol and trace_dev <= trace_tol and emin >= eig_floor)
    if raise_on_failure and not report.passed:
        if herm > herm_tol:
            raise NonHermitian(f"Hermiticity deviation {herm:.3g}", herm)
        if trace_dev > trace_tol:
            raise TraceDeviation(f"trace deviates from 1 by {trace_dev:.3g}", trace_dev)
        raise NegativeEigenvalue(f"minimum eigenvalue {emin:.3g}", emin)
    return report


def from_pure(v) -> DensityMatrix:
    """Rank-one projector ``|v><v|``."""
    if not isinstance(v, PureState):
        v = PureState(v)
    a = v.amplitudes
    return DensityMatrix(np.outer(a, a.conj()))


def _check_probability(p):
    if not 0.0 <= p <= 1.0:
        raise ParameterOutOfRange(f"p={p} outside [0, 1]")


def werner_2q(p: float) -> DensityMatrix:
    """Singlet fraction ``p`` mixed with white noise."""
    _check_probability(p)
    singlet = np.array([0, 1, -1, 0]) / np.sqrt(2)
    return DensityMatrix(p * np.outer(singlet, singlet) + (1 - p) / 4 * np.eye(4))


def werner_ghz(p: float) -> DensityMatrix:
    """GHZ fraction ``p`` mixed with white noise."""
    _check_probability(p)
    ghz = np.zeros(8)
    ghz[[0, 7]] = 1 / np.sqrt(2)
    return DensityMatrix(p * np.outer(ghz, ghz) + (1 - p) / 8 * np.eye(8))


def qubit(theta, phi) -> np.ndarray:
    """Bloch-sphere qubit ``cos(theta/2)|0> + e^{i phi} sin(theta/2)|1>``."""
    return np.array([np.cos(theta / 2), np.exp(1j * phi) * np.sin(theta / 2)])


def _basis(dim, *pairs):
    v = np.zeros(dim, dtype=complex)
    for idx, amp in pairs:
        v[idx] = amp
    return v


def _product(*angles):
    if len(angles) not in (4, 6):
        raise ParameterOutOfRange("product state needs (theta, phi) per qubit for 2 or 3 qubits")
    v = np.ones(1, dtype=complex)
    for th, ph in zip(angles[::2], angles[1::2]):
        v = np.kron(v, qubit(th, ph))
    return v


_r2 = 1 / np.sqrt(2)
_r3 = 1 / np.sqrt(3)

_STATES = {
    "bell-phi+": lambda: _basis(4, (0, _r2), (3, _r2)),
    "bell-phi-": lambda: _basis(4, (0, _r2), (3, -_r2)),
    "bell-psi+": lambda: _basis(4, (1, _r2), (2, _r2)),
    "bell-psi-": lambda: _basis(4, (1, _r2), (2, -_r2)),
    "ghz": lambda: _basis(8, (0, _r2), (7, _r2)),
    "w": lambda: _basis(8, (1, _r3), (2, _r3), (4, _r3)),
    "phased-w": lambda f1, f2: _basis(8, (4, _r3), (2, _r3 * np.exp(1j * f1)),
                                      (1, _r3 * np.exp(1j * f2))),
    "phi": lambda th, ph: _basis(4, (0, np.cos(th)), (3, np.exp(1j * ph) * np.sin(th))),
    "psi": lambda th, ph: _basis(4, (1, np.cos(th)), (2, np.exp(1j * ph) * np.sin(th))),
    "ghz-alpha": lambda a, ph: _basis(8, (0, np.cos(a)), (7, np.exp(1j * ph) * np.sin(a))),
    "product": _product,
}

STATE_NAMES = tuple(_STATES)
BELL_STATES = ("bell-phi+", "bell-phi-", "bell-psi+", "bell-psi-")


def standard_state(name: str, *params) -> PureState:
    """Named pure state in the slit basis.

    ``phased-w(f1, f2)`` is ``(|100> + e^{i f1}|010> + e^{i f2}|001>)/sqrt(3)``;
    ``phi``/``psi`` take ``(theta, phi)``; ``ghz-alpha`` takes ``(alpha, phi)``;
    ``product`` takes Bloch angles ``(theta, phi)`` per qubit.
    """
    try:
        make = _STATES[name]
    except KeyError:
        raise UnknownState(f"unknown state {name!r}; expected one of {', '.join(STATE_NAMES)}") from None
    try:
        v = make(*params)
    except TypeError as exc:
        raise ParameterOutOfRange(f"bad parameters for {name!r}: {exc}") from None
    return PureState(v)


def random_density(dim: int, rank: int, seed) -> DensityMatrix:
    """Convex mixture of ``rank`` random pure states, reproducible per seed."""
    if dim not in _DENSITY_DIMS:
        raise ParameterOutOfRange(f"dim={dim} not in {_DENSITY_DIMS}")
    if not 1 <= rank <= dim:
        raise ParameterOutOfRange(f"rank={rank} outside [1, {dim}]")
    rng = np.random.default_rng(seed)
    vecs = rng.standard_normal((rank, dim)) + 1j * rng.standard_normal((rank, dim))
    vecs /= np.linalg.norm(vecs, axis=1, keepdims=True)
    weights = rng.dirichlet(np.ones(rank))
    rho = np.einsum("k,ki,kj->ij", weights, vecs, vecs.conj())
    return DensityMatrix(rho / np.trace(rho).real)


def random_product_state(n_qubits: int, rng) -> PureState:
    v = np.ones(1, dtype=complex)
    for _ in range(n_qubits):
        q = rng.standard_normal(2) + 1j * rng.standard_normal(2)
        v = np.kron(v, q / np.linalg.norm(q))
    return PureState(v)


def apply_local_unitary(m, u_list) -> DensityMatrix:
    """Conjugate ``m`` by the tensor product of one 2x2 unitary per qubit."""
    rho = as_array(m)
    n = int(np.log2(rho.shape[0]))
    if len(u_list) != n:
        raise ArityMismatch(f"{n}-qubit state needs {n} unitaries, got {len(u_list)}")
    u = np.ones((1, 1), dtype=complex)
    for ui in u_list:
        ui = np.asarray(ui, dtype=complex)
        if ui.shape != (2, 2):
            raise ArityMismatch(f"local unitary must be 2x2, got {ui.shape}")
        dev = float(np.max(np.abs(ui.conj().T @ ui - np.eye(2))))
        if dev > UNITARY_TOL:
            raise NonUnitary(f"unitarity deviation {dev:.3g}", dev)
        u = np.kron(u, ui)
    return DensityMatrix(u @ rho @ u.conj().T)


def partial_trace(rho, keep, n_qubits: int) -> np.ndarray:
    """Reduced matrix on the qubits in ``keep`` (0 = A), in ascending order."""
    keep = sorted(keep)
    t = np.asarray(rho).reshape((2,) * (2 * n_qubits))
    traced = [q for q in range(n_qubits) if q not in keep]
    # trace out highest index first so remaining axis numbers stay valid
    for q in reversed(traced):
        n_now = t.ndim // 2
        t = np.trace(t, axis1=q, axis2=q + n_now)
    d = 2 ** len(keep)
    return t.reshape(d, d)
