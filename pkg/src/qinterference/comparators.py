"""Entanglement and discord measures used as comparators.

All entropies are in bits.
"""

from dataclasses import dataclass

import numpy as np
from scipy.optimize import minimize

from .errors import DimensionMismatch, NonConvergence
from .states import as_array, partial_trace

# eigenvalues of a unit-trace matrix below this are rounding noise
_EIG_CUTOFF = 64 * np.finfo(float).eps
_SIGMA_Y2 = np.kron([[0, -1j], [1j, 0]], [[0, -1j], [1j, 0]])

DISCORD_GRID = (64, 32)
GLOBAL_DISCORD_GRID = (8, 6)
REFINE_TOL = 1e-9


def _check(rho, dim):
    if rho.shape != (dim, dim):
        raise DimensionMismatch(f"expected a {dim}x{dim} density matrix, got {rho.shape}")


def xlog2x(p):
    p = np.asarray(p, dtype=float)
    with np.errstate(divide="ignore", invalid="ignore"):
        return np.where(p > 0, p * np.log2(np.where(p > 0, p, 1.0)), 0.0)


def shannon_entropy(p, axis=-1):
    return -np.sum(xlog2x(p), axis=axis)


def binary_entropy(x: float) -> float:
    return float(shannon_entropy([x, 1 - x])) + 0.0


def von_neumann_entropy(rho) -> float:
    w = np.linalg.eigvalsh(as_array(rho))
    return float(shannon_entropy(np.clip(w, 0, None)))


def concurrence(m) -> float:
    """Wootters concurrence ``max(0, l1 - l2 - l3 - l4)``.

    The ``l_i`` are taken as singular values of ``W^T (Y x Y) W`` with
    ``rho = W W^H``, which avoids square roots of near-zero eigenvalues.
    """
    rho = as_array(m)
    _check(rho, 4)
    w, v = np.linalg.eigh(rho)
    w = np.where(w > _EIG_CUTOFF, w, 0.0)
    half = v * np.sqrt(w)
    lam = np.linalg.svd(half.T @ _SIGMA_Y2 @ half, compute_uv=False)
    return float(max(0.0, lam[0] - lam[1:].sum()))


def entanglement_of_formation(m) -> float:
    c = concurrence(m)
    return binary_entropy((1 + np.sqrt(max(0.0, 1 - c * c))) / 2)


@dataclass(frozen=True)
class MeasurementBasis:
    """Rank-one projective qubit measurement along the Bloch direction ``(theta, phi)``."""

    theta: float
    phi: float

    def vectors(self) -> np.ndarray:
        return _basis_vectors(np.array([self.theta]), np.array([self.phi]))[0]

    def projectors(self) -> np.ndarray:
        v = self.vectors()
        return np.einsum("ka,kb->kab", v, v.conj())


def _basis_vectors(theta, phi):
    # shape (..., 2 outcomes, 2 components)
    c, s, e = np.cos(theta / 2), np.sin(theta / 2), np.exp(1j * phi)
    up = np.stack([c + 0j, e * s], axis=-1)
    down = np.stack([-np.conj(e) * s, c + 0j], axis=-1)
    return np.stack([up, down], axis=-2)


def _eig2_entropy(blocks):
    """Entropy of a batch of 2x2 Hermitian PSD blocks given as (..., 2, 2), normalized."""
    a, d = blocks[..., 0, 0].real, blocks[..., 1, 1].real
    b = blocks[..., 0, 1]
    tr = a + d
    gap = np.sqrt((a - d) ** 2 + 4 * np.abs(b) ** 2)
    with np.errstate(divide="ignore", invalid="ignore"):
        lam = np.stack([(tr + gap) / 2, (tr - gap) / 2], axis=-1) / tr[..., None]
    lam = np.clip(np.nan_to_num(lam), 0, 1)
    return shannon_entropy(lam), tr


def _conditional_entropy(rho4, theta, phi):
    """Average entropy of A after measuring B along (theta, phi); broadcasts."""
    t = rho4.reshape(2, 2, 2, 2)  # a, b, a', b'
    v = _basis_vectors(np.asarray(theta), np.asarray(phi))
    blocks = np.einsum("...kb,xbyc,...kc->...kxy", v.conj(), t, v)
    ent, prob = _eig2_entropy(blocks)
    return np.sum(prob * ent, axis=-1)


def _refine(f, x0, best_grid, maxiter):
    res = minimize(f, x0, method="Nelder-Mead",
                   options={"xatol": REFINE_TOL, "fatol": REFINE_TOL * 1e-3,
                            "maxiter": maxiter, "maxfev": 4 * maxiter})
    best = min(float(res.fun), best_grid)
    if not res.success:
        raise NonConvergence(f"measurement optimization did not converge: {res.message}", best)
    return best


def discord_2q(m, measured_party: str = "B", grid=DISCORD_GRID) -> float:
    """Ollivier-Zurek discord with projective measurements on one party.

    ``D = I(A:B) - max_meas [S(unmeasured) - S(unmeasured | outcome)]``; the
    measurement direction is searched on a ``theta x phi`` grid and refined
    with Nelder-Mead.
    """
    rho = as_array(m)
    _check(rho, 4)
    party = measured_party.upper()
    if party == "A":
        rho = rho.reshape(2, 2, 2, 2).transpose(1, 0, 3, 2).reshape(4, 4)
    elif party != "B":
        raise ValueError(f"measured_party must be 'A' or 'B', got {measured_party!r}")
    n_th, n_ph = grid
    th, ph = np.meshgrid(np.linspace(0, np.pi, n_th),
                         np.linspace(0, 2 * np.pi, n_ph, endpoint=False), indexing="ij")
    cond = _conditional_entropy(rho, th, ph)
    k = np.unravel_index(np.argmin(cond), cond.shape)
    best = _refine(lambda x: float(_conditional_entropy(rho, x[0], x[1])),
                   [th[k], ph[k]], float(cond[k]), 2000)
    s_meas = von_neumann_entropy(partial_trace(rho, [1], 2))
    return max(0.0, s_meas - von_neumann_entropy(rho) + best)


def bell_diagonal_discord(c1: float, c2: float, c3: float) -> float:
    """Closed-form discord of ``(I + sum_i c_i s_i x s_i)/4``."""
    lam = np.array([1 - c1 - c2 - c3, 1 - c1 + c2 + c3, 1 + c1 - c2 + c3, 1 + c1 + c2 - c3]) / 4
    mutual = 2 + float(np.sum(xlog2x(lam)))
    c = max(abs(c1), abs(c2), abs(c3))
    classical = float(xlog2x((1 - c) / 2) + xlog2x((1 + c) / 2)) + 1
    return mutual - classical


def werner_discord(p: float) -> float:
    """Discord of the singlet/white-noise mixture, from the Bell-diagonal formula."""
    return bell_diagonal_discord(-p, -p, -p)


def _product_probabilities(rho8, v1, v2, v3):
    """Outcome probabilities p[g1, k1, g2, k2, g3, k3] for product bases on a grid."""
    t = rho8.reshape((2,) * 6)
    x = np.einsum("gka,abcdef,gkd->gkbcef", v1.conj(), t, v1)
    x = np.einsum("hlb,gkbcef,hle->gkhlcf", v2.conj(), x, v2)
    x = np.einsum("imc,gkhlcf,imf->gkhlim", v3.conj(), x, v3)
    return x.real


def _local_mismatch(p):
    """``H(joint) - sum_j H(marginal_j)`` for probability arrays (..., 2, 2, 2)."""
    joint = shannon_entropy(p.reshape(p.shape[:-3] + (8,)))
    margins = (p.sum(axis=(-2, -1)), p.sum(axis=(-3, -1)), p.sum(axis=(-3, -2)))
    return joint - sum(shannon_entropy(q) for q in margins)


def global_discord_3q(m, grid=GLOBAL_DISCORD_GRID) -> float:
    """Symmetric global discord over local projective measurements on all three qubits.

    ``min [S(rho || Phi(rho)) - sum_j S(rho_j || Phi_j(rho_j))]`` where ``Phi``
    dephases in a product basis.  Both relative entropies reduce to entropy
    differences, so only the outcome distribution of ``Phi`` is needed.
    """
    rho = as_array(m)
    _check(rho, 8)
    n_th, n_ph = grid
    th, ph = np.meshgrid(np.linspace(0, np.pi, n_th),
                         np.linspace(0, 2 * np.pi, n_ph, endpoint=False), indexing="ij")
    th, ph = th.ravel(), ph.ravel()
    v = _basis_vectors(th, ph)
    p = _product_probabilities(rho, v, v, v)
    g = th.size
    p = p.transpose(0, 2, 4, 1, 3, 5).reshape(g ** 3, 2, 2, 2)
    cost = _local_mismatch(np.clip(p, 0, None))
    k = int(np.argmin(cost))
    i1, i2, i3 = np.unravel_index(k, (g, g, g))
    x0 = [th[i1], ph[i1], th[i2], ph[i2], th[i3], ph[i3]]

    def f(x):
        vs = [_basis_vectors(np.array([x[2 * j]]), np.array([x[2 * j + 1]])) for j in range(3)]
        q = _product_probabilities(rho, *vs).reshape(2, 2, 2)
        return float(_local_mismatch(np.clip(q, 0, None)))

    best = _refine(f, x0, float(cost[k]), 6000)
    s_local = sum(von_neumann_entropy(partial_trace(rho, [j], 3)) for j in range(3))
    return max(0.0, best - von_neumann_entropy(rho) + s_local)
