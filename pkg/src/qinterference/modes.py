"""Symbolic expansion of the far-field coincidence density into trig modes.

In the far field each slit path contributes a phase ``exp(i k sigma theta z)``
with ``sigma = -1`` for slit 1 and ``+1`` for slit 2.  The cross term of basis
states ``i < j`` is ``2 Re(rho_ij exp(i sum_p n_p x_p))`` with
``x_p = 2 k theta z_p`` and ``n_p = b_ip - b_jp`` in ``{-1, 0, 1}``.  Expanding
the exponential over the particles with ``n_p != 0`` gives one term per choice
of cos/sin on each of them; the coefficient of a term with ``s`` sines is

    s = 0: +R_ij      s = 1: -I_ij * n
    s = 2: -R_ij * n  s = 3: +I_ij * n

where ``n`` is the product of ``n_p`` over the sine factors.  Collecting these
over all pairs ``(i, j)`` yields the coefficient groups: real linear
combinations of off-diagonal entries, one per oscillatory mode.
"""

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import NamedTuple

import numpy as np

PARTICLES = "abc"


class Term(NamedTuple):
    sign: int
    part: str  # "R" or "I"
    i: int  # 1-based
    j: int


@dataclass(frozen=True)
class GroupDef:
    name: str
    axes: tuple  # particle indices carrying a trig factor, 0 = A
    trig: str  # one of "c"/"s" per axis
    terms: tuple

    def expression(self) -> str:
        return format_terms(self.terms)


def format_terms(terms) -> str:
    out = []
    for k, t in enumerate(sorted(terms, key=lambda t: (t.i, t.j, t.part))):
        sign = "-" if t.sign < 0 else ("+" if k else "")
        out.append(f"{sign}{t.part}{t.i}{t.j}")
    return "".join(out)


def group_name(axes, trig, n_qubits: int) -> str:
    """Field name for a group: ``cc``/``a_cos`` (2 qubits), ``t_ccs``/``ab_sc``/``c_sin`` (3)."""
    if len(axes) == 1:
        return f"{PARTICLES[axes[0]]}_{'cos' if trig == 'c' else 'sin'}"
    if len(axes) == n_qubits == 2:
        return trig
    if len(axes) == 3:
        return f"t_{trig}"
    return "".join(PARTICLES[a] for a in axes) + "_" + trig


def _bits(i, n):
    return [(i >> (n - 1 - p)) & 1 for p in range(n)]


_COEFF = {0: ("R", 1), 1: ("I", -1), 2: ("R", -1), 3: ("I", 1)}


@lru_cache(maxsize=None)
def derive_groups(n_qubits: int) -> dict:
    """All coefficient groups for ``n_qubits`` particles, keyed by field name."""
    dim = 2 ** n_qubits
    collected = {}
    for i in range(dim):
        bi = _bits(i, n_qubits)
        for j in range(i + 1, dim):
            nvec = [a - b for a, b in zip(bi, _bits(j, n_qubits))]
            axes = tuple(p for p in range(n_qubits) if nvec[p])
            for trig in product("cs", repeat=len(axes)):
                sign = 1
                for p, t in zip(axes, trig):
                    if t == "s":
                        sign *= nvec[p]
                part, base = _COEFF[trig.count("s")]
                collected.setdefault((axes, "".join(trig)), []).append(
                    Term(base * sign, part, i + 1, j + 1))
    groups = {}
    for (axes, trig), terms in sorted(collected.items(), key=lambda kv: (-len(kv[0][0]), kv[0])):
        name = group_name(axes, trig, n_qubits)
        groups[name] = GroupDef(name, axes, trig, tuple(terms))
    return groups


def evaluate_terms(terms, rho: np.ndarray) -> float:
    """Sum of signed real/imaginary parts; reads only the listed entries."""
    total = 0.0
    for t in terms:
        z = rho[t.i - 1, t.j - 1]
        total += t.sign * (z.real if t.part == "R" else z.imag)
    return float(total)


def parse_expression(expr: str) -> frozenset:
    """Parse ``"-R18+R27+I36"`` into a set of terms (order-insensitive)."""
    terms = []
    s = expr.replace(" ", "")
    pos = 0
    while pos < len(s):
        sign = 1
        if s[pos] in "+-":
            sign = -1 if s[pos] == "-" else 1
            pos += 1
        part = s[pos]
        i, j = int(s[pos + 1]), int(s[pos + 2])
        terms.append(Term(sign, part, i, j))
        pos += 3
    return frozenset(terms)
