"""Two-qubit interference quantifier.

The coincidence density of two particles behind double slits is

    rho(zA, zB) = const + (2/L^4) [ cc cAcB + ss sAsB + sc sAcB + cs cAsB
                                    + a_cos cA + a_sin sA + b_cos cB + b_sin sB ]

with ``cX = cos(2 k theta zX)`` and ``sX = sin(2 k theta zX)``.  For each
two-particle mode the quantifier compares the square of the two-particle
coefficient with the square of what the single-particle fringes alone would
produce in that mode.
"""

from dataclasses import asdict, dataclass, field
from typing import Optional

from .errors import DimensionMismatch
from .modes import derive_groups, evaluate_terms
from .states import as_array

MODE_LABELS_2Q = ("cc", "ss", "sc", "cs")


@dataclass(frozen=True)
class CoefficientGroups2Q:
    cc: float
    ss: float
    sc: float
    cs: float
    a_cos: float
    a_sin: float
    b_cos: float
    b_sin: float

    def as_dict(self) -> dict:
        return asdict(self)

    def single(self, particle: str, trig: str) -> float:
        return getattr(self, f"{particle}_{'cos' if trig == 'c' else 'sin'}")


@dataclass(frozen=True)
class ModeImbalance:
    """``imbalance = weight * |genuine_sq - lower_order_sq|`` for one oscillatory mode."""

    mode_label: str
    genuine_sq: float
    lower_order_sq: float
    imbalance: float
    weight: float = 1.0

    @classmethod
    def of(cls, label, genuine, lower_order, weight=1.0) -> "ModeImbalance":
        g2, l2 = genuine * genuine, lower_order * lower_order
        return cls(label, g2, l2, weight * abs(g2 - l2), weight)


@dataclass(frozen=True)
class QuantifierReport:
    kind: str
    total: float
    modes: tuple
    components: dict = field(default_factory=dict)
    groups: Optional[dict] = None

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "total": self.total,
            "components": dict(self.components),
            "modes": [asdict(m) for m in self.modes],
            "groups": None if self.groups is None else dict(self.groups),
        }

    @classmethod
    def from_dict(cls, d) -> "QuantifierReport":
        return cls(d["kind"], d["total"], tuple(ModeImbalance(**m) for m in d["modes"]),
                   dict(d.get("components") or {}), d.get("groups"))


def _check_dim(rho, dim):
    if rho.shape != (dim, dim):
        raise DimensionMismatch(f"expected a {dim}x{dim} density matrix, got {rho.shape}")


def coefficient_groups_2q(m) -> CoefficientGroups2Q:
    rho = as_array(m)
    _check_dim(rho, 4)
    return CoefficientGroups2Q(**{name: evaluate_terms(g.terms, rho)
                                  for name, g in derive_groups(2).items()})


def mode_imbalances_2q(g: CoefficientGroups2Q) -> tuple:
    out = []
    for label in MODE_LABELS_2Q:
        x, y = label
        lower = 2 * g.single("a", x) * g.single("b", y)
        out.append(ModeImbalance.of(label, getattr(g, label), lower))
    return tuple(out)


def i2_from_groups(g: CoefficientGroups2Q) -> QuantifierReport:
    modes = mode_imbalances_2q(g)
    total = 2.0 * sum(m.imbalance for m in modes)
    return QuantifierReport("i2", total, modes, groups=g.as_dict())


def i2_quantifier(m) -> QuantifierReport:
    """Two-qubit quantum-interference quantifier.

    ``2 * sum over the four modes of |P^2 - 4 (s_A s_B)^2|``, where ``P`` is the
    two-particle coefficient of the mode and ``s_A``, ``s_B`` the matching
    single-particle coefficients.  Never reads the diagonal of ``m``.

    Examples
    --------
    >>> from qinterference.states import standard_state, from_pure
    >>> round(i2_quantifier(from_pure(standard_state("bell-psi-"))).total, 12)
    1.0
    """
    return i2_from_groups(coefficient_groups_2q(m))


def i2_total(m) -> float:
    return i2_quantifier(m).total


__all__ = [
    "CoefficientGroups2Q", "ModeImbalance", "QuantifierReport", "MODE_LABELS_2Q",
    "coefficient_groups_2q", "mode_imbalances_2q", "i2_from_groups", "i2_quantifier",
    "i2_total",
]
