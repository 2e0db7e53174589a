"""Parameter sweeps over the Werner families."""

from dataclasses import dataclass

import numpy as np

from .comparators import concurrence, discord_2q, entanglement_of_formation, global_discord_3q
from .errors import ParameterOutOfRange, UnknownFamily
from .interference2 import i2_quantifier
from .interference3 import i3_quantifier
from .states import werner_2q, werner_ghz

FAMILIES = ("werner", "werner-ghz")
DEFAULT_STEPS = 101


@dataclass(frozen=True, eq=False)
class SweepResult:
    family: str
    columns: tuple
    rows: np.ndarray

    def column(self, name: str) -> np.ndarray:
        return self.rows[:, self.columns.index(name)]

    def row_at(self, p: float) -> dict:
        k = int(np.argmin(np.abs(self.column("p") - p)))
        return dict(zip(self.columns, self.rows[k].tolist()))

    def to_dict(self) -> dict:
        return {"kind": "sweep", "family": self.family, "columns": list(self.columns),
                "rows": self.rows.tolist()}


def _werner_row(p):
    rho = werner_2q(p)
    return [p, i2_quantifier(rho).total, concurrence(rho), entanglement_of_formation(rho),
            discord_2q(rho)]


def _werner_ghz_row(p):
    rho = werner_ghz(p)
    rep = i3_quantifier(rho)
    return [p, rep.total, rep.components["i_ghz"], rep.components["i_w"], global_discord_3q(rho)]


_SWEEPS = {
    "werner": (("p", "i2", "concurrence", "eof", "discord"), _werner_row),
    "werner-ghz": (("p", "i3", "i_ghz", "i_w", "global_discord"), _werner_ghz_row),
}


def sweep(family: str, steps: int = DEFAULT_STEPS) -> SweepResult:
    """Evaluate the family at ``steps`` evenly spaced ``p`` in ``[0, 1]``."""
    if family not in _SWEEPS:
        raise UnknownFamily(f"unknown family {family!r}; expected one of {', '.join(FAMILIES)}")
    if steps < 2:
        raise ParameterOutOfRange(f"steps must be at least 2, got {steps}")
    columns, row = _SWEEPS[family]
    ps = np.linspace(0.0, 1.0, steps)
    return SweepResult(family, columns, np.array([row(float(p)) for p in ps]))
