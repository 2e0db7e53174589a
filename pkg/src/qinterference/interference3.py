"""Three-qubit interference quantifiers: GHZ-like, W-like and their sum.

The coincidence density of three particles carries 26 oscillatory modes:
8 triple products (``t_xyz``), 12 pair products (``ab_xy``, ``ac_xz``,
``bc_yz``) and 6 single fringes (``a_cos`` ... ``c_sin``).

GHZ-like interference is read off the eight triple modes.  The lower-order
part of a triple-mode coefficient is what single fringes and pair
correlations produce on their own; by inclusion-exclusion (the joint
cumulant of three variables) it is

    2 (a_x bc_yz + b_y ac_xz + c_z ab_xy) - 8 a_x b_y c_z

which equals ``t_xyz`` exactly for every product state.  W-like interference
is read off the twelve pair modes with the two-particle comparison.
"""

from dataclasses import asdict, dataclass
from itertools import product

from .errors import DimensionMismatch
from .interference2 import ModeImbalance, QuantifierReport
from .modes import derive_groups, evaluate_terms
from .states import as_array

GHZ_MODE_LABELS = ("ccc", "ccs", "csc", "scc", "ssc", "css", "sss", "scs")
PAIRS = ("ab", "ac", "bc")
W_MODE_LABELS = tuple(f"{p}_{x}{y}" for p in PAIRS for x, y in product("cs", repeat=2))
W_NORMALIZATION = (9 / 8) ** 3
GHZ_NORMALIZATION = 1 / 4
MODE_WEIGHT = 4.0


@dataclass(frozen=True)
class CoefficientGroups3Q:
    t_ccc: float
    t_ccs: float
    t_csc: float
    t_css: float
    t_scc: float
    t_scs: float
    t_ssc: float
    t_sss: float
    ab_cc: float
    ab_cs: float
    ab_sc: float
    ab_ss: float
    ac_cc: float
    ac_cs: float
    ac_sc: float
    ac_ss: float
    bc_cc: float
    bc_cs: float
    bc_sc: float
    bc_ss: float
    a_cos: float
    a_sin: float
    b_cos: float
    b_sin: float
    c_cos: float
    c_sin: float

    def as_dict(self) -> dict:
        return asdict(self)

    def single(self, particle: str, trig: str) -> float:
        return getattr(self, f"{particle}_{'cos' if trig == 'c' else 'sin'}")

    def pair(self, pair: str, trig: str) -> float:
        return getattr(self, f"{pair}_{trig}")

    def triple(self, trig: str) -> float:
        return getattr(self, f"t_{trig}")


def coefficient_groups_3q(m) -> CoefficientGroups3Q:
    rho = as_array(m)
    if rho.shape != (8, 8):
        raise DimensionMismatch(f"expected an 8x8 density matrix, got {rho.shape}")
    return CoefficientGroups3Q(**{name: evaluate_terms(g.terms, rho)
                                  for name, g in derive_groups(3).items()})


def ghz_lower_order(g: CoefficientGroups3Q, mode: str) -> float:
    x, y, z = mode
    a, b, c = g.single("a", x), g.single("b", y), g.single("c", z)
    pairs = a * g.pair("bc", y + z) + b * g.pair("ac", x + z) + c * g.pair("ab", x + y)
    return 2 * pairs - 8 * a * b * c


def ghz_mode_imbalances(g: CoefficientGroups3Q) -> tuple:
    """Eight records ``4 |t^2 - lower^2|``, in the order of `GHZ_MODE_LABELS`."""
    return tuple(ModeImbalance.of(mode, g.triple(mode), ghz_lower_order(g, mode), MODE_WEIGHT)
                 for mode in GHZ_MODE_LABELS)


def w_mode_imbalances(g: CoefficientGroups3Q) -> tuple:
    """Twelve records ``4 |P^2 - 4 (s1 s2)^2|``, four per pair AB, AC, BC."""
    out = []
    for label in W_MODE_LABELS:
        pair, trig = label.split("_")
        lower = 2 * g.single(pair[0], trig[0]) * g.single(pair[1], trig[1])
        out.append(ModeImbalance.of(label, g.pair(pair, trig), lower, MODE_WEIGHT))
    return tuple(out)


def w_pair_sums(modes) -> dict:
    sums = {p: 0.0 for p in PAIRS}
    for m in modes:
        sums[m.mode_label[:2]] += m.imbalance
    return sums


def i_ghz_from_groups(g: CoefficientGroups3Q) -> QuantifierReport:
    modes = ghz_mode_imbalances(g)
    total = GHZ_NORMALIZATION * sum(m.imbalance for m in modes)
    return QuantifierReport("i_ghz", total, modes, groups=g.as_dict())


def i_w_from_groups(g: CoefficientGroups3Q) -> QuantifierReport:
    modes = w_mode_imbalances(g)
    sums = w_pair_sums(modes)
    total = W_NORMALIZATION * sums["ab"] * sums["ac"] * sums["bc"]
    return QuantifierReport("i_w", total, modes,
                            components={f"sum_{p}": s for p, s in sums.items()},
                            groups=g.as_dict())


def i3_from_groups(g: CoefficientGroups3Q) -> QuantifierReport:
    ghz = i_ghz_from_groups(g)
    w = i_w_from_groups(g)
    return QuantifierReport("i3", ghz.total + w.total, ghz.modes + w.modes,
                            components={"i_ghz": ghz.total, "i_w": w.total, **w.components},
                            groups=g.as_dict())


def i_ghz(m) -> QuantifierReport:
    """Amount of GHZ-like (triple-coincidence only) interference."""
    return i_ghz_from_groups(coefficient_groups_3q(m))


def i_w(m) -> QuantifierReport:
    """Amount of W-like interference: product of the AB, AC and BC mode sums."""
    return i_w_from_groups(coefficient_groups_3q(m))


def i3_quantifier(m) -> QuantifierReport:
    """Total three-qubit interference ``I_GHZ + I_W``; both parts in ``components``."""
    return i3_from_groups(coefficient_groups_3q(m))
