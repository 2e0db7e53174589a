"""Multiparticle interference quantifiers for two- and three-qubit states.

Closed-form quantifiers built from density-matrix coefficient groups, a
double-slit Fourier oracle that recovers the same groups from simulated
coincidence patterns, and entanglement/discord comparators.
"""

from .comparators import (bell_diagonal_discord, concurrence, discord_2q,
                          entanglement_of_formation, global_discord_3q, werner_discord)
from .doubleslit import (SlitGeometry, density_grid, extract_mode_coefficients, farfield_density,
                         marginal_pattern, oracle_verify)
from .errors import (DimUnsupported, EnvelopeSingularity, GridTooCoarse, NonConvergence,
                     ParameterOutOfRange, ParseError, QInterferenceError, UnknownFamily,
                     UnknownState, ValidationError)
from .formats import read_report, read_state, write_report, write_state
from .interference2 import (CoefficientGroups2Q, ModeImbalance, QuantifierReport,
                            coefficient_groups_2q, i2_quantifier)
from .interference3 import CoefficientGroups3Q, coefficient_groups_3q, i3_quantifier, i_ghz, i_w
from .modes import derive_groups
from .states import (DensityMatrix, PureState, apply_local_unitary, from_pure, random_density,
                     standard_state, validate, werner_2q, werner_ghz)
from .sweeps import SweepResult, sweep

__version__ = "0.1.0"
