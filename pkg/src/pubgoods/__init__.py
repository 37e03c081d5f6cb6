"""Pure Nash equilibria of public goods games on graphs under best-response patterns."""

from .core import (
    AT_MOST_SINGLE_NEIGHBOR,
    BEST_SHOT,
    SINGLE_NEIGHBOR,
    Graph,
    InputError,
    Pattern,
    PatternClass,
    PggInstance,
    Profile,
    classify,
    deviating_nodes,
    is_ntpne,
    is_pne,
    pattern_at,
    shift_check,
    supporter_count,
)
from .solvers import SolveResult, Status, auto_solve, decide_ntpne, enumerate_ntpne, enumerate_pne

__version__ = "0.1.0"
