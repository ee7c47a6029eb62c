"""Token-passing dynamics over preference matrices.

Each holder passes the token to an agent it prefers most (a blue cell of
its column); the receiver's preference for the giver goes up by one.  Every
game ends up alternating between two agents.  This package simulates
games, enumerates all branches, and analyses which pairs can end up as the
alternating pair.
"""

from .engine import (
    FirstByIndex,
    GameState,
    PathVerdict,
    Scripted,
    SeededRandom,
    Step,
    Trace,
    apply_step,
    enumerate_branches,
    play,
    stabilization_bound,
    validate_path,
)
from .errors import (
    BranchExplosion,
    CycleExplosion,
    GivingGameError,
    IllegalStep,
    ScriptError,
    StabilityNotReached,
)
from .frames import (
    ElementaryCycle,
    EquivalenceClasses,
    Frame,
    elementary_cycles,
    elementary_cycles_through,
    elementary_path,
    equivalence_classes,
    frame_of,
    frame_successors,
    gap,
    pole_position_pairs,
    reachable,
)
from .generators import Fixture, Random, Trivial, TurquoiseFamily, fixture, generate
from .matrix import CellColor, PreferenceMatrix, blue_successors, cell_color, column_max
from .stability import (
    CycleDecomposition,
    PairClass,
    PairKind,
    PhaseSplit,
    StabilityVerdict,
    check_power_conditions,
    classify_pair,
    cycle_decomposition,
    decide_pair,
    decide_turquoise_pair,
    reduce_to_normal_form,
    split_phases,
    stability_pairs_of_game,
    stability_pairs_of_matrix,
)

__version__ = "0.1.0"
