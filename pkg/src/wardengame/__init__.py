"""Warden's rotation game: exact solver, de Bruijn machinery, agents, CLI,
and a play server."""

from wardengame.core import (
    Actor,
    GoalSpec,
    IllegalMove,
    MoveChoice,
    MultiGoal,
    Uniform,
    WardenGameError,
    Word,
    apply_move,
    decode,
    encode,
    is_goal,
    legal_values,
    prime_goal_set,
    rotation_dominates,
)
from wardengame.solver import (
    UNWINNABLE,
    ChainBroken,
    ChainSequence,
    NoWinPath,
    RemotenessTable,
    StateSpaceTooLarge,
    bounded_win,
    build_chain,
    goal_as_start_remoteness,
    minimax_bounded,
    optimal_move,
    solve,
    verify_single_chain,
)
from wardengame.sequences import (
    DeBruijnSequence,
    WordNotPresent,
    count_winnable,
    enumerate_all,
    fkm,
    greedy_granddaddy,
    is_de_bruijn,
    is_generalized,
    locate,
)
from wardengame.agents import (
    BasicPrisoner,
    OptimalPrisoner,
    OptimalWarden,
    Transcript,
    simulate,
    worst_case_length,
)

__version__ = "0.1.0"
