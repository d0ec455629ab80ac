"""Lions-and-contamination pursuit game: exact solvers, tree recursions,
path decompositions, strategy synthesis and the zero-visibility cop game."""

from .cops import (CopSchedule, CopState, cop_number_exact, cop_step, cops_from_lions,
                   lions_from_cops, simulate_cops)
from .engine import (GameState, Move, Schedule, ScheduleBuilder, StepAction, Trace,
                     boundary_violations, check_component_invariant, extend_with_remote_clears,
                     restrict_to_subgraph, schedule_from_positions, simulate, step)
from .errors import (BudgetExceeded, ContainmentError, DecompositionError, DomainError,
                     IllegalMoveError, InvalidParameterError, InvalidSetError, LionsError,
                     ParseError, PreconditionError, RestrictionError, SizeGuardError,
                     SynthesisError)
from .graph import (Graph, add_universal_vertex, boundary, complete, complete_binary_tree,
                    components, cycle_graph, induced_subgraph, is_isometric_subgraph,
                    neighborhood, path_graph, star)
from .search import SolveResult, clearable, lion_number, monotone_lion_number
from .synthesis import (CounterexampleInstance, clear_monotone_via_connected_decomposition,
                        clear_via_decomposition, complete_binary_tree_monotone_schedule,
                        counterexample_family, decomposition_from_monotone)
from .trees import TreeCert, directed_subtree_values, tree_clearing_strategy, tree_lion_number, tree_pathwidth
from .width import (PathDecomposition, connected_pathwidth_exact, normalize_proper,
                    pathwidth_exact, validate_decomposition)

__version__ = "0.1.0"
