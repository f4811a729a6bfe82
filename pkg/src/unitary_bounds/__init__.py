"""Lower bounds on products of variances of unitary operators.

Quick start::

    >>> import numpy as np
    >>> from unitary_bounds import get_scenario, amplitude_vector, PairContext, bound_I1_prime
    >>> sc = get_scenario("ex1")
    >>> state = sc.state_at(np.pi / 4)
    >>> ctx = PairContext(*(amplitude_vector(u, state) for u in sc.operators))
    >>> round(bound_I1_prime(ctx), 6)
    0.515625
"""

from .chain import BoundChain
from .errors import (
    BoundsError,
    CoordinateError,
    DimensionError,
    FormatError,
    InvalidStateError,
    NotUnitaryError,
    SearchCapError,
)
from .evaluate import Evaluation, evaluate
from .labels import BoundSpec, parse_bound
from .linalg import adjoint, apply, commutation_phase_check, identity, is_hermitian, is_unitary
from .moments import (
    VarianceReport,
    amplitude_vector,
    expectation,
    product_decomposition_check,
    triple_decomposition_check,
    variance,
    variance_report,
)
from .pair_bounds import (
    PairContext,
    bound_I,
    bound_I1_prime,
    bound_S,
    chain_S,
    perm_bound_I1_prime,
    perm_bound_S,
)
from .scenarios import (
    Scenario,
    clock_shift,
    default_grid,
    get_scenario,
    random_instance,
    scenario_operators,
    scenario_state,
    scenario_vector,
)
from .search import Exhaustive, PermutationMax, Sampled
from .states import QuantumState, make_mixed, make_pure, sqrt_density
from .sweeps import SweepResult, sweep
from .triple_bounds import (
    TripleContext,
    best_axis,
    bound_M,
    bound_M_max,
    chain_M,
    perm_bound_M,
    yu_triple_bound,
)

__version__ = "0.1.0"
