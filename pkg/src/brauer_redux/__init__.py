"""Index reduction of Brauer classes along function fields of curves."""

from .brauer import (
    GlobalClass,
    GlobalExtensionProfile,
    LocalClass,
    LocalExtension,
    global_index,
    local_index,
    restrict_global,
    restrict_local,
)
from .curves import (
    SPLIT,
    CapacityCurveModel,
    TabulatedCurveModel,
    capacity_of,
    curve_index_after_extension,
)
from .errors import (
    BoundExhaustedError,
    BrauerReduxError,
    NoPointsError,
    ReciprocityError,
    ScenarioError,
)
from .euler import (
    NumericalPolynomial,
    RRInput,
    alternating_binomial_sum,
    fm_twisted_rank,
    leading_coefficient_times_factorial,
    period_index_bound_check,
    twisted_euler_char,
)
from .index_reduction import (
    ModuliData,
    ObstructedPoint,
    capacity_closed_form,
    general_index_reduction,
    genus1_index_reduction_gcd,
    genus1_index_reduction_min,
    genus1_splits,
    homogeneous_reduction_check,
    iota,
    svdb_divisibility_check,
)
from .invariants import (
    CyclicSubgroup,
    Invariant,
    add,
    order,
    primary_part,
    same_cyclic_subgroup,
    scale,
)

__version__ = "0.1.0"
