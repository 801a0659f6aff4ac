"""Quotient geometric crossover toolkit.

Metric spaces over genotype representations, finite isometry-group
quotients modeling genotype-phenotype maps, normalization operators,
the induced quotient crossovers they define for five representation
families, and a small GA harness for raw-vs-quotient comparisons.
"""

from .assignment import hungarian
from .crossovers import (
    cycle_crossover,
    line_crossover,
    mask_crossover,
    random_mask,
    uniform_crossover,
)
from .errors import (
    DimensionError,
    InputError,
    OrbitTooLargeError,
    ParameterError,
    QgxError,
    SizeCapError,
)
from .ga import GAConfig, GenerationStats, RunResult, mutate, run_ga
from .genotypes import (
    Mask,
    Permutation,
    RealVector,
    SymbolVector,
    permutation,
    real_vector,
    symbol_vector,
)
from .metrics import euclidean_distance, hamming_distance, in_segment, swap_distance
from .problems import Problem, build_problem
from .quotient import (
    GroupAction,
    Normalizer,
    QuotientPoint,
    induced_quotient_crossover,
    in_quotient_segment,
    normalize_by_enumeration,
    orbit,
    quotient_distance,
    trivial_action,
)
from .verify import (
    VerificationReport,
    verify_equivalence,
    verify_isometry,
    verify_metric_axioms,
    verify_quotient_metric,
)

__all__ = [
    "DimensionError",
    "GAConfig",
    "GenerationStats",
    "GroupAction",
    "InputError",
    "Mask",
    "Normalizer",
    "OrbitTooLargeError",
    "ParameterError",
    "Permutation",
    "Problem",
    "QgxError",
    "QuotientPoint",
    "RealVector",
    "RunResult",
    "SizeCapError",
    "SymbolVector",
    "VerificationReport",
    "build_problem",
    "cycle_crossover",
    "euclidean_distance",
    "hamming_distance",
    "hungarian",
    "in_quotient_segment",
    "in_segment",
    "induced_quotient_crossover",
    "line_crossover",
    "mask_crossover",
    "mutate",
    "normalize_by_enumeration",
    "orbit",
    "permutation",
    "quotient_distance",
    "random_mask",
    "real_vector",
    "run_ga",
    "swap_distance",
    "symbol_vector",
    "trivial_action",
    "uniform_crossover",
    "verify_equivalence",
    "verify_isometry",
    "verify_metric_axioms",
    "verify_quotient_metric",
]

__version__ = "0.1.0"
