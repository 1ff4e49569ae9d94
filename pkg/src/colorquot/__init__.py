"""Monomial combinatorics of colored quotient rings and their truncations.

Rings are described by a type a (per-color degree caps, inf allowed), a
composition lam (color class sizes), and an optional per-variable cap phi.
The package enumerates graded pieces in descending revlex, takes shadows and
segments, compresses spaces color by color, verifies or refutes the
Macaulay-Lex property by exhaustive sweep, builds explicit refutations, and
decides f-vector realizability for colored multicomplexes.
"""

from .compression import (
    compress,
    del_spec,
    fiber,
    is_quasi_compressed,
    quasi_compress,
)
from .kernel import HAVE_COMPILED, sweep_min_cover
from .multicomplex import (
    BuildOutcome,
    ColoredMulticomplex,
    FVector,
    HuntResult,
    build_compressed,
    f_vector,
    hunt_uncompressible,
    ideal_complement,
    multicomplex_from_complement,
    revlex_characterizes,
    search_realizable,
)
from .rings import (
    INF,
    ONE,
    ClassificationVerdict,
    Monomial,
    RingSpec,
    Variable,
    classify,
    compare_lex,
    compare_revlex,
    compare_variables,
)
from .spaces import (
    GradedPiece,
    MonomialSpace,
    enumerate_piece,
    is_lex_segment,
    is_revlex_segment,
    iter_bits,
    lex_segment,
    lower_shadow,
    norm,
    piece,
    revlex_segment,
    space_from,
    upper_shadow,
)
from .verify import (
    Budget,
    BudgetExceeded,
    ConstructionError,
    CounterexampleArtifact,
    HypothesisViolation,
    RefutationWitness,
    VerificationReport,
    build_counterexample,
    min_shadow_oracle,
    truncated_univariate_predicate,
    verify_macaulay_lex,
)

__version__ = "0.1.0"
