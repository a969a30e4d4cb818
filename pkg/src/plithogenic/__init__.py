"""Plithogenic sets, logic and probability.

Attribute values carry contradiction degrees against a dominant value; the
aggregation operators blend a t-norm and its t-conorm by those degrees.
"""

from .degree import DEFAULT_NORMS, Degree, Kind, Mode, NormPair, blend, midpoint, tconorm, tnorm
from .logic import Event, ProbabilitySpace, Proposition, conjoin, disjoin, negate, space_summary
from .measures import (
    cosine,
    dice,
    euclidean_distance,
    euclidean_similarity,
    hamming_distance,
    hamming_similarity,
    jaccard,
)
from .numbers import PlithogenicNumber, pn_add, pn_mul, pn_pow, pn_scale
from .ops import (
    Evaluation,
    MultiEvaluation,
    Negation,
    Style,
    Variant,
    p_and,
    p_eq,
    p_leq,
    p_not,
    p_or,
    tuple_and,
    tuple_not,
    tuple_or,
)
from .refined import RefinedDegree, refined_and, refined_leq, refined_not, refined_or
from .schema import (
    AttributeSchema,
    Canonical,
    ContradictionMatrix,
    MultiAttributeSchema,
    RefinedValue,
    SchemaError,
    canonical_schema,
    default_contradictions,
    negate_value,
    refine,
    split,
    split_index,
    validate,
)

__version__ = "0.1.0"
