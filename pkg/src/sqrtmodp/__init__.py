"""Square roots modulo primes p = 2^k * n + 1 (n odd).

Closed-form product evaluators for k = 1..4, a general-k synthesizer with
sign normalization, rendering, and sparse expansion, classical oracles
(iterative refinement, class-index direct method, brute force), exact
order-class statistics, and a CLI for sweeps and benchmarks.
"""

from .analysis import DensityReport, multiplier_census, multiplier_coverage, order_census
from .formulas import (
    NotAResidue,
    SqrtOutcome,
    WrongClass,
    sqrt_auto,
    sqrt_f1,
    sqrt_f2,
    sqrt_f3,
    sqrt_f4,
)
from .modarith import (
    MulCounter,
    PrimeContext,
    decompose,
    find_nonresidue,
    is_prime,
    legendre,
    make_context,
    mod_pow,
    primes_in_range,
)
from .oracles import (
    brute_force_sqrt,
    brute_root_table,
    direct_sqrt,
    residue_class,
    tonelli_shanks,
)
from .synthesis import (
    ExpandedPolynomial,
    Factor,
    RenderedTerm,
    SignedFactor,
    SymbolicFormula,
    Term,
    degree_check,
    evaluate,
    evaluate_at,
    expand,
    normalize_signs,
    render_math,
    render_text,
    sqrt_synth,
    synthesize,
    term_values,
)

__version__ = "0.1.0"

__all__ = [
    "DensityReport",
    "ExpandedPolynomial",
    "Factor",
    "MulCounter",
    "NotAResidue",
    "PrimeContext",
    "RenderedTerm",
    "SignedFactor",
    "SqrtOutcome",
    "SymbolicFormula",
    "Term",
    "WrongClass",
    "brute_force_sqrt",
    "brute_root_table",
    "decompose",
    "degree_check",
    "direct_sqrt",
    "evaluate",
    "evaluate_at",
    "expand",
    "find_nonresidue",
    "is_prime",
    "legendre",
    "make_context",
    "mod_pow",
    "multiplier_census",
    "multiplier_coverage",
    "normalize_signs",
    "order_census",
    "primes_in_range",
    "render_math",
    "render_text",
    "residue_class",
    "sqrt_auto",
    "sqrt_f1",
    "sqrt_f2",
    "sqrt_f3",
    "sqrt_f4",
    "sqrt_synth",
    "synthesize",
    "term_values",
    "tonelli_shanks",
]
