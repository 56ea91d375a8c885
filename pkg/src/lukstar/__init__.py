"""Exact-arithmetic toolkit for finite Lukasiewicz chains with the square operator."""

from .chain import Chain, ChainElem, MixedChains
from .classify import (
    PiVerdict, classification, in_pi, is_fermat_prime, is_prime, pi_below,
    term_equivalent,
)
from .formulas import (
    ArrowI, BaazDelta, BudgetExceeded, Chi, Const, CrispImp, Delta, Formula,
    GoedelImp, IffI, Join, Matrix, Meet, Neg, ParseError, Star, StrongNeg,
    UnboundVariable, ValidityResult, Var, consequence, evaluate, expand,
    is_valid, parse, variables,
)
from .igstar import (
    AbstractIGChain, MalformedSequence, NotValidated, OutOfRange, PLMap,
    RepresentVerdict, SimplePartition, SkSeq, Sym, check_r_equations,
    fixed_point, is_representable, plmap_of, simple_partition, skeleton,
    solve_preimage, to_igchain, validate_igstar, well_formed_sequences,
)
from .report import CheckReport, Failure
from .subalgebra import (
    BoundaryElement, BoundExceeded, PSequence, Subalgebra, all_subalgebras,
    closure, generated, generated_by_set, is_strictly_simple,
    is_strictly_simple_sub, run_p,
)
from .axioms import (
    check_consequence_props, check_hilbert_axioms, check_lambda_equations,
    check_lemma_theorems, check_translations,
)
from .terms import (
    NoTermFound, NotOrdered, NotSeparated, NotStrictlySimple,
    NotTermEquivalent, Op, SynthTrace, TransferTerm, UnaryTerm, apply_word,
    delta_formula, delta_ops, delta_trace, is_separated, separating_term,
    synth_chi, synth_crisp_imp, synth_delta, synth_goedel_imp, synth_luk_imp,
    transfer_term,
)

__version__ = "0.1.0"
