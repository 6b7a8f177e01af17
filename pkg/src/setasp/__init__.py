"""Answer set programming with set atoms: parser, grounder, two semantics.

The package interprets one language under two set-formation disciplines.
Under the strict discipline (``alog``) a belief may never rest on a set
containing it; under the liberal one (``slog+``) it may, provided the set
atom's truth has a justification independent of that belief. Both are
computed by reduct-based candidate checking over finite domains, and a
seeded audit harness verifies the structural guarantees (containment of
strict in liberal answer sets, supportedness, anti-chains, splitting).
"""

from .alog import is_alog_answer_set, set_intro_reduct, set_reduct
from .audits import (
    audit_antichain,
    audit_rule_satisfaction,
    audit_splitting_theorem,
    audit_supportedness,
    splitting_violations,
)
from .basic import answer_sets_basic, gl_reduct, is_answer_set_basic, least_fixpoint
from .errors import CapExceeded, DomainTooLarge, NotASplittingSet, UniverseTooLarge, UnsafeRule
from .evaluate import (
    Truth,
    eval_aggregate,
    eval_body,
    eval_set_atom,
    head_true,
    instantiate_set_name,
    rule_satisfied,
)
from .grounding import DomainConfig, eval_arith, ground_program, herbrand_atoms
from .harness import AuditReport, run_audits
from .parser import ErrorKind, ParseError, parse_literals, parse_program, pretty_print
from .slogplus import (
    count_weak_set_reducts,
    is_slogp_answer_set,
    minimal_supports,
    satisfied_by_vector,
    weak_set_reducts,
)
from .solve import Semantics, SolveResult, candidate_universe, solve
from .splitting import Occurrence, SplitResult, check_splitting_set, occurs_in, split
from .syntax import (
    AggAggCmp,
    AggCmp,
    AggregateFn,
    ArithExpr,
    BasicProgram,
    Builtin,
    Disjunction,
    Function,
    GroundProgram,
    Integer,
    IntegerOverflow,
    Interpretation,
    Literal,
    Naf,
    ObjectConstant,
    Pos,
    Program,
    Rule,
    SA,
    SetIntro,
    SetIntroKind,
    SetName,
    SetRel,
    Signature,
    Variable,
    complement,
    format_interpretation,
    is_consistent,
)

__version__ = "0.1.0"
