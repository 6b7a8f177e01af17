"""Core syntax types shared by every other module.

Programs are built from regular literals over a finite signature, set names
``{X: cond}``, set atoms (aggregate comparisons and subset relations between
set names), and rules whose head is either a disjunction of literals or a
set introduction (``p <= S``, ``S <= p``, ``p = S``).

Every type here is a frozen dataclass: construction is the only mutation
point, equality is structural, and all values are hashable, so interpreters
and reduct transformers can share them freely.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Iterator, Union

# Integers are bounded; arithmetic or sums escaping this range raise rather
# than silently wrapping.
MIN_INT = -(2**63)
MAX_INT = 2**63 - 1


class IntegerOverflow(OverflowError):
    """Arithmetic or aggregation left the machine integer range."""


# ---------------------------------------------------------------------------
# Terms


@dataclass(frozen=True, slots=True)
class ObjectConstant:
    name: str

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True, slots=True)
class Integer:
    value: int

    def __str__(self) -> str:
        return str(self.value)


@dataclass(frozen=True, slots=True)
class Variable:
    name: str

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True, slots=True)
class Function:
    name: str
    args: tuple["Term", ...]

    def __str__(self) -> str:
        return f"{self.name}({','.join(str(a) for a in self.args)})"


@dataclass(frozen=True, slots=True)
class ArithExpr:
    op: str  # one of + - *
    left: "Term"
    right: "Term"

    def __str__(self) -> str:
        left = str(self.left)
        right = str(self.right)
        if isinstance(self.left, ArithExpr) and _PRECEDENCE[self.left.op] < _PRECEDENCE[self.op]:
            left = f"({left})"
        if isinstance(self.right, ArithExpr) and _PRECEDENCE[self.right.op] <= _PRECEDENCE[self.op]:
            right = f"({right})"
        return f"{left}{self.op}{right}"


_PRECEDENCE = {"+": 1, "-": 1, "*": 2}

Term = Union[ObjectConstant, Integer, Variable, Function, ArithExpr]


def term_is_ground(term: Term) -> bool:
    """A term is ground when it contains no variables and no arithmetic."""
    if isinstance(term, (ObjectConstant, Integer)):
        return True
    if isinstance(term, (Variable, ArithExpr)):
        return False
    return all(term_is_ground(a) for a in term.args)


def term_variables(term: Term) -> Iterator[Variable]:
    """Yield the variables of a term in first-occurrence order."""
    if isinstance(term, Variable):
        yield term
    elif isinstance(term, Function):
        for arg in term.args:
            yield from term_variables(arg)
    elif isinstance(term, ArithExpr):
        yield from term_variables(term.left)
        yield from term_variables(term.right)


def substitute_term(term: Term, binding: dict[str, Term]) -> Term:
    """Replace variables by their bound terms; unbound variables stay."""
    if isinstance(term, Variable):
        return binding.get(term.name, term)
    if isinstance(term, Function):
        return Function(term.name, tuple(substitute_term(a, binding) for a in term.args))
    if isinstance(term, ArithExpr):
        return ArithExpr(term.op, substitute_term(term.left, binding), substitute_term(term.right, binding))
    return term


def term_sort_key(term: Term):
    if isinstance(term, Integer):
        return (0, term.value, "", ())
    if isinstance(term, ObjectConstant):
        return (1, 0, term.name, ())
    if isinstance(term, Variable):
        return (2, 0, term.name, ())
    if isinstance(term, Function):
        return (3, 0, term.name, tuple(term_sort_key(a) for a in term.args))
    return (4, 0, term.op, (term_sort_key(term.left), term_sort_key(term.right)))


# ---------------------------------------------------------------------------
# Literals


@dataclass(frozen=True, slots=True)
class Literal:
    """A regular literal: a predicate atom, possibly classically negated."""

    predicate: str
    args: tuple[Term, ...] = ()
    negated: bool = False

    def __str__(self) -> str:
        sign = "-" if self.negated else ""
        if not self.args:
            return f"{sign}{self.predicate}"
        return f"{sign}{self.predicate}({','.join(str(a) for a in self.args)})"

    @property
    def is_ground(self) -> bool:
        return all(term_is_ground(a) for a in self.args)

    def complement(self) -> "Literal":
        return Literal(self.predicate, self.args, not self.negated)


def complement(literal: Literal) -> Literal:
    """Flip the classical-negation sign; involutive."""
    return literal.complement()


def is_consistent(literals: Iterable[Literal]) -> bool:
    """True when no literal occurs together with its classical complement."""
    seen = set(literals)
    return not any(lit.complement() in seen for lit in seen)


def literal_sort_key(literal: Literal):
    """Order literals by predicate, then argument tuple, negative last."""
    return (
        literal.predicate,
        len(literal.args),
        tuple(term_sort_key(a) for a in literal.args),
        literal.negated,
    )


# An interpretation is a finite consistent set of ground literals.
Interpretation = frozenset[Literal]


def sorted_literals(literals: Iterable[Literal]) -> list[Literal]:
    return sorted(literals, key=literal_sort_key)


def format_interpretation(literals: Iterable[Literal]) -> str:
    return "{" + ", ".join(str(l) for l in sorted_literals(literals)) + "}"


def interpretation_sort_key(literals: Iterable[Literal]):
    return tuple(literal_sort_key(l) for l in sorted_literals(literals))


# ---------------------------------------------------------------------------
# Set names and set atoms


@dataclass(frozen=True, slots=True)
class SetName:
    """``{X, Y: cond}``: the tuples of objects believed to satisfy cond.

    ``vars`` must list exactly the variables occurring in ``cond``, in
    first-occurrence order; all of them are local to the set name.
    """

    vars: tuple[Variable, ...]
    cond: tuple[Literal, ...]

    def __str__(self) -> str:
        head = ",".join(v.name for v in self.vars)
        body = ", ".join(str(l) for l in self.cond)
        return f"{{{head}: {body}}}"

    @property
    def arity(self) -> int:
        return len(self.vars)


def cond_variables(cond: Iterable[Literal]) -> list[Variable]:
    """Variables of a condition in first-occurrence order, without repeats."""
    seen: dict[str, Variable] = {}
    for literal in cond:
        for arg in literal.args:
            for var in term_variables(arg):
                seen.setdefault(var.name, var)
    return list(seen.values())


class AggregateFn(enum.Enum):
    CARD = "card"
    SUM = "sum"
    MIN = "min"
    MAX = "max"

    def __str__(self) -> str:
        return self.value


# Arithmetic comparison symbols, shared by aggregate atoms and builtins.
REL_OPS = (">", ">=", "<", "<=", "=", "!=")
# Relations between set names: strict subset, subset, equality.
SET_RELS = ("<", "<=", "=")


@dataclass(frozen=True, slots=True)
class AggCmp:
    """``f{X: cond} rel k`` with k an integer (a variable before grounding)."""

    fn: AggregateFn
    set_name: SetName
    rel: str
    bound: Term

    def __str__(self) -> str:
        return f"{self.fn}{self.set_name} {self.rel} {self.bound}"


@dataclass(frozen=True, slots=True)
class AggAggCmp:
    """``f1{..} rel f2{..}``: comparison between two aggregate values."""

    fn1: AggregateFn
    set1: SetName
    rel: str
    fn2: AggregateFn
    set2: SetName

    def __str__(self) -> str:
        return f"{self.fn1}{self.set1} {self.rel} {self.fn2}{self.set2}"


@dataclass(frozen=True, slots=True)
class SetRel:
    """``S1 rel S2`` with rel one of ``<`` (strict subset), ``<=``, ``=``."""

    left: SetName
    rel: str
    right: SetName

    def __str__(self) -> str:
        return f"{self.left} {self.rel} {self.right}"


SetAtom = Union[AggCmp, AggAggCmp, SetRel]


def set_names_of(atom: SetAtom) -> tuple[SetName, ...]:
    """Set name occurrences of a set atom, in syntactic order."""
    if isinstance(atom, AggCmp):
        return (atom.set_name,)
    if isinstance(atom, AggAggCmp):
        return (atom.set1, atom.set2)
    return (atom.left, atom.right)


def predicate_set_name(predicate: str, arity: int, avoid: Iterable[str] = ()) -> SetName:
    """The set name ``{X1..Xn: p(X1..Xn)}`` a bare predicate abbreviates.

    Fresh variable names avoid the given names so the expansion can never
    shadow variables of the enclosing rule.
    """
    taken = set(avoid)
    names: list[Variable] = []
    i = 1
    while len(names) < arity:
        candidate = f"V{i}"
        i += 1
        if candidate not in taken:
            names.append(Variable(candidate))
    vars_ = tuple(names)
    return SetName(vars_, (Literal(predicate, tuple(vars_)),))


# ---------------------------------------------------------------------------
# Rules and programs


@dataclass(frozen=True, slots=True)
class Pos:
    literal: Literal

    def __str__(self) -> str:
        return str(self.literal)


@dataclass(frozen=True, slots=True)
class Naf:
    literal: Literal

    def __str__(self) -> str:
        return f"not {self.literal}"


@dataclass(frozen=True, slots=True)
class SA:
    atom: SetAtom

    def __str__(self) -> str:
        return str(self.atom)


@dataclass(frozen=True, slots=True)
class Builtin:
    """An arithmetic comparison between terms, e.g. ``Y >= 0``."""

    left: Term
    rel: str
    right: Term

    def __str__(self) -> str:
        return f"{self.left} {self.rel} {self.right}"


BodyElement = Union[Pos, Naf, SA, Builtin]


@dataclass(frozen=True, slots=True)
class Disjunction:
    literals: tuple[Literal, ...] = ()

    def __str__(self) -> str:
        return " or ".join(str(l) for l in self.literals)


class SetIntroKind(enum.Enum):
    SUBSET_OF = "subset_of"  # p <= S : p is an arbitrary subset of S
    SUPERSET_OF = "superset_of"  # S <= p : p is an arbitrary superset of S
    EQUALS = "equals"  # p = S : p is another name for S


@dataclass(frozen=True, slots=True)
class SetIntro:
    kind: SetIntroKind
    predicate: str
    set_name: SetName

    def __str__(self) -> str:
        if self.kind is SetIntroKind.SUBSET_OF:
            return f"{self.predicate} <= {self.set_name}"
        if self.kind is SetIntroKind.SUPERSET_OF:
            return f"{self.set_name} <= {self.predicate}"
        return f"{self.predicate} = {self.set_name}"


Head = Union[Disjunction, SetIntro]


@dataclass(frozen=True, slots=True)
class Rule:
    head: Head
    body: tuple[BodyElement, ...] = ()

    def __str__(self) -> str:
        head = str(self.head)
        if not self.body:
            return f"{head}." if head else ":- ."
        body = ", ".join(str(e) for e in self.body)
        if head:
            return f"{head} :- {body}."
        return f":- {body}."


def rule_variables(rule: Rule) -> list[Variable]:
    """Free (rule) variables in first-occurrence order.

    Variables inside set names are local to them and never free.
    """
    seen: dict[str, Variable] = {}

    def visit_term(term: Term) -> None:
        for var in term_variables(term):
            seen.setdefault(var.name, var)

    def visit_literal(literal: Literal) -> None:
        for arg in literal.args:
            visit_term(arg)

    if isinstance(rule.head, Disjunction):
        for lit in rule.head.literals:
            visit_literal(lit)
    for element in rule.body:
        if isinstance(element, (Pos, Naf)):
            visit_literal(element.literal)
        elif isinstance(element, Builtin):
            visit_term(element.left)
            visit_term(element.right)
        elif isinstance(element, SA) and isinstance(element.atom, AggCmp):
            visit_term(element.atom.bound)
    return list(seen.values())


def rule_is_ground(rule: Rule) -> bool:
    return not rule_variables(rule) and not _rule_has_arith(rule)


def _rule_has_arith(rule: Rule) -> bool:
    def term_has_arith(term: Term) -> bool:
        if isinstance(term, ArithExpr):
            return True
        if isinstance(term, Function):
            return any(term_has_arith(a) for a in term.args)
        return False

    def literal_has_arith(literal: Literal) -> bool:
        return any(term_has_arith(a) for a in literal.args)

    if isinstance(rule.head, Disjunction):
        if any(literal_has_arith(l) for l in rule.head.literals):
            return True
    for element in rule.body:
        if isinstance(element, (Pos, Naf)) and literal_has_arith(element.literal):
            return True
        if isinstance(element, Builtin):
            if term_has_arith(element.left) or term_has_arith(element.right):
                return True
        if isinstance(element, SA) and isinstance(element.atom, AggCmp):
            if term_has_arith(element.atom.bound):
                return True
    return False


def rule_literals(rule: Rule) -> Iterator[Literal]:
    """Every literal written in the rule, including set-name conditions."""
    if isinstance(rule.head, Disjunction):
        yield from rule.head.literals
    else:
        yield from rule.head.set_name.cond
    for element in rule.body:
        if isinstance(element, (Pos, Naf)):
            yield element.literal
        elif isinstance(element, SA):
            for name in set_names_of(element.atom):
                yield from name.cond


@dataclass(frozen=True, slots=True)
class Signature:
    """Predicate arities, object constants, and the declared integer range."""

    predicates: tuple[tuple[str, int], ...] = ()
    constants: tuple[str, ...] = ()
    int_range: tuple[int, int] | None = None

    def arity(self, predicate: str) -> int | None:
        for name, arity in self.predicates:
            if name == predicate:
                return arity
        return None

    def pool(self) -> tuple[Term, ...]:
        """Ground terms available for instantiation: integers then constants."""
        terms: list[Term] = []
        if self.int_range is not None:
            lo, hi = self.int_range
            terms.extend(Integer(i) for i in range(lo, hi + 1))
        terms.extend(ObjectConstant(c) for c in self.constants)
        return tuple(terms)


def collect_signature(rules: Iterable[Rule], int_range: tuple[int, int] | None = None) -> Signature:
    """Scan rules for predicates, arities, and object constants.

    Set-introduction predicates get the arity of their set name. Arity
    conflicts are the parser's job to reject; here the first wins.
    """
    predicates: dict[str, int] = {}
    constants: set[str] = set()

    def visit_term(term: Term) -> None:
        if isinstance(term, ObjectConstant):
            constants.add(term.name)
        elif isinstance(term, Function):
            # Function symbols are not object constants; only their
            # arguments contribute to the pool.
            for arg in term.args:
                visit_term(arg)
        elif isinstance(term, ArithExpr):
            visit_term(term.left)
            visit_term(term.right)

    def visit_literal(literal: Literal) -> None:
        predicates.setdefault(literal.predicate, len(literal.args))
        for arg in literal.args:
            visit_term(arg)

    for rule in rules:
        for literal in rule_literals(rule):
            visit_literal(literal)
        if isinstance(rule.head, SetIntro):
            predicates.setdefault(rule.head.predicate, rule.head.set_name.arity)
        for element in rule.body:
            if isinstance(element, Builtin):
                visit_term(element.left)
                visit_term(element.right)
            elif isinstance(element, SA) and isinstance(element.atom, AggCmp):
                visit_term(element.atom.bound)

    return Signature(
        predicates=tuple(sorted(predicates.items())),
        constants=tuple(sorted(constants)),
        int_range=int_range,
    )


@dataclass(frozen=True, slots=True, eq=False)
class Program:
    rules: tuple[Rule, ...] = ()
    signature: Signature = Signature()

    # Structural equality across the Program/GroundProgram/BasicProgram
    # hierarchy: a parsed program equals its reparse even when one side
    # carries a groundness guarantee.
    def __eq__(self, other) -> bool:
        if isinstance(other, Program):
            return self.rules == other.rules and self.signature == other.signature
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.rules, self.signature))

    def __str__(self) -> str:
        lines = []
        if self.signature.int_range is not None:
            lo, hi = self.signature.int_range
            lines.append(f"#int({lo},{hi}).")
        lines.extend(str(r) for r in self.rules)
        return "\n".join(lines) + ("\n" if lines else "")


@dataclass(frozen=True, slots=True, eq=False)
class GroundProgram(Program):
    """A program whose only variables are set variables inside set names."""

    def __post_init__(self) -> None:
        for rule in self.rules:
            if not rule_is_ground(rule):
                raise ValueError(f"rule is not ground: {rule}")


@dataclass(frozen=True, slots=True, eq=False)
class BasicProgram(GroundProgram):
    """A ground program without set atoms or set-introduction heads."""

    def __post_init__(self) -> None:
        GroundProgram.__post_init__(self)
        for rule in self.rules:
            if isinstance(rule.head, SetIntro):
                raise ValueError(f"set introduction head in basic program: {rule}")
            if any(isinstance(e, SA) for e in rule.body):
                raise ValueError(f"set atom in basic program: {rule}")
