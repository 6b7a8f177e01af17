"""Naive grounding over an explicit finite domain.

Rule variables (the ones occurring outside set names) are instantiated over
the full pool of object constants plus the declared integer range.
Arithmetic subterms are evaluated; instances whose arithmetic escapes the
integer range vanish, as do instances whose ground comparisons are false.
Set names are copied verbatim: their variables are local by construction.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .errors import DomainTooLarge, UnsafeRule
from .syntax import (
    AggAggCmp,
    AggCmp,
    ArithExpr,
    Builtin,
    Disjunction,
    Function,
    GroundProgram,
    Integer,
    IntegerOverflow,
    Literal,
    MAX_INT,
    MIN_INT,
    Naf,
    ObjectConstant,
    Pos,
    Program,
    Rule,
    SA,
    SetIntro,
    Signature,
    Term,
    Variable,
    rule_variables,
    term_sort_key,
)

DEFAULT_INSTANCE_CAP = 1_000_000
DEFAULT_ATOM_CAP = 200_000


@dataclass(frozen=True, slots=True)
class DomainConfig:
    """The finite instantiation domain: constants plus an integer range.

    The range is empty when ``int_min > int_max`` (the canonical empty range
    is ``(0, -1)``), which is the right domain for programs that never
    mention integers.
    """

    int_min: int = 0
    int_max: int = -1
    constants: frozenset[str] = field(default_factory=frozenset)
    max_instances: int = DEFAULT_INSTANCE_CAP

    @classmethod
    def from_program(cls, program: Program, int_range: tuple[int, int] | None = None,
                     max_instances: int = DEFAULT_INSTANCE_CAP) -> "DomainConfig":
        """Domain implied by the program text, with an optional range override.

        Without a ``#int`` directive or override, the range spans the integer
        literals written in the program (empty if there are none).
        """
        if int_range is None:
            int_range = program.signature.int_range
        if int_range is None:
            ints = [i for i in _program_integers(program)]
            int_range = (min(ints), max(ints)) if ints else (0, -1)
        return cls(int_range[0], int_range[1], frozenset(program.signature.constants), max_instances)

    def integers(self) -> range:
        return range(self.int_min, self.int_max + 1)

    def pool(self) -> tuple[Term, ...]:
        terms: list[Term] = [Integer(i) for i in self.integers()]
        terms.extend(ObjectConstant(c) for c in sorted(self.constants))
        return tuple(terms)

    def signature_for(self, program: Program) -> Signature:
        int_range = (self.int_min, self.int_max) if self.int_min <= self.int_max else None
        return Signature(
            predicates=program.signature.predicates,
            constants=tuple(sorted(set(program.signature.constants) | self.constants)),
            int_range=int_range,
        )


def _program_integers(program: Program):
    def from_term(term: Term):
        if isinstance(term, Integer):
            yield term.value
        elif isinstance(term, Function):
            for arg in term.args:
                yield from from_term(arg)
        elif isinstance(term, ArithExpr):
            yield from from_term(term.left)
            yield from from_term(term.right)

    for rule in program.rules:
        heads = rule.head.literals if isinstance(rule.head, Disjunction) else rule.head.set_name.cond
        for literal in heads:
            for arg in literal.args:
                yield from from_term(arg)
        for element in rule.body:
            if isinstance(element, (Pos, Naf)):
                for arg in element.literal.args:
                    yield from from_term(arg)
            elif isinstance(element, Builtin):
                yield from from_term(element.left)
                yield from from_term(element.right)
            elif isinstance(element, SA):
                if isinstance(element.atom, AggCmp):
                    yield from from_term(element.atom.bound)
                for name in (
                    (element.atom.set_name,) if isinstance(element.atom, AggCmp)
                    else (element.atom.set1, element.atom.set2) if isinstance(element.atom, AggAggCmp)
                    else (element.atom.left, element.atom.right)
                ):
                    for lit in name.cond:
                        for arg in lit.args:
                            yield from from_term(arg)


def eval_arith(term: Term, binding: dict[str, Term] | None = None) -> Term:
    """Evaluate arithmetic under a binding; the result is a ground term.

    Raises TypeError when an arithmetic operator meets a non-integer and
    IntegerOverflow when a result leaves the machine range.
    """
    binding = binding or {}
    if isinstance(term, Variable):
        try:
            bound = binding[term.name]
        except KeyError:
            raise TypeError(f"unbound variable {term.name}") from None
        return eval_arith(bound, binding)
    if isinstance(term, (ObjectConstant, Integer)):
        return term
    if isinstance(term, Function):
        return Function(term.name, tuple(eval_arith(a, binding) for a in term.args))
    left = eval_arith(term.left, binding)
    right = eval_arith(term.right, binding)
    if not isinstance(left, Integer) or not isinstance(right, Integer):
        raise TypeError(f"arithmetic on non-integer operands: {left} {term.op} {right}")
    if term.op == "+":
        value = left.value + right.value
    elif term.op == "-":
        value = left.value - right.value
    else:
        value = left.value * right.value
    if not MIN_INT <= value <= MAX_INT:
        raise IntegerOverflow(f"{left} {term.op} {right} leaves the machine integer range")
    return Integer(value)


class _DropInstance(Exception):
    """Internal: this ground instance evaluates away."""


def _eval_arg(term: Term, binding: dict[str, Term], domain: DomainConfig) -> Term:
    """Evaluate a literal argument; arithmetic escaping the range drops it.

    The range check applies wherever arithmetic produced the value, also
    inside function terms; terms written as plain integers are untouched.
    """
    if isinstance(term, Variable):
        try:
            return binding[term.name]
        except KeyError:
            raise TypeError(f"unbound variable {term.name}") from None
    if isinstance(term, (ObjectConstant, Integer)):
        return term
    if isinstance(term, Function):
        return Function(term.name, tuple(_eval_arg(a, binding, domain) for a in term.args))
    value = eval_arith(term, binding)
    if not domain.int_min <= value.value <= domain.int_max:
        raise _DropInstance
    return value


def _ground_literal(literal: Literal, binding: dict[str, Term], domain: DomainConfig) -> Literal:
    args = []
    for arg in literal.args:
        try:
            args.append(_eval_arg(arg, binding, domain))
        except TypeError:
            raise _DropInstance from None
    return Literal(literal.predicate, tuple(args), literal.negated)


_CMP = {
    ">": lambda a, b: a > b,
    ">=": lambda a, b: a >= b,
    "<": lambda a, b: a < b,
    "<=": lambda a, b: a <= b,
    "=": lambda a, b: a == b,
    "!=": lambda a, b: a != b,
}


def eval_ground_builtin(left: Term, rel: str, right: Term) -> bool:
    """Truth of a ground comparison; order relations require integers."""
    if rel in ("=", "!="):
        return _CMP[rel](left, right)
    if not isinstance(left, Integer) or not isinstance(right, Integer):
        raise TypeError(f"ordered comparison on non-integers: {left} {rel} {right}")
    return _CMP[rel](left.value, right.value)


def _ground_rule_instance(rule: Rule, binding: dict[str, Term], domain: DomainConfig) -> Rule | None:
    """One instance of a rule, or None when the instance evaluates away."""
    try:
        if isinstance(rule.head, Disjunction):
            head: Disjunction | SetIntro = Disjunction(
                tuple(_ground_literal(l, binding, domain) for l in rule.head.literals)
            )
        else:
            head = rule.head  # set names carry no rule variables
        body = []
        for element in rule.body:
            if isinstance(element, Pos):
                body.append(Pos(_ground_literal(element.literal, binding, domain)))
            elif isinstance(element, Naf):
                body.append(Naf(_ground_literal(element.literal, binding, domain)))
            elif isinstance(element, Builtin):
                try:
                    left = eval_arith(element.left, binding)
                    right = eval_arith(element.right, binding)
                    truth = eval_ground_builtin(left, element.rel, right)
                except TypeError:
                    raise _DropInstance from None
                if not truth:
                    raise _DropInstance
                # True comparisons are resolved away.
            else:
                atom = element.atom
                if isinstance(atom, AggCmp):
                    try:
                        bound = eval_arith(atom.bound, binding)
                    except TypeError:
                        raise _DropInstance from None
                    if not isinstance(bound, Integer):
                        raise _DropInstance
                    body.append(SA(AggCmp(atom.fn, atom.set_name, atom.rel, bound)))
                else:
                    body.append(element)
    except _DropInstance:
        return None
    return Rule(head, tuple(body))


def _check_safety(rule: Rule, index: int) -> None:
    """Reject variables that occur only under default negation."""
    outside_naf: set[str] = set()
    under_naf: set[str] = set()

    def collect(term: Term, into: set[str]) -> None:
        if isinstance(term, Variable):
            into.add(term.name)
        elif isinstance(term, Function):
            for a in term.args:
                collect(a, into)
        elif isinstance(term, ArithExpr):
            collect(term.left, into)
            collect(term.right, into)

    if isinstance(rule.head, Disjunction):
        for literal in rule.head.literals:
            for arg in literal.args:
                collect(arg, outside_naf)
    for element in rule.body:
        if isinstance(element, Naf):
            for arg in element.literal.args:
                collect(arg, under_naf)
        elif isinstance(element, Pos):
            for arg in element.literal.args:
                collect(arg, outside_naf)
        elif isinstance(element, Builtin):
            collect(element.left, outside_naf)
            collect(element.right, outside_naf)
        elif isinstance(element, SA) and isinstance(element.atom, AggCmp):
            collect(element.atom.bound, outside_naf)

    only_naf = under_naf - outside_naf
    if only_naf:
        name = sorted(only_naf)[0]
        raise UnsafeRule(f"rule {index + 1}: variable {name} occurs only under 'not'")


def ground_program(program: Program, domain: DomainConfig | None = None) -> GroundProgram:
    """All ground instances of the program's rules over the domain pool.

    Output order is deterministic: rules in program order, bindings in
    lexicographic pool order.
    """
    if domain is None:
        domain = DomainConfig.from_program(program)
    pool = sorted(domain.pool(), key=term_sort_key)
    ground_rules: list[Rule] = []
    total = 0
    for index, rule in enumerate(program.rules):
        _check_safety(rule, index)
        variables = [v.name for v in rule_variables(rule)]
        if variables and not pool:
            continue
        count = len(pool) ** len(variables) if variables else 1
        total += count
        if total > domain.max_instances:
            raise DomainTooLarge(
                f"grounding needs more than {domain.max_instances} instances"
            )
        for values in itertools.product(pool, repeat=len(variables)):
            binding = dict(zip(variables, values))
            instance = _ground_rule_instance(rule, binding, domain)
            if instance is not None:
                ground_rules.append(instance)
    return GroundProgram(tuple(ground_rules), domain.signature_for(program))


def herbrand_atoms(program: GroundProgram, cap: int = DEFAULT_ATOM_CAP) -> frozenset[Literal]:
    """All ground literals over the signature's predicates and pool, both signs."""
    pool = program.signature.pool()
    total = 0
    literals: list[Literal] = []
    for predicate, arity in program.signature.predicates:
        count = 2 * (len(pool) ** arity)
        total += count
        if total > cap:
            raise DomainTooLarge(f"Herbrand base needs more than {cap} literals")
        for args in itertools.product(pool, repeat=arity):
            literals.append(Literal(predicate, args, False))
            literals.append(Literal(predicate, args, True))
    return frozenset(literals)
