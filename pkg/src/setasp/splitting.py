"""Literal occurrence, splitting sets, and the bottom/top partition.

A ground literal occurs in a set atom when it instantiates one of the
condition literals of a set name inside the atom; it occurs in a body when
it appears there positively, under ``not``, or inside a set atom. Head
occurrence additionally covers the instances a set-introduction head can
derive for its predicate.

A literal set S splits a program when (a) any rule with an S-literal
occurring in its head draws its whole body from S, and (b) every rule that
can derive an S-literal is built entirely from S-literals. The rules built
from S-literals form the bottom, the rest the top.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass

from .errors import NotASplittingSet
from .evaluate import _match_term
from .syntax import (
    Disjunction,
    GroundProgram,
    Literal,
    Naf,
    Pos,
    Rule,
    SA,
    SetName,
    Term,
    set_names_of,
)


class Occurrence(enum.Enum):
    IN_HEAD = "in_head"
    IN_BODY = "in_body"
    NO = "no"


def _instantiates_cond(literal: Literal, name: SetName) -> bool:
    for pattern in name.cond:
        if (
            pattern.predicate == literal.predicate
            and pattern.negated == literal.negated
            and len(pattern.args) == len(literal.args)
        ):
            binding: dict[str, Term] = {}
            if all(_match_term(p, v, binding) for p, v in zip(pattern.args, literal.args)):
                return True
    return False


def occurs_in_body(literal: Literal, rule: Rule) -> bool:
    for element in rule.body:
        if isinstance(element, (Pos, Naf)):
            if element.literal == literal:
                return True
        elif isinstance(element, SA):
            if any(_instantiates_cond(literal, n) for n in set_names_of(element.atom)):
                return True
    return False


def occurs_in_head(literal: Literal, rule: Rule) -> bool:
    if isinstance(rule.head, Disjunction):
        return literal in rule.head.literals
    head = rule.head
    if _instantiates_cond(literal, head.set_name):
        return True
    return (
        not literal.negated
        and literal.predicate == head.predicate
        and len(literal.args) == head.set_name.arity
    )


def occurs_in(literal: Literal, rule: Rule) -> Occurrence:
    """Where a ground literal occurs in a ground rule (head wins over body)."""
    if occurs_in_head(literal, rule):
        return Occurrence.IN_HEAD
    if occurs_in_body(literal, rule):
        return Occurrence.IN_BODY
    return Occurrence.NO


def _pool_instances(name: SetName, pool: tuple[Term, ...]) -> frozenset[Literal]:
    """Every ground instance of the condition literals over the term pool."""
    instances: set[Literal] = set()
    for pattern in name.cond:
        variables = sorted({v.name for a in pattern.args for v in _term_vars(a)})
        for values in itertools.product(pool, repeat=len(variables)):
            binding = dict(zip(variables, values))
            instances.add(
                Literal(pattern.predicate, tuple(_subst(a, binding) for a in pattern.args), pattern.negated)
            )
    return frozenset(instances)


def _term_vars(term: Term):
    from .syntax import term_variables

    return term_variables(term)


def _subst(term: Term, binding: dict[str, Term]) -> Term:
    from .syntax import substitute_term

    return substitute_term(term, binding)


@dataclass(frozen=True)
class RuleOccurrences:
    """Precomputed occurrence sets of one rule over the program pool."""

    head_occurring: frozenset[Literal]
    body_occurring: frozenset[Literal]
    head_derivable: frozenset[Literal]  # disjuncts, or intro-predicate instances

    @property
    def all_occurring(self) -> frozenset[Literal]:
        return self.head_occurring | self.body_occurring


def rule_occurrences(rule: Rule, pool: tuple[Term, ...]) -> RuleOccurrences:
    body: set[Literal] = set()
    for element in rule.body:
        if isinstance(element, (Pos, Naf)):
            body.add(element.literal)
        elif isinstance(element, SA):
            for name in set_names_of(element.atom):
                body.update(_pool_instances(name, pool))
    if isinstance(rule.head, Disjunction):
        head = frozenset(rule.head.literals)
        derivable = head
    else:
        predicate = rule.head.predicate
        arity = rule.head.set_name.arity
        derivable = frozenset(
            Literal(predicate, args, False) for args in itertools.product(pool, repeat=arity)
        )
        head = derivable | _pool_instances(rule.head.set_name, pool)
    return RuleOccurrences(head, frozenset(body), derivable)


@dataclass(frozen=True)
class SplitResult:
    bottom: GroundProgram
    top: GroundProgram


def _occurrences(program: GroundProgram) -> list[RuleOccurrences]:
    pool = program.signature.pool()
    return [rule_occurrences(rule, pool) for rule in program.rules]


def check_splitting_set(program: GroundProgram, literals: frozenset[Literal]) -> bool:
    """Whether the literal set splits the program.

    Condition (a): a rule with an S-literal occurring in its head must draw
    every body-occurring literal from S. Condition (b): a rule that can
    derive an S-literal must be built entirely from S-literals, so no rule
    of the top can define anything the bottom owns.
    """
    for occ in _occurrences(program):
        if occ.head_occurring & literals and not occ.body_occurring <= literals:
            return False
        if occ.head_derivable & literals and not occ.all_occurring <= literals:
            return False
    return True


def split(program: GroundProgram, literals: frozenset[Literal]) -> SplitResult:
    """Partition into bottom (rules built from S-literals) and top (the rest)."""
    if not check_splitting_set(program, literals):
        raise NotASplittingSet("the given literals do not split the program")
    bottom: list[Rule] = []
    top: list[Rule] = []
    for rule, occ in zip(program.rules, _occurrences(program)):
        if occ.all_occurring <= literals:
            bottom.append(rule)
        else:
            top.append(rule)
    return SplitResult(
        GroundProgram(tuple(bottom), program.signature),
        GroundProgram(tuple(top), program.signature),
    )
