"""Auditors for the structural guarantees every answer set must satisfy.

Three families: rule satisfaction and supportedness (each believed literal
has a rule that earns it), the anti-chain property for programs without
set-introduction heads, and the splitting equivalence (solving bottom and
top separately agrees with solving the whole program).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .evaluate import Truth, eval_body, instantiate_set_name, rule_satisfied
from .solve import Semantics, solve
from .splitting import split
from .syntax import (
    Disjunction,
    GroundProgram,
    Interpretation,
    Literal,
    Rule,
    SetIntro,
    SetIntroKind,
)


def audit_rule_satisfaction(program: GroundProgram, interp: Interpretation) -> bool:
    """Every rule of the program is satisfied by the answer set."""
    return all(rule_satisfied(rule, interp) for rule in program.rules)


def _supports(rule: Rule, literal: Literal, interp: Interpretation) -> bool:
    if eval_body(rule.body, interp) is not Truth.TRUE:
        return False
    if isinstance(rule.head, Disjunction):
        if literal not in rule.head.literals:
            return False
        true_disjuncts = {l for l in rule.head.literals if l in interp}
        return true_disjuncts == {literal}
    head = rule.head
    if literal.negated or literal.predicate != head.predicate:
        return False
    if len(literal.args) != head.set_name.arity:
        return False
    if head.kind is SetIntroKind.SUPERSET_OF:
        # A superset introduction may put tuples into p beyond the set name's
        # value, so membership of the condition instance is not required.
        return True
    return literal.args in instantiate_set_name(head.set_name, interp)


def audit_supportedness(program: GroundProgram, interp: Interpretation) -> bool:
    """Each literal has a rule with a true body that singles it out.

    For disjunctive heads the literal must be the only true disjunct; for
    set-introduction heads the literal must be an atom of the introduced
    predicate whose tuple the head's set name warrants.
    """
    return all(
        any(_supports(rule, literal, interp) for rule in program.rules)
        for literal in interp
    )


def audit_antichain(results: Iterable[Interpretation]) -> bool:
    """No answer set is a proper subset of another."""
    sets = list(results)
    return not any(
        a < b for i, a in enumerate(sets) for j, b in enumerate(sets) if i != j
    )


def has_set_intro_heads(program: GroundProgram) -> bool:
    return any(isinstance(r.head, SetIntro) for r in program.rules)


@dataclass(frozen=True)
class SplittingViolation:
    """A candidate on which whole-program and split-and-compose disagree."""

    candidate: Interpretation
    in_whole: bool
    in_composed: bool
    note: str = ""


def _facts_rules(literals: Interpretation) -> tuple[Rule, ...]:
    from .syntax import literal_sort_key

    return tuple(Rule(Disjunction((l,)), ()) for l in sorted(literals, key=literal_sort_key))


def splitting_violations(program: GroundProgram, literals: frozenset[Literal],
                         mode: Semantics, **solve_kwargs) -> list[SplittingViolation]:
    """Counterexamples to the splitting equivalence, empty when it holds.

    The equivalence: A is an answer set of the whole program iff A
    restricted to the splitting set is an answer set of the bottom and A is
    an answer set of the top extended with that restriction as facts.
    """
    if mode is Semantics.BOTH:
        raise ValueError("audit one semantics at a time")
    parts = split(program, literals)
    whole = set(solve(program, mode, **solve_kwargs).for_semantics(mode))
    bottom_sets = solve(parts.bottom, mode, **solve_kwargs).for_semantics(mode)
    composed: set[Interpretation] = set()
    anomalies: list[SplittingViolation] = []
    for base in bottom_sets:
        extended = GroundProgram(_facts_rules(base) + parts.top.rules, program.signature)
        for candidate in solve(extended, mode, **solve_kwargs).for_semantics(mode):
            if candidate & literals != base:
                anomalies.append(
                    SplittingViolation(
                        candidate, candidate in whole, True,
                        "composed answer set disagrees with its bottom part",
                    )
                )
                continue
            composed.add(candidate)
    violations = list(anomalies)
    from .syntax import interpretation_sort_key

    for candidate in sorted(whole ^ composed, key=interpretation_sort_key):
        violations.append(
            SplittingViolation(candidate, candidate in whole, candidate in composed)
        )
    return violations


def audit_splitting_theorem(program: GroundProgram, literals: frozenset[Literal],
                            mode: Semantics, **solve_kwargs) -> bool:
    """True when the splitting equivalence holds for every candidate."""
    return not splitting_violations(program, literals, mode, **solve_kwargs)
