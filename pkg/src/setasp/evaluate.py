"""Three-valued evaluation of set atoms, bodies, heads, and rules.

A set name denotes, relative to an interpretation A, the set of tuples
whose condition literals all belong to A. Aggregates over that set are
partial: ``min``/``max`` of an empty set and any aggregate over tuples
whose first coordinate is not a natural number are undefined, which makes
the enclosing comparison undefined rather than an error.
"""

from __future__ import annotations

import enum
from typing import Iterable

from .grounding import eval_arith, eval_ground_builtin
from .syntax import (
    AggAggCmp,
    AggCmp,
    AggregateFn,
    Builtin,
    Disjunction,
    Function,
    Head,
    Integer,
    IntegerOverflow,
    Interpretation,
    Literal,
    MAX_INT,
    Naf,
    Pos,
    Rule,
    SetAtom,
    SetIntro,
    SetIntroKind,
    SetName,
    Term,
    Variable,
)


class Truth(enum.Enum):
    TRUE = "true"
    FALSE = "false"
    UNDEFINED = "undefined"


def _match_term(pattern: Term, value: Term, binding: dict[str, Term]) -> bool:
    if isinstance(pattern, Variable):
        known = binding.get(pattern.name)
        if known is None:
            binding[pattern.name] = value
            return True
        return known == value
    if isinstance(pattern, Function):
        return (
            isinstance(value, Function)
            and value.name == pattern.name
            and len(value.args) == len(pattern.args)
            and all(_match_term(p, v, binding) for p, v in zip(pattern.args, value.args))
        )
    return pattern == value


def instantiate_set_name(name: SetName, interp: Interpretation) -> frozenset[tuple[Term, ...]]:
    """The value of a set name in an interpretation.

    Exactly the tuples t for which every condition literal, instantiated at
    t, belongs to the interpretation.
    """
    by_key: dict[tuple[str, bool, int], list[Literal]] = {}
    for literal in interp:
        by_key.setdefault((literal.predicate, literal.negated, len(literal.args)), []).append(literal)

    order = [v.name for v in name.vars]
    tuples: set[tuple[Term, ...]] = set()

    def extend(index: int, binding: dict[str, Term]) -> None:
        if index == len(name.cond):
            tuples.add(tuple(binding[v] for v in order))
            return
        pattern = name.cond[index]
        for candidate in by_key.get((pattern.predicate, pattern.negated, len(pattern.args)), ()):
            trial = dict(binding)
            if all(_match_term(p, v, trial) for p, v in zip(pattern.args, candidate.args)):
                extend(index + 1, trial)

    extend(0, {})
    return frozenset(tuples)


def eval_aggregate(fn: AggregateFn, tuples: Iterable[tuple[Term, ...]]) -> int | None:
    """Apply an aggregate to a finite set of tuples; None means undefined.

    ``card`` counts tuples. The others act on first coordinates, which must
    all be natural numbers; ``sum`` of the empty set is 0, ``min``/``max``
    of the empty set are undefined.
    """
    tuples = list(tuples)
    if fn is AggregateFn.CARD:
        return len(tuples)
    coords = []
    for t in tuples:
        first = t[0] if t else None
        if not isinstance(first, Integer) or first.value < 0:
            return None
        coords.append(first.value)
    if fn is AggregateFn.SUM:
        total = sum(coords)
        if total > MAX_INT:
            raise IntegerOverflow("sum aggregate leaves the machine integer range")
        return total
    if not coords:
        return None
    return min(coords) if fn is AggregateFn.MIN else max(coords)


_CMP = {
    ">": lambda a, b: a > b,
    ">=": lambda a, b: a >= b,
    "<": lambda a, b: a < b,
    "<=": lambda a, b: a <= b,
    "=": lambda a, b: a == b,
    "!=": lambda a, b: a != b,
}


def eval_set_atom_with_instantiations(
    atom: SetAtom, instantiations: tuple[frozenset[tuple[Term, ...]], ...]
) -> Truth:
    """Truth of a set atom once each set name occurrence has a value."""
    if isinstance(atom, AggCmp):
        value = eval_aggregate(atom.fn, instantiations[0])
        if value is None:
            return Truth.UNDEFINED
        if not isinstance(atom.bound, Integer):
            raise TypeError(f"aggregate bound is not ground: {atom.bound}")
        return Truth.TRUE if _CMP[atom.rel](value, atom.bound.value) else Truth.FALSE
    if isinstance(atom, AggAggCmp):
        left = eval_aggregate(atom.fn1, instantiations[0])
        right = eval_aggregate(atom.fn2, instantiations[1])
        if left is None or right is None:
            return Truth.UNDEFINED
        return Truth.TRUE if _CMP[atom.rel](left, right) else Truth.FALSE
    left_set, right_set = instantiations
    if atom.rel == "<":
        holds = left_set < right_set
    elif atom.rel == "<=":
        holds = left_set <= right_set
    else:
        holds = left_set == right_set
    return Truth.TRUE if holds else Truth.FALSE


def eval_set_atom(atom: SetAtom, interp: Interpretation) -> Truth:
    """Three-valued truth of a set atom in an interpretation.

    Aggregate comparisons are undefined when the aggregate is; set
    relations compare two finite instantiations and are never undefined.
    """
    if isinstance(atom, AggCmp):
        insts = (instantiate_set_name(atom.set_name, interp),)
    elif isinstance(atom, AggAggCmp):
        insts = (instantiate_set_name(atom.set1, interp), instantiate_set_name(atom.set2, interp))
    else:
        insts = (instantiate_set_name(atom.left, interp), instantiate_set_name(atom.right, interp))
    return eval_set_atom_with_instantiations(atom, insts)


def eval_body(body: Iterable, interp: Interpretation) -> Truth:
    """Three-valued conjunction: false dominates, then undefined."""
    undefined = False
    for element in body:
        if isinstance(element, Pos):
            if element.literal not in interp:
                return Truth.FALSE
        elif isinstance(element, Naf):
            if element.literal in interp:
                return Truth.FALSE
        elif isinstance(element, Builtin):
            left = eval_arith(element.left)
            right = eval_arith(element.right)
            if not eval_ground_builtin(left, element.rel, right):
                return Truth.FALSE
        else:
            truth = eval_set_atom(element.atom, interp)
            if truth is Truth.FALSE:
                return Truth.FALSE
            if truth is Truth.UNDEFINED:
                undefined = True
    return Truth.UNDEFINED if undefined else Truth.TRUE


def predicate_extension(predicate: str, arity: int, interp: Interpretation) -> frozenset[tuple[Term, ...]]:
    """Tuples t with a positive atom p(t) in the interpretation."""
    return frozenset(
        l.args for l in interp if l.predicate == predicate and not l.negated and len(l.args) == arity
    )


def head_true(head: Head, interp: Interpretation) -> bool:
    """Head truth: some disjunct holds, or the set introduction holds.

    The empty disjunction (a constraint head) is never true. A set
    introduction ``p <= S`` is true when p's extension is a subset of the
    value of S; ``S <= p`` and ``p = S`` analogously.
    """
    if isinstance(head, Disjunction):
        return any(l in interp for l in head.literals)
    extension = predicate_extension(head.predicate, head.set_name.arity, interp)
    value = instantiate_set_name(head.set_name, interp)
    if head.kind is SetIntroKind.SUBSET_OF:
        return extension <= value
    if head.kind is SetIntroKind.SUPERSET_OF:
        return value <= extension
    return extension == value


def rule_satisfied(rule: Rule, interp: Interpretation) -> bool:
    """A rule is satisfied when its head is true or its body is not true."""
    if head_true(rule.head, interp):
        return True
    return eval_body(rule.body, interp) is not Truth.TRUE


def satisfies_all_rules(rules: Iterable[Rule], interp: Interpretation) -> bool:
    return all(rule_satisfied(r, interp) for r in rules)
