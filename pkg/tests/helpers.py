"""Shared fixtures-by-convention for the test suite.

Includes a small reference evaluator, written independently of the
package's evaluator, used to cross-check three-valued truth on random
inputs, and a full power-set solver used to validate the candidate
universe restriction.
"""

from __future__ import annotations

import itertools
import random
from pathlib import Path

from setasp import (
    AggAggCmp,
    AggCmp,
    AggregateFn,
    DomainConfig,
    GroundProgram,
    Integer,
    Literal,
    Naf,
    ObjectConstant,
    Pos,
    SA,
    SetName,
    Variable,
    ground_program,
    herbrand_atoms,
    is_alog_answer_set,
    is_slogp_answer_set,
    parse_literals,
    parse_program,
)
from setasp.basic import consistent_subsets
from setasp.solve import Semantics

PROGRAMS = Path(__file__).resolve().parent.parent / "programs"


def load(name: str, int_range: tuple[int, int] | None = None) -> GroundProgram:
    program = parse_program((PROGRAMS / name).read_text())
    return ground_program(program, DomainConfig.from_program(program, int_range))


def lits(text: str) -> frozenset[Literal]:
    return frozenset(parse_literals(text))


def lit(predicate: str, *args, negated: bool = False) -> Literal:
    terms = tuple(Integer(a) if isinstance(a, int) else ObjectConstant(a) for a in args)
    return Literal(predicate, terms, negated)


# ---------------------------------------------------------------------------
# Reference three-valued evaluation, kept deliberately naive.

TRUE, FALSE, UNDEF = "true", "false", "undefined"


def ref_instantiation(name: SetName, interp) -> set[tuple]:
    """Enumerate candidate tuples from the terms observed in interp."""
    terms = {a for l in interp for a in l.args}
    found = set()
    for values in itertools.product(sorted(terms, key=str), repeat=len(name.vars)):
        env = {v.name: t for v, t in zip(name.vars, values)}
        if all(_ref_apply(c, env) in interp for c in name.cond):
            found.add(values)
    return found


def _ref_apply(literal: Literal, env) -> Literal:
    args = tuple(env[a.name] if isinstance(a, Variable) else a for a in literal.args)
    return Literal(literal.predicate, args, literal.negated)


def ref_aggregate(fn: AggregateFn, tuples) -> int | None:
    if fn is AggregateFn.CARD:
        return len(tuples)
    firsts = [t[0] for t in tuples]
    if not all(isinstance(f, Integer) and f.value >= 0 for f in firsts):
        return None
    values = [f.value for f in firsts]
    if fn is AggregateFn.SUM:
        return sum(values)
    if not values:
        return None
    return min(values) if fn is AggregateFn.MIN else max(values)


_REL = {
    ">": lambda a, b: a > b, ">=": lambda a, b: a >= b,
    "<": lambda a, b: a < b, "<=": lambda a, b: a <= b,
    "=": lambda a, b: a == b, "!=": lambda a, b: a != b,
}


def ref_set_atom(atom, interp) -> str:
    if isinstance(atom, AggCmp):
        value = ref_aggregate(atom.fn, ref_instantiation(atom.set_name, interp))
        if value is None:
            return UNDEF
        return TRUE if _REL[atom.rel](value, atom.bound.value) else FALSE
    if isinstance(atom, AggAggCmp):
        left = ref_aggregate(atom.fn1, ref_instantiation(atom.set1, interp))
        right = ref_aggregate(atom.fn2, ref_instantiation(atom.set2, interp))
        if left is None or right is None:
            return UNDEF
        return TRUE if _REL[atom.rel](left, right) else FALSE
    left = ref_instantiation(atom.left, interp)
    right = ref_instantiation(atom.right, interp)
    if atom.rel == "<":
        return TRUE if left < right else FALSE
    if atom.rel == "<=":
        return TRUE if left <= right else FALSE
    return TRUE if left == right else FALSE


def ref_body(body, interp) -> str:
    values = []
    for element in body:
        if isinstance(element, Pos):
            values.append(TRUE if element.literal in interp else FALSE)
        elif isinstance(element, Naf):
            values.append(FALSE if element.literal in interp else TRUE)
        elif isinstance(element, SA):
            values.append(ref_set_atom(element.atom, interp))
        else:
            raise NotImplementedError("reference evaluator covers literal and set elements")
    if FALSE in values:
        return FALSE
    if UNDEF in values:
        return UNDEF
    return TRUE


# ---------------------------------------------------------------------------
# Full power-set solving over the Herbrand base (no candidate restriction,
# no satisfaction prefilter): the oracle for the solver's shortcuts.


def powerset_answer_sets(program: GroundProgram, mode: Semantics) -> set:
    base = herbrand_atoms(program)
    check = is_alog_answer_set if mode is Semantics.ALOG else is_slogp_answer_set
    return {
        candidate
        for candidate in consistent_subsets(base)
        if check(program, candidate)
    }


def random_interpretation(rng: random.Random, predicates=("p", "q"), size=4) -> frozenset[Literal]:
    pool = [Integer(i) for i in range(3)] + [ObjectConstant(c) for c in "ab"]
    chosen = set()
    for _ in range(rng.randint(0, size)):
        predicate = rng.choice(predicates)
        chosen.add(Literal(predicate, (rng.choice(pool),), rng.random() < 0.2))
    consistent = {l for l in chosen if l.complement() not in chosen or not l.negated}
    return frozenset(consistent)
