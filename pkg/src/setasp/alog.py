"""The strict set-formation semantics (CLI name: ``alog``).

A candidate is an answer set when it is a classical answer set of the
program transformed in two stages:

1. set-introduction reduct: an introduction rule whose head fails in the
   candidate becomes a constraint; one whose head holds becomes a defining
   rule ``p(t) :- body`` for every p-atom of the candidate;
2. set reduct: rules whose set atoms are false or undefined in the
   candidate are removed, and every remaining set atom is replaced by the
   condition instances that witness its set names inside the candidate.

Stage 2 is what enforces the strict discipline: a belief justified through
a set must re-derive every member of that set, so self-supporting sets
never close.
"""

from __future__ import annotations

from .evaluate import Truth, eval_set_atom, head_true, instantiate_set_name
from .syntax import (
    BasicProgram,
    Disjunction,
    GroundProgram,
    Interpretation,
    Literal,
    Pos,
    Rule,
    SA,
    SetAtom,
    SetIntro,
    Term,
    literal_sort_key,
    set_names_of,
    substitute_term,
)


def instantiate_cond(cond, vars_, values: tuple[Term, ...]) -> list[Literal]:
    """The condition literals of a set name at a concrete tuple."""
    binding = {v.name: t for v, t in zip(vars_, values)}
    return [
        Literal(l.predicate, tuple(substitute_term(a, binding) for a in l.args), l.negated)
        for l in cond
    ]


def witness_literals(atom: SetAtom, interp: Interpretation) -> frozenset[Literal]:
    """Union of cond(t) over the atom's set names and their tuples inside interp."""
    found: set[Literal] = set()
    for name in set_names_of(atom):
        for values in instantiate_set_name(name, interp):
            found.update(instantiate_cond(name.cond, name.vars, values))
    return frozenset(found)


def set_intro_reduct(program: GroundProgram, interp: Interpretation) -> GroundProgram:
    """Eliminate set-introduction heads relative to a candidate."""
    rules: list[Rule] = []
    for rule in program.rules:
        if not isinstance(rule.head, SetIntro):
            rules.append(rule)
            continue
        if not head_true(rule.head, interp):
            rules.append(Rule(Disjunction(), rule.body))
            continue
        predicate = rule.head.predicate
        arity = rule.head.set_name.arity
        atoms = sorted(
            (l for l in interp if l.predicate == predicate and not l.negated and len(l.args) == arity),
            key=literal_sort_key,
        )
        for atom in atoms:
            rules.append(Rule(Disjunction((atom,)), rule.body))
    return GroundProgram(tuple(rules), program.signature)


def set_reduct(program: GroundProgram, interp: Interpretation) -> BasicProgram:
    """Eliminate set atoms relative to a candidate (strict discipline).

    The program must already be free of set-introduction heads.
    """
    rules: list[Rule] = []
    for rule in program.rules:
        if isinstance(rule.head, SetIntro):
            raise ValueError("apply set_intro_reduct before set_reduct")
        body: list = []
        keep = True
        for element in rule.body:
            if not isinstance(element, SA):
                body.append(element)
                continue
            if eval_set_atom(element.atom, interp) is not Truth.TRUE:
                keep = False
                break
            replacement = sorted(witness_literals(element.atom, interp), key=literal_sort_key)
            body.extend(Pos(l) for l in replacement)
        if keep:
            rules.append(Rule(rule.head, tuple(body)))
    return BasicProgram(tuple(rules), program.signature)


def is_alog_answer_set(program: GroundProgram, interp: Interpretation,
                       subset_cap: int | None = None) -> bool:
    """Candidate check under the strict semantics."""
    from .basic import DEFAULT_SUBSET_CAP, is_answer_set_basic

    reduced = set_reduct(set_intro_reduct(program, interp), interp)
    cap = DEFAULT_SUBSET_CAP if subset_cap is None else subset_cap
    return is_answer_set_basic(interp, reduced, subset_cap=cap)
