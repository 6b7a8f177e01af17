"""Classical answer sets for ground programs without set constructs.

This is the target of every reduct: disjunctive rules over ground literals
with default negation. Answer sets follow the standard two-step recipe,
reduce by the candidate and check that the candidate is a minimal model of
the reduction. Minimality is checked by exhaustive search over subsets;
this is a reference engine, correctness beats speed.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Sequence

from .errors import UniverseTooLarge
from .evaluate import eval_ground_builtin
from .grounding import eval_arith
from .syntax import (
    BasicProgram,
    Builtin,
    Interpretation,
    Literal,
    Naf,
    Pos,
    Rule,
    interpretation_sort_key,
    is_consistent,
    literal_sort_key,
)

DEFAULT_SUBSET_CAP = 20


def gl_reduct(program: BasicProgram, interp: Interpretation) -> BasicProgram:
    """Drop rules whose 'not l' is contradicted, erase the remaining 'not's."""
    kept: list[Rule] = []
    for rule in program.rules:
        body = []
        blocked = False
        for element in rule.body:
            if isinstance(element, Naf):
                if element.literal in interp:
                    blocked = True
                    break
            else:
                body.append(element)
        if not blocked:
            kept.append(Rule(rule.head, tuple(body)))
    return BasicProgram(tuple(kept), program.signature)


def _builtin_holds(element: Builtin) -> bool:
    return eval_ground_builtin(eval_arith(element.left), element.rel, eval_arith(element.right))


def is_closed(literals: frozenset[Literal], rules: Sequence[Rule]) -> bool:
    """Positive closure: every fired rule has a head disjunct in the set.

    Rules here must be free of default negation (a reduct). A constraint
    (empty head) firing means the set is not closed.
    """
    for rule in rules:
        fired = True
        for element in rule.body:
            if isinstance(element, Pos):
                if element.literal not in literals:
                    fired = False
                    break
            elif isinstance(element, Builtin):
                if not _builtin_holds(element):
                    fired = False
                    break
            else:
                raise ValueError(f"default negation left in a reduct rule: {rule}")
        if fired and not any(d in literals for d in rule.head.literals):
            return False
    return True


def is_answer_set_basic(interp: Interpretation, program: BasicProgram,
                        subset_cap: int = DEFAULT_SUBSET_CAP) -> bool:
    """Candidate check: consistent, closed under the reduct, and minimal.

    Minimality means no proper subset is closed under the same reduct; the
    search over subsets is exponential and therefore capped.
    """
    if not is_consistent(interp):
        return False
    reduct = gl_reduct(program, interp)
    if not is_closed(interp, reduct.rules):
        return False
    members = sorted(interp, key=literal_sort_key)
    if len(members) > subset_cap:
        raise UniverseTooLarge(
            f"minimality check over {len(members)} literals exceeds the cap of {subset_cap}"
        )
    for size in range(len(members)):
        for subset in itertools.combinations(members, size):
            if is_closed(frozenset(subset), reduct.rules):
                return False
    return True


def consistent_subsets(universe: Iterable[Literal]) -> Iterable[frozenset[Literal]]:
    """All consistent subsets of a literal universe, in a deterministic order."""
    members = sorted(set(universe), key=literal_sort_key)
    conflicts = []
    index = {l: i for i, l in enumerate(members)}
    for i, literal in enumerate(members):
        j = index.get(literal.complement())
        if j is not None and j > i:
            conflicts.append((i, j))
    for mask in range(2 ** len(members)):
        if any(mask >> i & 1 and mask >> j & 1 for i, j in conflicts):
            continue
        yield frozenset(members[i] for i in range(len(members)) if mask >> i & 1)


def answer_sets_basic(program: BasicProgram, universe: Iterable[Literal],
                      cap: int = DEFAULT_SUBSET_CAP) -> tuple[Interpretation, ...]:
    """Every answer set drawn from the given literal universe, sorted."""
    members = sorted(set(universe), key=literal_sort_key)
    if len(members) > cap:
        raise UniverseTooLarge(f"universe of {len(members)} literals exceeds the cap of {cap}")
    found = [
        candidate
        for candidate in consistent_subsets(members)
        if is_answer_set_basic(candidate, program, subset_cap=cap)
    ]
    return tuple(sorted(found, key=interpretation_sort_key))


def least_fixpoint(program: BasicProgram) -> Interpretation | None:
    """Least fixpoint oracle for negation-free, non-disjunctive programs.

    Returns the unique answer set, or None when a constraint fires on the
    fixpoint or the fixpoint is inconsistent. Raises ValueError on input
    outside the fragment; this stays an independent cross-check for the
    subset-search route.
    """
    definite: list[tuple[Literal, tuple, tuple]] = []
    constraints: list[tuple[tuple, tuple]] = []
    for rule in program.rules:
        positives = []
        builtins = []
        for element in rule.body:
            if isinstance(element, Pos):
                positives.append(element.literal)
            elif isinstance(element, Builtin):
                builtins.append(element)
            else:
                raise ValueError("least_fixpoint needs a negation-free program")
        if len(rule.head.literals) > 1:
            raise ValueError("least_fixpoint needs a non-disjunctive program")
        if rule.head.literals:
            definite.append((rule.head.literals[0], tuple(positives), tuple(builtins)))
        else:
            constraints.append((tuple(positives), tuple(builtins)))

    derived: set[Literal] = set()
    changed = True
    while changed:
        changed = False
        for head, positives, builtins in definite:
            if head in derived:
                continue
            if all(p in derived for p in positives) and all(_builtin_holds(b) for b in builtins):
                derived.add(head)
                changed = True
    result = frozenset(derived)
    if not is_consistent(result):
        return None
    for positives, builtins in constraints:
        if all(p in derived for p in positives) and all(_builtin_holds(b) for b in builtins):
            return None
    return result
