"""The liberal set-formation semantics (CLI name: ``slog+``).

Where the strict discipline replaces a set atom by the whole of its
witness set, this semantics replaces it by one *minimal support*: a
componentwise-minimal vector of literal sets, one coordinate per set name
occurrence, such that every enlargement of the vector inside the candidate
still satisfies the atom. A candidate is an answer set when some choice of
minimal supports yields a reduct the candidate is a classical answer set
of. A belief may therefore lean on a set containing it, as long as the
atom's truth is witnessed independently of that belief.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

from .alog import set_intro_reduct
from .errors import UniverseTooLarge
from .evaluate import Truth, eval_set_atom, eval_set_atom_with_instantiations
from .syntax import (
    BasicProgram,
    GroundProgram,
    Interpretation,
    Literal,
    Pos,
    Rule,
    SA,
    SetAtom,
    SetIntro,
    SetName,
    Term,
    interpretation_sort_key,
    literal_sort_key,
    set_names_of,
)

DEFAULT_REDUCT_CAP = 10**6

# A support vector: one set of ground literals per set name occurrence.
SupportVector = tuple[frozenset[Literal], ...]


def coordinate_universe(name: SetName, interp: Interpretation) -> frozenset[Literal]:
    """Members of the interpretation that instantiate some condition literal.

    Only these literals can influence the set name's value, so restricting
    support coordinates to them preserves satisfaction (see
    docs/semantics.md for the argument).
    """
    relevant: set[Literal] = set()
    for literal in interp:
        for pattern in name.cond:
            if (
                pattern.predicate == literal.predicate
                and pattern.negated == literal.negated
                and len(pattern.args) == len(literal.args)
                and _matches(pattern, literal)
            ):
                relevant.add(literal)
                break
    return frozenset(relevant)


def _matches(pattern: Literal, literal: Literal) -> bool:
    from .evaluate import _match_term

    binding: dict[str, Term] = {}
    return all(_match_term(p, v, binding) for p, v in zip(pattern.args, literal.args))


def satisfied_by_vector(atom: SetAtom, vector: SupportVector) -> bool:
    """Evaluate the atom with each set name read off its own coordinate.

    Undefined counts as not satisfied.
    """
    from .evaluate import instantiate_set_name

    names = set_names_of(atom)
    if len(vector) != len(names):
        raise ValueError(f"vector has {len(vector)} coordinates, atom has {len(names)} set names")
    insts = tuple(
        instantiate_set_name(name, coordinate) for name, coordinate in zip(names, vector)
    )
    return eval_set_atom_with_instantiations(atom, insts) is Truth.TRUE


DEFAULT_SUPPORT_CAP = 2**20


def minimal_supports(atom: SetAtom, interp: Interpretation,
                     search_cap: int = DEFAULT_SUPPORT_CAP) -> tuple[SupportVector, ...]:
    """All minimal supports of the atom in the interpretation.

    A vector W qualifies when every componentwise enlargement V with
    W <= V inside the interpretation satisfies the atom, and no strictly
    smaller vector qualifies. Computed by exhaustive search over the
    (condition-relevant) coordinate subsets.
    """
    names = set_names_of(atom)
    universes = [sorted(coordinate_universe(n, interp), key=literal_sort_key) for n in names]
    box = 1
    for universe in universes:
        box *= 2 ** len(universe)
    if box > search_cap:
        raise UniverseTooLarge(f"support search over {box} vectors exceeds the cap of {search_cap}")

    good_cache: dict[SupportVector, bool] = {}

    def good(vector: SupportVector) -> bool:
        cached = good_cache.get(vector)
        if cached is not None:
            return cached
        result = satisfied_by_vector(atom, vector)
        if result:
            for i, universe in enumerate(universes):
                for literal in universe:
                    if literal not in vector[i]:
                        extended = vector[:i] + (vector[i] | {literal},) + vector[i + 1:]
                        if not good(extended):
                            result = False
                            break
                if not result:
                    break
        good_cache[vector] = result
        return result

    def lower_covers(vector: SupportVector) -> Iterator[SupportVector]:
        for i, coordinate in enumerate(vector):
            for literal in coordinate:
                yield vector[:i] + (coordinate - {literal},) + vector[i + 1:]

    minimal: list[SupportVector] = []
    for choice in itertools.product(*(_subsets(u) for u in universes)):
        vector = tuple(choice)
        if good(vector) and not any(good(c) for c in lower_covers(vector)):
            minimal.append(vector)
    minimal.sort(key=lambda v: tuple(interpretation_sort_key(c) for c in v))
    return tuple(minimal)


def _subsets(universe: list[Literal]) -> Iterator[frozenset[Literal]]:
    for mask in range(2 ** len(universe)):
        yield frozenset(universe[i] for i in range(len(universe)) if mask >> i & 1)


@dataclass(frozen=True)
class WeakReductSpace:
    """The weak set reducts of a program relative to a candidate.

    Rules whose set atoms are false or undefined in the candidate are
    removed up front; each remaining set atom occurrence then independently
    picks one of its minimal supports, so the space holds the product of
    the per-occurrence support counts.
    """

    program: GroundProgram
    interp: Interpretation
    kept_rules: tuple[Rule, ...]
    choices: tuple[tuple[SupportVector, ...], ...]  # per set atom occurrence

    @classmethod
    def build(cls, program: GroundProgram, interp: Interpretation) -> "WeakReductSpace":
        kept: list[Rule] = []
        choices: list[tuple[SupportVector, ...]] = []
        for rule in program.rules:
            if isinstance(rule.head, SetIntro):
                raise ValueError("apply set_intro_reduct before building weak reducts")
            atoms = [e.atom for e in rule.body if isinstance(e, SA)]
            if any(eval_set_atom(a, interp) is not Truth.TRUE for a in atoms):
                continue
            kept.append(rule)
            for atom in atoms:
                choices.append(minimal_supports(atom, interp))
        return cls(program, interp, tuple(kept), tuple(choices))

    @property
    def count(self) -> int:
        total = 1
        for supports in self.choices:
            total *= len(supports)
        return total

    def reducts(self) -> Iterator[BasicProgram]:
        """Yield one basic program per support combination, in choice order."""
        for combination in itertools.product(*self.choices):
            yield self._materialize(combination)

    def _materialize(self, combination: tuple[SupportVector, ...]) -> BasicProgram:
        rules: list[Rule] = []
        cursor = 0
        for rule in self.kept_rules:
            body: list = []
            for element in rule.body:
                if isinstance(element, SA):
                    support = combination[cursor]
                    cursor += 1
                    union = sorted(frozenset().union(*support) if support else frozenset(),
                                   key=literal_sort_key)
                    body.extend(Pos(l) for l in union)
                else:
                    body.append(element)
            rules.append(Rule(rule.head, tuple(body)))
        return BasicProgram(tuple(rules), self.program.signature)


def weak_set_reducts(program: GroundProgram, interp: Interpretation,
                     reduct_cap: int = DEFAULT_REDUCT_CAP) -> Iterator[BasicProgram]:
    """Lazily enumerate the weak set reducts; raises beyond the cap."""
    space = WeakReductSpace.build(program, interp)
    if space.count > reduct_cap:
        raise UniverseTooLarge(f"{space.count} weak set reducts exceed the cap of {reduct_cap}")
    return space.reducts()


def count_weak_set_reducts(program: GroundProgram, interp: Interpretation) -> int:
    return WeakReductSpace.build(program, interp).count


def is_slogp_answer_set(program: GroundProgram, interp: Interpretation,
                        subset_cap: int | None = None,
                        reduct_cap: int = DEFAULT_REDUCT_CAP) -> bool:
    """Candidate check under the liberal semantics.

    True when the candidate is a classical answer set of some weak set
    reduct of its set-introduction reduct; enumeration stops at the first
    witness.
    """
    from .basic import DEFAULT_SUBSET_CAP, is_answer_set_basic

    cap = DEFAULT_SUBSET_CAP if subset_cap is None else subset_cap
    reduced = set_intro_reduct(program, interp)
    for reduct in weak_set_reducts(reduced, interp, reduct_cap=reduct_cap):
        if is_answer_set_basic(interp, reduct, subset_cap=cap):
            return True
    return False


def witnessing_weak_reduct(program: GroundProgram, interp: Interpretation,
                           subset_cap: int | None = None,
                           reduct_cap: int = DEFAULT_REDUCT_CAP) -> tuple[BasicProgram | None, int]:
    """First reduct the candidate is an answer set of, plus the space size."""
    from .basic import DEFAULT_SUBSET_CAP, is_answer_set_basic

    cap = DEFAULT_SUBSET_CAP if subset_cap is None else subset_cap
    reduced = set_intro_reduct(program, interp)
    space = WeakReductSpace.build(reduced, interp)
    if space.count > reduct_cap:
        raise UniverseTooLarge(f"{space.count} weak set reducts exceed the cap of {reduct_cap}")
    for reduct in space.reducts():
        if is_answer_set_basic(interp, reduct, subset_cap=cap):
            return reduct, space.count
    return None, space.count
