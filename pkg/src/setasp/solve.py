"""Candidate enumeration and full answer-set search under either semantics.

Candidates are consistent subsets of the candidate universe: the literals
occurring in disjunctive heads plus every pool instance of a
set-introduction predicate. Nothing outside that universe can be supported
by a rule, so the restriction loses no answer sets (the test suite
cross-checks this against full power-set enumeration).
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field

from .alog import is_alog_answer_set
from .basic import DEFAULT_SUBSET_CAP
from .errors import UniverseTooLarge
from .evaluate import satisfies_all_rules
from .slogplus import DEFAULT_REDUCT_CAP, is_slogp_answer_set
from .syntax import (
    Disjunction,
    GroundProgram,
    Interpretation,
    Literal,
    interpretation_sort_key,
    literal_sort_key,
)

DEFAULT_UNIVERSE_CAP = 20


class Semantics(enum.Enum):
    ALOG = "alog"
    SLOG_PLUS = "slog+"
    BOTH = "both"

    def __str__(self) -> str:
        return self.value


def candidate_universe(program: GroundProgram) -> frozenset[Literal]:
    """Literals that some rule can support."""
    pool = program.signature.pool()
    literals: set[Literal] = set()
    for rule in program.rules:
        if isinstance(rule.head, Disjunction):
            literals.update(rule.head.literals)
        else:
            predicate = rule.head.predicate
            arity = rule.head.set_name.arity
            literals.update(
                Literal(predicate, args, False) for args in itertools.product(pool, repeat=arity)
            )
    return frozenset(literals)


def consistent_candidates(universe: frozenset[Literal]):
    """All consistent subsets of the universe, deterministic order."""
    from .basic import consistent_subsets

    return consistent_subsets(universe)


@dataclass(frozen=True)
class SolveResult:
    """Answer sets per semantics, plus enumeration statistics."""

    alog: tuple[Interpretation, ...] | None = None
    slog_plus: tuple[Interpretation, ...] | None = None
    stats: dict = field(default_factory=dict)

    def for_semantics(self, semantics: Semantics) -> tuple[Interpretation, ...]:
        if semantics is Semantics.ALOG:
            assert self.alog is not None
            return self.alog
        if semantics is Semantics.SLOG_PLUS:
            assert self.slog_plus is not None
            return self.slog_plus
        raise ValueError("pick one semantics")


def solve(program: GroundProgram, mode: Semantics = Semantics.ALOG, *,
          universe_cap: int = DEFAULT_UNIVERSE_CAP,
          subset_cap: int = DEFAULT_SUBSET_CAP,
          reduct_cap: int = DEFAULT_REDUCT_CAP) -> SolveResult:
    """All answer sets under the requested semantics, sorted.

    Candidates that fail to satisfy some program rule are skipped up
    front: answer sets satisfy every rule, so the filter is harmless, and
    it keeps reduct enumeration off the overwhelmingly losing candidates.
    """
    universe = candidate_universe(program)
    if len(universe) > universe_cap:
        raise UniverseTooLarge(
            f"candidate universe has {len(universe)} literals, cap is {universe_cap}"
        )
    alog_found: list[Interpretation] = []
    slogp_found: list[Interpretation] = []
    candidates = 0
    satisfying = 0
    for candidate in consistent_candidates(universe):
        candidates += 1
        if not satisfies_all_rules(program.rules, candidate):
            continue
        satisfying += 1
        if mode in (Semantics.ALOG, Semantics.BOTH):
            if is_alog_answer_set(program, candidate, subset_cap=subset_cap):
                alog_found.append(candidate)
        if mode in (Semantics.SLOG_PLUS, Semantics.BOTH):
            if is_slogp_answer_set(program, candidate, subset_cap=subset_cap, reduct_cap=reduct_cap):
                slogp_found.append(candidate)
    stats = {
        "universe": len(universe),
        "candidates": candidates,
        "satisfying_candidates": satisfying,
        "ground_rules": len(program.rules),
    }
    return SolveResult(
        alog=tuple(sorted(alog_found, key=interpretation_sort_key))
        if mode in (Semantics.ALOG, Semantics.BOTH) else None,
        slog_plus=tuple(sorted(slogp_found, key=interpretation_sort_key))
        if mode in (Semantics.SLOG_PLUS, Semantics.BOTH) else None,
        stats=stats,
    )
