"""Strict-discipline reducts and answer-set checking."""

import random

from setasp import (
    BasicProgram,
    is_alog_answer_set,
    is_answer_set_basic,
    parse_program,
    set_intro_reduct,
    set_reduct,
)
from setasp.audits import audit_antichain, audit_rule_satisfaction, audit_supportedness
from setasp.generator import GeneratorConfig, random_program
from setasp.solve import Semantics, candidate_universe, solve
from setasp.syntax import SA, SetIntro

from helpers import lits, load


def rules_text(program) -> list[str]:
    return [str(r) for r in program.rules]


def test_set_reduct_witnesses_both_set_names():
    program = load("p4.alog")
    assert rules_text(set_reduct(program, lits("q(a)"))) == ["p(a) :- q(a).", "q(a)."]
    assert rules_text(set_reduct(program, lits("q(a), p(a)"))) == [
        "p(a) :- p(a), q(a).",
        "q(a).",
    ]


def test_set_reduct_of_self_cardinality_rule():
    # In the empty candidate the disequality holds vacuously, so the rule
    # survives with an empty replacement and demands p(1) groundlessly.
    program = load("p0.alog")
    reduct = set_reduct(program, frozenset())
    assert rules_text(reduct) == ["p(1)."]
    assert not is_answer_set_basic(frozenset(), reduct)


def test_set_reduct_removes_false_atoms():
    program = load("p0.alog")
    assert rules_text(set_reduct(program, lits("p(1)"))) == []


def test_set_intro_reduct_on_subset_heads():
    program = load("p9.alog")
    assert rules_text(set_intro_reduct(program, lits("q(a)"))) == ["q(a)."]
    assert rules_text(set_intro_reduct(program, lits("q(a), p(a)"))) == ["q(a).", "p(a)."]


def test_failed_intro_head_becomes_a_constraint():
    from setasp import DomainConfig, ground_program

    program = parse_program("p <= {X: q(X)} :- r.")
    grounded = ground_program(program, DomainConfig(constants=frozenset({"a"})))
    reduced = set_intro_reduct(grounded, lits("p(a)"))
    assert rules_text(reduced) == [":- r."]


def test_reducts_eliminate_their_constructs():
    rng = random.Random(101)
    for _ in range(150):
        program = random_program(rng, GeneratorConfig(max_rules=5, max_universe=8))
        for candidate in _some_candidates(rng, program):
            intro_free = set_intro_reduct(program, candidate)
            assert not any(isinstance(r.head, SetIntro) for r in intro_free.rules)
            reduct = set_reduct(intro_free, candidate)
            assert not any(
                isinstance(e, SA) for r in reduct.rules for e in r.body
            )


def _some_candidates(rng, program):
    from setasp.solve import consistent_candidates

    universe = candidate_universe(program)
    all_candidates = list(consistent_candidates(universe))
    rng.shuffle(all_candidates)
    return all_candidates[:8]


def test_undefined_guard_removes_the_rule():
    from setasp import DomainConfig, ground_program

    program = ground_program(
        parse_program("even(0). q :- min{X: p(X)} = 0."), DomainConfig()
    )
    result = solve(program, Semantics.BOTH)
    assert result.alog == (lits("even(0)"),)
    assert result.slog_plus == (lits("even(0)"),)


def test_strict_rejects_tautologically_guarded_belief():
    program = load("p2.alog")
    assert not is_alog_answer_set(program, lits("p(1)"))
    assert not is_alog_answer_set(program, frozenset())


def test_strict_rejects_the_looping_pair():
    program = load("p1.alog")
    assert not is_alog_answer_set(program, lits("p(0), p(1)"))
    assert not is_alog_answer_set(program, frozenset())


def test_bounded_even_numbers_with_min():
    program = load("even_min.alog")
    assert is_alog_answer_set(program, lits("even(0), even(2), q"))
    assert not is_alog_answer_set(program, lits("even(0), even(2)"))


def test_matches_basic_semantics_on_set_free_programs():
    rng = random.Random(31)
    from setasp.generator import random_set_free_program
    from setasp.solve import consistent_candidates

    for _ in range(120):
        raw = random_set_free_program(rng, GeneratorConfig(max_rules=5, max_universe=8))
        program = BasicProgram(raw.rules, raw.signature)
        for candidate in consistent_candidates(candidate_universe(program)):
            assert is_alog_answer_set(program, candidate) == is_answer_set_basic(
                candidate, program
            )


def test_answer_sets_pass_the_structural_audits():
    rng = random.Random(37)
    checked = 0
    for _ in range(120):
        program = random_program(rng, GeneratorConfig(max_rules=5, max_universe=8))
        result = solve(program, Semantics.ALOG)
        for interp in result.alog:
            assert audit_rule_satisfaction(program, interp)
            assert audit_supportedness(program, interp)
            checked += 1
        if not any(isinstance(r.head, SetIntro) for r in program.rules):
            assert audit_antichain(result.alog)
    assert checked > 40
