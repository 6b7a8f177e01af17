"""Grounding: instantiation, arithmetic, the Herbrand base, safety."""

import itertools
import random

import pytest

from setasp import (
    DomainConfig,
    DomainTooLarge,
    Integer,
    IntegerOverflow,
    ObjectConstant,
    UnsafeRule,
    Variable,
    eval_arith,
    ground_program,
    herbrand_atoms,
    parse_program,
    pretty_print,
)
from setasp.syntax import MAX_INT, ArithExpr

from helpers import lit, load


def test_variable_bound_grounds_to_two_instances():
    ground = load("p5.alog")
    assert [str(r) for r in ground.rules] == [
        "p(1) :- card{X: p(X)} = 0.",
        "p(1) :- card{X: p(X)} = 1.",
    ]


def test_already_ground_program_grounds_to_itself():
    ground = load("p6.alog")
    again = ground_program(ground, DomainConfig.from_program(ground))
    assert again == ground


def test_p5_and_p6_ground_to_the_same_rules():
    assert set(load("p5.alog").rules) == set(load("p6.alog").rules)


def test_single_constant_substitution():
    program = parse_program("q(X) :- r(X).")
    ground = ground_program(program, DomainConfig(constants=frozenset({"a"})))
    assert [str(r) for r in ground.rules] == ["q(a) :- r(a)."]


def test_false_ground_comparison_deletes_instance():
    program = parse_program("#int(0,2). q(X) :- X > 0.")
    ground = ground_program(program)
    assert [str(r) for r in ground.rules] == ["q(1).", "q(2)."]


def test_arithmetic_escaping_the_range_drops_the_instance():
    ground = load("even_min.alog")
    assert [str(r) for r in ground.rules] == [
        "even(0).",
        "even(2) :- even(0).",
        "q :- min{X: even(X)} = 0.",
    ]


def test_range_check_reaches_arithmetic_inside_function_terms():
    program = parse_program("#int(0,2). q(f(I+2)) :- r(I). r(1). r(0).")
    ground = ground_program(program)
    assert [str(r) for r in ground.rules] == ["q(f(2)) :- r(0).", "r(1).", "r(0)."]


def test_eval_arith():
    assert eval_arith(ArithExpr("+", Variable("I"), Integer(2)), {"I": Integer(4)}) == Integer(6)
    assert eval_arith(ArithExpr("*", Integer(3), Integer(2)), {}) == Integer(6)
    with pytest.raises(TypeError):
        eval_arith(ArithExpr("+", Variable("I"), Integer(2)), {"I": ObjectConstant("a")})
    with pytest.raises(IntegerOverflow):
        eval_arith(ArithExpr("*", Integer(MAX_INT), Integer(2)), {})


def test_herbrand_atoms_with_explicit_range():
    ground = load("p0.alog", int_range=(0, 1))
    assert herbrand_atoms(ground) == {
        lit("p", 0), lit("p", 1),
        lit("p", 0, negated=True), lit("p", 1, negated=True),
    }


def test_herbrand_atoms_of_empty_program():
    ground = load("empty.alog")
    assert herbrand_atoms(ground) == frozenset()


def test_herbrand_atoms_of_course_records():
    # Oracle: enumerate predicate x argument-tuple x sign by hand.
    ground = load("graduate.alog")
    constants = ["cs1", "cs2", "john", "mike"]
    expected = set()
    for predicate, arity in [("taken", 2), ("required", 1), ("ready_to_graduate", 1)]:
        for args in itertools.product(constants, repeat=arity):
            for negated in (False, True):
                expected.add(lit(predicate, *args, negated=negated))
    assert herbrand_atoms(ground) == expected


def test_grounding_commutes_with_set_variable_renaming():
    original = parse_program("q(Y) :- r(Y), card{X: p(X)} >= 1. r(a).")
    renamed = parse_program("q(Y) :- r(Y), card{Z: p(Z)} >= 1. r(a).")
    ground_original = ground_program(original)
    ground_renamed = ground_program(renamed)
    as_text = pretty_print(ground_original).replace("{X: p(X)}", "{Z: p(Z)}")
    assert pretty_print(ground_renamed) == as_text


def test_instance_count_bound():
    rng = random.Random(5)
    for _ in range(20):
        n_vars = rng.randint(0, 2)
        variables = ["XYZ"[i] for i in range(n_vars)]
        body = ", ".join(f"q({v})" for v in variables) or "q(a)"
        args = ", ".join(variables) if variables else "a"
        program = parse_program(f"p({args}) :- {body}.")
        domain = DomainConfig(0, rng.randint(0, 2), frozenset("ab"))
        ground = ground_program(program, domain)
        assert len(ground.rules) <= len(program.rules) * len(domain.pool()) ** n_vars


def test_unsafe_rule_is_rejected():
    program = parse_program("p :- not q(X).")
    with pytest.raises(UnsafeRule):
        ground_program(program, DomainConfig(constants=frozenset({"a"})))


def test_head_variable_with_naf_is_safe_enough():
    # The variable occurs in the head too, so naive instantiation covers it.
    program = parse_program("-q(X) :- not q(X).")
    ground = ground_program(program, DomainConfig(constants=frozenset({"a", "b"})))
    assert len(ground.rules) == 2


def test_instantiation_cap():
    program = parse_program("p(X,Y,Z) :- q(X), q(Y), q(Z).")
    domain = DomainConfig(0, 30, frozenset(), max_instances=1000)
    with pytest.raises(DomainTooLarge):
        ground_program(program, domain)


def test_herbrand_cap():
    ground = load("graduate.alog")
    with pytest.raises(DomainTooLarge):
        herbrand_atoms(ground, cap=10)
