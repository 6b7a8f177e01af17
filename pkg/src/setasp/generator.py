"""Seeded random ground programs and splitting sets for the property suites.

The generator aims for small candidate universes (brute-force checks are
exponential in them) while still exercising every construct: classical
negation, default negation, disjunction, aggregate comparisons over
constants and integers, subset relations, and set-introduction heads.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from .solve import candidate_universe
from .splitting import check_splitting_set
from .syntax import (
    AggAggCmp,
    AggCmp,
    AggregateFn,
    Disjunction,
    GroundProgram,
    Integer,
    Literal,
    Naf,
    ObjectConstant,
    Pos,
    Rule,
    SA,
    SetIntro,
    SetIntroKind,
    SetName,
    Variable,
    collect_signature,
)


@dataclass(frozen=True)
class GeneratorConfig:
    max_rules: int = 6
    predicates: tuple[str, ...] = ("p", "q", "r", "s")
    constants: tuple[str, ...] = ("a", "b", "c")
    with_integers: bool = False
    int_max: int = 2
    allow_set_atoms: bool = True
    allow_set_intro: bool = True
    allow_disjunction: bool = True
    allow_classical_negation: bool = True
    max_body: int = 3
    max_universe: int = 10
    max_attempts: int = 60


def random_program(rng: random.Random, config: GeneratorConfig = GeneratorConfig()) -> GroundProgram:
    """Draw a ground program whose candidate universe fits the cap."""
    for _ in range(config.max_attempts):
        program = _draw(rng, config)
        if len(candidate_universe(program)) <= config.max_universe:
            return program
    # Shrink until it fits; dropping rules only shrinks the universe.
    while len(candidate_universe(program)) > config.max_universe and program.rules:
        rules = program.rules[:-1]
        program = GroundProgram(rules, collect_signature(rules, program.signature.int_range))
    return program


def _draw(rng: random.Random, config: GeneratorConfig) -> GroundProgram:
    n_preds = rng.randint(2, len(config.predicates))
    names = list(config.predicates[:n_preds])
    arities = {name: rng.choice((0, 1, 1)) for name in names}
    if config.allow_set_atoms or config.allow_set_intro:
        arities[names[0]] = 1  # set names need at least one unary predicate
    unary = [n for n in names if arities[n] == 1]

    n_consts = rng.randint(1, 2 if config.with_integers else len(config.constants))
    constants = list(config.constants[:n_consts])
    int_range = (0, config.int_max) if config.with_integers else None
    pool = [Integer(i) for i in range(0, config.int_max + 1)] if config.with_integers else []
    pool += [ObjectConstant(c) for c in constants]

    def literal() -> Literal:
        name = rng.choice(names)
        args = (rng.choice(pool),) if arities[name] == 1 else ()
        negated = config.allow_classical_negation and rng.random() < 0.12
        return Literal(name, args, negated)

    def set_name() -> SetName:
        var = Variable("X")
        if len(unary) > 1 and rng.random() < 0.2:
            first, second = rng.sample(unary, 2)
            return SetName((var,), (Literal(first, (var,)), Literal(second, (var,))))
        return SetName((var,), (Literal(rng.choice(unary), (var,)),))

    def set_atom():
        roll = rng.random()
        if roll < 0.6:
            fn = rng.choice((AggregateFn.CARD, AggregateFn.CARD, AggregateFn.MIN))
            rel = rng.choice((">=", "<=", "=", "!=", ">", "<"))
            return AggCmp(fn, set_name(), rel, Integer(rng.randint(0, 3)))
        if roll < 0.85:
            return _set_rel(rng, set_name(), set_name())
        return AggAggCmp(AggregateFn.CARD, set_name(), rng.choice((">=", "<=", "=")),
                         AggregateFn.CARD, set_name())

    def body() -> tuple:
        elements = []
        set_atoms_used = 0
        for _ in range(rng.randint(0, config.max_body)):
            roll = rng.random()
            if config.allow_set_atoms and set_atoms_used < 2 and roll < 0.3:
                elements.append(SA(set_atom()))
                set_atoms_used += 1
            elif roll < 0.65:
                elements.append(Pos(literal()))
            else:
                elements.append(Naf(literal()))
        return tuple(elements)

    rules = []
    for _ in range(rng.randint(1, config.max_rules)):
        roll = rng.random()
        if roll < 0.08:
            rule_body = body()
            if not rule_body:
                rule_body = (Naf(literal()),)
            rules.append(Rule(Disjunction(), rule_body))
        elif config.allow_disjunction and roll < 0.2:
            first, second = literal(), literal()
            rules.append(Rule(Disjunction((first, second)), body()))
        elif config.allow_set_intro and roll < 0.32:
            kind = rng.choice(tuple(SetIntroKind))
            rules.append(Rule(SetIntro(kind, rng.choice(unary), set_name()), body()))
        else:
            rules.append(Rule(Disjunction((literal(),)), body()))
    return GroundProgram(tuple(rules), collect_signature(rules, int_range))


def _set_rel(rng: random.Random, left: SetName, right: SetName):
    from .syntax import SetRel

    return SetRel(left, rng.choice(("<=", "<=", "<", "=")), right)


def random_set_free_program(rng: random.Random,
                            config: GeneratorConfig = GeneratorConfig()) -> GroundProgram:
    plain = GeneratorConfig(
        max_rules=config.max_rules,
        predicates=config.predicates,
        constants=config.constants,
        with_integers=config.with_integers,
        allow_set_atoms=False,
        allow_set_intro=False,
        allow_disjunction=config.allow_disjunction,
        allow_classical_negation=config.allow_classical_negation,
        max_body=config.max_body,
        max_universe=config.max_universe,
    )
    return random_program(rng, plain)


def random_splitting_set(rng: random.Random, program: GroundProgram) -> frozenset[Literal]:
    """A splitting set of the program, preferring nontrivial partitions.

    Candidate sets are unions of full predicate extensions (both signs)
    over the program pool; the whole literal base always works as the
    fallback.
    """
    pool = program.signature.pool()
    by_predicate: dict[str, set[Literal]] = {}
    for predicate, arity in program.signature.predicates:
        extension = set()
        for args in itertools.product(pool, repeat=arity):
            extension.add(Literal(predicate, args, False))
            extension.add(Literal(predicate, args, True))
        by_predicate[predicate] = extension

    predicates = sorted(by_predicate)
    valid: list[frozenset[Literal]] = []
    for size in range(1, len(predicates)):
        for chosen in itertools.combinations(predicates, size):
            candidate = frozenset().union(*(by_predicate[p] for p in chosen))
            if check_splitting_set(program, candidate):
                valid.append(candidate)
    if valid:
        return rng.choice(valid)
    return frozenset().union(*by_predicate.values()) if by_predicate else frozenset()
