"""Concrete syntax: tokenizer, recursive-descent parser, pretty printer.

The ASCII surface syntax (documented in docs/grammar.md):

* ``:-`` separates head from body, rules end with ``.``, comments start
  with ``%``.
* ``not`` is default negation, a ``-`` prefix is classical negation.
* Aggregates are ``card``, ``sum``, ``min``, ``max``, always followed by a
  set name in braces: ``card{X: p(X)} != 1``.
* Set relations may be written ``<=s``/``<s``/``=s`` (or the unicode
  symbols), or plainly as ``<=``/``<``/``=`` when at least one operand is a
  braced set name; a bare predicate on the other side abbreviates its own
  set name, as in ``p <= {X: q(X)}``.
* Disjunction in heads uses ``or``.
* ``#int(min,max).`` declares the integer domain.

Scope discipline: variables inside a set name are exactly the declared
ones, and they may not reuse the name of a rule variable. Rule variables
may not appear inside set names; rules needing that must be written out
per constant.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass

from .syntax import (
    AggAggCmp,
    AggCmp,
    AggregateFn,
    ArithExpr,
    Builtin,
    Disjunction,
    Function,
    Integer,
    Literal,
    MAX_INT,
    MIN_INT,
    Naf,
    ObjectConstant,
    Pos,
    Program,
    Rule,
    SA,
    SetIntro,
    SetIntroKind,
    SetName,
    SetRel,
    Term,
    Variable,
    collect_signature,
    cond_variables,
    predicate_set_name,
    rule_variables,
)


class ErrorKind(enum.Enum):
    LEXICAL = "lexical"
    SYNTAX = "syntax"
    SCOPE = "scope"
    ARITY = "arity"


# Terms may not nest function symbols deeper than this.
MAX_TERM_DEPTH = 32


@dataclass
class ParseError(Exception):
    line: int
    column: int
    message: str
    kind: ErrorKind = ErrorKind.SYNTAX

    def __str__(self) -> str:
        return f"{self.line}:{self.column}: {self.kind.value} error: {self.message}"


# ---------------------------------------------------------------------------
# Tokenizer


@dataclass(frozen=True)
class Token:
    type: str
    value: str
    line: int
    column: int


_TOKEN_SPECS: list[tuple[str, str]] = [
    ("ws", r"\s+"),
    ("comment", r"%[^\n]*"),
    ("directive", r"\#[a-z]+"),
    ("integer", r"\d+"),
    ("ident", r"[a-z][A-Za-z0-9_]*"),
    ("variable", r"[A-Z][A-Za-z0-9_]*"),
    ("arrow", r":-"),
    ("subseteq", r"<=s(?![A-Za-z0-9_])|⊆"),
    ("seteq", r"=s(?![A-Za-z0-9_])"),
    ("subset", r"<s(?![A-Za-z0-9_])|⊂"),
    ("le", r"<="),
    ("ge", r">="),
    ("ne", r"!="),
    ("lt", r"<"),
    ("gt", r">"),
    ("eq", r"="),
    ("lbrace", r"\{"),
    ("rbrace", r"\}"),
    ("lparen", r"\("),
    ("rparen", r"\)"),
    ("colon", r":"),
    ("comma", r","),
    ("dot", r"\."),
    ("plus", r"\+"),
    ("minus", r"-"),
    ("star", r"\*"),
]

_MASTER_RE = re.compile("|".join(f"(?P<{name}>{pattern})" for name, pattern in _TOKEN_SPECS))


def tokenize(src: str) -> list[Token]:
    tokens: list[Token] = []
    line = 1
    line_start = 0
    pos = 0
    while pos < len(src):
        match = _MASTER_RE.match(src, pos)
        if match is None:
            raise ParseError(line, pos - line_start + 1, f"unexpected character {src[pos]!r}", ErrorKind.LEXICAL)
        name = match.lastgroup
        text = match.group()
        if name not in ("ws", "comment"):
            tokens.append(Token(name, text, line, pos - line_start + 1))
        newlines = text.count("\n")
        if newlines:
            line += newlines
            line_start = pos + text.rindex("\n") + 1
        pos = match.end()
    tokens.append(Token("eof", "", line, pos - line_start + 1))
    return tokens


_AGGREGATES = {fn.value: fn for fn in AggregateFn}
_REL_TOKENS = {"gt": ">", "ge": ">=", "lt": "<", "le": "<=", "eq": "=", "ne": "!="}
_SETREL_TOKENS = {"subset": "<", "subseteq": "<=", "seteq": "="}


# ---------------------------------------------------------------------------
# Parser


class _Parser:
    def __init__(self, src: str):
        self.tokens = tokenize(src)
        self.pos = 0
        self.arities: dict[str, int] = {}
        self.int_range: tuple[int, int] | None = None

    # -- token plumbing

    def peek(self, offset: int = 0) -> Token:
        return self.tokens[min(self.pos + offset, len(self.tokens) - 1)]

    def next(self) -> Token:
        token = self.tokens[self.pos]
        if token.type != "eof":
            self.pos += 1
        return token

    def expect(self, type_: str, what: str) -> Token:
        token = self.peek()
        if token.type != type_:
            self.fail(f"expected {what}, found {token.value!r}" if token.value else f"expected {what}, found end of input")
        return self.next()

    def fail(self, message: str, kind: ErrorKind = ErrorKind.SYNTAX, token: Token | None = None):
        token = token or self.peek()
        raise ParseError(token.line, token.column, message, kind)

    # -- entry point

    def parse_program(self) -> Program:
        rules: list[Rule] = []
        while self.peek().type != "eof":
            if self.peek().type == "directive":
                self.parse_directive()
            else:
                rules.append(self.parse_rule())
        return Program(tuple(rules), collect_signature(rules, self.int_range))

    def parse_directive(self) -> None:
        token = self.next()
        if token.value != "#int":
            self.fail(f"unknown directive {token.value!r}", token=token)
        if self.int_range is not None:
            self.fail("duplicate #int directive", token=token)
        self.expect("lparen", "'('")
        lo = self.parse_signed_integer()
        self.expect("comma", "','")
        hi = self.parse_signed_integer()
        self.expect("rparen", "')'")
        self.expect("dot", "'.'")
        if lo > hi:
            self.fail(f"empty integer range {lo}..{hi}", token=token)
        self.int_range = (lo, hi)

    def parse_signed_integer(self) -> int:
        sign = 1
        if self.peek().type == "minus":
            self.next()
            sign = -1
        token = self.expect("integer", "an integer")
        return sign * int(token.value)

    # -- rules

    def parse_rule(self) -> Rule:
        start = self.peek()
        head: Disjunction | SetIntro
        if self.peek().type == "arrow":
            self.next()
            head = Disjunction()
            body = self.parse_body()
        else:
            head = self.parse_head()
            if self.peek().type == "arrow":
                self.next()
                body = self.parse_body()
            else:
                body = ()
        self.expect("dot", "'.' at end of rule")
        rule = Rule(head, tuple(body))
        self.check_rule_scope(rule, start)
        return rule

    def parse_head(self) -> Disjunction | SetIntro:
        if self.peek().type == "lbrace":
            # S <= p  or  S = p
            set_name = self.parse_set_name()
            op = self.peek()
            if op.type in ("subseteq", "le"):
                self.next()
                predicate = self.parse_bare_predicate("set introduction head")
                self.note_arity(predicate, set_name.arity, op)
                return SetIntro(SetIntroKind.SUPERSET_OF, predicate, set_name)
            if op.type in ("seteq", "eq"):
                self.next()
                predicate = self.parse_bare_predicate("set introduction head")
                self.note_arity(predicate, set_name.arity, op)
                return SetIntro(SetIntroKind.EQUALS, predicate, set_name)
            if op.type in ("subset", "lt"):
                self.fail("strict subset is not allowed in a set introduction head", token=op)
            self.fail("a set name in a rule head must introduce a predicate (p <= S, S <= p, or p = S)", token=op)
        if self.peek().type == "ident":
            op = self.peek(1)
            if op.type in ("subseteq", "seteq") or (op.type in ("le", "eq") and self.peek(2).type == "lbrace"):
                name_token = self.next()
                kind = SetIntroKind.SUBSET_OF if op.type in ("subseteq", "le") else SetIntroKind.EQUALS
                self.next()
                set_name = self.parse_set_name()
                self.note_arity(name_token.value, set_name.arity, name_token)
                return SetIntro(kind, name_token.value, set_name)
            if op.type in ("subset",) or (op.type == "lt" and self.peek(2).type == "lbrace"):
                self.fail("strict subset is not allowed in a set introduction head", token=op)
        first = self.parse_literal()
        literals = [first]
        while self.peek().type == "ident" and self.peek().value == "or":
            self.next()
            literals.append(self.parse_literal())
        return Disjunction(tuple(literals))

    def parse_body(self) -> list:
        if self.peek().type == "dot":
            return []
        elements = [self.parse_body_element()]
        while self.peek().type == "comma":
            self.next()
            elements.append(self.parse_body_element())
        return elements

    def parse_body_element(self):
        token = self.peek()
        if token.type == "ident" and token.value == "not":
            self.next()
            after = self.peek()
            if after.type == "lbrace" or (
                after.type == "ident" and after.value in _AGGREGATES and self.peek(1).type == "lbrace"
            ):
                self.fail("default negation cannot be applied to a set atom", token=after)
            literal = self.parse_literal()
            if self.peek().type in ("subseteq", "subset", "seteq") or (
                self.peek().type in ("le", "lt", "eq") and self.peek(1).type == "lbrace"
            ):
                self.fail("default negation cannot be applied to a set atom", token=self.peek())
            return Naf(literal)
        if token.type == "ident" and token.value in _AGGREGATES and self.peek(1).type == "lbrace":
            return SA(self.parse_aggregate_atom())
        if token.type == "lbrace":
            left = self.parse_set_name()
            rel = self.parse_set_relation_op()
            right = self.parse_set_operand(left.arity)
            return SA(SetRel(left, rel, right))
        return self.parse_literal_or_comparison()

    def parse_aggregate_atom(self) -> AggCmp | AggAggCmp:
        fn_token = self.next()
        fn = _AGGREGATES[fn_token.value]
        set_name = self.parse_set_name()
        op = self.peek()
        if op.type not in _REL_TOKENS:
            self.fail("expected a comparison after an aggregate", token=op)
        rel = _REL_TOKENS[self.next().type]
        after = self.peek()
        if after.type == "ident" and after.value in _AGGREGATES and self.peek(1).type == "lbrace":
            fn2_token = self.next()
            set2 = self.parse_set_name()
            return AggAggCmp(fn, set_name, rel, _AGGREGATES[fn2_token.value], set2)
        bound = self.parse_term()
        if isinstance(bound, (ObjectConstant, Function)):
            self.fail("an aggregate bound must be an integer or a variable", token=after)
        return AggCmp(fn, set_name, rel, bound)

    def parse_set_relation_op(self) -> str:
        op = self.peek()
        if op.type in _SETREL_TOKENS:
            self.next()
            return _SETREL_TOKENS[op.type]
        if op.type in ("le", "lt", "eq"):
            self.next()
            return _REL_TOKENS[op.type]
        self.fail("expected a set relation (<=, <, or =)", token=op)

    def parse_set_operand(self, arity: int) -> SetName:
        token = self.peek()
        if token.type == "lbrace":
            return self.parse_set_name()
        if token.type == "ident":
            predicate = self.parse_bare_predicate("set relation")
            self.note_arity(predicate, arity, token)
            return predicate_set_name(predicate, arity)
        self.fail("expected a set name or a predicate symbol", token=token)

    def parse_literal_or_comparison(self):
        token = self.peek()
        # A leading '-' followed by a name is classical negation; otherwise
        # the element must be an arithmetic comparison.
        if token.type == "ident" and self.peek(1).type not in (
            "plus", "minus", "star", "gt", "ge", "lt", "le", "eq", "ne",
            "subset", "subseteq", "seteq",
        ):
            return Pos(self.parse_literal())
        if token.type == "minus" and self.peek(1).type == "ident":
            return Pos(self.parse_literal())
        if token.type == "ident" and self.peek(1).type in ("subseteq", "seteq", "subset"):
            return self.parse_predicate_set_relation()
        if token.type == "ident" and self.peek(1).type in ("le", "lt", "eq") and self.peek(2).type == "lbrace":
            return self.parse_predicate_set_relation()
        left = self.parse_term()
        op = self.peek()
        if op.type in _REL_TOKENS:
            rel = _REL_TOKENS[self.next().type]
            if self.peek().type == "lbrace":
                self.fail("a set relation needs a predicate symbol or set name on both sides", token=op)
            right = self.parse_term()
            return Builtin(left, rel, right)
        if op.type in ("subseteq", "subset", "seteq"):
            self.fail("a set relation needs a predicate symbol or set name on both sides", token=op)
        if isinstance(left, ObjectConstant):
            # A bare ident not followed by anything relational is a 0-ary atom.
            return Pos(Literal(left.name))
        self.fail("expected a literal, set atom, or comparison", token=op)

    def parse_predicate_set_relation(self) -> SA:
        name_token = self.next()
        op = self.peek()
        if op.type in _SETREL_TOKENS:
            rel = _SETREL_TOKENS[self.next().type]
        else:
            rel = _REL_TOKENS[self.next().type]
        right = self.parse_set_name()
        self.note_arity(name_token.value, right.arity, name_token)
        left = predicate_set_name(name_token.value, right.arity)
        return SA(SetRel(left, rel, right))

    # -- literals, set names, terms

    def parse_bare_predicate(self, where: str) -> str:
        token = self.peek()
        if token.type != "ident":
            self.fail(f"expected a predicate symbol in {where}", token=token)
        self.next()
        if self.peek().type == "lparen":
            self.fail(f"the predicate in {where} must be a bare symbol", token=token)
        return token.value

    def parse_literal(self) -> Literal:
        negated = False
        if self.peek().type == "minus":
            self.next()
            negated = True
        token = self.expect("ident", "a predicate symbol")
        args: tuple[Term, ...] = ()
        if self.peek().type == "lparen":
            self.next()
            parsed = [self.parse_term()]
            while self.peek().type == "comma":
                self.next()
                parsed.append(self.parse_term())
            self.expect("rparen", "')'")
            args = tuple(parsed)
        self.note_arity(token.value, len(args), token)
        return Literal(token.value, args, negated)

    def parse_set_name(self) -> SetName:
        brace = self.expect("lbrace", "'{'")
        declared = [Variable(self.expect("variable", "a set variable").value)]
        while self.peek().type == "comma":
            self.next()
            declared.append(Variable(self.expect("variable", "a set variable").value))
        self.expect("colon", "':'")
        cond = [self.parse_literal()]
        while self.peek().type == "comma":
            self.next()
            cond.append(self.parse_literal())
        self.expect("rbrace", "'}'")
        if len({v.name for v in declared}) != len(declared):
            self.fail("repeated set variable", ErrorKind.SCOPE, brace)
        occurring = cond_variables(cond)
        if [v.name for v in declared] != [v.name for v in occurring]:
            declared_names = ", ".join(v.name for v in declared)
            occurring_names = ", ".join(v.name for v in occurring) or "none"
            self.fail(
                f"set variables ({declared_names}) must be exactly the variables of the "
                f"condition in first-occurrence order ({occurring_names}); rule variables "
                "may not appear inside a set name",
                ErrorKind.SCOPE,
                brace,
            )
        for literal in cond:
            for arg in literal.args:
                if _term_has_arith(arg):
                    self.fail("arithmetic is not allowed inside a set name", token=brace)
        return SetName(tuple(declared), tuple(cond))

    def parse_term(self, depth: int = 0) -> Term:
        return self.parse_additive(depth)

    def parse_additive(self, depth: int = 0) -> Term:
        left = self.parse_multiplicative(depth)
        while self.peek().type in ("plus", "minus"):
            op = "+" if self.next().type == "plus" else "-"
            right = self.parse_multiplicative(depth)
            left = ArithExpr(op, left, right)
        return left

    def parse_multiplicative(self, depth: int = 0) -> Term:
        left = self.parse_primary(depth)
        while self.peek().type == "star":
            self.next()
            right = self.parse_primary(depth)
            left = ArithExpr("*", left, right)
        return left

    def parse_primary(self, depth: int = 0) -> Term:
        token = self.peek()
        if token.type == "integer":
            self.next()
            value = int(token.value)
            if value > MAX_INT:
                self.fail(f"integer literal {token.value} exceeds the machine range", token=token)
            return Integer(value)
        if token.type == "minus" and self.peek(1).type == "integer":
            self.next()
            value = int(self.next().value)
            if value > -MIN_INT:
                self.fail(f"integer literal -{value} exceeds the machine range", token=token)
            return Integer(-value)
        if token.type == "variable":
            self.next()
            return Variable(token.value)
        if token.type == "ident":
            self.next()
            if self.peek().type == "lparen":
                if depth >= MAX_TERM_DEPTH:
                    self.fail(f"function terms nest deeper than {MAX_TERM_DEPTH}", token=token)
                self.next()
                args = [self.parse_term(depth + 1)]
                while self.peek().type == "comma":
                    self.next()
                    args.append(self.parse_term(depth + 1))
                self.expect("rparen", "')'")
                return Function(token.value, tuple(args))
            return ObjectConstant(token.value)
        if token.type == "lparen":
            self.next()
            term = self.parse_term(depth)
            self.expect("rparen", "')'")
            return term
        self.fail("expected a term", token=token)

    # -- validation

    def note_arity(self, predicate: str, arity: int, token: Token) -> None:
        known = self.arities.get(predicate)
        if known is None:
            self.arities[predicate] = arity
        elif known != arity:
            self.fail(
                f"predicate {predicate!r} used with arity {arity} but previously with {known}",
                ErrorKind.ARITY,
                token,
            )

    def check_rule_scope(self, rule: Rule, start: Token) -> None:
        rule_vars = {v.name for v in rule_variables(rule)}

        def check_set_name(name: SetName) -> None:
            shadowed = sorted({v.name for v in name.vars} & rule_vars)
            if shadowed:
                self.fail(
                    f"set variable {shadowed[0]!r} shadows a rule variable of the same name",
                    ErrorKind.SCOPE,
                    start,
                )

        if isinstance(rule.head, SetIntro):
            check_set_name(rule.head.set_name)
        for element in rule.body:
            if isinstance(element, SA):
                for name in (
                    (element.atom.set_name,)
                    if isinstance(element.atom, AggCmp)
                    else (element.atom.set1, element.atom.set2)
                    if isinstance(element.atom, AggAggCmp)
                    else (element.atom.left, element.atom.right)
                ):
                    check_set_name(name)


def _term_has_arith(term: Term) -> bool:
    if isinstance(term, ArithExpr):
        return True
    if isinstance(term, Function):
        return any(_term_has_arith(a) for a in term.args)
    return False


def parse_program(src: str) -> Program:
    """Parse program text; raises ParseError with position and kind."""
    return _Parser(src).parse_program()


def parse_literals(src: str) -> list[Literal]:
    """Parse a comma-separated list of ground literals (e.g. for --set)."""
    parser = _Parser(src)
    if parser.peek().type == "eof":
        return []
    literals = [parser.parse_literal()]
    while parser.peek().type == "comma":
        parser.next()
        literals.append(parser.parse_literal())
    token = parser.peek()
    if token.type != "eof":
        raise ParseError(token.line, token.column, f"unexpected {token.value!r} after literal list")
    for literal in literals:
        if not literal.is_ground:
            raise ParseError(1, 1, f"literal {literal} is not ground", ErrorKind.SCOPE)
    return literals


def pretty_print(program: Program) -> str:
    """Render a program so that parsing the text reproduces it exactly."""
    return str(program)
