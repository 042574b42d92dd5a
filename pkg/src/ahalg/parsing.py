"""Expression parsing for scalars, polynomials, and algebra elements.

Grammar (shared with the command line):

    expr   := term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := atom ('^' nat)?
    atom   := scalar | 'x' | 'Y' | 'y' | '(' expr ')' | '-' atom
    scalar := int ('/' int)?          -- the '/denominator' form only over QQ

``*`` is order-sensitive: the parser evaluates directly into the target
algebra, so noncommutative products come out in normal form.  The generator
letter is fixed per call ('Y' for subalgebra elements, 'y' for Weyl-algebra
elements) and the two letters never mix inside one expression.
"""

from __future__ import annotations

import re

from .algebra import AhContext, OreElement
from .errors import ParseError
from .fields import FieldElem, FieldSpec
from .poly import Poly

_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z])|(?P<op>[-+*/^()]))")


def _tokenize(src: str):
    tokens = []
    pos = 0
    while pos < len(src):
        m = _TOKEN.match(src, pos)
        if not m or m.end() == m.start():
            rest = src[pos:]
            if rest.strip():
                bad = pos + len(rest) - len(rest.lstrip())
                raise ParseError(f"unexpected character {src[bad]!r}", bad)
            break
        if m.group("int") is not None:
            tokens.append(("int", int(m.group("int")), m.start("int")))
        elif m.group("name") is not None:
            tokens.append(("name", m.group("name"), m.start("name")))
        else:
            tokens.append(("op", m.group("op"), m.start("op")))
        pos = m.end()
    tokens.append(("end", None, len(src)))
    return tokens


class _Parser:
    """Recursive-descent evaluator over a small value algebra.

    The value operations are injected so the same grammar drives scalar,
    polynomial, and noncommutative-element parsing.
    """

    def __init__(self, src, spec, atoms, lift_scalar):
        self.src = src
        self.spec = spec
        self.atoms = atoms
        self.lift_scalar = lift_scalar
        self.tokens = _tokenize(src)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def advance(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect_op(self, op):
        kind, value, pos = self.peek()
        if kind != "op" or value != op:
            raise ParseError(f"expected {op!r}", pos)
        self.advance()

    def parse(self):
        value = self.expr()
        kind, _, pos = self.peek()
        if kind != "end":
            raise ParseError("trailing input", pos)
        return value

    def expr(self):
        value = self.term()
        while True:
            kind, op, _ = self.peek()
            if kind == "op" and op in "+-":
                self.advance()
                rhs = self.term()
                value = value + rhs if op == "+" else value - rhs
            else:
                return value

    def term(self):
        value = self.factor()
        while True:
            kind, op, _ = self.peek()
            if kind == "op" and op == "*":
                self.advance()
                value = value * self.factor()
            else:
                return value

    def factor(self):
        kind, op, _ = self.peek()
        if kind == "op" and op == "-":
            # negation binds looser than '^': -x^4 means -(x^4)
            self.advance()
            return -self.factor()
        value = self.atom()
        kind, op, pos = self.peek()
        if kind == "op" and op == "^":
            self.advance()
            kind, exp, pos = self.peek()
            if kind == "op" and exp == "-":
                raise ParseError("negative exponents are not allowed", pos)
            if kind != "int":
                raise ParseError("exponent must be a nonnegative integer", pos)
            self.advance()
            value = value**exp
        return value

    def atom(self):
        kind, value, pos = self.advance()
        if kind == "int":
            return self.lift_scalar(self.scalar_tail(value, pos))
        if kind == "name":
            if value not in self.atoms:
                raise ParseError(f"unknown name {value!r} here", pos)
            return self.atoms[value]
        if kind == "op" and value == "(":
            inner = self.expr()
            self.expect_op(")")
            return inner
        if kind == "op" and value == "-":
            return -self.atom()
        raise ParseError("expected a value", pos)

    def scalar_tail(self, num: int, pos: int) -> FieldElem:
        kind, op, opos = self.peek()
        if kind == "op" and op == "/":
            if self.spec.is_prime_field:
                raise ParseError("rational literals need the field QQ", opos)
            self.advance()
            kind, den, dpos = self.advance()
            if kind != "int":
                raise ParseError("denominator must be an integer", dpos)
            if den == 0:
                raise ParseError("zero denominator", dpos)
            from fractions import Fraction

            return self.spec.elem(Fraction(num, den))
        return self.spec.from_int(num)


def parse_scalar(src: str, spec: FieldSpec) -> FieldElem:
    """A bare field scalar: optional sign, integer, optional /denominator."""
    value = _Parser(src, spec, {}, lambda c: c).parse()
    if not isinstance(value, FieldElem):
        raise ParseError("expected a scalar")
    return value


def parse_poly(src: str, spec: FieldSpec) -> Poly:
    """A polynomial in x over the given field."""
    atoms = {"x": Poly.x(spec)}
    value = _Parser(src, spec, atoms, lambda c: Poly.constant(c)).parse()
    if isinstance(value, FieldElem):
        value = Poly.constant(value)
    return value


def parse_element(src: str, ctx: AhContext, generator: str = "Y") -> OreElement:
    """An algebra element in x and the chosen generator letter.

    Passing the other generator letter is a parse error, so expressions can
    never mix the subalgebra and Weyl-algebra generators.
    """
    if generator not in ("Y", "y"):
        raise ValueError("generator letter must be 'Y' or 'y'")
    other = "y" if generator == "Y" else "Y"
    if other in src:
        raise ParseError(
            f"generator {other!r} cannot appear in a {generator!r} expression",
            src.index(other),
        )
    atoms = {"x": ctx.x(), generator: ctx.gen()}
    value = _Parser(src, ctx.spec, atoms, lambda c: ctx.from_scalar(c)).parse()
    if isinstance(value, FieldElem):
        value = ctx.from_scalar(value)
    if isinstance(value, Poly):
        value = ctx.from_poly(value)
    return value
