"""Surface grammar for scalars, points and line-coordinate expressions.

This is the textual interface the CLI owns.  Scalar literals:

    rationals       2, -7, 2/3, -2/3
    prime fields    3 mod 5          (the modulus must match the backend)
    quaternions     (w,x,y,z)        with rational components

Expressions combine literals with infix ``+``, ``-``, ``*`` (sequences
of ``*`` associate left; no commutative rearrangement ever happens),
postfix ``^-1``, unary minus, parentheses, and the function forms

    r(A:B)            two-point ratio
    r(A,B;C)          three-point ratio
    cr(A,B;C,D)       cross-ratio
    map(F; p1,p2,p3; X)   cross-ratio map of family F in {A,B,C,D}

Parsing is deterministic recursive descent over a tokenizer that tracks
character offsets, so every syntax error carries its position.  The
printer emits fully parenthesized text and ``parse(print(ast)) == ast``
structurally; unary minus directly in front of a literal folds into the
literal at parse time, which is exactly what the printer produces for
negative literal values.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import List, Optional, Tuple, Union

from .errors import ExpressionSyntaxError
from .maps import CrossRatioBase, Family
from .maps import evaluate as map_evaluate
from .plane import PlanePoint
from .ratios import cross_ratio, ratio2, ratio3
from .scalars import (
    PrimeField,
    QuaternionField,
    Rational,
    RationalField,
    RationalQuaternion,
    ScalarField,
    SkewScalar,
)

# ---------------------------------------------------------------------------
# AST


@dataclass(frozen=True)
class Literal:
    value: SkewScalar


@dataclass(frozen=True)
class Add:
    left: "Node"
    right: "Node"


@dataclass(frozen=True)
class Sub:
    left: "Node"
    right: "Node"


@dataclass(frozen=True)
class Mul:
    left: "Node"
    right: "Node"


@dataclass(frozen=True)
class Neg:
    operand: "Node"


@dataclass(frozen=True)
class Inv:
    operand: "Node"


@dataclass(frozen=True)
class Ratio2:
    a: "Node"
    b: "Node"


@dataclass(frozen=True)
class Ratio3:
    a: "Node"
    b: "Node"
    c: "Node"


@dataclass(frozen=True)
class CrossRatioNode:
    a: "Node"
    b: "Node"
    c: "Node"
    d: "Node"


@dataclass(frozen=True)
class MapNode:
    family: Family
    p1: "Node"
    p2: "Node"
    p3: "Node"
    x: "Node"


Node = Union[Literal, Add, Sub, Mul, Neg, Inv, Ratio2, Ratio3,
             CrossRatioNode, MapNode]


# ---------------------------------------------------------------------------
# tokenizer

_SYMBOLS = "(),;:+-*/="


@dataclass(frozen=True)
class _Token:
    kind: str  # "int", "ident", "invop", a symbol character, or "end"
    text: str
    pos: int


def _tokenize(text: str) -> List[_Token]:
    tokens: List[_Token] = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            start = i
            while i < n and text[i].isdigit():
                i += 1
            tokens.append(_Token("int", text[start:i], start))
            continue
        if ch.isalpha() or ch == "_":
            start = i
            while i < n and (text[i].isalnum() or text[i] == "_"):
                i += 1
            tokens.append(_Token("ident", text[start:i], start))
            continue
        if ch == "^":
            if text[i:i + 3] == "^-1":
                tokens.append(_Token("invop", "^-1", i))
                i += 3
                continue
            raise ExpressionSyntaxError("expected ^-1", i)
        if ch in _SYMBOLS:
            tokens.append(_Token(ch, ch, i))
            i += 1
            continue
        raise ExpressionSyntaxError(f"unexpected character {ch!r}", i)
    tokens.append(_Token("end", "", n))
    return tokens


# ---------------------------------------------------------------------------
# parser

_FUNCTION_NAMES = {"r", "cr", "map"}


class _Parser:
    def __init__(self, text: str, field: ScalarField):
        self.text = text
        self.field = field
        self.tokens = _tokenize(text)
        self.index = 0

    # token plumbing ------------------------------------------------------
    def peek(self) -> _Token:
        return self.tokens[self.index]

    def advance(self) -> _Token:
        token = self.tokens[self.index]
        self.index += 1
        return token

    def expect(self, kind: str) -> _Token:
        token = self.peek()
        if token.kind != kind:
            raise ExpressionSyntaxError(
                f"expected {kind!r}, found {token.text or 'end of input'!r}",
                token.pos)
        return self.advance()

    def fail(self, message: str):
        raise ExpressionSyntaxError(message, self.peek().pos)

    # literals ------------------------------------------------------------
    def _parse_signed_rational(self):
        """[-] INT [/ INT] as an exact rational (quaternion components)."""
        negative = False
        if self.peek().kind == "-":
            self.advance()
            negative = True
        numerator = int(self.expect("int").text)
        denominator = 1
        if self.peek().kind == "/":
            self.advance()
            denominator = int(self.expect("int").text)
        value = Rational(numerator, denominator)
        return -value if negative else value

    def try_parse_literal(self) -> Optional[Literal]:
        """Parse a backend literal at the cursor, or back off and return None."""
        saved = self.index
        try:
            return Literal(self._parse_literal())
        except ExpressionSyntaxError:
            self.index = saved
            return None

    def _parse_literal(self) -> SkewScalar:
        field = self.field
        if isinstance(field, QuaternionField):
            self.expect("(")
            components = [self._parse_signed_rational()]
            for _ in range(3):
                self.expect(",")
                components.append(self._parse_signed_rational())
            self.expect(")")
            return RationalQuaternion(*components)
        token = self.expect("int")
        if isinstance(field, PrimeField):
            mod = self.peek()
            if mod.kind != "ident" or mod.text != "mod":
                raise ExpressionSyntaxError("expected 'mod'", mod.pos)
            self.advance()
            modulus_token = self.expect("int")
            if int(modulus_token.text) != field.p:
                raise ExpressionSyntaxError(
                    f"literal modulus {modulus_token.text} does not match "
                    f"backend {field.name}", modulus_token.pos)
            return field.from_int(int(token.text))
        numerator = int(token.text)
        if self.peek().kind == "/":
            self.advance()
            return Rational(numerator, int(self.expect("int").text))
        return Rational(numerator)

    # grammar -------------------------------------------------------------
    def parse_expression(self) -> Node:
        node = self.parse_term()
        while self.peek().kind in ("+", "-"):
            op = self.advance().kind
            right = self.parse_term()
            node = Add(node, right) if op == "+" else Sub(node, right)
        return node

    def parse_term(self) -> Node:
        node = self.parse_postfix()
        while self.peek().kind == "*":
            self.advance()
            node = Mul(node, self.parse_postfix())
        return node

    def parse_postfix(self) -> Node:
        node = self.parse_primary()
        while self.peek().kind == "invop":
            self.advance()
            node = Inv(node)
        return node

    def _literal_here(self) -> Optional[Literal]:
        """A literal starting at the cursor, or None if something else starts.

        A bare integer can only begin a literal (outside the quaternion
        backend), so its parse errors propagate with their position; the
        quaternion ``(`` genuinely is ambiguous with a parenthesized
        expression and uses backtracking.
        """
        token = self.peek()
        if isinstance(self.field, QuaternionField):
            if token.kind == "(":
                return self.try_parse_literal()
            return None
        if token.kind == "int":
            return Literal(self._parse_literal())
        return None

    def parse_primary(self) -> Node:
        token = self.peek()
        if token.kind == "-":
            self.advance()
            literal = self._literal_here()
            if literal is not None:
                return Literal(-literal.value)
            return Neg(self.parse_primary())
        literal = self._literal_here()
        if literal is not None:
            return literal
        if token.kind == "ident" and token.text in _FUNCTION_NAMES:
            return self.parse_function()
        if token.kind == "(":
            self.advance()
            node = self.parse_expression()
            self.expect(")")
            return node
        self.fail(f"expected an expression, found {token.text or 'end of input'!r}")

    def parse_function(self) -> Node:
        name = self.advance().text
        self.expect("(")
        if name == "map":
            family_token = self.expect("ident")
            try:
                family = Family(family_token.text)
            except ValueError:
                raise ExpressionSyntaxError(
                    f"unknown family {family_token.text!r} (expected A, B, C or D)",
                    family_token.pos) from None
            self.expect(";")
            p1 = self.parse_expression()
            self.expect(",")
            p2 = self.parse_expression()
            self.expect(",")
            p3 = self.parse_expression()
            self.expect(";")
            x = self.parse_expression()
            self.expect(")")
            return MapNode(family, p1, p2, p3, x)
        if name == "cr":
            a = self.parse_expression()
            self.expect(",")
            b = self.parse_expression()
            self.expect(";")
            c = self.parse_expression()
            self.expect(",")
            d = self.parse_expression()
            self.expect(")")
            return CrossRatioNode(a, b, c, d)
        # r(A:B) or r(A,B;C)
        a = self.parse_expression()
        separator = self.peek()
        if separator.kind == ":":
            self.advance()
            b = self.parse_expression()
            self.expect(")")
            return Ratio2(a, b)
        if separator.kind == ",":
            self.advance()
            b = self.parse_expression()
            self.expect(";")
            c = self.parse_expression()
            self.expect(")")
            return Ratio3(a, b, c)
        self.fail("expected ':' or ',' inside r(...)")


def parse_expression(text: str, field: ScalarField) -> Node:
    """Parse one complete expression; trailing input is an error."""
    parser = _Parser(text, field)
    node = parser.parse_expression()
    end = parser.peek()
    if end.kind != "end":
        raise ExpressionSyntaxError(f"unexpected trailing input {end.text!r}", end.pos)
    return node


def parse_scalar(text: str, field: ScalarField) -> SkewScalar:
    """Parse exactly one scalar literal (optionally negated)."""
    parser = _Parser(text, field)
    negative = False
    if parser.peek().kind == "-":
        parser.advance()
        negative = True
    value = parser._parse_literal()
    end = parser.peek()
    if end.kind != "end":
        raise ExpressionSyntaxError(f"unexpected trailing input {end.text!r}", end.pos)
    return -value if negative else value


def parse_point(text: str, field: ScalarField) -> PlanePoint:
    """Parse a point literal ``(x, y)`` with backend scalar coordinates."""
    parser = _Parser(text, field)
    parser.expect("(")
    x = parser._parse_literal()
    parser.expect(",")
    y = parser._parse_literal()
    parser.expect(")")
    end = parser.peek()
    if end.kind != "end":
        raise ExpressionSyntaxError(f"unexpected trailing input {end.text!r}", end.pos)
    return PlanePoint(x, y)


def parse_scalar_list(text: str, field: ScalarField) -> Tuple[SkewScalar, ...]:
    """Parse a comma-separated list of scalar literals (e.g. a map base)."""
    parser = _Parser(text, field)
    values = [parser._parse_literal()]
    while parser.peek().kind == ",":
        parser.advance()
        values.append(parser._parse_literal())
    end = parser.peek()
    if end.kind != "end":
        raise ExpressionSyntaxError(f"unexpected trailing input {end.text!r}", end.pos)
    return tuple(values)


# ---------------------------------------------------------------------------
# printer

def print_expression(node: Node) -> str:
    """Fully parenthesized text that parses back to the same AST."""
    if isinstance(node, Literal):
        return str(node.value)
    if isinstance(node, Add):
        return f"({print_expression(node.left)} + {print_expression(node.right)})"
    if isinstance(node, Sub):
        return f"({print_expression(node.left)} - {print_expression(node.right)})"
    if isinstance(node, Mul):
        return f"({print_expression(node.left)} * {print_expression(node.right)})"
    if isinstance(node, Neg):
        return f"-({print_expression(node.operand)})"
    if isinstance(node, Inv):
        return f"({print_expression(node.operand)})^-1"
    if isinstance(node, Ratio2):
        return f"r({print_expression(node.a)}:{print_expression(node.b)})"
    if isinstance(node, Ratio3):
        return (f"r({print_expression(node.a)},{print_expression(node.b)};"
                f"{print_expression(node.c)})")
    if isinstance(node, CrossRatioNode):
        return (f"cr({print_expression(node.a)},{print_expression(node.b)};"
                f"{print_expression(node.c)},{print_expression(node.d)})")
    if isinstance(node, MapNode):
        return (f"map({node.family.value}; {print_expression(node.p1)},"
                f"{print_expression(node.p2)},{print_expression(node.p3)}; "
                f"{print_expression(node.x)})")
    raise TypeError(f"not an expression node: {node!r}")


# ---------------------------------------------------------------------------
# evaluator

def evaluate_expression(node: Node) -> SkewScalar:
    """Evaluate an AST with the core operations; core errors propagate."""
    if isinstance(node, Literal):
        return node.value
    if isinstance(node, Add):
        return evaluate_expression(node.left) + evaluate_expression(node.right)
    if isinstance(node, Sub):
        return evaluate_expression(node.left) - evaluate_expression(node.right)
    if isinstance(node, Mul):
        return evaluate_expression(node.left) * evaluate_expression(node.right)
    if isinstance(node, Neg):
        return -evaluate_expression(node.operand)
    if isinstance(node, Inv):
        return evaluate_expression(node.operand).inverse()
    if isinstance(node, Ratio2):
        return ratio2(evaluate_expression(node.a), evaluate_expression(node.b))
    if isinstance(node, Ratio3):
        return ratio3(evaluate_expression(node.a), evaluate_expression(node.b),
                      evaluate_expression(node.c))
    if isinstance(node, CrossRatioNode):
        return cross_ratio(evaluate_expression(node.a), evaluate_expression(node.b),
                           evaluate_expression(node.c), evaluate_expression(node.d))
    if isinstance(node, MapNode):
        base = CrossRatioBase(node.family, (
            evaluate_expression(node.p1), evaluate_expression(node.p2),
            evaluate_expression(node.p3)))
        return map_evaluate(base, evaluate_expression(node.x))
    raise TypeError(f"not an expression node: {node!r}")


# ---------------------------------------------------------------------------
# random ASTs (drives the round-trip and CLI-equivalence suites)

def random_expression(field: ScalarField, rng: random.Random, depth: int = 3) -> Node:
    """A random well-formed AST over the backend's literals.

    Negative literal values appear as negative literals (never as
    ``Neg(Literal)``), matching the parser's constant folding, so every
    generated tree survives a print/parse round trip structurally.
    """
    if depth <= 0 or rng.random() < 0.25:
        return Literal(field.random_element(rng))
    kind = rng.choice(("add", "sub", "mul", "neg", "inv", "r2", "r3", "cr", "map"))
    sub = lambda: random_expression(field, rng, depth - 1)
    if kind == "add":
        return Add(sub(), sub())
    if kind == "sub":
        return Sub(sub(), sub())
    if kind == "mul":
        return Mul(sub(), sub())
    if kind == "neg":
        operand = sub()
        if isinstance(operand, Literal):
            return Literal(-operand.value)
        return Neg(operand)
    if kind == "inv":
        return Inv(sub())
    if kind == "r2":
        return Ratio2(sub(), sub())
    if kind == "r3":
        return Ratio3(sub(), sub(), sub())
    if kind == "cr":
        return CrossRatioNode(sub(), sub(), sub(), sub())
    points = []
    while len(points) < 3:
        candidate = field.random_nonzero(rng)
        if all(candidate != existing for existing in points):
            points.append(candidate)
    return MapNode(rng.choice(list(Family)), Literal(points[0]),
                   Literal(points[1]), Literal(points[2]), sub())
