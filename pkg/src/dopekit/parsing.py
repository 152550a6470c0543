"""Text input for polynomials, node tuples and matrices.

Infix syntax over one variable ``x``::

    x^3 - 2*x + 1/3      3x^2 + sqrt(2)x      (x - t1)^2      x - pi

Literals are rationals (``2``, ``-1/3``, ``0.25``), square roots of integers
(``sqrt(2)``, ``√2``, ``sqrt(-3)``) and indeterminates ``t1, t2, ...``;
``pi``/``π`` is read as an indeterminate standing in for a transcendental.
All literals of one input must share a field; anything the grammar cannot
settle (``a^b^c``, ``pi`` together with ``t1``, two different square roots,
division by a non-constant) is rejected.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction

from .dope import DopeMatrix, MultiplicityMatrix
from .forms import NodeTuple
from .poly import Poly
from .scalars import QQ, GenericField, QuadraticField, field_from_json, scalar_from_json


class ParseError(ValueError):
    pass


_TOKEN = re.compile(r"\s*(?:(\d+(?:\.\d+)?)|([A-Za-z_]\w*)|(\*\*|[-+*/^()√π]))")


def _tokens(text: str):
    pos, out = 0, []
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character {text[pos]!r} at {pos}")
        num, name, op = m.groups()
        if num is not None:
            out.append(("num", num))
        elif name is not None:
            out.append(("name", name))
        else:
            out.append(("op", "^" if op == "**" else op))
        pos = m.end()
    return out


class _Parser:
    def __init__(self, text: str, allow_x: bool):
        self.toks = _tokens(text)
        self.i = 0
        self.allow_x = allow_x
        self.radicands = set()
        self.gens = set()
        self.uses_pi = False
        self.uses_t1 = False

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None)

    def take(self, kind=None, value=None):
        tok = self.peek()
        if tok[0] is None or (kind and tok[0] != kind) or (value and tok[1] != value):
            want = value or kind or "a token"
            raise ParseError(f"expected {want}, got {tok[1]!r}")
        self.i += 1
        return tok

    def parse(self):
        if not self.toks:
            raise ParseError("empty expression")
        node = self.expr()
        if self.i != len(self.toks):
            raise ParseError(f"trailing input at {self.peek()[1]!r}")
        return node

    def expr(self):
        node = self.term()
        while self.peek() in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            node = (op, node, self.term())
        return node

    def term(self):
        node = self.unary()
        while True:
            tok = self.peek()
            if tok in (("op", "*"), ("op", "/")):
                self.take()
                node = (tok[1], node, self.unary())
            elif tok[0] == "name" or tok in (("op", "("), ("op", "√"), ("op", "π")):
                # juxtaposition: 3x, 2sqrt(2), sqrt(2)x, 5(x+1)
                node = ("*", node, self.power())
            else:
                return node

    def unary(self):
        tok = self.peek()
        if tok in (("op", "-"), ("op", "+")):
            self.take()
            inner = self.unary()
            return ("neg", inner) if tok[1] == "-" else inner
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            exp = self.take("num")[1]
            if not exp.isdigit():
                raise ParseError("exponents must be nonnegative integers")
            if self.peek() == ("op", "^"):
                raise ParseError("chained powers are ambiguous; add parentheses")
            return ("pow", base, int(exp))
        return base

    def _radicand(self):
        if self.peek() == ("op", "("):
            self.take()
            neg = False
            if self.peek() == ("op", "-"):
                self.take()
                neg = True
            d = self.take("num")[1]
            self.take("op", ")")
        else:
            neg, d = False, self.take("num")[1]
        if not d.isdigit():
            raise ParseError("square roots take integer arguments")
        return -int(d) if neg else int(d)

    def atom(self):
        kind, val = self.take()
        if kind == "num":
            return ("num", Fraction(val))
        if kind == "op" and val == "(":
            node = self.expr()
            self.take("op", ")")
            return node
        if (kind, val) == ("op", "√") or (kind, val) == ("name", "sqrt"):
            d = self._radicand()
            return self._sqrt(d)
        if (kind, val) in (("op", "π"), ("name", "pi")):
            self.uses_pi = True
            self.gens.add(1)
            return ("gen", 1)
        if kind == "name" and re.fullmatch(r"t[1-9]\d*", val):
            self.gens.add(int(val[1:]))
            self.uses_t1 |= val == "t1"
            return ("gen", int(val[1:]))
        if kind == "name" and val == "x":
            if not self.allow_x:
                raise ParseError("the variable x is not allowed here")
            return ("x",)
        raise ParseError(f"unknown symbol {val!r}")

    def _sqrt(self, d: int):
        if d == 0:
            return ("num", Fraction(0))
        sign = -1 if d < 0 else 1
        d = abs(d)
        outside, k = 1, 2
        while k * k <= d:
            while d % (k * k) == 0:
                d //= k * k
                outside *= k
            k += 1
        d *= sign
        if d == 1:
            return ("num", Fraction(outside))
        self.radicands.add(d)
        return ("*", ("num", Fraction(outside)), ("sqrt", d))


def _field_for(parsers):
    radicands = set().union(*(p.radicands for p in parsers))
    gens = set().union(*(p.gens for p in parsers))
    if any(p.uses_pi for p in parsers) and any(p.uses_t1 for p in parsers):
        raise ParseError("pi is read as t1; do not combine it with explicit indeterminates")
    if radicands and gens:
        raise ParseError("square roots and indeterminates cannot be mixed")
    if len(radicands) > 1:
        raise ParseError(f"several quadratic fields in one input: {sorted(radicands)}")
    if gens:
        return GenericField(max(gens))
    if radicands:
        return QuadraticField(radicands.pop())
    return QQ


def _evaluate(node, field) -> Poly:
    tag = node[0]
    if tag == "num":
        return Poly([node[1]], field)
    if tag == "x":
        return Poly.x(field)
    if tag == "sqrt":
        return Poly([field.sqrt], field)
    if tag == "gen":
        return Poly([field.gen(node[1])], field)
    if tag == "neg":
        return -_evaluate(node[1], field)
    if tag == "pow":
        return _evaluate(node[1], field) ** node[2]
    a, b = _evaluate(node[1], field), _evaluate(node[2], field)
    if tag == "+":
        return a + b
    if tag == "-":
        return a - b
    if tag == "*":
        return a * b
    if tag == "/":
        if b.degree != 0:
            raise ParseError("division is only allowed by nonzero constants")
        inv = 1 / b[0]
        return Poly([c * inv for c in a.coeffs], field)
    raise AssertionError(tag)


def _split_list(text: str):
    parts = [s.strip() for s in text.split(",")]
    if any(not s for s in parts):
        raise ParseError("empty entry in comma-separated list")
    return parts


def parse_inputs(poly: str | None = None, nodes: str | None = None, field=None):
    """Parse a polynomial and/or a node list into one common field.

    JSON is accepted for both: ``{"coeffs": [...]}`` or a list of scalar
    literals such as ``{"q": "1/2"}``.
    """
    json_literals = []
    poly_json = nodes_json = None
    if poly is not None and poly.lstrip().startswith(("{", "[")):
        poly_json = _load_json(poly)
        if isinstance(poly_json, dict):
            if set(poly_json) != {"coeffs"}:
                raise ParseError("polynomial JSON must be {\"coeffs\": [...]}")
            poly_json = poly_json["coeffs"]
        json_literals += [_literal(c) for c in poly_json]
    if nodes is not None and nodes.lstrip().startswith("["):
        nodes_json = _load_json(nodes)
        json_literals += [_literal(c) for c in nodes_json]

    parsers, node_asts, poly_ast = [], None, None
    if poly is not None and poly_json is None:
        p = _Parser(poly, allow_x=True)
        poly_ast = p.parse()
        parsers.append(p)
    if nodes is not None and nodes_json is None:
        node_asts = []
        for part in _split_list(nodes):
            p = _Parser(part, allow_x=False)
            node_asts.append(p.parse())
            parsers.append(p)

    if field is None:
        try:
            field = _merge(_field_for(parsers), field_from_json(json_literals) if json_literals else QQ)
        except ValueError as exc:
            raise ParseError(str(exc)) from exc

    out_poly = out_nodes = None
    if poly_ast is not None:
        out_poly = _evaluate(poly_ast, field)
    elif poly_json is not None:
        out_poly = Poly([scalar_from_json(_literal(c), field) for c in poly_json], field)
    if node_asts is not None:
        out_nodes = NodeTuple([_evaluate(a, field)[0] for a in node_asts], field)
    elif nodes_json is not None:
        out_nodes = NodeTuple([scalar_from_json(_literal(c), field) for c in nodes_json], field)
    return out_poly, out_nodes


def _merge(a, b):
    if a == QQ:
        return b
    if b == QQ or a == b:
        return a
    if isinstance(a, GenericField) and isinstance(b, GenericField):
        return a if a.k >= b.k else b
    raise ParseError(f"inputs live in different fields: {a!r} and {b!r}")


def _literal(c):
    if isinstance(c, dict):
        return c
    if isinstance(c, int) and not isinstance(c, bool):
        return {"q": str(c)}
    if isinstance(c, str):
        return {"q": c}
    raise ParseError(f"bad scalar literal {c!r}")


def _load_json(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc


def parse_poly(text: str, field=None) -> Poly:
    return parse_inputs(poly=text, field=field)[0]


def parse_nodes(text: str, field=None) -> NodeTuple:
    return parse_inputs(nodes=text, field=field)[1]


def parse_matrix(text: str, multiplicity: bool = False):
    """``"0101;0011"``, ``"0 1 0 1 / 0 0 1 1"`` or JSON ``{"rows": ...}``."""
    text = text.strip()
    try:
        if text.startswith(("{", "[")):
            obj = _load_json(text)
            rows = obj["rows"] if isinstance(obj, dict) else obj
            if isinstance(obj, dict) and set(obj) != {"rows"}:
                raise ParseError("matrix JSON must be {\"rows\": [...]}")
        else:
            rows = []
            for r in re.split(r"[;/\n]", text):
                r = r.strip()
                if not r:
                    continue
                # whitespace-separated entries, or one digit per entry
                cells = r.replace(",", " ").split() if re.search(r"[\s,]", r) else list(r)
                rows.append([int(v) for v in cells])
        if multiplicity:
            return MultiplicityMatrix(rows)
        return DopeMatrix(rows)
    except ParseError:
        raise
    except (ValueError, TypeError, KeyError) as exc:
        raise ParseError(f"bad matrix: {exc}") from exc
