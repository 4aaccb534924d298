"""Text and JSON formats for specifications.

Text DSL, one equation per line, ``#`` starts a comment::

    spec   ::= line+
    line   ::= NAME "=" expr
    expr   ::= term ("+" term)*
    term   ::= factor+
    factor ::= "E" | "Z" | "ZL" | "ZR" | "ZLR" | NAME
             | "Seq" "(" expr ")" | "(" expr ")"
    NAME   ::= letter (letter | digit | "." | "_")*

Juxtaposition of factors is the Cartesian product.  The names E, Z, ZL, ZR,
ZLR and Seq are reserved; SZ is the reserved sequence-of-atoms class and is
injected automatically when referenced.

The JSON form is a tree of nodes with a ``kind`` field:
``{"kind": "zero"}``, ``{"kind": "atom", "name": "Z"}``,
``{"kind": "ref", "name": "C"}``, ``{"kind": "sum", "terms": [...]}``,
``{"kind": "product", "factors": [...]}``, ``{"kind": "seq", "arg": ...}``;
a specification document is ``{"root": NAME, "equations": [{"lhs": NAME,
"rhs": node}, ...]}``.
"""

from __future__ import annotations

import json
from typing import Optional

from .expr import (
    ATOM_KINDS,
    AtomRef,
    ClassRef,
    Expr,
    Product,
    Seq,
    SpecError,
    Sum,
    ZERO,
    ZeroExpr,
)
from .spec import Equation, Specification, make_spec


class ParseError(SpecError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


_NAME_START = set("abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ")
_NAME_CONT = _NAME_START | set("0123456789._")


def _tokenize_line(text: str, lineno: int):
    tokens = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch in " \t":
            i += 1
            continue
        if ch == "#":
            break
        col = i + 1
        if ch in "+=()":
            tokens.append((ch, ch, col))
            i += 1
        elif ch in _NAME_START:
            j = i + 1
            while j < n and text[j] in _NAME_CONT:
                j += 1
            tokens.append(("NAME", text[i:j], col))
            i = j
        else:
            raise ParseError(f"unexpected character {ch!r}", lineno, col)
    return tokens


class _LineParser:
    def __init__(self, tokens, lineno):
        self.tokens = tokens
        self.lineno = lineno
        self.pos = 0

    def peek(self):
        if self.pos < len(self.tokens):
            return self.tokens[self.pos]
        return ("EOL", "", (self.tokens[-1][2] + len(self.tokens[-1][1])) if self.tokens else 1)

    def take(self, kind: Optional[str] = None):
        tok = self.peek()
        if kind is not None and tok[0] != kind:
            raise ParseError(f"expected {kind}, found {tok[1] or 'end of line'!r}", self.lineno, tok[2])
        self.pos += 1
        return tok

    def parse_equation(self) -> Equation:
        name_tok = self.take("NAME")
        if name_tok[1] in ATOM_KINDS or name_tok[1] == "Seq":
            raise ParseError(f"{name_tok[1]!r} is reserved", self.lineno, name_tok[2])
        self.take("=")
        rhs = self.parse_expr()
        trailing = self.peek()
        if trailing[0] != "EOL":
            raise ParseError(f"unexpected {trailing[1]!r}", self.lineno, trailing[2])
        return Equation(name_tok[1], rhs)

    def parse_expr(self) -> Expr:
        parts = [self.parse_term()]
        while self.peek()[0] == "+":
            self.take("+")
            parts.append(self.parse_term())
        if len(parts) == 1:
            return parts[0]
        return Sum(tuple(parts))

    def parse_term(self) -> Expr:
        factors = [self.parse_factor()]
        while self.peek()[0] in ("NAME", "("):
            factors.append(self.parse_factor())
        if len(factors) == 1:
            return factors[0]
        return Product(tuple(factors))

    def parse_factor(self) -> Expr:
        tok = self.peek()
        if tok[0] == "(":
            self.take("(")
            inner = self.parse_expr()
            self.take(")")
            return inner
        if tok[0] != "NAME":
            raise ParseError(f"expected a factor, found {tok[1] or 'end of line'!r}", self.lineno, tok[2])
        self.take()
        name = tok[1]
        if name == "Seq":
            self.take("(")
            inner = self.parse_expr()
            self.take(")")
            return Seq(inner)
        if name in ATOM_KINDS:
            return AtomRef(name)
        return ClassRef(name)


def parse_spec(text: str) -> Specification:
    """Parse DSL text into a validated, canonical specification.

    The root is the first equation's symbol.
    """
    equations = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        tokens = _tokenize_line(raw, lineno)
        if not tokens:
            continue
        equations.append(_LineParser(tokens, lineno).parse_equation())
    if not equations:
        raise SpecError("empty input: no equations found")
    return make_spec(equations, root=equations[0].lhs)


def render_expr(expr: Expr) -> str:
    if isinstance(expr, ZeroExpr):
        raise SpecError("the empty class has no DSL form")
    if isinstance(expr, AtomRef):
        return expr.atom
    if isinstance(expr, ClassRef):
        return expr.name
    if isinstance(expr, Seq):
        return f"Seq({render_expr(expr.arg)})"
    if isinstance(expr, Sum):
        return " + ".join(render_expr(t) for t in expr.terms)
    if isinstance(expr, Product):
        parts = []
        for f in expr.factors:
            text = render_expr(f)
            if isinstance(f, Sum):
                text = f"({text})"
            parts.append(text)
        return " ".join(parts)
    raise SpecError(f"not an expression: {expr!r}")


def render_spec(spec: Specification) -> str:
    """DSL text for a specification; parse_spec inverts it exactly."""
    return "\n".join(f"{eq.lhs} = {render_expr(eq.rhs)}" for eq in spec.equations) + "\n"


def expr_to_node(expr: Expr) -> dict:
    if isinstance(expr, ZeroExpr):
        return {"kind": "zero"}
    if isinstance(expr, AtomRef):
        return {"kind": "atom", "name": expr.atom}
    if isinstance(expr, ClassRef):
        return {"kind": "ref", "name": expr.name}
    if isinstance(expr, Sum):
        return {"kind": "sum", "terms": [expr_to_node(t) for t in expr.terms]}
    if isinstance(expr, Product):
        return {"kind": "product", "factors": [expr_to_node(f) for f in expr.factors]}
    if isinstance(expr, Seq):
        return {"kind": "seq", "arg": expr_to_node(expr.arg)}
    raise SpecError(f"not an expression: {expr!r}")


def expr_from_node(node: dict) -> Expr:
    if not isinstance(node, dict) or "kind" not in node:
        raise SpecError(f"malformed expression node: {node!r}")
    kind = node["kind"]
    if kind == "zero":
        return ZERO
    if kind == "atom":
        return AtomRef(node["name"])
    if kind == "ref":
        name = node["name"]
        if not isinstance(name, str) or not name:
            raise SpecError(f"malformed ref node: {node!r}")
        return ClassRef(name)
    if kind == "sum":
        return Sum(tuple(expr_from_node(t) for t in node["terms"]))
    if kind == "product":
        return Product(tuple(expr_from_node(f) for f in node["factors"]))
    if kind == "seq":
        return Seq(expr_from_node(node["arg"]))
    raise SpecError(f"unknown node kind {kind!r}")


def spec_to_dict(spec: Specification) -> dict:
    return {
        "root": spec.root,
        "equations": [{"lhs": eq.lhs, "rhs": expr_to_node(eq.rhs)} for eq in spec.equations],
    }


def spec_from_dict(doc: dict) -> Specification:
    try:
        equations = [Equation(e["lhs"], expr_from_node(e["rhs"])) for e in doc["equations"]]
        root = doc["root"]
    except (KeyError, TypeError) as exc:
        raise SpecError(f"malformed specification document: {exc}") from None
    return make_spec(equations, root=root)


def spec_to_json(spec: Specification, indent: Optional[int] = 2) -> str:
    return json.dumps(spec_to_dict(spec), indent=indent)


def spec_from_json(text: str) -> Specification:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecError(f"invalid JSON: {exc}") from None
    return spec_from_dict(doc)
