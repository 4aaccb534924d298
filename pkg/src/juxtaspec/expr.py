"""Expression algebra: sums of products over atoms, class references and Seq nodes.

Every equation right-hand side is an ``Expr``.  Product order is significant:
factors are read in increasing value order of the permutation entries they
stand for ("bottom to top"), so products are never reordered except by the
explicit symmetry operators.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

# Atom kinds.  EMPTY is the neutral object of size 0; the other four all have
# size 1.  ZL / ZR mark the positionally leftmost / rightmost entry, ZLR both.
EMPTY = "E"
Z = "Z"
ZL = "ZL"
ZR = "ZR"
ZLR = "ZLR"

ATOM_KINDS = (EMPTY, Z, ZL, ZR, ZLR)
R_ATOMS = frozenset((ZR, ZLR))
L_ATOMS = frozenset((ZL, ZLR))


class SpecError(Exception):
    """Invalid specification or expression."""


class Expr:
    __slots__ = ()


@dataclass(frozen=True)
class ZeroExpr(Expr):
    """Annihilator: the empty class with no objects at all."""

    def __repr__(self):
        return "Zero"


ZERO = ZeroExpr()


@dataclass(frozen=True)
class AtomRef(Expr):
    atom: str

    def __post_init__(self):
        if self.atom not in ATOM_KINDS:
            raise SpecError(f"unknown atom kind {self.atom!r}")

    def __repr__(self):
        return self.atom


@dataclass(frozen=True)
class ClassRef(Expr):
    name: str

    def __repr__(self):
        return f"@{self.name}"


@dataclass(frozen=True)
class Product(Expr):
    factors: tuple

    def __repr__(self):
        return "(" + " ".join(map(repr, self.factors)) + ")"


@dataclass(frozen=True)
class Sum(Expr):
    terms: tuple

    def __repr__(self):
        return "(" + " + ".join(map(repr, self.terms)) + ")"


@dataclass(frozen=True)
class Seq(Expr):
    arg: Expr

    def __repr__(self):
        return f"Seq{self.arg!r}"


E_EXPR = AtomRef(EMPTY)
Z_EXPR = AtomRef(Z)


def atom(kind: str) -> AtomRef:
    return AtomRef(kind)


def ref(name: str) -> ClassRef:
    return ClassRef(name)


def product(*factors: Expr) -> Expr:
    return canonicalize(Product(tuple(factors)))


def total(*terms: Expr) -> Expr:
    """Combinatorial sum of the given expressions, canonicalized."""
    return canonicalize(Sum(tuple(terms)))


def seq(arg: Expr) -> Expr:
    return canonicalize(Seq(arg))


def canonicalize(expr: Expr) -> Expr:
    """Normal form: flattened, Zero-absorbed, Empty-unit.

    No Sum directly inside a Sum, no Product inside a Product, no Zero term
    in a Sum, no Empty factor in a Product, no Sum/Product of fewer than two
    children.  Counting semantics are preserved; term and factor order are
    kept as given.  Idempotent.
    """
    if isinstance(expr, (ZeroExpr, AtomRef, ClassRef)):
        return expr
    if isinstance(expr, Seq):
        arg = canonicalize(expr.arg)
        if isinstance(arg, ZeroExpr):
            # sequences over the empty class: only the empty sequence remains
            return E_EXPR
        return Seq(arg)
    if isinstance(expr, Sum):
        flat = []
        for term in expr.terms:
            term = canonicalize(term)
            if isinstance(term, ZeroExpr):
                continue
            if isinstance(term, Sum):
                flat.extend(term.terms)
            else:
                flat.append(term)
        if not flat:
            return ZERO
        if len(flat) == 1:
            return flat[0]
        return Sum(tuple(flat))
    if isinstance(expr, Product):
        flat = []
        for factor in expr.factors:
            factor = canonicalize(factor)
            if isinstance(factor, ZeroExpr):
                return ZERO
            if factor == E_EXPR:
                continue
            if isinstance(factor, Product):
                flat.extend(factor.factors)
            else:
                flat.append(factor)
        if not flat:
            return E_EXPR
        if len(flat) == 1:
            return flat[0]
        return Product(tuple(flat))
    raise SpecError(f"not an expression: {expr!r}")


def terms(expr: Expr) -> tuple:
    """Top-level terms of a canonical expression."""
    if isinstance(expr, Sum):
        return expr.terms
    return (expr,)


def factors(expr: Expr) -> tuple:
    """Top-level factors of a canonical expression."""
    if isinstance(expr, Product):
        return expr.factors
    return (expr,)


def walk(expr: Expr) -> Iterator[Expr]:
    """All nodes of the expression tree, preorder."""
    yield expr
    if isinstance(expr, Sum):
        for t in expr.terms:
            yield from walk(t)
    elif isinstance(expr, Product):
        for f in expr.factors:
            yield from walk(f)
    elif isinstance(expr, Seq):
        yield from walk(expr.arg)


def referenced_names(expr: Expr) -> set:
    return {node.name for node in walk(expr) if isinstance(node, ClassRef)}


def contains_seq(expr: Expr) -> bool:
    return any(isinstance(node, Seq) for node in walk(expr))


def substitute(expr: Expr, replacements: dict) -> Expr:
    """Replace class references by name; result is canonicalized."""
    if isinstance(expr, ClassRef):
        return replacements.get(expr.name, expr)
    if isinstance(expr, (ZeroExpr, AtomRef)):
        return expr
    if isinstance(expr, Seq):
        return canonicalize(Seq(substitute(expr.arg, replacements)))
    if isinstance(expr, Sum):
        return canonicalize(Sum(tuple(substitute(t, replacements) for t in expr.terms)))
    if isinstance(expr, Product):
        return canonicalize(Product(tuple(substitute(f, replacements) for f in expr.factors)))
    raise SpecError(f"not an expression: {expr!r}")


def map_atoms(expr: Expr, mapping: dict) -> Expr:
    """Rename atom kinds throughout; result is canonicalized."""
    if isinstance(expr, AtomRef):
        return AtomRef(mapping.get(expr.atom, expr.atom))
    if isinstance(expr, (ZeroExpr, ClassRef)):
        return expr
    if isinstance(expr, Seq):
        return canonicalize(Seq(map_atoms(expr.arg, mapping)))
    if isinstance(expr, Sum):
        return canonicalize(Sum(tuple(map_atoms(t, mapping) for t in expr.terms)))
    if isinstance(expr, Product):
        return canonicalize(Product(tuple(map_atoms(f, mapping) for f in expr.factors)))
    raise SpecError(f"not an expression: {expr!r}")
