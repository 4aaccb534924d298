"""Insertion operators and symmetry operators on specifications.

The six insertion operators rewrite a class into the classes obtained by
inserting increasing runs of new entries into its value gaps:

  o   no insertion; the old rightmost marker is erased.
  i   insert one new entry (at once lowest and rightmost) below the
      operand's rightmost entry.
  oo  insert a possibly empty increasing run into every gap.
  io  insert the lowest new entry below the operand's rightmost entry,
      then possibly empty runs above it.
  oi  insert possibly empty runs, finishing with a new rightmost entry
      in a non-top gap.
  ii  insert the lowest new entry below the operand's rightmost entry and
      a new rightmost entry, with runs in between.

Operators {o, oo, oi} act on products independently of where the rightmost
marker sits; {i, io, ii} must not insert below-the-marker content into
factors above it, so their product rule loses a term when the head factor
carries the marker.

The symmetry operators rewrite a specification for the complement (reverse
every product) and the reverse (swap the ZL and ZR atoms) of its class.
Symbol names are kept unchanged by the symmetry operators, so applying one
twice returns a structurally identical specification.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Mapping, Optional, Sequence, Tuple

from .expr import (
    AtomRef,
    ClassRef,
    EMPTY,
    E_EXPR,
    Expr,
    L_ATOMS,
    Product,
    R_ATOMS,
    Seq,
    SpecError,
    Sum,
    Z,
    ZERO,
    ZL,
    ZLR,
    ZR,
    ZeroExpr,
    canonicalize,
    map_atoms,
    substitute,
)
from .spec import (
    Equation,
    Specification,
    SZ_NAME,
    TrackingKind,
    UNTRACKED,
    _require_markerless,
    make_spec,
    prune_unreachable,
)

# The six insertion-operator tags; complement and reverse name the symmetry
# operators.  Decorated symbols are rendered base "." tag, e.g. C.io.
INSERTION_TAGS = ("o", "i", "oo", "io", "oi", "ii")
ZR_SENSITIVE = frozenset(("i", "io", "ii"))
OPERATOR_TAGS = INSERTION_TAGS + ("complement", "reverse")


@dataclass(frozen=True)
class DecoratedSymbol:
    base: str
    tag: str

    @property
    def name(self) -> str:
        return f"{self.base}.{self.tag}"


def _sz() -> ClassRef:
    return ClassRef(SZ_NAME)


def apply_atom(op: str, kind: str) -> Expr:
    """Action of an insertion operator on a single atom.

    The operand atom survives as the final factor (as Z, or ZL when it was
    leftmost); runs of new entries appear as SZ and a new rightmost marker
    as ZR.  E is fixed by {o, oo} and annihilated by the other four.
    """
    if op not in INSERTION_TAGS:
        raise SpecError(f"unknown insertion operator {op!r}")
    if kind == EMPTY:
        return E_EXPR if op in ("o", "oo") else ZERO
    tail = AtomRef(ZL) if kind in L_ATOMS else AtomRef(Z)
    if op == "o":
        return tail
    if op == "i":
        return Product((AtomRef(ZR), tail))
    if op == "oo":
        return Product((_sz(), tail))
    if op == "io":
        return Product((AtomRef(Z), _sz(), tail))
    if op == "oi":
        return Product((_sz(), AtomRef(ZR), tail))
    return Product((AtomRef(Z), _sz(), AtomRef(ZR), tail))  # ii


def expr_tracks_r(expr: Expr, tracking: Mapping[str, TrackingKind]) -> bool:
    """True when every nonempty object of the expression carries one ZR."""
    if isinstance(expr, AtomRef):
        return expr.atom in R_ATOMS
    if isinstance(expr, ClassRef):
        return tracking.get(expr.name, UNTRACKED).has_r
    if isinstance(expr, Product):
        return any(expr_tracks_r(f, tracking) for f in expr.factors)
    if isinstance(expr, Sum):
        return any(expr_tracks_r(t, tracking) for t in expr.terms)
    return False  # Zero, Seq


def _check_seq_operand(arg: Expr, tracking) -> None:
    _require_markerless(arg, tracking, "operator applied to Seq")


def apply_expr(
    op: str,
    expr: Expr,
    tracking: Mapping[str, TrackingKind],
    needed: Optional[set] = None,
) -> Expr:
    """Rewrite an expression under an insertion operator.

    Linear over sums; products are split head-versus-rest, with the reduced
    rule whenever the head carries the rightmost marker; class references
    become decorated references, recorded in ``needed`` when given.
    """
    if op not in INSERTION_TAGS:
        raise SpecError(f"unknown insertion operator {op!r}")

    def rec(op: str, expr: Expr) -> Expr:
        if isinstance(expr, ZeroExpr):
            return ZERO
        if isinstance(expr, AtomRef):
            return apply_atom(op, expr.atom)
        if isinstance(expr, ClassRef):
            sym = DecoratedSymbol(expr.name, op)
            if needed is not None:
                needed.add((sym.base, sym.tag))
            return ClassRef(sym.name)
        if isinstance(expr, Sum):
            return Sum(tuple(rec(op, t) for t in expr.terms))
        if isinstance(expr, Seq):
            _check_seq_operand(expr.arg, tracking)
            a = expr.arg
            if op == "o":
                return Seq(rec("o", a))
            if op == "oo":
                return Seq(rec("oo", a))
            if op == "i":
                return Product((Seq(rec("o", a)), rec("i", a), Seq(rec("o", a))))
            if op == "io":
                return Product((Seq(rec("o", a)), rec("io", a), Seq(rec("oo", a))))
            if op == "oi":
                return Product((Seq(rec("oo", a)), rec("oi", a), Seq(rec("o", a))))
            return Sum((  # ii
                Product((
                    Seq(rec("o", a)), rec("io", a), Seq(rec("oo", a)),
                    rec("oi", a), Seq(rec("o", a)),
                )),
                Product((Seq(rec("o", a)), rec("ii", a), Seq(rec("o", a)))),
            ))
        if isinstance(expr, Product):
            head = expr.factors[0]
            rest: Expr
            if len(expr.factors) == 2:
                rest = expr.factors[1]
            else:
                rest = Product(expr.factors[1:])
            if op == "o":
                return Product((rec("o", head), rec("o", rest)))
            if op == "oo":
                return Product((rec("oo", head), rec("oo", rest)))
            if op == "oi":
                return Sum((
                    Product((rec("oi", head), rec("o", rest))),
                    Product((rec("oo", head), rec("oi", rest))),
                ))
            head_r = expr_tracks_r(head, tracking)
            if op == "i":
                parts = [Product((rec("i", head), rec("o", rest)))]
                if not head_r:
                    parts.append(Product((rec("o", head), rec("i", rest))))
                return Sum(tuple(parts))
            if op == "io":
                parts = [Product((rec("io", head), rec("oo", rest)))]
                if not head_r:
                    parts.append(Product((rec("o", head), rec("io", rest))))
                return Sum(tuple(parts))
            parts = [  # ii
                Product((rec("ii", head), rec("o", rest))),
                Product((rec("io", head), rec("oi", rest))),
            ]
            if not head_r:
                parts.append(Product((rec("o", head), rec("ii", rest))))
            return Sum(tuple(parts))
        raise SpecError(f"not an expression: {expr!r}")

    return canonicalize(rec(op, expr))


def _normalize_needed(needed) -> list:
    out = []
    for item in needed:
        if isinstance(item, DecoratedSymbol):
            out.append((item.base, item.tag))
        else:
            base, tag = item
            out.append((str(base), str(tag)))
    for base, tag in out:
        if tag not in INSERTION_TAGS:
            raise SpecError(f"unknown insertion operator {tag!r}")
    return out


def _expand_equations(spec: Specification, needed: Sequence[Tuple[str, str]]) -> list:
    """Equations for the transitive closure of the requested decorated symbols."""
    queue = deque(needed)
    seen = set(needed)
    out = []
    while queue:
        base, tag = queue.popleft()
        rhs_src = spec.rhs(base)
        discovered: set = set()
        rhs = apply_expr(tag, rhs_src, spec.tracking, discovered)
        out.append((f"{base}.{tag}", rhs))
        for pair in sorted(discovered):
            if pair not in seen:
                seen.add(pair)
                queue.append(pair)
    return out


def _eliminate_zero_equations(named: list) -> list:
    """Drop empty-class equations, substituting Zero into their references."""
    named = list(named)
    while True:
        zero_names = {name for name, rhs in named if isinstance(rhs, ZeroExpr)}
        if not zero_names:
            return named
        replacements = {name: ZERO for name in zero_names}
        named = [
            (name, substitute(rhs, replacements))
            for name, rhs in named
            if name not in zero_names
        ]


def expand(spec: Specification, needed: Iterable) -> Specification:
    """Closed specification for the requested decorated symbols.

    ``needed`` is a nonempty collection of (symbol, operator-tag) pairs; the
    first pair names the root of the result.  The output contains one
    equation per reachable decorated symbol, over decorated references, SZ
    and atoms only.  Empty-class equations are eliminated.
    """
    pairs = _normalize_needed(list(needed))
    if not pairs:
        raise SpecError("expand requires at least one decorated symbol")
    named = _eliminate_zero_equations(_expand_equations(spec, pairs))
    root = f"{pairs[0][0]}.{pairs[0][1]}"
    if root not in {name for name, _ in named}:
        raise SpecError(f"expansion of {root} is the empty class")
    eqs = prune_unreachable([Equation(name, rhs) for name, rhs in named], root)
    return make_spec(eqs, root=root)


def _map_spec(spec: Specification, fn) -> Specification:
    # the reserved SZ equation stays canonical: runs of plain atoms are
    # fixed by every symmetry
    eqs = [
        eq if eq.lhs == SZ_NAME else Equation(eq.lhs, fn(eq.rhs))
        for eq in spec.equations
    ]
    return make_spec(eqs, root=spec.root)


def complement(spec: Specification) -> Specification:
    """Specification for the complement class: every product reversed.

    Atoms are fixed, Seq maps through, tracking is unchanged, and the
    counting sequence is identical.  Involution.
    """

    def flip(expr: Expr) -> Expr:
        if isinstance(expr, (ZeroExpr, AtomRef, ClassRef)):
            return expr
        if isinstance(expr, Seq):
            return Seq(flip(expr.arg))
        if isinstance(expr, Sum):
            return Sum(tuple(flip(t) for t in expr.terms))
        if isinstance(expr, Product):
            return Product(tuple(flip(f) for f in reversed(expr.factors)))
        raise SpecError(f"not an expression: {expr!r}")

    return _map_spec(spec, lambda rhs: canonicalize(flip(rhs)))


_REVERSE_ATOMS = {ZR: ZL, ZL: ZR}


def reverse(spec: Specification) -> Specification:
    """Specification for the reverse class: ZR and ZL swapped.

    Products and Seq are preserved, tracking swaps rightmost with leftmost,
    and the counting sequence is identical.  Involution.
    """
    return _map_spec(spec, lambda rhs: map_atoms(rhs, _REVERSE_ATOMS))


_FORGET_LEFT = {ZL: Z, ZLR: ZR}


def forget_left(spec: Specification) -> Specification:
    """Erase leftmost markers (ZL -> Z, ZLR -> ZR); same class and series."""
    return _map_spec(spec, lambda rhs: map_atoms(rhs, _FORGET_LEFT))
