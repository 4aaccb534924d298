"""Specifications: named equation systems with marker-tracking metadata.

A specification is a list of equations ``name = expr`` with a distinguished
root symbol.  Tracking metadata records, per symbol, whether every nonempty
object of that class carries exactly one rightmost marker (ZR or ZLR) and/or
exactly one leftmost marker (ZL or ZLR).  Tracking is always inferred from
the equations, never declared.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Optional, Sequence

from .expr import (
    ATOM_KINDS,
    AtomRef,
    ClassRef,
    E_EXPR,
    Expr,
    L_ATOMS,
    Product,
    R_ATOMS,
    Seq,
    SpecError,
    Sum,
    Z_EXPR,
    ZeroExpr,
    canonicalize,
    contains_seq,
    referenced_names,
    substitute,
    terms,
    walk,
)

SZ_NAME = "SZ"

RESERVED_NAMES = frozenset(ATOM_KINDS) | {"Seq"}


class TrackingError(SpecError):
    """Marker usage is inconsistent across the terms of some equation."""


@dataclass(frozen=True)
class TrackingKind:
    has_r: bool
    has_l: bool


UNTRACKED = TrackingKind(False, False)


@dataclass(frozen=True)
class Equation:
    lhs: str
    rhs: Expr


def sz_equation() -> Equation:
    """The reserved sequence-of-atoms symbol: SZ = E + SZ Z."""
    return Equation(SZ_NAME, Sum((E_EXPR, Product((ClassRef(SZ_NAME), Z_EXPR)))))


@dataclass(frozen=True)
class Specification:
    """Immutable equation system.  Build through :func:`make_spec`."""

    equations: tuple
    root: str
    tracking: Mapping[str, TrackingKind] = field(compare=False)
    _by_name: Mapping[str, Expr] = field(compare=False, repr=False)

    @property
    def symbols(self) -> tuple:
        return tuple(eq.lhs for eq in self.equations)

    def rhs(self, name: str) -> Expr:
        try:
            return self._by_name[name]
        except KeyError:
            raise SpecError(f"undefined symbol {name!r}") from None

    def root_tracking(self) -> TrackingKind:
        return self.tracking[self.root]


def make_spec(equations: Iterable[Equation], root: Optional[str] = None) -> Specification:
    """Canonicalize, validate and classify-track an equation system.

    The SZ symbol is auto-injected when referenced but not defined; a
    user-supplied SZ equation must match the reserved one.  The root defaults
    to the first equation's left-hand side and its equation is moved first.
    """
    eqs = [Equation(eq.lhs, canonicalize(eq.rhs)) for eq in equations]
    if not eqs:
        raise SpecError("specification has no equations")

    seen = set()
    for eq in eqs:
        if eq.lhs in RESERVED_NAMES:
            raise SpecError(f"{eq.lhs!r} is reserved and cannot be defined")
        if eq.lhs in seen:
            raise SpecError(f"duplicate definition of {eq.lhs!r}")
        seen.add(eq.lhs)
        if isinstance(eq.rhs, ZeroExpr):
            raise SpecError(f"{eq.lhs!r} defines an empty class; such equations are not representable")

    defined = {eq.lhs for eq in eqs}
    used = set()
    for eq in eqs:
        used |= referenced_names(eq.rhs)
    undefined = used - defined
    if SZ_NAME in undefined:
        eqs.append(sz_equation())
        defined.add(SZ_NAME)
        undefined.discard(SZ_NAME)
    if undefined:
        missing = ", ".join(sorted(undefined))
        raise SpecError(f"undefined symbol(s): {missing}")
    if SZ_NAME in defined:
        given = next(eq.rhs for eq in eqs if eq.lhs == SZ_NAME)
        if given != sz_equation().rhs:
            raise SpecError(f"{SZ_NAME} is reserved and must equal E + {SZ_NAME} Z")

    if root is None:
        root = eqs[0].lhs
    if root not in defined:
        raise SpecError(f"root symbol {root!r} has no equation")
    eqs.sort(key=lambda eq: 0 if eq.lhs == root else 1)

    tracking = _infer_tracking(eqs)
    _check_seq_arguments(eqs, tracking)
    by_name = {eq.lhs: eq.rhs for eq in eqs}
    return Specification(tuple(eqs), root, tracking, by_name)


def infer_tracking(spec: Specification) -> Mapping[str, TrackingKind]:
    """Per-symbol marker tracking, as stored on the specification."""
    return dict(spec.tracking)


def _infer_tracking(eqs: Sequence[Equation]) -> dict:
    r_counts = _marker_fixpoint(eqs, R_ATOMS, "rightmost")
    l_counts = _marker_fixpoint(eqs, L_ATOMS, "leftmost")
    return {
        eq.lhs: TrackingKind(r_counts[eq.lhs] == 1, l_counts[eq.lhs] == 1)
        for eq in eqs
    }


def _marker_fixpoint(eqs: Sequence[Equation], markers: frozenset, label: str) -> dict:
    """Least fixpoint of per-symbol marker counts, then exactness check.

    A term that is literally E describes the empty object and is exempt from
    the count (the empty permutation carries no markers); every other term of
    a marker-carrying symbol must contain the marker exactly once.
    """
    counts = {eq.lhs: 0 for eq in eqs}

    def upper(expr: Expr) -> int:
        if isinstance(expr, AtomRef):
            return 1 if expr.atom in markers else 0
        if isinstance(expr, ClassRef):
            return counts[expr.name]
        if isinstance(expr, Seq):
            return 0
        if isinstance(expr, Product):
            return min(2, sum(upper(f) for f in expr.factors))
        if isinstance(expr, Sum):
            return max(upper(t) for t in expr.terms)
        return 0  # Zero

    for _ in range(2 * len(eqs) + 2):
        changed = False
        for eq in eqs:
            top = [t for t in terms(eq.rhs) if t != E_EXPR]
            value = max((upper(t) for t in top), default=0)
            if value > counts[eq.lhs]:
                counts[eq.lhs] = value
                changed = True
        if not changed:
            break

    def exact(expr: Expr) -> int:
        if isinstance(expr, AtomRef):
            return 1 if expr.atom in markers else 0
        if isinstance(expr, ClassRef):
            return counts[expr.name]
        if isinstance(expr, Seq):
            return 0
        if isinstance(expr, Product):
            return sum(exact(f) for f in expr.factors)
        if isinstance(expr, Sum):
            values = {exact(t) for t in expr.terms}
            if len(values) > 1:
                raise TrackingError(f"mixed {label}-marker counts inside a factor")
            return values.pop()
        return 0

    for eq in eqs:
        for t in terms(eq.rhs):
            if t == E_EXPR:
                continue
            value = exact(t)
            if value > 1:
                raise TrackingError(
                    f"term of {eq.lhs!r} carries the {label} marker more than once"
                )
            if value != counts[eq.lhs]:
                raise TrackingError(
                    f"mixed terms in {eq.lhs!r}: some carry the {label} marker, others do not"
                )
    return counts


def _check_seq_arguments(eqs: Sequence[Equation], tracking: dict) -> None:
    for eq in eqs:
        for node in walk(eq.rhs):
            if isinstance(node, Seq):
                _require_markerless(node.arg, tracking, f"Seq argument in {eq.lhs!r}")


def _require_markerless(expr: Expr, tracking: Mapping[str, TrackingKind], where: str) -> None:
    """Marked atoms can never appear inside Seq: reject ZL/ZR/ZLR content."""
    for node in walk(expr):
        if isinstance(node, AtomRef) and node.atom in (R_ATOMS | L_ATOMS):
            raise SpecError(f"{where}: marked atom {node.atom} cannot appear inside Seq")
        if isinstance(node, ClassRef):
            kind = tracking.get(node.name, UNTRACKED)
            if kind.has_r or kind.has_l:
                raise SpecError(
                    f"{where}: class {node.name!r} carries a marker and cannot appear inside Seq"
                )


@dataclass(frozen=True)
class Classification:
    regular: bool
    context_free: bool

    @property
    def label(self) -> str:
        if self.regular:
            return "regular"
        if self.context_free:
            return "context-free"
        return "general"


def classify(spec: Specification) -> Classification:
    """Constructor-restriction flags of the system.

    context-free: no Seq node anywhere (class references are fine).
    regular: after replacing SZ by Seq(Z) and repeatedly inlining every
    non-root symbol whose right-hand side is reference-free, the root's
    equation uses atoms only.  Recursive symbols never inline, so genuinely
    recursive systems are not regular.  Both flags may hold at once.
    """
    context_free = not any(contains_seq(eq.rhs) for eq in spec.equations)

    inlined = inline_seq(spec)
    defs = {eq.lhs: eq.rhs for eq in inlined.equations}
    for _ in range(len(defs)):
        closed = {
            name: rhs
            for name, rhs in defs.items()
            if name != inlined.root and not referenced_names(rhs)
        }
        if not closed:
            break
        replacements = {name: rhs for name, rhs in closed.items()}
        defs = {
            name: substitute(rhs, replacements)
            for name, rhs in defs.items()
            if name not in closed
        }
    regular = not referenced_names(defs[inlined.root])
    return Classification(regular=regular, context_free=context_free)


def inline_seq(spec: Specification) -> Specification:
    """Replace every SZ reference by Seq(Z) and drop the SZ equation."""
    if SZ_NAME not in spec._by_name or spec.root == SZ_NAME:
        return spec
    replacement = {SZ_NAME: Seq(Z_EXPR)}
    eqs = [
        Equation(eq.lhs, substitute(eq.rhs, replacement))
        for eq in spec.equations
        if eq.lhs != SZ_NAME
    ]
    return make_spec(eqs, root=spec.root)


def prune_unreachable(equations: Sequence[Equation], root: str) -> list:
    """Keep only equations reachable from the root by class references."""
    by_name = {eq.lhs: eq for eq in equations}
    keep = set()
    stack = [root]
    while stack:
        name = stack.pop()
        if name in keep or name not in by_name:
            continue
        keep.add(name)
        stack.extend(referenced_names(by_name[name].rhs))
    return [eq for eq in equations if eq.lhs in keep]
