"""Exact counting sequences by truncated power-series fixpoint iteration.

Every atom contributes z (E contributes 1), Seq(A) contributes 1/(1-A), and
the equation system is iterated from zero until stable.  Coefficients are
Python integers, so arbitrarily large counts are exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Sequence

from .expr import (
    AtomRef,
    ClassRef,
    EMPTY,
    Expr,
    Product,
    Seq,
    SpecError,
    Sum,
    ZeroExpr,
)
from .spec import Specification

Series = List[int]

_UNKNOWN = None  # unresolved valuation


class EnumerationError(SpecError):
    """The system cannot be enumerated (unproductive or ill-formed)."""


def _poly_add(a: Series, b: Series) -> Series:
    return [x + y for x, y in zip(a, b)]


def _poly_mul(a: Series, b: Series, order: int) -> Series:
    out = [0] * (order + 1)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        top = order - i
        for j, bj in enumerate(b[: top + 1]):
            if bj:
                out[i + j] += ai * bj
    return out


def _poly_seq(a: Series, order: int) -> Series:
    """1/(1-a) truncated; requires a[0] == 0."""
    if a[0] != 0:
        raise EnumerationError("Seq argument has a nonzero constant term")
    out = [0] * (order + 1)
    out[0] = 1
    for n in range(1, order + 1):
        out[n] = sum(a[j] * out[n - j] for j in range(1, n + 1))
    return out


def _eval_expr(expr: Expr, env: dict, order: int) -> Series:
    if isinstance(expr, ZeroExpr):
        return [0] * (order + 1)
    if isinstance(expr, AtomRef):
        out = [0] * (order + 1)
        if expr.atom == EMPTY:
            out[0] = 1
        elif order >= 1:
            out[1] = 1
        return out
    if isinstance(expr, ClassRef):
        return list(env[expr.name])
    if isinstance(expr, Sum):
        out = [0] * (order + 1)
        for t in expr.terms:
            out = _poly_add(out, _eval_expr(t, env, order))
        return out
    if isinstance(expr, Product):
        out = _eval_expr(expr.factors[0], env, order)
        for f in expr.factors[1:]:
            out = _poly_mul(out, _eval_expr(f, env, order), order)
        return out
    if isinstance(expr, Seq):
        return _poly_seq(_eval_expr(expr.arg, env, order), order)
    raise SpecError(f"not an expression: {expr!r}")


def _valuation(expr: Expr, vals: dict) -> Optional[int]:
    """Minimal object size of an expression, or None while unresolved."""
    if isinstance(expr, ZeroExpr):
        return None
    if isinstance(expr, AtomRef):
        return 0 if expr.atom == EMPTY else 1
    if isinstance(expr, ClassRef):
        return vals[expr.name]
    if isinstance(expr, Seq):
        return 0
    if isinstance(expr, Sum):
        best = None
        for t in expr.terms:
            v = _valuation(t, vals)
            if v is not None and (best is None or v < best):
                best = v
        return best
    if isinstance(expr, Product):
        total = 0
        for f in expr.factors:
            v = _valuation(f, vals)
            if v is None:
                return None
            total += v
        return total
    raise SpecError(f"not an expression: {expr!r}")


def _valuations(spec: Specification) -> dict:
    vals = {name: _UNKNOWN for name in spec.symbols}
    for _ in range(len(vals) + 1):
        changed = False
        for eq in spec.equations:
            v = _valuation(eq.rhs, vals)
            if v is not None and (vals[eq.lhs] is None or v < vals[eq.lhs]):
                vals[eq.lhs] = v
                changed = True
        if not changed:
            break
    return vals


def _seq_argument_problems(spec: Specification, vals: dict) -> list:
    problems = []

    def scan(expr: Expr, lhs: str):
        if isinstance(expr, Seq):
            v = _valuation(expr.arg, vals)
            if v == 0:
                problems.append(f"{lhs}: Seq argument has nonzero constant term")
            scan(expr.arg, lhs)
        elif isinstance(expr, Sum):
            for t in expr.terms:
                scan(t, lhs)
        elif isinstance(expr, Product):
            for f in expr.factors:
                scan(f, lhs)

    for eq in spec.equations:
        scan(eq.rhs, eq.lhs)
    return problems


@dataclass(frozen=True)
class ProductivityReport:
    ok: bool
    unproductive: tuple
    problems: tuple

    def __str__(self):
        if self.ok:
            return "ok"
        notes = [f"unproductive symbol {name!r}" for name in self.unproductive]
        notes.extend(self.problems)
        return "; ".join(notes)


def productivity_check(spec: Specification) -> ProductivityReport:
    """Diagnose symbols whose minimal size never resolves and bad Seq uses."""
    vals = _valuations(spec)
    unproductive = tuple(name for name in spec.symbols if vals[name] is None)
    problems = tuple(_seq_argument_problems(spec, vals))
    return ProductivityReport(not unproductive and not problems, unproductive, problems)


def _zero_lag_refs(expr: Expr, vals: dict) -> set:
    """Symbols whose order-n coefficient feeds this expression's order n."""
    if isinstance(expr, ClassRef):
        return {expr.name}
    if isinstance(expr, Sum):
        out = set()
        for t in expr.terms:
            out |= _zero_lag_refs(t, vals)
        return out
    if isinstance(expr, Seq):
        return _zero_lag_refs(expr.arg, vals)
    if isinstance(expr, Product):
        out = set()
        fvals = [_valuation(f, vals) or 0 for f in expr.factors]
        total = sum(fvals)
        for i, f in enumerate(expr.factors):
            if total - fvals[i] == 0:
                out |= _zero_lag_refs(f, vals)
        return out
    return set()


def _evaluation_order(spec: Specification, vals: dict) -> list:
    """Topological order on the zero-lag dependency graph.

    With this order one full sweep settles one further coefficient order, so
    the iteration below stabilizes within order+2 sweeps.  A zero-lag cycle
    means some coefficient depends on itself, i.e. a tautological system.
    """
    deps = {eq.lhs: _zero_lag_refs(eq.rhs, vals) & set(spec.symbols) for eq in spec.equations}
    order = []
    done = set()
    temp = set()

    def visit(name):
        if name in done:
            return
        if name in temp:
            raise EnumerationError(
                f"non-productive system: {name!r} depends on itself at equal size"
            )
        temp.add(name)
        for dep in sorted(deps[name]):
            visit(dep)
        temp.discard(name)
        done.add(name)
        order.append(name)

    for name in spec.symbols:
        visit(name)
    return order


def _series_rounds(spec: Specification, order: int):
    """Yield successive per-symbol snapshots of the fixpoint iteration."""
    vals = _valuations(spec)
    unproductive = [name for name in spec.symbols if vals[name] is None]
    if unproductive:
        raise EnumerationError(
            "non-productive system: no objects derivable for "
            + ", ".join(repr(n) for n in unproductive)
        )
    problems = _seq_argument_problems(spec, vals)
    if problems:
        raise EnumerationError("; ".join(problems))

    sweep = _evaluation_order(spec, vals)
    env = {name: [0] * (order + 1) for name in spec.symbols}
    yield {name: list(series) for name, series in env.items()}
    for _ in range(order + 2):
        changed = False
        for name in sweep:
            new = _eval_expr(spec.rhs(name), env, order)
            if new != env[name]:
                env[name] = new
                changed = True
        yield {name: list(series) for name, series in env.items()}
        if not changed:
            return
    raise EnumerationError(f"series did not stabilize within {order + 2} sweeps")


def count_series(spec: Specification, order: int) -> Series:
    """Exact coefficients 0..order of the root's counting sequence."""
    if order < 0:
        raise ValueError("order must be nonnegative")
    snapshot = None
    for snapshot in _series_rounds(spec, order):
        pass
    return snapshot[spec.root]


@dataclass(frozen=True)
class SeriesComparison:
    equal: bool
    overlap: int
    index: Optional[int] = None
    left: Optional[int] = None
    right: Optional[int] = None

    def __str__(self):
        if not self.equal:
            return f"mismatch at index {self.index}: {self.left} != {self.right}"
        if self.overlap == 0:
            return "equal (zero-length overlap)"
        return f"equal on first {self.overlap} coefficients"


def compare_series(a: Sequence[int], b: Sequence[int]) -> SeriesComparison:
    """Compare two sequences on their overlap; report the first mismatch."""
    overlap = min(len(a), len(b))
    for i in range(overlap):
        if a[i] != b[i]:
            return SeriesComparison(False, overlap, i, a[i], b[i])
    return SeriesComparison(True, overlap)


def format_series(coeffs: Sequence[int]) -> str:
    return ",".join(str(c) for c in coeffs)
