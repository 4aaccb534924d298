"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the per-criterion
lines as they complete.
"""

import time

from juxtaspec.builtins import builtin_names, builtin_spec
from juxtaspec.cli import main as cli_main
from juxtaspec.dsl import render_expr
from juxtaspec.juxtapose import TRACK_NONE, TRACK_RIGHT, build_grid, juxtapose
from juxtaspec.operators import complement, expand, reverse
from juxtaspec.oracle import Basis, DEC, INC, avoids_cell, count_class, greedy_unique
from juxtaspec.series import count_series
from juxtaspec.spec import classify, inline_seq
from helpers import poly_mul, rational_series, substitute_geometric

SEPARABLE_JUXT = [1, 1, 2, 6, 24, 115, 609, 3409, 19728, 116692, 701062]
B321 = Basis(((3, 2, 1),))
SEPARABLE_CELL = Basis(((2, 4, 1, 3), (3, 1, 4, 2)))

# avoidance basis of the separable class juxtaposed with the increasing class
SEPARABLE_JUXT_BASIS = Basis((
    (2, 5, 1, 4, 3),
    (3, 5, 1, 4, 2),
    (3, 5, 2, 4, 1),
    (4, 1, 5, 3, 2),
    (4, 2, 5, 3, 1),
    (2, 4, 1, 3, 6, 5),
    (2, 5, 1, 3, 6, 4),
    (3, 1, 4, 2, 6, 5),
    (3, 1, 5, 2, 6, 4),
    (4, 1, 5, 2, 6, 3),
))


def _report(number, description, passed):
    print(f"{'PASS' if passed else 'FAIL'} criterion {number}: {description}")
    assert passed, f"criterion {number}: {description}"


def test_criterion_1_separable_juxtaposition(tmp_path, capsys):
    started = time.monotonic()
    spec_path = tmp_path / "separable_jux.txt"
    assert cli_main([
        "juxtapose", "--builtin", "separable", "--side", "right", "--dir", "inc",
        "--out", str(spec_path),
    ]) == 0
    assert cli_main([
        "enumerate", "--spec", str(spec_path), "--terms", "10",
    ]) == 0
    printed = capsys.readouterr().out.strip()
    elapsed = time.monotonic() - started
    with capsys.disabled():
        _report(
            1,
            f"separable right/inc juxtaposition counts exactly ({elapsed:.2f}s < 5s)",
            printed == ",".join(map(str, SEPARABLE_JUXT)) and elapsed < 5.0,
        )


def test_criterion_2_av321_juxtaposition_vs_oracle(capsys):
    started = time.monotonic()
    out = juxtapose(builtin_spec("av321"), "right", "inc", TRACK_RIGHT)
    series = count_series(out, 9)
    oracle = [count_class([B321, INC], n) for n in range(10)]
    elapsed = time.monotonic() - started
    with capsys.disabled():
        _report(
            2,
            f"321-avoiders juxtaposed with inc match the oracle to n=9 ({elapsed:.1f}s < 60s)",
            series == oracle and elapsed < 60.0,
        )


def test_criterion_3_triple_monotone_grid(capsys):
    order = 12
    grid = build_grid(builtin_spec("monotone"), "inc|core|inc")
    got = count_series(grid, order)

    one_z, one_2z, one_3z = [1, -1], [1, -2], [1, -3]
    term1 = rational_series([1], one_z, order)
    term2 = rational_series(
        [0, 0, 1], poly_mul(poly_mul(one_z, one_z, order), one_2z, order), order
    )
    den3 = poly_mul(
        poly_mul(poly_mul(one_z, one_z, order), one_z, order),
        poly_mul(poly_mul(one_2z, one_2z, order), one_3z, order),
        order,
    )
    term3 = rational_series(poly_mul([0, 0, 0, 1], [1, 1, -4], order), den3, order)
    expected = [a + b + c for a, b, c in zip(term1, term2, term3)]
    with capsys.disabled():
        _report(
            3,
            "triple monotone row matches the exact rational expansion to order 12",
            got == expected,
        )


def test_criterion_4_expansion_golden(capsys):
    spec = builtin_spec("av321")
    first = expand(spec, [("C.R", "i")])
    from juxtaspec.expr import Sum

    def term_set(expr):
        def dist(e):
            from juxtaspec.expr import Product, canonicalize

            e = canonicalize(e)
            if isinstance(e, Sum):
                out = []
                for t in e.terms:
                    out.extend(dist(t))
                return out
            if isinstance(e, Product):
                combos = [()]
                for f in e.factors:
                    combos = [c + (b,) for c in combos for b in dist(f)]
                return [canonicalize(Product(c)) for c in combos]
            return [e]

        return {render_expr(t) for t in dist(expr)}

    ok_first = term_set(first.rhs("C.R.i")) == {
        "C.i C.R.o Z", "C.o C.R.i Z", "C.i Z", "C.o ZR Z",
    }
    second = expand(spec, [("C", "oo")])
    ok_second = term_set(second.rhs("C.oo")) == {"E", "C.oo C.oo SZ Z"}
    with capsys.disabled():
        _report(4, "expansion reproduces the golden first-insertion and gap-run equations",
                ok_first and ok_second)


def test_criterion_5_classification_preserved(capsys):
    mono_out = juxtapose(builtin_spec("monotone"), "right", "inc", TRACK_NONE)
    regular_ok = classify(inline_seq(mono_out)).regular
    av_out = juxtapose(builtin_spec("av321"), "right", "inc", TRACK_RIGHT)
    cf_ok = classify(av_out).context_free
    with capsys.disabled():
        _report(5, "monotone output is regular after SZ inlining; av321 output is context-free",
                regular_ok and cf_ok)


def test_criterion_6_property_suite(capsys):
    order = 12
    ok = True
    for name in builtin_names():
        spec = builtin_spec(name)
        base = count_series(spec, order)
        comp = complement(spec)
        rev = reverse(spec)
        ok &= complement(comp) == spec and reverse(rev) == spec
        ok &= count_series(comp, order) == base
        ok &= count_series(rev, order) == base
        erased = expand(spec, [(spec.root, "o")])
        ok &= count_series(erased, order) == base
        gap_runs = expand(spec, [(spec.root, "oo")])
        ok &= count_series(gap_runs, order) == substitute_geometric(base)
        full = count_series(spec, order)
        ok &= all(count_series(spec, k) == full[: k + 1] for k in (0, 4, 9))
    with capsys.disabled():
        _report(6, "involutions, series preservation, gap-run substitution law, truncation",
                ok)


def test_criterion_7_greedy_uniqueness(capsys):
    ok = True
    for cell in (B321, SEPARABLE_CELL):
        for n in range(9):
            ok &= greedy_unique([cell, INC], n)
    with capsys.disabled():
        _report(7, "greedy cut is a canonical witness for av321 and separable cores, n<=8", ok)


def test_criterion_8_four_way_symmetry(capsys):
    spec = builtin_spec("av321")
    cells_by_request = {
        ("right", "inc"): [B321, INC],
        ("right", "dec"): [B321, DEC],
        ("left", "inc"): [INC, B321],
        ("left", "dec"): [DEC, B321],
    }
    ok = True
    for (side, direction), cells in cells_by_request.items():
        out = juxtapose(spec, side, direction, TRACK_NONE)
        series = count_series(out, 8)
        oracle = [count_class(cells, n) for n in range(9)]
        ok &= series == oracle
    with capsys.disabled():
        _report(8, "all four side/direction juxtapositions of av321 match the oracle, n<=8", ok)


def test_criterion_9_basis_cross_check(capsys):
    ok = True
    from itertools import permutations

    for n in range(9):
        via_cuts = count_class([SEPARABLE_CELL, INC], n)
        via_basis = sum(
            1 for p in permutations(range(1, n + 1))
            if avoids_cell(p, SEPARABLE_JUXT_BASIS)
        )
        ok &= via_cuts == via_basis
    with capsys.disabled():
        _report(9, "cut-point membership equals avoidance of the ten-pattern basis, n<=8", ok)
