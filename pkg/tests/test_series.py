import pytest

from juxtaspec.builtins import builtin_names, builtin_spec
from juxtaspec.dsl import parse_spec, spec_from_dict, spec_to_dict
from juxtaspec.series import (
    EnumerationError,
    compare_series,
    count_series,
    format_series,
    productivity_check,
    _series_rounds,
)
from juxtaspec.spec import make_spec, sz_equation

CATALAN = [1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862]


def test_av321_with_empty_root():
    spec = parse_spec("C = E + C C Z\nC.R = C C.R Z + C ZR\n")
    assert count_series(spec, 6) == [1, 1, 2, 5, 14, 42, 132]


def test_sz_alone():
    spec = make_spec([sz_equation()])
    assert count_series(spec, 5) == [1, 1, 1, 1, 1, 1]


def test_builtin_series():
    assert count_series(builtin_spec("av321"), 9) == CATALAN
    assert count_series(builtin_spec("av312"), 9) == CATALAN
    assert count_series(builtin_spec("separable"), 8) == [1, 1, 2, 6, 22, 90, 394, 1806, 8558]
    assert count_series(builtin_spec("monotone"), 6) == [1] * 7


def test_order_zero():
    assert count_series(builtin_spec("av321"), 0) == [1]
    with pytest.raises(ValueError):
        count_series(builtin_spec("av321"), -1)


def test_truncation_coherence():
    for name in builtin_names():
        spec = builtin_spec(name)
        full = count_series(spec, 12)
        for order in (0, 3, 7):
            assert count_series(spec, order) == full[: order + 1]


def test_monotone_convergence():
    # once an order settles it never changes in a later sweep
    spec = builtin_spec("separable")
    rounds = list(_series_rounds(spec, 8))
    final = rounds[-1][spec.root]
    for k, snapshot in enumerate(rounds):
        got = snapshot[spec.root]
        prefix = max(0, k - 1)
        assert got[:prefix] == final[:prefix]


def test_atom_marks_do_not_affect_counting():
    # demote every marked atom through the JSON form and compare
    spec = builtin_spec("av321")
    doc = spec_to_dict(spec)

    def demote(node):
        if node["kind"] == "atom":
            name = {"ZR": "Z", "ZL": "Z", "ZLR": "Z"}.get(node["name"], node["name"])
            return {"kind": "atom", "name": name}
        if node["kind"] == "sum":
            return {"kind": "sum", "terms": [demote(t) for t in node["terms"]]}
        if node["kind"] == "product":
            return {"kind": "product", "factors": [demote(f) for f in node["factors"]]}
        if node["kind"] == "seq":
            return {"kind": "seq", "arg": demote(node["arg"])}
        return node

    doc = {
        "root": doc["root"],
        "equations": [{"lhs": e["lhs"], "rhs": demote(e["rhs"])} for e in doc["equations"]],
    }
    assert count_series(spec_from_dict(doc), 9) == count_series(spec, 9)


def test_unproductive_system_rejected():
    spec = parse_spec("A = A Z\n")
    with pytest.raises(EnumerationError, match="non-productive"):
        count_series(spec, 4)


def test_tautological_system_rejected():
    spec = parse_spec("A = B\nB = A + Z\n")
    with pytest.raises(EnumerationError, match="non-productive"):
        count_series(spec, 4)


def test_seq_constant_term_rejected():
    spec = parse_spec("A = Seq(B)\nB = E + Z\n")
    with pytest.raises(EnumerationError, match="constant term"):
        count_series(spec, 4)


def test_productivity_check_diagnostics():
    assert not productivity_check(parse_spec("A = A Z\n")).ok
    assert "A" in productivity_check(parse_spec("A = A Z\n")).unproductive
    assert productivity_check(builtin_spec("av321")).ok
    report = productivity_check(parse_spec("A = Seq(B)\nB = E + Z\n"))
    assert not report.ok
    assert any("constant term" in p for p in report.problems)


def test_reference_chain_converges():
    spec = parse_spec("A = B\nB = C\nC = Z + C Z\n")
    assert count_series(spec, 4) == [0, 1, 1, 1, 1]


def test_compare_series():
    assert compare_series([1, 1, 2, 5], [1, 1, 2, 5, 14]).equal
    verdict = compare_series([1, 1, 2, 5], [1, 1, 2, 6])
    assert not verdict.equal
    assert (verdict.index, verdict.left, verdict.right) == (3, 5, 6)
    empty = compare_series([], [1])
    assert empty.equal and empty.overlap == 0
    assert "zero-length" in str(empty)


def test_format_series():
    assert format_series([1, 1, 2, 6]) == "1,1,2,6"
