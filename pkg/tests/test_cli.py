import json
import subprocess
import sys

import pytest
from hypothesis import given, strategies as st

from quasimod.cli import main
from quasimod.expr import EvalError, ParseError, RC, Deriv, Gen, evaluate, parse, to_text
from quasimod.qseries import QSeries
from quasimod.ring import DELTA, E2, GradedPoly


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_parse_nodes():
    assert parse("D(E2)") == Deriv(Gen("E2"))
    node = parse("RC(E4, D(E4), 1)")
    assert isinstance(node, RC) and node.n == 1
    assert evaluate(node).poly == DELTA * 960


def test_parse_errors():
    with pytest.raises(ParseError) as exc:
        parse("E2^^2")
    assert exc.value.pos == 3
    with pytest.raises(ParseError, match="unknown identifier"):
        parse("E8")
    with pytest.raises(ParseError):
        parse("RC(E2, E2)")
    with pytest.raises(ParseError):
        parse("E2 E4")


def test_eval_weight_diagnostic():
    with pytest.raises(EvalError):
        evaluate("E2 + E4")


def test_whitespace_and_rationals():
    assert evaluate(" -3/4 * E2 ^ 2 - E4 ").poly == E2 * E2 * (-3) / 4 - GradedPoly({(0, 1, 0): 1})


exprs = st.recursive(
    st.sampled_from(["E2", "E4", "E6", "Delta", "3", "-5/7"]).map(parse),
    lambda inner: st.one_of(
        st.tuples(inner, inner).map(lambda ab: parse(f"{to_text(ab[0])} * {to_text(ab[1])}")),
        st.tuples(inner, st.integers(0, 3)).map(lambda be: parse(f"({to_text(be[0])})^{be[1]}")),
        inner.map(lambda e: Deriv(e)),
        st.tuples(inner, inner).map(lambda ab: parse(f"{to_text(ab[0])} - {to_text(ab[1])}")),
    ),
    max_leaves=5,
)


@given(exprs)
def test_print_parse_round_trip(e):
    assert parse(to_text(e)) == e


def test_expand_delta(capsys):
    code, out, _ = run(capsys, "expand", "Delta", "--order", "5", "--format", "list")
    assert code == 0
    assert out.strip() == "0,1,-24,252,-1472,4830"
    code, out, _ = run(capsys, "expand", "Delta", "--order", "5")
    s = QSeries.from_json(out)
    assert s.to_list() == [0, 1, -24, 252, -1472, 4830]
    assert s.to_json() == out.strip()


def test_expand_out_file(tmp_path, capsys):
    path = tmp_path / "e2.json"
    assert run(capsys, "expand", "E2", "--order", "3", "--out", str(path))[0] == 0
    assert QSeries.from_json(path.read_text()).to_list() == [1, -24, -72, -96]


def test_bracket_command(capsys):
    code, out, _ = run(capsys, "bracket", "--f", "E2", "--g", "E2", "--n", "4")
    obj = json.loads(out)
    assert code == 0 and obj["weight"] == 12 and obj["depth"] == 2
    assert GradedPoly.from_records(obj["poly"]) == DELTA * -48
    code, out, _ = run(capsys, "bracket", "--f", "E4", "--g", "D(E4)", "--n", "1", "--t", "1")
    assert GradedPoly.from_records(json.loads(out)["poly"]) == DELTA * 960


def test_solve_coeffs(capsys):
    code, out, _ = run(capsys, "solve-coeffs", "--k", "2", "--s", "1", "--l", "2", "--t", "1", "--n", "4")
    assert code == 0 and out.strip() == "(1,-16,36,-16,1)"


def test_decompose_command(capsys):
    code, out, _ = run(capsys, "decompose", "E2^2")
    obj = json.loads(out)
    assert code == 0 and obj["line"] == "12" and obj["parts"] == [{"j": 0, "modular": "E4"}]


def test_wz_and_tau(capsys):
    code, out, _ = run(capsys, "wz", "--max-N", "12")
    assert code == 0 and out.strip().endswith("certificate: PASS")
    code, out, _ = run(capsys, "tau", "--max-n", "3")
    assert out.split("\n")[:3] == ["1 1", "2 -24", "3 252"]


@pytest.mark.parametrize("argv", [["expand", "E2^^2"], ["bogus"], ["expand", "E2 + E4"], ["bracket", "--f", "1", "--g", "E4", "--n", "1"], []])
def test_usage_errors_exit_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert err


def test_verify_single(capsys):
    code, out, _ = run(capsys, "verify", "chazy", "--json")
    assert code == 0
    (rep,) = json.loads(out)
    assert rep["name"] == "chazy" and rep["passed"]


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "quasimod", "expand", "E4", "--order", "2", "--format", "list"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0 and proc.stdout.strip() == "1,240,2160"
