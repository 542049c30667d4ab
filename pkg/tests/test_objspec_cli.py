import json

import pytest
from hypothesis import given, settings, strategies as st

from hallq import cli
from hallq.derived import DObj
from hallq.errors import NotInCatalogue, ParseError
from hallq.hallengine.checks import CheckReport
from hallq.objspec import format_objspec, parse_objspec
from hallq.quiverrep import catalogue, parse_quiver

PRESETS = {name: parse_quiver(name) for name in ("A2:1>2", "A3:1>2,2>3", "C1", "C2", "K", "A~21")}
SHIFTED_SIMPLE = ["--quiver", "A2:1>2", "--X", "I[1,1]@1", "--Y", "I[1,1]@0", "--L", "0"]


# -- ObjSpec ---------------------------------------------------------------------

@st.composite
def specs(draw):
    name = draw(st.sampled_from(sorted(PRESETS)))
    Q = PRESETS[name]
    labels = catalogue(Q, 3)
    terms = draw(st.lists(st.tuples(st.integers(1, 3), st.sampled_from(labels), st.integers(-3, 3)),
                          min_size=0, max_size=4))
    if not terms:
        return Q, "0", []
    parts = [(f"{m}*" if m > 1 else "") + f"{lab}@{s}" for m, lab, s in terms]
    sep = draw(st.sampled_from(["+", " + ", "  +"]))
    return Q, sep.join(parts), [(lab, s) for m, lab, s in terms for _ in range(m)]


@settings(max_examples=1000, deadline=None)
@given(specs())
def test_objspec_round_trip(case):
    Q, text, items = case
    X = parse_objspec(Q, text)
    assert X == DObj.make(Q, items)
    assert parse_objspec(Q, format_objspec(X)) == X
    assert format_objspec(parse_objspec(Q, format_objspec(X))) == format_objspec(X)


def test_objspec_examples():
    A2 = PRESETS["A2:1>2"]
    X = parse_objspec(A2, " I[1,2]@0+2*I[1,1]@1 ")
    assert str(X) == "I[1,2]@0 + 2*I[1,1]@1"
    assert parse_objspec(A2, "0").is_zero()
    assert parse_objspec(PRESETS["C2"], "C(2,5)@-1").shifts() == [-1]
    assert parse_objspec(PRESETS["A~21"], "T2a(1)@0").component(0) == ["T2a(1)"]


@pytest.mark.parametrize("text", ["", "I[1,1]", "I[1,1]@", "0*I[1,1]@0", "I[1,3]@0", "I[1,1]@x",
                                  "I[1,1]@0 +", "+"])
def test_objspec_errors(text):
    with pytest.raises(ParseError):
        parse_objspec(PRESETS["A2:1>2"], text)


# -- CLI -------------------------------------------------------------------------

def run(capsys, argv):
    code = cli.main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_catalogue_examples(capsys):
    code, out, _ = run(capsys, ["catalogue", "--quiver", "A2:1>2"])
    assert code == 0 and "COUNT: 3" in out
    code, out, _ = run(capsys, ["catalogue", "--quiver", "K", "--dim-bound", "3"])
    for lab in ("P0", "P1", "I0", "I1", "R0(1)", "R1(1)", "Rinf(1)"):
        assert f"LABEL: {lab} " in out
    code, out, _ = run(capsys, ["catalogue", "--quiver", "C1", "--dim-bound", "2"])
    labels = [line.split()[1] for line in out.splitlines() if line.startswith("LABEL")]
    assert labels == ["C(1,1)", "C(1,2)"]
    code, _, err = run(capsys, ["catalogue", "--quiver", "Z9"])
    assert code == 2 and err.startswith("ERROR")


def test_hall_examples(capsys):
    code, out, _ = run(capsys, ["hall", *SHIFTED_SIMPLE, "--q", "3"])
    assert code == 0 and out.splitlines()[-1] == "F = 1/2" and "CROSS_CHECK: yes" in out
    code, out, _ = run(capsys, ["hall", "--quiver", "A2:1>2", "--X", "I[1,1]@0", "--Y", "0",
                                "--L", "I[1,1]@0", "--q", "5"])
    assert code == 0 and out.splitlines()[-1] == "F = 1"
    code, out, _ = run(capsys, ["hall", "--quiver", "A2:1>2", "--X", "I[1,1]@0", "--Y", "I[2,2]@0",
                                "--L", "I[1,2]@0", "--q", "2"])
    assert code == 0 and out.splitlines()[-1] == "F = 1"
    assert "COUNT_A: 1" in out and "COUNT_B: 1" in out


def test_hall_exit_codes(capsys):
    code, out, err = run(capsys, ["hall", "--quiver", "A2:1>2", "--X", "I[1,9]@0", "--Y", "0",
                                  "--L", "0", "--q", "2"])
    assert code == 2 and out == ""
    code, _, _ = run(capsys, ["hall", *SHIFTED_SIMPLE, "--q", "6"])
    assert code == 2
    argv = ["hall", "--quiver", "A2:1>2", "--X", "3*I[1,1]@0", "--Y", "3*I[1,1]@0",
            "--L", "3*I[1,1]@0 + I[1,2]@0", "--q", "3", "--budget", "100"]
    code, out, err = run(capsys, argv)
    assert code == 3 and out == "" and "COST: 19683" in err


def test_outside_catalogue_maps_to_exit_4(capsys, monkeypatch):
    import hallq.hallengine.hall as hall

    def boom(*args, **kw):
        raise NotInCatalogue("regular summand at a parameter outside 0, 1, inf")

    monkeypatch.setattr(hall, "derived_hall", boom)
    code, out, err = run(capsys, ["hall", *SHIFTED_SIMPLE, "--q", "3"])
    assert code == 4 and out == "" and "outside catalogue" in err


def test_budget_from_environment(capsys, monkeypatch):
    argv = ["hall", "--quiver", "A2:1>2", "--X", "3*I[1,1]@0", "--Y", "3*I[1,1]@0",
            "--L", "3*I[1,1]@0 + I[1,2]@0", "--q", "2"]
    monkeypatch.setenv("HALLQ_BUDGET", "100")
    assert run(capsys, argv)[0] == 3
    monkeypatch.setenv("HALLQ_BUDGET", "1e4")
    assert run(capsys, argv)[0] == 0
    assert run(capsys, argv + ["--budget", "10"])[0] == 3


def test_fit_examples(capsys):
    code, out, _ = run(capsys, ["fit", *SHIFTED_SIMPLE])
    assert code == 0 and out.splitlines()[-1] == "(1)/(T - 1)  VALIDATED"
    assert "RESIDUAL: q=13 0" in out
    code, out, _ = run(capsys, ["fit", "--quiver", "A2:1>2", "--X", "I[1,2]@1", "--Y", "0",
                                "--L", "I[1,2]@1"])
    assert code == 0 and out.splitlines()[-1] == "(1)/(1)  VALIDATED"
    code, out, _ = run(capsys, ["fit", "--quiver", "C1", "--X", "C(1,1)@0", "--Y", "C(1,1)@0",
                                "--L", "2*C(1,1)@0"])
    assert code == 0 and out.splitlines()[-1] == "(T + 1)/(1)  VALIDATED"


def test_fit_exit_codes(capsys):
    code, out, _ = run(capsys, ["fit", *SHIFTED_SIMPLE, "--deg-bound", "0"])
    assert code == 5 and out.splitlines()[-1] == "NOFIT"
    code, _, _ = run(capsys, ["fit", *SHIFTED_SIMPLE, "--fit-primes", "2,3", "--holdout", "3"])
    assert code == 2


def test_check_examples(capsys):
    code, out, _ = run(capsys, ["check", "--suite", "rotation", "--quiver", "A2:1>2", "--q", "2,3",
                                "--count", "20"])
    assert code == 0 and out.splitlines()[-1] == "PASS" and "FAILURES: 0" in out
    code, out, _ = run(capsys, ["check", "--suite", "associativity", "--quiver", "A3:1>2,2>3",
                                "--q", "2", "--count", "10"])
    assert code == 0 and out.splitlines()[-1] == "PASS"
    code, _, err = run(capsys, ["check", "--suite", "nonsense", "--quiver", "A2:1>2"])
    assert code == 2 and "unknown suite" in err


def test_failed_check_maps_to_exit_6(capsys, monkeypatch):
    import hallq.hallengine.suites as suites

    def failing(name, Q, *args, **kw):
        rep = CheckReport(name)
        rep.record(False, "q=2 planted", {"lhs": 1, "rhs": 2})
        return rep

    monkeypatch.setattr(suites, "run_suite", failing)
    code, out, _ = run(capsys, ["check", "--suite", "split", "--quiver", "A2:1>2"])
    assert code == 6 and out.splitlines()[-1] == "FAIL"
    assert 'WITNESS: {"instance": "q=2 planted", "lhs": 1, "rhs": 2}' in out


def test_records_mode(capsys):
    code, out, _ = run(capsys, ["--records", "hall", *SHIFTED_SIMPLE, "--q", "3"])
    rec = json.loads(out)
    assert code == 0 and rec["f"] == "1/2" and rec["route_a"] == rec["route_b"] == "1/2"
    code, out, _ = run(capsys, ["--records", "fit", *SHIFTED_SIMPLE])
    rec = json.loads(out)
    assert rec["fit"] == "(1)/(T - 1)" and rec["validated"] is True


def test_output_is_deterministic(capsys):
    argv = ["check", "--suite", "routes", "--quiver", "K", "--q", "2", "--seed", "7", "--count", "5"]
    first = run(capsys, argv)
    second = run(capsys, argv)
    assert first == second and first[0] == 0
