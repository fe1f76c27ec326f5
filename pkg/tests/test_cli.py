import json

import pytest

from sl3web import cli
from sl3web.growth import grow
from sl3web.invariant import evaluate
from sl3web.polyring import format_polynomial
from sl3web.verify import CheckResult
from sl3web.growth import kk_labeling
from sl3web.weightpath import format_string
from sl3web.webgraph import format_web, parse_web, webs_equal


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def h_file(tmp_path, h_web):
    path = tmp_path / "h.web"
    path.write_text(format_web(h_web))
    return str(path)


def test_grow_nine_string(capsys, nine_string):
    code, out, _ = run(capsys, "grow", format_string(nine_string))
    assert code == 0
    w = parse_web(out)
    assert w.n == 9
    assert webs_equal(w, grow(nine_string).web)
    labels = [line.split()[2:] for line in out.splitlines() if line.startswith("# l ")]
    expected = grow(nine_string).labels
    assert {int(h): tok for h, tok in labels} == {h: format_string([lab]) for h, lab in expected.items()}


def test_leading_check(capsys, h_file):
    code, out, _ = run(capsys, "leading", "--check", h_file)
    assert code == 0
    assert out == "+1 x[1,1]*y[2,-1]*y[3,1]*x[-1,4]\ncheck: ok\n"


def test_leading_check_mismatch_exits_2(capsys, h_file, monkeypatch):
    real = cli.leading_term_via_kk
    monkeypatch.setattr(cli, "leading_term_via_kk", lambda w: (-real(w)[0], real(w)[1]))
    code, out, _ = run(capsys, "leading", "--check", h_file)
    assert code == 2 and "MISMATCH" in out


def test_enumerate_length_two(capsys):
    code, out, _ = run(capsys, "enumerate", "--max-len", "2")
    assert code == 0
    assert sorted(out.split()) == ["+1,--1", "-1,+-1"]


def test_enumerate_counts(capsys):
    code, out, _ = run(capsys, "enumerate", "--max-len", "5")
    assert len(out.split()) == 2 + 2 + 12 + 30


def test_label_and_trim(capsys, tmp_path, nine_string):
    path = tmp_path / "f.web"
    path.write_text(format_web(grow(nine_string).web))
    code, out, _ = run(capsys, "label", str(path))
    assert code == 0 and out.strip() == format_string(nine_string)
    code, out, _ = run(capsys, "trim", str(path))
    assert code == 0
    trimmed = parse_web(out)
    assert trimmed.n < 9
    assert out.splitlines()[-1].startswith("# string ")


def test_invariant(capsys, h_file, h_web):
    code, out, _ = run(capsys, "invariant", h_file)
    assert code == 0 and out.strip() == format_polynomial(evaluate(h_web))


def test_colorings(capsys, h_file):
    code, out, _ = run(capsys, "colorings", h_file)
    assert code == 0 and len(out.splitlines()) == 12
    code, minimal, _ = run(capsys, "colorings", "--minimal", h_file)
    assert minimal.splitlines() == out.splitlines()[:1]


def test_unclasp(capsys, tmp_path, clasped_web, flat_web):
    path = tmp_path / "s5.web"
    path.write_text(format_web(clasped_web))
    code, out, _ = run(capsys, "unclasp", str(path))
    assert code == 0 and parse_web(out).n == 5


def test_expand(capsys, tmp_path, h_web):
    poly = tmp_path / "f.poly"
    poly.write_text(format_polynomial(evaluate(h_web).scale(-3)))
    out_dir = tmp_path / "webs"
    code, out, _ = run(capsys, "expand", str(poly), "--signature", "BWWB", "--out-dir", str(out_dir))
    assert code == 0
    lines = out.splitlines()
    assert lines[0].startswith("-3 ")
    assert lines[-1] == "check: ok" and lines[-2].startswith("digest: ")
    assert webs_equal(parse_web((out_dir / "web_1.txt").read_text()), h_web)


def test_expand_rejects_non_invariant(capsys, tmp_path):
    poly = tmp_path / "bad.poly"
    poly.write_text("x[1,1]*y[2,0]")
    code, out, err = run(capsys, "expand", str(poly), "--signature", "BW")
    assert code == 1 and err.startswith("error: ")


def test_bad_inputs_exit_1(capsys, tmp_path):
    assert run(capsys, "grow", "+1,+1")[0] == 1
    assert run(capsys, "grow", "+7")[0] == 1
    assert run(capsys, "label", str(tmp_path / "missing.web"))[0] == 1
    broken = tmp_path / "broken.web"
    broken.write_text("web n=2\nb 1 B 1\n")
    code, _, err = run(capsys, "invariant", str(broken))
    assert code == 1 and "error:" in err


def test_verify_small(capsys):
    code, out, _ = run(capsys, "verify", "--max-len", "4")
    assert code == 0
    assert len(out.splitlines()) == 7 and all(line.startswith("PASS") for line in out.splitlines())


def test_verify_failure_exits_2(capsys, monkeypatch):
    monkeypatch.setattr(cli, "run_checks", lambda n, names: [CheckResult(names[0], 1, ["+1,--1"])])
    code, out, _ = run(capsys, "verify", "--max-len", "2", "--checks", "paths")
    assert code == 2
    assert "FAIL paths" in out and "+1,--1" in out


def test_json_output(capsys, h_file):
    code, out, _ = run(capsys, "--json", "leading", "--check", h_file)
    assert code == 0
    data = json.loads(out)
    assert data == {"coefficient": 1, "monomial": "x[1,1]*y[2,-1]*y[3,1]*x[-1,4]", "check": "ok"}
    code, out, _ = run(capsys, "--json", "grow", "+1,--1")
    assert len(json.loads(out)["web"]["boundary"]) == 2


def test_output_is_deterministic(capsys, nine_string):
    first = run(capsys, "grow", format_string(nine_string))[1]
    second = run(capsys, "grow", format_string(nine_string))[1]
    assert first == second
    a = run(capsys, "grow", format_string(nine_string), "--seed", "3")[1]
    b = run(capsys, "grow", format_string(nine_string), "--seed", "3")[1]
    assert a == b


def test_stdin_input(capsys, monkeypatch, h_web):
    import io

    monkeypatch.setattr("sys.stdin", io.StringIO(format_web(h_web)))
    code, out, _ = run(capsys, "label", "-")
    assert code == 0 and out.strip() == format_string(kk_labeling(h_web))
