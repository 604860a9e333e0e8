"""Command-line interface tests: output formats, exit codes,
determinism of standard output for fixed flags and seed."""

import pytest

from m0nbar.cli import main
from m0nbar.moduli import cubic_generators, quartic_equations
from m0nbar.poly import moduli_ring, parse_polynomial


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_gen_n6(capsys):
    code, out, _ = run(capsys, "gen", "6")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "# n=6 cubics=5 quartics=0"
    assert len(lines) == 6
    ring = moduli_ring(6)
    assert [parse_polynomial(ring, s) for s in lines[1:]] == cubic_generators(6)


def test_gen_n7_deg4(capsys):
    code, out, _ = run(capsys, "gen", "7", "--deg4")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "# n=7 cubics=15 quartics=6"
    assert len(lines) == 22
    ring = moduli_ring(7)
    parsed = [parse_polynomial(ring, s) for s in lines[1:]]
    assert parsed == cubic_generators(7) + quartic_equations(7)


def test_gen_out_file(capsys, tmp_path):
    target = tmp_path / "eqs.txt"
    code, out, _ = run(capsys, "gen", "5", "--out", str(target))
    assert code == 0
    assert out == ""
    text = target.read_text()
    assert text.startswith("# n=5 cubics=1 quartics=0\n")
    assert text.endswith("\n")


def test_gen_usage_error_below_range(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["gen", "4"])
    assert exc.value.code == 2
    assert "n must be >= 5" in capsys.readouterr().err


def test_verify_usage_error_above_range(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["verify", "8"])
    assert exc.value.code == 2


def test_saturate_n5(capsys):
    code, out, err = run(capsys, "saturate", "5")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "saturate n=5 order=lex"
    assert lines[1] == "basis (1 element):"
    assert lines[2] == "a0*b0*b1 - a0*b1*b2 - a1*b0*b1 + a1*b0*b2"
    assert "mingens by total degree: 3:1" in lines
    assert "codim 1" in lines
    assert "degree 3" in lines
    assert "lex initial ideal square-free: yes" in lines
    assert err.startswith("wall time:")


def test_saturate_n6_grevlex(capsys):
    code, out, _ = run(capsys, "saturate", "6", "--order", "grevlex")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "saturate n=6 order=grevlex"
    assert "mingens by total degree: 3:5, 4:1" in lines
    assert "codim 3" in lines
    assert "degree 15" in lines
    assert "lex initial ideal square-free: yes" in lines


def test_verify_n5_passes(capsys):
    code, out, _ = run(capsys, "verify", "5", "--trials", "3")
    assert code == 0
    assert "Petersen: 10 vertices / 15 edges / 3-regular: pass" in out
    assert "boundary girth=5 (expected 5): pass" in out
    assert out.splitlines()[-1] == "result: 6/6 checks passed"


def test_verify_n6_passes(capsys):
    code, out, _ = run(capsys, "verify", "6", "--trials", "2")
    assert code == 0
    assert "dim J(1,1,2)=9" in out
    assert "dim I(1,1,2)=10" in out
    assert "dim J(2,2,2)=55" in out
    assert "dim I(2,2,2)=55" in out
    assert "f6 in I6: true (expected true): pass" in out
    assert "f6 in J6: false (expected false): pass" in out
    assert "FAIL" not in out


def test_verify_n7_counts(capsys):
    code, out, _ = run(capsys, "verify", "7", "--trials", "2")
    assert code == 0
    assert "cubic count=15 (expected 15): pass" in out
    assert "quartic count=6 (expected 6): pass" in out
    for d in (3, 4, 5):
        assert f"count identity d={d}" in out


def test_verify_stdout_is_deterministic(capsys):
    _, first, _ = run(capsys, "verify", "5", "--trials", "4", "--seed", "9")
    _, second, _ = run(capsys, "verify", "5", "--trials", "4", "--seed", "9")
    assert first == second


def test_verify_exit_code_on_failing_check(capsys, monkeypatch):
    import m0nbar.cli as cli
    monkeypatch.setattr(cli, "generator_count_identity", lambda n, d: (0, 1))
    code = cli.main(["verify", "5", "--trials", "1"])
    out = capsys.readouterr().out
    assert code == 1
    assert "count identity d=3: 0=1: FAIL" in out
    assert out.splitlines()[-1] == "result: 5/6 checks passed"


def test_boundary_n4(capsys):
    code, out, _ = run(capsys, "boundary", "4")
    assert code == 0
    assert out == "d{1,2}:\nd{1,3}:\nd{1,4}:\n3 isolated vertices, 0 edges\n"


def test_boundary_n5(capsys):
    code, out, _ = run(capsys, "boundary", "5")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 11
    assert lines[-1] == "10 vertices, 15 edges, 3-regular"


def test_boundary_n6_summary(capsys):
    code, out, _ = run(capsys, "boundary", "6")
    assert code == 0
    assert out.splitlines()[-1].startswith("25 vertices,")


def test_saturate_n7_reports_progress(capsys):
    code, out, err = run(capsys, "saturate", "7")
    assert code == 0
    lines = out.splitlines()
    assert "mingens by total degree: 3:15, 4:6, 5:1" in lines
    assert "codim 6" in lines
    assert "degree 105" in lines
    assert "lex initial ideal square-free: yes" in lines
    assert "S-pairs:" in err
