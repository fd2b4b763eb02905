import json
import subprocess
import sys

import pytest

from fanocone.cli import main


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out.strip(), out.err


@pytest.mark.parametrize(
    "argv, expected",
    [
        (["betti", "OG(2,8)", "--codim", "2"], "3"),
        (["chern", "G(2,5):(1,1)", "--pair=-s2+2s11"], "-1/2"),
        (["chern", "G(2,6):(1,1)", "--pair=-s4+s22"], "-1"),
        (["betti", "G(2,5)", "--all"], "1 1 2 2 2 1 1"),
        (["betti", "G(2,5)"], "1 1 2 2 2 1 1"),
        (["betti", "SG(3,6)", "--codim", "2"], "1"),
        (["product", "G(2,5)", "s2", "s11"], "s31"),
        (["product", "G(2,5)", "s1", "s1"], "s2+s11"),
        (["intersect", "G(2,5)", "s2", "s2", "--ci", "1,1"], "2"),
        (["intersect", "G(2,6)", "s4", "s11", "--ci", "1,1"], "0"),
        (["chern", "G(2,5)"], "ch1 = 5s1\nch2 = 3/2s2+1/2s11"),
        (["chern", "P5:(2,2)"], "ch1 = 2H\nch2 = -1H^2"),
        (["weyl", "A", "4", "--cross", "2", "poincare"], "1 1 2 2 2 1 1"),
        (["weyl", "A", "4", "--theta", "1,3,4", "poincare"], "1 1 2 2 2 1 1"),
        (["weyl", "G", "2", "--theta", "1", "dim"], "5"),
        (["weyl", "B", "3", "--theta", "none", "dim"], "9"),
        (["weyl", "D", "5", "--cross", "5", "duality-check"], "true (16 elements)"),
    ],
)
def test_outputs(argv, expected, capsys):
    code, out, _ = run(argv, capsys)
    assert code == 0
    assert out == expected


def test_hodge_text(capsys):
    code, out, _ = run(["hodge", "b4-x11"], capsys)
    assert code == 0
    assert out.splitlines()[-1] == "b4 = 2"


def test_hodge_table_from_env(tmp_path, monkeypatch, capsys):
    from fanocone.hodge import ChiTable

    table = ChiTable.default()
    lines = [f"{k[0]} {k[1]} {(-2 if k == ('1', 0) else v)}" for k, v in table.values.items()]
    path = tmp_path / "chi.txt"
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    monkeypatch.setenv("FANOCONE_CHI_TABLE", str(path))
    code, out, _ = run(["hodge", "b4-x11"], capsys)
    assert code == 0 and "b4 = 4" in out


def test_hodge_inconsistent_table_is_a_domain_error(tmp_path, capsys):
    path = tmp_path / "chi.txt"
    path.write_text("1 0 5\n", encoding="utf-8")
    code, _, err = run(["hodge", "b4-x11", "--table", str(path)], capsys)
    assert code == 3 and "missing" in err.lower()


def test_json_schema(capsys):
    code, out, _ = run(["chern", "G(2,5):(1,1)", "--pair=-s2+2s11", "--format", "json"], capsys)
    doc = json.loads(out)
    assert code == 0
    assert doc["schema"] == 1
    assert doc["result"]["ch2.S"] == "-1/2"
    assert doc["citations"]


@pytest.mark.parametrize("which", ["grassmann", "og", "sg", "high-index"])
def test_classify_json_records_have_citations(which, capsys):
    code, out, _ = run(["classify", which, "--format", "json"], capsys)
    doc = json.loads(out)
    assert code == 0 and doc["citations"]
    for rec in doc["result"]["records"]:
        assert rec["citations"]
        assert rec["evidence"] is None or isinstance(rec["evidence"], str)


def test_csv(capsys):
    code, out, _ = run(["classify", "sg", "--format", "csv"], capsys)
    lines = out.splitlines()
    assert code == 0
    assert lines[0] == "space,type,verdict,evidence,notes"
    assert lines[1].startswith('"SG(3,6)","(1,1)",not-weak-2-Fano')


@pytest.mark.parametrize(
    "argv, code",
    [
        (["product", "G(2,5)", "s2+x"], 2),
        (["betti", "Gr(2,5)"], 2),
        (["nonsense"], 2),
        (["weyl", "A", "3", "poincare"], 2),
        (["intersect", "G(2,5)", "s2", "--ci", "1,1"], 3),
        (["betti", "G(1,5)"], 3),
        (["chern", "OG(2,7)", "--degree", "2"], 3),
        (["weyl", "E", "6", "--cross", "1", "dim"], 3),
        (["product", "OG(2,7)", "s1"], 3),
    ],
)
def test_exit_codes(argv, code, capsys):
    assert main(argv) == code


def test_syntax_error_names_the_token(capsys):
    _, _, err = run(["product", "G(2,5)", "s2+x"], capsys)
    assert "'+x'" in err


def test_deterministic(capsys):
    outs = []
    for _ in range(2):
        main(["classify", "high-index", "--format", "json"])
        outs.append(capsys.readouterr().out)
    assert outs[0] == outs[1]


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "fanocone", "betti", "OG(2,8)", "--codim", "2"], capture_output=True, text=True
    )
    assert proc.returncode == 0 and proc.stdout.strip() == "3"
