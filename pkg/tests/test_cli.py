import json

import pytest

from eisenlat.cli import main
from eisenlat.lattice import standard_lattice
from eisenlat.serialize import (
    format_int_matrix_text,
    lattice_from_dict,
    lattice_from_json,
    lattice_to_dict,
    lattice_to_json,
    parse_int_matrix_text,
)
from eisenlat.errors import ParseError


@pytest.fixture
def a2_gram(tmp_path):
    path = tmp_path / "a2.gram"
    path.write_text("# A2\n2\n-2 1\n1 -2\n")
    return str(path)


@pytest.fixture
def a2_iso(tmp_path):
    path = tmp_path / "a2_iso.mat"
    path.write_text("2\n0 -1\n1 -1\n")
    return str(path)


def test_parse_text_format():
    gram = parse_int_matrix_text("# comment\n2\n0 1\n1 0\n")
    assert gram == [[0, 1], [1, 0]]
    text = format_int_matrix_text(gram, comment="U")
    assert parse_int_matrix_text(text) == gram
    with pytest.raises(ParseError):
        parse_int_matrix_text("junk\n")
    with pytest.raises(ParseError):
        parse_int_matrix_text("2\n1 2 3\n0 0\n")
    with pytest.raises(ParseError) as err:
        parse_int_matrix_text("2\n1 x\n0 0\n")
    assert err.value.line == 2 and err.value.column == 3
    with pytest.raises(ParseError):
        parse_int_matrix_text("2\n1 0\n")  # missing row
    with pytest.raises(ParseError):
        parse_int_matrix_text("")


def test_json_round_trip():
    for name in ("U", "A2", "E6*(3)", "K12"):
        lat = standard_lattice(name)
        again = lattice_from_json(lattice_to_json(lat))
        assert again == lat
        assert again.name == lat.name
    d = lattice_to_dict(standard_lattice("A2"))
    assert d["det"] == 3 and d["signature"] == [0, 2, 0]
    d["gram"] = d["gram"][:-1]
    with pytest.raises(ParseError):
        lattice_from_dict(d)


def test_cli_lattice_info(a2_gram, capsys):
    assert main(["lattice", "info", a2_gram, "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["rank"] == 2 and data["det"] == 3
    assert data["invariant_factors"] == [3]


def test_cli_snf_contract(a2_gram, capsys):
    assert main(["lattice", "snf", a2_gram, "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["D"]["matrix"] == [1, 0, 0, 3]


def test_cli_exit_codes(tmp_path, a2_gram, a2_iso, capsys):
    bad = tmp_path / "bad.gram"
    bad.write_text("not a matrix\n")
    assert main(["lattice", "info", str(bad)]) == 2
    capsys.readouterr()

    odd = tmp_path / "odd.gram"
    odd.write_text("1\n1\n")
    assert main(["lattice", "info", str(odd)]) == 1  # NotEven: domain error
    capsys.readouterr()

    assert main(["lattice", "info", str(tmp_path / "missing.gram")]) == 2
    capsys.readouterr()

    assert main(["isometry", "verify", a2_gram, a2_iso]) == 0
    out = capsys.readouterr().out
    assert "order\t3" in out

    assert main(["classify", "verify-row", "6", "2"]) == 1  # NotInTable
    capsys.readouterr()
    assert main(["fibration", "analyze", "--mults", "3"]) == 1
    capsys.readouterr()


def test_cli_isometry_fixed_and_eisenstein(a2_gram, a2_iso, capsys):
    assert main(["isometry", "fixed", a2_gram, a2_iso, "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["basis"] == []
    assert main(["isometry", "fixed", a2_gram, a2_iso, "--coinvariant", "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert len(data["basis"]) == 2

    assert main(["eisenstein", "hermitian", a2_gram, a2_iso]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["e_rank"] == 1
    assert data["hermitian_gram"] == [[{"a": "-1", "b": "0"}]]

    assert main(["eisenstein", "unimodular", a2_gram, a2_iso]) == 0
    assert capsys.readouterr().out.strip() == "true"


def test_cli_isometry_find(a2_gram, capsys):
    assert main(["isometry", "find", a2_gram, "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["rows"] == 2


def test_cli_classify(capsys):
    assert main(["classify", "table1"]) == 0
    out = capsys.readouterr().out
    assert out.count("\n") == 25

    assert main(["classify", "verify-row", "9", "6"]) == 0
    out = capsys.readouterr().out
    assert out.count("pass") == 7

    assert main(["classify", "table2"]) == 0
    capsys.readouterr()

    assert main(["classify", "table2", "--verify"]) == 0
    out = capsys.readouterr().out
    assert out.count("pass") == 24


def test_cli_fibration(capsys):
    assert main(["fibration", "analyze", "--mults", "5,5,2", "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert (data["n"], data["k"], data["genus"]) == (9, 6, 0)

    assert main(["fibration", "analyze", "--mults", ""]) == 0
    out = capsys.readouterr().out
    assert "genus\t5" in out

    assert main(["fibration", "enumerate"]) == 0
    out = capsys.readouterr().out
    assert out.count("\n") == 21  # header + 20 profiles

    assert main(["fibration", "analyze", "--mults", "2,2,2,2,2,2"]) == 1
    err = capsys.readouterr().err
    assert "DegenerateSection" in err

    assert main(["fibration", "analyze", "--mults", "1,2"]) == 2  # malformed profile
    capsys.readouterr()
    assert main(["fibration", "analyze", "--mults", "x"]) == 2
    capsys.readouterr()


def test_cli_complement(tmp_path, capsys):
    path = tmp_path / "u.gram"
    path.write_text("2\n0 1\n1 0\n")
    assert main(["lattice", "complement", str(path), "--span", "1,0", "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["basis"] == [[1, 0]]

    assert main(["lattice", "complement", str(path), "--span", "1,0;2,0"]) == 1
    capsys.readouterr()
    assert main(["lattice", "complement", str(path), "--span", "1"]) == 2
    capsys.readouterr()


def test_cli_seed_flag(capsys):
    assert main(["--seed", "7", "classify", "table1"]) == 0
    capsys.readouterr()


def test_cli_json_files_round_trip(tmp_path, capsys):
    # JSON lattice and isometry files are accepted wherever text files are
    lat_path = tmp_path / "a2.json"
    lat_path.write_text(lattice_to_json(standard_lattice("A2")))
    assert main(["isometry", "find", str(lat_path), "--json"]) == 0
    found = capsys.readouterr().out
    iso_path = tmp_path / "found.json"
    iso_path.write_text(found)
    assert main(["isometry", "verify", str(lat_path), str(iso_path)]) == 0
    out = capsys.readouterr().out
    assert "valid\ttrue" in out and "order\t3" in out


def test_console_script_matches_golden():
    import shutil
    import subprocess
    from importlib import resources

    exe = shutil.which("eisenlat")
    if exe is None:
        pytest.skip("console script not on PATH")
    out = subprocess.run([exe, "classify", "table1"], capture_output=True, check=True)
    golden = resources.files("eisenlat.data").joinpath("table1_golden.tsv").read_bytes()
    assert out.stdout == golden
