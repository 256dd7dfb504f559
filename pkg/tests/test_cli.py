import json
import subprocess
import sys

import pytest

from womlat.cli import main
from womlat.fixtures import fixture
from womlat.latfile import format_lat, parse_lat, parse_msr, to_dot
from womlat.errors import FormatError


@pytest.fixture
def lat_file(tmp_path):
    def write(name_or_text, filename="x.lat"):
        if name_or_text in ("FIG2", "M3A", "M3B", "B4", "C2"):
            fx = fixture(name_or_text)
            text = format_lat(fx.lattice, fx)
        else:
            text = name_or_text
        path = tmp_path / filename
        path.write_text(text, encoding="utf-8")
        return str(path)

    return write


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_check_fig2_orthomodular(capsys, lat_file):
    code, out, _ = run(capsys, "check", lat_file("FIG2"), "--prop", "om")
    assert code == 1
    assert "[x=a,y=f]" in out
    assert "a≤f but f'=c ⋢ g=a'" in out


def test_check_json(capsys, lat_file):
    code, out, _ = run(capsys, "check", lat_file("M3B"), "--prop", "dnl", "--json")
    assert code == 1
    data = json.loads(out)
    assert data["holds"] is False and data["witness"] == {"x": "a"}
    code, out, _ = run(capsys, "check", lat_file("M3B"), "--prop", "wom", "--json")
    assert code == 0 and json.loads(out)["witness"] is None


def test_verify(capsys, lat_file):
    path = lat_file("FIG2")
    for theorem in ("residuation", "converse", "sasaki", "measures", "half-adjunction",
                    "d-properties", "w-properties", "weak-dnl-residuation"):
        code, out, err = run(capsys, "verify", path, "--theorem", theorem)
        assert code == 0, (theorem, out, err)


def test_verify_family_bijection_on_chain(capsys, lat_file):
    code, out, _ = run(capsys, "verify", lat_file("C2"), "--theorem", "family-bijection", "--json")
    assert code == 0
    assert json.loads(out)["info"]["families"] == 2


def test_verify_cap_is_usage_error(capsys, lat_file):
    code, _, err = run(capsys, "verify", lat_file("FIG2"), "--theorem", "family-bijection")
    assert code == 2 and "error:" in err


def test_precondition_is_exit_2(capsys, lat_file):
    code, _, err = run(capsys, "verify", lat_file("M3B"), "--theorem", "residuation")
    assert code == 2
    assert "double negation" in err


def test_holds_and_eval(capsys, lat_file):
    path = lat_file("M3A")
    code, out, _ = run(capsys, "holds", path, "-f", "x \\/ x' = 1")
    assert code == 0 and "holds" in out
    code, out, _ = run(capsys, "holds", path, "-f", "x'' = x")
    assert code == 1 and "[x=a]" in out
    code, out, _ = run(capsys, "eval", path, "-e", "x \\/ x'", "--assign", "x=a")
    assert code == 0 and out.strip() == "1"
    code, out, _ = run(capsys, "eval", lat_file("M3B", "b.lat"), "-e", "(x \\/ y)' \\/ y", "--assign", "x=a,y=0")
    assert out.strip() == "b"


def test_syntax_error_is_exit_2(capsys, lat_file):
    code, _, err = run(capsys, "holds", lat_file("M3A"), "-f", "x + y = x")
    assert code == 2 and "unknown symbol" in err


def test_derive_and_reload(capsys, lat_file, tmp_path):
    path = lat_file("FIG2")
    out_path = tmp_path / "fig2w.lat"
    code, out, _ = run(capsys, "derive", path, "--impl", "w", "--out", str(out_path))
    assert code == 0 and out.startswith("[binary ->]") and "(a,b):g" in out
    code, out, _ = run(capsys, "derive", str(out_path), "--impl", "product", "--out", str(out_path))
    assert out.startswith("[binary *]") and "(a,f):a" in out
    lf = parse_lat(out_path.read_text())
    assert lf.arrow is not None and lf.prod is not None
    code, out, _ = run(capsys, "verify", str(out_path), "--theorem", "converse")
    assert code == 0
    code, out, _ = run(capsys, "holds", str(out_path), "-f", "(x -> y) * x = x /\\ y")
    assert code == 0


def test_search(capsys, lat_file):
    code, out, _ = run(capsys, "search", "--lattice", lat_file("C2"), "--want", "dwom")
    assert code == 0
    assert out.count("# match") == 2
    assert "[unary '] 0:0 1:0" in out and "[unary '] 0:1 1:0" in out
    code, out, _ = run(capsys, "search", "--all-n", "4", "--want", "wom,dnl,-comp")
    assert code == 1 and "no algebra found" in out
    code, out, _ = run(capsys, "search", "--all-n", "3", "--want", "wom", "--limit", "1")
    assert out.count("# match") == 1


def test_measure(capsys, lat_file, tmp_path):
    path = lat_file("M3A")
    msr = tmp_path / "s.msr"
    msr.write_text("0: 0\na: 1/2\nb: 1/2\nc: 1/2\n1: 1\n")
    code, out, _ = run(capsys, "measure", path, "--s", str(msr), "--check", "conditions")
    assert code == 0
    for cond in ("i", "ii", "iii", "iv"):
        assert f"  {cond}: holds" in out
    for check in ("s1", "s2", "proposition"):
        assert run(capsys, "measure", path, "--s", str(msr), "--check", check)[0] == 0
    code, out, _ = run(capsys, "measure", lat_file("FIG2", "f.lat"), "--witness", "filter:a")
    assert code == 0
    assert "a: 1\n" in out and "b: 1/2\n" in out
    assert run(capsys, "measure", path)[0] == 2
    msr.write_text("0: 0\na: 3/2\nb: 1/2\nc: 1/2\n1: 1\n")
    assert run(capsys, "measure", path, "--s", str(msr), "--check", "s1")[0] == 2


def test_dot_and_fixtures(capsys, lat_file):
    code, out, _ = run(capsys, "dot", lat_file("M3A"))
    assert code == 0 and "rankdir=BT" in out and '"0" -> "a";' in out
    code, out, _ = run(capsys, "fixtures", "list")
    assert out.split() == ["M3", "M3A", "M3B", "FIG2", "C2", "C3", "C4", "B4", "B8"]
    code, out, _ = run(capsys, "fixtures", "emit", "FIG2")
    assert parse_lat(out).unary == fixture("FIG2")
    code, out, _ = run(capsys, "fixtures", "emit", "M3")
    assert "[unary" not in out
    assert run(capsys, "fixtures", "emit", "nope")[0] == 2


def test_missing_file_is_exit_2(capsys, tmp_path):
    assert run(capsys, "dot", str(tmp_path / "absent.lat"))[0] == 2


@pytest.mark.parametrize("text,message", [
    ("[covers] 0 1", "no \\[elements\\]"),
    ("junk\n[elements] 0 1", "before the first"),
    ("[elements] 0 1\n[covers] 0", "two labels"),
    ("[elements] 0 1\n[covers] 0 1\n[unary '] 0:1 0:0 1:0", "twice"),
    ("[elements] 0 1\n[covers] 0 1\n[binary ->] (0,0):1", "not total"),
    ("[elements] 0 1\n[covers] 0 1\n[binary ->] (0,0)1", "cannot parse"),
    ("[elements] 0 1\n[elements] 0 1", "duplicate section"),
])
def test_lat_format_errors(text, message):
    with pytest.raises(FormatError, match=message):
        parse_lat(text)


def test_lat_round_trip_and_comments():
    fx = fixture("FIG2")
    text = format_lat(fx.lattice, fx)
    lf = parse_lat("# the ten element example\n" + text.replace("\n", "  # note\n"))
    assert lf.unary == fx
    assert lf.lattice.leq_table == fx.lattice.leq_table
    assert to_dot(lf.lattice).count("->") == 17
    multi = parse_lat("[elements]\n0 a 1\n[covers]\n0 a\na 1\n")
    assert multi.lattice.names == ("0", "a", "1")


def test_msr_errors():
    lat = fixture("M3A").lattice
    with pytest.raises(FormatError):
        parse_msr("0 0\n", lat)
    with pytest.raises(FormatError):
        parse_msr("0: x\n", lat)
    with pytest.raises(FormatError):
        parse_msr("0: 0\n0: 1\n", lat)
    with pytest.raises(FormatError):
        parse_msr("0: 0\n", lat)


def test_module_entry_point(tmp_path):
    proc = subprocess.run([sys.executable, "-m", "womlat", "fixtures", "list"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and "FIG2" in proc.stdout
