import json
import subprocess
import sys

import pytest

from kswitch.cli import main
from kswitch.errors import DuplicateEdgeError, LoopError, MalformedLineError, VertexRangeError
from kswitch.generators import figure2, figure4, path
from kswitch.io import parse_graph, parse_switching, serialize_graph, serialize_switching
from kswitch.switching import SwitchingAssignment

FIG2_ZETA = "7 3\n0 1 0 0\n1 0 0 1\n2 -1 -1 -1\n3 0 1 0\n4 -1 1 1\n5 1 -1 1\n6 1 1 -1\n"


def test_parse_examples():
    assert parse_graph("2 1\n0 1 -") == path(2, -1)
    assert serialize_graph(figure4()) == "4 5\n0 1 +\n0 2 +\n0 3 -\n1 2 -\n1 3 +\n"
    g = parse_graph("# header comment\n\n3 1\n# edge\n2 0 +\n")
    assert g.edges == ((0, 2, 1),)


@pytest.mark.parametrize("text, err, line, col", [
    ("2 1\n0 0 +", LoopError, 2, 1),
    ("2 1\n0 2 +", VertexRangeError, 2, 3),
    ("3 2\n0 1 +\n1 0 -", DuplicateEdgeError, 3, 1),
    ("2 1\n0 1 *", MalformedLineError, 2, 5),
    ("2 1\n0 1", MalformedLineError, 2, 1),
    ("2 2\n0 1 +", MalformedLineError, 1, 1),
    ("", MalformedLineError, 1, 1),
    ("x y\n", MalformedLineError, 1, 1),
])
def test_graph_errors(text, err, line, col):
    with pytest.raises(err) as exc:
        parse_graph(text)
    assert (exc.value.line, exc.value.column) == (line, col)


def test_error_kinds_distinct():
    kinds = {e.kind for e in (MalformedLineError, VertexRangeError, DuplicateEdgeError, LoopError)}
    assert len(kinds) == 4


def test_switching_format():
    z = parse_switching(FIG2_ZETA)
    assert z.dimension == 3 and z[2] == (-1, -1, -1)
    assert serialize_switching(z) == FIG2_ZETA
    # rows may come in any order
    assert parse_switching("2 1\n1 -1\n0 0\n").values == ((0,), (-1,))
    for bad in ("2 1\n0 1\n", "2 1\n0 1\n0 1\n", "1 2\n0 1\n", "1 1\n0 2\n", "1 0\n"):
        with pytest.raises(MalformedLineError):
            parse_switching(bad)
    with pytest.raises(VertexRangeError):
        parse_switching("1 1\n3 1\n")


def write(tmp_path, name, text):
    p = tmp_path / name
    p.write_text(text)
    return str(p)


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_cli_verify(tmp_path, capsys):
    g = write(tmp_path, "fig2.sg", serialize_graph(figure2()))
    z = write(tmp_path, "fig2.sw", FIG2_ZETA)
    assert run(["verify", g, z, "--injective"], capsys)[:2] == (0, "pass\n")
    bad = write(tmp_path, "bad.sw", serialize_switching(SwitchingAssignment.constant(7, (1, 1))))
    code, out, _ = run(["verify", g, bad, "--injective"], capsys)
    assert code == 1 and out.startswith("fail\n")


def test_cli_bdim(tmp_path, capsys):
    g = write(tmp_path, "c3.sg", "3 3\n0 1 +\n1 2 +\n0 2 -\n")
    code, out, _ = run(["bdim", g], capsys)
    assert code == 0 and out.startswith("# bdim = 3\n")
    body = "".join(line + "\n" for line in out.splitlines() if not line.startswith("#"))
    assert parse_switching(body).dimension == 3
    code, out, _ = run(["bdim", g, "--json"], capsys)
    d = json.loads(out)
    assert d["kind"] == "bdim" and d["value"] == 3
    assert {"witness", "bounds", "stats"} <= set(d)


def test_cli_errors(tmp_path, capsys):
    loop = write(tmp_path, "loop.sg", "2 1\n0 0 +\n")
    code, _, err = run(["bdim", loop], capsys)
    assert code == 2 and "line 2" in err
    assert run(["bdim", str(tmp_path / "missing.sg")], capsys)[0] == 2
    k5 = write(tmp_path, "k5.sg", serialize_graph(parse_graph(
        "5 10\n" + "".join(f"{u} {v} -\n" for u in range(5) for v in range(u + 1, 5)))))
    code, _, err = run(["bdim", k5, "--max-k", "3"], capsys)
    assert code == 3 and "[5, 5]" in err
    assert run(["gen", "nosuch"], capsys)[0] == 2


def test_cli_mu(tmp_path, capsys):
    g = write(tmp_path, "fig4.sg", serialize_graph(figure4()))
    code, out, _ = run(["mu", g], capsys)
    assert code == 0
    assert "#  1  1  1  0  0" in out
    z = parse_switching(out)
    assert z.values[0] == (1, 1, 1, 0, 0)
    code, out, _ = run(["mu", write(tmp_path, "k2.sg", "2 1\n0 1 +\n"), "--injective"], capsys)
    assert parse_switching(out).values == ((1, 1), (1, 0))


def test_cli_nip(tmp_path, capsys):
    code, out, _ = run(["nu", "3"], capsys)
    assert code == 0 and out.startswith("nu(3) = 4\n")
    assert out.count("\n  ") == 4
    code, out, _ = run(["nubar", "5", "--json"], capsys)
    assert json.loads(out) == {"kind": "nubar", "n": 5, "value": 5}
    cache = str(tmp_path / "c.txt")
    assert run(["lambda", "3", "--cache", cache], capsys)[0] == 0
    assert "lambda 3 5" in open(cache).read()
    assert run(["nubar", "9", "--k-max", "4"], capsys)[0] == 3


def test_cli_gen_balance(capsys):
    code, out, _ = run(["gen", "cycle", "4", "1"], capsys)
    assert out == "4 4\n0 1 -\n0 3 +\n1 2 +\n2 3 +\n"
    code, out, _ = run(["gen", "figure2"], capsys)
    assert parse_graph(out) == figure2()


def test_cli_balance(tmp_path, capsys):
    g = write(tmp_path, "c4.sg", "4 4\n0 1 -\n1 2 +\n2 3 +\n0 3 +\n")
    assert run(["balance", g], capsys)[1] == "unbalanced\nnegative cycle: 0 1 2 3\n"
    g = write(tmp_path, "p.sg", "3 2\n0 1 -\n1 2 -\n")
    code, out, _ = run(["balance", g, "--json"], capsys)
    assert json.loads(out)["balanced"] is True


def test_console_script_entry(tmp_path):
    g = write(tmp_path, "c3.sg", "3 3\n0 1 -\n1 2 -\n0 2 -\n")
    res = subprocess.run([sys.executable, "-m", "kswitch", "sbdim", g],
                         capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout.startswith("# sbdim = 3")
