import json
import subprocess
import sys

import pytest

from necksplit import cli
from necksplit.errors import InternalInconsistency
from necksplit.generator import random_necklace
from necksplit.necklace import dumps


@pytest.fixture
def write(tmp_path):
    def _write(name, text):
        path = tmp_path / name
        path.write_text(text)
        return str(path)

    return _write


@pytest.fixture
def aba(write):
    return write("aba.json", '{"colors": {"a": [1, 2, 7], "b": [3, 4, 5]}}')


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_solve(capsys, aba):
    code, out, err = run(capsys, "solve", aba)
    doc = json.loads(out)
    assert code == 0
    assert doc["splits"] == [{"color": "a", "coordinate": 1}, {"color": "b", "coordinate": 4}]
    assert doc["balance"]["valid"] is True
    assert doc["diagnostics"]["promise"] == "unchecked"
    assert "balanced: True" in err


def test_solve_output_is_byte_stable(capsys, aba):
    assert run(capsys, "-q", "solve", aba)[1] == run(capsys, "-q", "solve", aba)[1]


def test_solve_certificate(capsys, write):
    path = write("stuck.txt", "abcdefgh" * 3)
    code, out, _ = run(capsys, "solve", path)
    assert code == 2
    assert json.loads(out)["reason"] == "reduction-stuck"


def test_solve_then_verify(capsys, write, aba):
    _, out, _ = run(capsys, "-q", "solve", aba)
    splits = write("splits.json", out)
    code, out, _ = run(capsys, "verify", aba, "--splits", splits)
    assert code == 0 and json.loads(out)["valid"] is True


def test_verify_unbalanced(capsys, write, aba):
    splits = write("bad.json", json.dumps({"splits": [{"color": "a", "coordinate": 2}, {"color": "b", "coordinate": 4}]}))
    code, out, err = run(capsys, "verify", aba, "--splits", splits)
    assert code == 2 and json.loads(out)["valid"] is False and "NOT" in err


def test_verify_malformed(capsys, write, aba):
    splits = write("bad.json", json.dumps({"splits": [{"color": "a", "coordinate": 5}]}))
    assert run(capsys, "verify", aba, "--splits", splits)[0] == 1


def test_sep(capsys, write):
    path = write("abca.json", '{"colors": {"a": [1, 2, 9], "b": [3, 4, 5], "c": [6, 7, 8]}}')
    code, out, _ = run(capsys, "sep", path)
    assert code == 0
    assert json.loads(out) == {"sep": 2, "witness": ["a"], "n": 3, "method": "definition"}


def test_sep_falls_back_to_walk_graph(capsys, write):
    path = write("big.json", dumps(random_necklace(18, 3, 0)))
    code, out, _ = run(capsys, "sep", path)
    assert code == 0 and json.loads(out)["method"] == "walk-graph max-cut"


def test_check_sep(capsys, write):
    path = write("abc.txt", "abcabcabc")
    code, out, err = run(capsys, "check-sep", path)
    doc = json.loads(out)
    assert code == 2
    assert doc["decision"] is False and doc["fired_check"] == "multiplicity"
    assert "multiplicity" in err


def test_check_sep_literal_rule(capsys, write):
    path = write("x.txt", "xuuvuy")
    assert run(capsys, "check-sep", path)[0] == 0
    code, out, _ = run(capsys, "check-sep", path, "--interval-rule", "literal")
    assert code == 2 and json.loads(out)["fired_check"] == "interval-count"


def test_maxcut_limit_env(capsys, write, monkeypatch):
    path = write("r.json", dumps(random_necklace(12, 3, 0)))
    assert run(capsys, "check-sep", path, "--ell", "3")[0] == 2
    monkeypatch.setenv("NECKSPLIT_MAXCUT_LIMIT", "1")
    code, _, err = run(capsys, "check-sep", path, "--ell", "3")
    assert code == 3 and "error" in err


def test_oracle(capsys, aba):
    code, out, _ = run(capsys, "oracle", aba)
    assert code == 0
    assert json.loads(out) == {"count": 1, "solutions": [[{"color": "a", "coordinate": 1}, {"color": "b", "coordinate": 4}]]}


def test_oracle_too_large(capsys, write):
    path = write("big.json", json.dumps({"colors": {c: list(range(20 * i, 20 * i + 11)) for i, c in enumerate("abcdef")}}))
    assert run(capsys, "oracle", path)[0] == 3


def test_gen(capsys):
    code, out, _ = run(capsys, "gen", "--colors", "5", "--max-points", "3", "--seed", "7")
    assert code == 0
    assert out == run(capsys, "gen", "--colors", "5", "--max-points", "3", "--seed", "7")[1]
    assert len(json.loads(out)["colors"]) == 5


def test_gen_separable_budget(capsys):
    assert run(capsys, "gen", "--colors", "6", "--max-points", "3", "--seed", "1", "--ell", "1")[0] == 0
    assert run(capsys, "gen", "--colors", "6", "--max-points", "3", "--seed", "1", "--ell", "1", "--budget", "0")[0] == 2


def test_gen_bad_parameters(capsys):
    assert run(capsys, "gen", "--colors", "0", "--max-points", "3", "--seed", "1")[0] == 1


def test_graph(capsys, write):
    path = write("abca.txt", "abcaa")
    code, out, _ = run(capsys, "-q", "graph", path, "--dot")
    assert code == 0
    assert out == 'graph walk {\n  "a";\n  "b";\n  "c";\n  "a" -- "b";\n  "a" -- "c";\n  "b" -- "c";\n}\n'
    code, out, _ = run(capsys, "graph", path)
    assert code == 0 and json.loads(out)["vertices"] == ["a", "b", "c"]


@pytest.mark.parametrize("text", ["aba", "{broken", '{"colors": {"a": [1], "b": [1]}}'])
def test_malformed_inputs_exit_1(capsys, write, text):
    code, out, err = run(capsys, "solve", write("bad", text))
    assert code == 1 and out == "" and err.startswith("error:")


def test_missing_file(capsys, tmp_path):
    assert run(capsys, "solve", str(tmp_path / "nope.json"))[0] == 1


def test_internal_inconsistency_exit_4(capsys, aba, monkeypatch):
    def broken(*_):
        raise InternalInconsistency("lift failed")

    monkeypatch.setattr(cli, "solve", broken)
    code, _, err = run(capsys, "solve", aba)
    assert code == 4 and "lift failed" in err


def test_stdin_and_module_entry(aba):
    proc = subprocess.run(
        [sys.executable, "-m", "necksplit", "-q", "solve", "-"],
        input=open(aba).read(),
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0 and proc.stderr == ""
    assert json.loads(proc.stdout)["balance"]["valid"] is True
