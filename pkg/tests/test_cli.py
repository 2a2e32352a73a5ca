import json

import pytest

from classgraph.cli import main, to_dot, to_json
from classgraph.groups import parse_descriptor


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_query_t(capsys):
    code, out, _ = run(capsys, "query", "L45+(q=9)", "t")
    d = json.loads(out)
    assert code == 0 and d["t"] == 23 and d["formula"] == 23


def test_query_zeta(capsys):
    code, out, _ = run(capsys, "query", "O-(n=30,q=4)", "zeta")
    d = json.loads(out)
    assert d["t"] == 23
    assert {"t-2", "t-3", "t-5"} == {x for x in d["T_relative"] if x in ("t-1", "t-2", "t-3", "t-4", "t-5", "t-6")}


def test_query_pexp_and_others(capsys):
    assert json.loads(run(capsys, "query", "S(n=28,q=3)", "pexp")[1])["pexp"] == 81
    d = json.loads(run(capsys, "query", "L45+(q=2)", "bigk")[1])
    assert d["j"] == 41
    d = json.loads(run(capsys, "query", "S(n=28,q=3)", "cocliques")[1])
    assert d["greatest"]["size"] == d["formula"]["t"] == 22
    d = json.loads(run(capsys, "query", "L+(n=15,q=2)", "graph")[1])
    assert d["vertices"] and d["nonadjacent"]


def test_bad_descriptor(capsys):
    code, _, err = run(capsys, "query", "L45(q=6)", "t")
    assert code == 2 and "prime power" in err
    code, _, err = run(capsys, "query", "Q7(q=2)", "t")
    assert code == 2 and "grammar" in err


def test_eliminate_examples(capsys):
    code, out, _ = run(capsys, "eliminate", "O-(n=30,q=3)", "O-(n=30,u=2)")
    assert code == 0 and json.loads(out)["pattern"] == "tplneq4"
    code, out, _ = run(capsys, "eliminate", "S(n=29,q=5)", "S(n=30,u=2)")
    assert code == 0 and json.loads(out)["pattern"] == "class-mismatch"
    code, out, _ = run(capsys, "eliminate", "L45+(q=4)", "--scan")
    d = json.loads(out)
    assert code == 0 and d["all_eliminated"] and d["candidates"] == 36


def test_eliminate_out_of_range(capsys):
    code, _, err = run(capsys, "eliminate", "S(n=28,q=3)", "--scan")
    assert code == 2 and "23" in err
    code, _, _ = run(capsys, "eliminate", "L45+(q=4)")
    assert code == 2


def test_verify_zsigmondy(capsys):
    code, out, _ = run(capsys, "verify", "--lemma", "zsigmondy", "--amax", "50", "--imax", "50")
    d = json.loads(out)
    assert code == 0 and d["status"] == "pass"
    assert sorted(map(tuple, d["found"]["exceptions"])) == sorted([(2, 1), (2, 6), (-2, 2), (-2, 3), (3, 1), (-3, 2)])


def test_verify_usage_errors(capsys):
    assert run(capsys, "verify")[0] == 2
    assert run(capsys, "verify", "--lemma", "nosuch")[0] == 2
    assert run(capsys, "verify", "--lemma", "table1", "--families", "Z")[0] == 2
    with pytest.raises(SystemExit):
        main(["verify", "--nmax", "x"])


def test_verify_clamps_floor(capsys):
    code, out, _ = run(capsys, "verify", "--lemma", "table1", "--families", "S", "--qs", "3", "--nmin", "5", "--nmax", "14")
    d = json.loads(out)
    assert code == 0 and d["clamped"] == ["nmin raised from 5 to 13"]


def test_verify_is_deterministic(tmp_path):
    args = ["verify", "--lemma", "table1,adjacency", "--families", "L,O-", "--qs", "2,3", "--nmax", "24", "--no-timing"]
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert main(args + ["-o", str(a)]) == 0
    assert main(args + ["-o", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()
    c = tmp_path / "c.json"
    assert main(args + ["--workers", "2", "-o", str(c)]) == 0
    norm = lambda p: [{k: (sorted(map(json.dumps, v)) if isinstance(v, list) else v) for k, v in json.loads(line).items()
                       if k != "grid"} for line in p.read_text().splitlines()]
    assert norm(a) == norm(c)


def test_verify_config_file(tmp_path, capsys):
    cfg = tmp_path / "grid.conf"
    cfg.write_text("lemma = kspot,klargeset\nworkers = 1\n")
    code, out, _ = run(capsys, "verify", "--config", str(cfg), "--no-timing")
    lines = [json.loads(x) for x in out.splitlines()]
    assert code == 0 and [x["lemma"] for x in lines] == ["kspot", "klargeset"]
    cfg.write_text("nmax = many\nlemma = table1\n")
    assert run(capsys, "verify", "--config", str(cfg))[0] == 2
    assert run(capsys, "verify", "--config", str(tmp_path / "missing.conf"))[0] == 2


def test_export(tmp_path, capsys):
    L = parse_descriptor("S(n=14,q=3)")
    dot = to_dot(L)
    assert dot.startswith('graph "S(n=14,q=3)"') and " -- " in dot
    d = to_json(L)
    n = len(d["vertices"])
    assert len(d["adjacent"]) + len(d["nonadjacent"]) == n * (n - 1) // 2
    out = tmp_path / "g.dot"
    assert main(["export", "S(n=14,q=3)", "-o", str(out)]) == 0
    assert out.read_text().strip() == dot
    code, text, _ = run(capsys, "export", "S(n=14,q=3)", "--format", "json")
    assert code == 0 and json.loads(text) == json.loads(json.dumps(d))
