"""End-to-end CLI behaviour including exit codes."""

import json

import pytest

from nulab import cli, families, gio
from nulab.exact import ColorClasses


def _run(capsys, argv):
    code = cli.main(argv)
    out = capsys.readouterr()
    lines = [json.loads(l) for l in out.out.splitlines() if l.strip().startswith("{")]
    return code, lines, out


def _write_graphs(path, graphs):
    path.write_text("".join(gio.emit_sparse6(g) + "\n" for g in graphs))
    return str(path)


def test_gen_fig1(capsys):
    code = cli.main(["gen", "fig1"])
    out = capsys.readouterr().out.strip()
    assert code == cli.EXIT_OK
    g = gio.parse_sparse6(out)
    assert (g.n, g.m) == (6, 9)


def test_gen_to_file(tmp_path):
    target = tmp_path / "out.s6"
    code = cli.main(["gen", "petersen", "--out", str(target)])
    assert code == cli.EXIT_OK
    g = gio.parse_sparse6(target.read_text().strip())
    assert (g.n, g.m) == (10, 15)


def test_gen_bad_parameter(capsys):
    assert cli.main(["gen", "ring", "--r", "1"]) == cli.EXIT_USAGE
    assert "ring" in capsys.readouterr().err
    assert cli.main(["gen", "no-such-family"]) == cli.EXIT_USAGE
    assert cli.main(["gen", "remark", "--k", "3"]) == cli.EXIT_USAGE


def test_gen_remark_params(capsys):
    code = cli.main(["gen", "remark", "--k", "3", "--l", "5"])
    out = capsys.readouterr().out.strip()
    assert code == cli.EXIT_OK
    g = gio.parse_sparse6(out)
    assert (g.n, g.m) == (15, 15)


def test_solve_single_k(tmp_path, capsys):
    path = _write_graphs(tmp_path / "g.s6", [families.petersen()])
    code, recs, _ = _run(capsys, ["solve", path, "--k", "2"])
    assert code == cli.EXIT_OK
    assert recs[0]["nu"] == "9"
    assert recs[0]["k"] == "2"


def test_solve_all_k(tmp_path, capsys):
    path = _write_graphs(tmp_path / "g.s6", [families.petersen()])
    code, recs, _ = _run(capsys, ["solve", path, "--all-k", "1..4"])
    assert code == cli.EXIT_OK
    rec = recs[0]
    assert (rec["nu1"], rec["nu2"], rec["nu3"], rec["nu4"]) == ("5", "9", "13", "15")


def test_solve_certificate(tmp_path, capsys):
    g = families.fig1_graph()
    path = _write_graphs(tmp_path / "g.s6", [g])
    code, recs, _ = _run(capsys, ["solve", path, "--k", "3", "--certificate"])
    assert code == cli.EXIT_OK
    cert = {int(e): int(c) for e, c in recs[0]["certificate"].items()}
    assert len(cert) == 7
    assert ColorClasses(3, cert).is_proper(g)


def test_solve_reports_malformed_lines(tmp_path, capsys):
    path = tmp_path / "g.s6"
    path.write_text("not-a-graph6-line{}\n")
    code, recs, _ = _run(capsys, ["solve", str(path), "--k", "2"])
    assert code == cli.EXIT_OK
    assert "error" in recs[0]


def test_oracle_command(tmp_path, capsys):
    path = _write_graphs(tmp_path / "g.s6", [families.fig1_graph()])
    code, recs, _ = _run(capsys, ["oracle", path, "--k", "2"])
    assert code == cli.EXIT_OK
    assert recs[0]["nu"] == "5"


def test_oracle_too_large(tmp_path, capsys):
    path = _write_graphs(tmp_path / "g.s6", [families.petersen()])
    code, recs, _ = _run(capsys, ["oracle", path, "--k", "2"])
    assert code == cli.EXIT_OK
    assert "error" in recs[0]


def test_profile_command(tmp_path, capsys):
    path = _write_graphs(tmp_path / "g.s6", [families.petersen()])
    code, recs, _ = _run(capsys, ["profile", path])
    assert code == cli.EXIT_OK
    prof = recs[0]["profile"]
    assert prof["nu3"] == "13"
    assert prof["r3"] == "2"
    assert prof["oG"] == "2"
    assert prof["flags"]["cubic"] is True


def test_verify_clean(tmp_path, capsys):
    path = _write_graphs(tmp_path / "g.s6", [families.petersen(), families.k4()])
    code, recs, _ = _run(capsys, ["verify", path])
    assert code == cli.EXIT_OK
    assert len(recs) == 2
    for rec in recs:
        for rep in rec["rule_reports"]:
            assert not rep["applicable"] or rep["holds"]


def test_verify_rule_selection(tmp_path, capsys):
    path = _write_graphs(tmp_path / "g.s6", [families.petersen()])
    code, recs, _ = _run(capsys, ["verify", path, "--rules", "NO-R1,P2.6.1"])
    assert code == cli.EXIT_OK
    assert {r["rule_id"] for r in recs[0]["rule_reports"]} == {"NO-R1", "P2.6.1"}


def test_verify_corrupted_profile_exits_3(tmp_path, capsys):
    # profile a real graph, then corrupt nu2 downward: theorem-kind rules break
    path = _write_graphs(tmp_path / "g.s6", [families.petersen()])
    _, recs, _ = _run(capsys, ["profile", path])
    prof = recs[0]["profile"]
    prof["nu2"] = str(int(prof["nu2"]) - 1)
    pfile = tmp_path / "profiles.jsonl"
    pfile.write_text(json.dumps({"profile": prof}) + "\n")
    code, _, _ = _run(capsys, ["verify", str(pfile), "--profiles"])
    assert code == cli.EXIT_THEOREM


def test_verify_conjecture_violation_exits_2(tmp_path, capsys):
    # a synthetic bipartite profile violating only the averaged conjecture
    profile = {
        "n": "9",
        "m": "8",
        "nu1": "4",
        "nu2": "5",
        "nu3": "7",
        "flags": {
            "connected": True,
            "cubic": False,
            "bridgeless": False,
            "max_degree": 3,
            "cycle_rank": 0,
            "is_tree": False,
            "is_unicyclic": False,
            "claw_free": False,
            "bipartite": True,
            "nearly_bipartite": False,
            "has_perfect_matching": False,
        },
    }
    pfile = tmp_path / "profiles.jsonl"
    pfile.write_text(json.dumps({"profile": profile}) + "\n")
    code, recs, _ = _run(capsys, ["verify", str(pfile), "--profiles"])
    assert code == cli.EXIT_CONJECTURE
    failing = [
        r
        for r in recs[0]["rule_reports"]
        if r["applicable"] and r["holds"] is False
    ]
    assert {r["rule_id"] for r in failing} == {"C1.2"}


def test_hunt_clean_exit_0(tmp_path, capsys):
    graphs = [families.cycle(6), families.path(6), families.k4()]
    path = _write_graphs(tmp_path / "g.s6", graphs)
    code, recs, _ = _run(capsys, ["hunt", path, "--rule", "C1.2"])
    assert code == cli.EXIT_OK
    header = recs[0]
    assert header["header"] is True
    assert "desk-scale" in header["note"]
    assert header["rules"] == ["C1.2"]


def test_hunt_rejects_theorem_rule(tmp_path, capsys):
    path = _write_graphs(tmp_path / "g.s6", [families.k4()])
    code = cli.main(["hunt", str(path), "--rule", "T2.2.1"])
    capsys.readouterr()
    assert code == cli.EXIT_USAGE


def test_decompose_command(tmp_path, capsys):
    tri = families.triangle_replace(families.petersen())
    path = _write_graphs(tmp_path / "g.s6", [tri, families.petersen()])
    code, recs, _ = _run(capsys, ["decompose", path, "--r3"])
    assert code == cli.EXIT_OK
    assert recs[0]["variant"] == "Reduced"
    assert recs[0]["base_n"] == "10"
    assert recs[0]["r3"] == "2"
    assert "error" in recs[1]  # Petersen has claws


def test_worker_cap_env(monkeypatch, capsys):
    monkeypatch.setenv("NU_LAB_THREADS", "4")
    assert cli.main(["gen", "k4"]) == cli.EXIT_OK
    capsys.readouterr()
    monkeypatch.setenv("NU_LAB_THREADS", "zero")
    with pytest.raises(SystemExit):
        cli.main(["gen", "k4"])
    capsys.readouterr()
    monkeypatch.setenv("NU_LAB_THREADS", "0")
    with pytest.raises(SystemExit):
        cli.main(["gen", "k4"])
    capsys.readouterr()
