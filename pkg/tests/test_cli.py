import json

from equicurve.cli import run


def test_embed_reference_invocation():
    code, text = run(["embed", "--lambda", "[1:1],[-1:1]",
                      "--gens", "[[-1,0],[0,1]]"])
    assert code == 0
    assert "x^2" in text or "x^4" in text
    assert "certificates" in text


def test_embed_without_gens_small_set_uses_trivial_group():
    code, text = run(["embed", "--lambda", "[1:1],[-1:1]"])
    assert code == 0
    assert "Cyclic(1)" in text


def test_embed_full_stabilizer_default():
    code, text = run(["embed", "--lambda", "[0:1],[1:1],[-1:1],[1:0]"])
    assert code == 0
    assert "Dihedral" in text


def test_plane_extend_obstructed_reference():
    code, text = run(["plane-extend", "--lambda", "[0:1],[1:1],[1:0]",
                      "--g", "[[0,1],[-1,1]]"])
    assert code == 0
    assert "verdict: Obstructed" in text


def test_plane_extend_extendable():
    code, text = run(["plane-extend", "--lambda", "[0:1],[1:0]",
                      "--g", "[[2,0],[0,1]]"])
    assert code == 0
    assert "verdict: Extendable" in text


def test_parse_error_exit_2():
    code, text = run(["embed", "--lambda", "nonsense"])
    assert code == 2
    assert "parse error" in text


def test_construction_error_exit_3():
    code, text = run(["aut", "--lambda", "[0:1],[1:1]"])
    assert code == 3
    assert "construction error" in text


def test_verify_extension_pass_and_fail():
    args = ["verify-extension",
            "--F", "X; Y; Z",
            "--tau", "x; 1/(x^2 - x); 0",
            "--phi", "[[1,0],[0,1]]"]
    code, _ = run(args)
    assert code == 0
    args[2] = "X + 1; Y; Z"
    code, text = run(args)
    assert code == 1
    assert "FAIL" in text


def test_aut_command():
    code, text = run(["aut", "--lambda", "[0:1],[1:1],[1:0]"])
    assert code == 0
    assert "order: 6" in text


def test_delta_command():
    code, text = run(["delta", "--lambda", "[1:1],[-1:1]",
                      "--gens", "[[-1,0],[0,1]]"])
    assert code == 0
    assert "map:" in text


def test_preset_command_and_multiplicity_flag():
    code, _ = run(["preset", "--kind", "tetrahedral", "--pairs", "(1, 0)"])
    assert code == 3
    code, text = run(["preset", "--kind", "tetrahedral", "--pairs", "(1, 0)",
                      "--allow-multiplicity"])
    assert code == 0
    assert "x^5*y - x*y^5" in text


def test_planar_normalize_command():
    code, text = run(["planar-normalize", "--P", "x", "--Q", "1/x",
                      "--R", "x + 1/x"])
    assert code == 0
    assert "chain" in text
    code, text = run(["planar-normalize", "--P", "x", "--Q", "1/x",
                      "--R", "0"])
    assert code == 3


def test_cor25_command():
    code, text = run(["cor25", "--k", "2", "--a", "1, 2"])
    assert code == 0
    assert "points:" in text


def test_json_mirrors_text():
    args = ["embed", "--lambda", "[1:1],[-1:1]", "--gens", "[[-1,0],[0,1]]"]
    code_t, text = run(args + ["--format", "text", "--certificate"])
    code_j, blob = run(args + ["--format", "json"])
    assert code_t == code_j == 0
    data = json.loads(blob)
    assert data["command"] == "embed"
    assert data["exit"] == 0
    for comp in data["components"].values():
        assert comp.split(" / ")[0].strip("()") in text
    clauses = [cl for c in data["certificates"] for cl in c["clauses"]]
    assert clauses and all(cl["status"] == "PASS" for cl in clauses)


def test_byte_identical_reports():
    jobs = [
        ["embed", "--lambda", "[1:1],[-1:1]", "--gens", "[[-1,0],[0,1]]",
         "--certificate"],
        ["aut", "--lambda", "[0:1],[1:1],[1:0]"],
        ["plane-extend", "--lambda", "[0:1],[1:1],[1:0]",
         "--g", "[[0,1],[-1,1]]"],
        ["cor25", "--k", "2", "--a", "1, 5", "--format", "json"],
        ["preset", "--kind", "dihedral", "--n", "2", "--pairs", "(1, 3)",
         "--format", "json"],
    ]
    for job in jobs:
        out1 = run(job)
        out2 = run(job)
        assert out1 == out2


def test_exit_statuses_documented():
    # 0 = pass, 1 = certificate failure, 2 = parse, 3 = construction
    assert run(["cor25", "--k", "1", "--a", "1"])[0] == 0
    assert run(["cor25", "--k", "2", "--a", "1, cyc(3;0,1)"])[0] == 3
    assert run(["cor25", "--k", "2", "--a", "1, ]["])[0] == 2


def test_conductor_cap_flag():
    code, text = run(["aut", "--lambda", "[cyc(8;0,1):1],[1:1],[0:1],[1:0]",
                      "--conductor-cap", "2"])
    assert code == 3
    assert "conductor" in text
    code, _ = run(["aut", "--lambda", "[cyc(8;0,1):1],[1:1],[0:1],[1:0]"])
    assert code == 0
