import json

from lamrho import serialize
from lamrho.cli import main
from lamrho import Z2, builtin_system, product_table


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_product_prints_the_six_by_six(capsys):
    code, out, _ = run(capsys, "product", "--base", "flipflop_system", "--h", "z2")
    assert code == 0
    assert "1:01" in out
    lines = [l for l in out.splitlines() if l.strip()]
    assert len(lines) == 7  # header plus six rows


def test_product_from_files(capsys, tmp_path):
    sys_path = tmp_path / "flip.json"
    serialize.dump_json(
        serialize.system_to_dict(builtin_system("flip_flop")), str(sys_path)
    )
    h_path = tmp_path / "z2.json"
    serialize.dump_json(serialize.semigroup_to_dict(Z2), str(h_path))
    code, out, _ = run(
        capsys, "product", "--base", str(sys_path), "--h", str(h_path),
        "--format", "json",
    )
    assert code == 0
    payload = json.loads(out)
    expected = product_table(Z2, builtin_system("flip_flop"))
    assert payload == serialize.semigroup_to_dict(expected)


def test_validate_good_and_bad_system(capsys, tmp_path):
    code, out, _ = run(capsys, "validate", "--system", "flipflop_system")
    assert code == 0 and "system ok" in out

    doc = serialize.system_to_dict(builtin_system("flip_flop"))
    doc["lambda"]["1,0"] = [0, 0]  # breaks (alpha) at (1,0,1)
    bad = tmp_path / "bad.json"
    serialize.dump_json(doc, str(bad))
    code, _, err = run(capsys, "validate", "--system", str(bad))
    assert code == 1
    assert "alpha" in err and "(1,0,1)" in err


def test_validate_nonassociative_table(capsys):
    code, _, err = run(
        capsys, "validate", "--base", '{"size":2,"table":[[1,0],[0,0]]}'
    )
    assert code == 1
    assert "not associative" in err


def test_validate_malformed_file_is_input_error(capsys, tmp_path):
    bad = tmp_path / "broken.json"
    bad.write_text("{not json")
    code, _, err = run(capsys, "validate", "--base", str(bad))
    assert code == 2
    assert "input error" in err


def test_validate_action_law_failure_is_verification_error(capsys):
    # well-formed document whose action breaks the unit law
    doc = json.dumps(
        {"carrier": 2, "base": "z2", "act": [[1, 0], [0, 1]]}
    )
    code, _, err = run(capsys, "validate", "--action", doc)
    assert code == 1
    assert "not verified" in err


def test_validate_good_action(capsys):
    doc = json.dumps(
        {"carrier": 2, "base": "z2", "act": [[0, 1], [1, 0]]}
    )
    code, out, _ = run(capsys, "validate", "--action", doc)
    assert code == 0
    assert "action ok" in out


def test_unknown_flag_is_usage_error(capsys):
    code, _, _ = run(capsys, "corollary", "--bogus")
    assert code == 2


def test_quotient(capsys):
    code, out, _ = run(
        capsys,
        "quotient",
        "--base",
        '{"size":2,"table":[[0,1],[1,0]]}',
        "--partition",
        "[[0,1]]",
    )
    assert code == 0


def test_quotient_rejects_non_congruence(capsys, tmp_path):
    prod = product_table(Z2, builtin_system("flip_flop"))
    path = tmp_path / "prod.json"
    serialize.dump_json(serialize.semigroup_to_dict(prod), str(path))
    code, _, err = run(
        capsys, "quotient", "--base", str(path), "--partition", "[[0,2],[1],[3],[4],[5]]"
    )
    assert code == 1
    assert "not verified" in err


def test_iso(capsys):
    code, out, _ = run(capsys, "iso", "--base", "z2", "--h",
                       '{"size":2,"table":[[1,0],[0,1]]}')
    assert code == 0 and "isomorphic" in out
    code, out, _ = run(capsys, "iso", "--base", "l2", "--h", "r2")
    assert code == 1 and "absent" in out


def test_divides(capsys, tmp_path):
    prod = product_table(Z2, builtin_system("flip_flop"))
    path = tmp_path / "prod.json"
    serialize.dump_json(serialize.semigroup_to_dict(prod), str(path))
    code, out, _ = run(
        capsys, "divides", "--base", str(path), "--h", "l2_1", "--quotient-only"
    )
    assert code == 0 and "divides" in out
    code, out, _ = run(capsys, "divides", "--base", "z2", "--h", "z3")
    assert code == 1 and "absent" in out


def test_corollary(capsys):
    code, out, _ = run(capsys, "corollary")
    assert code == 0
    assert "flip_flop" in out and "left_zero" in out
    code, out, _ = run(capsys, "corollary", "--format", "json")
    payload = json.loads(out)
    assert len(payload["branches"]) == 2


def test_examples(capsys):
    code, out, _ = run(capsys, "examples")
    assert code == 0
    assert "flipflop_system" in out and "z2" in out
    code, out, _ = run(capsys, "examples", "--system", "lzero_system", "--format", "json")
    assert code == 0
    assert json.loads(out)["index_sizes"] == [2]


def test_free_semigroup_mode(capsys):
    code, out, _ = run(capsys, "free", "--sizes", "1,2", "--bound", "3")
    assert code == 0
    assert "axioms ok: True" in out


def test_free_monoid_mode(capsys):
    spec = json.dumps(
        {"shared_size": 2, "lambda": [[0, 1]], "rho": [[0, 1]]}
    )
    code, out, _ = run(capsys, "free", "--system", spec, "--bound", "3")
    assert code == 0
    assert "unital on truncated domain: True" in out


def test_wreathize(capsys):
    spec = {
        "base": "z2",
        "index_sizes": [2, 2],
        "lambda": {"0,0": [0, 1], "0,1": [0, 1], "1,0": [0, 1], "1,1": [0, 1]},
        "rho": {"0,0": [0, 1], "0,1": [0, 1], "1,0": [1, 0], "1,1": [1, 0]},
    }
    code, out, _ = run(capsys, "wreathize", "--system", json.dumps(spec))
    assert code == 0
    assert "derived action" in out


def test_wreathize_rejects_non_group(capsys):
    code, _, err = run(capsys, "wreathize", "--system", "flipflop_system")
    assert code == 1
    assert "not verified" in err


def test_enumerate_deterministic(capsys):
    code, out1, _ = run(
        capsys, "enumerate", "--base", "trivial", "--sizes", "2", "--seed", "5",
        "--format", "json",
    )
    assert code == 0
    code, out2, _ = run(
        capsys, "enumerate", "--base", "trivial", "--sizes", "2", "--seed", "5",
        "--format", "json",
    )
    assert out1 == out2
    assert len(out1.splitlines()) == 7


def test_repeat_runs_are_byte_identical(capsys):
    _, out1, _ = run(capsys, "product", "--base", "lzero_system", "--h", "z2",
                     "--format", "json")
    _, out2, _ = run(capsys, "product", "--base", "lzero_system", "--h", "z2",
                     "--format", "json")
    assert out1 == out2


def test_out_writes_reloadable_artifact(capsys, tmp_path):
    out_path = tmp_path / "table.json"
    code, _, _ = run(
        capsys, "product", "--base", "flipflop_system", "--h", "z2",
        "--out", str(out_path),
    )
    assert code == 0
    reloaded = serialize.load_semigroup(str(out_path))
    assert reloaded == product_table(Z2, builtin_system("flip_flop"))
