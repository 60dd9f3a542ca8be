"""File formats and the command-line interface."""

import json

import numpy as np
import pytest

from qdouble.catalog import cyclic_group, quaternion_group
from qdouble.cli import main
from qdouble.cochains import cyclic_cocycle, zero_cochain
from qdouble.io import (
    InputError,
    dump_cocycle,
    dump_group,
    load_cocycle_file,
    load_group_file,
    parse_subgroup,
)


@pytest.fixture()
def z2_files(tmp_path):
    dump_group(cyclic_group(2), tmp_path / "group.json")
    dump_cocycle(cyclic_cocycle(2, 1), tmp_path / "omega.json", "group.json")
    return tmp_path


@pytest.fixture()
def q8_files(tmp_path):
    dump_group(quaternion_group(), tmp_path / "group.json")
    return tmp_path


def test_group_roundtrip(tmp_path, q8):
    dump_group(q8, tmp_path / "q8.json")
    back = load_group_file(tmp_path / "q8.json")
    assert np.array_equal(back.table, q8.table)


def test_cocycle_roundtrip(tmp_path):
    c = cyclic_cocycle(4, 3)
    dump_group(c.group, tmp_path / "g.json")
    dump_cocycle(c, tmp_path / "c.json", "g.json")
    back = load_cocycle_file(tmp_path / "c.json")
    assert back.modulus == 16
    assert np.array_equal(back.values, c.values)


def test_sparse_entries_omit_zeros(tmp_path):
    c = cyclic_cocycle(2, 1)
    dump_group(c.group, tmp_path / "g.json")
    dump_cocycle(c, tmp_path / "c.json", "g.json")
    doc = json.loads((tmp_path / "c.json").read_text())
    assert doc["entries"] == [[1, 1, 1, 2]]


def test_load_group_rejects_bad_table(tmp_path):
    (tmp_path / "bad.json").write_text('{"table": [[0, 1], [1, 1]]}')
    with pytest.raises(InputError):
        load_group_file(tmp_path / "bad.json")


def test_load_missing_file():
    with pytest.raises(InputError):
        load_group_file("/nonexistent/group.json")


def test_parse_subgroup(q8):
    A = parse_subgroup(q8, "1")
    assert A.members == (0, 1)
    with pytest.raises(InputError):
        parse_subgroup(q8, "2")  # {1, i} is not closed
    with pytest.raises(InputError):
        parse_subgroup(q8, "99")
    with pytest.raises(InputError):
        parse_subgroup(q8, "i")


def _run(capsys, argv):
    code = main(argv)
    return code, capsys.readouterr().out


def test_cli_check_cocycle(z2_files, capsys):
    code, out = _run(capsys, [
        "check-cocycle", "--cocycle", str(z2_files / "omega.json"),
    ])
    assert code == 0
    assert "ok: True" in out


def test_cli_check_cocycle_rejects_bad(tmp_path, capsys):
    bad = zero_cochain(cyclic_group(2), 3, 4)
    bad.values[1, 1, 1] = 1
    dump_group(bad.group, tmp_path / "g.json")
    dump_cocycle(bad, tmp_path / "c.json", "g.json")
    code, out = _run(capsys, ["check-cocycle", "--cocycle", str(tmp_path / "c.json")])
    assert code == 1
    assert "ok: False" in out


def test_cli_double(z2_files, capsys):
    code, out = _run(capsys, [
        "double", "--group", str(z2_files / "group.json"),
        "--cocycle", str(z2_files / "omega.json"),
    ])
    assert code == 0
    assert "dimension: 4" in out


def test_cli_group_likes(z2_files, capsys):
    code, out = _run(capsys, [
        "group-likes", "--group", str(z2_files / "group.json"),
        "--cocycle", str(z2_files / "omega.json"), "--format", "json",
    ])
    assert code == 0
    doc = json.loads(out)
    assert doc["num_group_likes"] == 4
    assert doc["num_central_group_likes"] == 4


def test_cli_modularity_verdict(z2_files, capsys):
    code, out = _run(capsys, [
        "modularity", "--group", str(z2_files / "group.json"),
        "--cocycle", str(z2_files / "omega.json"), "--subgroup", "1",
        "--format", "json",
    ])
    assert code == 0
    doc = json.loads(out)
    assert doc["verdict"] == "MODULAR"
    assert doc["pairing"] == [[0, 0], [0, 4]]
    assert doc["pairing_modulus"] == 8


def test_cli_not_modular_exits_zero(z2_files, capsys):
    # trivial cocycle: a NOT MODULAR verdict is still a successful run
    code, out = _run(capsys, [
        "modularity", "--group", str(z2_files / "group.json"),
        "--subgroup", "1", "--format", "json",
    ])
    assert code == 0
    assert json.loads(out)["verdict"] == "NOT MODULAR"


def test_cli_admissible_not_central_exits_two(q8_files, capsys):
    code, out = _run(capsys, [
        "admissible", "--group", str(q8_files / "group.json"),
        "--subgroup", "1,2,3", "--format", "json",
    ])
    assert code == 2
    doc = json.loads(out)
    assert doc["admissible"] is False
    assert doc["reason"] == "NotCentral"


def test_cli_extension_non_split_exits_one(tmp_path, capsys):
    dump_group(cyclic_group(4), tmp_path / "group.json")
    dump_cocycle(cyclic_cocycle(4, 1), tmp_path / "omega.json", "group.json")
    code, out = _run(capsys, [
        "admissible", "--group", str(tmp_path / "group.json"),
        "--cocycle", str(tmp_path / "omega.json"),
        "--subgroup", "1,2,3", "--format", "json",
    ])
    assert code == 1
    assert json.loads(out)["reason"] == "ExtensionNonSplit"


def test_cli_quotient_and_verify(z2_files, capsys):
    code, out = _run(capsys, [
        "quotient", "--group", str(z2_files / "group.json"),
        "--cocycle", str(z2_files / "omega.json"), "--subgroup", "1",
        "--format", "json",
    ])
    assert code == 0
    doc = json.loads(out)
    assert doc["dimension"] == 2
    assert doc["axioms_ok"] and doc["morphism_ok"]

    code, out = _run(capsys, [
        "verify", "--group", str(z2_files / "group.json"),
        "--cocycle", str(z2_files / "omega.json"),
    ])
    assert code == 0


def test_cli_simple_currents_and_independence(z2_files, capsys):
    code, out = _run(capsys, [
        "simple-currents", "--group", str(z2_files / "group.json"),
        "--cocycle", str(z2_files / "omega.json"), "--format", "json",
    ])
    assert code == 0
    assert json.loads(out)["count"] == 4

    code, out = _run(capsys, [
        "independence", "--group", str(z2_files / "group.json"),
        "--cocycle", str(z2_files / "omega.json"), "--subgroup", "1",
        "--format", "json",
    ])
    assert code == 0
    doc = json.loads(out)
    assert doc["tables_identical"] and doc["twist_covariance_ok"]


def test_cli_output_is_deterministic(z2_files, capsys):
    argv = [
        "modularity", "--group", str(z2_files / "group.json"),
        "--cocycle", str(z2_files / "omega.json"), "--subgroup", "1",
        "--format", "json",
    ]
    _, first = _run(capsys, argv)
    _, second = _run(capsys, argv)
    assert first == second


def test_cli_bad_input_exits_two(capsys):
    code = main(["double", "--group", "/nonexistent/group.json"])
    capsys.readouterr()
    assert code == 2


def test_cli_missing_required_flag_exits_two(capsys):
    code = main(["double"])
    capsys.readouterr()
    assert code == 2


def test_cli_bad_nu_index_exits_two(z2_files, capsys):
    code = main([
        "quotient", "--group", str(z2_files / "group.json"),
        "--cocycle", str(z2_files / "omega.json"), "--subgroup", "1",
        "--nu", "99",
    ])
    capsys.readouterr()
    assert code == 2
