import json
import pathlib

from localh import serialize
from localh.cli import main
from localh.constructions import trivial_on

FIXTURES = pathlib.Path(__file__).resolve().parent.parent / "fixtures"


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_compute_nonunimodal_fixture(capsys):
    code, out, _ = run(
        capsys, "compute", str(FIXTURES / "nonunimodal_quasigeometric.json")
    )
    assert code == 0
    data = json.loads(out)
    assert data["local_h"] == [0, 1, 0, 1, 0]
    assert data["local_gamma"] == [0, 1, -2]
    assert data["quasi_geometric"]["holds"] is True
    assert data["vertex_induced"]["holds"] is False
    assert data["unimodal"] is False
    assert data["validity"] == "valid-weak"


def test_compute_trivial(capsys):
    code, out, _ = run(capsys, "compute", str(FIXTURES / "trivial_d3.json"))
    assert code == 0
    data = json.loads(out)
    assert data["local_h"] == [0, 0, 0, 0]
    assert data["vertex_induced"]["holds"] is True


def test_realize_round_trip(tmp_path, capsys):
    out_file = tmp_path / "realized.json"
    code, _, err = run(
        capsys, "realize", "--target", "0,2,3,2,0", "-o", str(out_file)
    )
    assert code == 0
    assert "self-check" in err
    s = serialize.subdivision_from_obj(serialize.load_json(str(out_file)))
    assert s.local_h().padded(4) == (0, 2, 3, 2, 0)


def test_realize_trivial_target(capsys):
    code, out, err = run(capsys, "realize", "--target", "0,0")
    assert code == 0
    data = json.loads(out)
    assert data["total"]["vertices"] == ["v1"]


def test_realize_invalid_target(capsys):
    code, _, err = run(capsys, "realize", "--target", "0,1,2,0")
    assert code == 2
    assert "invalid target" in err


def test_bary_pipeline_through_files(tmp_path, capsys):
    bary_file = tmp_path / "bary.json"
    code, _, _ = run(
        capsys, "bary", str(FIXTURES / "stellar_triangle.json"), "-o", str(bary_file)
    )
    assert code == 0
    code, out, _ = run(capsys, "compute", str(bary_file))
    assert code == 0
    data = json.loads(out)
    assert data["local_h"] == [0, 7, 7, 0]
    assert data["h"] == [1, 10, 7]


def test_bary_of_poset(tmp_path, capsys):
    code, out, err = run(capsys, "bary", str(FIXTURES / "stellar_triangle_poset.json"))
    assert code == 0
    assert "poset input" in err
    data = json.loads(out)
    s = serialize.subdivision_from_obj(data)
    assert s.local_h().coeffs == (0, 7, 7)


def test_identities_fixture(capsys):
    code, out, _ = run(
        capsys, "identities", str(FIXTURES / "bary_stellar_triangle.json"), "--json"
    )
    assert code == 0
    data = json.loads(out)
    assert data["all_match"] is True


def test_identities_table(capsys):
    code, out, _ = run(capsys, "identities", str(FIXTURES / "trivial_d4.json"))
    assert code == 0
    assert "all identities hold" in out


def test_derangement_table(capsys):
    code, out, _ = run(capsys, "derangement", "--max-d", "6", "--json")
    assert code == 0
    rows = json.loads(out)
    assert all(row["match"] for row in rows)
    assert rows[4] == {"d": 4, "enum": [0, 1, 7, 1], "recurrence": [0, 1, 7, 1],
                       "match": True}


def test_cdindex_hexagon(capsys):
    code, out, _ = run(capsys, "cdindex", str(FIXTURES / "hexagon_poset.json"))
    assert code == 0
    data = json.loads(out)
    assert data["ab_index"] == {"aa": 1, "ab": 5, "ba": 5, "bb": 1}
    assert data["cd_index"] == {"cc": 1, "d": 4}
    assert data["closed"] is True


def test_cdindex_square(capsys):
    code, out, _ = run(capsys, "cdindex", str(FIXTURES / "square_poset.json"))
    assert code == 0
    data = json.loads(out)
    assert data["closed"] is False
    assert data["difference"] == []


def test_search_deterministic(capsys):
    code, out1, _ = run(capsys, "search", "--seed", "3", "--count", "4",
                        "--max-d", "4", "--steps", "3")
    assert code == 0
    code, out2, _ = run(capsys, "search", "--seed", "3", "--count", "4",
                        "--max-d", "4", "--steps", "3")
    assert out1 == out2
    records = [json.loads(line) for line in out1.splitlines()]
    assert len(records) == 4
    for rec in records:
        assert rec["quasi_geometric"] is True
        assert not rec["conjecture_relevant"]


def test_search_require_vertex_induced(capsys):
    code, out, _ = run(
        capsys, "search", "--seed", "0", "--count", "6", "--max-d", "4",
        "--steps", "3", "--require", "vertex-induced", "--include-sd",
    )
    assert code == 0
    for line in out.splitlines():
        assert json.loads(line)["vertex_induced"] is True


def test_replay_round_trip(tmp_path, capsys):
    word_file = tmp_path / "word.json"
    word_file.write_text(json.dumps({
        "format": "localh/1",
        "seed_vertices": 4,
        "steps": [{"op": "l32", "face": "auto"}],
    }))
    code, out, _ = run(capsys, "replay", str(word_file))
    assert code == 0
    data = json.loads(out)
    assert data["validity"] == "valid-weak"
    assert data["local_h"] == [0, 1, 0, 1, 0]


def test_replay_warns_on_bare_push(tmp_path, capsys):
    word_file = tmp_path / "word.json"
    word_file.write_text(json.dumps({
        "seed_vertices": 4,
        "steps": [{"op": "o2", "face": "v1,v2,v3"}],
    }))
    code, out, err = run(capsys, "replay", str(word_file))
    assert "warning" in err
    data = json.loads(out)
    assert data["local_h"] == [0, 0, -1, 0, 0]


def test_input_error_exit_code(tmp_path, capsys):
    missing = tmp_path / "nope.json"
    code, _, err = run(capsys, "compute", str(missing))
    assert code == 2

    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    code, _, err = run(capsys, "compute", str(bad))
    assert code == 2
    assert "input error" in err


def test_schema_error_names_path(tmp_path, capsys):
    f = tmp_path / "typo.json"
    obj = serialize.subdivision_to_obj(trivial_on(2))
    obj["totol"] = obj.pop("total")
    f.write_text(json.dumps(obj))
    code, _, err = run(capsys, "compute", str(f))
    assert code == 2
    assert "totol" in err
