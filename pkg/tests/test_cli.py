import json
from dataclasses import replace

import pytest

from conftest import CATALOG
from semigroup_rings.cli import main, oracle_mismatches
from semigroup_rings.families import family_snk
from semigroup_rings.staircase import certified_staircase


def write(tmp_path, name, doc):
    path = tmp_path / name
    path.write_text(json.dumps(doc), encoding="utf-8")
    return str(path)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def classify_json(tmp_path, capsys, doc):
    code, out, _ = run(capsys, "classify", write(tmp_path, "in.json", doc))
    assert code == 0
    return json.loads(out)


def test_classify_family_member(tmp_path, capsys):
    rep = classify_json(tmp_path, capsys, CATALOG["family_n2_k1"].document)
    assert rep["h_vector"] == [1, 1, 2]
    assert rep["cm_type"] == 3
    assert rep["is_nearly_gorenstein"] is True
    assert rep["canonical_source"] == "computed"
    assert rep["a_invariant"] == rep["socle_degree"] - rep["dim"]


def test_classify_polynomial_ring(tmp_path, capsys):
    rep = classify_json(tmp_path, capsys, CATALOG["polynomial_ring_2"].document)
    for key in ["is_gorenstein", "is_level", "is_nearly_gorenstein", "is_almost_gorenstein", "is_cohen_macaulay"]:
        assert rep[key] is True
    assert rep["unavailable_reasons"] == {}


def test_non_simplicial_fields_are_unavailable_with_reasons(tmp_path, capsys):
    rep = classify_json(tmp_path, capsys, CATALOG["pyramid_3d"].document)
    assert rep["is_simplicial"] is False
    for key in ["canonical_generators", "canonical_degrees", "cm_type", "is_nearly_gorenstein",
                "is_level", "is_almost_gorenstein", "is_cohen_macaulay"]:
        assert rep[key] == "unavailable"
        assert rep["unavailable_reasons"][key] == "NOT_SIMPLICIAL"
    # every unavailable field carries a reason
    assert {k for k, v in rep.items() if v == "unavailable"} == set(rep["unavailable_reasons"])
    assert rep["h_vector"] == [1, 1, 2]


def test_external_canonical_generators(tmp_path, capsys):
    computed = classify_json(tmp_path, capsys, CATALOG["family_n2_k1"].document)
    doc = dict(CATALOG["family_n2_k1"].document, canonical_generators=computed["canonical_generators"])
    rep = classify_json(tmp_path, capsys, doc)
    assert rep["canonical_source"] == "external"
    for key in ["cm_type", "is_level", "is_nearly_gorenstein", "is_almost_gorenstein"]:
        assert rep[key] == computed[key]
    assert any("externally" in n for n in rep["provenance_notes"])


def test_external_canonical_on_non_simplicial_input(tmp_path, capsys):
    doc = dict(CATALOG["pyramid_3d"].document, canonical_generators=[[1, 2, 2]])
    rep = classify_json(tmp_path, capsys, doc)
    assert rep["canonical_source"] == "external"
    assert rep["cm_type"] == 1
    assert isinstance(rep["is_nearly_gorenstein"], bool)


def test_text_format(tmp_path, capsys):
    code, out, _ = run(capsys, "classify", write(tmp_path, "a.json", CATALOG["family_n2_k1"].document),
                       "--format", "text")
    assert code == 0
    assert out.startswith("family_n2_k1: dim 2")
    assert "cm_type" in out


@pytest.mark.parametrize("name", sorted(CATALOG))
def test_json_is_byte_identical_across_runs(tmp_path, capsys, name):
    path = write(tmp_path, "in.json", CATALOG[name].document)
    first = run(capsys, "classify", path)[1]
    second = run(capsys, "classify", path)[1]
    assert first == second and first.endswith("\n")


def test_family_command(tmp_path, capsys):
    out = tmp_path / "f.json"
    assert run(capsys, "family", "--n", "2", "--k", "1", "-o", str(out))[0] == 0
    assert len(json.loads(out.read_text())["generators"]) == 5
    assert run(capsys, "family", "--n", "3", "--k", "4", "-o", str(out))[0] == 0
    assert len(json.loads(out.read_text())["generators"]) == 7
    assert run(capsys, "family", "--n", "1", "--k", "1", "-o", str(out))[0] == 3


def test_parse_errors_exit_2(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json", encoding="utf-8")
    assert run(capsys, "classify", str(bad))[0] == 2
    assert run(capsys, "classify", str(tmp_path / "missing.json"))[0] == 2
    assert run(capsys, "classify", write(tmp_path, "x.json", {"generators": [[1, 0]]}))[0] == 2
    assert run(capsys, "check", "9.9", "--fixtures")[0] == 2
    assert run(capsys, "nonsense")[0] == 2
    assert run(capsys, "check", "5.1", "--bounds", "12")[0] == 2


def test_invalid_input_exits_3(tmp_path, capsys):
    incons = {"ambient_dim": 2, "generators": [[1, 0], [2, 0]], "degrees": [1, 1]}
    code, _, err = run(capsys, "classify", write(tmp_path, "i.json", incons))
    assert code == 3 and "INCONSISTENT_GRADING" in err
    bad_dim = {"ambient_dim": 3, "generators": [[1, 0], [0, 1]], "degrees": [1, 1]}
    assert run(capsys, "classify", write(tmp_path, "d.json", bad_dim))[0] == 3


def test_certification_failure_exits_4(tmp_path, capsys):
    # h-vector of socle degree 15 cannot be certified with a degree cap of 5
    doc = {"ambient_dim": 2, "generators": [[0, 1], [6, 1], [1, 3]], "degrees": [1, 1, 3]}
    code, _, err = run(capsys, "classify", write(tmp_path, "c.json", doc), "--max-degree", "5")
    assert code == 4 and "NONPOLYNOMIAL_NUMERATOR" in err
    assert run(capsys, "classify", write(tmp_path, "c2.json", doc))[0] == 0


def test_check_family_grid_all_pass(capsys):
    code, out, _ = run(capsys, "check", "6.3", "--family-grid", "4")
    assert code == 0
    assert "total 12: PASS=12 FAIL=0 VACUOUS=0" in out


def test_check_fixtures_and_corpus(capsys):
    for tid in ["3.5", "3.6", "3.7", "5.1", "5.3", "6.1", "6.2"]:
        assert run(capsys, "check", tid, "--fixtures")[0] == 0
    code, out, _ = run(capsys, "check", "5.1", "--seed", "1", "--bounds", "12,7", "--count", "20")
    assert code == 0 and "total 20" in out


def test_check_corpus_directory(tmp_path, capsys):
    for name in ["family_n2_k1", "family_n3_k2", "polynomial_ring_2"]:
        write(tmp_path, f"{name}.json", CATALOG[name].document)
    code, out, _ = run(capsys, "check", "6.3", "--corpus", str(tmp_path))
    assert code == 0
    lines = out.splitlines()
    assert [ln.split()[0] for ln in lines[:3]] == ["family_n2_k1", "family_n3_k2", "polynomial_ring_2"]


@pytest.mark.parametrize("name", ["family_n2_k1", "polynomial_ring_2"])
def test_oracle_command(tmp_path, capsys, name):
    code, out, _ = run(capsys, "oracle", write(tmp_path, "o.json", CATALOG[name].document), "--samples", "1000")
    assert code == 0
    assert "1000 samples, 0 mismatches" in out


def test_oracle_detects_corrupted_staircase():
    S = family_snk(2, 1)
    T = certified_staircase(S)
    mins = dict(T.min_elements)
    mins[(0, 0)] = ((1, 1),)  # lose everything on the ray axes
    bad = replace(T, min_elements=mins)
    assert oracle_mismatches(S, T, 500) == []
    assert oracle_mismatches(S, bad, 500)
