import json

import jsonschema
import pytest
from click.testing import CliRunner

from reflext.catalog import entry
from reflext.cli import main
from reflext.errors import ParseError
from reflext.graphs import induced
from reflext.repfile import (
    load_repfile,
    representation_from_document,
    representation_to_document,
)
from reflext.reports import ANALYZE_SCHEMA, THEOREM_SCHEMA

A2_DOC = {
    "field": "Q",
    "dim": 2,
    "generators": [
        {"label": "s1", "matrix": [["-1", "1"], ["0", "1"]]},
        {"label": "s2", "matrix": [["1", "0"], ["1", "-1"]]},
    ],
}


@pytest.fixture
def runner():
    return CliRunner()


def test_repfile_roundtrip(tmp_path):
    rep = representation_from_document(A2_DOC)
    assert rep.dim == 2
    assert representation_to_document(rep) == A2_DOC

    path = tmp_path / "a2.json"
    path.write_text(json.dumps(A2_DOC))
    loaded = load_repfile(str(path))
    assert loaded.generators == rep.generators


def test_repfile_quadratic_roundtrip():
    doc = representation_to_document(entry("H2-5").representation)
    assert doc["field"] == {"quadratic": 5}
    rep = representation_from_document(doc)
    assert rep.generators == entry("H2-5").representation.generators


def test_repfile_rejects_bad_documents():
    for bad in [
        "not a dict",
        {"field": "Q", "dim": 2},
        {"field": "R", "dim": 2, "generators": []},
        {"field": "Q", "dim": 0, "generators": []},
        {"field": "Q", "dim": 2, "generators": []},
        {"field": "Q", "dim": 2, "generators": [{"matrix": [["1"]]}]},
        {"field": "Q", "dim": 1, "generators": [{"matrix": [[1]]}]},  # non-string entry
        {"field": "Q", "dim": 1, "generators": [{"matrix": [["0"]]}]},  # singular
        {"field": "Q", "dim": 1, "generators": [{"matrix": [["1+1*sqrt(5)"]]}]},
    ]:
        with pytest.raises(ParseError):
            representation_from_document(bad)


def test_cli_verify_a3_exit_zero(runner):
    result = runner.invoke(main, ["verify", "A3"])
    assert result.exit_code == 0
    assert "TheoremVerified" in result.output


def test_cli_verify_cond4_fail_exit_three(runner):
    result = runner.invoke(main, ["verify", "cond4-fail"])
    assert result.exit_code == 3
    assert "condition4" in result.output


def test_cli_verify_json_schema(runner):
    result = runner.invoke(main, ["verify", "A2", "--json"])
    assert result.exit_code == 0
    doc = json.loads(result.output)
    jsonschema.validate(doc, THEOREM_SCHEMA)
    assert doc["conclusion"]["status"] == "TheoremVerified"
    hom = doc["pairwise_hom"]
    assert hom == [[1, 0, 0], [0, 1, 0], [0, 0, 1]]


def test_cli_verify_trace_replays(runner):
    result = runner.invoke(main, ["verify", "--d", "2", "--trace", "A3", "--json"])
    assert result.exit_code == 0
    doc = json.loads(result.output)
    (per_d,) = doc["per_degree"]
    assert per_d["d"] == 2
    trace = per_d["claim5_trace"]
    assert trace is not None
    subset = doc["claims"]["claim3_subset"]
    graph = induced(
        __import__("reflext").Graph(
            doc["hypothesis"]["graph"]["vertices"], doc["hypothesis"]["graph"]["edges"]
        ),
        subset,
    )
    import itertools

    covered = {tuple(trace["base"])}
    for seq in trace["sequences"]:
        current = set(trace["base"])
        for st in seq["steps"]:
            assert graph.has_edge(st["removed"], st["added"])
            assert st["removed"] in current and st["added"] not in current
            current.remove(st["removed"])
            current.add(st["added"])
        assert current == set(seq["target"])
        covered.add(tuple(seq["target"]))
    assert covered == set(itertools.combinations(sorted(subset), 2))


def test_cli_verify_parse_error_exit_two(runner, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert runner.invoke(main, ["verify", str(bad)]).exit_code == 2
    assert runner.invoke(main, ["verify", "missing-entry"]).exit_code == 2


def test_cli_analyze_a2(runner):
    result = runner.invoke(main, ["analyze", "A2"])
    assert result.exit_code == 0
    assert "alpha = (1, 0)" in result.output
    assert "alpha = (0, 1)" in result.output
    assert "eigenvalue = -1" in result.output
    assert "condition 4 holds" in result.output
    assert "{1,2}" in result.output


def test_cli_analyze_condition4_violation(runner):
    result = runner.invoke(main, ["analyze", "cond4-fail"])
    assert result.exit_code == 3
    assert "VIOLATED" in result.output


def test_cli_analyze_non_reflection_generator(runner, tmp_path):
    doc = {
        "field": "Q",
        "dim": 2,
        "generators": [
            {"label": "id", "matrix": [["1", "0"], ["0", "1"]]},
            {"label": "s", "matrix": [["-1", "1"], ["0", "1"]]},
        ],
    }
    path = tmp_path / "nonrefl.json"
    path.write_text(json.dumps(doc))
    result = runner.invoke(main, ["analyze", str(path)])
    assert result.exit_code == 3
    assert "id: NOT a reflection" in result.output


def test_cli_analyze_json_schema(runner):
    result = runner.invoke(main, ["analyze", "H2-5", "--json"])
    assert result.exit_code == 0
    doc = json.loads(result.output)
    jsonschema.validate(doc, ANALYZE_SCHEMA)
    assert doc["field"] == {"quadratic": 5}


def test_cli_exterior(runner):
    result = runner.invoke(main, ["exterior", "A2", "--d", "2"])
    assert result.exit_code == 0
    assert result.output.count("[ -1 ]") == 2
    assert runner.invoke(main, ["exterior", "A2", "--d", "5"]).exit_code == 2


def test_cli_hom(runner):
    assert "= 1" in runner.invoke(main, ["hom", "A2:1", "A2:1"]).output
    assert "= 0" in runner.invoke(main, ["hom", "A2:0", "A2:2"]).output
    result = runner.invoke(main, ["hom", "A2", "A2", "--json"])
    assert json.loads(result.output)["hom_dim"] == 1


def test_cli_catalog_list_and_show(runner):
    listing = runner.invoke(main, ["catalog", "list"])
    assert listing.exit_code == 0
    assert "A2" in listing.output and "H2-5" in listing.output

    show = runner.invoke(main, ["catalog", "show", "A2", "--json"])
    assert show.exit_code == 0
    assert json.loads(show.output) == A2_DOC

    assert runner.invoke(main, ["catalog", "show", "nope"]).exit_code == 2


def test_cli_verify_file_roundtrip(runner, tmp_path):
    # a verify run on a file written by catalog show must agree with the entry
    show = runner.invoke(main, ["catalog", "show", "B2", "--json"])
    path = tmp_path / "b2.json"
    path.write_text(show.output)
    result = runner.invoke(main, ["verify", str(path)])
    assert result.exit_code == 0


def test_cli_verify_quadratic_file_roundtrip(runner, tmp_path):
    # exercise the quadratic wire format end to end
    show = runner.invoke(main, ["catalog", "show", "H2-5", "--json"])
    doc = json.loads(show.output)
    assert doc["field"] == {"quadratic": 5}
    assert any("sqrt(5)" in e for g in doc["generators"] for row in g["matrix"] for e in row)
    path = tmp_path / "h2.json"
    path.write_text(show.output)
    result = runner.invoke(main, ["verify", str(path), "--json"])
    assert result.exit_code == 0
    assert json.loads(result.output)["conclusion"]["status"] == "TheoremVerified"


def test_cli_verify_bad_degree_exit_two(runner):
    assert runner.invoke(main, ["verify", "A2", "--d", "7"]).exit_code == 2


def test_cli_failure_documents_validate_against_schema(runner, tmp_path):
    # failure reports must satisfy the same schema as success reports
    for target in ("cond4-fail", "dihedral-0-0", "reducible-direct-sum"):
        result = runner.invoke(main, ["verify", target, "--json"])
        assert result.exit_code == 3
        doc = json.loads(result.output)
        jsonschema.validate(doc, THEOREM_SCHEMA)
        assert doc["conclusion"]["status"] == "HypothesisFailed"

    nonrefl = {
        "field": "Q",
        "dim": 2,
        "generators": [{"label": "id", "matrix": [["1", "0"], ["0", "1"]]}],
    }
    path = tmp_path / "nr.json"
    path.write_text(json.dumps(nonrefl))
    result = runner.invoke(main, ["verify", str(path), "--json"])
    assert result.exit_code == 3
    doc = json.loads(result.output)
    jsonschema.validate(doc, THEOREM_SCHEMA)
    assert doc["hypothesis"]["condition1"]["ok"] is False
