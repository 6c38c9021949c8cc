from __future__ import annotations

import json
import subprocess
import sys

import pytest

from hypothesis import given, settings

from conftest import sierp, spaces
from mtkit import theorems
from mtkit.census import census, summary
from mtkit.cli import main
from mtkit.enumeration import enumerate_topologies, max_points, preorders, space_id
from mtkit.errors import BoundExceeded, NotALattice, NotATopology, SchemaError
from mtkit.frames import chain, find_isomorphism
from mtkit.io import dumps, io_roundtrip, loads, parse_document, serialize
from mtkit.oracles import topologies_bruteforce
from mtkit.theorems import THEOREM_IDS, Theorem, run_checks, run_theorem_suite


class TestEnumeration:
    @pytest.mark.parametrize("n", range(5))
    def test_matches_brute_force(self, n):
        got = [tuple(sorted(M.opens)) for M in enumerate_topologies(n)]
        assert got == topologies_bruteforce(n)
        assert len(set(got)) == len(got)

    def test_counts(self):
        assert [len(enumerate_topologies(n)) for n in range(5)] == [1, 1, 4, 29, 355]

    def test_preorder_count(self):
        assert sum(1 for _ in preorders(4)) == 355

    def test_bound(self, monkeypatch):
        with pytest.raises(BoundExceeded):
            enumerate_topologies(5)
        with pytest.raises(BoundExceeded):
            enumerate_topologies(-1)
        monkeypatch.setenv("MTKIT_MAX_POINTS", "5")
        assert max_points() == 5
        assert len(enumerate_topologies(5)) == 6942

    def test_bad_env(self, monkeypatch):
        monkeypatch.setenv("MTKIT_MAX_POINTS", "many")
        with pytest.raises(BoundExceeded):
            enumerate_topologies(1)

    def test_space_id(self):
        assert space_id(sierp()) == "n2:0,2,3"


class TestCensus:
    def test_two_points(self):
        rows = census(2)
        s = summary(rows)
        assert s["spaces"] == 4 and s["T1"] == 1 and s["T0"] == 3

    def test_empty_space(self):
        rows = census(0)
        assert len(rows) == 1 and all(rows[0].profile.as_dict().values())

    def test_deterministic(self):
        a = json.dumps([r.as_dict() for r in census(3)])
        b = json.dumps([r.as_dict() for r in census(3)])
        assert a == b

    def test_ids_unique(self):
        rows = census(3)
        assert len({r.space_id for r in rows}) == 29


class TestTheoremSuite:
    def test_three_points_clean(self):
        reports = run_theorem_suite(3)
        assert [r.theorem_id for r in reports] == list(THEOREM_IDS)
        assert all(r.ok and r.instances == 29 for r in reports)

    def test_four_points_clean(self):
        reports = run_theorem_suite(4)
        assert all(r.instances == 355 for r in reports)
        assert {r.theorem_id: r.violations for r in reports if r.violations} == {}

    @settings(max_examples=25, deadline=None)
    @given(spaces(5))
    def test_random_five_point_spaces(self, M):
        assert [r.violations for r in run_checks([M]) if r.violations] == []

    def test_t2_sober_two_points(self):
        (rep,) = run_theorem_suite(2, ids=["t2_implies_sober"])
        assert rep.instances == 4 and rep.violations == []

    def test_zero_points(self):
        assert all(r.ok and r.instances == 1 for r in run_theorem_suite(0))

    def test_unknown_id(self):
        with pytest.raises(KeyError):
            run_theorem_suite(1, ids=["no_such_theorem"])

    def test_violation_is_replayable(self, monkeypatch):
        bogus = Theorem("always_fails", "false for every space", lambda inst: ("witness", inst.M.full))
        monkeypatch.setattr(theorems, "THEOREMS", theorems.THEOREMS + (bogus,))
        monkeypatch.setattr(theorems, "THEOREM_IDS", theorems.THEOREM_IDS + ("always_fails",))
        (rep,) = run_checks([sierp()], ids=["always_fails"])
        (v,) = rep.violations
        assert v["space_id"] == "n2:0,2,3" and v["witness"] == ["witness", 3]
        assert parse_document(v["space"]) == sierp()

    def test_statements_present(self):
        assert len(set(THEOREM_IDS)) == len(THEOREM_IDS)
        assert all(t.statement for t in theorems.THEOREMS)


class TestIO:
    def test_space(self):
        assert io_roundtrip({"kind": "space", "points": 2, "opens": [[], [1], [0, 1]]}) == sierp()

    def test_lattice(self):
        L = io_roundtrip({"kind": "lattice", "elements": 3,
                          "leq": [[0, 0], [0, 1], [0, 2], [1, 1], [1, 2], [2, 2]]})
        assert find_isomorphism(L, chain(3)) == (0, 1, 2)

    def test_missing_empty_open(self):
        with pytest.raises(NotATopology):
            parse_document({"kind": "space", "points": 2, "opens": [[1], [0, 1]]})

    def test_not_a_lattice(self):
        with pytest.raises(NotALattice):
            parse_document({"kind": "lattice", "elements": 2, "leq": [[0, 0], [1, 1]]})

    @pytest.mark.parametrize("doc, path", [
        ([], "$"),
        ({"points": 2}, "$.kind"),
        ({"kind": "graph"}, "$.kind"),
        ({"kind": "space", "points": -1, "opens": []}, "$.points"),
        ({"kind": "space", "points": 2, "opens": [[0], [5]]}, "$.opens[1][0]"),
        ({"kind": "space", "points": 2, "opens": "all"}, "$.opens"),
        ({"kind": "lattice", "elements": 2, "leq": [[0, 1, 2]]}, "$.leq[0]"),
    ])
    def test_schema_paths(self, doc, path):
        with pytest.raises(SchemaError) as exc:
            parse_document(doc)
        assert exc.value.path == path

    def test_invalid_json(self):
        with pytest.raises(SchemaError):
            loads("{not json")

    def test_canonical_text(self):
        M = loads('{"kind": "space", "points": 2, "opens": [[0, 1], [1], []]}')
        assert dumps(M) == '{"kind": "space", "opens": [[], [1], [0, 1]], "points": 2}'
        assert serialize(loads(dumps(M))) == serialize(M)


@pytest.fixture
def write(tmp_path):
    def _write(doc, name="doc.json"):
        p = tmp_path / name
        p.write_text(json.dumps(doc) if not isinstance(doc, str) else doc)
        return str(p)
    return _write


SIERP_DOC = {"kind": "space", "points": 2, "opens": [[], [1], [0, 1]]}
DISC2_DOC = {"kind": "space", "points": 2, "opens": [[], [0], [1], [0, 1]]}
CHAIN_DOC = {"kind": "lattice", "elements": 3, "leq": [[0, 0], [0, 1], [0, 2], [1, 1], [1, 2], [2, 2]]}


class TestCLI:
    def run(self, capsys, *argv):
        code = main(list(argv))
        out = capsys.readouterr()
        return code, out.out, out.err

    def test_validate(self, capsys, write):
        code, out, _ = self.run(capsys, "validate", write(SIERP_DOC))
        assert code == 0 and json.loads(out)["valid"]

    def test_classify(self, capsys, write):
        code, out, _ = self.run(capsys, "classify", write(SIERP_DOC))
        d = json.loads(out)
        assert code == 0 and d["profile"]["T0"] and not d["profile"]["T1"]
        assert d["witnesses"]["T1"]["witness"] == [1]
        assert d["frame_profile"]["SPATIAL"]

    def test_frame(self, capsys, write):
        code, out, _ = self.run(capsys, "frame", write(SIERP_DOC))
        d = json.loads(out)
        assert d["elements"] == 3 and d["labels"] == [[], [1], [0, 1]]
        assert find_isomorphism(parse_document(d), chain(3)) is not None

    def test_points(self, capsys, write):
        code, out, _ = self.run(capsys, "points", write(CHAIN_DOC))
        assert code == 0 and len(json.loads(out)["points"]) == 2

    def test_complete(self, capsys, write):
        code, out, _ = self.run(capsys, "complete", write({"kind": "poset", "elements": 2, "leq": []}))
        assert code == 0 and json.loads(out)["elements"] == 4

    def test_envelope(self, capsys, write):
        code, out, _ = self.run(capsys, "envelope", write(CHAIN_DOC))
        d = json.loads(out)
        assert code == 0 and d["points"] == 2 and len(d["opens"]) == 3

    def test_soberify(self, capsys, write):
        code, out, _ = self.run(capsys, "soberify", write({"kind": "space", "points": 2, "opens": [[], [0, 1]]}))
        assert code == 0 and json.loads(out)["points"] == 1

    def test_urysohn(self, capsys, write):
        code, out, _ = self.run(capsys, "urysohn", write(DISC2_DOC), "--closed", "1", "--open", "0b11", "--depth", "2")
        d = json.loads(out)
        assert code == 0 and len(d["members"]) == 5

    def test_urysohn_not_normal(self, capsys, write):
        code, _, err = self.run(capsys, "urysohn", write(SIERP_DOC), "--closed", "1", "--open", "3")
        assert code == 1 and "NotNormal" in err

    def test_census(self, capsys):
        code, out, _ = self.run(capsys, "census", "--n", "2")
        d = json.loads(out)
        assert code == 0 and len(d["rows"]) == 4 and d["summary"]["T1"] == 1

    def test_census_bound(self, capsys):
        code, _, _ = self.run(capsys, "census", "--n", "9")
        assert code == 1

    def test_theorems(self, capsys):
        code, out, _ = self.run(capsys, "theorems", "--n", "2", "--cumulative")
        lines = [json.loads(x) for x in out.splitlines()]
        assert code == 0 and lines[-1] == {"theorems": len(THEOREM_IDS), "violations": 0}
        assert all(x["instances"] == 6 for x in lines[:-1])

    def test_theorem_violation_exit_code(self, capsys, monkeypatch):
        bogus = Theorem("always_fails", "false for every space", lambda inst: "bad")
        monkeypatch.setattr(theorems, "THEOREMS", (bogus,))
        monkeypatch.setattr(theorems, "THEOREM_IDS", ("always_fails",))
        code, out, _ = self.run(capsys, "theorems", "--n", "1")
        assert code == 2 and json.loads(out.splitlines()[-1])["violations"] == 1

    def test_validation_error(self, capsys, write):
        code, _, err = self.run(capsys, "validate", write({"kind": "space", "points": 2, "opens": [[1], [0, 1]]}))
        assert code == 1 and "NotATopology" in err

    def test_schema_error(self, capsys, write):
        code, _, err = self.run(capsys, "validate", write({"kind": "space"}))
        assert code == 3 and "$.points" in err

    def test_wrong_document_kind(self, capsys, write):
        code, _, _ = self.run(capsys, "classify", write(CHAIN_DOC))
        assert code == 1

    def test_missing_file(self, capsys, tmp_path):
        code, _, _ = self.run(capsys, "validate", str(tmp_path / "absent.json"))
        assert code == 1

    def test_module_entry_point(self, write):
        proc = subprocess.run([sys.executable, "-m", "mtkit", "validate", write(SIERP_DOC)],
                              capture_output=True, text=True)
        assert proc.returncode == 0 and json.loads(proc.stdout)["valid"]
