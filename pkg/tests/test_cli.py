from __future__ import annotations

import json

from odckit import cli


def run(capsys, *args):
    code = cli.main(list(args))
    out, err = capsys.readouterr()
    return code, out, err


def machine_doc(capsys, *args):
    code, out, err = run(capsys, *args, "--format", "machine")
    doc = json.loads(out)
    assert doc["schema_version"] == "1"
    return code, doc, err


class TestConstruct:
    def test_order_9_text(self, capsys):
        code, out, _ = run(capsys, "construct", "--n", "9")
        assert code == 0
        assert "0,1,4,2,7,5,6,3,8" in out.splitlines()
        assert "verified=true" in out

    def test_order_15_with_root_emits_cover(self, capsys):
        code, out, _ = run(capsys, "construct", "--n", "15", "--root", "3", "--emit", "odc")
        assert code == 0
        rows = [ln for ln in out.splitlines() if ln and not ln.startswith("#")]
        assert len(rows) == 15
        assert rows[0] == "0,9,1,3,5,10,13,12,2,14,8,4,11,7,6"

    def test_ineligible_order(self, capsys):
        code, _, err = run(capsys, "construct", "--n", "7")
        assert code == 2
        assert "15" in err and "not prime" in err

    def test_even_order(self, capsys):
        code, _, err = run(capsys, "construct", "--n", "6")
        assert code == 2

    def test_bad_root(self, capsys):
        code, _, err = run(capsys, "construct", "--n", "9", "--root", "4")
        assert code == 2
        assert "primitive root" in err

    def test_machine_document(self, capsys):
        code, doc, _ = machine_doc(capsys, "construct", "--n", "9", "--emit", "all")
        assert code == 0
        assert doc["command"] == "construct"
        assert doc["verified"] is True
        result = doc["result"]
        assert result["starter"] == [0, 1, 4, 2, 7, 5, 6, 3, 8]
        assert result["lengths"] == [1, 3, 2, 4, 2, 1, 3, 4]
        assert result["distances"] == [[1, 4], [2, 3], [3, 2], [4, 1]]
        assert len(result["odc"]) == 9
        assert len(result["witnesses"]) == 4
        assert result["witnesses"][0]["edge_i"] == [2, 7]

    def test_text_and_machine_numbers_agree(self, capsys):
        _, out, _ = run(capsys, "construct", "--n", "15", "--root", "3")
        _, doc, _ = machine_doc(capsys, "construct", "--n", "15", "--root", "3")
        starter_line = next(ln for ln in out.splitlines() if not ln.startswith("#"))
        assert [int(t) for t in starter_line.split(",")] == doc["result"]["starter"]
        lengths_line = next(ln for ln in out.splitlines() if ln.startswith("# lengths"))
        assert [int(t) for t in lengths_line.split()[2].split(",")] == doc["result"]["lengths"]
        distances_line = next(ln for ln in out.splitlines() if ln.startswith("# distances"))
        pairs = [tok.split("->") for tok in distances_line.split()[2:]]
        assert [[int(a), int(b)] for a, b in pairs] == doc["result"]["distances"]


class TestVerify:
    def test_known_cover(self, capsys, odc9_file):
        code, out, _ = run(capsys, "verify", str(odc9_file), "--mode", "odc")
        assert code == 0
        assert "double_cover: ok" in out
        assert "orthogonality: ok" in out

    def test_bad_terrace_reports_counts(self, capsys, tmp_path):
        f = tmp_path / "bad.txt"
        f.write_text("0,1,2,3,4\n")
        code, out, _ = run(capsys, "verify", str(f), "--mode", "terrace")
        assert code == 1
        assert "length 1 count=4" in out

    def test_duplicated_path_cover_fails(self, capsys, tmp_path):
        f = tmp_path / "dup.txt"
        f.write_text("0,1,4,2,7,5,6,3,8\n" * 9)
        code, out, _ = run(capsys, "verify", str(f), "--mode", "odc")
        assert code == 1
        assert "double_cover: FAIL" in out
        assert "orthogonality: FAIL" in out
        assert "violation:" in out

    def test_starter_mode(self, capsys, tmp_path):
        f = tmp_path / "starter.txt"
        f.write_text("0,1,3,2,4\n")
        code, out, _ = run(capsys, "verify", str(f))
        assert code == 0
        assert "path 0: ok" in out

    def test_malformed_file(self, capsys, tmp_path):
        f = tmp_path / "junk.txt"
        f.write_text("0,1,junk\n")
        code, _, err = run(capsys, "verify", str(f))
        assert code == 2

    def test_missing_file(self, capsys, tmp_path):
        code, _, err = run(capsys, "verify", str(tmp_path / "nope.txt"))
        assert code == 2

    def test_wrong_collection_size_is_bad_input(self, capsys, tmp_path):
        f = tmp_path / "short.txt"
        f.write_text("0,1,4,2,7,5,6,3,8\n" * 3)
        code, _, err = run(capsys, "verify", str(f), "--mode", "odc")
        assert code == 2

    def test_machine_report(self, capsys, tmp_path):
        f = tmp_path / "dup.txt"
        f.write_text("0,1,4,2,7,5,6,3,8\n" * 9)
        code, doc, _ = machine_doc(capsys, "verify", str(f), "--mode", "odc")
        assert code == 1
        assert doc["verified"] is False
        assert doc["result"]["double_cover_ok"] is False
        assert any(v["kind"] == "pair" and v["count"] == 8 for v in doc["result"]["violations"])


class TestRoundTrip:
    def test_text_starter_round_trips(self, capsys, tmp_path):
        _, out, _ = run(capsys, "construct", "--n", "9")
        f = tmp_path / "starter.txt"
        f.write_text(out)
        code, _, _ = run(capsys, "verify", str(f), "--mode", "starter")
        assert code == 0

    def test_text_cover_round_trips(self, capsys, tmp_path):
        _, out, _ = run(capsys, "construct", "--n", "15", "--root", "3", "--emit", "odc")
        f = tmp_path / "cover.txt"
        f.write_text(out)
        code, _, _ = run(capsys, "verify", str(f), "--mode", "odc")
        assert code == 0

    def test_machine_document_round_trips(self, capsys, tmp_path):
        _, out, _ = run(capsys, "construct", "--n", "9", "--emit", "all", "--format", "machine")
        f = tmp_path / "doc.json"
        f.write_text(out)
        code, _, _ = run(capsys, "verify", str(f), "--mode", "odc")
        assert code == 0
        code, _, _ = run(capsys, "verify", str(f), "--mode", "starter")
        assert code == 0

    def test_search_document_round_trips(self, capsys, tmp_path):
        _, out, _ = run(capsys, "search", "--n", "5", "--format", "machine")
        f = tmp_path / "found.json"
        f.write_text(out)
        code, _, _ = run(capsys, "verify", str(f), "--mode", "starter")
        assert code == 0


class TestSearch:
    def test_order_5(self, capsys):
        code, out, err = run(capsys, "search", "--n", "5")
        assert code == 0
        assert "0,1,3,2,4" in out.splitlines()
        assert "found=4" in err

    def test_limit(self, capsys):
        code, out, _ = run(capsys, "search", "--n", "9", "--limit", "1")
        assert code == 0
        rows = [ln for ln in out.splitlines() if ln]
        assert len(rows) == 1

    def test_even_order_rejected(self, capsys):
        code, _, _ = run(capsys, "search", "--n", "4")
        assert code == 2

    def test_empty_result_is_success(self, capsys):
        code, out, err = run(capsys, "search", "--n", "7")
        assert code == 0
        assert "found=0" in err

    def test_machine(self, capsys):
        code, doc, _ = machine_doc(capsys, "search", "--n", "5")
        assert code == 0
        assert doc["result"]["count"] == 4
        assert [0, 1, 3, 2, 4] in doc["result"]["starters"]
        assert doc["result"]["nodes_explored"] > 0


class TestCoverage:
    def test_single_new_value(self, capsys):
        code, out, _ = run(capsys, "coverage", "--n", "23")
        assert code == 0
        assert "n=23" in out and "new=yes" in out and "complement_prime=yes" in out
        assert "product=none" in out

    def test_single_doubly_covered(self, capsys):
        code, out, _ = run(capsys, "coverage", "--n", "9")
        assert code == 0
        assert "new=no" in out and "complement_prime=yes" in out
        assert "9[square:3]" in out

    def test_range_new_only(self, capsys):
        code, out, _ = run(capsys, "coverage", "--range", "3", "30", "--new-only")
        assert code == 0
        lines = [ln for ln in out.splitlines() if ln]
        assert len(lines) == 1
        assert lines[0].startswith("n=23 ")
        assert "families=p7mod8,sophie-germain" in lines[0]

    def test_range_streams_every_odd_value(self, capsys):
        code, out, _ = run(capsys, "coverage", "--range", "3", "30")
        assert code == 0
        assert len(out.splitlines()) == 14

    def test_even_order_rejected(self, capsys):
        code, _, _ = run(capsys, "coverage", "--n", "8")
        assert code == 2

    def test_new_only_needs_range(self, capsys):
        code, _, err = run(capsys, "coverage", "--n", "23", "--new-only")
        assert code == 2

    def test_machine_matches_text(self, capsys):
        _, out, _ = run(capsys, "coverage", "--n", "9")
        _, doc, _ = machine_doc(capsys, "coverage", "--n", "9")
        v = doc["result"]["verdicts"][0]
        assert v["n"] == 9
        assert v["is_new"] is False
        assert v["complement_prime"] is True
        assert v["product"]["base"] == 9
        assert "n=9" in out


class TestParsing:
    def test_unknown_command(self, capsys):
        assert cli.main(["bogus"]) == 2
        capsys.readouterr()

    def test_missing_required(self, capsys):
        assert cli.main(["construct"]) == 2
        capsys.readouterr()

    def test_coverage_requires_n_or_range(self, capsys):
        assert cli.main(["coverage"]) == 2
        capsys.readouterr()
