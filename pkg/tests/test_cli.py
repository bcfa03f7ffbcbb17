"""End-to-end tests of the jdist command line."""

import json

import pytest

from jdist.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestDist:
    def test_prints_value_and_case(self, capsys):
        code, out, _ = run(capsys, "dist", "--n", "5", "--k", "2", "--set", "2")
        assert code == 0
        assert out == "Dist(J(5,2)_{2}) = 3, case 3\n"

    def test_matching_family(self, capsys):
        code, out, _ = run(capsys, "dist", "--n", "8", "--k", "4", "--set", "4")
        assert code == 0
        assert out == "Dist(J(8,4)_{4}) = 9, case 8\n"

    def test_certificate_file(self, capsys, tmp_path):
        path = tmp_path / "cert.json"
        code, out, _ = run(capsys, "dist", "--n", "7", "--k", "3", "--set", "1",
                           "--certificate", str(path))
        assert code == 0
        doc = json.loads(path.read_text())
        assert doc["dist"] == 2
        assert doc["n"] == 7
        assert list(doc) == ["n", "k", "I", "dist", "coloring", "upper", "lower"]

    def test_spaces_in_set_accepted(self, capsys):
        code, out, _ = run(capsys, "dist", "--n", "7", "--k", "3", "--set", "1, 3")
        assert code == 0
        assert "Dist(J(7,3)_{1,3}) = 2" in out

    def test_bad_set_is_usage_error(self, capsys):
        code, _, err = run(capsys, "dist", "--n", "6", "--k", "3", "--set", "x")
        assert code == 2
        assert "error:" in err

    def test_out_of_range_distance(self, capsys):
        code, _, err = run(capsys, "dist", "--n", "6", "--k", "3", "--set", "5")
        assert code == 2


class TestVerify:
    def make_cert(self, capsys, tmp_path, *spec):
        path = tmp_path / "cert.json"
        n, k, s = spec
        code, _, _ = run(capsys, "dist", "--n", n, "--k", k, "--set", s,
                         "--certificate", str(path))
        assert code == 0
        return path

    def test_good_certificate(self, capsys, tmp_path):
        path = self.make_cert(capsys, tmp_path, "6", "3", "1")
        code, out, _ = run(capsys, "verify", "--certificate", str(path))
        assert code == 0
        assert out == "ok\n"

    def test_tampered_certificate(self, capsys, tmp_path):
        path = self.make_cert(capsys, tmp_path, "6", "3", "1")
        doc = json.loads(path.read_text())
        for entry in doc["coloring"]:
            entry["color"] = 1
        path.write_text(json.dumps(doc))
        code, out, _ = run(capsys, "verify", "--certificate", str(path))
        assert code == 1
        assert "automorphism" in out

    def test_missing_file(self, capsys, tmp_path):
        code, _, err = run(capsys, "verify", "--certificate",
                           str(tmp_path / "nope.json"))
        assert code == 2

    def test_malformed_json(self, capsys, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text("{oops")
        code, _, err = run(capsys, "verify", "--certificate", str(path))
        assert code == 2


class TestDetset:
    def test_builtin_family(self, capsys):
        code, out, _ = run(capsys, "detset", "--n", "9", "--k", "4", "--set", "1,4",
                           "--family")
        assert code == 0
        assert out.startswith("determining: yes")

    def test_vertex_file(self, capsys, tmp_path):
        path = tmp_path / "verts.txt"
        lines = ["1 2 3", "2 3 4", "3 4 5", "4 5 6", "5 6 7"]
        path.write_text("\n".join(lines) + "\n")
        code, out, _ = run(capsys, "detset", "--n", "7", "--k", "3", "--set", "1,3",
                           "--vertices", str(path))
        assert code == 0
        assert "determining: yes" in out

    def test_non_determining_set_reported(self, capsys, tmp_path):
        path = tmp_path / "verts.txt"
        path.write_text("1 2\n")
        code, out, _ = run(capsys, "detset", "--n", "5", "--k", "2", "--set", "2",
                           "--vertices", str(path))
        assert code == 0
        assert "determining: no" in out

    def test_family_not_covered(self, capsys):
        code, _, err = run(capsys, "detset", "--n", "6", "--k", "2", "--set", "1",
                           "--family")
        assert code == 2

    def test_wrong_subset_size(self, capsys, tmp_path):
        path = tmp_path / "verts.txt"
        path.write_text("1 2\n")
        code, _, err = run(capsys, "detset", "--n", "7", "--k", "3", "--set", "1",
                           "--vertices", str(path))
        assert code == 2


class TestAut:
    def test_classification(self, capsys):
        code, out, _ = run(capsys, "aut", "--n", "7", "--k", "3", "--set", "2")
        assert code == 0
        assert out.splitlines()[0] == "case 4: S_8"
        assert out.splitlines()[1] == "generators: 2 (complete)"

    def test_exceptional_incomplete(self, capsys):
        code, out, _ = run(capsys, "aut", "--n", "12", "--k", "4", "--set", "1,3")
        assert code == 0
        assert out.splitlines()[0] == "case 2: O10^-(2)"
        assert "incomplete" in out.splitlines()[1]

    def test_order(self, capsys):
        code, out, _ = run(capsys, "aut", "--n", "5", "--k", "2", "--set", "2",
                           "--order")
        assert code == 0
        assert out == "120\n"

    def test_order_with_stats(self, capsys):
        code, out, err = run(capsys, "aut", "--n", "5", "--k", "2", "--set", "2",
                             "--order", "--stats")
        assert code == 0
        assert out == "120\n"
        assert err.startswith("nodes: ")
        assert "time:" in err

    def test_budget_exhaustion_exit_code(self, capsys):
        code, _, err = run(capsys, "aut", "--n", "6", "--k", "3", "--set", "1",
                           "--order", "--stats", "--budget", "2")
        assert code == 3
        assert "error:" in err


class TestExport:
    def test_edgelist(self, capsys):
        code, out, _ = run(capsys, "export", "--n", "4", "--k", "2", "--set", "2")
        assert code == 0
        assert out == "1 6\n2 5\n3 4\n"

    def test_dimacs(self, capsys):
        code, out, _ = run(capsys, "export", "--n", "4", "--k", "2", "--set", "2",
                           "--format", "dimacs")
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "p edge 6 3"
        assert lines[1:] == ["e 1 6", "e 2 5", "e 3 4"]

    def test_output_file(self, capsys, tmp_path):
        path = tmp_path / "graph.txt"
        code, out, _ = run(capsys, "export", "--n", "5", "--k", "2", "--set", "2",
                           "--output", str(path))
        assert code == 0
        assert out == ""
        assert len(path.read_text().splitlines()) == 15


class TestCounts:
    def test_fixed_count(self, capsys):
        code, out, _ = run(capsys, "fixed-count", "--m", "4", "--perm",
                           "(1 2)(3 4)(5 6)(7 8)")
        assert code == 0
        assert out == "11\n"

    def test_fixed_count_transposition(self, capsys):
        code, out, _ = run(capsys, "fixed-count", "--m", "4", "--perm", "(1 2)")
        assert code == 0
        assert out == "15\n"

    def test_fixed_count_bad_cycles(self, capsys):
        code, _, err = run(capsys, "fixed-count", "--m", "3", "--perm", "(1 9)")
        assert code == 2

    def test_bound_unreduced(self, capsys):
        code, out, _ = run(capsys, "bound", "--m", "4")
        assert code == 0
        assert out == "40320/59049 < 1\n"

    def test_bound_too_small(self, capsys):
        code, _, err = run(capsys, "bound", "--m", "3")
        assert code == 2


class TestOracle:
    def test_petersen(self, capsys):
        code, out, _ = run(capsys, "oracle", "--n", "5", "--k", "2", "--set", "2",
                           "--max-r", "4")
        assert code == 0
        assert out == "3\n"

    def test_max_r_too_small(self, capsys):
        code, _, err = run(capsys, "oracle", "--n", "5", "--k", "2", "--set", "2",
                           "--max-r", "2")
        assert code == 2


class TestParser:
    def test_missing_subcommand_is_systemexit(self, capsys):
        with pytest.raises(SystemExit) as info:
            main([])
        assert info.value.code == 2

    def test_unknown_flag(self, capsys):
        with pytest.raises(SystemExit) as info:
            main(["dist", "--n", "5", "--k", "2", "--set", "1", "--bogus"])
        assert info.value.code == 2
