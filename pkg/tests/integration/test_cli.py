"""
Integration tests for the command-line front end.

Each test calls ``main`` with an argument list and reads the JSON written
to stdout.
"""

import json

import pytest

from spectrajoin.cli import main


@pytest.fixture(autouse=True)
def isolated_env(tmp_path, monkeypatch):
    """Cache in a temporary directory, default log level, one worker."""
    monkeypatch.setenv("SPECTRAJOIN_CACHE_DIR", str(tmp_path / "cache"))
    monkeypatch.setenv("SPECTRAJOIN_WORKERS", "1")
    monkeypatch.setenv("LOG_LEVEL", "WARNING")
    monkeypatch.chdir(tmp_path)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, *argv):
    code, out = run(capsys, *argv)
    return code, json.loads(out)


class TestGraphCommands:
    """Test join, matrix, charpoly and iso."""

    def test_join(self, capsys):
        """Test the NS join of P4 and P2."""
        code, data = run_json(capsys, "join", "--kind", "ns", "--g1", "P4", "--g2", "P2")
        assert code == 0
        assert (data["n"], data["edge_count"]) == (10, 18)

    def test_join_dot(self, capsys):
        """Test DOT output."""
        code, out = run(capsys, "join", "--kind", "plain", "--g1", "K1", "--g2", "K1", "--out", "dot")
        assert code == 0
        assert out.startswith("graph G {")
        assert "0 -- 1;" in out

    def test_matrix(self, capsys):
        """Test the exact adjacency matrix of K2."""
        code, data = run_json(capsys, "matrix", "--graph", "K2")
        assert code == 0
        assert data["rows"] == [["0", "1"], ["1", "0"]]

    def test_charpoly(self, capsys):
        """Test the charpoly of C4+K1."""
        code, data = run_json(capsys, "charpoly", "--graph", "C4+K1", "--matrix", "A")
        assert code == 0
        assert data["charpoly"] == "x^5 - 4x^3"
        assert data["coeffs"] == ["0", "0", "0", "-4", "0", "1"]

    def test_charpoly_of_join(self, capsys):
        """Test the NNS join of K2 and K1 is K3 plus two isolated vertices."""
        code, data = run_json(capsys, "charpoly", "--join", "nns", "K2", "K1")
        assert code == 0
        assert data["charpoly"] == "x^5 - 3x^3 - 2x^2"

    def test_iso(self, capsys):
        """Test C4 and K2,2 are isomorphic."""
        code, data = run_json(capsys, "iso", "--g1", "C4", "--g2", "K2,2")
        assert code == 0
        assert data["isomorphic"] is True
        assert sorted(data["witness"]) == [0, 1, 2, 3]

    def test_bad_graph_spec(self, capsys):
        """Test an unparsable spec exits 2 with a JSON error."""
        code, data = run_json(capsys, "charpoly", "--graph", "X9")
        assert code == 2
        assert "X9" in data["error"]

    def test_missing_target(self, capsys):
        """Test matrix without --graph or --join exits 2."""
        code, _ = run(capsys, "matrix")
        assert code == 2


class TestSpectrumCommand:
    """Test direct and closed-form spectra."""

    def test_direct(self, capsys):
        """Test the adjacency spectrum of K3."""
        code, data = run_json(capsys, "spectrum", "--graph", "K3")
        assert code == 0
        assert data["values"] == [-1.0, -1.0, 2.0]
        assert data["violations"] == []

    def test_closed_form(self, capsys):
        """Test a closed-form Laplacian spectrum."""
        code, data = run_json(
            capsys, "spectrum", "--join", "nns", "C4", "K2", "--matrix", "L", "--method", "closed-form"
        )
        assert code == 0
        assert len(data["values"]) == 10
        assert data["values"][0] == 0.0

    def test_closed_form_needs_join(self, capsys):
        """Test closed-form without --join exits 2."""
        code, _ = run(capsys, "spectrum", "--graph", "K3", "--method", "closed-form")
        assert code == 2

    def test_no_closed_form(self, capsys):
        """Test NS with A has no closed form."""
        code, data = run_json(
            capsys, "spectrum", "--join", "ns", "C4", "K2", "--method", "closed-form"
        )
        assert code == 2
        assert data["type"] == "PreconditionException"


class TestVerifyCommand:
    """Test theorem verification."""

    def test_fixed_inputs(self, capsys):
        """Test a charpoly theorem on P3 and K2."""
        code, data = run_json(capsys, "verify", "--theorem", "4.1a", "--g1", "P3", "--g2", "K2")
        assert code == 0
        assert data["passed"] is True

    def test_random_trials(self, capsys):
        """Test seeded random closed-form trials."""
        code, data = run_json(capsys, "verify", "--theorem", "6.1", "--random", "3", "--seed", "4")
        assert code == 0
        assert (data["passed"], data["failed"], data["seed"]) == (3, 0, 4)

    def test_missing_inputs(self, capsys):
        """Test verify without inputs exits 2."""
        code, _ = run(capsys, "verify", "--theorem", "4.1a")
        assert code == 2

    def test_non_regular_closed_form(self, capsys):
        """Test a closed-form theorem on a path exits 2."""
        code, _ = run(capsys, "verify", "--theorem", "6.1", "--g1", "P3", "--g2", "K2")
        assert code == 2

    def test_unknown_theorem(self, capsys):
        """Test argparse rejects an unknown theorem."""
        with pytest.raises(SystemExit):
            main(["verify", "--theorem", "9.9"])


class TestLabCommands:
    """Test nics, search, probe and reproduce."""

    def test_nics_precondition(self, capsys):
        """Test non-regular F and H exit 2."""
        code, data = run_json(capsys, "nics", "--template", "cor4.4a", "--inputs", "P3", "C4+K1", "K1,4")
        assert code == 2
        assert "regular" in data["error"]

    def test_nics_wrong_arity(self, capsys):
        """Test the input count is checked."""
        code, _ = run(capsys, "nics", "--template", "cor5.2", "--inputs", "C4", "C4")
        assert code == 2

    def test_search_small(self, capsys, tmp_path):
        """Test cubic graphs on six vertices are determined by their spectrum."""
        code, data = run_json(capsys, "search", "--n", "6", "--r", "3")
        assert code == 0
        assert data["determined_by_spectrum"] is True
        assert data["results"][0]["classes"] == 2
        assert (tmp_path / "cache" / "search-n6-r3.json").exists()

    def test_search_all_degrees(self, capsys):
        """Test every admissible degree is listed."""
        code, data = run_json(capsys, "search", "--n", "5")
        assert code == 0
        assert [entry["r"] for entry in data["results"]] == [0, 2, 4]

    def test_search_too_large(self, capsys):
        """Test the size limit exits 2."""
        code, _ = run(capsys, "search", "--n", "11", "--r", "3")
        assert code == 2

    def test_probe_needs_pair(self, capsys):
        """Test probe without a pair exits 2."""
        code, _ = run(capsys, "probe", "--g", "P3")
        assert code == 2

    def test_reproduce_one_example(self, capsys):
        """Test a single published spectrum."""
        code, data = run_json(capsys, "reproduce", "--example", "k2-nns-h")
        assert code == 0
        assert data["shared_charpoly"] == "x^5 - 4x^3"
        assert [e["id"] for e in data["entries"]] == ["k2-nns-h"]
        assert not any(data["joins_still_cospectral"].values())

    def test_reproduce_unknown(self, capsys):
        """Test an unknown example exits 2."""
        code, _ = run(capsys, "reproduce", "--example", "fig1")
        assert code == 2


class TestConfiguration:
    """Test configuration errors."""

    def test_invalid_log_level(self, capsys, monkeypatch):
        """Test a bad LOG_LEVEL exits 2."""
        monkeypatch.setenv("LOG_LEVEL", "LOUD")
        assert main(["iso", "--g1", "K1", "--g2", "K1"]) == 2


@pytest.mark.slow
class TestFoundPair:
    """Test commands that need the ten-vertex pair."""

    def test_nics_with_found_pair(self, capsys):
        """Test cor5.2 with C4, C4 and the found pair."""
        code, data = run_json(capsys, "nics", "--template", "cor5.2", "--inputs", "C4", "C4", "--found-pair")
        assert code == 0
        assert data["nics"] is True

    def test_reproduce_figures(self, capsys):
        """Test both figures are rebuilt and certified."""
        code, data = run_json(capsys, "reproduce", "--example", "all")
        assert code == 0
        assert all(fig["nics"] for fig in data["figures"].values())
        assert all(entry["passed"] for entry in data["entries"])
