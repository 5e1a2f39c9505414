import json

import pytest

from snspectra.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


class TestVerifyCommand:
    def test_text_output(self, capsys, tmp_path, monkeypatch):
        monkeypatch.setenv("SNSPECTRA_CACHE_DIR", str(tmp_path))
        code, out = run_cli(capsys, "verify", "--theorem", "1A", "--n", "5", "--format", "text")
        assert code == 0
        assert "match" in out

    def test_json_output_with_range(self, capsys, tmp_path, monkeypatch):
        monkeypatch.setenv("SNSPECTRA_CACHE_DIR", str(tmp_path))
        code, out = run_cli(
            capsys, "verify", "--theorem", "42", "--n", "5-6", "--format", "json"
        )
        assert code == 0
        payload = json.loads(out)
        assert [o["params"]["n"] for o in payload] == [5, 6]
        assert all(o["outcome"] == "match" for o in payload)

    def test_quotient_theorem_with_r(self, capsys, tmp_path, monkeypatch):
        monkeypatch.setenv("SNSPECTRA_CACHE_DIR", str(tmp_path))
        code, out = run_cli(
            capsys, "verify", "--theorem", "13", "--n", "6", "--r", "2",
            "--method", "dense", "--format", "csv",
        )
        assert code == 0
        assert out.splitlines()[0].startswith("theorem,")

    def test_rejects_unknown_theorem(self, capsys):
        with pytest.raises(SystemExit):
            main(["verify", "--theorem", "9", "--n", "5"])


class TestSpectrumCommand:
    def test_dense(self, capsys):
        code, out = run_cli(
            capsys, "spectrum", "--group", "A", "--n", "5", "--set", "C(5,5)"
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["lambda1"] == 24.0
        assert payload["lambda2"] == 4.0

    def test_irrep(self, capsys):
        code, out = run_cli(
            capsys, "spectrum", "--group", "S", "--n", "5", "--set", "C(5,4)",
            "--method", "irrep",
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["lambda1"] == 30.0
        assert payload["lambda2"] == 6.0


class TestQuotientCommand:
    def test_matrix_and_eigenvalues(self, capsys):
        code, out = run_cli(
            capsys, "quotient", "--n", "6", "--k", "3", "--r", "2", "--which", "B1"
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["matrix"] == [[6, 2, 0], [1, 4, 3], [0, 2, 6]]
        assert payload["eigenvalues"] == [8, 6, 2]

    def test_csv_export(self, capsys, tmp_path):
        target = tmp_path / "b2.csv"
        code, out = run_cli(
            capsys, "quotient", "--n", "6", "--k", "3", "--r", "2",
            "--which", "B2", "--csv", str(target),
        )
        assert code == 0
        assert target.exists()


class TestCharacterCommand:
    def test_single_value(self, capsys, tmp_path, monkeypatch):
        monkeypatch.setenv("SNSPECTRA_CACHE_DIR", str(tmp_path))
        code, out = run_cli(
            capsys, "character", "--n", "6", "--diagram", "[4,1,1]", "--class", "[6]"
        )
        assert code == 0
        assert json.loads(out)["value"] == 1

    def test_table_to_stdout(self, capsys, tmp_path, monkeypatch):
        monkeypatch.setenv("SNSPECTRA_CACHE_DIR", str(tmp_path))
        code, out = run_cli(capsys, "character", "--n", "4")
        assert code == 0
        assert len(out.strip().splitlines()) == 6

    def test_cache_file_written(self, capsys, tmp_path, monkeypatch):
        monkeypatch.setenv("SNSPECTRA_CACHE_DIR", str(tmp_path))
        run_cli(capsys, "character", "--n", "5", "--diagram", "[3,2]", "--class", "[5]")
        assert list(tmp_path.glob("*.json"))


class TestEnumerateCommand:
    def test_lists_cycles(self, capsys):
        code, out = run_cli(capsys, "enumerate", "--set", "C(5,3;2)")
        assert code == 0
        lines = out.strip().splitlines()
        assert len(lines) == 6
        assert all(line.startswith("(") for line in lines)
