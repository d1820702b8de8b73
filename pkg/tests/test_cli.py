import json

import pytest

from lzeros.cli import EXIT_ERROR, EXIT_OK, EXIT_USAGE, main

import golden


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestSolveCommand:
    def test_table_output(self, capsys):
        code, out, _ = run(capsys, "solve", "zeta", "--n", "1",
                           "--digits", "20")
        assert code == EXIT_OK
        assert "14.13472514173469379" in out

    def test_csv_output(self, capsys):
        code, out, _ = run(capsys, "solve", "zeta", "--n", "1:2",
                           "--digits", "15", "--format", "csv")
        assert code == EXIT_OK
        lines = out.strip().splitlines()
        assert lines[0] == "family_id,n,mode,digits,t_n,residual"
        assert len(lines) == 3
        assert lines[1].startswith("zeta,1,exact,")

    def test_json_output(self, capsys):
        code, out, _ = run(capsys, "solve", "zeta", "--n", "2",
                           "--digits", "15", "--format", "json")
        assert code == EXIT_OK
        data = json.loads(out)
        assert data[0]["n"] == 2
        assert data[0]["t_n"].startswith("21.0220396387715")

    def test_warm_cache_rerun_byte_identical(self, capsys):
        args = ("solve", "zeta", "--n", "1", "--digits", "20",
                "--format", "csv")
        code1, out1, _ = run(capsys, *args)
        code2, out2, _ = run(capsys, *args)
        assert code1 == code2 == EXIT_OK
        assert out1 == out2

    def test_cache_read_at_lower_digits(self, capsys):
        run(capsys, "solve", "zeta", "--n", "1", "--digits", "40")
        code, out, _ = run(capsys, "solve", "zeta", "--n", "1",
                           "--digits", "20", "--no-solve")
        assert code == EXIT_OK
        assert "14.13472514173469379046" in out

    def test_no_solve_on_cold_cache(self, capsys):
        code, _, err = run(capsys, "solve", "zeta", "--n", "90",
                           "--digits", "30", "--no-solve")
        assert code == EXIT_ERROR
        assert "cache miss" in err

    def test_dirichlet_selector(self, capsys):
        code, out, _ = run(capsys, "solve", "dirichlet", "--k", "7",
                           "--j", "2", "--n", "1", "--digits", "15")
        assert code == EXIT_OK
        assert out.split("t=")[1].startswith(
            golden.DIRICHLET_7_2[1][:15])

    def test_dirichlet_values_selector(self, capsys, tmp_path):
        table = tmp_path / "chi.txt"
        table.write_text(
            "1,1\n2,e(2/6)\n3,e(1/6)\n4,e(4/6)\n5,e(5/6)\n6,e(3/6)\n7,0\n")
        code, out, _ = run(capsys, "solve", "dirichlet-values",
                           "--values", str(table), "--n", "1",
                           "--digits", "15")
        assert code == EXIT_OK


class TestOtherCommands:
    def test_count_csv(self, capsys):
        code, out, _ = run(capsys, "count", "zeta", "--T", "100:101",
                           "--step", "0.5")
        assert code == EXIT_OK
        lines = out.strip().splitlines()
        assert lines[0] == "T,N0,N,S"
        assert lines[1].startswith("100.000000,29.")

    def test_gue_csv(self, capsys):
        code, out, _ = run(capsys, "gue", "zeta", "--N", "150",
                           "--bin", "0.5")
        assert code == EXIT_OK
        assert out.splitlines()[0] == "x_mid,empirical,kernel"

    def test_primes_csv(self, capsys):
        code, out, _ = run(capsys, "primes", "zeta", "--zeros", "20",
                           "--x", "2:5")
        assert code == EXIT_OK
        lines = out.strip().splitlines()
        assert lines[0] == "x,pi_reconstructed,pi_exact"
        assert lines[1].endswith(",1")


class TestUsageErrors:
    def test_unknown_command(self, capsys):
        assert run(capsys, "frobnicate")[0] == EXIT_USAGE

    def test_digits_floor(self, capsys):
        assert run(capsys, "solve", "zeta", "--n", "1",
                   "--digits", "5")[0] == EXIT_USAGE

    def test_dirichlet_without_character(self, capsys):
        assert run(capsys, "solve", "dirichlet", "--n", "1")[0] == EXIT_USAGE

    def test_missing_n(self, capsys):
        assert run(capsys, "solve", "zeta")[0] == EXIT_USAGE
