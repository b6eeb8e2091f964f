"""Command-line interface: subcommands, exit codes, output determinism."""

from __future__ import annotations

from plumcalc.cli import main


def run(capsys, *argv: str) -> tuple[int, str, str]:
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_club(capsys):
    code, out, _ = run(capsys, "club", "3", "7")
    assert (code, out) == (0, "1\n")
    code, out, _ = run(capsys, "club", "7", "7")
    assert (code, out) == (0, "-1\n")


def test_carry(capsys):
    code, out, _ = run(capsys, "carry", "5", "7")
    assert (code, out) == (0, "4\n")


def test_wedge_two_digit_pair(capsys):
    code, out, _ = run(capsys, "wedge", "35", "7")
    assert (code, out) == (0, "5\n")
    code, out, _ = run(capsys, "wedge", "74", "2")
    assert (code, out) == (0, "-5\n")
    code, out, _ = run(capsys, "wedge", "5", "7")  # short pair means a=0
    assert code == 0 and out == f"{0 + 4}\n"


def test_wedge_rejects_long_pair(capsys):
    code, _, err = run(capsys, "wedge", "123", "7")
    assert code == 1 and "error" in err


def test_table_text_and_csv(capsys):
    code, out, _ = run(capsys, "table", "2")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0].endswith("(c=2)") and len(lines) == 11
    code, csv_out, _ = run(capsys, "table", "9", "--csv")
    assert code == 0
    assert csv_out.splitlines()[0] == "a,b,value"
    assert "7,9,11" in csv_out


def test_table_rejects_zero(capsys):
    code, _, err = run(capsys, "table", "0")
    assert code == 1 and "error" in err


def test_mul_all_methods_agree(capsys):
    outputs = set()
    for method in ("cross", "plum", "wedge", "oracle"):
        code, out, _ = run(capsys, "mul", "348", "697", "--method", method)
        assert code == 0
        outputs.add(out)
    assert outputs == {"242556\n"}


def test_mul_default_and_grouped_input(capsys):
    code, out, _ = run(capsys, "mul", "35 649 758", "9")
    assert (code, out) == (0, "320847822\n")


def test_mul_segmented(capsys):
    code, out, _ = run(capsys, "mul", "2976", "2924", "--method", "cross", "--segment", "2")
    assert (code, out) == (0, "8701824\n")
    code, _, err = run(capsys, "mul", "12", "34", "--method", "plum", "--segment", "2")
    assert code == 1 and "segment" in err


def test_mul_trace(capsys):
    code, out, _ = run(capsys, "mul", "348", "697", "--method", "wedge", "--trace")
    assert code == 0
    assert "(2,4,2,5,6,-4)" in out
    assert "242556" in out
    code, out, _ = run(capsys, "mul", "348", "697", "--method", "wedge", "--trace", "--ascii")
    assert code == 0 and out.isascii()


def test_mul_rejects_negative(capsys):
    code, _, err = run(capsys, "mul", "-3", "4")
    assert code == 1 and "error" in err


def test_div_plain_and_decimal(capsys):
    code, out, _ = run(capsys, "div", "56789", "369")
    assert (code, out) == (0, "153 r 332\n")
    code, out, _ = run(capsys, "div", "56789", "369", "--decimals", "2")
    assert (code, out) == (0, "153.89 r 359\n")
    code, out, _ = run(capsys, "div", "242558", "697", "--method", "wedge")
    assert (code, out) == (0, "348 r 2\n")
    code, out, _ = run(capsys, "div", "56789", "369", "--method", "oracle")
    assert (code, out) == (0, "153 r 332\n")
    code, out, _ = run(capsys, "div", "56789", "369", "--method", "oracle", "--decimals", "2")
    assert (code, out) == (0, "153.89 r 359\n")


def test_div_trace(capsys):
    code, out, _ = run(capsys, "div", "242558", "697", "--method", "wedge", "--trace")
    assert code == 0
    assert "697 ) 242558" in out
    assert out.rstrip().endswith("348 r 2")


def test_div_by_zero_exits_2(capsys):
    code, _, err = run(capsys, "div", "5", "0")
    assert code == 2 and err.strip()


def test_methods_agree_across_cli(capsys):
    results = set()
    for method in ("plum", "wedge", "oracle"):
        code, out, _ = run(capsys, "div", "2728018", "3456", "--method", method)
        assert code == 0
        results.add(out)
    assert results == {"789 r 1234\n"}


def test_verify_single_suite(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "carry-theorem")
    assert code == 0
    assert "PASS carry-closed-form (81 cases)" in out
    assert "1 laws checked: all hold" in out


def test_verify_table_patterns_records_known_discrepancies(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "table-patterns")
    assert code == 0
    assert out.count("PASS") == 20  # one line per pattern statement
    assert "fails exactly at b=4" in out


def test_verify_equiv_suites_small(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "mul-equiv", "--limit", "40", "--random-pairs", "5")
    assert code == 0
    assert "mul-equiv-exhaustive" in out
    code, out, _ = run(capsys, "verify", "--suite", "div-equiv", "--limit", "30", "--random-pairs", "5")
    assert code == 0
    assert "div-equiv-one-sided" in out


def test_usage_error_exits_1(capsys):
    code, _, _ = run(capsys, "mul", "123")
    assert code == 1
    code, _, _ = run(capsys, "nonsense")
    assert code == 1


def test_bench_csv_stdout_and_file(capsys, tmp_path):
    code, out, _ = run(capsys, "bench", "--sizes", "2", "4", "--trials", "2", "--seed", "5", "--methods", "plum")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0].startswith("method,size,trials")
    assert len(lines) == 3

    target = tmp_path / "bench.csv"
    code, out, _ = run(capsys, "bench", "--sizes", "2", "--trials", "2", "--seed", "5", "--methods", "plum", "--csv", str(target))
    assert code == 0 and out == ""
    assert target.read_text().startswith("method,size,trials")


def test_cli_output_byte_identical(capsys):
    _, first, _ = run(capsys, "mul", "348", "697", "--trace")
    _, second, _ = run(capsys, "mul", "348", "697", "--trace")
    assert first == second
