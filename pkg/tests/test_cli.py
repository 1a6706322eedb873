import random

import pytest

from cyclorbit.cli import (
    EXIT_BOUND,
    EXIT_INPUT,
    EXIT_NO,
    EXIT_YES,
    InstanceError,
    main,
    parse_instance_text,
)

EXAMPLE = """\
# the worked two-cycle instance
n 9
alphabet 01
perm (6,5,7,3,2,1)(4,8)
v 010001111
w 101110001
"""


def write(tmp_path, name, text):
    path = tmp_path / name
    path.write_text(text)
    return str(path)


def test_parse_instance():
    inst = parse_instance_text(EXAMPLE)
    assert inst.n == 9
    assert inst.alphabet == "01"
    assert len(inst.g.cycles) == 2
    assert inst.v == "010001111"


def test_parse_instance_errors():
    cases = [
        ("n 2\nalphabet 01\nperm \nv 01\n", "missing key 'w'"),
        ("n x\nalphabet 01\nperm \nv 01\nw 01\n", "line 1"),
        ("n 2\nalphabet 011\nperm \nv 01\nw 01\n", "repeated"),
        ("n 2\nalphabet 01\nperm (1,3)\nv 01\nw 01\n", "line 3"),
        ("n 2\nalphabet 01\nperm \nv 012\nw 01\n", "length"),
        ("n 2\nalphabet 01\nperm \nv 0x\nw 01\n", "position 1"),
        ("n 2\nalphabet 01\nperm \nv 01\nw 01\nv 10\n", "duplicate"),
        ("bogus 3\n", "unknown key"),
    ]
    for text, fragment in cases:
        with pytest.raises(InstanceError) as exc:
            parse_instance_text(text)
        assert fragment in str(exc.value), text


def test_solve_yes(tmp_path, capsys):
    path = write(tmp_path, "inst.txt", EXAMPLE)
    assert main(["solve", path]) == EXIT_YES
    assert capsys.readouterr().out.strip() == "YES r=1 solutions=1+2Z"


def test_solve_no(tmp_path, capsys):
    text = EXAMPLE.replace("w 101110001", "w 101110000")
    path = write(tmp_path, "inst.txt", text)
    assert main(["solve", path]) == EXIT_NO
    assert capsys.readouterr().out.strip() == "NO"


def test_oracle_matches_solve_output(tmp_path, capsys):
    path = write(tmp_path, "inst.txt", EXAMPLE)
    main(["solve", path])
    solve_out = capsys.readouterr().out
    assert main(["oracle", path]) == EXIT_YES
    assert capsys.readouterr().out == solve_out


def test_oracle_bound(tmp_path, capsys):
    lines = ["n 28", "alphabet 01", "perm (1,2)(3,4,5)(6,7,8,9,10)(11,12,13,14,15,16,17)"
             "(18,19,20,21,22,23,24,25,26,27,28)", "v " + "0" * 28, "w " + "0" * 28]
    path = write(tmp_path, "inst.txt", "\n".join(lines) + "\n")
    assert main(["oracle", path, "--bound", "100"]) == EXIT_BOUND
    err = capsys.readouterr().err
    assert "2310" in err
    assert main(["oracle", path]) == EXIT_YES


def test_solve_malformed(tmp_path, capsys):
    path = write(tmp_path, "inst.txt", "n 2\nalphabet 01\nperm (1,2\nv 01\nw 10\n")
    assert main(["solve", path]) == EXIT_INPUT
    assert "error:" in capsys.readouterr().err


def test_solve_missing_file(capsys):
    assert main(["solve", "/nonexistent/instance.txt"]) == EXIT_INPUT
    assert "error:" in capsys.readouterr().err


def test_congruence_command(tmp_path, capsys):
    path = write(tmp_path, "sys.txt", "1 mod 2\n1 mod 3\n")
    assert main(["congruence", path]) == EXIT_YES
    assert capsys.readouterr().out.strip() == "1 + 6 Z"
    path = write(tmp_path, "bad.txt", "0 mod 2\n1 mod 2\n")
    assert main(["congruence", path]) == EXIT_NO
    assert capsys.readouterr().out.strip() == "EMPTY"
    path = write(tmp_path, "oops.txt", "1 mod\n")
    assert main(["congruence", path]) == EXIT_INPUT
    assert "line 1" in capsys.readouterr().err


def test_crt_check_command(tmp_path, capsys):
    path = write(tmp_path, "sys.txt", "2 mod 4\n0 mod 6\n")
    assert main(["crt-check", path]) == EXIT_YES
    out = capsys.readouterr().out
    assert out.startswith("SOLVABLE")
    assert "p_max=3" in out and "e_max=2" in out
    path = write(tmp_path, "sys2.txt", "1 mod 4\n3 mod 8\n")
    assert main(["crt-check", path, "--verbose"]) == EXIT_NO
    out = capsys.readouterr().out
    assert out.startswith("UNSOLVABLE")


def test_stirling_command(capsys):
    assert main(["stirling", "--max-n", "25"]) == EXIT_YES
    out = capsys.readouterr().out
    assert out.startswith("OK")
    assert "125" in out  # 5 identities x 25 values


def test_stirling_ratios(capsys):
    assert main(["stirling", "--max-n", "10", "--ratios", "12"]) == EXIT_YES
    out = capsys.readouterr().out
    assert "E[K^3]/ln(n)^3" in out


def test_bench_primorial_csv(tmp_path, capsys):
    csv_path = tmp_path / "rows.csv"
    assert main(["bench", "--mode", "primorial", "--max-i", "4",
                 "--repeats", "1", "--seed", "9", "--csv", str(csv_path)]) == EXIT_YES
    out = capsys.readouterr().out
    assert "ops/bit band" in out
    lines = csv_path.read_text().strip().splitlines()
    assert lines[0].startswith("label,")
    assert len(lines) == 5


def test_bench_average_csv(tmp_path, capsys):
    csv_path = tmp_path / "avg.csv"
    assert main(["bench", "--mode", "average", "--n", "20", "--trials", "30",
                 "--seed", "4", "--csv", str(csv_path)]) == EXIT_YES
    assert "mean_cycles=" in capsys.readouterr().out
    lines = csv_path.read_text().strip().splitlines()
    assert lines[0] == "n,trial,k_cycles,word_ops,max_bits"
    assert len(lines) == 31


def test_bench_backends(capsys):
    assert main(["bench", "--mode", "backends", "--seed", "2"]) == EXIT_YES
    out = capsys.readouterr().out
    assert "kmp_search_count" in out


def test_fuzzed_instances_never_crash(tmp_path, capsys):
    rng = random.Random(20260816)
    pieces = ["n", "alphabet", "perm", "v", "w", "(", ")", ",", "1", "2", "0",
              "01", "mod", "#", " ", "\n", "(1,2)", "abc", "-3", "9" * 40]
    for trial in range(300):
        text = "".join(rng.choice(pieces) for _ in range(rng.randrange(0, 40)))
        path = write(tmp_path, f"fuzz_{trial}.txt", text)
        code = main(["solve", path])
        assert code in (EXIT_YES, EXIT_NO, EXIT_INPUT)
        capsys.readouterr()
    for trial in range(100):
        text = "".join(rng.choice(pieces) for _ in range(rng.randrange(0, 30)))
        path = write(tmp_path, f"fuzz_sys_{trial}.txt", text)
        code = main(["congruence", path])
        assert code in (EXIT_YES, EXIT_NO, EXIT_INPUT)
        capsys.readouterr()
