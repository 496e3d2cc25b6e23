import pytest
import json
import os
import sys

# Needed when running mpiexec. Be sure to run from tests directory.
if 'PYTHONPATH' not in os.environ:

    base_path = os.path.abspath('..')

    sys.path.insert(0, base_path)

from NicholsPy.cli import main
from tests.testing_scripts.braidings import spec_path


def run(capsys, *argv):
    """
    Runs the command line and returns (exit code, parsed stdout, stderr).
    """
    code = main(list(argv))
    captured = capsys.readouterr()
    output = json.loads(captured.out) if captured.out else None
    return code, output, captured.err


def test_lyndon(capsys):

    code, output, _ = run(capsys, "lyndon", "3", "4")

    assert code == 0
    assert output == {"m": [3, 4], "lyndon": 5, "necklaces": 5, "N": 6,
                      "gcd": 1}


def test_lyndon_words(capsys):

    code, output, _ = run(capsys, "lyndon", "2", "4", "--words")

    assert code == 0
    assert output["lyndon"] == 2
    assert output["necklaces"] == 3
    assert output["words"] == ["112222", "121222"]


def test_lyndon_all_upto(capsys):

    code, output, _ = run(capsys, "lyndon", "--all-upto", "3", "--n", "2")

    assert code == 0
    assert len(output) == 2 + 3 + 4
    assert output[0] == {"m": [0, 1], "lyndon": 1, "necklaces": 1,
                         "N": None, "gcd": 1}


@pytest.mark.parametrize("argv", [
    ["lyndon", "1", "1", "--all-upto", "3"],
    ["lyndon", "0", "0"],
    ["lyndon", "-1", "2"],
    ["lyndon"],
])
def test_lyndon_usage_errors(capsys, argv):

    code, output, err = run(capsys, *argv)

    assert code == 1
    assert output is None
    assert "usage error" in err


def test_poly_pm(capsys):

    code, output, _ = run(capsys, "poly", "3", "4")

    assert code == 0
    assert output["m"] == [3, 4]
    assert output["case"]["tag"] == "(3,4)"
    assert output["pm"]
    assert output["terms"]


def test_poly_pm_string(capsys):

    code, output, _ = run(capsys, "poly", "1", "2", "--pm")

    assert code == 0
    assert output["pm"] == "1 - p[2][2]*p[1][2]*p[2][1]"


def test_poly_qm(capsys):

    code, output, _ = run(capsys, "poly", "3", "4", "--qm")

    assert code == 0
    assert output["N"] == 6
    assert output["qm"] == "p[1][1]*p[2][2]^2*p[1][2]^2*p[2][1]^2"


def test_poly_factors(capsys):

    code, output, _ = run(capsys, "poly", "3", "4", "--factors")

    assert code == 0
    assert output["am"]["multiplicities"] == {"1": 2, "2": 1, "3": 1}
    assert output["am"]["sign"] == 1
    assert output["cofactor"]["multiplicities"] == {"1": 1}


def test_poly_am(capsys):

    code, output, _ = run(capsys, "poly", "4", "4", "--am")

    assert code == 0
    assert output["form"]["multiplicities"] == {"2": 1, "4": 2}


def test_poly_needs_two_letters(capsys):

    code, _, err = run(capsys, "poly", "1", "0")
    assert code == 1
    assert "|m| >= 2" in err


def test_poly_flags_are_exclusive(capsys):

    code, _, _ = run(capsys, "poly", "2", "2", "--am", "--qm")
    assert code == 1


def test_free_final_example(capsys):

    code, output, _ = run(capsys, "free", spec_path("zeta5.json"),
                          "--maxdeg", "7")

    assert code == 2
    assert output["verdict"] == "not-free"
    assert output["witnesses"] == [[0, 5], [5, 0], [3, 4], [4, 3]]


def test_free_up_to_bound(capsys):

    code, output, err = run(capsys, "free", spec_path("zeta5.json"),
                            "--maxdeg", "4")

    assert code == 0
    assert output["verdict"] == "free-up-to-D"
    assert output["witnesses"] == []
    assert "warning" in err


def test_free_verify(capsys):

    code, output, _ = run(capsys, "free", spec_path("pair_one.json"),
                          "--maxdeg", "2", "--verify")

    assert code == 2
    assert output["witnesses"] == [[1, 1]]
    assert output["kernels"] == [{"m": [1, 1], "d": 1, "d_prime": 1,
                                  "n1": 2, "n2": 1,
                                  "kernel_dim_formula": 1,
                                  "kernel_dim_bruteforce": 1,
                                  "relation_dim": 1}]


def test_kernel_final_example(capsys):

    code, output, _ = run(capsys, "kernel", spec_path("zeta5.json"),
                          "3", "4", "--brute")

    assert code == 0
    assert (output["d"], output["d_prime"]) == (1, 6)
    assert (output["n1"], output["n2"]) == (7, 5)
    assert output["kernel_dim_formula"] == 2
    assert output["kernel_dim_bruteforce"] == 2
    assert output["relation_dim"] == 2


def test_kernel_dump(capsys):

    code, output, _ = run(capsys, "kernel", spec_path("pair_one.json"),
                          "1", "1", "--dump")

    assert code == 0
    assert output["kernel_dim_formula"] == 1

    def scalar(value):
        return {"field": "cyclotomic", "N": 1, "coeffs": [value]}

    # S_{1,1} = 1 + sigma_1 with q_12 = 3 and q_21 = 1/3.
    assert output["matrix"] == {"basis": ["12", "21"],
                                "rows": [[scalar("1"), scalar("1/3")],
                                         [scalar("3"), scalar("1")]]}


def test_kernel_without_dump(capsys):

    _, output, _ = run(capsys, "kernel", spec_path("pair_one.json"),
                       "1", "1")
    assert "matrix" not in output


def test_kernel_without_brute_force(capsys):

    code, output, _ = run(capsys, "kernel", spec_path("minus_one.json"),
                          "2", "0")

    assert code == 0
    assert output["kernel_dim_formula"] == 1
    assert output["kernel_dim_bruteforce"] is None


def test_kernel_hypothesis_error(capsys):

    code, output, err = run(capsys, "kernel", spec_path("zeta5.json"),
                            "2", "2")

    assert code == 1
    assert output is None
    error = json.loads(err)
    assert error["reason"] == "P_m(q) != 0"
    assert error["degree"] == [2, 2]


def test_kernel_lower_zero(capsys):

    code, _, err = run(capsys, "kernel", spec_path("diagonal_one.json"),
                       "2", "2")

    assert code == 1
    assert json.loads(err)["degree"] == [1, 1]


def test_dioph(capsys):

    code, output, _ = run(capsys, "dioph", spec_path("family_1_1.json"),
                          "--box", "10")

    assert code == 0
    assert output["solutions"] == [[1, 2], [2, 1]]
    assert output["confirmed"] == [True, True]


def test_dioph_empty(capsys):

    code, output, _ = run(capsys, "dioph", spec_path("family_2_1.json"))

    assert code == 0
    assert output["box"] == 50
    assert output["solutions"] == []


@pytest.mark.parametrize("name", ["zeta5.json", "minus_one.json"])
def test_dioph_needs_transcendental_exponents(capsys, name):

    code, _, err = run(capsys, "dioph", spec_path(name))
    assert code == 1
    assert err.startswith("error:")


def test_malformed_spec(capsys):

    code, output, err = run(capsys, "free", spec_path("malformed.json"))

    assert code == 1
    assert output is None
    assert "line" in err and "column" in err


def test_zero_entry_spec(capsys):

    code, _, err = run(capsys, "free", spec_path("zero_entry.json"))
    assert code == 1
    assert "nonzero" in err


def test_missing_spec(capsys):

    code, _, _ = run(capsys, "free", spec_path("no_such_file.json"))
    assert code == 1


@pytest.mark.parametrize("argv", [[], ["frobnicate"], ["free"],
                                  ["--seed", "zz", "lyndon", "1"]])
def test_bad_usage(capsys, argv):

    code, output, _ = run(capsys, *argv)
    assert code == 1
    assert output is None


def test_seed_is_reported(capsys):

    code, _, err = run(capsys, "--seed", "0x10", "lyndon", "1", "1")

    assert code == 0
    assert "seed: 0x10" in err


def test_default_seed_is_quiet(capsys):

    code, _, err = run(capsys, "lyndon", "1", "1")

    assert code == 0
    assert err == ""


def test_selftest(capsys):

    code, output, err = run(capsys, "selftest", "--random", "1")

    assert code == 0
    assert output["passed"]
    assert all(output["checks"].values())
    assert output["seed"] == 0x41C4
    assert "seed: 0x41C4" in err
