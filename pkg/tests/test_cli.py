"""Exit-code contract and output shape of the command line front end.

Everything runs in-process through main(argv): 0 verified, 1 failed,
2 window too small to decide, 3 usage.
"""

import json

import pytest

from grfilt.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_hilbert_text_table(capsys):
    code, out, err = run(capsys, "hilbert", "--depth", "6")
    assert code == 0
    assert "H(6) = 18" in out
    assert "layer dims" in out
    assert err == ""


def test_hilbert_json_parses(capsys):
    code, out, _ = run(capsys, "--format", "json", "hilbert", "--depth", "6")
    assert code == 0
    payload = json.loads(out)
    assert payload["ring"] == "R_2x2"
    assert payload["hilbert"]["values"] == [1, 3, 6, 9, 12, 15, 18]


def test_hilbert_quotient_flag(capsys):
    # no --degcap: the cap is sized from the depth, with enough slack
    # for the ideal to saturate past the deepest layer
    code, out, _ = run(capsys, "--format", "json", "hilbert",
                       "--quotient", "beta", "--depth", "6")
    assert code == 0
    payload = json.loads(out)
    assert payload["quotient"]["seeds"] == ["beta"]
    assert payload["hilbert"]["values"] == [1, 2, 3, 4, 5, 6, 7]


def test_hilbert_weak_adic_series_ring(capsys):
    code, out, _ = run(capsys, "--format", "json", "hilbert",
                       "--ring", "R_prime", "--kind", "weak-adic",
                       "--depth", "6")
    assert code == 0
    payload = json.loads(out)
    assert payload["hilbert"]["values"] == [0, 1, 3, 5, 7, 9, 11]


def test_hilbert_depth_past_default_cap(capsys):
    # without --degcap the cap follows the depth, so this succeeds
    code, out, _ = run(capsys, "--format", "json", "hilbert",
                       "--depth", "8")
    assert code == 0
    payload = json.loads(out)
    assert payload["hilbert"]["values"] == [1, 3, 6, 9, 12, 15, 18, 21, 24]


def test_hilbert_explicit_cap_too_small_is_inconclusive(capsys):
    code, _, err = run(capsys, "hilbert", "--depth", "40",
                       "--degcap", "12")
    assert code == 2
    assert "inconclusive at this depth" in err


def test_global_flags_after_subcommand(capsys):
    code, out, _ = run(capsys, "hilbert", "--depth", "6",
                       "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["hilbert"]["values"] == [1, 3, 6, 9, 12, 15, 18]


def test_weak_adic_on_polynomial_ring_is_usage_error(capsys):
    code, _, err = run(capsys, "hilbert", "--kind", "weak-adic")
    assert code == 3
    assert "usage error" in err
    assert "series" in err


def test_composite_characteristic_is_usage_error(capsys):
    code, _, err = run(capsys, "--field", "Fp:6", "hilbert")
    assert code == 3
    assert "not prime" in err


def test_unknown_ring_is_usage_error(capsys):
    code, _, _ = run(capsys, "hilbert", "--ring", "nonsense")
    assert code == 3


def test_missing_subcommand_is_usage_error(capsys):
    code, _, _ = run(capsys)
    assert code == 3


def test_help_exits_clean(capsys):
    code, out, _ = run(capsys, "--help")
    assert code == 0
    assert "hilbert" in out and "dualize" in out


def test_gr_symbols(capsys):
    code, out, _ = run(capsys, "--format", "json", "gr", "--depth", "6")
    assert code == 0
    payload = json.loads(out)
    assert payload["symbols"] == ["alpha", "beta"]
    assert payload["symbol_degree"] == 1


def test_ranks_certifies_one_and_two(capsys):
    code, out, _ = run(capsys, "--format", "json", "ranks", "--depth", "8")
    assert code == 0
    payload = json.loads(out)
    assert payload["sides"]["left"]["free"]["rank"] == 1
    assert payload["sides"]["right"]["free"]["rank"] == 2
    assert payload["actions_commute"] is True


def test_ranks_shallow_depth_is_inconclusive(capsys):
    code, out, _ = run(capsys, "ranks", "--depth", "1")
    assert code == 2
    assert "inconclusive" in out


def test_certify_two_sided_default(capsys):
    code, out, _ = run(capsys, "--format", "json", "certify")
    assert code == 0
    payload = json.loads(out)
    assert payload["verified"] is True
    assert payload["consistent"] is True


def test_certify_single_case_lists_witnesses(capsys):
    code, out, _ = run(capsys, "certify", "--case", "ascending",
                       "--depth", "8")
    assert code == 0
    assert "obstruction rows" in out
    assert "certificate re-verified: True" in out


def test_certify_shallow_depth_is_inconclusive(capsys):
    code, _, err = run(capsys, "certify", "--case", "ascending",
                       "--depth", "2")
    assert code == 2
    assert "not certified at this depth" in err


def test_chain_standard_left(capsys):
    code, out, _ = run(capsys, "--format", "json", "chain", "--steps", "4")
    assert code == 0
    payload = json.loads(out)
    assert payload["side"] == "left"
    assert payload["strictly_ascending"] is True
    assert payload["reverified"] is True


def test_chain_weak_adic_right(capsys):
    code, out, _ = run(capsys, "--format", "json", "chain",
                       "--kind", "weak-adic", "--steps", "5")
    assert code == 0
    payload = json.loads(out)
    assert payload["side"] == "right"
    assert payload["ideal_dims"] == [1, 2, 3, 4, 5]


def test_dualize_verifies(capsys):
    code, out, _ = run(capsys, "dualize", "--degcap", "12")
    assert code == 0
    assert "aborted at: None" in out
    assert "verified: True" in out


def test_dualize_control_demands_abort(capsys):
    code, out, _ = run(capsys, "dualize", "--control", "--degcap", "12")
    assert code == 0
    assert "endomorphism-ring: failed" in out
    assert "kernel witness" in out
    assert "control satisfied: True" in out


def test_quotient_iso(capsys):
    code, out, _ = run(capsys, "--format", "json", "quotient-iso")
    assert code == 0
    payload = json.loads(out)
    assert payload["consistent"] is True
    assert payload["dim_a"] == payload["dim_b"] == payload["dim_joint"]


def test_out_flag_writes_file(tmp_path, capsys):
    target = tmp_path / "report.json"
    code, out, _ = run(capsys, "--format", "json", "--out", str(target),
                       "hilbert", "--depth", "4")
    assert code == 0
    assert out == ""
    payload = json.loads(target.read_text())
    assert payload["hilbert"]["values"] == [1, 3, 6, 9, 12]


def test_prime_field_runs(capsys):
    code, out, _ = run(capsys, "--field", "Fp:5", "--format", "json",
                       "hilbert", "--depth", "6")
    assert code == 0
    payload = json.loads(out)
    assert payload["field"] == "Fp:5"
    assert payload["hilbert"]["values"] == [1, 3, 6, 9, 12, 15, 18]
