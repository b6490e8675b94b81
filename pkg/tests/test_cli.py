import json

from gfrecip.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv)
    assert code == 0, err
    doc = json.loads(out)
    assert doc["status"] == "ok"
    assert doc["schema_version"] == 1
    return doc


def test_recip_example(capsys):
    doc = run_json(capsys, "recip", "--field", "5", "--a", "2", "--poly", "1,0,1")
    assert doc["payload"]["result"] == "4,0,1"


def test_recip_round_trip(capsys):
    doc = run_json(capsys, "recip", "--field", "5", "--a", "3", "--poly", "2,4,3,1")
    once = doc["payload"]["result"]
    doc = run_json(capsys, "recip", "--field", "5", "--a", "3", "--poly", once)
    assert doc["payload"]["result"] == "2,4,3,1"


def test_classify_example(capsys):
    doc = run_json(capsys, "classify", "--field", "5", "--a", "4",
                   "--poly", "4,1,2,4,3,1,1")
    assert doc["payload"]["verdict"] == "nontrivial"
    assert doc["payload"]["half_degree"] == 3


def test_parity_with_oracle(capsys):
    doc = run_json(capsys, "parity", "--field", "5", "--a", "1",
                   "--poly", "1,1,1", "--verify")
    payload = doc["payload"]
    assert payload["verdict"] == "odd"
    assert payload["indicator"] == "2"
    assert payload["oracle"] == {"factor_count_with_multiplicity": 1, "agrees": True}


def test_parity_not_applicable(capsys):
    doc = run_json(capsys, "parity", "--field", "5", "--a", "4",
                   "--poly", "4,1,2,4,3,1,1")
    assert doc["payload"]["verdict"] == "not_applicable"
    assert doc["payload"]["reason"]


def test_transform_and_inverse(capsys):
    doc = run_json(capsys, "transform", "--field", "5", "--a", "2", "--poly", "1,1")
    assert doc["payload"]["result"] == "2,1,1"
    doc = run_json(capsys, "invtransform", "--field", "5", "--a", "2", "--poly", "2,1,1")
    assert doc["payload"]["result"] == "1,1"


def test_factor_deterministic(capsys):
    args = ("factor", "--field", "5", "--poly", "1,0,4,0,1", "--seed", "7")
    code1, out1, _ = run(capsys, *args)
    code2, out2, _ = run(capsys, *args)
    assert code1 == code2 == 0
    assert out1 == out2
    doc = json.loads(out1)
    assert doc["payload"]["factors"] == [
        {"poly": "4,2,1", "pretty": "x^2+2x+4", "multiplicity": 1},
        {"poly": "4,3,1", "pretty": "x^2+3x+4", "multiplicity": 1},
    ]
    assert doc["metadata"]["seed"] == 7


def test_count_example(capsys):
    doc = run_json(capsys, "count", "--field", "5", "--a", "4", "--n", "2",
                   "--enumerate")
    payload = doc["payload"]
    assert payload["si_formula"] == 6
    assert payload["si_enumerated"] == 6
    assert payload["agreement"] is True
    doc = run_json(capsys, "count", "--field", "5", "--a", "4", "--n", "2")
    assert doc["payload"]["si_enumerated"] is None


def test_census_csv_stdout(capsys):
    code, out, _ = run(capsys, "census", "--fields", "3", "--nmax", "1", "--csv")
    assert code == 0
    assert out == ("q,a,n,delta,si_formula,si_enumerated,agreement\n"
                   "3,1,1,-1,1,1,true\n"
                   "3,2,1,1,2,2,true\n")


def test_census_json_and_file(capsys, tmp_path):
    doc = run_json(capsys, "census", "--fields", "3,5", "--nmax", "1")
    assert len(doc["payload"]["rows"]) == 2 + 4
    out_path = tmp_path / "census.csv"
    doc = run_json(capsys, "census", "--fields", "3", "--nmax", "2",
                   "--out", str(out_path))
    assert doc["payload"]["all_agree"] is True
    text = out_path.read_text()
    assert text.startswith("q,a,n,delta,")
    assert len(text.strip().split("\n")) == 5  # header + 2 a's x 2 n's


def test_verify_pass(capsys):
    for token in ("1", "2", "5", "7", "9", "cor2"):
        doc = run_json(capsys, "verify", "--theorem", token,
                       "--field", "5", "--a", "4", "--n", "2")
        assert doc["payload"]["ok"] is True, token
        assert doc["payload"]["check"] == token


def test_verify_extension_field(capsys):
    doc = run_json(capsys, "verify", "--theorem", "7", "--field", "3^2",
                   "--a", "1+2*t", "--n", "1")
    assert doc["payload"]["ok"] is True


def test_modulus_override(capsys):
    doc = run_json(capsys, "verify", "--theorem", "5", "--field", "3^2",
                   "--a", "t", "--n", "1", "--modulus", "2,2,1")
    assert doc["payload"]["ok"] is True
    assert doc["metadata"]["modulus"] == "2,2,1"


def test_domain_errors_exit_1(capsys):
    cases = [
        ("recip", "--field", "4", "--a", "1", "--poly", "1,1"),        # bad field
        ("recip", "--field", "5", "--a", "0", "--poly", "1,1"),        # zero a
        ("recip", "--field", "5", "--a", "1", "--poly", "1,,1"),       # bad poly
        ("recip", "--field", "5", "--a", "1", "--poly", "0,1,1"),      # zero constant
        ("classify", "--field", "5", "--a", "x", "--poly", "1,1"),     # bad element
    ]
    for argv in cases:
        code, out, err = run(capsys, *argv)
        assert code == 1, argv
        assert err.strip(), argv
        assert not out, argv


def test_budget_exit_3(capsys):
    code, _, err = run(capsys, "verify", "--theorem", "5", "--field", "5",
                       "--a", "2", "--n", "8")
    assert code == 3
    assert "budget" in err
    # the ceiling is a flag, both ways
    code, _, err = run(capsys, "verify", "--theorem", "5", "--field", "3",
                       "--a", "1", "--n", "2", "--budget", "5")
    assert code == 3
    code, out, _ = run(capsys, "verify", "--theorem", "5", "--field", "5",
                       "--a", "2", "--n", "8", "--budget", "400000")
    assert code == 0


def test_byte_identical_repeat(capsys):
    args = ("census", "--fields", "3,5", "--nmax", "2")
    _, out1, _ = run(capsys, *args)
    _, out2, _ = run(capsys, *args)
    assert out1 == out2
