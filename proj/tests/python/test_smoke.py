import pytest

import pgca


PSI_12 = {"m": 1, "n": 2, "values": {"I[2]": "1", "J[2]": "1"}}


def terms(vector):
    return {t["monomial"]: t["coeff"] for t in vector}


def test_scalar_arithmetic():
    half = pgca.Scalar.parse("1/2")
    assert str(half + half) == "1"
    assert pgca.Scalar.parse("1+i") * pgca.Scalar.parse("1+i") == pgca.Scalar.parse("2*i")
    assert pgca.Scalar(2).pow(-1) == half
    with pytest.raises(pgca.PgcaError):
        pgca.Scalar.parse("1/0")


def test_bracket_and_straighten():
    assert pgca.bracket("L[2]", "L[-2]") == pgca.bracket("-L[-2]", "L[2]")
    assert "c1" in pgca.bracket("L[2]", "L[-2]")
    assert terms(pgca.straighten("H[1] H[-1]")) == {"H[-1] H[1]": "1", "c3": "1"}


def test_whittaker_action():
    psi = {"m": 1, "n": 1, "values": {"I[1]": "1", "J[1]": "1"}}
    out = pgca.whittaker_act(psi, "H[1]", {"I[0]": "1"})
    assert terms(out) == {"1": "1"}


def test_search_finds_witness():
    report = pgca.singular_vector_search(PSI_12, 2)
    assert report["found"]
    assert report["spot_check_ok"]


def test_twist():
    result = pgca.solve_twist({"m": 1, "n": 1, "values": {"I[1]": "1", "J[1]": "1", "L[2]": "6"}})
    assert result["a"] == ["1"]
    assert result["b"] == ["1"]
    assert "L[2]" not in result["twisted"]["values"]


def test_psi14():
    w = pgca.psi14_witness()
    assert w["determinant"] == "0"
    assert w["kernel_dimension"] == 1
    assert w["verified"]


def test_campaign_round_trip():
    assert "whittaker-search" in pgca.commands()
    config = {"cases": [{"label": "p", "datum": PSI_12, "weight_bound": 2, "expect": "witness",
                         "expected_witness": {"I[1]": "1", "J[1]": "1"}}]}
    passed, report, lines = pgca.run_campaign("whittaker-search", config)
    assert passed
    assert report["results"][0]["expected_in_kernel"]
    assert lines[0].startswith("PASS")
    again = pgca.run_campaign("whittaker-search", config)
    assert again[1] == report


def test_campaign_config_errors():
    with pytest.raises(pgca.PgcaError, match="unknown key"):
        pgca.run_campaign("twist", {"bogus": 1})
