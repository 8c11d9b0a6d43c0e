# Smoke coverage for the python bindings: every exported entry point is
# touched once against frozen values from the C++ suites.
import json

import pytest

import sarkisov


def test_version():
    assert sarkisov.__version__ == "0.1.0"


def test_intersection_table():
    t = sarkisov.intersection_table(8, 5)
    assert t == {"hhh": 1, "hhe": 0, "hee": -8, "eee": -40}


def test_triple_product():
    k = (4, -1)
    assert sarkisov.triple_product(k, k, k, 8, 5) == 8
    t = (24, -7)
    assert sarkisov.triple_product(t, t, t, 8, 5) == -680


def test_big_integers_cross_the_boundary():
    big = 10**40
    cls = (big, -1)
    got = sarkisov.triple_product(cls, cls, cls, 8, 5)
    # (big H - E)^3 = big^3 H^3 + 3 big (H E^2) - E^3 = big^3 - 24 big + 40.
    assert got == big**3 - 24 * big + 40


def test_anticanonical_form():
    q = sarkisov.anticanonical_form(8, 5)
    assert (q["a"], q["b"], q["c"]) == (4, 16, 8)
    assert (q["minus_k_cubed"], q["sigma"], q["tau"]) == (8, 24, 8)


def test_quadrisecants():
    assert sarkisov.quadrisecant_count(8, 5) == 10
    assert sarkisov.quadrisecant_count(10, 11) == 20
    with pytest.raises(ValueError):
        sarkisov.quadrisecant_count(4, 0)


def test_k3_criteria():
    nef, reason = sarkisov.k3_is_nef(2, 8, 5, 4)
    assert nef and reason == ""
    free, reason = sarkisov.k3_is_free(2, 8, 5, 4)
    assert free and reason == ""
    nef3, reason3 = sarkisov.k3_is_nef(2, 8, 5, 3)
    assert not nef3 and "nk^2 - dk + g - 1 < 0" in reason3
    assert sarkisov.k3_self_intersection(2, 8, 5, 3, -1) == -4
    assert sarkisov.no_rational_curves_obstruction(2, 8, 5)
    assert not sarkisov.no_rational_curves_obstruction(2, 10, 11)


def test_represents():
    v = sarkisov.represents(4, 16, 8, 2)
    assert v["status"] == "NOT_REPRESENTED"
    assert v["modulus"] == 4
    w = sarkisov.represents(1, 0, 1, 2)
    assert w["status"] == "REPRESENTED"
    x, y = w["witness"]
    assert x * x + y * y == 2
    assert sarkisov.isotropic_over_rationals(1, 0, -1)
    assert not sarkisov.isotropic_over_rationals(4, 16, 8)


def test_flop_transport():
    curves = [(1, 4, 10)]
    assert sarkisov.strict_transform_cube((0, 1), 8, 5, curves) == -680
    assert sarkisov.strict_transform_cube((24, -7), 8, 5, curves) == -40
    e, normalized = sarkisov.flop_defect(8, 5, curves)
    assert e == 640
    assert normalized == "10"


def test_classify_dict():
    record = sarkisov.classify(8, 5)
    assert record["schema_version"] == 1
    assert record["verdict"] == "E1_E1"
    assert record["weak_fano"]["minus_k_cubed"] == "8"
    assert record["weak_fano"]["quadrisecants"] == "10"
    assert record["smallness"]["certificate"] == "SMALL_CERTIFIED"
    assert len(record["partners"]) == 1
    partner = record["partners"][0]
    assert partner["degree"] == "8"
    assert partner["genus"] == "5"
    assert partner["exceptional_class"] == "24H-7E"


def test_classify_json_is_valid_json():
    text = sarkisov.classify_json(8, 5)
    assert json.loads(text)["verdict"] == "E1_E1"


def test_classify_without_k3_hypothesis():
    record = sarkisov.classify(8, 5, k3_hypothesis=False)
    assert record["verdict"] == "INCONCLUSIVE"


def test_errors_become_value_errors():
    with pytest.raises(ValueError):
        sarkisov.classify(0, 0)
    with pytest.raises(ValueError):
        sarkisov.classify(8, -1)


def test_scan_csv():
    csv = sarkisov.scan_csv(8, 8, 5, 5)
    lines = csv.strip().splitlines()
    assert lines[0].startswith("d,g,minus_K_cubed")
    assert lines[1].startswith("8,5,8,10,SMALL_CERTIFIED,E1_E1,8,5,10,")
