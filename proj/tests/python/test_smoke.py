import json
from fractions import Fraction
import math

import pytest

import gqlab


def test_wq_family_and_axioms():
    f = gqlab.classical_wq_family(3)
    assert (f.s, f.t, f.group.order) == (3, 3, 27)
    assert gqlab.verify_kantor_axioms(f)["pass"]
    assert all(r["pass"] for r in gqlab.verify_fourdim_algebra(f))


def test_characters():
    f = gqlab.classical_wq_family(3)
    mult = gqlab.chi_multiplicities(f, "S")
    assert mult[-2:] == [2, 2]
    assert all(m == 0 for m in mult[:-2])
    assert gqlab.character_degrees(gqlab.heisenberg_group(3)) == [1] * 9 + [3, 3]


def test_geometry():
    assert gqlab.derived_counts(3) == (27, 45)
    assert gqlab.lambda3(gqlab.classical_wq_family(5)) == pytest.approx(math.sqrt(10), rel=1e-9)


def test_ott_gap():
    assert gqlab.ott_gap_inner_product(16, 5, 8, 4) == Fraction(17, 2)


def test_suite_and_scan():
    rep = gqlab.run_suite("all", gqlab.t2_oval_family(4))
    assert rep["pass"]
    text = gqlab.run_scan("final", max_e=15)
    cert = json.loads(text)
    assert cert["verdict"] == "pass"
    assert gqlab.verify_certificate(text)
    assert gqlab.evaluate_expression("4*5^3") == 500


def test_errors_are_translated():
    with pytest.raises(gqlab.GqlabError, match="InvalidFieldOrder"):
        gqlab.classical_wq_family(4)
    f = gqlab.family_from_json(gqlab.classical_wq_family(3).to_json())
    assert f.s == 3
