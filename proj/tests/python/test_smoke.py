import pytest

import gex2


def test_classify_and_witness():
    q = gex2.QuadraticForm.parse("l=3;d=111;u=111")
    cls = gex2.classify(q)
    assert (cls.m1, cls.kind, cls.m2) == (1, gex2.FormKind.Minus, 1)
    t = gex2.normal_form_witness(q)
    assert gex2.change_basis(q, t) == gex2.standard_form(cls)


def test_isometries():
    hm, hp, q1 = gex2.QuadraticForm.h_minus(), gex2.QuadraticForm.h_plus(), gex2.QuadraticForm.q_one()
    assert gex2.is_isometric(gex2.direct_sum(hm, hm), gex2.direct_sum(hp, hp))
    assert not gex2.is_isometric(hm, hp)
    assert gex2.isometry_oracle(hp, gex2.QuadraticForm.zero(2)) is None


def test_admissible():
    hm, hp = gex2.QuadraticForm.h_minus(), gex2.QuadraticForm.h_plus()
    assert gex2.admissible_witness(hm) == ["11", "10"]
    assert gex2.admissible_witness(hp) is None
    assert gex2.is_admissible(gex2.direct_sum(hp, hp))
    for idx in range(gex2.form_count(3)):
        q = gex2.QuadraticForm.from_index(3, idx)
        assert gex2.is_admissible(q) == (gex2.is_admissible_bruteforce(q) is not None)


def test_groups():
    q8 = gex2.GexGroup(gex2.QuadraticForm.h_minus())
    assert (q8.order, q8.center_order(), q8.frattini_order()) == (8, 2, 2)
    assert q8.group_class() == "Q8"
    d8 = gex2.GexGroup(gex2.QuadraticForm.h_plus())
    assert gex2.iso_oracle(gex2.central_product(q8, q8), gex2.central_product(d8, d8))
    assert not gex2.iso_oracle(q8, d8)
    assert str(gex2.direct_z2(q8, 1)) == "gex:l=3;d=110;u=100"


def test_clifford():
    assert gex2.verify_psi(5)
    rows = gex2.en_table(17)
    assert len(rows) == 16 and all(r.endswith("PASS") for r in rows)


def test_verify_all_and_errors():
    assert "summary: 14 passed, 0 failed" in gex2.verify_all()
    with pytest.raises(ValueError, match="'d'"):
        gex2.QuadraticForm.parse("l=3;d=11;u=100")
