import json

import pytest

import rsalg


def test_version():
    assert rsalg.__version__ == "1.0.0"


def test_catalog_shapes():
    a = rsalg.matrix_rs(2)
    assert a.dim == 6 and not a.graded
    assert a.labels == ["e1", "e2", "e11", "e12", "e21", "e22"]
    assert rsalg.matrix_rs(3).dim == 12
    assert rsalg.rs_v2m2().dim == 6
    b = rsalg.b_nn(3)
    assert b.dim == 6 and b.graded and b.parity == [0, 0, 0, 1, 1, 1]
    assert rsalg.b_22().ring == "QQ(nu)"
    assert rsalg.b_44().ring == "QQ(wa,wb,wc,wd)"
    assert rsalg.b_44(["1", "0", "0", "0"]).ring == "QQ"
    with pytest.raises(ValueError):
        rsalg.b_44(["1", "0", "0", "-1"])  # trace not invertible


def test_element_arithmetic():
    a = rsalg.matrix_rs(2)
    e1, e12 = a.basis(0), a.basis(3)
    assert str(e1 * e12) == "e2"
    assert (e1 - e1).is_zero()
    assert e1.scaled("3/2").coords[0] == "3/2"
    x = a.element(["1", "2", "0", "0", "1/2", "0"])
    assert (x + x) == x.scaled("2")
    assert not rsalg.associator(e1, e1, e12).is_zero()
    assert rsalg.commutator(e1, e1).is_zero()
    with pytest.raises(ValueError):
        a.element(["1", "2"])


def test_identity_checks():
    a = rsalg.matrix_rs(2)
    ok = rsalg.check_identity(a, "right-symmetric")
    assert ok.holds and ok.tuples_checked == 216 and ok.witness is None
    bad = rsalg.check_identity(a, "associative")
    assert not bad.holds and bad.witness == [0, 0, 3]
    assert rsalg.check_identity(rsalg.b_22(), "right-alternative-super").holds
    assert rsalg.check_identity(rsalg.b_nn(2), "abelian-type").holds
    assert not rsalg.check_identity(rsalg.b_44(), "abelian-type").holds
    with pytest.raises(ValueError):
        rsalg.check_identity(a, "jacobi")


def test_random_checks():
    r = rsalg.random_check(rsalg.b_44(), "right-alternative-super", trials=25, seed=0)
    assert r.holds
    r = rsalg.random_check(rsalg.matrix_rs(2), "associative", trials=25, seed=0)
    assert not r.holds


def test_structure():
    for alg, graded in [
        (rsalg.matrix_rs(2), False),
        (rsalg.rs_v2m2(), False),
        (rsalg.b_nn(2), True),
        (rsalg.b_22(), True),
    ]:
        u = rsalg.unit(alg)
        assert u is not None
        c = rsalg.center(alg)
        assert len(c) == 1 and c[0] == u
        if graded:
            ec = rsalg.even_center(alg)
            assert len(ec) == 1 and ec[0] == u
        v = rsalg.check_simple(alg, graded=graded)
        assert v.simple and v.ambient_dim == alg.dim
    with pytest.raises(Exception):
        rsalg.even_center(rsalg.matrix_rs(2))


def test_lemma_reports():
    r1 = rsalg.verify_lemma1(2)
    assert r1.passed and r1.counted_displays() == 6 and r1.findings() == 2
    assert rsalg.verify_lemma2(1).passed and rsalg.verify_lemma2(2).passed
    r3 = rsalg.verify_lemma3(3)
    assert r3.passed and r3.counted_displays() == 18
    assert rsalg.verify_lemma4().passed
    r5 = rsalg.verify_lemma5()
    assert r5.passed
    degs = [rec.z_degree for rec in r5.records if rec.counted]
    assert degs == [6, 6, 6, 6, 5, 5, 5, 5]
    assert "lemma 5: PASS" in r5.to_text()
    parsed = json.loads(r5.json())
    assert parsed["pass"] is True and parsed["displays"] == 8


def test_modular_shadow():
    s = rsalg.modular_shadow(2, 1, samples=20, seed=0)
    assert s.passed and s.failures == 0 and s.prime == 1000003


def test_serialization(tmp_path):
    a = rsalg.b_nn(2)
    text = a.to_json()
    b = rsalg.parse_algebra(text)
    assert b.to_json() == text and b.name == a.name
    path = tmp_path / "alg.json"
    rsalg.save_algebra_file(a, str(path))
    c = rsalg.load_algebra_file(str(path))
    assert c.to_json() == text
    assert c.product(2, 2) == [(0, "1")]
    with pytest.raises(ValueError):
        rsalg.parse_algebra("{ nope")
    with pytest.raises(ValueError):
        rsalg.parse_algebra("{}")
