import pytest

import castleqec as cq


def test_field():
    f = cq.Field(2, 4)
    assert f.order == 16
    assert f.modulus == [1, 0, 0, 1, 1]
    for a in range(1, 16):
        assert f.mul(a, f.inv(a)) == 1
    t = f.trace(f.primitive, 4)
    assert f.pow(t, 4) == t
    with pytest.raises(cq.UnsupportedFieldError):
        cq.Field(2, 11)


def test_semigroup():
    s = cq.Semigroup([3, 5, 7])
    assert s.genus == 3
    assert s.gaps == [1, 2, 4]
    assert not s.contains(4)


def test_linear_code():
    f = cq.Field(2)
    hamming = cq.LinearCode(f, 7, [[1, 0, 0, 0, 0, 1, 1], [0, 1, 0, 0, 1, 0, 1],
                                   [0, 0, 1, 0, 1, 1, 0], [0, 0, 0, 1, 1, 1, 1]])
    assert (hamming.n, hamming.k) == (7, 4)
    assert hamming.min_weight() == 3
    assert hamming.dual().is_self_orthogonal()
    assert hamming.contains(hamming.dual())
    row = cq.css_nested(hamming.dual(), hamming)
    assert (row["n"], row["k"], row["d"]) == (7, 1, 3)
    with pytest.raises(cq.InputError):
        cq.LinearCode(f, 3, [[1, 2, 0]])


def test_suzuki():
    c = cq.curve({"family": "suzuki", "params": {"q0": 2}})
    assert c.point_count == 65
    assert c.genus == 14
    assert c.semigroup.generators == [8, 10, 12, 13]
    r = cq.report(c, 13)
    assert (r["n"], r["k"]) == (64, 5)
    seq = c.sequence()
    assert seq.self_orthogonality_range("euclidean") == 45
    with pytest.raises(cq.UnsupportedFieldError):
        cq.curve({"family": "suzuki", "params": {"q0": 32}})


def test_elliptic_gf4():
    c = cq.curve({"family": "hypereven", "field": {"p": 2, "k": 2}, "params": {"F": [0, 0, 0, 1]}})
    code = c.code(1)
    assert code.hermitian_dual().contains(code)
    row = cq.css_hermitian(code)
    assert row == {"n": 8, "k": 6, "d": 2, "q": 2, "d_provenance": "exact",
                   "construction": "hermitian-CSS", "gv": "exceeds"}


def test_bad_curve():
    with pytest.raises(cq.InputError):
        cq.curve('{"family": "klein"')
    with pytest.raises(cq.InputError):
        cq.curve({"family": "klein"})


def test_gv_and_reproduce():
    assert cq.gv(8, 6, 2, 2)["status"] == "exceeds"
    assert cq.gv(15, 14, 2, 9)["status"] == "not-applicable"
    with pytest.raises(cq.QuantumError):
        cq.gv(8, 6, 2, 6)
    assert "suzuki8" in cq.targets()
    rows = cq.reproduce("elliptic-gf4")
    assert [r["status"] for r in rows] == ["PASS"]
    with pytest.raises(cq.InputError):
        cq.reproduce("nope")
