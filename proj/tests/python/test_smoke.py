import pytest

import cubicfm


def test_admissibility_flags():
    assert cubicfm.has_associated_k3(42)
    assert not cubicfm.has_associated_k3(8)
    assert cubicfm.has_associated_twisted_k3(8)
    rep = cubicfm.admissibility(44)
    assert rep["cd_nonempty"] and not rep["has_k3"]
    assert any("4 | d" in r for r in rep["reasons"])


def test_counts():
    assert cubicfm.cubic_fm_count(42)["p_cubic"] == 1
    assert cubicfm.cubic_fm_count(182)["p_cubic"] == 2
    r = cubicfm.cubic_fm_count(546)
    assert r["m"] == 4 and r["p_cubic"] == 2
    assert cubicfm.twisted_fm_count(50, 5)["m_prime"] == 2
    assert cubicfm.twisted_fm_count(338, 13)["m_prime"] == 6
    assert cubicfm.ma_bound_generic(50, 5) == 2


def test_errors():
    with pytest.raises(cubicfm.InadmissibleError):
        cubicfm.cubic_fm_count(8)
    with pytest.raises(cubicfm.InvalidKappaError):
        cubicfm.twisted_fm_count(50, 3)


def test_lattices():
    info = cubicfm.lattice_info("L0")
    assert info["rank"] == 22
    assert info["signature"] == (2, 20)
    assert info["even"]
    assert info["det"] == "3"
    assert "LambdaMukai" in cubicfm.standard_names()
    df = cubicfm.discriminant_form([[2, -1], [-1, 2]])
    assert df["elementary_divisors"] == ["3"]
    assert df["q_on_generators"] == ["2/3"]


def test_linear_algebra():
    u, s, v = cubicfm.smith_normal_form([[2, 4], [6, 8]])
    assert [row[0] for row in s][0] == "2"
    assert s[1][1] == "4"  # det 16-24 = -8, chain 2 | 4
    assert cubicfm.determinant([[2, 4], [6, 8]]) == "-8"


def test_verify_small_sweep():
    results = cubicfm.verify(d_max=100, kappa_max=5)
    assert results and all(r["passed"] for r in results)
