from pathlib import Path

import pytest

import charclass as cc

CORPUS = Path(__file__).resolve().parents[2] / "data" / "corpus"

EXAMPLE1 = ["4*x3*x2*x4*x1 - x0^3*x1", "x0*x1*x3*x4 - x2^3*x3"]
VARS5 = ["x0", "x1", "x2", "x3", "x4"]


def test_two_surfaces_from_strings():
    I = cc.Ideal(VARS5, EXAMPLE1)
    assert I.n == 4
    assert I.characteristic == cc.DEFAULT_PRIME
    assert cc.projective_degrees(I) == [1, 4, 0, 0, 0]
    assert cc.segre_class(I) == [0, 0, 16, -128, 768]
    assert cc.csm_class(I) == [0, 0, 12, 8, 5]
    assert cc.euler_characteristic(I) == 5
    assert cc.euler_sections(I) == [5, -4, 12]


def test_corpus_file():
    I = cc.Ideal.load(str(CORPUS / "twisted_cubic.ideal"))
    assert cc.segre_class(I, seed=3) == [0, 0, 3, -10]
    assert cc.euler_characteristic(I, seed=3) == 2
    assert cc.Ideal.load(str(CORPUS / "twisted_cubic.ideal"), characteristic=101).characteristic == 101


def test_formulas():
    assert cc.segre_from_degrees([1, 4, 0, 0, 0], 4) == [0, 0, 16, -128, 768]
    assert cc.g_from_segre([0, 0, 16, -128, 768], 4, 2) == [1, 4, 0, 0, 0]
    assert cc.csm_from_polar_degrees([1, 7, 23, 29, 12]) == [0, 8, 2, 10, 5]
    assert cc.suwa_ci_csm([1], 3) == [0, 1, 3, 3]
    assert cc.involution_polynomial([5, 8, 12]) == [5, 4, 12]
    assert cc.aluffi_involution([0, 0, 12, 8, 5]) == [5, -4, 12]


def test_big_integers_survive():
    g = [1, 10**6, 10**12, 10**18, 10**24]
    s = cc.segre_from_degrees(g, 10**6)
    assert cc.g_from_segre(s, 10**6, 5) == g


def test_errors():
    with pytest.raises(cc.ParseError) as err:
        cc.Ideal(["x", "y"], ["x", "x^2 - y"])
    assert "line 2" in str(err.value)
    assert issubclass(cc.ParseError, cc.Error)
    with pytest.raises(cc.IoError):
        cc.Ideal.load(str(CORPUS / "missing.ideal"))
    with pytest.raises(cc.UnsupportedError):
        cc.suwa_ci_csm([], 3)
    with pytest.raises(TypeError):
        cc.aluffi_involution([1.5])
