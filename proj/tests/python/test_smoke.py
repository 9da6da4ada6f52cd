from fractions import Fraction

import pytest

import wallcross as wc


def test_circle_example_values():
    x = wc.XRay.preset("cp3")
    top = x.top()
    sig = x.invariant("sig")
    assert [sig[(top, i)] for i in range(3)] == [1, 0, 1]
    poin = x.invariant("poincare")
    assert poin[(top, 1)] == [1, 0, 2, 0, 1]
    assert x.locate(top, [Fraction(3, 2)]) == 1
    assert x.subchambers(top)[1]["rep"] == [Fraction(3, 2)]


def test_generator_matches_preset():
    a = wc.XRay.cpn(4, "0,4,0,3/2,5/2;0,0,4,5/2,3/2", ["p", "t", "q", "r", "s"])
    b = wc.XRay.preset("nongeneric_cp4")
    assert a.fingerprint == b.fingerprint
    assert len(a.strata()) == 11
    assert a.validate() == []
    sig = a.invariant("sig")
    assert [sig[("{t,q,r,s}", i)] for i in range(3)] == [1, 0, 1]


def test_round_trip_and_errors():
    x = wc.XRay.preset("generic_cp4")
    text = x.to_json()
    assert wc.XRay.from_json(text).to_json() == text
    with pytest.raises(wc.LoadError):
        wc.XRay.from_json(text.replace('"torus_rank": 2', '"torus_rank": "two"'))
    with pytest.raises(wc.XrayError, match="singular point"):
        wc.XRay.preset("nongeneric_cp4").locate("{p,t,q,r,s}", [4, 0])


def test_wall_crossing_functions_and_circle_formulas():
    assert wc.w_signature(2, 1) == -1
    assert wc.w_poincare(3, 0) == [1, 0, 1, 0, 1]
    assert wc.w_euler(3, 1) == 2
    comps = [
        (0, [1, 1, 1], 1, [1]),
        (1, [-1, 1, 1], 1, [1]),
        (2, [-1, -1, 1], 1, [1]),
        (3, [-1, -1, -1], 1, [1]),
    ]
    assert wc.signature_regular(comps, Fraction(3, 2)) == 0
    assert wc.poincare_regular(comps, Fraction(3, 2)) == [1, 0, 2, 0, 1]
    assert wc.signature_singular(comps, 1) == 1


def test_oracle_and_render():
    x = wc.XRay.delzant_cube(2)
    assert set(x.invariant("euler").values()) == {1}
    assert all(passed for _, passed in x.oracle())
    svg = wc.XRay.preset("cp3").render_svg("sig")
    assert svg.startswith("<?xml") and "</svg>" in svg
    with pytest.raises(wc.XrayError):
        wc.XRay.delzant_simplex(3).render_svg("none")
