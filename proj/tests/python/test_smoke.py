"""Smoke tests for the treefpp python module (built by CMake under build/bindings)."""

from fractions import Fraction

import pytest

import treefpp


def frac(s):
    return Fraction(*map(int, s.split("/")))


def test_permutation_basics():
    p = treefpp.Permutation("(1,2)(3,4)", 4)
    assert p.degree == 4
    assert p.fixed_point_count() == 0
    assert str(p) == "(1,2)(3,4)"
    assert treefpp.fixed_point_count("(1,2,3)", 4) == 1


def test_group_and_profile():
    g = treefpp.PermSet.group(["(1,2)", "(1,2,3,4)"], 4)
    assert len(g) == 24
    assert g.is_transitive()
    profile = treefpp.derangement_profile(g)
    assert profile["counts"] == [9, 8, 6, 0, 1]
    assert treefpp.mean_fixed_points(g) == "1/1"


def test_fpp_classification():
    zero = treefpp.fpp(treefpp.PermSet.group(["(1,2,3)"], 3))
    assert zero["classification"] == "Zero"

    one = treefpp.fpp(treefpp.PermSet.group(["(2,3)"], 3))
    assert one["classification"] == "One"

    alg = treefpp.fpp(treefpp.PermSet.group(["(1,2)(3,4)"], 4))
    assert alg["classification"] == "Algebraic"
    assert abs(float(alg["decimal"]) - 0.4563109873079255) < 1e-12
    lo, hi = frac(alg["isolating_interval"]["lo"]), frac(alg["isolating_interval"]["hi"])
    assert 0 < lo < hi < 1
    assert hi - lo < Fraction(1, 2**64)


def test_iteration_trace():
    s2 = treefpp.PermSet.group(["(1,2)"], 2)
    trace = treefpp.fpp_iterate(s2, 3)
    assert trace["p"] == ["1/1", "1/2", "3/8", "39/128"]
    assert trace["sigma"] == ["2", "8", "128"]
    assert trace["f"] == ["1", "3", "39"]


def test_gqp_analysis():
    report = treefpp.analyze_gqp(
        ["(1,2)(3,4)", "(1,3)(2,4)"], ["(1,2)", "(1,2,3,4)"], 4
    )
    assert report["index"] == 6
    assert report["fpp"]["exact"] == "1/3"
    assert report["hausdorff"]["log_numerator"] == "4"
    assert report["finite_type_depth"] == 2


def test_constructions():
    assert treefpp.galois_unicritical(105)["fpp"] == "5/16"
    assert treefpp.glnf2_count(2) == (2, 6)
    assert treefpp.witness_matrix(2) == [[1, 1], [1, 0]]
    c2 = treefpp.construction2(2, 1)
    assert c2["fpp"] == "1/3"
    assert treefpp.psi(9) == 3


def test_oracle_and_mc():
    s2 = treefpp.PermSet.group(["(1,2)"], 2)
    report = treefpp.brute_count(s2, 2)
    assert report["sigma"] == "8"
    assert report["f_brute"] == "3"
    assert report["agrees"]

    m1 = treefpp.mc_estimate(s2, depth=8, samples=5000, seed=3, workers=1)
    m2 = treefpp.mc_estimate(s2, depth=8, samples=5000, seed=3, workers=2)
    assert m1["survivors"] == m2["survivors"]


def test_error_translation():
    with pytest.raises(ValueError):
        treefpp.Permutation("(1,9)", 4)
    with pytest.raises(ValueError):
        treefpp.analyze_gqp(["(1,2)"], ["(1,2)", "(1,2,3)"], 3)
    with pytest.raises(RuntimeError):
        treefpp.glnf2_count(6)
