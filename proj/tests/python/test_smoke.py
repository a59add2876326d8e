import json
import math
import os
import subprocess
from fractions import Fraction

import pytest

import monochrome as mc


def test_graph_construction_and_errors():
    g = mc.Graph(3, [(0, 1), (2, 1), (0, 2)])
    assert (g.n, g.m) == (3, 3)
    assert g.edges == [(0, 1), (0, 2), (1, 2)]
    assert g == mc.Graph.family("complete:3")
    with pytest.raises(mc.MonochromeError) as info:
        mc.Graph(2, [(0, 0)])
    assert info.value.code == "SelfLoop"
    with pytest.raises(mc.MonochromeError):
        mc.Graph.family("er:10:0.5")


def test_census_and_spectrum():
    k4 = mc.Graph.family("complete:4")
    assert mc.count_cycles(k4, 3) == 4
    assert mc.count_cycles(k4, 4) == 3
    assert sorted(mc.eigenvalues(k4)) == pytest.approx([-1, -1, -1, 3])
    assert mc.usn_ratio(mc.Graph.family("bipartite:3:3")) == pytest.approx(1 / math.sqrt(2))
    census = mc.tuple_census(mc.Graph.family("cycle:4"), 4)
    assert census["4-cycle"] == 24
    assert sum(census.values()) == 4**4


def test_extremal():
    value, phi = mc.gamma(mc.Graph.family("cycle:5"))
    assert value == Fraction(5, 2)
    assert phi == [0.5] * 5
    assert mc.deficiency(mc.Graph.family("star:3")) == 2
    assert mc.is_union_of_stars(mc.Graph.family("star:3"))


def test_colorings_and_moments():
    k3 = mc.Graph.family("complete:3")
    assert mc.exact_distribution(k3, 2) == {1: Fraction(3, 4), 3: Fraction(1, 4)}
    assert mc.mono_count(k3, [1, 1, 0], 2) == 1
    counts = mc.simulate(k3, 2, "edges", 2000, seed=5)
    assert counts == mc.simulate(k3, 2, "edges", 2000, seed=5, workers=2)
    assert set(counts) <= {1, 3}
    assert mc.conditional_moment(k3, "rawN", 2, 2)["unscaled"] == 3
    assert mc.stirling_moment(3, 2, 3) == Fraction(27, 4)
    report = mc.fourth_moment_report(mc.Graph.family("cycle:4"), 2)
    assert report["exact"] == 1
    assert report["remainder"] == Fraction(15, 64)


def test_limit_laws():
    law = mc.limit_for("complete:50", ratio=0.5)
    assert law["kind"] == "Poisson"
    assert mc.law_pmf(law, 0) == pytest.approx(math.exp(-0.5))
    chi = mc.limit_for(mc.Graph.family("complete:10"), colors=2)
    assert chi["kind"] == "WeightedChiSquare"
    draws = mc.sample_law(chi, 1000, seed=3)
    assert draws == mc.sample_law(chi, 1000, seed=3)
    assert mc.law_cdf({"schema": "monochrome.law/1", "kind": "Normal", "mean": 0.0, "variance": 0.5}, 0.0) == 0.5
    with pytest.raises(mc.MonochromeError) as info:
        mc.limit_for("bipartite:2:50", colors=3)
    assert info.value.code == "AmbiguousRegime"
    assert mc.weighted_chisq_mgf([1.0], 2, 0.1) == pytest.approx(math.exp(-0.2) / 0.8)
    assert mc.delta_conditional_mgf(mc.Graph.family("bipartite:3:3"), 2, 1.0) == pytest.approx((7 / 8) ** -0.5)
    assert abs(mc.gadget_char_function(1, 1, 2, 3, math.pi) - 0.5) < 1e-12


def test_birthday_and_stats():
    assert mc.birthday_no_match(23, 365) == pytest.approx(0.4927027656760146)
    assert mc.birthday_threshold(365) == 23
    assert mc.tv_distance({0.0: 1.0}, {1.0: 1.0}) == 1.0
    assert mc.ks_two_sample([0.0, 1.0], [0.0, 1.0]) == 0.0


def test_cli_in_process_and_binary():
    code, out, _ = mc.run_cli(["birthday", "--people", "23", "--days", "365"])
    assert code == 0
    assert json.loads(out)["threshold_people"] == 23
    code, _, err = mc.run_cli(["census", "--graph", "complete:24", "--tuples", "4"])
    assert code == 3 and "EnumerationGateExceeded" in err
    binary = os.environ.get("MONOCHROME_BINARY")
    if binary:
        done = subprocess.run([binary, "exact", "--graph", "complete:3", "--colors", "2"],
                              capture_output=True, text=True, check=True)
        assert "3,1/4" in done.stdout
