import math
import random
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from inducibility import (
    WeightProfile,
    best_two_class_profile,
    count_stars,
    eval_fm,
    fm_recursion,
    fm_trace,
    geometric_weights,
    kst_inducibility,
    kst_inducibility_exact,
    reduce_to_profile,
    solve_alpha,
)
from inducibility.density import golden_section_max, is_unimodal_on_grid, kst_objective, kst_upper_bound, star_ratio
from inducibility.extremal import iterated_blowup

ALPHA3 = 2 * math.sqrt(3) - 3


def brute_alpha(k, points=1_000_000):
    xs = np.linspace(1e-9, 1 - 1e-9, points)
    ys = k * xs * (1 - xs) ** (k - 1) / (1 - xs**k)
    i = int(np.argmax(ys))
    return float(ys[i]), float(xs[i])


def sorted_profile(rng, m):
    raw = sorted((rng.random() for _ in range(m)), reverse=True)
    mass = rng.uniform(0.2, 1.0)
    total = sum(raw)
    return WeightProfile(tuple(mass * w / total for w in raw))


@st.composite
def profiles(draw):
    ws = draw(st.lists(st.floats(0, 1), min_size=1, max_size=8))
    total = sum(ws)
    if total == 0:
        return WeightProfile((0.0,) * len(ws))
    return WeightProfile(tuple(sorted((w / total * 0.999 for w in ws), reverse=True)))


def test_profile_validation():
    with pytest.raises(ValueError):
        WeightProfile((0.2, 0.5))
    with pytest.raises(ValueError):
        WeightProfile((0.5, -0.1))
    with pytest.raises(ValueError):
        WeightProfile((0.7, 0.4))
    WeightProfile((0.5 + 1e-13, 0.5))  # within the mass slack
    assert WeightProfile.from_sizes([1, 3]).weights == (Fraction(3, 4), Fraction(1, 4))


def test_eval_fm_examples():
    assert eval_fm([1], 3) == 0
    assert eval_fm(WeightProfile((Fraction(2, 3), Fraction(1, 3))), 3) == Fraction(4, 9)
    w = WeightProfile((Fraction(1, 2), Fraction(1, 3), Fraction(1, 6)))
    assert eval_fm(w.scaled(Fraction(1, 2)), 3) == Fraction(1, 8) * eval_fm(w, 3)
    with pytest.raises(ValueError):
        eval_fm([0.1, 0.5], 3)


def test_eval_fm_matches_double_sum():
    rng = random.Random(3)
    for _ in range(100):
        w = sorted_profile(rng, rng.randint(1, 9))
        k = rng.randint(3, 7)
        ws = w.weights
        direct = k * sum(ws[i] ** (k - 1) * ws[j] for i in range(len(ws)) for j in range(i + 1, len(ws)))
        assert eval_fm(w, k) == pytest.approx(direct, rel=1e-12, abs=1e-15)


@given(profiles(), st.floats(0.01, 1.0), st.integers(3, 8))
def test_homogeneity(w, c, k):
    base = eval_fm(w, k)
    assert eval_fm(w.scaled(c), k) == pytest.approx(c**k * base, rel=1e-12, abs=1e-300)


def test_recursion_examples():
    assert fm_recursion(3, 1) == 0
    assert abs(fm_recursion(3, 2, 1e-10) - 4 / 9) <= 1e-10
    assert abs(fm_recursion(3, 60, 1e-10) - ALPHA3) <= 1e-9
    with pytest.raises(ValueError):
        fm_recursion(3, 0)


def test_recursion_monotone_and_converging():
    for k in (3, 4, 6):
        tr = fm_trace(k, 40)
        alpha = solve_alpha(k).alpha
        vals = tr.values
        assert all(b >= a for a, b in zip(vals, vals[1:]))
        assert all(v <= 1 for v in vals)
        gaps = [abs(v - alpha) for v in vals]
        assert all(b <= a + 1e-15 for a, b in zip(gaps, gaps[1:]))


def test_recursion_maximizer_approaches_geometric():
    # the optimal largest class at deep levels is 1 - x_k
    for k in (3, 4, 5):
        tr = fm_trace(k, 60)
        assert tr.maximizers[-1] == pytest.approx(1 - solve_alpha(k).x_star, abs=1e-9)


def test_solve_alpha_k3():
    r = solve_alpha(3, 1e-12)
    assert abs(r.alpha - ALPHA3) <= 1e-12
    roots = np.roots([-2.0, -2.0, 1.0])  # 1 - 2x - 2x^2
    x_root = float(next(z.real for z in roots if 0 < z.real < 1))
    assert abs(r.x_star - x_root) <= 1e-12
    assert abs(r.x_star - (math.sqrt(3) - 1) / 2) <= 1e-12
    assert r.fixed_point_residual <= 1e-12
    assert 0 < r.x_star < 1 and 0 < r.alpha < 1


def test_solve_alpha_k4_against_grid():
    value, where = brute_alpha(4)
    r = solve_alpha(4, 1e-12)
    assert r.alpha >= value - 1e-15
    assert r.alpha - value <= 1e-10
    assert abs(r.x_star - where) <= 2e-6
    assert round(r.alpha, 5) == 0.42357


@pytest.mark.parametrize("k", range(3, 13))
def test_solver_against_grid_and_fixed_point(k):
    value, _ = brute_alpha(k)
    r = solve_alpha(k)
    assert abs(r.alpha - value) <= 1e-9
    assert abs(r.alpha - (k * r.x_star * (1 - r.x_star) ** (k - 1) + r.x_star**k * r.alpha)) <= 1e-12
    assert r.form_gap <= 1e-12
    assert abs(r.maximizer_sum - 1) <= 1e-12
    assert is_unimodal_on_grid(k)


def test_solve_alpha_errors():
    with pytest.raises(ValueError):
        solve_alpha(2)
    with pytest.raises(ValueError):
        solve_alpha(3, 1e-3)


def test_golden_section():
    x, fx, evals = golden_section_max(lambda z: -(z - 0.3) ** 2, 0.0, 1.0, 1e-10)
    assert abs(x - 0.3) < 1e-9 and evals < 100


def test_geometric_weights():
    x3 = (math.sqrt(3) - 1) / 2
    w1 = geometric_weights(3, 1)
    assert w1.weights[0] == pytest.approx(1 - x3, abs=1e-12)
    assert round(w1.weights[0], 4) == 0.634
    w = geometric_weights(3, 60)
    assert w.mass == pytest.approx(1 - x3**60, abs=1e-12)
    assert abs(eval_fm(w, 3) - solve_alpha(3).alpha) <= 1e-9
    assert geometric_weights(4, 200).mass == pytest.approx(1.0, abs=1e-12)


def test_kst_values():
    assert kst_inducibility_exact(2, 2) == Fraction(3, 8)
    assert kst_inducibility_exact(2, 3) == Fraction(216, 625)
    assert kst_inducibility(2, 3) == pytest.approx(0.3456, abs=1e-15)
    assert float(10 * Fraction(2, 5) ** 2 * Fraction(3, 5) ** 3) == kst_inducibility(3, 2)
    assert abs(kst_inducibility(1, 2) - ALPHA3) <= 1e-9
    assert kst_inducibility(2, 1) == kst_inducibility(1, 2)
    assert kst_inducibility(1, 3) == solve_alpha(4).alpha
    assert kst_inducibility(1, 1) == 1.0
    with pytest.raises(ValueError):
        kst_inducibility(0, 2)
    with pytest.raises(ValueError):
        kst_inducibility_exact(1, 2)


def test_best_two_class_profile():
    assert best_two_class_profile(2, 2).weights == (Fraction(1, 2), Fraction(1, 2))
    w = best_two_class_profile(2, 3)
    assert w.weights == (Fraction(3, 5), Fraction(2, 5))
    assert kst_objective(w, 2, 3) == Fraction(216, 625)
    for s in range(2, 6):
        for t in range(s, 7):
            assert kst_objective(best_two_class_profile(s, t), s, t) == kst_inducibility_exact(s, t)
    with pytest.raises(ValueError):
        best_two_class_profile(1, 4)


def test_two_class_optimum_by_grid():
    # w^t (1-w)^s on a grid peaks at t/(s+t)
    for s, t in [(2, 2), (2, 3), (3, 5)]:
        ws = np.linspace(0, 1, 100_001)
        vals = math.comb(s + t, s) * ws**t * (1 - ws) ** s
        assert float(ws[np.argmax(vals)]) == pytest.approx(t / (s + t), abs=1e-5)
        assert float(vals.max()) == pytest.approx(kst_inducibility(s, t), abs=1e-9)


def test_profile_dominance():
    rng = random.Random(2024)
    for _ in range(500):
        w = sorted_profile(rng, rng.randint(1, 8))
        for s in range(2, 6):
            for t in range(s, 6):
                obj = kst_objective(w, s, t)
                bound = kst_upper_bound(w, s, t)
                assert obj <= bound + 1e-15
                assert bound <= kst_inducibility(s, t) + 1e-15


def test_profile_vs_digraph_gap_shrinks():
    gaps = []
    for n in (30, 60, 120):
        d = iterated_blowup(n, 3)
        prof = reduce_to_profile(d, 3)
        assert prof.mass == 1
        gaps.append(abs(count_stars(d, 3).density_exact - eval_fm(prof, 3)))
    assert gaps[0] > gaps[1] > gaps[2] > 0
    assert gaps[2] < 3 / 120


def test_star_ratio_limits():
    assert star_ratio(1e-9, 3) == pytest.approx(0, abs=1e-8)
    assert star_ratio(1 - 1e-9, 3) == pytest.approx(0, abs=1e-8)
