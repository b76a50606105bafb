"""Weighted star densities over class profiles and their one-dimensional optimizers.

A profile ``w_1 >= w_2 >= ... >= w_m`` stands for a transitive-tournament
blow-up whose ``i``-th class has a ``w_i`` share of the vertices, all arcs
going from smaller classes to larger ones.  Its limiting out-star density is

    f_m(w) = k * sum_{i<j} w_i^(k-1) * w_j,

and the supremum over all profiles is the fixed point ``alpha_k`` of

    F_m = max_w  k w^(k-1) (1-w) + (1-w)^k F_(m-1),

which equals ``max_x k x (1-x)^(k-1) / (1 - x^k)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from numbers import Real
from typing import Callable, Sequence

import numpy as np
from scipy.optimize import brentq

__all__ = [
    "WeightProfile",
    "OptResult",
    "RecursionTrace",
    "eval_fm",
    "kst_objective",
    "kst_upper_bound",
    "golden_section_max",
    "maximize_1d",
    "fm_trace",
    "fm_recursion",
    "solve_alpha",
    "star_ratio",
    "star_ratio_flipped",
    "is_unimodal_on_grid",
    "geometric_weights",
    "kst_inducibility",
    "kst_inducibility_exact",
    "best_two_class_profile",
]

MASS_SLACK = 1e-12
BOUNDARY_EPS = 1e-9
DEFAULT_GRID = 100_000
INVPHI = (math.sqrt(5.0) - 1.0) / 2.0


@dataclass(frozen=True)
class WeightProfile:
    """Nonincreasing nonnegative class weights with total mass at most 1.

    Weights may be floats or :class:`~fractions.Fraction` values; every
    evaluator here is generic over both, so profiles built from integer
    class sizes evaluate exactly.
    """

    weights: tuple

    def __post_init__(self):
        ws = tuple(self.weights)
        object.__setattr__(self, "weights", ws)
        for w in ws:
            if w < 0:
                raise ValueError(f"negative weight {w}")
        for a, b in zip(ws, ws[1:]):
            if a < b:
                raise ValueError(f"weights must be nonincreasing, got {a} before {b}")
        if sum(ws) > 1 + MASS_SLACK:
            raise ValueError(f"total mass {float(sum(ws))} exceeds 1")

    @classmethod
    def from_sizes(cls, sizes: Sequence[int]) -> "WeightProfile":
        n = sum(sizes)
        if n <= 0:
            raise ValueError("class sizes must sum to a positive count")
        return cls(tuple(Fraction(c, n) for c in sorted(sizes, reverse=True)))

    @property
    def mass(self):
        return sum(self.weights)

    @property
    def m(self) -> int:
        return len(self.weights)

    def scaled(self, c: Real) -> "WeightProfile":
        return WeightProfile(tuple(c * w for w in self.weights))

    def __len__(self) -> int:
        return len(self.weights)

    def __iter__(self):
        return iter(self.weights)


def _as_weights(w) -> tuple:
    return w.weights if isinstance(w, WeightProfile) else WeightProfile(tuple(w)).weights


def eval_fm(w: WeightProfile | Sequence[Real], k: int):
    """``k * sum_{i<j} w_i^(k-1) w_j`` in one pass over suffix sums."""
    if k < 2:
        raise ValueError(f"star order must be at least 2, got {k}")
    ws = _as_weights(w)
    total = 0
    suffix = 0
    for wi in reversed(ws):
        total += wi ** (k - 1) * suffix
        suffix += wi
    return k * total


def kst_objective(w: WeightProfile | Sequence[Real], s: int, t: int):
    """``C(s+t, s) * sum_{i<j} w_i^t w_j^s``: K_(s,t) density of a profile."""
    ws = _as_weights(w)
    total = 0
    suffix = 0
    for wi in reversed(ws):
        total += wi**t * suffix
        suffix += wi**s
    return math.comb(s + t, s) * total


def kst_upper_bound(w: WeightProfile | Sequence[Real], s: int, t: int):
    """``C(s+t, s) * w_1^t * (w_2 + ... + w_m)^s``, which dominates the objective when s >= 2."""
    ws = _as_weights(w)
    if not ws:
        return 0
    return math.comb(s + t, s) * ws[0] ** t * sum(ws[1:]) ** s


# -- one-dimensional maximization --------------------------------------------


def golden_section_max(
    f: Callable[[float], float], a: float, b: float, tol: float, max_evals: int = 10_000
) -> tuple[float, float, int]:
    """Shrink ``[a, b]`` around the maximum of a unimodal ``f`` to width ``tol``.

    Returns ``(x, f(x), evaluations)`` for the best point seen.
    """
    c = b - INVPHI * (b - a)
    d = a + INVPHI * (b - a)
    fc, fd = f(c), f(d)
    evals = 2
    while b - a > tol and evals < max_evals:
        if fc >= fd:
            b, d, fd = d, c, fc
            c = b - INVPHI * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + INVPHI * (b - a)
            fd = f(d)
        evals += 1
    if fc >= fd:
        return c, fc, evals
    return d, fd, evals


def maximize_1d(
    f: Callable,
    df: Callable[[float], float] | None,
    lo: float,
    hi: float,
    tol: float,
    grid: int = DEFAULT_GRID,
    interior: bool = False,
) -> tuple[float, float, int]:
    """Grid seed, golden-section refinement, then root-polish of ``df``.

    ``f`` must accept numpy arrays.  ``df`` is any function whose sign
    matches the derivative of ``f`` (a log-derivative works); when it
    changes sign across the grid cell bracketing the maximum, the maximizer
    is polished to machine precision with Brent's method.  With
    ``interior=True`` the seed is the best strict interior local maximum of
    the grid, ignoring the endpoints.
    """
    xs = np.linspace(lo, hi, grid)
    with np.errstate(divide="ignore", invalid="ignore"):
        ys = f(xs)
    ys = np.where(np.isfinite(ys), ys, -np.inf)
    i = int(np.argmax(ys))
    if interior:
        peaks = np.flatnonzero((ys[1:-1] > ys[:-2]) & (ys[1:-1] >= ys[2:])) + 1
        if peaks.size:
            i = int(peaks[np.argmax(ys[peaks])])
    left, right = xs[max(i - 1, 0)], xs[min(i + 1, grid - 1)]
    evals = grid
    x, fx, used = golden_section_max(lambda z: float(f(z)), float(left), float(right), tol)
    evals += used
    if df is not None and left < right:
        dl, dr = df(float(left)), df(float(right))
        evals += 2
        if dl > 0 > dr:
            root = brentq(df, float(left), float(right), xtol=1e-15, full_output=True)
            xr, info = root
            evals += info.function_calls
            # the stationary point beats golden-section noise on a flat top
            x, fx = xr, float(f(xr))
            evals += 1
    return float(x), float(fx), evals


def star_ratio(x, k: int):
    """``k x (1-x)^(k-1) / (1 - x^k)``."""
    return k * x * (1 - x) ** (k - 1) / (1 - x**k)


def star_ratio_flipped(y, k: int):
    """``k y^(k-1) (1-y) / (1 - (1-y)^k)``; the same function under ``y = 1 - x``."""
    return k * y ** (k - 1) * (1 - y) / (1 - (1 - y) ** k)


def _dlog_star_ratio(x: float, k: int) -> float:
    return 1 / x - (k - 1) / (1 - x) + k * x ** (k - 1) / (1 - x**k)


def _dlog_star_ratio_flipped(y: float, k: int) -> float:
    return (k - 1) / y - 1 / (1 - y) - k * (1 - y) ** (k - 1) / (1 - (1 - y) ** k)


@dataclass(frozen=True)
class OptResult:
    """Solved ``alpha_k`` with its maximizer and diagnostics.

    ``beta``/``y_star`` come from maximizing the flipped form independently;
    ``y_star`` should equal ``1 - x_star``.
    """

    alpha: float
    x_star: float
    k: int
    tolerance: float
    evaluations: int
    fixed_point_residual: float
    beta: float
    y_star: float

    @property
    def form_gap(self) -> float:
        return abs(self.alpha - self.beta)

    @property
    def maximizer_sum(self) -> float:
        return self.x_star + self.y_star


def solve_alpha(k: int, tol: float = 1e-12, grid: int = DEFAULT_GRID) -> OptResult:
    """Maximize ``k x (1-x)^(k-1) / (1 - x^k)`` over ``(0, 1)``."""
    if k < 3:
        raise ValueError(f"solve_alpha needs k >= 3, got {k} (for k = 2 the supremum sits at x = 1)")
    if not 0 < tol <= 1e-4:
        raise ValueError(f"tol must lie in (0, 1e-4], got {tol}")
    lo, hi = BOUNDARY_EPS, 1 - BOUNDARY_EPS
    x, alpha, e1 = maximize_1d(lambda z: star_ratio(z, k), lambda z: _dlog_star_ratio(z, k), lo, hi, tol, grid)
    y, beta, e2 = maximize_1d(
        lambda z: star_ratio_flipped(z, k), lambda z: _dlog_star_ratio_flipped(z, k), lo, hi, tol, grid
    )
    residual = abs(alpha - (k * x * (1 - x) ** (k - 1) + x**k * alpha))
    return OptResult(
        alpha=alpha,
        x_star=x,
        k=k,
        tolerance=tol,
        evaluations=e1 + e2,
        fixed_point_residual=residual,
        beta=beta,
        y_star=y,
    )


def is_unimodal_on_grid(k: int, grid: int = DEFAULT_GRID) -> bool:
    """True when ``star_ratio`` rises then falls on an interior grid (no second bump)."""
    xs = np.linspace(BOUNDARY_EPS, 1 - BOUNDARY_EPS, grid)
    diffs = np.diff(star_ratio(xs, k))
    signs = np.sign(diffs[diffs != 0])
    return int(np.count_nonzero(np.diff(signs))) <= 1


@dataclass
class RecursionTrace:
    k: int
    values: list[float] = field(default_factory=list)
    maximizers: list[float | None] = field(default_factory=list)

    @property
    def last(self) -> float:
        return self.values[-1]


def fm_trace(k: int, m: int, tol: float = 1e-12, grid: int = 20_001) -> RecursionTrace:
    """``F_1(1), ..., F_m(1)`` and the optimal largest weight at every level."""
    if m < 1:
        raise ValueError(f"number of classes must be at least 1, got {m}")
    if tol <= 0:
        raise ValueError("tol must be positive")
    if k < 2:
        raise ValueError(f"star order must be at least 2, got {k}")
    trace = RecursionTrace(k, [0.0], [None])
    prev = 0.0
    for _ in range(2, m + 1):
        p = prev

        def phi(w, p=p):
            return k * w ** (k - 1) * (1 - w) + (1 - w) ** k * p

        def dphi(w, p=p):
            return k * (k - 1) * w ** (k - 2) * (1 - w) - k * w ** (k - 1) - k * (1 - w) ** (k - 1) * p

        # w = 0 reproduces the previous level; the interior bump is searched apart
        # from it so the recorded maximizer stays meaningful near the fixed point
        w, val, _ = maximize_1d(phi, dphi, 0.0, 1.0, tol, grid, interior=True)
        prev = max(val, prev)
        trace.values.append(prev)
        trace.maximizers.append(w)
    return trace


def fm_recursion(k: int, m: int, tol: float = 1e-12) -> float:
    return fm_trace(k, m, tol).last


def geometric_weights(k: int, m: int) -> WeightProfile:
    """First ``m`` terms of ``(1 - x_k) x_k^(i-1)``, the iterated blow-up profile."""
    x = solve_alpha(k).x_star
    return WeightProfile(tuple((1 - x) * x**i for i in range(m)))


# -- complete bipartite targets ----------------------------------------------


def kst_inducibility_exact(s: int, t: int) -> Fraction:
    """``C(s+t, s) s^s t^t / (s+t)^(s+t)`` as an exact rational (needs min(s, t) >= 2)."""
    if s < 1 or t < 1:
        raise ValueError(f"K_(s,t) needs s, t >= 1, got ({s}, {t})")
    if min(s, t) < 2:
        raise ValueError("the balanced blow-up value is only optimal for min(s, t) >= 2")
    n = s + t
    return Fraction(math.comb(n, s) * s**s * t**t, n**n)


def kst_inducibility(s: int, t: int) -> float:
    """Inducibility of K_(s,t); the star case ``min(s, t) = 1`` goes through :func:`solve_alpha`."""
    if s < 1 or t < 1:
        raise ValueError(f"K_(s,t) needs s, t >= 1, got ({s}, {t})")
    lo, hi = sorted((s, t))
    if lo >= 2:
        return float(kst_inducibility_exact(s, t))
    if hi == 1:
        # a single arc: every pair of a transitive tournament induces it
        return 1.0
    return solve_alpha(hi + 1).alpha


def best_two_class_profile(s: int, t: int) -> WeightProfile:
    """``(t/(s+t), s/(s+t))`` with ``s <= t``: the balanced two-class blow-up."""
    s, t = sorted((s, t))
    if s < 2:
        raise ValueError(f"two-class optimality needs min(s, t) >= 2, got ({s}, {t})")
    return WeightProfile((Fraction(t, s + t), Fraction(s, s + t)))
