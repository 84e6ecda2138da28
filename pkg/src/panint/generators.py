"""Seeded random capacities and functions.

All draws are integers turned into small-denominator rationals, so a given
``(seed, family, space)`` yields the same table in exact and float mode up
to the final float conversion.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from .core import Capacity, FiniteSpace, PanintError, RealFunction, members

FAMILIES = (
    "additive",
    "clipped-additive",
    "min-of-additive",
    "concave-distortion",
    "monotone-random",
)
SUBADDITIVE_FAMILIES = ("clipped-additive", "min-of-additive", "concave-distortion")

_SEED_MASK = (1 << 64) - 1


def make_rng(seed: int) -> np.random.Generator:
    return np.random.default_rng(int(seed) & _SEED_MASK)


def _weights(rng: np.random.Generator, n: int, zero_prob: float = 0.2) -> list[Fraction]:
    w = [
        Fraction(0) if rng.random() < zero_prob else Fraction(int(rng.integers(1, 101)), 10)
        for _ in range(n)
    ]
    if not any(w):
        w[int(rng.integers(n))] = Fraction(int(rng.integers(1, 101)), 10)
    return w


def _additive_table(n: int, w: list[Fraction]) -> list[Fraction]:
    vals = [Fraction(0)] * (1 << n)
    for s in range(1, 1 << n):
        low = s & -s
        vals[s] = vals[s ^ low] + w[low.bit_length() - 1]
    return vals


def _additive(rng, n):
    return _additive_table(n, _weights(rng, n))


def _clipped_additive(rng, n):
    nu = _additive(rng, n)
    cap = nu[-1] * Fraction(int(rng.integers(30, 101)), 100)
    return [min(v, cap) for v in nu]


def _min_of_additive(rng, n):
    # cheapest cover of A by priced "offers": singletons plus random bundles.
    # The cost of any fixed selection of offers is additive in its prices;
    # taking the minimum over covers keeps monotonicity and subadditivity.
    w = _weights(rng, n)
    offers = [(1 << i, w[i]) for i in range(n)]
    for _ in range(n):
        t = int(rng.integers(1, 1 << n))
        if bin(t).count("1") < 2:
            continue
        base = sum((w[i] for i in members(t)), Fraction(0))
        offers.append((t, base * Fraction(int(rng.integers(30, 101)), 100)))
    cost = [Fraction(0)] * (1 << n)
    for s in range(1, 1 << n):
        low = s & -s
        best = None
        for t, price in offers:
            if t & low:
                c = price + cost[s & ~t]
                if best is None or c < best:
                    best = c
        cost[s] = best
    return cost


def _concave_distortion(rng, n):
    nu = _additive(rng, n)
    # phi(t) = min_j (slope_j * t + icpt_j): concave, nondecreasing, phi(0) = 0
    k = int(rng.integers(1, 4))
    slopes = sorted((Fraction(int(rng.integers(0, 101)), 20) for _ in range(k)), reverse=True)
    slopes[0] += Fraction(1, 20)
    icpts = [Fraction(0)] + sorted(Fraction(int(rng.integers(1, 101)), 10) for _ in range(k - 1))
    return [min(a * t + b for a, b in zip(slopes, icpts)) for t in nu]


def _monotone_random(rng, n):
    vals = [Fraction(0)] * (1 << n)
    for s in range(1, 1 << n):
        floor = max(vals[s & ~(1 << i)] for i in members(s))
        inc = Fraction(0) if rng.random() < 0.2 else Fraction(int(rng.integers(1, 51)), 10)
        vals[s] = floor + inc
    if vals[-1] == 0:
        vals[-1] = Fraction(1)
    return vals


_BUILDERS = {
    "additive": _additive,
    "clipped-additive": _clipped_additive,
    "min-of-additive": _min_of_additive,
    "concave-distortion": _concave_distortion,
    "monotone-random": _monotone_random,
}


def gen_capacity(space: FiniteSpace | int, seed: int, family: str, exact: bool = False) -> Capacity:
    """Random capacity from ``family``, reproducible in ``(seed, family, space)``."""
    if isinstance(space, int):
        space = FiniteSpace.of(space)
    try:
        build = _BUILDERS[family]
    except KeyError:
        raise PanintError(f"unknown capacity family {family!r}; choose from {FAMILIES}") from None
    vals = build(make_rng(seed), space.n)
    if not exact:
        vals = [float(v) for v in vals]
    return Capacity(space, tuple(vals))


def random_nonnegative(rng: np.random.Generator, space: FiniteSpace, exact: bool = False) -> RealFunction:
    """Values uniform on [0, 10] with an extra 20% atom at zero."""
    vals = []
    for _ in range(space.n):
        if rng.random() < 0.2:
            vals.append(Fraction(0) if exact else 0.0)
        elif exact:
            vals.append(Fraction(int(rng.integers(0, 10001)), 1000))
        else:
            vals.append(float(rng.uniform(0.0, 10.0)))
    return RealFunction(space, tuple(vals))


def random_signed(rng: np.random.Generator, space: FiniteSpace, exact: bool = False) -> RealFunction:
    """Values uniform on [-10, 10]."""
    return RealFunction(space, tuple(random_scalar(rng, exact) for _ in range(space.n)))


def random_scalar(rng: np.random.Generator, exact: bool = False, bound: int = 10):
    if exact:
        return Fraction(int(rng.integers(-bound * 1000, bound * 1000 + 1)), 1000)
    return float(rng.uniform(-bound, bound))


def random_subset(rng: np.random.Generator, n: int) -> int:
    return int(rng.integers(0, 1 << n))
