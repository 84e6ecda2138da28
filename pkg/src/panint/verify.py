"""Randomized and golden checks of the pan-integral's algebraic properties.

Each suite draws, per trial ``t``, everything from ``make_rng(seed + t)``:
the capacity (from a family, or a fixed capacity) and the integrands.  A
suite never stops at the first failure; every violation is kept as a
:class:`~panint.report.Violation`.  Trials may run in worker processes
(``workers`` argument or ``PANINT_THREADS``); results are merged in trial
order, so the report does not depend on the worker count.
"""

from __future__ import annotations

import itertools
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import partial
from typing import Sequence, Union

from .core import (
    Capacity,
    FiniteSpace,
    PanintError,
    RealFunction,
    is_null_additive,
    is_subadditive,
    members,
    minimal_atoms,
    tolerance_for,
)
from .generators import (
    FAMILIES,
    SUBADDITIVE_FAMILIES,
    gen_capacity,
    make_rng,
    random_nonnegative,
    random_scalar,
    random_signed,
    random_subset,
)
from .integrals import choquet_pos, concave_integral, pan_on_set, pan_pos, pan_signed
from .lpspace import NotSubadditive, holder_check, metric_trial, minkowski_check
from .report import VerificationReport, Violation

TOL = 1e-9
DEFAULT_N = (2, 8)
LEVI_STEPS = 30

Family = Union[str, Sequence[str], Capacity]


class VerificationFailure(AssertionError):
    pass


# --------------------------------------------------------------------------
# instance drawing


def resolve_family(family: Family):
    """Family name(s) -> fixed capacity or tuple of family names.

    ``"subadditive"`` expands to the three provably subadditive families and
    ``"all"`` to every family; comma-separated names are accepted.
    """
    if isinstance(family, Capacity):
        return family
    if isinstance(family, str):
        names = [x.strip() for x in family.split(",") if x.strip()]
    else:
        names = list(family)
    out = []
    for name in names:
        if name == "subadditive":
            out.extend(SUBADDITIVE_FAMILIES)
        elif name == "all":
            out.extend(FAMILIES)
        elif name in FAMILIES:
            out.append(name)
        else:
            raise PanintError(f"unknown capacity family {name!r}")
    if not out:
        raise PanintError("empty capacity family list")
    return tuple(out)


def _n_range(n) -> tuple[int, int]:
    if isinstance(n, int):
        return n, n
    lo, hi = n
    return int(lo), int(hi)


def draw_capacity(rng, family, n, exact: bool, trial: int) -> Capacity:
    fam = resolve_family(family)
    if isinstance(fam, Capacity):
        return fam.as_exact() if exact else fam.as_float()
    lo, hi = _n_range(n)
    size = int(rng.integers(lo, hi + 1))
    seed = int(rng.integers(0, 2**63))
    return gen_capacity(FiniteSpace.of(size), seed, fam[trial % len(fam)], exact)


def _bipartition(rng, space: FiniteSpace) -> int:
    return random_subset(rng, space.n)


def _workers(workers) -> int:
    if workers is None:
        try:
            workers = int(os.environ.get("PANINT_THREADS", "1"))
        except ValueError:
            workers = 1
    return max(1, workers)


def _run(suite, trial_fn, *, trials, seed, exact, params, workers) -> VerificationReport:
    nworkers = min(_workers(workers), max(1, trials))
    if nworkers > 1:
        with ProcessPoolExecutor(max_workers=nworkers) as pool:
            results = list(pool.map(trial_fn, range(trials), chunksize=max(1, trials // (4 * nworkers))))
    else:
        results = [trial_fn(t) for t in range(trials)]
    witnesses = tuple(v for res, _ in results for v in res)
    observations = tuple(v for _, obs in results for v in obs)
    return VerificationReport(suite, trials, seed, TOL, exact, witnesses, observations, params)


def _params(family, n, **extra) -> dict:
    fam = resolve_family(family)
    out = {"family": "fixed" if isinstance(fam, Capacity) else list(fam), "n": list(_n_range(n))}
    out.update(extra)
    return out


def _mismatch(lhs, rhs, *scale) -> bool:
    if all(isinstance(v, Fraction) for v in (lhs, rhs, *scale)):
        return lhs != rhs
    return abs(lhs - rhs) > tolerance_for(lhs, rhs, *scale, rel=TOL)


def _below(lhs, rhs) -> bool:
    """True when ``lhs <= rhs`` fails beyond tolerance."""
    return rhs - lhs < -tolerance_for(lhs, rhs, rel=TOL)


# --------------------------------------------------------------------------
# trials (module level so worker processes can pickle them)


def _t_additivity(t, *, family, n, seed, exact):
    rng = make_rng(seed + t)
    mu = draw_capacity(rng, family, n, exact, t)
    f = random_nonnegative(rng, mu.space, exact)
    g = random_nonnegative(rng, mu.space, exact)
    lhs = pan_pos(f + g, mu).value
    rhs = pan_pos(f, mu).value + pan_pos(g, mu).value
    if _mismatch(lhs, rhs):
        return [Violation(t, mu, {"f": f, "g": g}, lhs, rhs, rhs - lhs, "pan(f+g) != pan f + pan g")], []
    return [], []


def _t_set_additivity(t, *, family, n, seed, exact):
    rng = make_rng(seed + t)
    mu = draw_capacity(rng, family, n, exact, t)
    f = random_nonnegative(rng, mu.space, exact)
    a = random_subset(rng, mu.n)
    b = random_subset(rng, mu.n) & ~a
    lhs = pan_on_set(f, mu, a | b).value
    rhs = pan_on_set(f, mu, a).value + pan_on_set(f, mu, b).value
    if _mismatch(lhs, rhs):
        return [Violation(t, mu, {"f": f, "A": members(a), "B": members(b)}, lhs, rhs, rhs - lhs)], []
    return [], []


def _disjoint_pair(rng, mu, exact):
    mask = _bipartition(rng, mu.space)
    f = random_nonnegative(rng, mu.space, exact).mask(mask)
    g = random_nonnegative(rng, mu.space, exact).mask(mu.space.full ^ mask)
    return f, g


def _t_superadditivity(t, *, family, n, seed, exact):
    rng = make_rng(seed + t)
    mu = draw_capacity(rng, family, n, exact, t)
    f, g = _disjoint_pair(rng, mu, exact)
    lhs = pan_pos(f + g, mu).value
    rhs = pan_pos(f, mu).value + pan_pos(g, mu).value
    if _below(rhs, lhs):
        return [Violation(t, mu, {"f": f, "g": g}, lhs, rhs, lhs - rhs, "pan(f+g) < pan f + pan g")], []
    return [], []


def _t_disjoint_additivity(t, *, family, n, seed, exact):
    rng = make_rng(seed + t)
    mu = draw_capacity(rng, family, n, exact, t)
    f, g = _disjoint_pair(rng, mu, exact)
    lhs = pan_pos(f + g, mu).value
    rhs = pan_pos(f, mu).value + pan_pos(g, mu).value
    if _mismatch(lhs, rhs):
        return [Violation(t, mu, {"f": f, "g": g}, lhs, rhs, rhs - lhs)], []
    return [], []


def _t_linearity(t, *, family, n, seed, exact):
    rng = make_rng(seed + t)
    mu = draw_capacity(rng, family, n, exact, t)
    f = random_signed(rng, mu.space, exact)
    g = random_signed(rng, mu.space, exact)
    alpha = random_scalar(rng, exact)
    beta = random_scalar(rng, exact)
    pf = pan_signed(f, mu).value
    pg = pan_signed(g, mu).value
    lhs = pan_signed(f * alpha + g * beta, mu).value
    rhs = alpha * pf + beta * pg
    fns = {"f": f, "g": g, "alpha": alpha, "beta": beta}
    out = []
    if _mismatch(lhs, rhs, alpha * pf, beta * pg):
        out.append(Violation(t, mu, fns, lhs, rhs, rhs - lhs, "linearity"))
    neg = pan_signed(-f, mu).value
    if neg != -pf:
        out.append(Violation(t, mu, {"f": f}, neg, -pf, -pf - neg, "antisymmetry"))
    abs_int = pan_pos(abs(f), mu).value
    if _below(abs(pf), abs_int):
        out.append(Violation(t, mu, {"f": f}, abs(pf), abs_int, abs_int - abs(pf), "|pan f| <= pan |f|"))
    return out, []


def _t_singleton(t, *, family, n, seed, exact):
    rng = make_rng(seed + t)
    mu = draw_capacity(rng, family, n, exact, t)
    f = random_nonnegative(rng, mu.space, exact)
    lhs = pan_pos(f, mu).value
    rhs = sum((f[i] * mu[1 << i] for i in range(mu.n)), mu.zero if f.exact else 0.0)
    out = []
    if _mismatch(lhs, rhs):
        out.append(Violation(t, mu, {"f": f}, lhs, rhs, rhs - lhs, "pan f != sum f(x) mu({x})"))
    atoms = minimal_atoms(mu)
    if any(bin(a).count("1") != 1 for a in atoms):
        out.append(Violation(t, mu, {"atoms": [members(a) for a in atoms]}, 0, 0, 0, "non-singleton atom"))
    return out, []


def _t_ae(t, *, family, n, seed, exact):
    rng = make_rng(seed + t)
    for attempt in range(100):
        mu = draw_capacity(rng, family, n, exact, t + attempt)
        if is_null_additive(mu).holds:
            break
    else:
        return [], []
    f = random_nonnegative(rng, mu.space, exact)
    null_sets = [0] + [s for s in range(1, mu.space.full + 1) if mu.is_null(s)]
    null = null_sets[int(rng.integers(len(null_sets)))]
    other = random_nonnegative(rng, mu.space, exact)
    g = f.mask(mu.space.full ^ null) + other.mask(null)
    lhs = pan_pos(f, mu).value
    rhs = pan_pos(g, mu).value
    if _mismatch(lhs, rhs):
        return [Violation(t, mu, {"f": f, "g": g, "null_set": members(null)}, lhs, rhs, rhs - lhs)], []
    return [], []


def _t_levi(t, *, family, n, seed, exact):
    rng = make_rng(seed + t)
    mu = draw_capacity(rng, family, n, exact, t)
    f = random_nonnegative(rng, mu.space, exact)
    limit = pan_pos(f, mu).value
    prev = None
    out = []
    for k in range(1, LEVI_STEPS + 1):
        factor = 1 - Fraction(1, 2**k) if exact else 1 - 2.0**-k
        v = pan_pos(f * factor, mu).value
        if prev is not None and _below(prev, v):
            out.append(Violation(t, mu, {"f": f, "k": k}, prev, v, v - prev, "sequence decreased"))
        prev = v
    bound = limit * (Fraction(2) ** (1 - LEVI_STEPS) if exact else 2.0 ** (1 - LEVI_STEPS))
    gap = abs(limit - prev)
    if exact:
        bad = gap > bound
    else:
        bad = gap > bound + TOL
    if bad:
        out.append(Violation(t, mu, {"f": f}, prev, limit, gap, "limit not reached"))
    return out, []


def _t_fatou(t, *, family, n, seed, exact):
    rng = make_rng(seed + t)
    mu = draw_capacity(rng, family, n, exact, t)
    g = random_nonnegative(rng, mu.space, exact)
    h = random_nonnegative(rng, mu.space, exact)
    lhs = pan_pos(g.minimum(h), mu).value
    rhs = min(pan_pos(g, mu).value, pan_pos(h, mu).value)
    if _below(lhs, rhs):
        return [Violation(t, mu, {"g": g, "h": h}, lhs, rhs, rhs - lhs)], []
    return [], []


def _t_coincide(t, *, family, n, seed, exact):
    rng = make_rng(seed + t)
    mu = draw_capacity(rng, family, n, exact, t)
    f = random_nonnegative(rng, mu.space, exact)
    p = pan_pos(f, mu).value
    c = choquet_pos(f, mu).value
    k = concave_integral(f, mu).value
    out, obs = [], []
    top = max(p, c)
    if _below(top, k):
        out.append(Violation(t, mu, {"f": f}, k, top, k - top, "concave < max(pan, choquet)"))
    if is_subadditive(mu).holds:
        if _mismatch(p, k):
            out.append(Violation(t, mu, {"f": f}, p, k, k - p, "pan != concave under subadditivity"))
    elif _mismatch(p, k):
        obs.append(Violation(t, mu, {"f": f}, p, k, k - p, "concave > pan"))
    return out, obs


def _t_lp(t, *, family, n, seed, exact, ps):
    rng = make_rng(seed + t)
    mu = draw_capacity(rng, family, n, exact, t)
    f = random_signed(rng, mu.space, exact)
    g = random_signed(rng, mu.space, exact)
    sub = is_subadditive(mu).holds
    out = []
    for p in ps:
        for rep in (holder_check(f, g, mu, p, subadditive=sub), minkowski_check(f, g, mu, p, subadditive=sub)):
            if not rep.holds:
                note = f"{rep.name} p={p}" + (" (advisory)" if rep.advisory else "")
                out.append(Violation(t, mu, {"f": f, "g": g}, rep.lhs, rep.rhs, rep.slack, note))
    return out, []


def _t_metric(t, *, family, n, seed, exact, ps):
    rng = make_rng(seed + t)
    mu = draw_capacity(rng, family, n, exact, t)
    rep = is_subadditive(mu)
    if not rep.holds:
        raise NotSubadditive(f"trial {t}: metric axioms need a subadditive capacity")
    p = ps[t % len(ps)]
    return metric_trial(mu, p, rng, t, exact and p == 1), []


# --------------------------------------------------------------------------
# suites


def _suite(name, trial, family, trials, seed, n, exact, workers, **extra):
    fn = partial(trial, family=family, n=n, seed=seed, exact=exact, **extra)
    params = _params(family, n, **{k: list(v) for k, v in extra.items()})
    return _run(name, fn, trials=trials, seed=seed, exact=exact, params=params, workers=workers)


def check_additivity(family: Family = "subadditive", trials=500, seed=0, n=DEFAULT_N, exact=False, workers=None):
    """pan(f + g) == pan f + pan g for nonnegative f, g."""
    return _suite("additivity", _t_additivity, family, trials, seed, n, exact, workers)


def check_set_additivity(family: Family = "subadditive", trials=500, seed=0, n=DEFAULT_N, exact=False, workers=None):
    """Integral over a disjoint union is the sum of the integrals."""
    return _suite("set-additivity", _t_set_additivity, family, trials, seed, n, exact, workers)


def check_disjoint_superadditivity(family: Family = "monotone-random", trials=500, seed=0, n=DEFAULT_N, exact=False, workers=None):
    """pan(f + g) >= pan f + pan g when the positive sets are disjoint; any capacity."""
    return _suite("disjoint-superadditivity", _t_superadditivity, family, trials, seed, n, exact, workers)


def check_disjoint_additivity(family: Family = "subadditive", trials=500, seed=0, n=DEFAULT_N, exact=False, workers=None):
    return _suite("disjoint-additivity", _t_disjoint_additivity, family, trials, seed, n, exact, workers)


def check_linearity(family: Family = "subadditive", trials=500, seed=0, n=DEFAULT_N, exact=False, workers=None):
    """pan(a f + b g) == a pan f + b pan g for signed f, g and a, b in [-10, 10]."""
    return _suite("linearity", _t_linearity, family, trials, seed, n, exact, workers)


def check_singleton_formula(family: Family = "subadditive", trials=300, seed=0, n=DEFAULT_N, exact=False, workers=None):
    return _suite("singleton", _t_singleton, family, trials, seed, n, exact, workers)


def check_ae_equality(family: Family = "all", trials=200, seed=0, n=DEFAULT_N, exact=False, workers=None):
    """Functions equal off a null set integrate alike (null-additive capacities only)."""
    return _suite("ae", _t_ae, family, trials, seed, n, exact, workers)


def check_levi(family: Family = "monotone-random", trials=200, seed=0, n=DEFAULT_N, exact=False, workers=None):
    return _suite("levi", _t_levi, family, trials, seed, n, exact, workers)


def check_fatou(family: Family = "monotone-random", trials=200, seed=0, n=DEFAULT_N, exact=False, workers=None):
    """Alternating g, h, g, h, ...: pan(min(g, h)) <= min(pan g, pan h)."""
    return _suite("fatou", _t_fatou, family, trials, seed, n, exact, workers)


def check_pan_equals_concave(family: Family = "subadditive", trials=200, seed=0, n=(2, 6), exact=False, workers=None):
    """Concave dominates pan and Choquet; equals pan when the capacity is subadditive.

    Strict ``concave > pan`` cases on non-subadditive capacities are kept as
    observations, not failures.
    """
    return _suite("coincide", _t_coincide, family, trials, seed, n, exact, workers)


def check_lp_inequalities(family: Family = "subadditive", trials=300, seed=0, n=DEFAULT_N, exact=False,
                          workers=None, ps=(1, 1.5, 2, 3)):
    """Hoelder and Minkowski for every exponent in ``ps``."""
    return _suite("lp", _t_lp, family, trials, seed, n, exact, workers, ps=tuple(ps))


def check_metric(family: Family = "subadditive", trials=200, seed=0, n=DEFAULT_N, exact=False,
                 workers=None, ps=(1, 1.5, 2, 3)):
    return _suite("metric", _t_metric, family, trials, seed, n, exact, workers, ps=tuple(ps))


SUITES = {
    "additivity": check_additivity,
    "set-additivity": check_set_additivity,
    "disjoint": (check_disjoint_superadditivity, check_disjoint_additivity),
    "linearity": check_linearity,
    "singleton": check_singleton_formula,
    "ae": check_ae_equality,
    "levi": check_levi,
    "fatou": check_fatou,
    "coincide": check_pan_equals_concave,
    "lp": check_lp_inequalities,
    "metric": check_metric,
}


def run_suite(name: str, family: Family | None = None, **kwargs) -> list[VerificationReport]:
    """Run one named suite (or ``"all"``); ``family=None`` keeps each suite's default."""
    if name == "all":
        return [r for key in SUITES for r in run_suite(key, family, **kwargs)]
    try:
        entry = SUITES[name]
    except KeyError:
        raise PanintError(f"unknown suite {name!r}; choose from {sorted(SUITES)} or 'all'") from None
    fns = entry if isinstance(entry, tuple) else (entry,)
    extra = {} if family is None else {"family": family}
    return [fn(**extra, **kwargs) for fn in fns]


# --------------------------------------------------------------------------
# counterexample search


@dataclass(frozen=True)
class SearchWitness:
    capacity: Capacity
    f: RealFunction
    g: RealFunction
    lhs: object
    rhs: object
    candidate: int
    kind: str
    choquet_lhs: object = None
    choquet_rhs: object = None

    def to_dict(self) -> dict:
        from .io import capacity_to_json, format_number, function_to_json

        out = {
            "found": True,
            "kind": self.kind,
            "candidate": self.candidate,
            "f": function_to_json(self.f),
            "g": function_to_json(self.g),
            "lhs": format_number(self.lhs),
            "rhs": format_number(self.rhs),
            "capacity": capacity_to_json(self.capacity),
        }
        if self.choquet_lhs is not None:
            out["choquet_lhs"] = format_number(self.choquet_lhs)
            out["choquet_rhs"] = format_number(self.choquet_rhs)
        return out


def _nonnegative_candidates(mu: Capacity, rng):
    space = mu.space
    exact = mu.exact
    full = space.full
    for a in range(1, full + 1):
        for b in range(a, full + 1):
            yield RealFunction.indicator(space, a, exact), RealFunction.indicator(space, b, exact)
    two = Fraction(2) if exact else 2.0
    for a in range(1, full + 1):
        for b in range(1, full + 1):
            f = RealFunction.indicator(space, a, exact) + RealFunction.indicator(space, full ^ a, exact) * two
            yield f, RealFunction.indicator(space, b, exact)
    while True:
        yield random_nonnegative(rng, space, exact), random_nonnegative(rng, space, exact)


def _signed_candidates(mu: Capacity, rng):
    # f on a small integer grid, split by a mask into parts whose positive
    # sets are disjoint: g = f on A, h = f off A
    space = mu.space
    exact = mu.exact
    conv = Fraction if exact else float
    for vals in itertools.product((1, -1, 2, -2), repeat=space.n):
        f = RealFunction(space, tuple(conv(v) for v in vals))
        for a in range(1, space.full):
            yield f.mask(a), f.mask(space.full ^ a)
    while True:
        f = random_signed(rng, space, exact)
        a = random_subset(rng, space.n)
        yield f.mask(a), f.mask(space.full ^ a)


def find_additivity_counterexample(mu: Capacity, budget: int = 10_000, seed: int = 0, signed: bool = False):
    """Search for a failure of additivity; ``None`` when the budget runs out.

    Nonnegative mode looks for ``pan(f + g) != pan f + pan g`` and tries
    indicator pairs, then two-valued functions, then random ones.  Signed mode
    looks for ``pan(g + h) < pan g + pan h`` with disjoint positive sets,
    i.e. a failure of disjoint superadditivity for signed integrands.
    """
    rng = make_rng(seed)
    gen = _signed_candidates(mu, rng) if signed else _nonnegative_candidates(mu, rng)
    for i, (f, g) in zip(range(budget), gen):
        if signed:
            lhs = pan_signed(f + g, mu).value
            rhs = pan_signed(f, mu).value + pan_signed(g, mu).value
            if _below(rhs, lhs) and _mismatch(lhs, rhs):
                return SearchWitness(mu, f, g, lhs, rhs, i, "signed-disjoint")
        else:
            lhs = pan_pos(f + g, mu).value
            rhs = pan_pos(f, mu).value + pan_pos(g, mu).value
            if _mismatch(lhs, rhs):
                return SearchWitness(mu, f, g, lhs, rhs, i, "nonnegative")
    return None


def is_comonotone(f: RealFunction, g: RealFunction) -> bool:
    n = len(f)
    return not any(
        (f[i] - f[j]) * (g[i] - g[j]) < 0 for i in range(n) for j in range(i + 1, n)
    )


def _comonotone_pair(rng, space: FiniteSpace, exact: bool):
    order = rng.permutation(space.n)
    a = sorted(random_nonnegative(rng, space, exact).values)
    b = sorted(random_nonnegative(rng, space, exact).values)
    fv = [None] * space.n
    gv = [None] * space.n
    for rank, i in enumerate(order):
        fv[i] = a[rank]
        gv[i] = b[rank]
    return RealFunction(space, tuple(fv)), RealFunction(space, tuple(gv))


@dataclass(frozen=True)
class ComonotoneSearch:
    found: bool
    witness: SearchWitness | None
    examined: int
    choquet_mismatches: int

    def to_dict(self) -> dict:
        out = self.witness.to_dict() if self.witness else {"found": False}
        out["examined"] = self.examined
        out["choquet_mismatches"] = self.choquet_mismatches
        return out


def find_comonotone_counterexample(mu_family: Family, budget: int = 10_000, seed: int = 0, n=(2, 6),
                                   exact: bool = False) -> ComonotoneSearch:
    """Look for comonotone f, g with pan(f + g) != pan f + pan g.

    Every examined pair is also checked for Choquet comonotonic additivity;
    disagreements are counted in ``choquet_mismatches``.
    """
    fam = resolve_family(mu_family)
    rng = make_rng(seed)

    def candidates():
        if isinstance(fam, Capacity):
            space, full = fam.space, fam.space.full
            for a in range(1, full + 1):
                for b in range(a + 1, full + 1):
                    if a & b == a:
                        yield fam, RealFunction.indicator(space, a, fam.exact), RealFunction.indicator(space, b, fam.exact)
        t = 0
        while True:
            mu = draw_capacity(rng, fam, n, exact, t)
            t += 1
            yield (mu, *_comonotone_pair(rng, mu.space, mu.exact))

    mismatches = 0
    examined = 0
    witness = None
    for i, (mu, f, g) in zip(range(budget), candidates()):
        examined += 1
        c_lhs = choquet_pos(f + g, mu).value
        c_rhs = choquet_pos(f, mu).value + choquet_pos(g, mu).value
        if _mismatch(c_lhs, c_rhs):
            mismatches += 1
        lhs = pan_pos(f + g, mu).value
        rhs = pan_pos(f, mu).value + pan_pos(g, mu).value
        if _mismatch(lhs, rhs):
            witness = SearchWitness(mu, f, g, lhs, rhs, i, "comonotone", c_lhs, c_rhs)
            break
    return ComonotoneSearch(witness is not None, witness, examined, mismatches)


# --------------------------------------------------------------------------
# golden instance


def golden_instance(exact: bool = True):
    """The four-point capacity and signed function of the bundled fixture."""
    from .io import capacity_from_json, fixture_path, function_from_json

    mu = capacity_from_json(fixture_path("golden4.capacity.json"), exact=exact)
    f = function_from_json(fixture_path("golden4.f.json"), mu.space, exact=exact)
    return mu, f


def reproduce_golden() -> dict:
    """Recompute the golden values exactly; raise on any mismatch."""
    mu, f = golden_instance(exact=True)
    g = f.mask(0b1001)  # points x1, x4
    h = f.mask(0b0110)  # points x2, x3
    checks = {
        "pan f+": (pan_pos(f.positive_part(), mu).value, Fraction(4)),
        "pan f-": (pan_pos(f.negative_part(), mu).value, Fraction(4)),
        "pan f": (pan_signed(f, mu).value, Fraction(0)),
        "pan g": (pan_signed(g, mu).value, Fraction(1, 2)),
        "pan h": (pan_signed(h, mu).value, Fraction(0)),
        "pan g+h": (pan_signed(g + h, mu).value, Fraction(0)),
    }
    bad = {k: v for k, v in checks.items() if v[0] != v[1]}
    if bad:
        raise VerificationFailure(f"golden values differ: {bad}")
    return {k: {"got": str(v[0]), "expected": str(v[1])} for k, v in checks.items()}
