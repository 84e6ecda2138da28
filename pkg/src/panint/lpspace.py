"""Pan-integral L^p norms, the induced metric and the inequalities behind it."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .core import Capacity, PanintError, RealFunction, is_subadditive, same_space, tolerance_for
from .generators import make_rng, random_signed
from .integrals import pan_pos
from .report import VerificationReport, Violation


class BadExponent(PanintError):
    pass


class NotSubadditive(PanintError):
    pass


@dataclass(frozen=True)
class NormParams:
    """Conjugate exponents; ``q`` is ``math.inf`` when ``p == 1``."""

    p: float
    q: float

    def __post_init__(self):
        if not self.p >= 1 or not self.q >= 1:
            raise BadExponent(f"exponents must be >= 1, got p={self.p}, q={self.q}")
        if math.isinf(self.q):
            if self.p != 1:
                raise BadExponent("q = inf requires p = 1")
        elif math.isinf(self.p):
            if self.q != 1:
                raise BadExponent("p = inf requires q = 1")
        elif abs(1 / self.p + 1 / self.q - 1) > 1e-12:
            raise BadExponent(f"1/p + 1/q must equal 1, got p={self.p}, q={self.q}")

    @classmethod
    def from_p(cls, p) -> "NormParams":
        if not p >= 1:
            raise BadExponent(f"p must be >= 1, got {p}")
        return cls(p, math.inf if p == 1 else p / (p - 1))


def _is_integer(p) -> bool:
    return not isinstance(p, bool) and float(p).is_integer()


def _power(f: RealFunction, p) -> RealFunction:
    """``|f|**p``; integer ``p`` keeps rationals exact, other ``p`` go to float."""
    g = abs(f)
    if _is_integer(p):
        return g ** int(p)
    return RealFunction(g.space, tuple(float(v) ** float(p) for v in g))


def p_norm(f: RealFunction, mu: Capacity, p=1):
    """``(pan |f|**p) ** (1/p)``; exact only for ``p == 1`` with rational data."""
    if not p >= 1:
        raise BadExponent(f"p must be >= 1, got {p}")
    same_space(f, mu)
    integral = pan_pos(_power(f, p), mu).value
    if _is_integer(p) and int(p) == 1:
        return integral
    return float(integral) ** (1.0 / float(p))


def ess_sup(f: RealFunction, mu: Capacity):
    """Smallest ``c`` with ``mu(|f| > c) == 0``."""
    same_space(f, mu)
    g = abs(f)
    levels = sorted(set(g.values) | {g.values[0] * 0})
    for c in levels:
        above = 0
        for i, v in enumerate(g):
            if v > c:
                above |= 1 << i
        if mu.is_null(above):
            return c
    return levels[-1]


def distance(f: RealFunction, g: RealFunction, mu: Capacity, p=1):
    return p_norm(f - g, mu, p)


def cauchy_distances(f: RealFunction, mu: Capacity, p=1, k_max: int = 30) -> list:
    """``rho(f_k, f)`` for ``f_k = f * (1 - 2**-k)``, k = 1..k_max."""
    out = []
    for k in range(1, k_max + 1):
        factor = 1 - Fraction(1, 2**k) if f.exact else 1 - 2.0**-k
        out.append(distance(f * factor, f, mu, p))
    return out


@dataclass(frozen=True)
class InequalityReport:
    name: str
    lhs: object
    rhs: object
    slack: object
    holds: bool
    advisory: bool = False  # capacity is not subadditive; a failure proves nothing

    def to_dict(self) -> dict:
        from .io import format_number

        return {
            "name": self.name,
            "lhs": format_number(self.lhs),
            "rhs": format_number(self.rhs),
            "slack": format_number(self.slack),
            "holds": self.holds,
            "advisory": self.advisory,
        }


def _report(name, lhs, rhs, advisory):
    slack = rhs - lhs
    tol = tolerance_for(lhs, rhs)
    return InequalityReport(name, lhs, rhs, slack, slack >= -tol, advisory)


def holder_check(f, g, mu: Capacity, p, q=None, subadditive: bool | None = None) -> InequalityReport:
    """``||f g||_1 <= ||f||_p ||g||_q``; ``q`` defaults to the conjugate of ``p``."""
    params = NormParams.from_p(p) if q is None else NormParams(p, q)
    if subadditive is None:
        subadditive = is_subadditive(mu).holds
    lhs = p_norm(f * g, mu, 1)
    g_norm = ess_sup(g, mu) if math.isinf(params.q) else p_norm(g, mu, params.q)
    rhs = p_norm(f, mu, params.p) * g_norm
    return _report("holder", lhs, rhs, not subadditive)


def minkowski_check(f, g, mu: Capacity, p, subadditive: bool | None = None) -> InequalityReport:
    """``||f + g||_p <= ||f||_p + ||g||_p``."""
    NormParams.from_p(p)
    if subadditive is None:
        subadditive = is_subadditive(mu).holds
    lhs = p_norm(f + g, mu, p)
    rhs = p_norm(f, mu, p) + p_norm(g, mu, p)
    return _report("minkowski", lhs, rhs, not subadditive)


def metric_trial(mu: Capacity, p, rng, trial: int, exact: bool = False) -> list[Violation]:
    """Check symmetry, identity of indiscernibles and the triangle on one triple."""
    space = mu.space
    f, g, h = (random_signed(rng, space, exact) for _ in range(3))
    out = []

    def dist(a, b):
        return distance(a, b, mu, p)

    fg, gf = dist(f, g), dist(g, f)
    if fg != gf:
        out.append(Violation(trial, mu, {"f": f, "g": g}, fg, gf, fg - gf, "symmetry"))

    # perturb f on a random set, preferring a null one when it exists
    null_sets = [s for s in range(1, space.full + 1) if mu.is_null(s)]
    if null_sets and rng.random() < 0.5:
        pert = null_sets[int(rng.integers(len(null_sets)))]
    else:
        pert = int(rng.integers(0, space.full + 1))
    shift = [(1 + int(rng.integers(0, 5))) if (pert >> i) & 1 else 0 for i in range(space.n)]
    f2 = f + RealFunction(space, tuple(Fraction(v) if f.exact else float(v) for v in shift))
    rho = dist(f, f2)
    zero = rho == 0
    null = mu.is_null(f.differs_on(f2))
    if zero != null:
        out.append(Violation(trial, mu, {"f": f, "g": f2}, rho, 0, rho, "identity"))

    lhs = dist(f, h)
    rhs = dist(f, g) + dist(g, h)
    if rhs - lhs < -tolerance_for(lhs, rhs):
        out.append(Violation(trial, mu, {"f": f, "g": g, "h": h}, lhs, rhs, rhs - lhs, "triangle"))
    return out


def metric_axioms_check(mu: Capacity, p, trials: int, seed: int) -> VerificationReport:
    """Randomized metric-axiom check for ``rho`` on a fixed subadditive capacity."""
    NormParams.from_p(p)
    rep = is_subadditive(mu)
    if not rep.holds:
        raise NotSubadditive(f"metric axioms need a subadditive capacity; witness {rep.witness}")
    exact = mu.exact and _is_integer(p) and int(p) == 1
    witnesses = []
    for t in range(trials):
        witnesses.extend(metric_trial(mu, p, make_rng(seed + t), t, exact))
    return VerificationReport(
        "metric", trials, seed, 1e-9, exact, tuple(witnesses), params={"p": p}
    )
