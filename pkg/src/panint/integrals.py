"""Pan, Choquet and concave integrals on finite spaces.

Every engine returns an :class:`IntegralResult` carrying a witness that
reproduces the value: an optimal partition for the pan-integral, the level
chain for the Choquet integral, and a dual certificate for the concave
integral.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .core import (
    Capacity,
    NegativeInput,
    RealFunction,
    TooLarge,
    conjugate,
    members,
    same_space,
    submasks,
)
from .lp import DualCertificate, solve_cover_dual

ORACLE_MAX_POINTS = 10


@dataclass(frozen=True)
class PartitionValuation:
    """Disjoint blocks with coefficients; worth ``sum(coef * mu(block))``."""

    blocks: tuple[tuple[int, object], ...]

    def value(self, mu: Capacity):
        return sum((c * mu[s] for s, c in self.blocks), mu.zero)

    def is_disjoint(self) -> bool:
        seen = 0
        for s, _ in self.blocks:
            if s & seen:
                return False
            seen |= s
        return True

    def is_feasible(self, f: RealFunction) -> bool:
        """Coefficients are nonnegative and lie below ``f`` on their blocks."""
        if not self.is_disjoint():
            return False
        return all(c >= 0 and all(f[i] >= c for i in members(s)) for s, c in self.blocks)


@dataclass(frozen=True)
class SignedWitness:
    positive: PartitionValuation
    negative: PartitionValuation


@dataclass(frozen=True)
class LevelChain:
    """Nested upper-level sets with their value increments (Choquet witness)."""

    steps: tuple[tuple[int, object], ...]

    def value(self, mu: Capacity):
        return sum((d * mu[s] for s, d in self.steps), mu.zero)


Witness = Union[PartitionValuation, SignedWitness, LevelChain, DualCertificate, None]


@dataclass(frozen=True)
class IntegralResult:
    value: object
    witness: Witness
    engine: str  # one of: dp, enumeration, lp, sorted-levels


def _check_nonnegative(f: RealFunction, mu: Capacity) -> None:
    same_space(f, mu)
    for i, v in enumerate(f):
        if v < 0:
            raise NegativeInput(f"f({f.space.labels[i]}) = {v} is negative")


def _zero(f: RealFunction, mu: Capacity):
    return mu.zero if f.exact else 0.0


# --------------------------------------------------------------------------
# pan-integral


def pan_pos(f: RealFunction, mu: Capacity) -> IntegralResult:
    """Pan-integral of a nonnegative function by subset dynamic programming.

    ``best(S) = max over blocks A of S containing the lowest point of S of
    min_f(A) * mu(A) + best(S - A)``, run over subsets of the positive set
    only.  Cost is ``3**k`` for ``k`` positive points.
    """
    _check_nonnegative(f, mu)
    zero = _zero(f, mu)
    pts = members(f.positive_set())
    k = len(pts)
    size = 1 << k
    # compressed masks over the positive points
    full = [0] * size
    fmin = [None] * size
    weight = [zero] * size
    for c in range(1, size):
        low = c & -c
        i = low.bit_length() - 1
        rest = c ^ low
        full[c] = full[rest] | (1 << pts[i])
        v = f[pts[i]]
        fmin[c] = v if rest == 0 or v < fmin[rest] else fmin[rest]
        weight[c] = fmin[c] * mu[full[c]]

    best = [zero] * size
    choice = [0] * size
    for c in range(1, size):
        low = c & -c
        rest = c ^ low
        top = None
        pick = 0
        for sub in submasks(rest):
            a = sub | low
            cand = weight[a] + best[c ^ a]
            if top is None or cand > top:
                top = cand
                pick = a
        best[c] = top
        choice[c] = pick

    blocks = []
    c = size - 1
    while c:
        a = choice[c]
        if fmin[a] != 0:
            blocks.append((full[a], fmin[a]))
        c ^= a
    blocks.sort()
    return IntegralResult(best[size - 1], PartitionValuation(tuple(blocks)), "dp")


def set_partitions(items: list):
    """Yield every partition of ``items`` as a list of blocks (lists)."""
    if not items:
        yield []
        return
    head, tail = items[0], items[1:]
    for part in set_partitions(tail):
        yield [[head]] + part
        for j in range(len(part)):
            yield part[:j] + [[head] + part[j]] + part[j + 1 :]


def pan_pos_oracle(f: RealFunction, mu: Capacity):
    """Pan-integral by brute force over all partitions of the positive set."""
    _check_nonnegative(f, mu)
    if mu.n > ORACLE_MAX_POINTS:
        raise TooLarge(f"partition oracle limited to n <= {ORACLE_MAX_POINTS}")
    best = _zero(f, mu)
    for part in set_partitions(members(f.positive_set())):
        total = _zero(f, mu)
        for block in part:
            s = 0
            for i in block:
                s |= 1 << i
            total += min(f[i] for i in block) * mu[s]
        if total > best:
            best = total
    return best


def pan_signed(f: RealFunction, mu: Capacity) -> IntegralResult:
    """Symmetric extension: integral of the positive part minus the negative part."""
    same_space(f, mu)
    pos = pan_pos(f.positive_part(), mu)
    neg = pan_pos(f.negative_part(), mu)
    return IntegralResult(pos.value - neg.value, SignedWitness(pos.witness, neg.witness), "dp")


def pan_on_set(f: RealFunction, mu: Capacity, a: int) -> IntegralResult:
    """Pan-integral of ``f`` restricted to the subset ``a``."""
    same_space(f, mu)
    mu.space.check(a)
    g = f.mask(a)
    return pan_pos(g, mu) if g.is_nonnegative() else pan_signed(g, mu)


def pan(f: RealFunction, mu: Capacity):
    """Value of the (signed) pan-integral."""
    return (pan_pos(f, mu) if f.is_nonnegative() else pan_signed(f, mu)).value


# --------------------------------------------------------------------------
# Choquet


def choquet_pos(f: RealFunction, mu: Capacity) -> IntegralResult:
    _check_nonnegative(f, mu)
    prev = _zero(f, mu)
    total = _zero(f, mu)
    steps = []
    for level in sorted(set(v for v in f if v > 0)):
        upper = 0
        for i, v in enumerate(f):
            if v >= level:
                upper |= 1 << i
        steps.append((upper, level - prev))
        total += (level - prev) * mu[upper]
        prev = level
    return IntegralResult(total, LevelChain(tuple(steps)), "sorted-levels")


def choquet_symmetric(f: RealFunction, mu: Capacity):
    same_space(f, mu)
    return choquet_pos(f.positive_part(), mu).value - choquet_pos(f.negative_part(), mu).value


def choquet_asymmetric(f: RealFunction, mu: Capacity):
    same_space(f, mu)
    return (
        choquet_pos(f.positive_part(), mu).value
        - choquet_pos(f.negative_part(), conjugate(mu)).value
    )


# --------------------------------------------------------------------------
# concave


def concave_integral(f: RealFunction, mu: Capacity) -> IntegralResult:
    """Best value of ``sum lambda_S mu(S)`` over overlapping covers below ``f``."""
    _check_nonnegative(f, mu)
    cert = solve_cover_dual(f, mu)
    return IntegralResult(cert.objective, cert, "lp")
