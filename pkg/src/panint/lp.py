"""Cover LP behind the concave integral.

Primal (one variable per nonempty subset ``S``)::

    max  sum_S mu(S) * lam_S
    s.t. sum_{S containing x} lam_S <= f(x)   for every point x
         lam >= 0

Dual (one weight per point)::

    min  sum_x f(x) * y_x
    s.t. sum_{x in S} y_x >= mu(S)            for every nonempty S
         y >= 0

:func:`solve_cover_dual` runs a revised simplex on the ``n``-row primal.  Its
simplex multipliers are dual iterates, and pricing a column is exactly a scan
of the dual cover constraints, generated on the fly from the capacity table.
Entering and leaving variables follow Bland's rule.  In exact mode every
pivot is carried out in rationals; in float mode each iteration refactors the
basis with an LU solve (partial pivoting).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

import numpy as np

from .core import Capacity, NegativeInput, RealFunction, TooLarge, same_space

FEAS_TOL = 1e-12
ENUM_MAX_POINTS = 5
MAX_PIVOTS = 1_000_000


@dataclass(frozen=True)
class DualCertificate:
    """Point weights ``y`` whose cover constraints bound the primal.

    ``primal`` maps each basic subset to its coefficient in the optimal
    primal solution found alongside the certificate.
    """

    weights: tuple
    objective: object
    primal: dict = field(default_factory=dict, compare=False)

    def cover_slack(self, mu: Capacity):
        """Smallest ``sum_{x in S} y_x - mu(S)`` over nonempty ``S``."""
        sums = subset_sums(self.weights, mu.exact)
        return (sums[1:] - mu.array()[1:]).min()

    def is_feasible(self, mu: Capacity, tol: float = 1e-9) -> bool:
        if any(w < 0 for w in self.weights):
            return False
        slack = self.cover_slack(mu)
        if mu.exact and all(isinstance(w, Fraction) for w in self.weights):
            return slack >= 0
        return float(slack) >= -tol * max(1.0, float(mu.total))


def subset_sums(weights, exact: bool) -> np.ndarray:
    n = len(weights)
    sums = np.zeros(1 << n, dtype=object if exact else np.float64)
    if exact:
        sums[:] = Fraction(0)
    for i, w in enumerate(weights):
        lo = 1 << i
        sums[lo : 2 * lo] = sums[:lo] + w
    return sums


def _indicator(col: int, n: int) -> list[int]:
    # columns 1 .. 2**n - 1 are subsets, 2**n + x is the slack of point x
    size = 1 << n
    if col >= size:
        x = col - size
        return [1 if i == x else 0 for i in range(n)]
    return [(col >> i) & 1 for i in range(n)]


class _ExactBasis:
    def __init__(self, n, rhs):
        self.n = n
        self.inv = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
        self.xb = list(rhs)

    def duals(self, cb):
        return [sum(cb[i] * self.inv[i][j] for i in range(self.n)) for j in range(self.n)]

    def column(self, a):
        return [sum(self.inv[i][j] for j in range(self.n) if a[j]) for i in range(self.n)]

    def pivot(self, r, d):
        piv = d[r]
        row = [v / piv for v in self.inv[r]]
        xr = self.xb[r] / piv
        for i in range(self.n):
            if i != r and d[i] != 0:
                m = d[i]
                self.inv[i] = [a - m * b for a, b in zip(self.inv[i], row)]
                self.xb[i] -= m * xr
        self.inv[r] = row
        self.xb[r] = xr


class _FloatBasis:
    def __init__(self, n, rhs):
        self.n = n
        self.rhs = np.array(rhs, dtype=np.float64)
        self.cols = np.eye(n)
        self.xb = self.rhs.copy()

    def duals(self, cb):
        return list(np.linalg.solve(self.cols.T, np.array(cb, dtype=np.float64)))

    def column(self, a):
        return list(np.linalg.solve(self.cols, np.array(a, dtype=np.float64)))

    def replace(self, r, a):
        self.cols[:, r] = a
        self.xb = np.linalg.solve(self.cols, self.rhs)


def solve_cover_dual(f: RealFunction, mu: Capacity) -> DualCertificate:
    """Optimal point weights for the cover dual, with the matching primal."""
    same_space(f, mu)
    if not f.is_nonnegative():
        raise NegativeInput("cover LP needs a nonnegative function")
    n = mu.n
    size = 1 << n
    exact = mu.exact and f.exact
    if exact:
        mu_arr = mu.array()
        rhs = list(f.values)
        basis = _ExactBasis(n, rhs)
        tol = 0
    else:
        mu_arr = mu.as_float().array()
        rhs = [float(v) for v in f]
        basis = _FloatBasis(n, rhs)
        tol = FEAS_TOL * max(1.0, float(mu.total), max(rhs))

    def cost(col):
        return mu_arr[col] if col < size else (Fraction(0) if exact else 0.0)

    basic = [size + x for x in range(n)]
    for _ in range(MAX_PIVOTS):
        y = basis.duals([cost(c) for c in basic])
        reduced = mu_arr - subset_sums(y, exact)
        # Bland: lowest-index improving column; subsets precede slacks
        improving = np.nonzero(reduced[1:] > tol)[0]
        if len(improving):
            enter = int(improving[0]) + 1
        else:
            slack_idx = [x for x in range(n) if -y[x] > tol]
            if not slack_idx:
                break
            enter = size + slack_idx[0]
        a = _indicator(enter, n)
        d = basis.column(a)
        xb = basis.xb
        leave = None
        ratio = None
        for i in range(n):
            if d[i] > tol:
                r = xb[i] / d[i]
                if (
                    ratio is None
                    or r < ratio
                    or (r == ratio and basic[i] < basic[leave])
                ):
                    ratio, leave = r, i
        if leave is None:
            raise RuntimeError("cover LP reported unbounded; this cannot happen for finite data")
        if exact:
            basis.pivot(leave, d)
        else:
            basis.replace(leave, a)
        basic[leave] = enter
    else:
        raise RuntimeError(f"cover LP did not converge in {MAX_PIVOTS} pivots")

    if exact:
        weights = tuple(y)
    else:
        weights = tuple(max(0.0, float(v)) for v in y)
    objective = sum((fv * w for fv, w in zip(f.values if exact else rhs, weights)),
                    Fraction(0) if exact else 0.0)
    primal = {}
    for i, col in enumerate(basic):
        v = basis.xb[i]
        if col < size and v != 0:
            primal[col] = v if exact else float(v)
    return DualCertificate(weights, objective, primal)


def primal_enumeration_solution(f: RealFunction, mu: Capacity, chunk: int = 40000):
    """Brute-force primal optimum over all bases, returned as ``(value, lam)``.

    Every choice of ``n`` columns from the subset indicators and the slack
    identity is tried; nonsingular ones with a nonnegative basic solution are
    vertices of the feasible region.  Indicator determinants are integers, so
    singularity is detected robustly.
    """
    same_space(f, mu)
    if not f.is_nonnegative():
        raise NegativeInput("cover LP needs a nonnegative function")
    n = mu.n
    if n > ENUM_MAX_POINTS:
        raise TooLarge(f"basis enumeration limited to n <= {ENUM_MAX_POINTS}")
    size = 1 << n
    cols = list(range(1, size)) + [size + x for x in range(n)]
    a_mat = np.array([_indicator(c, n) for c in cols], dtype=np.float64).T
    costs = np.array([float(mu[c]) if c < size else 0.0 for c in cols])
    rhs = np.array([float(v) for v in f])

    best_val = 0.0
    best_lam: dict = {}
    combos = combinations(range(len(cols)), n)
    while True:
        block = np.array(list(_take(combos, chunk)), dtype=np.intp)
        if len(block) == 0:
            break
        mats = np.transpose(a_mat[:, block], (1, 0, 2))
        dets = np.linalg.det(mats)
        ok = np.abs(dets) > 0.5
        if not ok.any():
            continue
        block, mats = block[ok], mats[ok]
        xs = np.linalg.solve(mats, np.broadcast_to(rhs, (len(block), n))[..., None])[..., 0]
        feas = (xs >= -1e-9).all(axis=1)
        if not feas.any():
            continue
        vals = (costs[block] * xs).sum(axis=1)
        vals[~feas] = -np.inf
        j = int(np.argmax(vals))
        if vals[j] > best_val + 1e-12 * max(1.0, abs(best_val)):
            best_val = float(vals[j])
            best_lam = {
                cols[c]: float(x)
                for c, x in zip(block[j], xs[j])
                if cols[c] < size and x > 1e-12
            }
    return best_val, best_lam


def primal_enumeration_oracle(f: RealFunction, mu: Capacity) -> float:
    return primal_enumeration_solution(f, mu)[0]


def _take(it, k):
    for _, item in zip(range(k), it):
        yield item

