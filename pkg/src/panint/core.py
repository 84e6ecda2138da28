"""Finite measurable spaces, capacities and real functions.

Subsets of an ``n``-point space are encoded as integers in ``[0, 2**n)``;
bit ``i`` set means point ``i`` is a member.  Every capacity is defined on
the full power set.

Two numeric modes share one code path.  In exact mode all values are
:class:`fractions.Fraction` and comparisons are exact; in float mode values
are binary64 and predicates use :data:`FLOAT_TOL` absolute.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Mapping, Sequence

import numpy as np

MAX_POINTS = 16
FLOAT_TOL = 1e-12


class PanintError(ValueError):
    """Base class for input errors raised by this package."""


class MissingSet(PanintError):
    def __init__(self, subset: int):
        self.subset = subset
        super().__init__(f"no value given for subset {members(subset)}")


class NonMonotone(PanintError):
    def __init__(self, a: int, b: int, va, vb):
        self.witness = (a, b)
        super().__init__(
            f"monotonicity violated: mu({members(a)})={va} > mu({members(b)})={vb}"
        )


class NegativeValue(PanintError):
    def __init__(self, subset: int, value):
        self.subset = subset
        super().__init__(f"negative value {value} for subset {members(subset)}")


class ZeroTotal(PanintError):
    pass


class NonFinite(PanintError):
    pass


class SpaceMismatch(PanintError):
    pass


class NegativeInput(PanintError):
    pass


class TooLarge(PanintError):
    pass


# --------------------------------------------------------------------------
# numbers


def is_exact(x) -> bool:
    return isinstance(x, Rational)


def to_exact(x) -> Fraction:
    """Parse ``x`` as an exact rational; floats are read by their decimal repr."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not numeric values")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, float):
        if not math.isfinite(x):
            raise NonFinite(f"non-finite value {x!r}")
        return Fraction(repr(x))
    if isinstance(x, str):
        try:
            return Fraction(x.strip())
        except (ValueError, ZeroDivisionError):
            low = x.strip().lower()
            if low in {"inf", "+inf", "-inf", "infinity", "nan"}:
                raise NonFinite(f"non-finite value {x!r}") from None
            raise
    return Fraction(x)


def to_float(x) -> float:
    v = float(x)
    if not math.isfinite(v):
        raise NonFinite(f"non-finite value {x!r}")
    return v


def close(a, b, rel: float = 1e-9) -> bool:
    """Equality under the package tolerance policy.

    Exact operands must match exactly; otherwise the difference may be
    ``rel`` relative for magnitudes >= 1 and ``rel`` absolute below.
    """
    if is_exact(a) and is_exact(b):
        return a == b
    a, b = float(a), float(b)
    return abs(a - b) <= rel * max(1.0, abs(a), abs(b))


def tolerance_for(*values, rel: float = 1e-9):
    """Allowed slack for an inequality among ``values`` (0 when all exact)."""
    if all(is_exact(v) for v in values):
        return 0
    return rel * max([1.0] + [abs(float(v)) for v in values])


# --------------------------------------------------------------------------
# subsets


def subset_index(points: Iterable[int]) -> int:
    s = 0
    for i in points:
        if i < 0:
            raise ValueError(f"negative point index {i}")
        s |= 1 << i
    return s


def members(s: int) -> list[int]:
    out = []
    i = 0
    while s:
        if s & 1:
            out.append(i)
        s >>= 1
        i += 1
    return out


def popcount(s: int) -> int:
    return bin(s).count("1")


def submasks(s: int):
    """All submasks of ``s`` in decreasing order, ending with 0."""
    sub = s
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & s


# --------------------------------------------------------------------------
# domain types


@dataclass(frozen=True)
class FiniteSpace:
    labels: tuple[str, ...]

    def __post_init__(self):
        labels = tuple(str(x) for x in self.labels)
        object.__setattr__(self, "labels", labels)
        if not 1 <= len(labels) <= MAX_POINTS:
            raise PanintError(f"point count must be in [1, {MAX_POINTS}], got {len(labels)}")
        if len(set(labels)) != len(labels):
            raise PanintError("point labels must be distinct")

    @classmethod
    def of(cls, n: int) -> "FiniteSpace":
        return cls(tuple(f"x{i + 1}" for i in range(n)))

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    def __len__(self):
        return self.n

    def check(self, s: int) -> int:
        if not 0 <= s <= self.full:
            raise PanintError(f"subset index {s} out of range for n={self.n}")
        return s


def _as_array(values: Sequence, exact: bool) -> np.ndarray:
    return np.array(values, dtype=object if exact else np.float64)


@dataclass(frozen=True)
class Capacity:
    """A monotone set function on all subsets of ``space``.

    ``values[s]`` is the measure of the subset with index ``s``.  All
    invariants are checked on construction.
    """

    space: FiniteSpace
    values: tuple
    exact: bool = field(init=False)

    def __post_init__(self):
        vals = tuple(self.values)
        if len(vals) != 1 << self.space.n:
            raise PanintError(
                f"capacity table needs {1 << self.space.n} entries, got {len(vals)}"
            )
        exact = all(is_exact(v) for v in vals)
        if exact:
            vals = tuple(Fraction(v) for v in vals)
        else:
            vals = tuple(to_float(v) for v in vals)
        object.__setattr__(self, "values", vals)
        object.__setattr__(self, "exact", exact)
        _check_capacity(self.space, vals, exact)

    @property
    def n(self) -> int:
        return self.space.n

    @property
    def total(self):
        return self.values[-1]

    @property
    def zero(self):
        return Fraction(0) if self.exact else 0.0

    def __getitem__(self, s: int):
        return self.values[s]

    def array(self) -> np.ndarray:
        return _as_array(self.values, self.exact)

    def is_null(self, s: int) -> bool:
        v = self.values[s]
        return v == 0 if self.exact else abs(v) <= FLOAT_TOL

    def as_float(self) -> "Capacity":
        if not self.exact:
            return self
        return Capacity(self.space, tuple(float(v) for v in self.values))

    def as_exact(self) -> "Capacity":
        if self.exact:
            return self
        return Capacity(self.space, tuple(to_exact(v) for v in self.values))

    @classmethod
    def from_function(cls, space: FiniteSpace, fn, exact: bool = True) -> "Capacity":
        """Tabulate ``fn(frozenset_of_point_indices)`` over the power set."""
        conv = to_exact if exact else to_float
        vals = [0] + [conv(fn(frozenset(members(s)))) for s in range(1, 1 << space.n)]
        return cls(space, tuple(conv(v) for v in vals))


def _check_capacity(space: FiniteSpace, vals: tuple, exact: bool) -> None:
    if not exact:
        for s, v in enumerate(vals):
            if not math.isfinite(v):
                raise NonFinite(f"non-finite value {v} for subset {members(s)}")
    if vals[0] != 0:
        raise PanintError(f"mu(empty set) must be 0, got {vals[0]}")
    for s, v in enumerate(vals):
        if v < 0:
            raise NegativeValue(s, v)
    if not vals[-1] > 0:
        raise ZeroTotal(f"mu(X) must be positive, got {vals[-1]}")
    witness = monotonicity_witness(space.n, vals, exact)
    if witness is not None:
        a, b = witness
        raise NonMonotone(a, b, vals[a], vals[b])


def monotonicity_witness(n: int, vals: Sequence, exact: bool):
    """Lexicographically smallest ``(A, B)`` with ``A < B`` and ``mu(A) > mu(B)``."""
    arr = _as_array(vals, exact)
    size = 1 << n
    idx = np.arange(size)
    # supmin[s] = min of mu over supersets of s
    supmin = arr.copy()
    for i in range(n):
        bit = 1 << i
        lo = idx[(idx & bit) == 0]
        supmin[lo] = np.minimum(supmin[lo], supmin[lo | bit])
    bad = np.nonzero(supmin < arr)[0]
    if len(bad) == 0:
        return None
    a = int(bad[0])
    sup = idx[(idx & a) == a]
    b = int(sup[np.nonzero(arr[sup] < arr[a])[0][0]])
    return a, b


def validate_capacity(raw_table: Mapping, space: FiniteSpace, exact: bool = True) -> Capacity:
    """Build a :class:`Capacity` from a mapping of subsets to values.

    Keys may be subset indices or iterables of point indices.  The empty set
    may be omitted.  Values may be numbers or decimal strings.
    """
    conv = to_exact if exact else to_float
    table: dict[int, object] = {}
    for key, value in raw_table.items():
        s = key if isinstance(key, int) else subset_index(key)
        space.check(s)
        v = conv(value)
        if v < 0:
            raise NegativeValue(s, v)
        table[s] = v
    table.setdefault(0, conv(0))
    for s in range(1 << space.n):
        if s not in table:
            raise MissingSet(s)
    return Capacity(space, tuple(table[s] for s in range(1 << space.n)))


@dataclass(frozen=True)
class RealFunction:
    space: FiniteSpace
    values: tuple

    def __post_init__(self):
        vals = tuple(self.values)
        if len(vals) != self.space.n:
            raise SpaceMismatch(
                f"function has {len(vals)} values, space has {self.space.n} points"
            )
        if all(is_exact(v) for v in vals):
            vals = tuple(Fraction(v) for v in vals)
        else:
            vals = tuple(to_float(v) for v in vals)
        object.__setattr__(self, "values", vals)

    @property
    def exact(self) -> bool:
        return all(isinstance(v, Fraction) for v in self.values)

    def __getitem__(self, i: int):
        return self.values[i]

    def __iter__(self):
        return iter(self.values)

    def __len__(self):
        return len(self.values)

    def _new(self, vals) -> "RealFunction":
        return RealFunction(self.space, tuple(vals))

    def _other(self, g: "RealFunction"):
        if g.space != self.space:
            raise SpaceMismatch("functions live on different spaces")
        return g.values

    def __add__(self, g):
        return self._new(a + b for a, b in zip(self.values, self._other(g)))

    def __sub__(self, g):
        return self._new(a - b for a, b in zip(self.values, self._other(g)))

    def __mul__(self, g):
        if isinstance(g, RealFunction):
            return self._new(a * b for a, b in zip(self.values, self._other(g)))
        return self._new(a * g for a in self.values)

    __rmul__ = __mul__

    def __neg__(self):
        return self._new(-a for a in self.values)

    def __abs__(self):
        return self._new(abs(a) for a in self.values)

    def __pow__(self, p):
        return self._new(a ** p for a in self.values)

    def minimum(self, g: "RealFunction") -> "RealFunction":
        return self._new(min(a, b) for a, b in zip(self.values, self._other(g)))

    @property
    def zero(self):
        return Fraction(0) if self.exact else 0.0

    def positive_part(self) -> "RealFunction":
        z = self.zero
        return self._new(a if a > 0 else z for a in self.values)

    def negative_part(self) -> "RealFunction":
        z = self.zero
        return self._new(-a if a < 0 else z for a in self.values)

    def positive_set(self) -> int:
        return subset_index(i for i, a in enumerate(self.values) if a > 0)

    def nonzero_set(self) -> int:
        return subset_index(i for i, a in enumerate(self.values) if a != 0)

    def differs_on(self, g: "RealFunction") -> int:
        return subset_index(i for i, (a, b) in enumerate(zip(self.values, self._other(g))) if a != b)

    def mask(self, s: int) -> "RealFunction":
        z = self.zero
        return self._new(a if (s >> i) & 1 else z for i, a in enumerate(self.values))

    def is_nonnegative(self) -> bool:
        return all(a >= 0 for a in self.values)

    def as_float(self) -> "RealFunction":
        return self._new(float(a) for a in self.values)

    def as_exact(self) -> "RealFunction":
        return self._new(to_exact(a) for a in self.values)

    @classmethod
    def indicator(cls, space: FiniteSpace, s: int, exact: bool = True) -> "RealFunction":
        one, zero = (Fraction(1), Fraction(0)) if exact else (1.0, 0.0)
        return cls(space, tuple(one if (s >> i) & 1 else zero for i in range(space.n)))

    @classmethod
    def zeros(cls, space: FiniteSpace, exact: bool = True) -> "RealFunction":
        return cls.indicator(space, 0, exact)


def same_space(f: RealFunction, mu: Capacity) -> None:
    if f.space != mu.space:
        raise SpaceMismatch(
            f"function space {f.space.labels} differs from capacity space {mu.space.labels}"
        )


# --------------------------------------------------------------------------
# conjugation, predicates, atoms


def conjugate(mu: Capacity) -> Capacity:
    """The dual capacity ``A -> mu(X) - mu(X \\ A)``."""
    full = mu.space.full
    total = mu.total
    return Capacity(mu.space, tuple(total - mu[full ^ s] for s in range(full + 1)))


@dataclass(frozen=True)
class PropertyReport:
    name: str
    holds: bool
    witness: tuple[int, int] | None
    slack: object

    def to_dict(self) -> dict:
        from .io import format_number

        return {
            "holds": self.holds,
            "witness": None if self.witness is None else [members(s) for s in self.witness],
            "slack": format_number(self.slack),
        }


def _scan_pairs(mu: Capacity, name: str, margin_row) -> PropertyReport:
    """Exhaustive scan over ordered pairs ``(A, B)``.

    ``margin_row(arr, a, idx)`` returns, for fixed ``A = a`` and every ``B``,
    the margin ``rhs - lhs`` of the defining inequality (or ``None`` entries
    masked out by returning a boolean mask alongside).
    """
    arr = mu.array()
    idx = np.arange(len(arr))
    tol = 0 if mu.exact else FLOAT_TOL
    witness = None
    slack = None
    for a in range(len(arr)):
        margin, relevant = margin_row(arr, a, idx)
        if relevant is not None:
            if not relevant.any():
                continue
            margin = margin[relevant]
            cand = idx[relevant]
        else:
            cand = idx
        row_min = margin.min()
        if slack is None or row_min < slack:
            slack = row_min
        if witness is None:
            bad = np.nonzero(margin < -tol)[0]
            if len(bad):
                witness = (a, int(cand[bad[0]]))
    if slack is None:
        slack = mu.zero
    return PropertyReport(name, witness is None, witness, slack if mu.exact else float(slack))


def is_subadditive(mu: Capacity) -> PropertyReport:
    return _scan_pairs(
        mu, "subadditive", lambda arr, a, idx: (arr[a] + arr - arr[a | idx], None)
    )


def is_submodular(mu: Capacity) -> PropertyReport:
    return _scan_pairs(
        mu,
        "submodular",
        lambda arr, a, idx: (arr[a] + arr - arr[a | idx] - arr[a & idx], None),
    )


def is_supermodular(mu: Capacity) -> PropertyReport:
    return _scan_pairs(
        mu,
        "supermodular",
        lambda arr, a, idx: (arr[a | idx] + arr[a & idx] - arr[a] - arr, None),
    )


def is_null_additive(mu: Capacity) -> PropertyReport:
    tol = 0 if mu.exact else FLOAT_TOL
    null = np.abs(mu.array()) <= tol

    def row(arr, a, idx):
        # mu(B) = 0 must leave mu(A u B) = mu(A); monotonicity gives >=, so
        # only mu(A u B) <= mu(A) needs checking
        return arr[a] - arr[a | idx], null

    return _scan_pairs(mu, "null-additive", row)


def minimal_atoms(mu: Capacity) -> list[int]:
    """Sets of positive measure all of whose proper subsets are null."""
    atoms = []
    for s in range(1, mu.space.full + 1):
        if mu.is_null(s):
            continue
        if all(mu.is_null(s & ~(1 << i)) for i in members(s)):
            atoms.append(s)
    return atoms
