"""Instance types, validation and exact integer linear algebra.

Everything here works on plain Python ints, which never overflow, so the
determinant and bound computations are exact for any input size.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import ceil
from typing import Sequence

Matrix = tuple[tuple[int, ...], ...]
Vector = tuple[int, ...]

MODES = ("greedy", "fptas", "exact-levels", "exact-paths", "oracle")


class InvalidInstance(ValueError):
    """Raised when a solver is handed an instance that fails validation."""

    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("; ".join(self.violations))


def _as_matrix(A) -> Matrix:
    return tuple(tuple(int(v) for v in row) for row in A)


def _as_vector(v) -> Vector:
    return tuple(int(x) for x in v)


@dataclass(frozen=True)
class KnapsackInstance:
    """Bounded m-dimensional knapsack: max c.x s.t. Ax <= b, 0 <= x <= u."""

    A: Matrix
    b: Vector
    c: Vector
    u: Vector

    def __post_init__(self):
        object.__setattr__(self, "A", _as_matrix(self.A))
        for name in ("b", "c", "u"):
            object.__setattr__(self, name, _as_vector(getattr(self, name)))

    @property
    def m(self) -> int:
        return len(self.A)

    @property
    def n(self) -> int:
        return len(self.A[0]) if self.A else len(self.c)

    def column(self, j: int) -> Vector:
        return tuple(row[j] for row in self.A)

    def objective(self, x: Sequence[int]) -> int:
        return sum(ci * xi for ci, xi in zip(self.c, x))

    def is_feasible(self, x: Sequence[int]) -> bool:
        if len(x) != self.n:
            return False
        if any(xi < 0 or xi > ui for xi, ui in zip(x, self.u)):
            return False
        return all(lhs <= bi for lhs, bi in zip(matvec(self.A, x), self.b))

    def with_rhs(self, b: Sequence[int]) -> "KnapsackInstance":
        return KnapsackInstance(self.A, b, self.c, self.u)

    def subset(self, cols: Sequence[int], b: Sequence[int] | None = None) -> "KnapsackInstance":
        """Sub-instance on the columns ``cols`` (optionally with a new rhs)."""
        A = tuple(tuple(row[j] for j in cols) for row in self.A)
        return KnapsackInstance(
            A,
            self.b if b is None else b,
            tuple(self.c[j] for j in cols),
            tuple(self.u[j] for j in cols),
        )


@dataclass(frozen=True)
class StandardFormInstance:
    """Bounded ILP in standard form: max c.x s.t. Ax = b, lo <= x <= up."""

    A: Matrix
    b: Vector
    c: Vector
    lo: Vector
    up: Vector

    def __post_init__(self):
        object.__setattr__(self, "A", _as_matrix(self.A))
        for name in ("b", "c", "lo", "up"):
            object.__setattr__(self, name, _as_vector(getattr(self, name)))

    @property
    def m(self) -> int:
        return len(self.A)

    @property
    def n(self) -> int:
        return len(self.A[0]) if self.A else len(self.c)

    def column(self, j: int) -> Vector:
        return tuple(row[j] for row in self.A)

    def objective(self, x: Sequence[int]) -> int:
        return sum(ci * xi for ci, xi in zip(self.c, x))

    def is_feasible(self, x: Sequence[int]) -> bool:
        if len(x) != self.n:
            return False
        if any(xi < l or xi > h for xi, l, h in zip(x, self.lo, self.up)):
            return False
        return matvec(self.A, x) == self.b


@dataclass
class SolveReport:
    """Outcome of any solver run.

    ``value`` and ``witness`` are ``None`` when ``status`` is ``"infeasible"``.
    """

    mode: str
    status: str = "optimal"
    value: int | None = None
    witness: Vector | None = None
    stats: dict = field(default_factory=dict)

    @property
    def feasible(self) -> bool:
        return self.status != "infeasible"


def matvec(A: Sequence[Sequence[int]], x: Sequence[int]) -> Vector:
    return tuple(sum(a * xi for a, xi in zip(row, x)) for row in A)


def validate(instance) -> list[str]:
    """Return every violated invariant of ``instance`` (empty list means ok)."""
    out = []
    A = instance.A
    m = len(A)
    if m < 1:
        return ["m >= 1"]
    n = len(A[0])
    if n < 1:
        out.append("n >= 1")
    if any(len(row) != n for row in A):
        out.append("A rows have equal length")
    if len(instance.b) != m:
        out.append("len(b) = m")
    if len(instance.c) != n:
        out.append("len(c) = n")
    if isinstance(instance, KnapsackInstance):
        if len(instance.u) != n:
            out.append("len(u) = n")
        if any(v < 0 for row in A for v in row):
            out.append("A nonnegative")
        if any(v < 0 for v in instance.b):
            out.append("b nonnegative")
        if any(v < 0 for v in instance.c):
            out.append("c nonnegative")
        if any(v < 0 for v in instance.u):
            out.append("u nonnegative")
    elif isinstance(instance, StandardFormInstance):
        if len(instance.lo) != n or len(instance.up) != n:
            out.append("len(lo) = len(up) = n")
        elif any(l > h for l, h in zip(instance.lo, instance.up)):
            out.append("lo <= up")
        if not out and rank(A) != m:
            out.append("rank(A) = m")
    else:
        raise TypeError(f"not an instance: {type(instance).__name__}")
    return out


def check(instance) -> None:
    violations = validate(instance)
    if violations:
        raise InvalidInstance(violations)


# -- exact integer linear algebra -------------------------------------------

def bareiss_det(M: Sequence[Sequence[int]]) -> int:
    """Determinant of a square integer matrix by fraction-free elimination."""
    a = [list(row) for row in M]
    k = len(a)
    if k == 0:
        return 1
    sign = 1
    prev = 1
    for i in range(k - 1):
        if a[i][i] == 0:
            for r in range(i + 1, k):
                if a[r][i] != 0:
                    a[i], a[r] = a[r], a[i]
                    sign = -sign
                    break
            else:
                return 0
        piv = a[i][i]
        for r in range(i + 1, k):
            for s in range(i + 1, k):
                # exact by Sylvester's identity
                a[r][s] = (a[r][s] * piv - a[r][i] * a[i][s]) // prev
        prev = piv
    return sign * a[k - 1][k - 1]


def rank(A: Sequence[Sequence[int]]) -> int:
    """Rank over the rationals using fraction-free row reduction."""
    a = [list(row) for row in A]
    if not a:
        return 0
    rows, cols = len(a), len(a[0])
    r = 0
    prev = 1
    for col in range(cols):
        piv_row = next((i for i in range(r, rows) if a[i][col] != 0), None)
        if piv_row is None:
            continue
        a[r], a[piv_row] = a[piv_row], a[r]
        piv = a[r][col]
        for i in range(r + 1, rows):
            for j in range(col + 1, cols):
                a[i][j] = (a[i][j] * piv - a[i][col] * a[r][j]) // prev
            a[i][col] = 0
        prev = piv
        r += 1
        if r == rows:
            break
    return r


def delta_k(A: Sequence[Sequence[int]], k: int) -> int:
    """Largest absolute k x k minor of ``A``."""
    m = len(A)
    n = len(A[0]) if m else 0
    if not 1 <= k <= min(m, n):
        raise ValueError(f"k={k} out of range 1..{min(m, n)}")
    if k == 1:
        return max(abs(v) for row in A for v in row)
    best = 0
    for rows in combinations(range(m), k):
        sub = [A[i] for i in rows]
        for cols in combinations(range(n), k):
            d = abs(bareiss_det([[row[j] for j in cols] for row in sub]))
            if d > best:
                best = d
    return best


def delta(A: Sequence[Sequence[int]]) -> int:
    """Largest absolute minor of order rank(A)."""
    r = rank(A)
    if r == 0:
        raise ValueError("delta of a zero matrix is undefined")
    return delta_k(A, r)


def proximity_bound(m: int, delta: int) -> int:
    """l1 proximity bound m (2m+1)^m Delta between LP and ILP optima."""
    if m < 1 or delta < 1:
        raise ValueError("need m >= 1 and delta >= 1")
    return m * (2 * m + 1) ** m * delta


def proximity_bound_inf(m: int, delta1: int) -> int:
    """l1 proximity bound m (2 m Delta_1 + 1)^m in terms of the max entry."""
    return m * (2 * m * delta1 + 1) ** m


def reachable_count_bound(m: int, gamma, delta: int) -> int:
    """Upper bound 2^m ceil(1 + gamma)^m Delta on |{Ax : |x|_1 <= gamma} cap Z^m|."""
    return 2 ** m * ceil(1 + gamma) ** m * delta
