"""Exact linear algebra over a :class:`~grw.gf_arith.Field`.

Matrices are lists of rows of field ints.  Subspaces are stored by their
reduced row-echelon basis, which makes equality and hashing canonical.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterator, List, Sequence, Tuple

from .gf_arith import Field

Matrix = List[List[int]]
Vector = Tuple[int, ...]

DEFAULT_BUDGET = 10**7


class BudgetExceeded(RuntimeError):
    """Exhaustive enumeration would visit more objects than allowed."""


def _echelon(F: Field, rows: Sequence[Sequence[int]], ncols: int) -> Tuple[Matrix, List[int]]:
    add, mul, inv, neg = F.add_table, F.mul_table, F.inv_table, F.neg_table
    rows = [list(r) for r in rows]
    nrows = len(rows)
    pivots: List[int] = []
    rk = 0
    for c in range(ncols):
        if rk == nrows:
            break
        piv = None
        for i in range(rk, nrows):
            if rows[i][c]:
                piv = i
                break
        if piv is None:
            continue
        rows[rk], rows[piv] = rows[piv], rows[rk]
        prow = rows[rk]
        if prow[c] != 1:
            srow = mul[inv[prow[c]]]
            prow = [srow[x] for x in prow]
            rows[rk] = prow
        for i in range(nrows):
            if i != rk:
                f = rows[i][c]
                if f:
                    nrow = mul[neg[f]]
                    rows[i] = [add[x][nrow[y]] for x, y in zip(rows[i], prow)]
        pivots.append(c)
        rk += 1
    return rows[:rk], pivots


def rref(F: Field, M: Sequence[Sequence[int]], ncols: int | None = None) -> Matrix:
    """Reduced row-echelon form, same shape as M (zero rows at the bottom)."""
    if ncols is None:
        ncols = len(M[0]) if M else 0
    R, _ = _echelon(F, M, ncols)
    return R + [[0] * ncols for _ in range(len(M) - len(R))]


def rank(F: Field, M: Sequence[Sequence[int]]) -> int:
    if not M:
        return 0
    return len(_echelon(F, M, len(M[0]))[0])


def transpose(M: Sequence[Sequence[int]]) -> Matrix:
    return [list(c) for c in zip(*M)]


def matmul(F: Field, A: Sequence[Sequence[int]], B: Sequence[Sequence[int]]) -> Matrix:
    add, mul = F.add_table, F.mul_table
    cols = list(zip(*B))
    out = []
    for row in A:
        new = []
        for col in cols:
            s = 0
            for a, b in zip(row, col):
                if a and b:
                    s = add[s][mul[a][b]]
            new.append(s)
        out.append(new)
    return out


def inverse(F: Field, M: Sequence[Sequence[int]]) -> Matrix:
    n = len(M)
    aug = [list(r) + [1 if i == j else 0 for j in range(n)] for i, r in enumerate(M)]
    R, piv = _echelon(F, aug, 2 * n)
    if piv[:n] != list(range(n)) or len(R) < n:
        raise ValueError("matrix is singular")
    return [r[n:] for r in R]


def dot(F: Field, x: Sequence[int], y: Sequence[int]) -> int:
    if len(x) != len(y):
        raise ValueError(f"length mismatch: {len(x)} vs {len(y)}")
    add, mul = F.add_table, F.mul_table
    s = 0
    for a, b in zip(x, y):
        s = add[s][mul[a][b]]
    return s


@dataclass(frozen=True)
class Subspace:
    """A subspace of F^n held as its RREF basis (no zero rows)."""

    field: Field
    n: int
    basis: Tuple[Vector, ...]

    @classmethod
    def span(cls, F: Field, rows: Sequence[Sequence[int]], n: int) -> "Subspace":
        for r in rows:
            if len(r) != n:
                raise ValueError(f"vector of length {len(r)} in ambient dimension {n}")
        R, _ = _echelon(F, rows, n)
        return cls(F, n, tuple(tuple(r) for r in R))

    @classmethod
    def zero(cls, F: Field, n: int) -> "Subspace":
        return cls(F, n, ())

    @classmethod
    def full(cls, F: Field, n: int) -> "Subspace":
        return cls(F, n, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def pivots(self) -> List[int]:
        return [next(j for j, x in enumerate(r) if x) for r in self.basis]

    def contains(self, x: Sequence[int]) -> bool:
        return rank(self.field, list(self.basis) + [list(x)]) == self.dim

    def issubspace(self, other: "Subspace") -> bool:
        return all(other.contains(b) for b in self.basis)

    def elements(self, budget: int = DEFAULT_BUDGET) -> Iterator[Vector]:
        """Every vector of the subspace (|F|^dim of them)."""
        F = self.field
        if F.order ** self.dim > budget:
            raise BudgetExceeded(f"{F.order}^{self.dim} vectors exceed budget {budget}")
        add, mul = F.add_table, F.mul_table
        words: List[Vector] = [tuple([0] * self.n)]
        for b in self.basis:
            words = [
                tuple(add[w][mul[c][x]] for w, x in zip(word, b))
                for c in range(F.order)
                for word in words
            ]
        return iter(words)


def _check_compatible(U: Subspace, V: Subspace) -> None:
    if U.field != V.field or U.n != V.n:
        raise ValueError("subspaces live in different ambient spaces")


def kernel(F: Field, M: Sequence[Sequence[int]], ncols: int) -> Subspace:
    """{x : M x^T = 0}."""
    R, pivots = _echelon(F, M, ncols)
    neg = F.neg_table
    free = [c for c in range(ncols) if c not in pivots]
    vecs = []
    for f in free:
        x = [0] * ncols
        x[f] = 1
        for row, pc in zip(R, pivots):
            x[pc] = neg[row[f]]
        vecs.append(x)
    return Subspace.span(F, vecs, ncols)


def orthogonal_complement(V: Subspace) -> Subspace:
    return kernel(V.field, V.basis, V.n)


def subspace_sum(U: Subspace, V: Subspace) -> Subspace:
    _check_compatible(U, V)
    return Subspace.span(U.field, U.basis + V.basis, U.n)


def subspace_intersection(U: Subspace, V: Subspace) -> Subspace:
    _check_compatible(U, V)
    return orthogonal_complement(subspace_sum(orthogonal_complement(U), orthogonal_complement(V)))


def gaussian_binomial(n: int, v: int, Q: int) -> int:
    """Number of v-dimensional subspaces of an n-dimensional space over F_Q."""
    if v < 0 or v > n:
        return 0
    num = den = 1
    for i in range(v):
        num *= Q ** (n - i) - 1
        den *= Q ** (i + 1) - 1
    return num // den


def enumerate_subspaces(F: Field, n: int, v: int, budget: int = DEFAULT_BUDGET) -> Iterator[Subspace]:
    """All v-dimensional subspaces of F^n, each once.

    Order: pivot column sets lexicographically, then the free RREF entries
    lexicographically (row-major).  Raises BudgetExceeded before yielding
    anything if the total count is above ``budget``.
    """
    if not 0 <= v <= n:
        raise ValueError(f"dimension {v} outside [0, {n}]")
    total = gaussian_binomial(n, v, F.order)
    if total > budget:
        raise BudgetExceeded(f"{total} subspaces of dim {v} in F_{F.order}^{n} exceed budget {budget}")
    return _subspaces(F, n, v)


def _subspaces(F: Field, n: int, v: int) -> Iterator[Subspace]:
    for pivots in combinations(range(n), v):
        pset = set(pivots)
        slots = [(i, j) for i, pc in enumerate(pivots) for j in range(pc + 1, n) if j not in pset]
        for values in product(range(F.order), repeat=len(slots)):
            rows = [[0] * n for _ in range(v)]
            for i, pc in enumerate(pivots):
                rows[i][pc] = 1
            for (i, j), x in zip(slots, values):
                rows[i][j] = x
            yield Subspace(F, n, tuple(tuple(r) for r in rows))
