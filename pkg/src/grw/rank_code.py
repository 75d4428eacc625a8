"""Linear codes over F_{q^m}, the expansion map and rank weight."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, List, Optional, Sequence, Tuple

from .gf_arith import FieldTower
from .linalg import (
    DEFAULT_BUDGET,
    BudgetExceeded,
    Matrix,
    Subspace,
    Vector,
    inverse,
    matmul,
    orthogonal_complement,
    rank,
)


@dataclass(frozen=True)
class LinearCode:
    """An [n, k] code; ``generator`` is the canonical RREF basis.

    ``k == 0`` only arises as the dual of a full-space code.
    """

    tower: FieldTower
    generator: Subspace

    @property
    def n(self) -> int:
        return self.generator.n

    @property
    def k(self) -> int:
        return self.generator.dim

    @property
    def rows(self) -> Tuple[Vector, ...]:
        return self.generator.basis

    def codewords(self, budget: int = DEFAULT_BUDGET) -> Iterator[Vector]:
        return self.generator.elements(budget)

    def sort_key(self):
        return (self.k, self.rows)


def make_code(tower: FieldTower, rows: Sequence[Sequence[int]]) -> LinearCode:
    if not rows:
        raise ValueError("a code needs at least one generator row")
    n = len(rows[0])
    Q = tower.order
    for i, r in enumerate(rows):
        if len(r) != n:
            raise ValueError(f"row {i} has length {len(r)}, expected {n}")
        if any(not 0 <= x < Q for x in r):
            raise ValueError(f"row {i} has entries outside F_{Q}")
    V = Subspace.span(tower.ext, rows, n)
    if V.dim != len(rows):
        raise ValueError(f"generator rows are dependent: rank {V.dim} < {len(rows)} rows")
    return LinearCode(tower, V)


def code_from_subspace(tower: FieldTower, V: Subspace) -> LinearCode:
    if V.field != tower.ext:
        raise ValueError("subspace is not over the extension field of this tower")
    return LinearCode(tower, V)


def dual_code(C: LinearCode) -> LinearCode:
    """C^perp under the standard bilinear form; the zero code when k = n."""
    return LinearCode(C.tower, orthogonal_complement(C.generator))


@dataclass(frozen=True)
class ExpansionBasis:
    """An F_q-basis (u_1, ..., u_m) of F_{q^m}."""

    tower: FieldTower
    u: Tuple[int, ...]
    _inv: Matrix = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        t = self.tower
        if len(self.u) != t.m:
            raise ValueError(f"expansion basis needs {t.m} elements")
        M = [t.ext.coords(x) for x in self.u]
        try:
            object.__setattr__(self, "_inv", inverse(t.base, M))
        except ValueError:
            raise ValueError(f"{self.u} is not an F_q-basis of F_q^m") from None

    def coordinates(self, a: int) -> List[int]:
        """c with a = sum_j c_j u_j."""
        return matmul(self.tower.base, [self.tower.ext.coords(a)], self._inv)[0]


def default_basis(tower: FieldTower) -> ExpansionBasis:
    """The polynomial basis (1, z, ..., z^{m-1})."""
    return ExpansionBasis(tower, tuple(tower.q**j for j in range(tower.m)))


def lambda_expand(tower: FieldTower, x: Sequence[int], B: Optional[ExpansionBasis] = None) -> Matrix:
    """n x m matrix over F_q whose row i holds the coordinates of x_i in B."""
    if B is None:
        return [tower.ext.coords(a) for a in x]
    return [B.coordinates(a) for a in x]


def rank_weight(tower: FieldTower, x: Sequence[int], B: Optional[ExpansionBasis] = None) -> int:
    return rank(tower.base, lambda_expand(tower, x, B))


def hamming_weight(x: Sequence[int]) -> int:
    return sum(1 for a in x if a)


def min_rank_distance(C: LinearCode, budget: int = DEFAULT_BUDGET) -> int:
    """Minimum rank weight over all nonzero codewords, by full enumeration."""
    if C.k == 0:
        raise ValueError("the zero code has no nonzero codewords")
    if C.tower.order ** C.k > budget:
        raise BudgetExceeded(f"{C.tower.order}^{C.k} codewords exceed budget {budget}")
    best = None
    for w in C.codewords(budget):
        if any(w):
            rw = rank_weight(C.tower, w)
            if best is None or rw < best:
                best = rw
                if best == 1:
                    break
    return best


def frobenius_vec(tower: FieldTower, x: Sequence[int], j: int = 1) -> Vector:
    frob = tower.ext.frob_table
    x = tuple(x)
    for _ in range(j % tower.m):
        x = tuple(frob[a] for a in x)
    return x
