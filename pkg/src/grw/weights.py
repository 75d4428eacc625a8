"""Generalized rank weights (two definitions) and generalized Hamming weights."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional, Tuple

from .galois_subspaces import GammaSubspace, closure_of_rows, enumerate_gamma_subspaces
from .linalg import DEFAULT_BUDGET, BudgetExceeded, Subspace, gaussian_binomial, enumerate_subspaces, matmul, rank
from .rank_code import LinearCode, rank_weight


@dataclass(frozen=True)
class WeightHierarchy:
    values: Tuple[int, ...]
    witnesses: Optional[Tuple[GammaSubspace, ...]] = None

    def __iter__(self):
        return iter(self.values)

    def __len__(self):
        return len(self.values)


def _check_r(C: LinearCode, r: int) -> None:
    if not 1 <= r <= C.k:
        raise ValueError(f"r={r} outside [1, {C.k}]")


def _meet_dim(C: LinearCode, V: Subspace) -> int:
    """dim(C cap V) = k + dim V - dim(C + V)."""
    return C.k + V.dim - rank(C.tower.ext, list(C.rows) + list(V.basis))


def grw_M(C: LinearCode, r: int, start: Optional[int] = None, budget: int = DEFAULT_BUDGET) -> Tuple[int, GammaSubspace]:
    """Least dim of a Galois-closed V with dim(C cap V) >= r, with the first witness.

    ``start`` is a known lower bound for the search (default r).
    """
    _check_r(C, r)
    ext = C.tower.ext
    for v in range(max(r, start or r), C.n + 1):
        for V in enumerate_gamma_subspaces(ext, C.n, v, budget):
            if _meet_dim(C, V.space) >= r:
                return v, V
    raise AssertionError("the full space always meets C in dimension k")  # pragma: no cover


def weight_hierarchy(C: LinearCode, budget: int = DEFAULT_BUDGET) -> WeightHierarchy:
    """(M_1, ..., M_k); empty for the zero code."""
    values, witnesses = [], []
    prev = 0
    for r in range(1, C.k + 1):
        v, W = grw_M(C, r, start=prev + 1, budget=budget)
        values.append(v)
        witnesses.append(W)
        prev = v
    return WeightHierarchy(tuple(values), tuple(witnesses))


def _max_rank_in(C: LinearCode, S: Subspace, budget: int) -> int:
    best = 0
    cap = min(C.n, C.tower.m)
    for x in S.elements(budget):
        w = rank_weight(C.tower, x)
        if w > best:
            best = w
            if best == cap:
                break
    return best


def grw_d(C: LinearCode, r: int, path: str = "auto", budget: int = DEFAULT_BUDGET) -> int:
    """min over r-dim subcodes D of max rank weight over D*.

    ``path="fast"`` evaluates the inner max as dim D* (valid only for n <= m);
    ``path="slow"`` enumerates the elements of D*.  ``"auto"`` picks fast when
    allowed.
    """
    _check_r(C, r)
    n, m = C.n, C.tower.m
    if path == "auto":
        path = "fast" if n <= m else "slow"
    if path == "fast" and n > m:
        raise ValueError(f"fast path requires n <= m (n={n}, m={m})")
    if path not in ("fast", "slow"):
        raise ValueError(f"unknown path {path!r}")
    ext = C.tower.ext
    total = gaussian_binomial(C.k, r, ext.order)
    if total > budget:
        raise BudgetExceeded(f"{total} subcodes of dimension {r} exceed budget {budget}")
    G = [list(g) for g in C.rows]
    floor = r if path == "fast" else 1
    best = None
    for R in enumerate_subspaces(ext, C.k, r, budget):
        S = closure_of_rows(ext, matmul(ext, R.basis, G), n)
        val = S.dim if path == "fast" else _max_rank_in(C, S, budget)
        if best is None or val < best:
            best = val
            if best == floor:
                break
    return best


def ghw(C: LinearCode, r: int) -> int:
    """r-th generalized Hamming weight: least |S| with dim(C cap <e_i : i in S>) >= r."""
    _check_r(C, r)
    n, k = C.n, C.k
    ext = C.tower.ext
    for s in range(r, n + 1):
        for S in combinations(range(n), s):
            rest = [j for j in range(n) if j not in S]
            # C cap V_S is the kernel of the projection of C onto the other coordinates
            proj = rank(ext, [[row[j] for j in rest] for row in C.rows]) if rest else 0
            if k - proj >= r:
                return s
    raise AssertionError("unreachable")  # pragma: no cover
