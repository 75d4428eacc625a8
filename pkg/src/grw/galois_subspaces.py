"""Frobenius action on subspaces of F_{q^m}^n and the Galois-closed family.

A subspace V is Galois-closed when V^q = V.  Such spaces are exactly the
F_{q^m}-spans of subspaces of F_q^n, so they can be enumerated through the
much smaller lattice over F_q.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, List, Sequence

from .gf_arith import Field
from .linalg import DEFAULT_BUDGET, Subspace, Vector, enumerate_subspaces, kernel


@dataclass(frozen=True)
class GammaSubspace:
    """A Galois-closed subspace together with a basis over F_q."""

    space: Subspace
    rational_basis: Subspace

    @property
    def dim(self) -> int:
        return self.space.dim


def _frob_rows(F: Field, rows: Sequence[Sequence[int]], j: int) -> List[List[int]]:
    frob = F.frob_table
    out = [list(r) for r in rows]
    for _ in range(j % F.degree):
        out = [[frob[a] for a in r] for r in out]
    return out


def frob_subspace(V: Subspace, j: int = 1) -> Subspace:
    """V^(q^j); the image of a basis spans the image since Frobenius is semilinear."""
    return Subspace.span(V.field, _frob_rows(V.field, V.basis, j), V.n)


def closure_of_rows(F: Field, rows: Sequence[Sequence[int]], n: int) -> Subspace:
    """Star closure of the span of ``rows`` (which need not be independent)."""
    out: List[List[int]] = []
    cur = [list(r) for r in rows]
    frob = F.frob_table
    for _ in range(F.degree):
        out.extend(cur)
        cur = [[frob[a] for a in r] for r in cur]
    return Subspace.span(F, out, n)


def star_closure_space(V: Subspace) -> Subspace:
    """sum_{j<m} V^(q^j) as a bare subspace."""
    return closure_of_rows(V.field, V.basis, V.n)


def star_closure(V: Subspace) -> GammaSubspace:
    """Smallest Galois-closed subspace containing V."""
    S = star_closure_space(V)
    return GammaSubspace(S, fq_rational_basis(S))


def is_frobenius_invariant(V: Subspace) -> bool:
    return frob_subspace(V, 1) == V


def fq_rational_basis(V: Subspace) -> Subspace:
    """V intersected with F_q^n, as a subspace over F_q.

    Solves for c in F_{q^m}^d (expanded over F_q) such that x = sum_i c_i b_i
    has every coordinate in F_q, i.e. all non-constant polynomial digits of
    every x_t vanish.
    """
    if not is_frobenius_invariant(V):
        raise ValueError("subspace is not Frobenius-invariant")
    F = V.field
    Fq = F.sub
    m, n, d = F.degree, V.n, V.dim
    mul = F.mul_table
    zpow = [Fq.order**j for j in range(m)]
    # column (i, j) of the system: digits of z^j * b_i at every coordinate
    cols = []
    for b in V.basis:
        for zj in zpow:
            cols.append([F.coords(mul[zj][b[t]]) for t in range(n)])
    equations = [[col[t][s] for col in cols] for t in range(n) for s in range(1, m)]
    sol = kernel(Fq, equations, d * m) if equations else Subspace.full(Fq, d * m)
    vecs = []
    for c in sol.basis:
        # constant digit of x_t = sum over (i, j) of c_{ij} * digit0(z^j b_i[t])
        x = []
        for t in range(n):
            s = 0
            for cij, col in zip(c, cols):
                if cij:
                    s = Fq.add(s, Fq.mul(cij, col[t][0]))
            x.append(s)
        vecs.append(x)
    W = Subspace.span(Fq, vecs, n)
    assert W.dim == d, "rational subspace dimension mismatch"
    return W


def extend_scalars(W: Subspace, ext: Field) -> GammaSubspace:
    """F_{q^m}-span of a subspace of F_q^n."""
    if ext.sub != W.field:
        raise ValueError("subspace is not over the base field of this extension")
    # F_q elements embed as the same ints, and an RREF basis over F_q stays RREF
    return GammaSubspace(Subspace(ext, W.n, W.basis), W)


def enumerate_gamma_subspaces(ext: Field, n: int, v: int, budget: int = DEFAULT_BUDGET) -> Iterator[GammaSubspace]:
    """All v-dimensional Galois-closed subspaces of F_{q^m}^n (count [n, v]_q)."""
    for W in enumerate_subspaces(ext.sub, n, v, budget):
        yield extend_scalars(W, ext)


def find_cyclic_generator(V: GammaSubspace) -> Vector:
    """x in V with <x>* = V: sum_i z^i e_i over the rational basis (e_1, ..., e_l).

    The coefficients (1, z, ..., z^{l-1}) are F_q-independent, which makes the
    Moore matrix of the coordinates full rank.  The result is verified.
    """
    F = V.space.field
    l, m = V.dim, F.degree
    if l > m:
        raise ValueError(f"dimension {l} exceeds extension degree {m}: no cyclic generator")
    add, mul = F.add_table, F.mul_table
    x = [0] * V.space.n
    for i, e in enumerate(V.rational_basis.basis):
        zi = F.sub.order**i
        x = [add[a][mul[zi][b]] for a, b in zip(x, e)]
    x = tuple(x)
    got = star_closure_space(Subspace.span(F, [x], V.space.n))
    if got != V.space:
        raise AssertionError(f"cyclic generator {x} spans {got.dim}-dim closure, expected {l}")
    return x
