"""Executable checks of the structural results on generalized rank weights.

Every check returns a :class:`CheckReport`.  Checks recompute what they need
from scratch; nothing is cached between the two sides of a comparison.
A check whose hypothesis does not hold reports ``skip``, never ``pass``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Any, Callable, Dict, Iterable, List, Optional, Sequence

from .galois_subspaces import (
    enumerate_gamma_subspaces,
    find_cyclic_generator,
    is_frobenius_invariant,
    star_closure_space,
)
from .gf_arith import FieldTower
from .io import code_to_json, encode_subspace, encode_vector
from .linalg import Subspace, orthogonal_complement, subspace_intersection
from .rank_code import LinearCode, dual_code, min_rank_distance, rank_weight
from .weights import ghw, grw_d, grw_M, weight_hierarchy

PASS, FAIL, SKIP = "pass", "fail", "skip"
CODEWORD_SAMPLE_LIMIT = 4096
CODEWORD_SAMPLE_SIZE = 256


@dataclass
class CheckReport:
    check: str
    params: Dict[str, Any]
    verdict: str
    detail: Any = None

    def to_dict(self) -> dict:
        return {"check": self.check, "params": self.params, "verdict": self.verdict, "detail": self.detail}

    @property
    def failed(self) -> bool:
        return self.verdict == FAIL


def _combine(results: Sequence[str]) -> str:
    if FAIL in results:
        return FAIL
    if PASS in results:
        return PASS
    return SKIP


def _code_params(C: LinearCode, **extra) -> dict:
    return {"code": code_to_json(C), **extra}


# -- vector / space level -------------------------------------------------


def check_prop_I1(
    tower: FieldTower,
    n: int,
    sample: str = "exhaustive",
    seed: int = 0,
    count: int = 100,
    vectors: Optional[Iterable[Sequence[int]]] = None,
) -> CheckReport:
    """dim <x>* == rank weight of x, for n <= m.

    ``sample`` is ``"exhaustive"`` (all of F_{q^m}^n) or ``"random"``;
    explicit ``vectors`` override both.
    """
    params = {"field": tower.to_json(), "n": n, "sample": sample if vectors is None else "explicit"}
    if sample == "random" and vectors is None:
        params.update(seed=seed, count=count)
    if n > tower.m:
        return CheckReport("prop_I1", params, SKIP, f"requires n <= m (n={n}, m={tower.m})")
    ext = tower.ext
    if vectors is None:
        if sample == "exhaustive":
            vectors = Subspace.full(ext, n).elements()
        elif sample == "random":
            rng = random.Random(seed)
            vectors = [tuple(rng.randrange(ext.order) for _ in range(n)) for _ in range(count)]
        else:
            raise ValueError(f"unknown sample mode {sample!r}")
    checked = 0
    for x in vectors:
        lhs = star_closure_space(Subspace.span(ext, [x], n)).dim
        rhs = rank_weight(tower, x)
        checked += 1
        if lhs != rhs:
            return CheckReport("prop_I1", params, FAIL, {"x": encode_vector(tower, x), "closure_dim": lhs, "rank_weight": rhs})
    return CheckReport("prop_I1", params, PASS, {"vectors": checked})


def _all_gamma(tower: FieldTower, n: int):
    for v in range(n + 1):
        yield from enumerate_gamma_subspaces(tower.ext, n, v)


def check_lemma_III1(tower: FieldTower, n: int) -> CheckReport:
    """The orthogonal complement of every Galois-closed space is Galois-closed."""
    params = {"field": tower.to_json(), "n": n}
    checked = 0
    for V in _all_gamma(tower, n):
        W = orthogonal_complement(V.space)
        checked += 1
        if not is_frobenius_invariant(W):
            return CheckReport("lemma_III1", params, FAIL, {"V": encode_subspace(V.space), "V_perp": encode_subspace(W)})
    return CheckReport("lemma_III1", params, PASS, {"spaces": checked})


def check_lemma_II2(tower: FieldTower, n: int) -> CheckReport:
    """Each Galois-closed V with dim V <= m is the closure of one vector."""
    params = {"field": tower.to_json(), "n": n}
    checked = 0
    for V in _all_gamma(tower, n):
        if V.dim > tower.m:
            continue
        try:
            x = find_cyclic_generator(V)
        except AssertionError as exc:
            return CheckReport("lemma_II2", params, FAIL, {"V": encode_subspace(V.space), "error": str(exc)})
        if not V.space.contains(x):
            return CheckReport("lemma_II2", params, FAIL, {"V": encode_subspace(V.space), "x": encode_vector(tower, x)})
        checked += 1
    return CheckReport("lemma_II2", params, PASS, {"spaces": checked})


# -- code level -----------------------------------------------------------


def check_monotonicity(C: LinearCode) -> CheckReport:
    h = list(weight_hierarchy(C).values)
    params = _code_params(C)
    if not h:
        return CheckReport("monotonicity", params, SKIP, "zero code")
    bad = [r for r in range(1, len(h)) if not h[r - 1] < h[r]]
    if h[0] < 1 or h[-1] > C.n or bad:
        return CheckReport("monotonicity", params, FAIL, {"hierarchy": h, "non_increasing_at_r": [r + 1 for r in bad]})
    return CheckReport("monotonicity", params, PASS, {"hierarchy": h})


def check_prop_II3(C: LinearCode) -> CheckReport:
    """(q^{mr} - 1) M_{r-1} <= (q^{mr} - q^m) M_r for 1 < r <= k, in exact integers."""
    params = _code_params(C)
    if C.k < 2:
        return CheckReport("prop_II3", params, SKIP, "requires k >= 2")
    h = weight_hierarchy(C).values
    q, m = C.tower.q, C.tower.m
    rows = []
    for r in range(2, C.k + 1):
        Q = q ** (m * r)
        lhs, rhs = (Q - 1) * h[r - 2], (Q - q**m) * h[r - 1]
        rows.append({"r": r, "lhs": lhs, "rhs": rhs})
        if lhs > rhs:
            return CheckReport("prop_II3", params, FAIL, rows[-1])
    return CheckReport("prop_II3", params, PASS, rows)


def is_r_mrd(C: LinearCode, r: int) -> bool:
    return grw_M(C, r)[0] == C.n - C.k + r


def check_singleton(C: LinearCode) -> CheckReport:
    params = _code_params(C)
    h = weight_hierarchy(C).values
    if not h:
        return CheckReport("singleton", params, SKIP, "zero code")
    for r, v in enumerate(h, start=1):
        if v > C.n - C.k + r:
            return CheckReport("singleton", params, FAIL, {"r": r, "M_r": v, "bound": C.n - C.k + r})
    mrd = [r for r in range(1, C.k + 1) if is_r_mrd(C, r)]
    return CheckReport("singleton", params, PASS, {"hierarchy": list(h), "mrd_levels": mrd})


def check_wei_duality(C: LinearCode) -> CheckReport:
    """{M_r(C)} and {n + 1 - M_r(C^perp)} partition {1, ..., n}."""
    params = _code_params(C)
    n = C.n
    primal = list(weight_hierarchy(C).values)
    dual = list(weight_hierarchy(dual_code(C)).values)
    A = set(primal)
    B = {n + 1 - v for v in dual}
    detail = {"hierarchy": primal, "dual_hierarchy": dual}
    ok = len(A) == len(primal) and not (A & B) and (A | B) == set(range(1, n + 1))
    if not ok:
        detail.update(overlap=sorted(A & B), missing=sorted(set(range(1, n + 1)) - (A | B)))
        return CheckReport("duality", params, FAIL, detail)
    return CheckReport("duality", params, PASS, detail)


def check_lemma_III2(C: LinearCode, r: Optional[int] = None) -> CheckReport:
    """For t = k + r - M_r(C^perp): M_t(C) <= n - M_r(C^perp), and
    M_{t+delta}(C) != n - M_r(C^perp) + 1 for every delta > 0.
    ``r=None`` runs every 1 <= r <= n - k."""
    n, k = C.n, C.k
    params = _code_params(C, r=r)
    if r is not None and not 1 <= r <= n - k:
        raise ValueError(f"r={r} outside [1, {n - k}]")
    rs = [r] if r is not None else list(range(1, n - k + 1))
    if not rs:
        return CheckReport("lemma_III2", params, SKIP, "vacuous: n - k = 0")
    D = dual_code(C)
    results, rows = [], []
    for rr in rs:
        md = grw_M(D, rr)[0]
        t = k + rr - md
        row: Dict[str, Any] = {"r": rr, "M_r_dual": md, "t": t}
        verdicts = []
        if 1 <= t <= k:
            mt = grw_M(C, t)[0]
            row["part1"] = {"M_t": mt, "bound": n - md}
            verdicts.append(PASS if mt <= n - md else FAIL)
        else:
            row["part1"] = "vacuous"
        part2 = []
        for s in range(max(t + 1, 1), k + 1):
            ms = grw_M(C, s)[0]
            part2.append({"index": s, "M": ms})
            verdicts.append(PASS if ms != n - md + 1 else FAIL)
        row["part2"] = part2
        v = _combine(verdicts)
        row["verdict"] = v
        rows.append(row)
        results.append(v)
    return CheckReport("lemma_III2", params, _combine(results), rows)


def check_mrd_dual(C: LinearCode, r: Optional[int] = None) -> CheckReport:
    """C is r-MRD iff d(C^perp) = M_1(C^perp) >= k - r + 2.

    Also records whether the literal variant with M_r(C^perp) holds.
    """
    n, k = C.n, C.k
    params = _code_params(C, r=r)
    if r is not None and not 1 <= r <= k:
        raise ValueError(f"r={r} outside [1, {k}]")
    if k == n:
        return CheckReport("mrd_dual", params, SKIP, "dual is the zero code")
    D = dual_code(C)
    d_dual = min_rank_distance(D)
    rows, results = [], []
    for rr in ([r] if r is not None else range(1, k + 1)):
        mrd = is_r_mrd(C, rr)
        rhs = d_dual >= k - rr + 2
        printed = None
        if rr <= n - k:
            printed = (grw_M(D, rr)[0] >= k - rr + 2) == mrd
        v = PASS if mrd == rhs else FAIL
        rows.append({"r": rr, "r_mrd": mrd, "dual_min_rank_distance": d_dual, "threshold": k - rr + 2,
                     "literal_M_r_variant_agrees": printed, "verdict": v})
        results.append(v)
    detail = {"note": "uses d(C^perp) = M_1(C^perp), as the proof does", "levels": rows}
    return CheckReport("mrd_dual", params, _combine(results), detail)


def check_equivalence(C: LinearCode) -> CheckReport:
    """grw_d == grw_M for all r, when n <= m."""
    params = _code_params(C)
    if C.n > C.tower.m:
        return CheckReport("equivalence", params, SKIP, f"requires n <= m (n={C.n}, m={C.tower.m})")
    if C.k == 0:
        return CheckReport("equivalence", params, SKIP, "zero code")
    rows = []
    for r in range(1, C.k + 1):
        d, M = grw_d(C, r), grw_M(C, r)[0]
        rows.append({"r": r, "d_r": d, "M_r": M})
        if d != M:
            return CheckReport("equivalence", params, FAIL, rows[-1])
    return CheckReport("equivalence", params, PASS, rows)


def check_min_distance(C: LinearCode) -> CheckReport:
    """M_1(C) equals the minimum rank distance found by codeword enumeration."""
    params = _code_params(C)
    if C.k == 0:
        return CheckReport("min_distance", params, SKIP, "zero code")
    M1, d = grw_M(C, 1)[0], min_rank_distance(C)
    v = PASS if M1 == d else FAIL
    return CheckReport("min_distance", params, v, {"M_1": M1, "min_rank_distance": d})


def check_hamming(C: LinearCode) -> CheckReport:
    """M_r(C) <= d_r^H(C) <= n - k + r."""
    params = _code_params(C)
    if C.k == 0:
        return CheckReport("hamming", params, SKIP, "zero code")
    rows = []
    for r in range(1, C.k + 1):
        M, H = grw_M(C, r)[0], ghw(C, r)
        rows.append({"r": r, "M_r": M, "ghw": H, "singleton": C.n - C.k + r})
        if not M <= H <= C.n - C.k + r:
            return CheckReport("hamming", params, FAIL, rows[-1])
    return CheckReport("hamming", params, PASS, rows)


def check_witnesses(C: LinearCode) -> CheckReport:
    """Every witness is Galois-closed, has dim M_r and meets C in dim >= r."""
    params = _code_params(C)
    h = weight_hierarchy(C)
    for r, (v, W) in enumerate(zip(h.values, h.witnesses), start=1):
        meet = subspace_intersection(W.space, C.generator).dim
        if not (is_frobenius_invariant(W.space) and W.dim == v and meet >= r):
            return CheckReport("witnesses", params, FAIL, {"r": r, "witness": encode_subspace(W.space), "meet_dim": meet})
    return CheckReport("witnesses", params, PASS if h.values else SKIP, None if h.values else "zero code")


def _codeword_sample(C: LinearCode):
    if C.tower.order ** C.k <= CODEWORD_SAMPLE_LIMIT:
        return list(C.codewords())
    rng = random.Random(repr(C.rows))
    ext = C.tower.ext
    out = []
    for _ in range(CODEWORD_SAMPLE_SIZE):
        c = [rng.randrange(ext.order) for _ in range(C.k)]
        out.append(tuple(
            _lin(ext, c, [row[i] for row in C.rows]) for i in range(C.n)
        ))
    return out


def _lin(F, coeffs, column):
    s = 0
    for a, b in zip(coeffs, column):
        s = F.add(s, F.mul(a, b))
    return s


def check_prop_I1_code(C: LinearCode) -> CheckReport:
    """Closure dimension vs rank weight over the codewords of C (all, or a seeded sample)."""
    rep = check_prop_I1(C.tower, C.n, vectors=_codeword_sample(C))
    rep.params = _code_params(C)
    return rep


def check_lemma_III1_code(C: LinearCode) -> CheckReport:
    rep = check_lemma_III1(C.tower, C.n)
    rep.params = _code_params(C)
    return rep


def check_lemma_II2_code(C: LinearCode) -> CheckReport:
    rep = check_lemma_II2(C.tower, C.n)
    rep.params = _code_params(C)
    return rep


CODE_CHECKS: Dict[str, Callable[[LinearCode], CheckReport]] = {
    "prop_I1": check_prop_I1_code,
    "lemma_II2": check_lemma_II2_code,
    "lemma_III1": check_lemma_III1_code,
    "monotonicity": check_monotonicity,
    "prop_II3": check_prop_II3,
    "singleton": check_singleton,
    "duality": check_wei_duality,
    "lemma_III2": check_lemma_III2,
    "mrd_dual": check_mrd_dual,
    "equivalence": check_equivalence,
    "min_distance": check_min_distance,
    "hamming": check_hamming,
    "witnesses": check_witnesses,
}


def run_checks(C: LinearCode, names: Optional[Sequence[str]] = None) -> List[CheckReport]:
    names = list(CODE_CHECKS) if names is None else list(names)
    unknown = [n for n in names if n not in CODE_CHECKS]
    if unknown:
        raise KeyError(f"unknown checks: {', '.join(unknown)}")
    return [CODE_CHECKS[n](C) for n in names]


def summarize(reports: Iterable[CheckReport]) -> str:
    counts = {PASS: 0, SKIP: 0, FAIL: 0}
    for rep in reports:
        counts[rep.verdict] += 1
    return f"{counts[PASS]} passed / {counts[SKIP]} skipped / {counts[FAIL]} failed"
