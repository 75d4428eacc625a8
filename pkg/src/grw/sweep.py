"""Exhaustive and seeded-random sweeps of the theorem suite over code families."""

from __future__ import annotations

import csv
import io
import json
import random
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Union

from .code_zoo import random_code
from .gf_arith import FieldTower, tower_for
from .io import code_to_json
from .linalg import DEFAULT_BUDGET, BudgetExceeded, enumerate_subspaces, gaussian_binomial
from .rank_code import LinearCode, code_from_subspace, dual_code
from .theorem_suite import CODE_CHECKS, FAIL, PASS, SKIP, CheckReport, run_checks
from .weights import weight_hierarchy


@dataclass
class SweepConfig:
    q: int
    m: int
    n: int
    k: Union[int, str] = "all"
    mode: str = "exhaustive"
    count: int = 100
    seed: int = 0
    checks: Optional[Sequence[str]] = None
    budget: int = DEFAULT_BUDGET

    def ks(self) -> List[int]:
        return list(range(1, self.n + 1)) if self.k == "all" else [int(self.k)]


@dataclass
class SweepRow:
    code_id: str
    code: LinearCode
    hierarchy: List[int] = field(default_factory=list)
    dual_hierarchy: List[int] = field(default_factory=list)
    reports: List[CheckReport] = field(default_factory=list)
    error: Optional[str] = None

    def verdicts(self) -> Dict[str, str]:
        return {r.check: r.verdict for r in self.reports}


@dataclass
class SweepResult:
    config: SweepConfig
    tower: FieldTower
    rows: List[SweepRow]

    def counts(self) -> Dict[str, int]:
        c = {PASS: 0, SKIP: 0, FAIL: 0}
        for row in self.rows:
            for rep in row.reports:
                c[rep.verdict] += 1
            if row.error:
                c[SKIP] += 1
        return c

    @property
    def failures(self) -> int:
        return self.counts()[FAIL]

    def summary(self) -> str:
        c = self.counts()
        return f"{c[PASS]} passed / {c[SKIP]} skipped / {c[FAIL]} failed"


def sweep_codes(cfg: SweepConfig, tower: FieldTower) -> List[LinearCode]:
    if cfg.mode == "exhaustive":
        total = sum(gaussian_binomial(cfg.n, k, tower.order) for k in cfg.ks())
        if total > cfg.budget:
            raise BudgetExceeded(f"{total} codes exceed budget {cfg.budget}")
        return [code_from_subspace(tower, V) for k in cfg.ks() for V in enumerate_subspaces(tower.ext, cfg.n, k, cfg.budget)]
    if cfg.mode == "random":
        rng = random.Random(cfg.seed)
        codes = []
        for _ in range(cfg.count):
            k = rng.randint(1, cfg.n) if cfg.k == "all" else int(cfg.k)
            codes.append(random_code(tower, cfg.n, k, rng.getrandbits(32)))
        return codes
    raise ValueError(f"unknown sweep mode {cfg.mode!r}")


def run_sweep(cfg: SweepConfig) -> SweepResult:
    tower = tower_for(cfg.q, cfg.m)
    if cfg.n < 1 or any(not 1 <= k <= cfg.n for k in cfg.ks()):
        raise ValueError(f"invalid n={cfg.n}, k={cfg.k}")
    codes = sorted(sweep_codes(cfg, tower), key=LinearCode.sort_key)
    rows = []
    per_k: Dict[int, int] = {}
    for C in codes:
        idx = per_k.get(C.k, 0)
        per_k[C.k] = idx + 1
        row = SweepRow(f"k{C.k}-{idx}", C)
        try:
            row.hierarchy = list(weight_hierarchy(C, cfg.budget).values)
            row.dual_hierarchy = list(weight_hierarchy(dual_code(C), cfg.budget).values)
            row.reports = run_checks(C, cfg.checks)
        except BudgetExceeded as exc:
            row.error = f"budget: {exc}"
        rows.append(row)
    return SweepResult(cfg, tower, rows)


# -- emitters -----------------------------------------------------------------


def _check_names(result: SweepResult) -> List[str]:
    return list(result.config.checks) if result.config.checks is not None else list(CODE_CHECKS)


def to_csv(result: SweepResult) -> str:
    """Columns: q,e,p,m,n,k,code_id,M_1..M_n,dual_M_1..dual_M_n,<check verdicts>."""
    t, n = result.tower, result.config.n
    names = _check_names(result)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["q", "e", "p", "m", "n", "k", "code_id"]
               + [f"M_{i}" for i in range(1, n + 1)]
               + [f"dual_M_{i}" for i in range(1, n + 1)]
               + names)
    for row in result.rows:
        pad = lambda h: [str(v) for v in h] + [""] * (n - len(h))
        verdicts = row.verdicts()
        w.writerow([t.q, t.e, t.p, t.m, n, row.code.k, row.code_id]
                   + pad(row.hierarchy) + pad(row.dual_hierarchy)
                   + [verdicts.get(c, SKIP if row.error else "") for c in names])
    return buf.getvalue()


def to_json(result: SweepResult) -> str:
    rows = []
    for row in result.rows:
        rows.append({
            "code_id": row.code_id,
            "code": code_to_json(row.code),
            "k": row.code.k,
            "hierarchy": row.hierarchy,
            "dual_hierarchy": row.dual_hierarchy,
            "verdicts": row.verdicts(),
            "failures": [r.to_dict() for r in row.reports if r.verdict == FAIL],
            "error": row.error,
        })
    c = result.counts()
    doc = {
        "field": result.tower.to_json(),
        "n": result.config.n,
        "mode": result.config.mode,
        "rows": rows,
        "summary": {"passed": c[PASS], "skipped": c[SKIP], "failed": c[FAIL], "codes": len(rows)},
    }
    return json.dumps(doc, sort_keys=True) + "\n"


def to_table(result: SweepResult) -> str:
    names = _check_names(result)
    lines = [f"{'code_id':<10} {'k':>2}  {'hierarchy':<14} {'dual':<14} verdicts"]
    for row in result.rows:
        bad = [c for c, v in row.verdicts().items() if v == FAIL]
        status = "FAIL " + ",".join(bad) if bad else ("error " + row.error if row.error else "ok")
        lines.append(f"{row.code_id:<10} {row.code.k:>2}  {str(row.hierarchy):<14} {str(row.dual_hierarchy):<14} {status}")
    lines.append(f"checks: {', '.join(names)}")
    lines.append(result.summary())
    return "\n".join(lines) + "\n"
