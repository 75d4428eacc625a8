"""Named code families and seeded random codes used as fixtures."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Optional

from .gf_arith import FieldTower
from .linalg import Subspace, rank
from .rank_code import LinearCode, default_basis, frobenius_vec, make_code

FAMILIES = ("gabidulin", "repetition", "full", "coordinate", "random")
MAX_RETRIES = 10**4


@dataclass(frozen=True)
class CodeSpecDescriptor:
    family: str
    n: int
    k: int
    seed: Optional[int] = None

    @classmethod
    def parse(cls, text: str) -> "CodeSpecDescriptor":
        """Parse ``"family:n=4,k=2"`` (``seed=`` for random codes)."""
        family, _, rest = text.partition(":")
        family = family.strip()
        if family not in FAMILIES:
            raise ValueError(f"unknown code family {family!r}; expected one of {', '.join(FAMILIES)}")
        params = {}
        for item in filter(None, (s.strip() for s in rest.split(","))):
            key, eq, val = item.partition("=")
            if not eq or key not in ("n", "k", "seed"):
                raise ValueError(f"bad descriptor parameter {item!r}")
            try:
                params[key] = int(val)
            except ValueError:
                raise ValueError(f"parameter {key} must be an integer, got {val!r}") from None
        if "n" not in params:
            raise ValueError("descriptor needs n=")
        n = params["n"]
        k = params.get("k", {"full": n, "repetition": 1}.get(family))
        if k is None:
            raise ValueError(f"family {family} needs k=")
        if family == "random" and "seed" not in params:
            raise ValueError("random family needs seed=")
        return cls(family, n, k, params.get("seed"))

    def build(self, tower: FieldTower) -> LinearCode:
        if self.family == "random":
            return random_code(tower, self.n, self.k, self.seed)
        return named_code(tower, self.family, self.n, self.k)


def gabidulin_code(tower: FieldTower, n: int, k: int) -> LinearCode:
    """Rows (g_j^(q^i))_j for i < k with g the first n polynomial-basis elements."""
    if n > tower.m:
        raise ValueError(f"Gabidulin code needs n <= m (n={n}, m={tower.m})")
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got k={k}, n={n}")
    g = default_basis(tower).u[:n]
    return make_code(tower, [frobenius_vec(tower, g, i) for i in range(k)])


def named_code(tower: FieldTower, family: str, n: int, k: int) -> LinearCode:
    if family == "gabidulin":
        return gabidulin_code(tower, n, k)
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got k={k}, n={n}")
    if family == "repetition":
        if k != 1:
            raise ValueError("repetition code has k = 1")
        return make_code(tower, [[1] * n])
    if family == "full":
        if k != n:
            raise ValueError("full code has k = n")
        return make_code(tower, [list(r) for r in Subspace.full(tower.ext, n).basis])
    if family == "coordinate":
        return make_code(tower, [[int(i == j) for j in range(n)] for i in range(k)])
    raise ValueError(f"unknown code family {family!r}")


def random_code(tower: FieldTower, n: int, k: int, seed: int) -> LinearCode:
    """Seeded random [n, k] code: k uniform rows, redrawn until independent.

    Uses ``random.Random(seed)`` (Mersenne Twister), so output is stable
    across runs and platforms for a given Python major version.
    """
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got k={k}, n={n}")
    rng = random.Random(seed)
    Q = tower.order
    for _ in range(MAX_RETRIES):
        rows = [[rng.randrange(Q) for _ in range(n)] for _ in range(k)]
        if rank(tower.ext, rows) == k:
            return make_code(tower, rows)
    raise RuntimeError(f"no independent draw after {MAX_RETRIES} attempts")
