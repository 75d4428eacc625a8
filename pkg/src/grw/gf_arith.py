"""Arithmetic in the tower F_p < F_q = F_p[y]/(g) < F_{q^m} = F_q[z]/(h).

Elements at every level are plain ints.  The base-``s`` digits of an int
(``s`` the order of the immediate subfield, least significant digit first)
are its polynomial coordinates over that subfield.  Consequently an element
of F_q is also a valid element of F_{q^m}: it is the constant polynomial,
and ``a < q`` is exactly the F_q-rationality test.

Multiplication is defined by polynomial multiplication and reduction; for
small fields the results are cached as lookup tables.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import List, Optional, Sequence, Tuple

Poly = Tuple[int, ...]  # coefficients over a subfield, constant term first

TABLE_LIMIT = 256  # fields up to this order get dense add/mul tables


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


class Field:
    """A finite field presented as F[t]/(modulus) over a subfield F.

    With ``sub=None`` this is the prime field F_p and ``modulus`` is unused.
    """

    def __init__(self, p: int, sub: Optional["Field"] = None, modulus: Optional[Poly] = None):
        self.p = p
        self.sub = sub
        if sub is None:
            self.degree = 1
            self.order = p
            self.modulus: Poly = ()
        else:
            assert modulus is not None and modulus[-1] == 1
            self.degree = len(modulus) - 1
            self.order = sub.order ** self.degree
            self.modulus = tuple(modulus)
        self.key = (p,) if sub is None else (sub.key, self.modulus)

    def __eq__(self, other):
        return isinstance(other, Field) and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        if self.sub is None:
            return f"Field(F_{self.p})"
        return f"Field(order={self.order}, over {self.sub.order}, modulus={self.modulus})"

    # -- coordinates -------------------------------------------------------

    def coords(self, a: int) -> List[int]:
        """Coordinates of ``a`` over the subfield, constant term first."""
        if self.sub is None:
            return [a]
        s = self.sub.order
        out = []
        for _ in range(self.degree):
            a, d = divmod(a, s)
            out.append(d)
        return out

    def from_coords(self, c: Sequence[int]) -> int:
        if self.sub is None:
            return c[0]
        s = self.sub.order
        a = 0
        for d in reversed(c):
            a = a * s + d
        return a

    # -- raw arithmetic (no tables) ---------------------------------------

    def _add_raw(self, a: int, b: int) -> int:
        if self.sub is None:
            return (a + b) % self.p
        sa, sb = self.coords(a), self.coords(b)
        return self.from_coords([self.sub.add(x, y) for x, y in zip(sa, sb)])

    def _neg_raw(self, a: int) -> int:
        if self.sub is None:
            return (-a) % self.p
        return self.from_coords([self.sub.neg(x) for x in self.coords(a)])

    def _mul_raw(self, a: int, b: int) -> int:
        if self.sub is None:
            return (a * b) % self.p
        F = self.sub
        prod = poly_mul(F, self.coords(a), self.coords(b))
        r = poly_rem(F, prod, self.modulus)
        return self.from_coords(r + [0] * (self.degree - len(r)))

    # -- tables --------------------------------------------------------------

    @cached_property
    def add_table(self):
        return _table(self, self._add_raw)

    @cached_property
    def mul_table(self):
        return _table(self, self._mul_raw)

    @cached_property
    def neg_table(self) -> List[int]:
        return [self._neg_raw(a) for a in range(self.order)] if self.order <= TABLE_LIMIT else _Unary(self._neg_raw)

    @cached_property
    def inv_table(self):
        if self.order > TABLE_LIMIT:
            return _Unary(self._inv_raw)
        inv = [0] * self.order
        mul = self.mul_table
        for a in range(1, self.order):
            row = mul[a]
            for b in range(1, self.order):
                if row[b] == 1:
                    inv[a] = b
                    break
        return inv

    @cached_property
    def frob_table(self):
        """a -> a^s with s the order of the subfield (identity on F_p)."""
        s = self.sub.order if self.sub is not None else 1
        if self.order > TABLE_LIMIT:
            return _Unary(lambda a: self.pow(a, s))
        return [self.pow(a, s) for a in range(self.order)]

    def _inv_raw(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return self.pow(a, self.order - 2)

    # -- public scalar API -------------------------------------------------

    def add(self, a: int, b: int) -> int:
        return self.add_table[a][b]

    def sub_(self, a: int, b: int) -> int:
        return self.add_table[a][self.neg_table[b]]

    def neg(self, a: int) -> int:
        return self.neg_table[a]

    def mul(self, a: int, b: int) -> int:
        return self.mul_table[a][b]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return self.inv_table[a]

    def pow(self, a: int, e: int) -> int:
        result, base = 1, a
        while e:
            if e & 1:
                result = self._mul_raw(result, base) if self.order > TABLE_LIMIT else self.mul_table[result][base]
            base = self._mul_raw(base, base) if self.order > TABLE_LIMIT else self.mul_table[base][base]
            e >>= 1
        return result

    def elements(self) -> range:
        return range(self.order)


def _table(F: Field, op):
    if F.order <= TABLE_LIMIT:
        return [[op(a, b) for b in range(F.order)] for a in range(F.order)]
    return _LazyTable(op)


class _LazyTable:
    """Row-indexable stand-in for a binary table on fields too big to tabulate."""

    def __init__(self, op):
        self._op = op
        self._rows = {}

    def __getitem__(self, a):
        if a not in self._rows:
            self._rows[a] = _Unary(lambda b, a=a: self._op(a, b))
        return self._rows[a]


class _Unary:
    def __init__(self, fn):
        self._fn = fn

    def __getitem__(self, a):
        return self._fn(a)


# -- polynomials over a Field ---------------------------------------------


def poly_trim(f: Sequence[int]) -> List[int]:
    f = list(f)
    while f and f[-1] == 0:
        f.pop()
    return f


def poly_mul(F: Field, f: Sequence[int], g: Sequence[int]) -> List[int]:
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a == 0:
            continue
        for j, b in enumerate(g):
            if b:
                out[i + j] = F.add(out[i + j], F.mul(a, b))
    return out


def poly_rem(F: Field, f: Sequence[int], g: Sequence[int]) -> List[int]:
    """Remainder of f modulo a nonzero polynomial g."""
    f = poly_trim(f)
    g = poly_trim(g)
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    dg = len(g) - 1
    lead_inv = F.inv(g[-1])
    while len(f) - 1 >= dg and f:
        c = F.mul(f[-1], lead_inv)
        shift = len(f) - 1 - dg
        for i, b in enumerate(g):
            f[shift + i] = F.sub_(f[shift + i], F.mul(c, b))
        f = poly_trim(f)
    return f


def monic_polys(F: Field, d: int):
    """Monic degree-d polynomials over F in increasing integer-encoding order."""
    Q = F.order
    for low in range(Q ** d):
        coeffs = []
        for _ in range(d):
            low, r = divmod(low, Q)
            coeffs.append(r)
        yield tuple(coeffs) + (1,)


def is_irreducible(F: Field, f: Sequence[int]) -> bool:
    """Trial division by every monic polynomial of degree 1..deg(f)//2."""
    f = poly_trim(f)
    d = len(f) - 1
    if d < 1:
        return False
    for dd in range(1, d // 2 + 1):
        for g in monic_polys(F, dd):
            if not poly_rem(F, f, g):
                return False
    return True


def smallest_irreducible(F: Field, d: int) -> Poly:
    """Least monic irreducible of degree d, ordered by integer encoding sum c_i |F|^i."""
    for f in monic_polys(F, d):
        if is_irreducible(F, f):
            return f
    raise ValueError(f"no irreducible polynomial of degree {d}")  # unreachable for finite fields


# -- the tower ------------------------------------------------------------


@dataclass(frozen=True)
class FieldTower:
    p: int
    e: int
    m: int
    base_modulus: Poly
    ext_modulus: Poly
    prime: Field = field(init=False, repr=False, compare=False)
    base: Field = field(init=False, repr=False, compare=False)
    ext: Field = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"p={self.p} is not prime")
        if self.e < 1 or self.m < 1:
            raise ValueError("extension degrees must be >= 1")
        bm, em = tuple(self.base_modulus), tuple(self.ext_modulus)
        object.__setattr__(self, "base_modulus", bm)
        object.__setattr__(self, "ext_modulus", em)
        Fp = Field(self.p)
        if len(bm) != self.e + 1 or bm[-1] != 1 or any(not 0 <= c < self.p for c in bm):
            raise ValueError(f"base modulus must be monic of degree {self.e} over F_{self.p}")
        if not is_irreducible(Fp, bm):
            raise ValueError(f"base modulus {bm} is reducible over F_{self.p}")
        Fq = Field(self.p, Fp, bm)
        if len(em) != self.m + 1 or em[-1] != 1 or any(not 0 <= c < Fq.order for c in em):
            raise ValueError(f"extension modulus must be monic of degree {self.m} over F_{Fq.order}")
        if not is_irreducible(Fq, em):
            raise ValueError(f"extension modulus {em} is reducible over F_{Fq.order}")
        object.__setattr__(self, "prime", Fp)
        object.__setattr__(self, "base", Fq)
        object.__setattr__(self, "ext", Field(self.p, Fq, em))

    @property
    def q(self) -> int:
        return self.p ** self.e

    @property
    def order(self) -> int:
        return self.q ** self.m

    def generator(self) -> int:
        """The class of z in F_{q^m}."""
        r = poly_rem(self.base, [0, 1], self.ext_modulus)
        return self.ext.from_coords(r + [0] * (self.m - len(r)))

    # -- serialization: ExtElem <-> m lists of e ints ----------------------

    def ext_to_coeffs(self, a: int) -> List[List[int]]:
        return [self.base.coords(b) for b in self.ext.coords(a)]

    def ext_from_coeffs(self, c: Sequence[Sequence[int]]) -> int:
        if len(c) != self.m:
            raise ValueError(f"extension element needs {self.m} base coefficients, got {len(c)}")
        digits = []
        for b in c:
            if len(b) != self.e or any(not isinstance(x, int) or not 0 <= x < self.p for x in b):
                raise ValueError(f"base element must be {self.e} integers in [0,{self.p})")
            digits.append(self.base.from_coords(list(b)))
        return self.ext.from_coords(digits)

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "e": self.e,
            "m": self.m,
            "base_modulus": list(self.base_modulus),
            "ext_modulus": [self.base.coords(c) for c in self.ext_modulus],
        }


def make_field(
    p: int,
    e: int = 1,
    m: int = 1,
    base_modulus: Optional[Sequence[int]] = None,
    ext_modulus: Optional[Sequence[int]] = None,
) -> FieldTower:
    """Build a validated tower; omitted moduli default to the least irreducible.

    ``ext_modulus`` holds F_q elements in the int encoding.
    """
    if not is_prime(p):
        raise ValueError(f"p={p} is not prime")
    if e < 1 or m < 1:
        raise ValueError("extension degrees must be >= 1")
    Fp = Field(p)
    if base_modulus is None:
        base_modulus = smallest_irreducible(Fp, e)
    if ext_modulus is None:
        Fq = Field(p, Fp, tuple(base_modulus))
        ext_modulus = smallest_irreducible(Fq, m)
    return FieldTower(p, e, m, tuple(base_modulus), tuple(ext_modulus))


def tower_for(q: int, m: int) -> FieldTower:
    """Default tower for a prime power q."""
    for p in range(2, q + 1):
        if q % p == 0:
            break
    else:
        raise ValueError(f"q={q} is not a prime power")
    e, r = 0, q
    while r % p == 0:
        r //= p
        e += 1
    if r != 1 or not is_prime(p):
        raise ValueError(f"q={q} is not a prime power")
    return make_field(p, e, m)


# -- element-level operations ----------------------------------------------


def ext_mul(tower: FieldTower, a: int, b: int) -> int:
    return tower.ext.mul(a, b)


def ext_inv(tower: FieldTower, a: int) -> int:
    return tower.ext.inv(a)


def frobenius(tower: FieldTower, a: int, j: int = 1) -> int:
    """a^(q^j)."""
    frob = tower.ext.frob_table
    for _ in range(j % tower.m):
        a = frob[a]
    return a


def is_base_rational(tower: FieldTower, a: int) -> bool:
    return a < tower.q
