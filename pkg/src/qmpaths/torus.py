"""The m-by-n quantum torus.

Elements are finite sums of normal-ordered Laurent monomials t^N, where N is
an integer exponent matrix indexed by the grid [m] x [n] and the generators
q-commute: t_a t_b = q^c t_b t_a with c = +1 when a is due west or due north
of b, -1 mirrored, 0 when both row and column differ.

Exponent matrices are stored sparsely as sorted tuples of (i, j, e) triples
("keys"); normal order is the lexicographic order on coordinates, smallest
leftmost.  The q-exponent of a reordering is computed by a closed bilinear
form over support pairs, which the test suite validates against literal
adjacent transpositions.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .coeff import ONE, ZERO, LaurentScalar, q_power

Coord = tuple[int, int]
MonoKey = tuple[tuple[int, int, int], ...]


@dataclass(frozen=True)
class Shape:
    """Grid dimensions.  m, n >= 2 unless constructed with relaxed=True."""

    m: int
    n: int
    relaxed: bool = field(default=False, compare=False, repr=False)

    def __post_init__(self):
        if self.m < 1 or self.n < 1:
            raise ValueError("shape dimensions must be positive")
        if not self.relaxed and (self.m < 2 or self.n < 2):
            raise ValueError("m, n >= 2 required (pass relaxed=True to allow 1)")

    @property
    def mn(self) -> int:
        return self.m * self.n

    def coords(self):
        """All coordinates in lexicographic order."""
        return ((i, j) for i in range(1, self.m + 1) for j in range(1, self.n + 1))

    def contains(self, coord: Coord) -> bool:
        i, j = coord
        return 1 <= i <= self.m and 1 <= j <= self.n

    def check_coord(self, coord: Coord) -> Coord:
        if not self.contains(coord):
            raise ValueError(f"coordinate {coord} outside {self.m}x{self.n} grid")
        return coord

    def threshold_coord(self, t: int) -> Coord:
        """The t-th smallest coordinate, t in [mn]."""
        if not 1 <= t <= self.mn:
            raise ValueError(f"threshold {t} outside [1, {self.mn}]")
        return ((t - 1) // self.n + 1, (t - 1) % self.n + 1)

    def coord_position(self, coord: Coord) -> int:
        """Inverse of threshold_coord."""
        i, j = self.check_coord(coord)
        return (i - 1) * self.n + j


def coord_lex_compare(a: Coord, b: Coord) -> int:
    """-1, 0, +1 for the lexicographic order: row first, then column."""
    if a == b:
        return 0
    return -1 if a < b else 1


def lex_predecessor(shape: Shape, coord: Coord) -> Coord | None:
    """Largest coordinate less than `coord`; None for (1, 1)."""
    i, j = shape.check_coord(coord)
    if j > 1:
        return (i, j - 1)
    if i > 1:
        return (i - 1, shape.n)
    return None


def pair_commutation(a: Coord, b: Coord) -> int:
    """c with t_a t_b = q^c t_b t_a for distinct coordinates a, b."""
    if a == b:
        raise ValueError("self-commutation exponent is undefined")
    ai, aj = a
    bi, bj = b
    if ai == bi:
        return 1 if aj < bj else -1
    if aj == bj:
        return 1 if ai < bi else -1
    return 0


# ---------------------------------------------------------------------------
# sparse exponent keys


def mono_key(items) -> MonoKey:
    """Canonicalize (i, j, e) triples: merge duplicates, drop zeros, sort."""
    acc: dict[Coord, int] = {}
    for i, j, e in items:
        s = acc.get((i, j), 0) + e
        if s:
            acc[(i, j)] = s
        elif (i, j) in acc:
            del acc[(i, j)]
    return tuple((i, j, e) for (i, j), e in sorted(acc.items()))


EMPTY_KEY: MonoKey = ()


def key_add(a: MonoKey, b: MonoKey) -> MonoKey:
    if not a:
        return b
    if not b:
        return a
    return mono_key(a + b)


def key_neg(a: MonoKey) -> MonoKey:
    return tuple((i, j, -e) for i, j, e in a)


def key_entry(key: MonoKey, coord: Coord) -> int:
    for i, j, e in key:
        if (i, j) == coord:
            return e
    return 0


def key_in_shape(key: MonoKey, shape: Shape) -> bool:
    return all(shape.contains((i, j)) for i, j, _ in key)


def key_to_matrix(key: MonoKey, shape: Shape) -> tuple:
    """Dense m x n tuple-of-tuples view of a sparse key."""
    rows = [[0] * shape.n for _ in range(shape.m)]
    for i, j, e in key:
        shape.check_coord((i, j))
        rows[i - 1][j - 1] = e
    return tuple(tuple(r) for r in rows)


def matrix_to_key(rows) -> MonoKey:
    return mono_key(
        (i + 1, j + 1, e)
        for i, row in enumerate(rows)
        for j, e in enumerate(row)
        if e
    )


def commutation_form(a: MonoKey, b: MonoKey) -> int:
    """Bilinear form giving t^a t^b = q^form t^(a+b).

    Sums e_u * e_v * pair_commutation(u, v) over support pairs u in a, v in b
    with u lexicographically greater than v (the pairs a normal-ordering pass
    actually transposes).
    """
    total = 0
    for ai, aj, ae in a:
        for bi, bj, be in b:
            if (ai, aj) > (bi, bj):
                if ai == bi:
                    total += ae * be * (1 if aj < bj else -1)
                elif aj == bj:
                    total += ae * be * (1 if ai < bi else -1)
    return total


@lru_cache(maxsize=1 << 18)
def monomial_mul(a: MonoKey, b: MonoKey) -> tuple[int, MonoKey]:
    """Normal-ordered product: returns (c, a+b) with t^a t^b = q^c t^(a+b)."""
    return commutation_form(a, b), key_add(a, b)


def monomial_inverse(a: MonoKey) -> tuple[int, MonoKey]:
    """(c, -a) with (t^a)^{-1} = q^c t^{-a}."""
    return commutation_form(a, a), key_neg(a)


# ---------------------------------------------------------------------------
# torus elements


class TorusElement:
    """Finite sum of Laurent monomials coeff * t^N in canonical form."""

    __slots__ = ("shape", "_terms")

    def __init__(self, shape: Shape, terms=()):
        self.shape = shape
        if isinstance(terms, dict):
            terms = terms.items()
        acc: dict[MonoKey, LaurentScalar] = {}
        for key, coeff in terms:
            if not isinstance(coeff, LaurentScalar):
                coeff = LaurentScalar.from_int(coeff)
            if not key_in_shape(key, shape):
                raise ValueError(f"key {key} outside shape {shape.m}x{shape.n}")
            s = acc.get(key, ZERO) + coeff
            if s:
                acc[key] = s
            elif key in acc:
                del acc[key]
        self._terms = acc

    @classmethod
    def _raw(cls, shape, terms: dict) -> "TorusElement":
        self = object.__new__(cls)
        self.shape = shape
        self._terms = terms
        return self

    @classmethod
    def zero(cls, shape: Shape) -> "TorusElement":
        return cls._raw(shape, {})

    @classmethod
    def one(cls, shape: Shape) -> "TorusElement":
        return cls._raw(shape, {EMPTY_KEY: ONE})

    @classmethod
    def monomial(cls, shape: Shape, key: MonoKey, coeff=ONE) -> "TorusElement":
        return cls(shape, [(key, coeff)])

    @property
    def terms(self) -> dict:
        return self._terms

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self):
        return len(self._terms)

    def _check_mate(self, other):
        if not isinstance(other, TorusElement):
            raise TypeError("expected a TorusElement")
        if other.shape != self.shape:
            raise ValueError("shape mismatch")

    def __add__(self, other):
        self._check_mate(other)
        acc = dict(self._terms)
        for key, c in other._terms.items():
            s = acc.get(key, ZERO) + c
            if s:
                acc[key] = s
            elif key in acc:
                del acc[key]
        return TorusElement._raw(self.shape, acc)

    def __neg__(self):
        return TorusElement._raw(
            self.shape, {k: -c for k, c in self._terms.items()}
        )

    def __sub__(self, other):
        self._check_mate(other)
        return self + (-other)

    def __mul__(self, other):
        self._check_mate(other)
        acc: dict[MonoKey, LaurentScalar] = {}
        for k1, c1 in self._terms.items():
            for k2, c2 in other._terms.items():
                e, k = monomial_mul(k1, k2)
                c = c1 * c2 * q_power(e)
                s = acc.get(k, ZERO) + c
                if s:
                    acc[k] = s
                elif k in acc:
                    del acc[k]
        return TorusElement._raw(self.shape, acc)

    def scale(self, coeff) -> "TorusElement":
        if not isinstance(coeff, LaurentScalar):
            coeff = LaurentScalar.from_int(coeff)
        if coeff.is_zero():
            return TorusElement.zero(self.shape)
        return TorusElement._raw(
            self.shape, {k: c * coeff for k, c in self._terms.items()}
        )

    def as_monomial(self):
        """(key, coeff) if this is a single term, else None."""
        if len(self._terms) == 1:
            return next(iter(self._terms.items()))
        return None

    def inverse(self) -> "TorusElement":
        """Inverse of a single-monomial element with unit coefficient."""
        m = self.as_monomial()
        if m is None:
            raise ValueError("only monomial torus elements are invertible here")
        key, coeff = m
        e, nk = monomial_inverse(key)
        return TorusElement._raw(self.shape, {nk: coeff.inverse() * q_power(e)})

    def __eq__(self, other):
        if not isinstance(other, TorusElement):
            return NotImplemented
        return self.shape == other.shape and self._terms == other._terms

    def __hash__(self):
        return hash((self.shape, tuple(sorted(self._terms.items()))))

    def __bool__(self):
        return bool(self._terms)

    def sorted_terms(self):
        return sorted(self._terms.items())

    def to_json(self) -> list:
        return [
            {"N": [[i, j, e] for i, j, e in key], "coeff": c.to_json()}
            for key, c in self.sorted_terms()
        ]

    @classmethod
    def from_json(cls, shape: Shape, data) -> "TorusElement":
        return cls(
            shape,
            [
                (mono_key((i, j, e) for i, j, e in item["N"]),
                 LaurentScalar.from_json(item["coeff"]))
                for item in data
            ],
        )

    def __repr__(self):
        if not self._terms:
            return "0"
        bits = []
        for key, c in self.sorted_terms():
            mono = "".join(
                f"t[{i},{j}]" + (f"^{e}" if e != 1 else "") for i, j, e in key
            )
            cs = repr(c)
            if mono == "":
                bits.append(cs)
            elif cs == "1":
                bits.append(mono)
            else:
                bits.append(f"({cs})*{mono}")
        return " + ".join(bits)


def t_gen(shape: Shape, i: int, j: int, e: int = 1) -> TorusElement:
    """The generator t_{i,j}^e as a torus element."""
    shape.check_coord((i, j))
    return TorusElement.monomial(shape, mono_key([(i, j, e)]))


def torus_product(shape: Shape, factors) -> TorusElement:
    """Left-to-right product of torus elements."""
    out = TorusElement.one(shape)
    for f in factors:
        out = out * f
    return out
