"""(n,m)-functions stored as full truth tables."""

from __future__ import annotations

import re
from dataclasses import dataclass

import numpy as np

from .bits import log2_exact, parity, signs
from .gf2n import FieldSpec

MAX_TABLE_BITS = 28

DOT = "dot"
TRACE = "trace"


def _frozen(arr) -> np.ndarray:
    a = np.array(arr, dtype=np.int64)
    a.setflags(write=False)
    return a


@dataclass(frozen=True, eq=False)
class VBF:
    """An (n,m)-function.

    ``field`` is set for functions defined over GF(2^n); it makes the trace
    pairing ``Tr(a*b)`` the default inner product for that function's tables.
    """

    n: int
    m: int
    table: np.ndarray
    field: FieldSpec | None = None

    def __post_init__(self):
        object.__setattr__(self, "table", _frozen(self.table))
        if self.n < 1 or self.m < 1:
            raise ValueError("dimensions must be positive")
        if self.n + self.m > MAX_TABLE_BITS:
            raise ValueError(f"n + m = {self.n + self.m} exceeds {MAX_TABLE_BITS}")
        if self.table.shape != (1 << self.n,):
            raise ValueError(f"expected {1 << self.n} entries, got {self.table.size}")
        if self.table.size and (self.table.min() < 0 or self.table.max() >= 1 << self.m):
            raise ValueError(f"entries must lie in [0, 2^{self.m})")
        if self.field is not None and not (self.field.n == self.n == self.m):
            raise ValueError("a field is only meaningful for (n,n)-functions of matching degree")

    @classmethod
    def from_table(cls, table, m: int | None = None, field: FieldSpec | None = None) -> VBF:
        table = np.asarray(table, dtype=np.int64)
        n = log2_exact(table.size)
        if m is None:
            m = max(int(table.max()).bit_length(), 1)
        return cls(n, m, table, field)

    def with_field(self, field: FieldSpec | None) -> VBF:
        return VBF(self.n, self.m, self.table, field)

    def __call__(self, x: int) -> int:
        return int(self.table[x])

    def __len__(self):
        return self.table.size

    def __eq__(self, other):
        if not isinstance(other, VBF):
            return NotImplemented
        return (self.n, self.m) == (other.n, other.m) and np.array_equal(self.table, other.table)

    def __hash__(self):
        return hash((self.n, self.m, self.table.tobytes()))

    def __repr__(self):
        head = ", ".join(str(v) for v in self.table[:8])
        more = ", ..." if self.table.size > 8 else ""
        return f"VBF(n={self.n}, m={self.m}, [{head}{more}])"


@dataclass(frozen=True, eq=False)
class BooleanFunction:
    n: int
    bits: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "bits", _frozen(self.bits))
        if self.bits.shape != (1 << self.n,):
            raise ValueError(f"expected {1 << self.n} bits, got {self.bits.size}")
        if self.bits.size and not np.isin(self.bits, (0, 1)).all():
            raise ValueError("Boolean function values must be 0 or 1")

    @classmethod
    def from_bits(cls, bits) -> BooleanFunction:
        bits = np.asarray(bits, dtype=np.int64)
        return cls(log2_exact(bits.size), bits)

    @property
    def weight(self) -> int:
        return int(self.bits.sum())

    def is_balanced(self) -> bool:
        return 2 * self.weight == self.bits.size

    def signs(self) -> np.ndarray:
        return signs(self.bits)

    def __xor__(self, other: BooleanFunction) -> BooleanFunction:
        return BooleanFunction(self.n, self.bits ^ other.bits)

    def __eq__(self, other):
        if not isinstance(other, BooleanFunction):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.bits, other.bits)

    def __hash__(self):
        return hash((self.n, self.bits.tobytes()))


@dataclass(frozen=True, eq=False)
class ANF:
    """Coefficient of the monomial with variable set ``s`` at index ``s``."""

    n: int
    m: int
    coefficients: np.ndarray

    def degree(self) -> int:
        support = np.flatnonzero(self.coefficients)
        if support.size == 0:
            return 0
        return int(np.bitwise_count(support).max())

    def to_vbf(self) -> VBF:
        return VBF(self.n, self.m, mobius(self.coefficients))


def resolve_field(F: VBF, convention: str | None) -> FieldSpec | None:
    """Field whose trace form is the inner product, or None for the dot product."""
    if convention is None:
        return F.field
    if convention == DOT:
        return None
    if convention == TRACE:
        if F.field is None:
            raise ValueError("trace convention needs a function defined over GF(2^n)")
        if F.n != F.m:
            raise ValueError("trace convention requires m = n")
        return F.field
    raise ValueError(f"unknown convention {convention!r}")


def convention_name(field: FieldSpec | None) -> str:
    return DOT if field is None else TRACE


_TOKEN = re.compile(r"^(0[xX][0-9a-fA-F]+|[0-9]+)$")


def _tokens(text) -> list[str]:
    if isinstance(text, str):
        lines = (line.split("#", 1)[0] for line in text.splitlines())
        return [t for line in lines for t in re.split(r"[\s,]+", line) if t]
    return [str(t).strip() for t in text]


def parse(text, n: int | None = None, m: int | None = None) -> VBF:
    """Parse a truth table from decimal or 0x-hex tokens.

    Accepts a string (whitespace/comma separated, ``#`` comments) or a token
    list.  Missing dimensions are inferred: n from the token count, m from
    the bit width of the largest entry.
    """
    toks = _tokens(text)
    values = []
    for t in toks:
        if not _TOKEN.match(t):
            raise ValueError(f"malformed token {t!r}")
        values.append(int(t, 0))
    if not values:
        raise ValueError("empty truth table")
    if n is None:
        n = log2_exact(len(values))
    if len(values) != 1 << n:
        raise ValueError(f"wrong length: expected {1 << n} entries for n={n}, got {len(values)}")
    if m is None:
        m = max(max(values).bit_length(), 1)
    bad = [v for v in values if v >= 1 << m]
    if bad:
        raise ValueError(f"value {bad[0]} does not fit in m={m} bits")
    return VBF(n, m, values)


def component(F: VBF, v: int, convention: str | None = None) -> BooleanFunction:
    if not 0 <= v < 1 << F.m:
        raise ValueError(f"output mask {v} out of range")
    field = resolve_field(F, convention)
    mask = v if field is None else int(field.trace_masks()[v])
    return BooleanFunction(F.n, parity(F.table & mask))


def derivative(F: VBF, u: int) -> VBF:
    x = np.arange(1 << F.n)
    return VBF(F.n, F.m, F.table ^ F.table[x ^ u], F.field)


def second_derivative(F: VBF, u: int, w: int) -> VBF:
    return derivative(derivative(F, w), u)


def mobius(values) -> np.ndarray:
    """Binary Möbius transform (its own inverse), applied bitwise."""
    a = np.array(values, dtype=np.int64)
    size = a.size
    h = 1
    while h < size:
        v = a.reshape(-1, 2, h)
        v[:, 1, :] ^= v[:, 0, :]
        h <<= 1
    return a


def anf(F: VBF) -> ANF:
    return ANF(F.n, F.m, mobius(F.table))


def algebraic_degree(F: VBF) -> int:
    return anf(F).degree()


def is_permutation(F: VBF) -> bool:
    if F.n != F.m:
        return False
    seen = np.zeros(1 << F.n, dtype=bool)
    seen[F.table] = True
    return bool(seen.all())


def inverse(F: VBF) -> VBF:
    if not is_permutation(F):
        raise ValueError("function is not a permutation")
    g = np.empty_like(F.table)
    g[F.table] = np.arange(1 << F.n)
    return VBF(F.n, F.m, g, F.field)


def image_indicator(G: VBF) -> BooleanFunction:
    bits = np.zeros(1 << G.m, dtype=np.int64)
    bits[G.table] = 1
    return BooleanFunction(G.m, bits)


def identity(n: int) -> VBF:
    return VBF(n, n, np.arange(1 << n))


def random_function(n: int, m: int, rng: np.random.Generator) -> VBF:
    return VBF(n, m, rng.integers(0, 1 << m, size=1 << n))


def random_permutation(n: int, rng: np.random.Generator) -> VBF:
    return VBF(n, n, rng.permutation(1 << n))


def random_of_degree(n: int, m: int, degree: int, rng: np.random.Generator) -> VBF:
    """Random ANF using monomials of degree <= ``degree``, with at least one of exactly that degree."""
    if not 0 <= degree <= n:
        raise ValueError("degree must be in 0..n")
    masks = np.arange(1 << n)
    allowed = np.bitwise_count(masks) <= degree
    while True:
        coeffs = np.where(allowed, rng.integers(0, 1 << m, size=1 << n), 0)
        A = ANF(n, m, coeffs)
        if A.degree() == degree:
            return A.to_vbf()
