"""Affine maps over F_2, EA transforms and the inverse-permutation ACT identity."""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from . import tables
from .bits import parity, rank_gf2
from .transforms import SignedTable, fourier_2d
from .vbf import VBF, convention_name, is_permutation, resolve_field


@dataclass(frozen=True)
class AffineMap:
    """``x -> M x + c`` from F_2^n to F_2^m.

    ``rows[i]`` is row i of M as an n-bit mask, so output bit i is
    ``parity(rows[i] & x) ^ c_i``.
    """

    n: int
    m: int
    rows: tuple[int, ...]
    constant: int = 0
    invertible: bool = False

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(int(r) for r in self.rows))
        if len(self.rows) != self.m:
            raise ValueError(f"expected {self.m} rows, got {len(self.rows)}")
        if any(r < 0 or r >> self.n for r in self.rows):
            raise ValueError(f"row masks must fit in {self.n} bits")
        if not 0 <= self.constant < 1 << self.m:
            raise ValueError("constant out of range")
        if self.invertible and (self.n != self.m or self.rank() != self.n):
            raise ValueError("matrix is singular")

    @classmethod
    def identity(cls, n: int) -> AffineMap:
        return cls(n, n, tuple(1 << i for i in range(n)), 0, True)

    @classmethod
    def zero(cls, n: int, m: int) -> AffineMap:
        return cls(n, m, (0,) * m)

    def rank(self) -> int:
        return rank_gf2(self.rows)

    @property
    def linear(self) -> AffineMap:
        return AffineMap(self.n, self.m, self.rows, 0, self.invertible)

    def __call__(self, x: int) -> int:
        return apply(self, x)

    def table(self) -> np.ndarray:
        """Images of every input, as an array."""
        x = np.arange(1 << self.n)
        out = np.full(x.shape, self.constant, dtype=np.int64)
        for i, r in enumerate(self.rows):
            out ^= parity(x & r) << i
        return out

    def to_json(self) -> str:
        return json.dumps({
            "n": self.n,
            "m": self.m,
            "rows": [hex(r) for r in self.rows],
            "constant": hex(self.constant),
        })

    @classmethod
    def from_json(cls, text: str) -> AffineMap:
        obj = json.loads(text)
        rows = tuple(int(r, 16) for r in obj["rows"])
        return cls(obj["n"], obj["m"], rows, int(obj["constant"], 16))


def apply(M: AffineMap, x: int) -> int:
    y = M.constant
    for i, r in enumerate(M.rows):
        y ^= (bin(r & x).count("1") & 1) << i
    return y


def transpose(M: AffineMap) -> AffineMap:
    """Transpose of the linear part: ``transpose(M)(v) . x = v . M_lin(x)``."""
    cols = [0] * M.n
    for i, r in enumerate(M.rows):
        for j in range(M.n):
            if (r >> j) & 1:
                cols[j] |= 1 << i
    return AffineMap(M.m, M.n, tuple(cols), 0, M.invertible)


def compose(A: AffineMap, B: AffineMap) -> AffineMap:
    """``A o B``."""
    if B.m != A.n:
        raise ValueError("dimension mismatch")
    rows = []
    bt = transpose(B).rows  # bt[j] is column j of B
    for r in A.rows:
        row = 0
        for j in range(B.n):
            if bin(r & bt[j]).count("1") & 1:
                row |= 1 << j
        rows.append(row)
    return AffineMap(B.n, A.m, tuple(rows), apply(A, B.constant), A.invertible and B.invertible)


def invert(M: AffineMap) -> AffineMap:
    if M.n != M.m or M.rank() != M.n:
        raise ValueError("matrix is singular")
    n = M.n
    # Gauss-Jordan on [M | I], rows as (matrix row, identity row)
    aug = [(M.rows[i], 1 << i) for i in range(n)]
    for col in range(n):
        piv = next(i for i in range(col, n) if (aug[i][0] >> col) & 1)
        aug[col], aug[piv] = aug[piv], aug[col]
        for i in range(n):
            if i != col and (aug[i][0] >> col) & 1:
                aug[i] = (aug[i][0] ^ aug[col][0], aug[i][1] ^ aug[col][1])
    lin = AffineMap(n, n, tuple(r[1] for r in aug), 0, True)
    return AffineMap(n, n, lin.rows, apply(lin, M.constant), True)


def random_invertible(n: int, rng: np.random.Generator, affine: bool = True) -> AffineMap:
    """Rejection-sampled invertible affine map."""
    while True:
        rows = tuple(int(r) for r in rng.integers(0, 1 << n, size=n))
        if rank_gf2(rows) == n:
            const = int(rng.integers(0, 1 << n)) if affine else 0
            return AffineMap(n, n, rows, const, True)


def random_affine(n: int, m: int, rng: np.random.Generator) -> AffineMap:
    rows = tuple(int(r) for r in rng.integers(0, 1 << n, size=m))
    return AffineMap(n, m, rows, int(rng.integers(0, 1 << m)))


def ea_transform(F: VBF, A1: AffineMap, A2: AffineMap, A: AffineMap | None = None) -> VBF:
    """``A1 o F o A2 + A``."""
    if (A2.n, A2.m) != (F.n, F.n) or (A1.n, A1.m) != (F.m, F.m):
        raise ValueError("dimension mismatch")
    if A2.rank() != F.n or A1.rank() != F.m:
        raise ValueError("A1 and A2 must be invertible")
    out = A1.table()[F.table[A2.table()]]
    if A is not None:
        if (A.n, A.m) != (F.n, F.m):
            raise ValueError("dimension mismatch for the additive map")
        out = out ^ A.table()
    return VBF(F.n, F.m, out)


@dataclass(frozen=True)
class PointwiseResult:
    ok: bool
    counterexample: tuple[int, int] | None = None

    def __bool__(self):
        return self.ok


def ea_act_pointwise_check(F: VBF, A1: AffineMap, A2: AffineMap, A: AffineMap | None = None,
                           transformed: VBF | None = None) -> PointwiseResult:
    """``AC_F'(u,v) = (-1)^(v.L(u)) AC_F(L2(u), L1^T(v))`` at every nonzero (u,v).

    ``transformed`` overrides the function being checked (used for negative
    controls); by default it is ``ea_transform(F, A1, A2, A)``.
    """
    Fp = ea_transform(F, A1, A2, A) if transformed is None else transformed
    left = tables.act_from_ddt(Fp, "dot").data
    right = tables.act_from_ddt(F, "dot").data
    L2 = A2.linear.table()
    L1T = transpose(A1).table()
    u = np.arange(1 << F.n)
    v = np.arange(1 << F.m)
    predicted = right[L2[u][:, None], L1T[v][None, :]]
    if A is not None:
        Lu = A.linear.table()
        predicted = predicted * (1 - 2 * parity(Lu[:, None] & v[None, :]))
    bad = np.argwhere(left[1:, 1:] != predicted[1:, 1:])
    if bad.size:
        return PointwiseResult(False, (int(bad[0][0]) + 1, int(bad[0][1]) + 1))
    return PointwiseResult(True)


def inverse_act(F: VBF, act_table: SignedTable | None = None, convention: str | None = None) -> SignedTable:
    """ACT of ``F^-1`` from the ACT of F by a 2-D Walsh transform.

    ``AC_{F^-1}(u,v) = 2^-n sum_{a,b} (-1)^(v.a + u.b) AC_F(a,b)``: the row
    index of ``ACT_F`` pairs with the column mask of the result, hence the
    transpose.
    """
    if not is_permutation(F):
        raise ValueError("function is not a permutation")
    a = tables.act_from_ddt(F, "dot") if act_table is None else act_table
    if a.convention != "dot":
        raise ValueError("inverse_act works on the dot-product ACT")
    field = resolve_field(F, convention)
    g = fourier_2d(a).data.T
    if field is not None:
        g = g[:, field.trace_masks()]
    return SignedTable(F.n, F.m, "ACT", g, convention_name(field))
