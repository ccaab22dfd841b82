"""Walsh-Hadamard machinery over F_2^n and F_2^n x F_2^m."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass

import numpy as np

from .bits import log2_exact, parity
from .vbf import DOT, VBF, BooleanFunction, convention_name, resolve_field

KINDS = ("DDT", "LAT", "ACT", "DLCT", "GENERIC")


@dataclass(frozen=True, eq=False)
class SignedTable:
    """A 2^n x 2^m integer table; rows are inputs, columns output masks."""

    n: int
    m: int
    kind: str
    data: np.ndarray
    convention: str = DOT

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown table kind {self.kind!r}")
        data = np.array(self.data, dtype=np.int64)
        if data.shape != (1 << self.n, 1 << self.m):
            raise ValueError(f"table shape {data.shape} does not match n={self.n}, m={self.m}")
        data.setflags(write=False)
        object.__setattr__(self, "data", data)

    def __getitem__(self, idx):
        return self.data[idx]

    def __eq__(self, other):
        if not isinstance(other, SignedTable):
            return NotImplemented
        return (self.n, self.m) == (other.n, other.m) and np.array_equal(self.data, other.data)

    def __hash__(self):
        return hash((self.n, self.m, self.kind, self.data.tobytes()))

    def nonzero_block(self) -> np.ndarray:
        """Entries with row != 0 and column != 0."""
        return self.data[1:, 1:]

    def check_bounds(self) -> None:
        d, size = self.data, 1 << self.n
        if self.kind in ("ACT", "LAT") and np.abs(d).max() > size:
            raise ValueError(f"{self.kind} entry exceeds 2^n in magnitude")
        if self.kind == "DDT" and (d.min() < 0 or d.max() > size or (d & 1).any()):
            raise ValueError("DDT entries must be even and within [0, 2^n]")
        if self.kind == "DLCT" and np.abs(d).max() > size // 2:
            raise ValueError("DLCT entry exceeds 2^(n-1) in magnitude")

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    def to_dict(self) -> dict:
        return {"kind": self.kind, "n": self.n, "m": self.m, "rows": self.data.tolist()}

    @classmethod
    def from_json(cls, text: str) -> SignedTable:
        obj = json.loads(text)
        return cls(obj["n"], obj["m"], obj["kind"], np.array(obj["rows"], dtype=np.int64))

    def to_csv(self) -> str:
        out = io.StringIO()
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["kind", "n", "m"])
        w.writerow([self.kind, self.n, self.m])
        w.writerows(self.data.tolist())
        return out.getvalue()

    @classmethod
    def from_csv(cls, text: str) -> SignedTable:
        rows = list(csv.reader(io.StringIO(text)))
        if rows[0] != ["kind", "n", "m"]:
            raise ValueError("missing kind,n,m header")
        kind, n, m = rows[1][0], int(rows[1][1]), int(rows[1][2])
        return cls(n, m, kind, np.array(rows[2:], dtype=np.int64))


def fwht(values, axis: int = -1) -> np.ndarray:
    """Unnormalized Walsh-Hadamard transform along ``axis``.

    ``out[a] = sum_b (-1)^(a.b) in[b]`` with the dot product pairing.
    """
    a = np.ascontiguousarray(np.moveaxis(np.array(values, dtype=np.int64), axis, 0))
    size = a.shape[0]
    log2_exact(size)
    rest = a.size // size if size else 0
    flat = a.reshape(size, rest)
    h = 1
    while h < size:
        v = flat.reshape(size // (2 * h), 2, h * rest)
        lo = v[:, 0, :].copy()
        v[:, 0, :] += v[:, 1, :]
        np.subtract(lo, v[:, 1, :], out=v[:, 1, :])
        h <<= 1
    return np.ascontiguousarray(np.moveaxis(a, 0, axis))


def walsh_boolean(f: BooleanFunction, field=None) -> np.ndarray:
    """``W_f(w) = sum_x (-1)^(f(x) + w.x)`` for every w.

    With a field, ``w.x`` is ``Tr(w*x)``.
    """
    w = fwht(f.signs())
    if field is not None:
        w = w[field.trace_masks()]
    return w


def _trace_relabel(data: np.ndarray, field, rows: bool, cols: bool) -> np.ndarray:
    t = field.trace_masks()
    if rows:
        data = data[t, :]
    if cols:
        data = data[:, t]
    return data


def walsh_table(F: VBF, convention: str | None = None) -> SignedTable:
    """The LAT: ``W_F(u,v) = sum_x (-1)^(u.x + v.F(x))``, one FWHT per column."""
    field = resolve_field(F, convention)
    masks = np.arange(1 << F.m)
    comp = parity(F.table[:, None] & masks[None, :])
    lat = fwht(1 - 2 * comp, axis=0)
    if field is not None:
        lat = _trace_relabel(lat, field, rows=True, cols=True)
    return SignedTable(F.n, F.m, "LAT", lat, convention_name(field))


def fourier_2d(T: SignedTable, kind: str = "GENERIC") -> SignedTable:
    """``out(u,v) = 2^-n sum_{a,b} (-1)^(u.a + v.b) in(a,b)``, exact."""
    full = fwht(fwht(T.data, axis=0), axis=1)
    scale = 1 << T.n
    if (full % scale).any():
        raise ValueError("2-D transform is not integral after scaling by 2^-n")
    return SignedTable(T.n, T.m, kind, full // scale, T.convention)
