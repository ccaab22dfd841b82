"""DDT, LAT, ACT and DLCT of an (n,m)-function, plus their scalar indicators.

The autocorrelation table has three independent routes:

* :func:`act_direct` sums ``(-1)^(v.(F(x)+F(x+u)))`` literally,
* :func:`act_from_ddt` Fourier-transforms each DDT row (production path),
* :func:`act_from_walsh` Fourier-transforms each squared LAT column.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass

import numpy as np

from .bits import parity
from .transforms import SignedTable, fwht, walsh_table
from .vbf import VBF, convention_name, resolve_field


class Spectrum:
    """Exact multiset of integers, stored as sorted value -> count."""

    __slots__ = ("_counts",)

    def __init__(self, counts=None):
        counts = dict(counts or {})
        if any(c <= 0 for c in counts.values()):
            raise ValueError("multiset counts must be positive")
        self._counts = {int(k): int(counts[k]) for k in sorted(counts)}

    @classmethod
    def from_values(cls, values) -> Spectrum:
        vals, counts = np.unique(np.asarray(values, dtype=np.int64).ravel(), return_counts=True)
        return cls(dict(zip(vals.tolist(), counts.tolist())))

    @property
    def counts(self) -> dict[int, int]:
        return dict(self._counts)

    def values(self) -> set[int]:
        return set(self._counts)

    @property
    def total(self) -> int:
        return sum(self._counts.values())

    def max_abs(self) -> int:
        return max((abs(v) for v in self._counts), default=0)

    def scaled(self, factor: int) -> Spectrum:
        return Spectrum({v: c * factor for v, c in self._counts.items()})

    def pairs(self) -> list[list[int]]:
        return [[v, c] for v, c in self._counts.items()]

    def __eq__(self, other):
        if isinstance(other, Spectrum):
            return self._counts == other._counts
        if isinstance(other, dict):
            return self._counts == {int(k): int(v) for k, v in other.items()}
        return NotImplemented

    def __hash__(self):
        return hash(tuple(self._counts.items()))

    def __repr__(self):
        body = ", ".join(f"{v}: {c}" for v, c in self._counts.items())
        return f"Spectrum({{{body}}})"


@dataclass(frozen=True)
class IndicatorReport:
    differential_uniformity: int
    linearity: int
    nonlinearity: int
    absolute_indicator: int
    max_dlct: int

    def as_dict(self) -> dict:
        return asdict(self)


def ddt(F: VBF) -> SignedTable:
    x = np.arange(1 << F.n)
    size_out = 1 << F.m
    rows = np.empty((1 << F.n, size_out), dtype=np.int64)
    for u in range(1 << F.n):
        rows[u] = np.bincount(F.table ^ F.table[x ^ u], minlength=size_out)
    return SignedTable(F.n, F.m, "DDT", rows)


def lat(F: VBF, convention: str | None = None) -> SignedTable:
    return walsh_table(F, convention)


def _column_masks(F: VBF, field) -> np.ndarray:
    masks = np.arange(1 << F.m)
    return masks if field is None else field.trace_masks()[masks]


def act_direct(F: VBF, convention: str | None = None) -> SignedTable:
    """Reference oracle: the defining character sum, row by row."""
    field = resolve_field(F, convention)
    masks = _column_masks(F, field)
    x = np.arange(1 << F.n)
    out = np.empty((1 << F.n, 1 << F.m), dtype=np.int64)
    for u in range(1 << F.n):
        d = F.table ^ F.table[x ^ u]
        out[u] = (1 - 2 * parity(d[:, None] & masks[None, :])).sum(axis=0)
    return SignedTable(F.n, F.m, "ACT", out, convention_name(field))


def act_from_ddt(F: VBF, convention: str | None = None, ddt_table: SignedTable | None = None) -> SignedTable:
    field = resolve_field(F, convention)
    d = ddt(F) if ddt_table is None else ddt_table
    out = fwht(d.data, axis=1)
    if field is not None:
        out = out[:, field.trace_masks()]
    return SignedTable(F.n, F.m, "ACT", out, convention_name(field))


def act_from_walsh(F: VBF, convention: str | None = None) -> SignedTable:
    field = resolve_field(F, convention)
    w = walsh_table(F, "dot").data
    full = fwht(w * w, axis=0)
    scale = 1 << F.n
    if (full % scale).any():
        raise ArithmeticError("squared-Walsh transform is not divisible by 2^n")
    out = full // scale
    if field is not None:
        out = out[:, field.trace_masks()]
    return SignedTable(F.n, F.m, "ACT", out, convention_name(field))


act = act_from_ddt


def dlct(F: VBF, convention: str | None = None) -> SignedTable:
    a = act_from_ddt(F, convention)
    return SignedTable(F.n, F.m, "DLCT", a.data // 2, a.convention)


def dlct_direct(F: VBF, convention: str | None = None) -> SignedTable:
    """``#{x : v.F(x) = v.F(x+u)} - 2^(n-1)`` by counting."""
    field = resolve_field(F, convention)
    masks = _column_masks(F, field)
    x = np.arange(1 << F.n)
    out = np.empty((1 << F.n, 1 << F.m), dtype=np.int64)
    comps = parity(F.table[:, None] & masks[None, :])
    for u in range(1 << F.n):
        out[u] = (comps == comps[x ^ u]).sum(axis=0) - (1 << (F.n - 1))
    return SignedTable(F.n, F.m, "DLCT", out, convention_name(field))


def spectrum_of(T: SignedTable) -> Spectrum:
    return Spectrum.from_values(T.nonzero_block())


def autocorrelation_spectrum(F: VBF, act_table: SignedTable | None = None) -> Spectrum:
    """Multiset of ACT entries over u != 0, v != 0."""
    return spectrum_of(act_from_ddt(F) if act_table is None else act_table)


def extended_spectrum(F: VBF, act_table: SignedTable | None = None) -> Spectrum:
    """Multiset of |AC(u,v)| over the same range."""
    a = act_from_ddt(F) if act_table is None else act_table
    return Spectrum.from_values(np.abs(a.nonzero_block()))


def _max_or_zero(block: np.ndarray) -> int:
    return int(block.max()) if block.size else 0


def absolute_indicator(F: VBF, act_table: SignedTable | None = None) -> int:
    a = act_from_ddt(F, "dot") if act_table is None else act_table
    return _max_or_zero(np.abs(a.nonzero_block()))


def indicators(F: VBF) -> IndicatorReport:
    d = ddt(F)
    a = act_from_ddt(F, "dot", ddt_table=d)
    w = walsh_table(F, "dot")
    delta = _max_or_zero(d.data[1:, :])
    linearity = _max_or_zero(np.abs(w.data[:, 1:]))
    nl = (1 << (F.n - 1)) - linearity // 2
    big_delta = _max_or_zero(np.abs(a.nonzero_block()))
    return IndicatorReport(delta, linearity, nl, big_delta, big_delta // 2)
