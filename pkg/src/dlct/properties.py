"""Structural detectors and the dual-function identities for the ACT."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import tables
from .bits import rank_gf2, two_adic_valuation
from .transforms import SignedTable, walsh_boolean, walsh_table
from .vbf import VBF, BooleanFunction, algebraic_degree, derivative, image_indicator, is_permutation, resolve_field


def row_energies(act_table: SignedTable) -> np.ndarray:
    """``sum_v AC(u,v)^2`` for every row u."""
    return (act_table.data ** 2).sum(axis=1)


def is_apn(F: VBF) -> bool:
    """Differential uniformity 2, cross-checked against the row-energy criterion."""
    d = tables.ddt(F)
    by_ddt = F.n >= 1 and int(d.data[1:, :].max(initial=0)) == 2
    energy = row_energies(tables.act_from_ddt(F, "dot", ddt_table=d))[1:]
    by_energy = bool((energy == 1 << (F.n + F.m + 1)).all())
    if by_ddt != by_energy:
        raise AssertionError("DDT and row-energy APN criteria disagree")
    return by_ddt


@dataclass
class PlateauedProfile:
    """Amplitude per nonzero output mask; ``None`` marks a non-plateaued component."""

    n: int
    amplitudes: dict[int, int | None] = field(default_factory=dict)

    @property
    def is_plateaued(self) -> bool:
        return all(a is not None for a in self.amplitudes.values())

    @property
    def single_amplitude(self) -> int | None:
        amps = set(self.amplitudes.values())
        if len(amps) == 1 and None not in amps:
            return amps.pop()
        return None

    def exponent(self, v: int) -> int:
        amp = self.amplitudes[v]
        if amp is None:
            raise ValueError(f"component {v} is not plateaued")
        return amp.bit_length() - 1


def _amplitude(column: np.ndarray) -> int | None:
    mags = np.unique(np.abs(column))
    mags = mags[mags != 0]
    if mags.size != 1:
        return None
    amp = int(mags[0])
    return amp if amp & (amp - 1) == 0 else None


def plateaued_profile(F: VBF, lat: SignedTable | None = None) -> PlateauedProfile:
    w = walsh_table(F, "dot") if lat is None else lat
    amps = {v: _amplitude(w.data[:, v]) for v in range(1, 1 << F.m)}
    return PlateauedProfile(F.n, amps)


def is_ab(F: VBF) -> bool:
    if F.n != F.m or F.n % 2 == 0:
        return False
    return plateaued_profile(F).single_amplitude == 1 << ((F.n + 1) // 2)


def is_bent(F: VBF) -> bool:
    if F.n % 2 or 2 * F.m > F.n:
        return False
    w = walsh_table(F, "dot").data[:, 1:]
    return bool((np.abs(w) == 1 << (F.n // 2)).all())


def plateaued_dual(F: VBF, v: int, convention: str | None = None) -> BooleanFunction:
    """Indicator of the Walsh support of the component ``f_v``."""
    w = walsh_table(F, convention).data[:, v]
    if _amplitude(w) is None:
        raise ValueError(f"component {v} is not plateaued")
    return BooleanFunction(F.n, (w != 0).astype(np.int64))


def plateaued_identity_holds(F: VBF, convention: str | None = None) -> bool:
    """``AC(u,v) * 2^(n+1) = -2^(2 r_v) W_dual(u)`` for all u, v != 0.

    Kept multiplied out so bent components (r_v = n/2) need no fractions.
    """
    fld = resolve_field(F, convention)
    a = tables.act_from_ddt(F, convention).data
    lat = walsh_table(F, convention)
    for v in range(1, 1 << F.m):
        col = lat.data[:, v]
        amp = _amplitude(col)
        if amp is None:
            raise ValueError(f"component {v} is not plateaued")
        dual = BooleanFunction(F.n, (col != 0).astype(np.int64))
        wd = walsh_boolean(dual, fld)
        if not np.array_equal(a[1:, v] << (F.n + 1), -(amp * amp) * wd[1:]):
            return False
    return True


def apn_gamma(F: VBF, u: int) -> BooleanFunction:
    """Indicator of the image of ``D_u F`` for an APN function."""
    if u == 0:
        raise ValueError("direction must be nonzero")
    d = derivative(F, u)
    counts = np.bincount(d.table, minlength=1 << F.m)
    if counts.max() != 2:
        raise ValueError("function is not APN in this direction")
    gamma = image_indicator(d)
    if 2 * gamma.weight != 1 << F.n:
        raise AssertionError("image of an APN derivative must have 2^(n-1) points")
    return gamma


def apn_identity_holds(F: VBF, convention: str | None = None) -> bool:
    """``AC(u,v) = -W_gamma_u(v)`` for all nonzero u, v."""
    fld = resolve_field(F, convention)
    a = tables.act_from_ddt(F, convention).data
    for u in range(1, 1 << F.n):
        w = walsh_boolean(apn_gamma(F, u), fld)
        if not np.array_equal(a[u, 1:], -w[1:]):
            return False
    return True


def apn_balanced_witness(F: VBF) -> tuple[int, BooleanFunction, int]:
    """A row u attaining the absolute indicator, its balanced ``gamma_u`` and L(gamma_u)."""
    if not is_apn(F):
        raise ValueError("function is not APN")
    a = np.abs(tables.act_from_ddt(F, "dot").data)
    u = 1 + int(np.argmax(a[1:, 1:].max(axis=1)))
    g = apn_gamma(F, u)
    lin = int(np.abs(walsh_boolean(g)).max())
    if not g.is_balanced() or lin != int(a[1:, 1:].max()):
        raise AssertionError("witness does not reproduce the absolute indicator")
    return u, g, lin


def linear_structures(F: VBF, convention: str | None = None) -> set[tuple[int, int]]:
    a = tables.act_from_ddt(F, convention).data
    us, vs = np.nonzero(np.abs(a[1:, 1:]) == 1 << F.n)
    return {(int(u) + 1, int(v) + 1) for u, v in zip(us, vs)}


@dataclass(frozen=True)
class DivisibilityResult:
    observed_exponent: int
    bound_exponent: int
    passed: bool
    degree: int


def divisibility_check(F: VBF, act_table: SignedTable | None = None) -> DivisibilityResult:
    """Largest power of two dividing every nonzero-position ACT entry vs the degree bound."""
    if F.n <= 2:
        raise ValueError("divisibility law needs n > 2")
    d = algebraic_degree(F)
    if d < 2:
        raise ValueError(f"affine function (degree {d}): divisibility is trivial")
    a = tables.act_from_ddt(F, "dot") if act_table is None else act_table
    block = a.nonzero_block()
    nz = block[block != 0]
    if nz.size == 0:
        observed = F.n
    else:
        observed = min(two_adic_valuation(int(np.bitwise_or.reduce(np.abs(nz)))), F.n)
    bound = -(-(F.n - 1) // (d - 1)) + 1
    ok = observed >= bound
    if is_permutation(F):
        ok = ok and observed >= 3
    return DivisibilityResult(observed, bound, ok, d)


@dataclass(frozen=True)
class CubicKernel:
    dim: int
    consistent: bool

    def predicted_square(self, n: int) -> int:
        return 1 << (n + self.dim) if self.consistent else 0


def _second_derivative_rows(h: np.ndarray, n: int) -> list[int]:
    """Linear part of ``x -> h(x) + h(x+e_j)`` as a bit mask, for each basis e_j."""
    rows = []
    for j in range(n):
        w = 1 << j
        c = int(h[0] ^ h[w])
        mask = 0
        for k in range(n):
            e = 1 << k
            mask |= (int(h[e] ^ h[e ^ w]) ^ c) << k
        rows.append(mask)
    return rows


def _kernel_basis(rows: list[int], n: int) -> list[int]:
    """Basis of ``{w : sum_j w_j rows[j] = 0}`` (w as a bit mask over the row index)."""
    pivots: dict[int, tuple[int, int]] = {}
    kernel = []
    for j, r in enumerate(rows):
        combo = 1 << j
        while r:
            top = r.bit_length() - 1
            if top not in pivots:
                pivots[top] = (r, combo)
                break
            pr, pc = pivots[top]
            r ^= pr
            combo ^= pc
        if r == 0:
            kernel.append(combo)
    return kernel


def cubic_second_order_dim(F: VBF, u: int, v: int, convention: str | None = None,
                           degree: int | None = None) -> CubicKernel:
    """Dimension of ``{w : D_u D_w f_v constant}`` and whether the constant vanishes on it.

    ``D_u D_w f_v`` is affine in x with linear part linear in w, so the set is
    a kernel computed from the n basis directions.
    """
    if (algebraic_degree(F) if degree is None else degree) != 3:
        raise ValueError("function is not cubic")
    if u == 0 or v == 0:
        raise ValueError("u and v must be nonzero")
    from .vbf import component

    f = component(F, v, convention).bits
    x = np.arange(1 << F.n)
    h = f ^ f[x ^ u]
    rows = _second_derivative_rows(h, F.n)
    kernel = _kernel_basis(rows, F.n)
    # the constant term w -> h(0) + h(w) is linear on the kernel
    consistent = all(h[0] == h[w] for w in kernel)
    return CubicKernel(len(kernel), consistent)


def second_derivative_kernel_brute(F: VBF, u: int, v: int, convention: str | None = None) -> tuple[int, bool]:
    """Enumerates every w; independent of the basis computation above."""
    from .vbf import component

    f = component(F, v, convention).bits
    x = np.arange(1 << F.n)
    members, consts = [], set()
    for w in range(1 << F.n):
        g = f ^ f[x ^ u] ^ f[x ^ w] ^ f[x ^ u ^ w]
        if (g == g[0]).all():
            members.append(w)
            if g[0]:
                consts.add(w)
    size = len(members)
    dim = size.bit_length() - 1
    if size != 1 << dim or rank_gf2(members) != dim:
        raise AssertionError("constant-second-derivative set is not a subspace")
    return dim, not consts


def indicator_lower_bound(n: int, m: int) -> float:
    if m < n:
        raise ValueError("bound needs m >= n")
    return math.sqrt(((1 << (m + n + 1)) - (1 << (2 * n))) / ((1 << m) - 1))


def check_bound(F: VBF, delta: int | None = None) -> bool:
    """Integer form: ``Delta^2 (2^m - 1) >= 2^(m+n+1) - 2^(2n)``; strict ``Delta > 2^(n/2)`` when m = n."""
    if F.m < F.n:
        raise ValueError("bound needs m >= n")
    delta = tables.absolute_indicator(F) if delta is None else delta
    ok = delta * delta * ((1 << F.m) - 1) >= (1 << (F.m + F.n + 1)) - (1 << (2 * F.n))
    if F.m == F.n:
        ok = ok and delta * delta > 1 << F.n
    return ok


def permutation_by_row_sums(F: VBF, act_table: SignedTable | None = None) -> bool:
    """Every full row u != 0 of the ACT sums to zero, i.e. ``2^m DDT(u,0) = 0``.

    Restricted to v != 0 the row of a permutation sums to ``-2^n``, not zero.
    """
    a = tables.act_from_ddt(F, "dot") if act_table is None else act_table
    return bool((a.data[1:, :].sum(axis=1) == 0).all())


def permutation_by_column_sums(F: VBF, act_table: SignedTable | None = None) -> bool:
    """Every full column v != 0 sums to zero, i.e. ``W_F(0,v)^2 = 0``: all components balanced."""
    a = tables.act_from_ddt(F, "dot") if act_table is None else act_table
    return bool((a.data[:, 1:].sum(axis=0) == 0).all())


def cubic_entries_check(F: VBF, convention: str | None = None, pairs=None) -> tuple[bool, tuple[int, int] | None]:
    """``AC(u,v)^2 = 2^(n + d(u,v))`` when the kernel constant vanishes, else ``AC(u,v) = 0``.

    Runs over every nonzero (u, v) unless ``pairs`` is given; returns the
    first failing pair.
    """
    a = tables.act_from_ddt(F, convention).data
    if pairs is None:
        pairs = ((u, v) for u in range(1, 1 << F.n) for v in range(1, 1 << F.m))
    for u, v in pairs:
        k = cubic_second_order_dim(F, u, v, convention, degree=3)
        if int(a[u, v]) ** 2 != k.predicted_square(F.n):
            return False, (u, v)
    return True, None
