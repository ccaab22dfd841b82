import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dlct import catalog, gf2n, tables, vbf
from dlct.families import INVERSE, FamilySpec, build, default_field
from dlct.tables import Spectrum
from dlct.transforms import fwht, walsh_table
from dlct.vbf import VBF

# x^-1 over GF(2^7) with modulus 0x83, from act_direct
INVERSE_GF128 = {-24: 889, -16: 1905, -8: 3556, 0: 4445, 8: 2667, 16: 2667}


functions = st.tuples(st.integers(1, 7), st.integers(1, 7), st.integers(0, 2**32 - 1)).map(
    lambda t: vbf.random_function(t[0], t[1], np.random.default_rng(t[2])))


@settings(max_examples=60, deadline=None)
@given(functions)
def test_three_routes_agree(F):
    a = tables.act_from_ddt(F)
    assert a == tables.act_direct(F)
    assert a == tables.act_from_walsh(F)


@settings(max_examples=60, deadline=None)
@given(functions)
def test_sum_and_energy_identities(F):
    n, m = F.n, F.m
    a = tables.act_from_ddt(F).data
    d = tables.ddt(F).data
    w = walsh_table(F).data
    assert np.array_equal(a.sum(axis=0), w[0] ** 2)
    assert np.array_equal((a ** 2).sum(axis=0) << n, (w ** 4).sum(axis=0))
    assert np.array_equal(a.sum(axis=1), d[:, 0] << m)
    assert np.array_equal((a ** 2).sum(axis=1), (d ** 2).sum(axis=1) << m)
    assert np.array_equal(fwht(a, axis=1), d << m)
    assert (a[0] == 1 << n).all() and (a[:, 0] == 1 << n).all()
    assert not (a & 1).any()


def test_total_sum_equals_two_power_only_when_injective(rng):
    P = vbf.random_permutation(5, rng)
    assert int(tables.act_from_ddt(P).data.sum()) == 1 << 10
    F = VBF(3, 3, [0, 0, 1, 2, 3, 4, 5, 6])
    total = int(tables.act_from_ddt(F).data.sum())
    fibres = np.bincount(F.table, minlength=8)
    assert total == int((fibres ** 2).sum()) << 3
    assert total != 1 << 6


def test_ddt_identity_and_gold():
    assert np.array_equal(tables.ddt(vbf.identity(2)).data, 4 * np.eye(4, dtype=np.int64))
    field = default_field(5)
    d = tables.ddt(VBF(5, 5, gf2n.power_table(3, field), field)).data
    assert set(np.unique(d[1:]).tolist()) == {0, 2}
    assert tables.ddt(catalog.get(0).vbf()).data[1:].max() == 4


def test_act_of_identity():
    n = 3
    a = tables.act_direct(vbf.identity(n)).data
    u = np.arange(8)
    expected = 8 * (1 - 2 * (np.bitwise_count(u[:, None] & u[None, :]).astype(np.int64) & 1))
    assert np.array_equal(a, expected)


def test_inverse_gf128_spectrum(gf128):
    F = build(FamilySpec(INVERSE, gf128))
    s = tables.autocorrelation_spectrum(F, tables.act_direct(F))
    assert s == INVERSE_GF128
    assert s.total == 127 * 127
    assert s.values() == {-24, -16, -8, 0, 8, 16}


def test_inverse_plus_x_gf128(gf128):
    F = build(FamilySpec(INVERSE, gf128))
    G = VBF(7, 7, F.table ^ np.arange(128), gf128)
    assert tables.autocorrelation_spectrum(G).values() == {-24, -16, -8, 0, 8, 16, 24}


def test_dlct(rng):
    F = vbf.random_function(5, 4, rng)
    D = tables.dlct(F)
    assert D == tables.dlct_direct(F)
    assert (D.data[0] == 16).all() and (D.data[:, 0] == 16).all()
    P = vbf.random_permutation(6, rng)
    assert not (tables.dlct(P).data % 4).any()
    assert tables.indicators(catalog.get(0).vbf()).max_dlct == 8


def test_indicators(gf128):
    r = tables.indicators(build(FamilySpec(INVERSE, gf128)))
    assert r.absolute_indicator == 24 and r.max_dlct == 12
    assert r.differential_uniformity == 2
    assert r.nonlinearity == 64 - r.linearity // 2
    r8 = tables.indicators(build(FamilySpec(INVERSE, default_field(8))))
    assert (r8.absolute_indicator, r8.differential_uniformity) == (32, 4)
    r1 = tables.indicators(VBF(1, 1, [0, 1]))
    assert r1.differential_uniformity == 2  # row u=1 of the identity


def test_conventions_give_same_multisets():
    field = default_field(6)
    F = VBF(6, 6, gf2n.power_table(11, field), field)
    assert tables.spectrum_of(tables.act_from_ddt(F, "dot")) == tables.spectrum_of(tables.act_from_ddt(F, "trace"))
    assert tables.act_direct(F, "trace") == tables.act_from_ddt(F, "trace")


def test_spectrum_type():
    s = Spectrum.from_values([3, -1, 3, 0])
    assert s.counts == {-1: 1, 0: 1, 3: 2}
    assert list(s.counts) == [-1, 0, 3]
    assert s.pairs() == [[-1, 1], [0, 1], [3, 2]]
    assert s.scaled(3) == {-1: 3, 0: 3, 3: 6}
    assert s.max_abs() == 3 and s.total == 4
    with pytest.raises(ValueError):
        Spectrum({1: 0})
    assert Spectrum().max_abs() == 0


def test_extended_spectrum(gf128):
    F = build(FamilySpec(INVERSE, gf128))
    ext = tables.extended_spectrum(F)
    assert ext == {0: 4445, 8: 3556 + 2667, 16: 1905 + 2667, 24: 889}
