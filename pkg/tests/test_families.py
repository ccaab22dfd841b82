import math

import numpy as np
import pytest

from dlct import families as fam
from dlct import gf2n, tables, vbf
from dlct.transforms import walsh_boolean, walsh_table
from dlct.families import FamilySpec, build, default_field


def test_gold_n3_table():
    F = build(FamilySpec(fam.GOLD, default_field(3), i=1))
    assert F.table.tolist() == [0, 1, 3, 4, 5, 6, 7, 2]
    assert vbf.is_permutation(F)


def test_inverse_fixed_points():
    F = build(FamilySpec(fam.INVERSE, default_field(4)))
    assert F(0) == 0 and F(1) == 1


def test_bracken_leander_exponent():
    spec = FamilySpec(fam.BRACKEN_LEANDER, default_field(4), k=1)
    assert spec.exponent == 7
    assert build(spec) == vbf.VBF(4, 4, gf2n.power_table(7, default_field(4)))


@pytest.mark.parametrize("kwargs", [
    dict(kind=fam.GOLD, i=0), dict(kind=fam.GOLD, i=5), dict(kind=fam.KASAMI),
    dict(kind=fam.BRACKEN_LEANDER, k=2), dict(kind=fam.RANDOM_QUADRATIC), dict(kind="dobbertin"),
])
def test_invalid_parameters(kwargs):
    with pytest.raises(ValueError):
        FamilySpec(field=default_field(5), **kwargs)


def test_welch_needs_odd_n():
    with pytest.raises(ValueError):
        FamilySpec(fam.WELCH, default_field(6))
    assert FamilySpec(fam.WELCH, default_field(7)).exponent == 11


def test_parse_family():
    s = fam.parse_family("kasami:i=2", 7)
    assert (s.kind, s.i, s.exponent) == (fam.KASAMI, 2, 13)
    assert fam.parse_family("quad:seed=0x10", 5).seed == 16
    assert fam.parse_family("bl:k=2", 8, modulus=0x11D).field.modulus == 0x11D
    for bad in ("gold", "gold:j=1", "gold:i", "nope", "inverse:i=2"):
        with pytest.raises(ValueError):
            fam.parse_family(bad, 5)


def test_random_quadratic_is_seeded_and_quadratic():
    f = default_field(6)
    a, b = fam.random_quadratic(f, 11), fam.random_quadratic(f, 11)
    assert a == b and a != fam.random_quadratic(f, 12)
    assert vbf.algebraic_degree(a) == 2


def test_monomial_fast_value_set_matches_full():
    f = default_field(5)
    F = build(FamilySpec(fam.GOLD, f, i=1))
    full = tables.autocorrelation_spectrum(F)
    assert fam.monomial_spectrum_fast(3, f).values() == full.values()
    assert fam.monomial_spectrum_fast(3, f, full=True) == full


@pytest.mark.parametrize("n, d", [(6, 5), (6, 13), (7, 13), (8, 7), (7, 126)])
def test_monomial_full_reconstruction(n, d):
    f = default_field(n)
    F = vbf.VBF(n, n, gf2n.power_table(d, f), f)
    assert fam.monomial_spectrum_fast(d, f, full=True) == tables.autocorrelation_spectrum(F)


def test_column_reduction():
    f = default_field(7)
    assert fam.monomial_spectrum_fast(13, f, by_column=True) == fam.monomial_spectrum_fast(13, f)
    with pytest.raises(ValueError):
        fam.monomial_spectrum_fast(3, default_field(6), by_column=True)


def test_inverse_value_set_gf128(gf128):
    assert fam.monomial_spectrum_fast(126, gf128).values() == {-24, -16, -8, 0, 8, 16}


@pytest.mark.parametrize("n", range(4, 11))
def test_kloosterman_spectrum(n):
    f = default_field(n)
    assert fam.expected_inverse_spectrum(f) == tables.autocorrelation_spectrum(build(FamilySpec(fam.INVERSE, f)))


@pytest.mark.parametrize("n", range(3, 12))
def test_inverse_indicator_rule(n):
    f = default_field(n)
    s = fam.expected_inverse_spectrum(f)
    lin = int(np.abs(walsh_boolean(vbf.BooleanFunction(n, gf2n.trace_table(f)[gf2n.inverse_table(f)]))).max())
    assert s.max_abs() in fam.inverse_absolute_indicator_rule(f, lin)
    if n % 2 == 0:
        assert s.max_abs() == 1 << (n // 2 + 1)


@pytest.mark.parametrize("n", [5, 7, 9])
def test_inverse_row_identity(n):
    assert fam.inverse_example_identity(default_field(n))


def test_inverse_row_identity_plus_sign_fails(gf128):
    # the variant with + 2(1 - (-1)^Tr(u^-1 v)) does not reproduce the table
    F = build(FamilySpec(fam.INVERSE, gf128))
    a = tables.act_from_ddt(F).data
    lat = walsh_table(F).data
    tr = gf2n.trace_table(gf128)
    v = gf128.elements()
    u = 3
    ui = gf2n.inv(u, gf128)
    corr = 2 * (1 - (1 - 2 * tr[gf2n.mul_table(v, ui, gf128)]))
    assert not np.array_equal(a[u, 1:], (lat[v, ui] + corr)[1:])
    assert np.array_equal(a[u, 1:], (lat[v, ui] - corr)[1:])


@pytest.mark.parametrize("n, i", [(7, 2), (7, 5), (5, 2), (5, 3)])
def test_kasami_via_gold_entrywise(n, i):
    f = default_field(n)
    closed = fam.kasami_act_via_gold(i, f)
    direct = tables.act_from_ddt(build(FamilySpec(fam.KASAMI, f, i=i)))
    assert closed == direct
    assert int(np.abs(closed.nonzero_block()).max()) == 1 << ((n + 1) // 2)
    assert fam.kasami_walsh_support_matches(i, f)


def test_kasami_precondition():
    with pytest.raises(ValueError):
        fam.kasami_act_via_gold(1, default_field(7))
    with pytest.raises(ValueError):
        fam.kasami_act_via_gold(1, default_field(9))


@pytest.mark.parametrize("n", range(3, 10))
def test_gold_quadratic_value_sets(n):
    f = default_field(n)
    for i in range(1, n):
        F = build(FamilySpec(fam.GOLD, f, i=i))
        assert fam.quadratic_kernel_check(F)
        assert tables.autocorrelation_spectrum(F).values() == fam.gold_spectrum_values(n, i)


def test_gold_value_set_cases():
    assert fam.gold_spectrum_values(6, 1) == {0, 64}
    assert fam.gold_spectrum_values(7, 2) == {-128, 0}
    assert fam.gold_spectrum_values(9, 3) == {-512, 0, 512}


def test_quadratic_negative_control():
    assert not fam.quadratic_kernel_check(build(FamilySpec(fam.KASAMI, default_field(7), i=2)))


def test_bracken_leander():
    for k in (1, 2):
        assert fam.bracken_leander_check(k)
    F = build(FamilySpec(fam.BRACKEN_LEANDER, default_field(8), k=2))
    assert tables.autocorrelation_spectrum(F).values() == {-64, 0, 64}


@pytest.mark.parametrize("n", [5, 7])
def test_crooked_pi_gold(n):
    f = default_field(n)
    for i in range(1, n):
        if math.gcd(i, n) == 1:
            P = fam.crooked_pi(build(FamilySpec(fam.GOLD, f, i=i)))
            assert P(0) == 0
            assert np.array_equal(P.table, gf2n.power_table(fam.gold_pi_exponent(n, i), f))


def test_crooked_pi_rejects_non_crooked(gf128):
    with pytest.raises(ValueError):
        fam.crooked_pi(build(FamilySpec(fam.INVERSE, gf128)))


def test_gold_inverse_indicators():
    f5 = default_field(5)
    for i in (1, 2, 3, 4):
        F = build(FamilySpec(fam.GOLD, f5, i=i))
        assert tables.absolute_indicator(vbf.inverse(F)) == 8
    f9 = default_field(9)
    assert fam.absolute_indicator_of_monomial(341, f9) == 56
    assert fam.absolute_indicator_of_monomial(409, f9) == 72


def test_welch_kasami_bounds():
    w, k = fam.welch_kasami_bounds(7, 2)
    assert w == 64 and k == 8 * 2 ** 3.5
    assert fam.welch_kasami_bounds(7, 3)[1] > k
    for n in (5, 7, 9):
        F = build(FamilySpec(fam.WELCH, default_field(n)))
        assert fam.welch_bound_holds(tables.absolute_indicator(F), n)
    F = build(FamilySpec(fam.KASAMI, default_field(7), i=2))
    assert fam.kasami_bound_holds(tables.absolute_indicator(F), 7, 2)
    with pytest.raises(ValueError):
        fam.kasami_bound_holds(8, 7, 1)


def test_five_case_summary():
    results = fam.five_case_checks(13)
    assert {r.case for r in results} == {1, 2, 3, 4, 5}
    assert all(r.passed for r in results), [r for r in results if not r.passed]
    by_key = {(r.case, r.n, r.d): r.delta for r in results}
    assert by_key[(1, 7, 19)] in (16, 32)
    assert by_key[(3, 8, 35)] <= 128
    assert by_key[(5, 6, 7)] == 32
    assert by_key[(5, 12, 21)] == 1024


def test_five_case_n6_d21_is_not_case_five():
    # d = 21 belongs to n = 12 (r = 2); over GF(2^6) it gives 2^6, not 2^5
    assert fam.absolute_indicator_of_monomial(21, default_field(6)) == 64
