import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dlct import gf2n
from dlct.gf2n import FieldSpec, default_modulus


@pytest.mark.parametrize("n, modulus", [
    (1, 0b11), (2, 0b111), (3, 0b1011), (4, 0x13), (5, 0x25), (6, 0x43), (7, 0x83), (8, 0x11B),
])
def test_default_modulus_is_smallest_irreducible(n, modulus):
    assert default_modulus(n).modulus == modulus
    # nothing smaller of the same degree is irreducible
    assert not any(gf2n.is_irreducible(p) for p in range((1 << n) | 1, modulus, 2))


@pytest.mark.parametrize("n", [0, 17])
def test_degree_out_of_range(n):
    with pytest.raises(ValueError):
        default_modulus(n)


def test_reducible_modulus_rejected():
    with pytest.raises(ValueError, match="reducible"):
        FieldSpec(4, 0b10101)  # (x^2+x+1)^2
    with pytest.raises(ValueError):
        FieldSpec(3, 0x13)


def test_small_products():
    f = default_modulus(3)
    assert gf2n.mul(3, 3, f) == 5
    assert gf2n.mul(6, 0, f) == 0
    assert gf2n.mul(6, 1, f) == 6
    assert gf2n.pow(0, 0, f) == 1
    assert gf2n.pow(0, 5, f) == 0


@pytest.mark.parametrize("n", [1, 2, 5, 8, 11])
def test_inverse_and_group_order(n):
    f = default_modulus(n)
    x = f.elements()[1:]
    inv = gf2n.inverse_table(f)
    assert (gf2n.mul_table(x, inv[1:], f) == 1).all()
    assert inv[0] == 0
    assert (gf2n.power_table(f.order - 1, f)[1:] == 1).all()


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 10), st.data())
def test_vector_and_scalar_agree(n, data):
    f = default_modulus(n)
    a = data.draw(st.integers(0, f.order - 1))
    b = data.draw(st.integers(0, f.order - 1))
    d = data.draw(st.integers(0, 3 * f.order))
    assert int(gf2n.mul_table(np.array([a]), b, f)[0]) == gf2n.mul(a, b, f)
    assert int(gf2n.power_table(d, f)[a]) == gf2n.pow(a, d, f)
    # field axioms spot check
    c = data.draw(st.integers(0, f.order - 1))
    assert gf2n.mul(a, b ^ c, f) == gf2n.mul(a, b, f) ^ gf2n.mul(a, c, f)


@pytest.mark.parametrize("n", [3, 6, 9])
def test_trace_is_linear_and_balanced(n):
    f = default_modulus(n)
    tr = gf2n.trace_table(f)
    x = f.elements()
    assert 2 * int(tr.sum()) == f.order
    for y in (1, 3, f.order - 1):
        assert (tr[x ^ y] == tr[x] ^ tr[y]).all()
    # Frobenius invariance
    assert (tr[gf2n.power_table(2, f)] == tr).all()


@pytest.mark.parametrize("n", [4, 7, 8])
def test_trace_masks_convert_pairings(n):
    f = default_modulus(n)
    t = f.trace_masks()
    tr = gf2n.trace_table(f)
    x = f.elements()
    for a in (1, 5, f.order - 2):
        dot = np.bitwise_count(x & int(t[a])) & 1
        assert (dot == tr[gf2n.mul_table(x, a, f)]).all()
    assert (f.inverse_trace_masks()[t] == x).all()


def test_kloosterman_vectorized_matches_scalar():
    f = default_modulus(6)
    k = gf2n.kloosterman_sums(f)
    assert [gf2n.kloosterman(a, f) for a in range(f.order)] == k.tolist()
    # K(0) = -1 with the sum over nonzero x
    assert k[0] == -1
    # values are = -1 (mod 4) in this normalization
    assert ((k + 1) % 4 == 0).all()


def test_inverse_exponent():
    assert gf2n.inverse_exponent(3, 5) * 3 % 31 == 1
    with pytest.raises(ValueError):
        gf2n.inverse_exponent(3, 4)  # gcd(3, 15) = 3
