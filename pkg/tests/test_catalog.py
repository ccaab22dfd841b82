import pytest

from dlct import catalog, tables
from dlct.vbf import is_permutation


def test_first_entry_verbatim():
    assert catalog.get(0).table == (0, 1, 2, 13, 4, 7, 15, 6, 8, 11, 12, 9, 3, 14, 10, 5)


@pytest.mark.parametrize("i", range(16))
def test_entry(i):
    e = catalog.get(i)
    F = e.vbf()
    assert is_permutation(F)
    r = tables.indicators(F)
    assert (r.differential_uniformity, r.nonlinearity) == (4, 4)
    assert e.expected_spectrum.total == 225
    assert tables.autocorrelation_spectrum(F) == e.expected_spectrum


def test_classes():
    assert catalog.get(3).expected_spectrum == {-8: 60, 0: 135, 8: 30}
    assert catalog.get(8).expected_spectrum == {-16: 6, -8: 48, 0: 144, 8: 24, 16: 3}
    assert catalog.get(15).expected_spectrum == {-16: 2, -8: 56, 0: 138, 8: 28, 16: 1}


@pytest.mark.parametrize("i", [-1, 16])
def test_out_of_range(i):
    with pytest.raises(IndexError):
        catalog.get(i)
