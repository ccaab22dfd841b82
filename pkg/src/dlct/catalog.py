"""The 16 affine classes of optimal 4-bit S-boxes and their ACT spectra."""

from __future__ import annotations

from dataclasses import dataclass

from .tables import Spectrum
from .vbf import VBF

TABLES = (
    (0, 1, 2, 13, 4, 7, 15, 6, 8, 11, 12, 9, 3, 14, 10, 5),
    (0, 1, 2, 13, 4, 7, 15, 6, 8, 11, 14, 3, 5, 9, 10, 12),
    (0, 1, 2, 13, 4, 7, 15, 6, 8, 11, 14, 3, 10, 12, 5, 9),
    (0, 1, 2, 13, 4, 7, 15, 6, 8, 12, 5, 3, 10, 14, 11, 9),
    (0, 1, 2, 13, 4, 7, 15, 6, 8, 12, 9, 11, 10, 14, 5, 3),
    (0, 1, 2, 13, 4, 7, 15, 6, 8, 12, 11, 9, 10, 14, 3, 5),
    (0, 1, 2, 13, 4, 7, 15, 6, 8, 12, 11, 9, 10, 14, 5, 3),
    (0, 1, 2, 13, 4, 7, 15, 6, 8, 12, 14, 11, 10, 9, 3, 5),
    (0, 1, 2, 13, 4, 7, 15, 6, 8, 14, 9, 5, 10, 11, 3, 12),
    (0, 1, 2, 13, 4, 7, 15, 6, 8, 14, 11, 3, 5, 9, 10, 12),
    (0, 1, 2, 13, 4, 7, 15, 6, 8, 14, 11, 5, 10, 9, 3, 12),
    (0, 1, 2, 13, 4, 7, 15, 6, 8, 14, 11, 10, 5, 9, 12, 3),
    (0, 1, 2, 13, 4, 7, 15, 6, 8, 14, 11, 10, 9, 3, 12, 5),
    (0, 1, 2, 13, 4, 7, 15, 6, 8, 14, 12, 9, 5, 11, 10, 3),
    (0, 1, 2, 13, 4, 7, 15, 6, 8, 14, 12, 11, 3, 9, 5, 10),
    (0, 1, 2, 13, 4, 7, 15, 6, 8, 14, 12, 11, 9, 3, 10, 5),
)

_CLASS_A = {-8: 60, 0: 135, 8: 30}
_CLASS_B = {-16: 6, -8: 48, 0: 144, 8: 24, 16: 3}
_CLASS_C = {-16: 2, -8: 56, 0: 138, 8: 28, 16: 1}

_SPECTRUM_CLASS = {}
for _i in (3, 4, 5, 6, 7, 11, 12, 13):
    _SPECTRUM_CLASS[_i] = _CLASS_A
for _i in (0, 1, 2, 8):
    _SPECTRUM_CLASS[_i] = _CLASS_B
for _i in (9, 10, 14, 15):
    _SPECTRUM_CLASS[_i] = _CLASS_C


@dataclass(frozen=True)
class CatalogEntry:
    index: int
    table: tuple[int, ...]
    expected_spectrum: Spectrum

    def vbf(self) -> VBF:
        return VBF(4, 4, self.table)


def get(i: int) -> CatalogEntry:
    if not 0 <= i < len(TABLES):
        raise IndexError(f"catalog index must be in 0..15, got {i}")
    return CatalogEntry(i, TABLES[i], Spectrum(_SPECTRUM_CLASS[i]))


def entries() -> list[CatalogEntry]:
    return [get(i) for i in range(len(TABLES))]
