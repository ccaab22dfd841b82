"""Arithmetic in GF(2^n), polynomial basis.

Elements are plain Python ints in ``[0, 2^n)``; bit ``i`` is the coefficient
of ``x^i``.  Scalar helpers (:func:`mul`, :func:`pow`, ...) follow the
textbook algorithms, the ``*_table`` helpers evaluate over every element at
once with numpy and are what the function builders use.
"""

from __future__ import annotations

import builtins
import math
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

MAX_DEGREE = 16


def _poly_mod(a: int, b: int) -> int:
    db = b.bit_length() - 1
    while a and a.bit_length() - 1 >= db:
        a ^= b << (a.bit_length() - 1 - db)
    return a


def is_irreducible(poly: int) -> bool:
    """Trial division by every polynomial of degree 1..deg/2."""
    deg = poly.bit_length() - 1
    if deg < 1:
        return False
    for q in range(2, 1 << (deg // 2 + 1)):
        if _poly_mod(poly, q) == 0:
            return False
    return True


@dataclass(frozen=True)
class FieldSpec:
    n: int
    modulus: int
    _trace_masks: np.ndarray = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if not 1 <= self.n <= MAX_DEGREE:
            raise ValueError(f"field degree must be in 1..{MAX_DEGREE}, got {self.n}")
        if self.modulus.bit_length() - 1 != self.n:
            raise ValueError(f"modulus {self.modulus:#x} does not have degree {self.n}")
        if not is_irreducible(self.modulus):
            raise ValueError(f"modulus {self.modulus:#x} is reducible")
        object.__setattr__(self, "_trace_masks", None)

    @property
    def order(self) -> int:
        return 1 << self.n

    def elements(self) -> np.ndarray:
        return np.arange(self.order, dtype=np.int64)

    def trace_masks(self) -> np.ndarray:
        """``t[a]`` is the bit mask with ``Tr(a*x) = parity(t[a] & x)``.

        Converts between the trace pairing and the dot product; ``t`` is a
        linear bijection since the trace form is nondegenerate.
        """
        if self._trace_masks is None:
            tr = trace_table(self)
            t = np.zeros(self.order, dtype=np.int64)
            for j in range(self.n):
                prod = mul_table(self.elements(), 1 << j, self)
                t |= tr[prod] << j
            t.setflags(write=False)
            object.__setattr__(self, "_trace_masks", t)
        return self._trace_masks

    def inverse_trace_masks(self) -> np.ndarray:
        t = self.trace_masks()
        inv = np.empty_like(t)
        inv[t] = np.arange(self.order)
        return inv

    def __str__(self):
        return f"GF(2^{self.n}) mod {self.modulus:#x}"


@lru_cache(maxsize=None)
def default_modulus(n: int) -> FieldSpec:
    """Smallest irreducible polynomial of degree ``n`` with nonzero constant term.

    The constant-term condition only matters for n = 1, where it picks x + 1
    over x.
    """
    if not 1 <= n <= MAX_DEGREE:
        raise ValueError(f"field degree must be in 1..{MAX_DEGREE}, got {n}")
    for poly in range((1 << n) | 1, 1 << (n + 1), 2):
        if is_irreducible(poly):
            return FieldSpec(n, poly)
    raise AssertionError("unreachable: irreducibles exist in every degree")


def mul(a: int, b: int, spec: FieldSpec) -> int:
    n, mod = spec.n, spec.modulus
    r = 0
    while b:
        if b & 1:
            r ^= a
        b >>= 1
        a <<= 1
        if (a >> n) & 1:
            a ^= mod
    return r


def pow(a: int, d: int, spec: FieldSpec) -> int:  # noqa: A001
    if d < 0:
        raise ValueError("negative exponent; use inv() first")
    r = 1
    while d:
        if d & 1:
            r = mul(r, a, spec)
        a = mul(a, a, spec)
        d >>= 1
    return r


def inv(a: int, spec: FieldSpec) -> int:
    """``a^(2^n - 2)``, so 0 maps to 0."""
    return pow(a, spec.order - 2, spec) if spec.n > 1 else a


def trace(a: int, spec: FieldSpec) -> int:
    s, x = 0, a
    for _ in range(spec.n):
        s ^= x
        x = mul(x, x, spec)
    if s not in (0, 1):
        raise AssertionError(f"trace left the prime field: {s}")
    return s


def kloosterman(a: int, spec: FieldSpec) -> int:
    tr = trace_table(spec)
    x = spec.elements()[1:]
    xinv = inverse_table(spec)[1:]
    ax = mul_table(x, a, spec)
    return int((1 - 2 * tr[xinv ^ ax]).sum())


def mul_table(a, b, spec: FieldSpec) -> np.ndarray:
    """Elementwise product of broadcastable integer arrays."""
    a = np.asarray(a, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    a, b = np.broadcast_arrays(a, b)
    a = a.copy()
    r = np.zeros(a.shape, dtype=np.int64)
    top = np.int64(1 << spec.n)
    mod = np.int64(spec.modulus)
    for j in range(spec.n):
        r ^= np.where((b >> j) & 1, a, 0)
        a <<= 1
        a ^= np.where(a & top, mod, 0)
    return r


def power_table(d: int, spec: FieldSpec, base=None) -> np.ndarray:
    """``x^d`` for every element ``x`` (or for the given array)."""
    x = spec.elements() if base is None else np.asarray(base, dtype=np.int64)
    r = np.ones_like(x)
    while d:
        if d & 1:
            r = mul_table(r, x, spec)
        x = mul_table(x, x, spec)
        d >>= 1
    return r


def inverse_table(spec: FieldSpec) -> np.ndarray:
    if spec.n == 1:
        return spec.elements()
    return power_table(spec.order - 2, spec)


def trace_table(spec: FieldSpec) -> np.ndarray:
    x = spec.elements()
    s = np.zeros_like(x)
    for _ in range(spec.n):
        s ^= x
        x = mul_table(x, x, spec)
    return s


def inverse_exponent(d: int, n: int) -> int:
    """``1/d`` modulo ``2^n - 1``."""
    m = (1 << n) - 1
    if math.gcd(d, m) != 1:
        raise ValueError(f"{d} is not invertible modulo 2^{n}-1")
    return builtins.pow(d, -1, m)


def kloosterman_sums(spec: FieldSpec) -> np.ndarray:
    """``K(a)`` for every a, each by direct summation over the nonzero x."""
    tr = trace_table(spec)
    x = spec.elements()[1:]
    tr_xinv = tr[inverse_table(spec)[1:]]
    out = np.empty(spec.order, dtype=np.int64)
    for a in range(spec.order):
        out[a] = (1 - 2 * (tr_xinv ^ tr[mul_table(x, a, spec)])).sum()
    return out
