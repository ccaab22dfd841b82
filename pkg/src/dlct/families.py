"""Power maps and quadratic functions over GF(2^n), with closed-form ACT oracles.

Everything here uses the trace pairing of the function's own field, so entry
positions (not only multisets) can be compared with the closed forms.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import gf2n, tables
from .gf2n import FieldSpec
from .tables import Spectrum
from .transforms import SignedTable, fwht, walsh_boolean, walsh_table
from .vbf import VBF, BooleanFunction, inverse, is_permutation, resolve_field

MONOMIAL = "monomial"
GOLD = "gold"
KASAMI = "kasami"
WELCH = "welch"
INVERSE = "inverse"
BRACKEN_LEANDER = "bl"
RANDOM_QUADRATIC = "quad"

KINDS = (MONOMIAL, GOLD, KASAMI, WELCH, INVERSE, BRACKEN_LEANDER, RANDOM_QUADRATIC)


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    field: FieldSpec
    i: int | None = None
    d: int | None = None
    k: int | None = None
    seed: int | None = None

    def __post_init__(self):
        n = self.field.n
        if self.kind not in KINDS:
            raise ValueError(f"unknown family {self.kind!r}")
        if self.kind in (GOLD, KASAMI) and not (self.i is not None and 0 < self.i < n):
            raise ValueError(f"{self.kind} needs 0 < i < n, got i={self.i}")
        if self.kind == WELCH and n % 2 == 0:
            raise ValueError("Welch exponent needs n odd")
        if self.kind == BRACKEN_LEANDER and (self.k is None or self.k < 1 or n != 4 * self.k):
            raise ValueError(f"Bracken-Leander needs n = 4k, got n={n}, k={self.k}")
        if self.kind == MONOMIAL and (self.d is None or self.d < 0):
            raise ValueError("monomial needs a non-negative exponent d")
        if self.kind == RANDOM_QUADRATIC and self.seed is None:
            raise ValueError("random quadratic needs a seed")

    @property
    def exponent(self) -> int | None:
        n = self.field.n
        if self.kind == MONOMIAL:
            return self.d
        if self.kind == GOLD:
            return gold_exponent(self.i)
        if self.kind == KASAMI:
            return kasami_exponent(self.i)
        if self.kind == WELCH:
            return (1 << ((n - 1) // 2)) + 3
        if self.kind == INVERSE:
            return (1 << n) - 2
        if self.kind == BRACKEN_LEANDER:
            q = 1 << self.k
            return q * q + q + 1
        return None

    def label(self) -> str:
        params = {GOLD: "i", KASAMI: "i", MONOMIAL: "d", BRACKEN_LEANDER: "k", RANDOM_QUADRATIC: "seed"}
        key = params.get(self.kind)
        return self.kind if key is None else f"{self.kind}:{key}={getattr(self, key)}"


def gold_exponent(i: int) -> int:
    return (1 << i) + 1


def kasami_exponent(i: int) -> int:
    return (1 << (2 * i)) - (1 << i) + 1


def parse_family(text: str, n: int, modulus: int | None = None) -> FamilySpec:
    """``gold:i=2``, ``kasami:i=2``, ``inverse``, ``welch``, ``bl:k=2``,
    ``quad:seed=S`` or ``monomial:d=D``."""
    field = default_field(n) if modulus is None else FieldSpec(n, modulus)
    name, _, rest = text.partition(":")
    name = name.strip().lower()
    aliases = {"bracken_leander": BRACKEN_LEANDER, "random_quadratic": RANDOM_QUADRATIC, "power": MONOMIAL}
    name = aliases.get(name, name)
    params = {}
    for part in filter(None, rest.split(",")):
        key, eq, val = part.partition("=")
        if not eq:
            raise ValueError(f"malformed family parameter {part!r}")
        params[key.strip()] = int(val, 0)
    allowed = {GOLD: {"i"}, KASAMI: {"i"}, MONOMIAL: {"d"}, BRACKEN_LEANDER: {"k"},
               RANDOM_QUADRATIC: {"seed"}, WELCH: set(), INVERSE: set()}
    if name not in allowed:
        raise ValueError(f"unknown family {name!r}")
    extra = set(params) - allowed[name]
    if extra:
        raise ValueError(f"unexpected parameters for {name}: {sorted(extra)}")
    return FamilySpec(name, field, **params)


def default_field(n: int) -> FieldSpec:
    return gf2n.default_modulus(n)


def monomial(d: int, field: FieldSpec) -> VBF:
    return VBF(field.n, field.n, gf2n.power_table(d, field), field)


def random_quadratic(field: FieldSpec, seed: int) -> VBF:
    """``sum_{i<j} a_ij x^(2^i + 2^j)`` with seeded random coefficients."""
    rng = np.random.default_rng(seed)
    n = field.n
    frob = [gf2n.power_table(1 << i, field) for i in range(n)]
    out = np.zeros(field.order, dtype=np.int64)
    for i in range(n):
        for j in range(i + 1, n):
            a = int(rng.integers(0, field.order))
            if a:
                out ^= gf2n.mul_table(gf2n.mul_table(frob[i], frob[j], field), a, field)
    return VBF(n, n, out, field)


def build(spec: FamilySpec) -> VBF:
    if spec.kind == INVERSE:
        return VBF(spec.field.n, spec.field.n, gf2n.inverse_table(spec.field), spec.field)
    if spec.kind == RANDOM_QUADRATIC:
        return random_quadratic(spec.field, spec.seed)
    return monomial(spec.exponent, spec.field)


def _act_row_one(d: int, field: FieldSpec) -> np.ndarray:
    """``AC(1, v)`` for every v under the trace pairing."""
    x = field.elements()
    p = gf2n.power_table(d, field)
    row = np.bincount(p ^ p[x ^ 1], minlength=field.order)
    return fwht(row)[field.trace_masks()]


def _act_column_one(d: int, field: FieldSpec) -> np.ndarray:
    """``AC(u, 1)``: autocorrelation of ``Tr(x^d)`` via its squared Walsh spectrum."""
    f = BooleanFunction(field.n, gf2n.trace_table(field)[gf2n.power_table(d, field)])
    w = fwht(f.signs())
    return fwht(w * w) >> field.n


def monomial_spectrum_fast(d: int, field: FieldSpec, full: bool = False, by_column: bool = False) -> Spectrum:
    """ACT multiset of ``x^d`` from a single row (or column) of the table.

    Every row u != 0 is a permutation of row 1 (``AC(u,v) = AC(1, v u^d)``),
    so row 1 carries the distinct values.  ``full=True`` rebuilds the whole
    multiset by walking all rows through that relation; ``by_column`` uses
    ``AC(u, 1)`` instead, valid when ``gcd(d, 2^n - 1) = 1``.
    """
    if by_column:
        if math.gcd(d, field.order - 1) != 1:
            raise ValueError("column reduction needs gcd(d, 2^n - 1) = 1")
        return Spectrum.from_values(_act_column_one(d, field)[1:])
    row = _act_row_one(d, field)
    if not full:
        return Spectrum.from_values(row[1:])
    nonzero = field.elements()[1:]
    counts: dict[int, int] = {}
    for u in range(1, field.order):
        ud = gf2n.pow(u, d, field)
        vals, cnt = np.unique(row[gf2n.mul_table(nonzero, ud, field)], return_counts=True)
        for val, c in zip(vals.tolist(), cnt.tolist()):
            counts[val] = counts.get(val, 0) + c
    return Spectrum(counts)


def expected_inverse_spectrum(field: FieldSpec) -> Spectrum:
    """``{K(v) - 1 + 2 (-1)^Tr(v) : v != 0}``, each value repeated over the 2^n - 1 rows."""
    k = gf2n.kloosterman_sums(field)[1:]
    tr = gf2n.trace_table(field)[1:]
    return Spectrum.from_values(k - 1 + 2 * (1 - 2 * tr)).scaled(field.order - 1)


def inverse_absolute_indicator_rule(field: FieldSpec, linearity: int) -> set[int]:
    """Admissible absolute indicators of the inverse map given its linearity."""
    n = field.n
    if n % 2 == 0:
        return {1 << (n // 2 + 1)}
    if linearity % 8 == 0:
        return {linearity}
    return {linearity - 4, linearity + 4}


def inverse_example_identity(field: FieldSpec) -> bool:
    """Row-by-row ACT of the inverse map (n odd) from the component ``Tr(u^-1 x^-1)``.

    Holds as ``AC(u,v) = W_{F_{u^-1}}(v) - 2 (1 - (-1)^Tr(u^-1 v))``; the
    correction term comes from the two points where ``gamma_u`` and
    ``1 + F_{u^-1}`` differ.
    """
    if field.n % 2 == 0:
        raise ValueError("identity is stated for n odd")
    F = build(FamilySpec(INVERSE, field))
    a = tables.act_from_ddt(F).data
    lat = walsh_table(F).data
    tr = gf2n.trace_table(field)
    inv = gf2n.inverse_table(field)
    v = field.elements()
    for u in range(1, field.order):
        ui = int(inv[u])
        corr = 2 * (1 - (1 - 2 * tr[gf2n.mul_table(v, ui, field)]))
        pred = lat[v, ui] - corr
        if not np.array_equal(a[u, 1:], pred[1:]):
            return False
    return True


def _check_kasami_params(i: int, n: int) -> None:
    if n % 2 == 0 or n % 3 == 0 or (3 * i) % n not in (1, n - 1):
        raise ValueError(f"Kasami/Gold relation needs n odd, 3 not dividing n, 3i = +-1 mod n (n={n}, i={i})")


def kasami_act_via_gold(i: int, field: FieldSpec) -> SignedTable:
    """``AC_{K_i}(u,v) = -sum_x (-1)^Tr(u v^(1/d) x + x^(2^i+1))`` for nonzero u, v."""
    n = field.n
    _check_kasami_params(i, n)
    e = gf2n.inverse_exponent(kasami_exponent(i), n)
    gold = BooleanFunction(n, gf2n.trace_table(field)[gf2n.power_table(gold_exponent(i), field)])
    wg = walsh_boolean(gold, field)
    ve = gf2n.power_table(e, field)
    out = np.full((field.order, field.order), field.order, dtype=np.int64)
    u = field.elements()
    for v in range(1, field.order):
        out[1:, v] = -wg[gf2n.mul_table(u[1:], int(ve[v]), field)]
    return SignedTable(n, n, "ACT", out, "trace")


def kasami_walsh_support_matches(i: int, field: FieldSpec) -> bool:
    """Walsh support of ``Tr(x^d)`` is ``{x : Tr(x^(2^i+1)) = 1}``."""
    _check_kasami_params(i, field.n)
    tr = gf2n.trace_table(field)
    f = BooleanFunction(field.n, tr[gf2n.power_table(kasami_exponent(i), field)])
    support = walsh_boolean(f, field) != 0
    return bool(np.array_equal(support, tr[gf2n.power_table(gold_exponent(i), field)] == 1))


def gold_spectrum_values(n: int, i: int) -> set[int]:
    """Value set of the Gold ACT over nonzero (u, v), by the gcd(i, n) case split."""
    g = math.gcd(i, n)
    n_prime = n // g
    full = 1 << n
    if n_prime % 2 == 0:
        return {0, full}
    if g == 1:
        return {-full, 0}
    return {-full, 0, full}


def quadratic_kernel_check(F: VBF, act_table: SignedTable | None = None) -> bool:
    """Nonzero-position ACT values lie in {0, +-2^n} and the absolute indicator is 2^n."""
    a = tables.act_from_ddt(F) if act_table is None else act_table
    block = a.nonzero_block()
    full = 1 << F.n
    return bool(np.isin(block, (0, full, -full)).all()) and int(np.abs(block).max()) == full


def bracken_leander_check(k: int, modulus: int | None = None) -> bool:
    """ACT values in {-q^3, 0, q^3} with absolute indicator q^3, q = 2^k."""
    n = 4 * k
    if k < 1 or n > gf2n.MAX_DEGREE:
        raise ValueError("need 1 <= k and 4k <= 16")
    field = default_field(n) if modulus is None else FieldSpec(n, modulus)
    spec = FamilySpec(BRACKEN_LEANDER, field, k=k)
    q3 = 1 << (3 * k)
    if n <= 12:
        values = tables.autocorrelation_spectrum(build(spec)).values()
    else:
        values = monomial_spectrum_fast(spec.exponent, field).values()
    return values <= {-q3, 0, q3} and max(abs(v) for v in values) == q3


def crooked_pi(F: VBF, convention: str | None = None, validate: bool = True) -> VBF:
    """The permutation pi with ``Im(D_u F) = complement of <pi(u)>^perp``.

    With ``validate`` the identity ``AC_{F^-1}(u,v) = -W_pi(v,u)`` is checked
    on every nonzero (u, v).
    """
    if not is_permutation(F) or F.n % 2 == 0:
        raise ValueError("need a permutation of odd dimension")
    field = resolve_field(F, convention)
    n = F.n
    x = np.arange(1 << n)
    full = 1 << n
    pi = np.zeros(full, dtype=np.int64)
    for u in range(1, full):
        img = np.zeros(full, dtype=np.int64)
        img[F.table ^ F.table[x ^ u]] = 1
        spec = fwht(1 - 2 * img)
        hits = np.flatnonzero(spec == full)
        if hits.size != 1 or np.count_nonzero(spec) != 1 or hits[0] == 0:
            raise ValueError(f"image of D_{u}F is not a hyperplane complement; F is not crooked")
        pi[u] = hits[0]
    if field is not None:
        pi = field.inverse_trace_masks()[pi]
    P = VBF(n, n, pi, field)
    if not is_permutation(P):
        raise AssertionError("pi is not a permutation")
    if validate:
        conv = "dot" if field is None else "trace"
        ac_inv = tables.act_from_ddt(inverse(F), conv).data
        w = walsh_table(P, conv).data
        if not np.array_equal(ac_inv[1:, 1:], -w.T[1:, 1:]):
            raise AssertionError("AC of the inverse does not match -W_pi(v, u)")
    return P


def gold_pi_exponent(n: int, i: int) -> int:
    return (1 << n) - (1 << i) - 2


def welch_kasami_bounds(n: int, i: int | None = None) -> tuple[float | None, float | None]:
    """``2^((n+5)/2)`` for Welch (n odd) and ``(4^i - 2^(i+1)) 2^(n/2)`` for Kasami."""
    welch = 2.0 ** ((n + 5) / 2) if n % 2 else None
    kasami = ((1 << (2 * i)) - (1 << (i + 1))) * 2.0 ** (n / 2) if i is not None else None
    return welch, kasami


def welch_bound_holds(delta: int, n: int) -> bool:
    if n % 2 == 0:
        raise ValueError("Welch bound is stated for n odd")
    return delta <= 1 << ((n + 5) // 2)


def kasami_bound_holds(delta: int, n: int, i: int) -> bool:
    """``Delta^2 <= (4^i - 2^(i+1))^2 2^n``; meaningful for i >= 2."""
    if i < 2:
        raise ValueError("Weil-type Kasami bound needs i >= 2")
    c = (1 << (2 * i)) - (1 << (i + 1))
    return delta * delta <= c * c * (1 << n)


def absolute_indicator_of_monomial(d: int, field: FieldSpec) -> int:
    return monomial_spectrum_fast(d, field).max_abs()


@dataclass(frozen=True)
class CaseResult:
    case: int
    n: int
    d: int
    delta: int
    passed: bool


def five_case_instances(max_n: int = 13) -> list[tuple[int, int, int]]:
    """``(case, n, d)`` for every instance of the five monomial cases with n <= max_n."""
    out = []
    # n = 3 gives d = 7 = 2^3 - 1, a constant on the nonzero elements
    out += [(1, n, (1 << ((n + 1) // 2)) + 3) for n in range(5, max_n + 1, 2)]
    out += [(2, n, kasami_exponent(i)) for n in range(5, max_n + 1, 2) if n % 3
            for i in range(1, n) if (3 * i) % n in (1, n - 1)]
    out += [(3, 2 * m, (1 << (m + 1)) + 3) for m in range(2, max_n // 2 + 1)]
    out += [(4, 2 * m, (1 << m) + (1 << ((m + 1) // 2)) + 1) for m in range(1, max_n // 2 + 1, 2)]
    out += [(5, 6 * r, (1 << (2 * r)) + (1 << r) + 1) for r in range(1, max_n // 6 + 1)]
    return out


def five_case_holds(case: int, n: int, delta: int) -> bool:
    if case == 1:
        return delta in (1 << ((n + 1) // 2), 1 << ((n + 3) // 2))
    if case == 2:
        return delta == 1 << ((n + 1) // 2)
    if case in (3, 4):
        # delta <= 2^(3m/2 + 1) with n = 2m, squared to stay integral
        return delta * delta <= 1 << (3 * (n // 2) + 2)
    if case == 5:
        return delta == 1 << (5 * (n // 6))
    raise ValueError(f"unknown case {case}")


def five_case_checks(max_n: int = 13) -> list[CaseResult]:
    results = []
    for case, n, d in five_case_instances(max_n):
        delta = absolute_indicator_of_monomial(d, default_field(n))
        results.append(CaseResult(case, n, d, delta, five_case_holds(case, n, delta)))
    return results
