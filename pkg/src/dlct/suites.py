"""Seeded verification suites behind ``dlct verify``.

Each suite returns a list of ``{"check", "pass", "details"}`` records with
JSON-ready values, in a fixed order for a given seed and size cap.
"""

from __future__ import annotations

import numpy as np

from . import catalog, equivalence, families, gf2n, properties, tables
from .families import FamilySpec, default_field
from .transforms import fwht, walsh_table
from .vbf import VBF, inverse, is_permutation, random_function, random_of_degree, random_permutation


def _record(check: str, ok: bool, **details) -> dict:
    return {"check": check, "pass": bool(ok), "details": details}


def _summarize(check: str, outcomes: list[tuple[bool, dict]]) -> dict:
    failures = [d for ok, d in outcomes if not ok]
    return _record(check, not failures, trials=len(outcomes), failures=failures[:3])


def _random_dims(rng: np.random.Generator, max_n: int) -> tuple[int, int]:
    top = max(1, min(8, max_n))
    return int(rng.integers(1, top + 1)), int(rng.integers(1, top + 1))


def identities(seed: int = 0, max_n: int = 8, trials: int = 100) -> list[dict]:
    """Three ACT routes and the sum/energy identities on random (n,m)-functions."""
    rng = np.random.default_rng(seed)
    names = ("three_path_act", "column_sum_walsh", "column_energy_walsh4", "row_sum_ddt",
             "total_sum", "row_energy_ddt2", "ddt_from_act_row", "dlct_direct")
    outcomes: dict[str, list] = {k: [] for k in names}
    for _ in range(trials):
        n, m = _random_dims(rng, max_n)
        F = random_function(n, m, rng)
        info = {"n": n, "m": m}
        d = tables.ddt(F).data
        a = tables.act_from_ddt(F).data
        w = walsh_table(F).data
        outcomes["three_path_act"].append((
            np.array_equal(a, tables.act_direct(F).data) and np.array_equal(a, tables.act_from_walsh(F).data), info))
        outcomes["column_sum_walsh"].append((np.array_equal(a.sum(axis=0), w[0] ** 2), info))
        outcomes["column_energy_walsh4"].append((
            np.array_equal((a ** 2).sum(axis=0) << n, (w ** 4).sum(axis=0)), info))
        outcomes["row_sum_ddt"].append((np.array_equal(a.sum(axis=1), d[:, 0] << m), info))
        # total is 2^m sum_w |F^-1(w)|^2; it equals 2^(n+m) exactly when F is injective
        fibres = np.bincount(F.table, minlength=1 << m)
        injective = bool(fibres.max() <= 1)
        total = int(a.sum())
        outcomes["total_sum"].append((
            total == int((fibres ** 2).sum()) << m and (total == 1 << (n + m)) == injective, info))
        outcomes["row_energy_ddt2"].append((np.array_equal((a ** 2).sum(axis=1), (d ** 2).sum(axis=1) << m), info))
        outcomes["ddt_from_act_row"].append((np.array_equal(fwht(a, axis=1), d << m), info))
        outcomes["dlct_direct"].append((tables.dlct(F) == tables.dlct_direct(F), info))
    results = [_summarize(k, v) for k, v in outcomes.items()]

    rows, cols = [], []
    for t in range(trials):
        n = int(rng.integers(2, max(2, min(8, max_n)) + 1))
        F = random_permutation(n, rng) if t % 2 == 0 else random_function(n, n, rng)
        perm = is_permutation(F)
        act = tables.act_from_ddt(F)
        info = {"n": n, "permutation": perm}
        rows.append((properties.permutation_by_row_sums(F, act) == perm, info))
        cols.append((properties.permutation_by_column_sums(F, act) == perm, info))
    results.append(_summarize("permutation_row_sums", rows))
    results.append(_summarize("permutation_column_sums", cols))
    return results


def families_suite(seed: int = 0, max_n: int = 12) -> list[dict]:
    """Closed-form spectra against the table pipeline."""
    results = []
    cap = min(max_n, 12)

    gold = []
    for n in range(3, cap + 1):
        field = default_field(n)
        for i in range(1, n):
            F = families.build(FamilySpec(families.GOLD, field, i=i))
            if n <= 10:
                spec = tables.autocorrelation_spectrum(F)
                ok = families.quadratic_kernel_check(F)
            else:
                spec = families.monomial_spectrum_fast(families.gold_exponent(i), field)
                ok = spec.values() <= {0, 1 << n, -(1 << n)} and spec.max_abs() == 1 << n
            ok = ok and spec.values() == families.gold_spectrum_values(n, i)
            gold.append((ok, {"n": n, "i": i}))
    results.append(_summarize("gold_quadratic_and_value_sets", gold))

    rng = np.random.default_rng(seed)
    quad = []
    for _ in range(100):
        n = int(rng.integers(2, min(8, max_n) + 1))
        s = int(rng.integers(0, 1 << 31))
        F = families.random_quadratic(default_field(n), s)
        quad.append((families.quadratic_kernel_check(F), {"n": n, "seed": s}))
    results.append(_summarize("random_quadratic", quad))

    kl = []
    for n in range(4, min(10, max_n) + 1):
        field = default_field(n)
        F = families.build(FamilySpec(families.INVERSE, field))
        kl.append((families.expected_inverse_spectrum(field) == tables.autocorrelation_spectrum(F), {"n": n}))
    results.append(_summarize("inverse_kloosterman_spectrum", kl))

    odd = [n for n in (5, 7, 9) if n <= max_n]
    results.append(_summarize("inverse_row_identity",
                              [(families.inverse_example_identity(default_field(n)), {"n": n}) for n in odd]))

    kas = []
    for n, i in ((7, 2), (7, 5), (11, 4)):
        if n > max_n:
            continue
        field = default_field(n)
        closed = families.kasami_act_via_gold(i, field)
        delta = int(np.abs(closed.nonzero_block()).max())
        ok = delta == 1 << ((n + 1) // 2) and families.kasami_walsh_support_matches(i, field)
        if n <= 9:
            ok = ok and np.array_equal(
                tables.act_from_ddt(families.build(FamilySpec(families.KASAMI, field, i=i))).data[1:, 1:],
                closed.data[1:, 1:])
        kas.append((ok, {"n": n, "i": i, "delta": delta}))
    results.append(_summarize("kasami_via_gold", kas))

    bl = [(families.bracken_leander_check(k), {"k": k}) for k in (1, 2, 3) if 4 * k <= max(max_n, 4)]
    results.append(_summarize("bracken_leander", bl))

    welch = []
    for n in (5, 7, 9):
        if n <= max_n:
            F = families.build(FamilySpec(families.WELCH, default_field(n)))
            delta = tables.absolute_indicator(F)
            welch.append((families.welch_bound_holds(delta, n), {"n": n, "delta": delta}))
    results.append(_summarize("welch_bound", welch))

    crooked = []
    for n in odd:
        field = default_field(n)
        for i in range(1, n):
            if np.gcd(i, n) != 1:
                continue
            F = families.build(FamilySpec(families.GOLD, field, i=i))
            pi = families.crooked_pi(F)
            ok = np.array_equal(pi.table, gf2n.power_table(families.gold_pi_exponent(n, i), field))
            crooked.append((ok, {"n": n, "i": i}))
    results.append(_summarize("crooked_pi", crooked))

    five = families.five_case_checks(min(max_n, 13))
    results.append(_summarize("five_case_summary", [
        (r.passed, {"case": r.case, "n": r.n, "d": r.d, "delta": r.delta}) for r in five]))
    return results


def catalog_suite(seed: int = 0, max_n: int = 4) -> list[dict]:
    out = []
    for e in catalog.entries():
        got = tables.autocorrelation_spectrum(e.vbf())
        out.append(_record(f"catalog_{e.index}", got == e.expected_spectrum, spectrum=got.pairs()))
    return out


def bounds_suite(seed: int = 0, max_n: int = 8) -> list[dict]:
    rng = np.random.default_rng(seed)
    cap = max(3, min(8, max_n))
    results = []

    bound = []
    for _ in range(100):
        n = int(rng.integers(1, cap + 1))
        F = random_permutation(n, rng) if rng.integers(2) else random_function(n, n, rng)
        bound.append((properties.check_bound(F), {"n": n}))
    for n in range(3, cap + 1):
        F = families.build(FamilySpec(families.INVERSE, default_field(n)))
        bound.append((properties.check_bound(F), {"n": n, "family": "inverse"}))
    results.append(_summarize("indicator_lower_bound", bound))

    apn = []
    for n in range(3, cap + 1, 2):
        field = default_field(n)
        for spec in (FamilySpec(families.GOLD, field, i=1), FamilySpec(families.INVERSE, field)):
            F = families.build(spec)
            energy = properties.row_energies(tables.act_from_ddt(F))[1:]
            apn.append((bool((energy == 1 << (2 * n + 1)).all()), {"n": n, "family": spec.label()}))
    for _ in range(20):
        n = int(rng.integers(2, cap + 1))
        F = random_function(n, n, rng)
        if int(tables.ddt(F).data[1:].max()) == 2:
            continue
        energy = properties.row_energies(tables.act_from_ddt(F))[1:]
        apn.append((bool((energy > 1 << (2 * n + 1)).any()), {"n": n, "control": True}))
    results.append(_summarize("apn_row_energy", apn))

    div = []
    for _ in range(50):
        n = int(rng.integers(3, cap + 1))
        F = random_permutation(n, rng)
        nz = tables.act_from_ddt(F).nonzero_block()
        div.append((not (nz % 8).any(), {"n": n}))
    results.append(_summarize("permutation_divisible_by_8", div))

    law = []
    for _ in range(30):
        n = int(rng.integers(3, cap + 1))
        F = random_of_degree(n, n, int(rng.integers(2, n + 1)), rng)
        r = properties.divisibility_check(F)
        law.append((r.passed, {"n": n, "degree": r.degree, "observed": r.observed_exponent, "bound": r.bound_exponent}))
    results.append(_summarize("degree_divisibility", law))

    cubic = []
    for _ in range(10):
        n = int(rng.integers(3, min(cap, 6) + 1))
        F = random_of_degree(n, n, 3, rng)
        ok, bad = properties.cubic_entries_check(F)
        cubic.append((ok, {"n": n, "counterexample": bad}))
    if max_n >= 7:
        ok, bad = properties.cubic_entries_check(families.build(FamilySpec(families.KASAMI, default_field(7), i=2)))
        cubic.append((ok, {"family": "kasami:i=2", "n": 7, "counterexample": bad}))
    results.append(_summarize("cubic_kernel_values", cubic))
    return results


def equivalence_suite(seed: int = 0, max_n: int = 6) -> list[dict]:
    rng = np.random.default_rng(seed)
    cap = max(2, min(6, max_n))
    affine, ea, pointwise = [], [], []
    for _ in range(100):
        n = int(rng.integers(2, cap + 1))
        F = random_function(n, n, rng)
        A1 = equivalence.random_invertible(n, rng)
        A2 = equivalence.random_invertible(n, rng)
        A = equivalence.random_affine(n, n, rng)
        base = tables.act_from_ddt(F)
        G = equivalence.ea_transform(F, A1, A2)
        affine.append((tables.autocorrelation_spectrum(G) == tables.autocorrelation_spectrum(F, base), {"n": n}))
        H = equivalence.ea_transform(F, A1, A2, A)
        ea.append((tables.extended_spectrum(H) == tables.extended_spectrum(F, base), {"n": n}))
        pointwise.append((bool(equivalence.ea_act_pointwise_check(F, A1, A2, A)), {"n": n}))
    results = [_summarize("affine_signed_spectrum", affine), _summarize("ea_extended_spectrum", ea),
               _summarize("ea_pointwise", pointwise)]

    inv = []
    for _ in range(50):
        n = int(rng.integers(1, max(1, min(8, max_n)) + 1))
        F = random_permutation(n, rng)
        inv.append((equivalence.inverse_act(F) == tables.act_direct(inverse(F)), {"n": n}))
    results.append(_summarize("inverse_act_fourier", inv))

    if max_n >= 7:
        field = default_field(7)
        F = families.build(FamilySpec(families.INVERSE, field))
        G = VBF(7, 7, F.table ^ np.arange(128), field)
        sf, sg = tables.autocorrelation_spectrum(F), tables.autocorrelation_spectrum(G)
        ok = (sf != sg and sf.values() == {-24, -16, -8, 0, 8, 16} and 24 in sg.values()
              and tables.extended_spectrum(F) == tables.extended_spectrum(G))
        results.append(_record("gf128_ea_counterexample", ok, inverse=sorted(sf.values()), plus_x=sorted(sg.values())))
    return results


def duals_suite(seed: int = 0, max_n: int = 9) -> list[dict]:
    results = []
    ab, apn, wit = [], [], []
    for n in (5, 7, 9):
        if n > max_n:
            continue
        field = default_field(n)
        instances = [FamilySpec(families.GOLD, field, i=1), FamilySpec(families.INVERSE, field)]
        if n == 7:
            instances.append(FamilySpec(families.KASAMI, field, i=2))
        for spec in instances:
            F = families.build(spec)
            info = {"n": n, "family": spec.label()}
            if properties.is_ab(F):
                ab.append((properties.plateaued_identity_holds(F), info))
            apn.append((properties.apn_identity_holds(F), info))
            _, _, lin = properties.apn_balanced_witness(F)
            wit.append((lin == tables.absolute_indicator(F), dict(info, linearity=lin)))
    # Gold with gcd(i, n) = 2 is plateaued but not AB
    if max_n >= 6:
        F = families.build(FamilySpec(families.GOLD, default_field(6), i=2))
        ok = not properties.is_ab(F) and properties.plateaued_profile(F).is_plateaued and properties.plateaued_identity_holds(F)
        ab.append((ok, {"n": 6, "family": "gold:i=2", "ab": False}))
    results += [_summarize("plateaued_dual_identity", ab), _summarize("apn_gamma_identity", apn),
                _summarize("apn_balanced_witness", wit)]
    return results


SUITES = {
    "identities": identities,
    "families": families_suite,
    "catalog": catalog_suite,
    "bounds": bounds_suite,
    "equivalence": equivalence_suite,
    "duals": duals_suite,
}


def run(name: str, seed: int = 0, max_n: int | None = None) -> list[dict]:
    if name == "all":
        out = []
        for key in SUITES:
            out += run(key, seed, max_n)
        return out
    if name not in SUITES:
        raise KeyError(name)
    fn = SUITES[name]
    records = fn(seed) if max_n is None else fn(seed, max_n)
    return [dict(r, check=f"{name}.{r['check']}") for r in records]
