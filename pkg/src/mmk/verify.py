"""Verification suite: one named check per acceptance-style property.

run_suite executes every check in a fixed order and reports pass/fail with
details.  Checks raise AssertionError on violation; the runner converts that
into a failed outcome rather than aborting the suite.
"""

from __future__ import annotations

import math
import time
from functools import lru_cache
from typing import NamedTuple

import numpy as np

from .ade import diagrams_with_coxeter, is_type_I, label_invariant
from .classification import (classify_minimal, classify_minimal_type_II,
                             classify_su2, extension_index,
                             simple_current_locality, subnet_count)
from .fusion import (fusion_from_rule, mu_index, mu_minimal_closed_form,
                     qdims, verlinde)
from .invariants import brute_force_invariants, enumerate_invariants
from .modular_data import minimal_data, statistical_phase, su2_data, weight
from .tables import table_data


class CheckOutcome(NamedTuple):
    name: str
    ok: bool
    detail: str
    seconds: float


@lru_cache(maxsize=64)
def _minimal_entries(m):
    return tuple(classify_minimal(m)), tuple(classify_minimal_type_II(m))


def _constructible(G, k):
    return not (G.kind == "D" and k < 4)


def _expected_su2_names(k):
    names = {f"A{k + 1}"}
    if k >= 4 and k % 2 == 0:
        names.add(f"D{k // 2 + 2}")
    if k == 10:
        names.add("E6")
    elif k == 16:
        names.add("E7")
    elif k == 28:
        names.add("E8")
    return names


def check_enumeration_completeness(max_m=12):
    """su2 k <= 16 and k = 28, minimal m <= max_m: exactly the A-D-E sets."""
    for k in list(range(1, 17)) + [28]:
        invs = enumerate_invariants(su2_data(k))
        names = {label_invariant(inv).name for inv in invs}
        assert len(names) == len(invs), f"k={k}: duplicate labels"
        assert names == _expected_su2_names(k), f"k={k}: got {sorted(names)}"
    for m in range(3, max_m + 1):
        invs = enumerate_invariants(minimal_data(m))
        names = {tuple(g.name for g in label_invariant(inv)) for inv in invs}
        want = {(G.name, Gp.name)
                for G in diagrams_with_coxeter(m) if _constructible(G, m - 2)
                for Gp in diagrams_with_coxeter(m + 1) if _constructible(Gp, m - 1)}
        assert names == want, f"m={m}: got {sorted(names)}, want {sorted(want)}"
    return "su2 k<=16 and k=28; minimal m<=%d" % max_m


def _closed_form_counts(e):
    m = e.param
    G, Gp = e.pair
    kinds = (G.kind, Gp.kind)
    if kinds == ("A", "A"):
        v = m * (m - 1) // 2
        return (v, v, v, v)
    if "E" in kinds:
        return {11: (30, 60, 30, 15), 12: (36, 72, 36, 18),
                29: (112, 448, 112, 28), 30: (120, 480, 120, 30),
                17: (56, 136, 80, 48), 18: (63, 153, 90, 54)}[m]
    if e.type_I:
        if m % 4 == 1:
            n = (m - 1) // 4
            return (4 * n * (n + 1), 8 * n * (n + 1), 4 * n * (n + 1),
                    2 * n * (n + 2))
        n = (m - 2) // 4
        return (2 * (n + 1) * (2 * n + 1), 4 * (n + 1) * (2 * n + 1),
                2 * (n + 1) * (2 * n + 1), (n + 2) * (2 * n + 1))
    if m % 4 == 0:
        n = m // 4
        return (2 * n * (2 * n + 1), 2 * n * (4 * n - 1), 2 * n * (4 * n - 1),
                2 * n * (4 * n - 1))
    n = (m - 3) // 4
    return ((2 * n + 1) * (2 * n + 3), (2 * n + 1) * (4 * n + 3),
            (2 * n + 1) * (4 * n + 3), (2 * n + 1) * (4 * n + 3))


def check_table_reproduction(max_m=12):
    """Tables have their row counts; every concrete m <= 30 matches closed forms."""
    for which, nrows in (("min-I", 7), ("min-II", 4), ("su2-ext", 4)):
        headers, rows = table_data(which)
        assert len(rows) == nrows, f"{which}: {len(rows)} rows"
    for m in range(3, 31):
        type_i, type_ii = _minimal_entries(m)
        for e in type_i + type_ii:
            want = _closed_form_counts(e)
            assert tuple(e.counts) == want, (m, e.pair_name, tuple(e.counts), want)
    return "min-I/min-II/su2-ext rows; closed-form counts m<=30"


def check_index_values(max_m=12):
    """The seven type I family indices at their defining instances."""
    e8val = math.sqrt(30 - 6 * math.sqrt(5)) / (2 * math.sin(math.pi / 30))
    cases = [(3, "(A2,A3)", 1.0), (5, "(A4,D4)", 2.0), (6, "(D4,A6)", 2.0),
             (11, "(A10,E6)", 3 + math.sqrt(3)), (12, "(E6,A12)", 3 + math.sqrt(3)),
             (29, "(A28,E8)", e8val), (30, "(E8,A30)", e8val)]
    for m, name, want in cases:
        type_i, _ = _minimal_entries(m)
        e = next(x for x in type_i if x.pair_name == name)
        assert abs(e.index - want) < 1e-9, (name, e.index, want)
        assert abs(extension_index(e) - want) < 1e-9
    su2_e6 = next(e for e in classify_su2(10) if e.pair_name == "E6")
    m11 = next(x for x in _minimal_entries(11)[0] if x.pair_name == "(A10,E6)")
    assert abs(su2_e6.index - m11.index) < 1e-12
    return "1, 2, 2, 3+sqrt(3), 3+sqrt(3), %.4f, %.4f" % (e8val, e8val)


def check_mu_identities(max_m=12):
    """1/S_00^2 equals the closed form and sum of qdim^2, m <= 40, rel 1e-9."""
    for m in range(3, 41):
        d = minimal_data(m)
        mu = mu_index(d)
        closed = mu_minimal_closed_form(m)
        assert abs(mu - closed) / closed < 1e-9, m
        total = float(np.sum(qdims(d) ** 2))
        assert abs(mu - total) / mu < 1e-9, m
    return "closed form and sum(qdim^2), m<=40"


def check_fusion_equivalence(max_m=12):
    """Verlinde coefficients equal the combinatorial rule exactly, m <= 20."""
    for m in range(3, 21):
        d = minimal_data(m)
        fc_v = verlinde(d)
        fc_r = fusion_from_rule(m)
        assert np.array_equal(fc_v.N, fc_r.N), f"m={m}"
    return "verlinde == rule, m<=20"


def check_phase_identity(max_m=12):
    """statistical_phase == weight mod 1 (m <= 40); simple-current parity (m <= 100)."""
    for m in range(3, 41):
        for p in range(1, m):
            for q in range(1, m + 1):
                assert (statistical_phase(m, p, q) - weight(m, p, q)) % 1 == 0, (m, p, q)
    for m in range(3, 101):
        phase, local = simple_current_locality(m)
        assert (phase == 1) == (m % 4 in (1, 2)), m
        assert local == (m % 4 in (1, 2)), m
    return "phase == h mod 1, m<=40; parity m<=100"


def check_modular_data_properties(max_m=12):
    """S/T identities at 1e-9 for su2 k <= 32 and minimal m <= 30."""
    for k in range(1, 33):
        su2_data(k).validate(1e-9)
    for m in range(3, 31):
        minimal_data(m).validate(1e-9)
    return "S symmetric/orthogonal, S^2=I, (ST)^3=S^2, S_0>0"


def check_type_I_discrimination(max_m=12):
    """is_type_I accepts exactly the seven families; blocks = ambichiral, m <= 30."""
    for m in range(3, 31):
        type_i, type_ii = _minimal_entries(m)
        for e in type_i:
            ok, blocks = is_type_I(e.invariant)
            assert ok, (m, e.pair_name)
            assert len(blocks) == e.counts.ambichiral, (m, e.pair_name)
        for e in type_ii:
            ok, _ = is_type_I(e.invariant)
            assert not ok, (m, e.pair_name)
    return "seven families accepted, D_odd/E7 rejected, m<=30"


def check_small_instance_oracle(max_m=12):
    """Brute-force support search equals the enumerator, su2 k <= 8, minimal m <= 6."""
    for k in range(1, 9):
        d = su2_data(k)
        assert enumerate_invariants(d) == brute_force_invariants(d), f"k={k}"
    for m in range(3, min(6, max_m) + 1):
        d = minimal_data(m)
        assert enumerate_invariants(d) == brute_force_invariants(d), f"m={m}"
    return "set equality, su2 k<=8, minimal m<=6"


def check_subnet_counts(max_m=12):
    """Subnet counts with their m-conditions, m <= 30; the two c = 4/5 nets."""
    for m in range(3, 31):
        type_i, _ = _minimal_entries(m)
        for e in type_i:
            s = subnet_count(e)
            kinds = {G.kind for G in e.pair}
            ranks = {G.rank for G in e.pair if G.kind == "E"}
            if kinds == {"A"}:
                assert s == 1, (m, e.pair_name)
            elif 8 in ranks:
                assert s == 3 and m in (29, 30), (m, e.pair_name)
            else:
                assert s == 2 and (m % 4 in (1, 2) or m in (11, 12)), (m, e.pair_name)
    type_i, _ = _minimal_entries(5)
    assert [e.counts.ambichiral for e in type_i] == [10, 6]
    return "s in {1,2,3} with m-conditions; c=4/5 nets have 10 and 6 sectors"


CHECKS = [
    ("enumeration-completeness", check_enumeration_completeness),
    ("table-reproduction", check_table_reproduction),
    ("index-values", check_index_values),
    ("mu-identities", check_mu_identities),
    ("fusion-equivalence", check_fusion_equivalence),
    ("phase-identity", check_phase_identity),
    ("modular-data-properties", check_modular_data_properties),
    ("type-I-discrimination", check_type_I_discrimination),
    ("small-instance-oracle", check_small_instance_oracle),
    ("subnet-counts", check_subnet_counts),
]


def run_suite(max_m: int = 12) -> list[CheckOutcome]:
    """Run all checks; never raises, collects failures as outcomes."""
    outcomes = []
    for name, fn in CHECKS:
        t0 = time.time()
        try:
            detail = fn(max_m=max_m)
            ok = True
        except Exception as exc:
            detail = f"{type(exc).__name__}: {exc}"
            ok = False
        outcomes.append(CheckOutcome(name, ok, detail, time.time() - t0))
    return outcomes
