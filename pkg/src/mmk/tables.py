"""Classification tables rendered from computed data.

Family rows carry symbolic count formulas.  These are not hard-coded: each
formula is a polynomial fitted to the counts of actually constructed
invariants at three parameter values, verified at a fourth, and factored.
Index columns print the symbolic annotations after checking them against the
numerically computed indices.
"""

from __future__ import annotations

import csv
import io
import math

import sympy

from .ade import A, D, E
from .classification import (E8_INDEX_SYMBOL, classify_minimal,
                             classify_minimal_type_II, classify_su2)
from .errors import ClassificationError

TABLE_IDS = ("vir-mod-I", "min-I", "min-II", "su2-ext")

ANNOTATION_VALUES = {
    "1": 1.0,
    "2": 2.0,
    "3+sqrt(3)": 3 + math.sqrt(3),
    E8_INDEX_SYMBOL: math.sqrt(30 - 6 * math.sqrt(5)) / (2 * math.sin(math.pi / 30)),
}


def _fmt_diagram(G):
    return f"{G.kind}_{{{G.rank}}}"


def _fmt_pair(pair):
    return f"({_fmt_diagram(pair[0])}, {_fmt_diagram(pair[1])})"


def _fit_formula(samples, var):
    """Factored polynomial through the first three samples, checked on the rest."""
    x = sympy.Symbol(var)
    poly = sympy.interpolate(list(samples[:3]), x)
    for xx, val in samples[3:]:
        if poly.subs(x, xx) != val:
            raise ClassificationError(
                f"count samples are not quadratic in {var}: {samples}")
    return str(sympy.factor(poly))


def _entry_for(m, pair_name, type_ii=False):
    entries = classify_minimal_type_II(m) if type_ii else classify_minimal(m)
    for e in entries:
        if e.pair_name == pair_name:
            return e
    raise ClassificationError(f"no entry {pair_name} at m = {m}")


def _family_row(label, pair_text, var, instances, type_ii=False):
    """Symbolic row: fit each count column over the sampled instances."""
    samples = [(x, _entry_for(m, name, type_ii)) for x, m, name in instances]
    cols = []
    for idx in range(4):
        cols.append(_fit_formula([(x, e.counts[idx]) for x, e in samples], var))
    return [label, pair_text] + cols


def _concrete_row(m, type_ii=False):
    entries = classify_minimal_type_II(m) if type_ii else classify_minimal(m)
    e = [x for x in entries if x.pair[0].kind == "E" or x.pair[1].kind == "E"][-1]
    return [str(m), _fmt_pair(e.pair)] + [str(c) for c in e.counts]


def _table_min_I():
    headers = ["m", "(G, G')", "ab", "full", "chiral", "ambichiral"]
    rows = [
        _family_row("m", "(A_{m-1}, A_m)", "m",
                    [(m, m, f"(A{m - 1},A{m})") for m in (3, 4, 5, 6)]),
        _family_row("4n+1", "(A_{4n}, D_{2n+2})", "n",
                    [(n, 4 * n + 1, f"(A{4 * n},D{2 * n + 2})") for n in (1, 2, 3, 4)]),
        _family_row("4n+2", "(D_{2n+2}, A_{4n+2})", "n",
                    [(n, 4 * n + 2, f"(D{2 * n + 2},A{4 * n + 2})") for n in (1, 2, 3, 4)]),
        _concrete_row(11),
        _concrete_row(12),
        _concrete_row(29),
        _concrete_row(30),
    ]
    return headers, rows


def _table_min_II():
    headers = ["m", "(G, G')", "ab", "full", "chiral", "ambichiral"]
    rows = [
        _family_row("4n", "(D_{2n+1}, A_{4n})", "n",
                    [(n, 4 * n, f"(D{2 * n + 1},A{4 * n})") for n in (2, 3, 4, 5)],
                    type_ii=True),
        _family_row("4n+3", "(A_{4n+2}, D_{2n+3})", "n",
                    [(n, 4 * n + 3, f"(A{4 * n + 2},D{2 * n + 3})") for n in (1, 2, 3, 4)],
                    type_ii=True),
        _concrete_row(17, type_ii=True),
        _concrete_row(18, type_ii=True),
    ]
    return headers, rows


def _checked_annotation(entries, symbol):
    for e in entries:
        if abs(e.index - ANNOTATION_VALUES[symbol]) > 1e-9:
            raise ClassificationError(
                f"index {e.index} of {e.pair_name} does not match {symbol}")
    return symbol


def _table_su2_ext():
    headers = ["level", "extension", "description", "index"]
    a_entries = [classify_su2(k)[0] for k in (1, 2, 3, 7)]
    d_entries = [e for k in (4, 8, 12) for e in classify_su2(k)
                 if e.pair[0].kind == "D"]
    e6 = [e for e in classify_su2(10) if e.pair[0] == E(6)]
    e8 = [e for e in classify_su2(28) if e.pair[0] == E(8)]
    rows = [
        ["k", "A_{k+1}", "trivial", _checked_annotation(a_entries, "1")],
        ["4n", "D_{2n+2}", "simple current extension",
         _checked_annotation(d_entries, "2")],
        ["10", "E_6", "conformal inclusion", _checked_annotation(e6, "3+sqrt(3)")],
        ["28", "E_8", "conformal inclusion", _checked_annotation(e8, E8_INDEX_SYMBOL)],
    ]
    return headers, rows


def _fmt_label(lab):
    return f"({lab[0]},{lab[1]})" if isinstance(lab, tuple) else str(lab)


def _table_vir_mod_I():
    """The seven type I families at their smallest instances, with theta."""
    headers = ["m", "(G, G')", "blocks", "theta"]
    rows = []
    for m, name in [(3, "(A2,A3)"), (5, "(A4,D4)"), (6, "(D4,A6)"),
                    (11, "(A10,E6)"), (12, "(E6,A12)"),
                    (29, "(A28,E8)"), (30, "(E8,A30)")]:
        e = _entry_for(m, name)
        theta = "+".join(_fmt_label(lab) for lab in e.theta)
        rows.append([str(m), _fmt_pair(e.pair), str(e.counts.ambichiral), theta])
    return headers, rows


_BUILDERS = {
    "min-I": _table_min_I,
    "min-II": _table_min_II,
    "su2-ext": _table_su2_ext,
    "vir-mod-I": _table_vir_mod_I,
}


def table_data(which: str):
    """(headers, rows) for one of the table ids, all entries as strings."""
    if which not in _BUILDERS:
        raise ValueError(f"unknown table {which!r}; expected one of {TABLE_IDS}")
    return _BUILDERS[which]()


def emit_table(which: str, fmt: str = "markdown") -> str:
    """Render a table as markdown or csv text, byte-stable across runs."""
    headers, rows = table_data(which)
    if fmt == "markdown":
        lines = ["| " + " | ".join(headers) + " |",
                 "|" + "|".join(" --- " for _ in headers) + "|"]
        lines.extend("| " + " | ".join(row) + " |" for row in rows)
        return "\n".join(lines) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(headers)
        writer.writerows(rows)
        return buf.getvalue()
    raise ValueError(f"unknown table format {fmt!r}; expected markdown or csv")
