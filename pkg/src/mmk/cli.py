"""Command-line front end.

Data goes to stdout, diagnostics to stderr.  Exit codes: 0 success, 1 when
verify or invariants check finds a violation, 2 on usage or domain errors.
Output is deterministic: identical inputs produce byte-identical output,
independent of MMK_WORKERS.
"""

from __future__ import annotations

import argparse
import json
import sys

from .ade import is_type_I, label_invariant
from .classification import classify_minimal, classify_minimal_type_II, classify_su2
from .errors import LabelingError
from .fusion import minimal_fusion, verlinde
from .invariants import (enumerate_invariants, invariant_from_json,
                         invariant_to_json, is_modular_invariant)
from .modular_data import datum_to_json, minimal_data, su2_data
from .tables import TABLE_IDS, emit_table
from .verify import run_suite


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="mmk",
        description="Modular data, fusion rings, and A-D-E classified modular "
                    "invariants of SU(2)_k and the c < 1 minimal models.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_algebra(p):
        p.add_argument("--algebra", choices=("su2", "minimal"), required=True)
        p.add_argument("--level", type=int, help="level k (su2)")
        p.add_argument("--m", type=int, help="m (minimal)")

    p = sub.add_parser("modular-data", help="emit S, T, h, c for one datum")
    add_algebra(p)
    p.add_argument("--format", choices=("json",), default="json")

    p = sub.add_parser("fusion", help="fusion product of two labels")
    add_algebra(p)
    p.add_argument("--left", required=True, help="label: a (su2) or p,q (minimal)")
    p.add_argument("--right", required=True, help="label: a (su2) or p,q (minimal)")
    p.add_argument("--format", choices=("json",), default="json")

    p = sub.add_parser("invariants", help="enumerate, check, or label invariants")
    inv_sub = p.add_subparsers(dest="action", required=True)
    pe = inv_sub.add_parser("enumerate", help="all modular invariants of a datum")
    add_algebra(pe)
    pe.add_argument("--format", choices=("json",), default="json")
    pc = inv_sub.add_parser("check", help="validate a Z matrix from a JSON file")
    pc.add_argument("--input", required=True)
    pl = inv_sub.add_parser("label", help="A-D-E label of a Z matrix from a JSON file")
    pl.add_argument("--input", required=True)

    p = sub.add_parser("classify", help="local (and relatively local) extensions")
    p.add_argument("--algebra", choices=("su2", "minimal"), default="minimal")
    p.add_argument("--level", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--max-m", type=int, dest="max_m",
                   help="classify every minimal m from 3 to this value")
    p.add_argument("--format", choices=("json",), default="json")

    p = sub.add_parser("tables", help="emit a classification table")
    p.add_argument("--which", choices=TABLE_IDS, required=True)
    p.add_argument("--format", choices=("markdown", "csv"), default="markdown")

    p = sub.add_parser("verify", help="run the verification suite")
    p.add_argument("--max-m", type=int, default=12, dest="max_m")
    return parser


def _datum(args):
    if args.algebra == "su2":
        if args.level is None:
            raise ValueError("--algebra su2 requires --level")
        return su2_data(args.level)
    if args.m is None:
        raise ValueError("--algebra minimal requires --m")
    return minimal_data(args.m)


def _parse_label(text, algebra):
    parts = text.split(",")
    if algebra == "su2":
        if len(parts) != 1:
            raise ValueError(f"su2 labels are single integers, got {text!r}")
        return int(parts[0])
    if len(parts) != 2:
        raise ValueError(f"minimal labels are p,q pairs, got {text!r}")
    return int(parts[0]), int(parts[1])


def _json_label(lab):
    return list(lab) if isinstance(lab, tuple) else lab


def _emit(obj):
    sys.stdout.write(json.dumps(obj, indent=2) + "\n")


def _cmd_modular_data(args):
    _emit(datum_to_json(_datum(args)))
    return 0


def _cmd_fusion(args):
    d = _datum(args)
    left = _parse_label(args.left, args.algebra)
    right = _parse_label(args.right, args.algebra)
    if args.algebra == "minimal":
        result = minimal_fusion(args.m, left, right)
    else:
        fc = verlinde(d)
        try:
            i, j = d.index_of(left), d.index_of(right)
        except KeyError as exc:
            raise ValueError(f"label {exc.args[0]} is outside 0..{d.param}") from exc
        result = [c for c in range(d.n) if fc.N[i, j, c]]
    _emit({"left": _json_label(left), "right": _json_label(right),
           "result": [_json_label(lab) for lab in result]})
    return 0


def _label_name(inv):
    try:
        labeled = label_invariant(inv)
    except LabelingError:
        return None
    if isinstance(labeled, tuple):
        return f"({labeled[0].name},{labeled[1].name})"
    return labeled.name


def _cmd_invariants_enumerate(args):
    d = _datum(args)
    out = []
    for inv in enumerate_invariants(d):
        obj = invariant_to_json(inv)
        obj["label"] = _label_name(inv)
        out.append(obj)
    _emit(out)
    return 0


def _load_input(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise ValueError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ValueError(f"{path} is not valid JSON: {exc}") from exc


def _cmd_invariants_check(args):
    d, Z = invariant_from_json(_load_input(args.input))
    res = is_modular_invariant(d, Z)
    _emit({"ok": res.ok, "diagnostic": res.diagnostic})
    return 0 if res.ok else 1


def _cmd_invariants_label(args):
    from .invariants import ModularInvariant

    d, Z = invariant_from_json(_load_input(args.input))
    inv = ModularInvariant(d.algebra, d.param, d.labels, Z)
    type_i, blocks = is_type_I(inv)
    _emit({"label": _label_name(inv), "typeI": type_i,
           "blocks": [[_json_label(lab) for lab in blk] for blk in blocks]
                     if blocks is not None else None})
    return 0


def _entry_json(e):
    return {
        "algebra": e.algebra,
        "param": e.param,
        "pair": e.pair_name,
        "theta": [_json_label(lab) for lab in e.theta],
        "index": e.index,
        "index_symbolic": e.index_symbolic,
        "mu_extension": e.mu_extension,
        "counts": list(e.counts),
        "type_I": e.type_I,
        "subnets": e.subnets,
    }


def _cmd_classify(args):
    if args.algebra == "su2":
        if args.level is None:
            raise ValueError("--algebra su2 requires --level")
        entries = classify_su2(args.level)
    elif args.max_m is not None:
        entries = []
        for m in range(3, args.max_m + 1):
            entries.extend(classify_minimal(m))
            entries.extend(classify_minimal_type_II(m))
    else:
        if args.m is None:
            raise ValueError("classify needs --m, --max-m, or --algebra su2 --level")
        entries = classify_minimal(args.m) + classify_minimal_type_II(args.m)
    _emit([_entry_json(e) for e in entries])
    return 0


def _cmd_tables(args):
    sys.stdout.write(emit_table(args.which, args.format))
    return 0


def _cmd_verify(args):
    outcomes = run_suite(max_m=args.max_m)
    for o in outcomes:
        if o.ok:
            sys.stdout.write(f"{o.name}: PASS ({o.detail})\n")
        else:
            sys.stdout.write(f"{o.name}: FAIL ({o.detail})\n")
        sys.stderr.write(f"{o.name}: {o.seconds:.2f}s\n")
    return 0 if all(o.ok for o in outcomes) else 1


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if exc.code is not None else 2
    handlers = {
        "modular-data": _cmd_modular_data,
        "fusion": _cmd_fusion,
        "classify": _cmd_classify,
        "tables": _cmd_tables,
        "verify": _cmd_verify,
    }
    try:
        if args.command == "invariants":
            handler = {"enumerate": _cmd_invariants_enumerate,
                       "check": _cmd_invariants_check,
                       "label": _cmd_invariants_label}[args.action]
        else:
            handler = handlers[args.command]
        return handler(args)
    except (ValueError, RuntimeError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
