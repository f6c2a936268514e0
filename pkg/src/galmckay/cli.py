"""Command-line front end: tables, verification runs, and reports."""

import argparse
import json
import sys

from sympy import primefactors

from .cyclo import Cyclotomic
from .chartab import CharacterTable, dixon_schneider
from .zoo import ZooError, suzuki_group, psl2_8, agl18_normalizer, small_group
from .groups import GroupError
from .verify import (
    VerifyError, verify_target, lemma_congruence_check, cross_model_check,
    list_targets, local_model_group, target_mode,
)


_GROUP_BUILDERS = {
    "sz8": lambda: suzuki_group(1),
    "psl2_8": psl2_8,
    "agl18_normalizer": agl18_normalizer,
    "su3_2": lambda: small_group("su3_2"),
    "su3_2_ext": lambda: small_group("su3_2_ext"),
    "su3_3": lambda: small_group("su3_3"),
    "g2_2": lambda: small_group("g2_2"),
    "sl3_4": lambda: small_group("sl3_4"),
    "psl3_4": lambda: small_group("psl3_4"),
}


def serialize_table(table: CharacterTable) -> dict:
    """JSON-ready document for a character table (byte-stable order)."""
    G = table.group
    primes = primefactors(table.exponent) if table.exponent > 1 else []
    classes = []
    for c, cl in enumerate(table.classes):
        classes.append({
            "size": cl.size,
            "element_order": cl.element_order,
            "power_maps": {str(int(b)): G.power_map(c, int(b))
                           for b in primes},
        })
    irreducibles = []
    for row in table.rows:
        irreducibles.append({
            "degree": row.degree_int(),
            "values": [v.serialize() for v in row.values],
        })
    return {
        "order": G.order,
        "exponent": table.exponent,
        "classes": classes,
        "irreducibles": irreducibles,
    }


def deserialize_table(doc: dict) -> dict:
    """Inverse of serialize_table with values as Cyclotomic objects."""
    return {
        "order": doc["order"],
        "exponent": doc["exponent"],
        "classes": [dict(c) for c in doc["classes"]],
        "irreducibles": [
            {"degree": r["degree"],
             "values": [Cyclotomic.deserialize(v) for v in r["values"]]}
            for r in doc["irreducibles"]
        ],
    }


def _dump(doc, fmt, out):
    if fmt == "json":
        text = json.dumps(doc, sort_keys=True, indent=2) + "\n"
    else:
        text = _as_text(doc) + "\n"
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _as_text(doc):
    lines = []

    def walk(obj, indent=0):
        pad = "  " * indent
        if isinstance(obj, dict):
            for key in obj:
                val = obj[key]
                if isinstance(val, (dict, list)) and val:
                    lines.append("%s%s:" % (pad, key))
                    walk(val, indent + 1)
                else:
                    lines.append("%s%s: %s" % (pad, key, val))
        elif isinstance(obj, list):
            for item in obj:
                if isinstance(item, (dict, list)):
                    lines.append("%s-" % pad)
                    walk(item, indent + 1)
                else:
                    lines.append("%s- %s" % (pad, item))
        else:
            lines.append("%s%s" % (pad, obj))

    walk(doc)
    return "\n".join(lines)


def _build_parser():
    ap = argparse.ArgumentParser(
        prog="galmckay",
        description="Exact character-theoretic condition checks at desk "
                    "scale")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--format", choices=("text", "json"), default="json")
        p.add_argument("--out", default=None)

    p = sub.add_parser("chartab", help="compute a character table")
    p.add_argument("--group", required=True)
    common(p)

    p = sub.add_parser("verify", help="run a condition check")
    p.add_argument("--family", required=True)
    p.add_argument("--f", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    common(p)

    p = sub.add_parser("lemma32", help="torus-order congruence checks")
    p.add_argument("--f-min", type=int, default=1)
    p.add_argument("--f-max", type=int, default=8)
    common(p)

    p = sub.add_parser("local-model", help="table of a normalizer model")
    p.add_argument("--family", required=True)
    p.add_argument("--f", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    common(p)

    p = sub.add_parser("cross-check",
                       help="computed normalizer vs constructed model")
    p.add_argument("--family", required=True)
    p.add_argument("--f", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    common(p)

    p = sub.add_parser("list-targets", help="supported (family, f, p) grid")
    common(p)

    return ap


def run(argv) -> int:
    ap = _build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return 1 if exc.code else 0
    try:
        if args.command == "chartab":
            if args.group not in _GROUP_BUILDERS:
                sys.stderr.write(
                    "unknown group %r; known: %s\n"
                    % (args.group, ", ".join(sorted(_GROUP_BUILDERS))))
                return 1
            table = dixon_schneider(_GROUP_BUILDERS[args.group]())
            _dump(serialize_table(table), args.format, args.out)
            return 0
        if args.command == "verify":
            report = verify_target(args.family, args.f, args.p)
            _dump(report, args.format, args.out)
            if report.get("status") == "out-of-scope":
                return 1
            verdict = report["verdict"]
            ok = all(v for v in verdict.values() if v is not None)
            ok = ok and any(v is not None for v in verdict.values())
            return 0 if ok and report["status"] == "verified" else 2
        if args.command == "lemma32":
            report = lemma_congruence_check(args.f_min, args.f_max)
            _dump(report, args.format, args.out)
            return 0 if report["ok"] else 2
        if args.command == "local-model":
            if target_mode(args.family, args.f, args.p) is None:
                _dump({"status": "out-of-scope",
                       "known_targets": list_targets()},
                      args.format, args.out)
                return 1
            group = local_model_group(args.family, args.f, args.p)
            _dump(serialize_table(dixon_schneider(group)),
                  args.format, args.out)
            return 0
        if args.command == "cross-check":
            ok = cross_model_check(args.family, args.f, args.p)
            _dump({"family": args.family, "f": args.f, "p": args.p,
                   "consistent": ok}, args.format, args.out)
            return 0 if ok else 2
        if args.command == "list-targets":
            _dump({"targets": list_targets()}, args.format, args.out)
            return 0
        return 1
    except (VerifyError, ZooError, GroupError, ValueError) as exc:
        sys.stderr.write("error: %s\n" % exc)
        return 1


def main():  # pragma: no cover
    sys.exit(run(sys.argv[1:]))
