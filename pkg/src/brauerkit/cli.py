"""Command-line front end.

Every operation is exposed with JSON input and output.  Document
arguments accept inline JSON, @path to read a file, or "-" for stdin.
Exit codes: 0 for success (verdicts such as MustSplit or NoObstruction
are payload, not exit codes), 1 for domain errors, 2 for malformed
input.  The environment variable BRAUERKIT_DEGREE_LIMIT overrides the
compositum degree bound (default 16).
"""

import argparse
import json
import os
import sys

from . import brauer, csa, hondatate, numfield, serialize
from .errors import BrauerKitError, MalformedInput
from .numfield import DEFAULT_DEGREE_LIMIT


def _degree_limit(args):
    if getattr(args, "degree_limit", None):
        return args.degree_limit
    env = os.environ.get("BRAUERKIT_DEGREE_LIMIT")
    if env:
        try:
            return int(env)
        except ValueError:
            raise MalformedInput("BRAUERKIT_DEGREE_LIMIT must be an integer")
    return DEFAULT_DEGREE_LIMIT


def _read_document(arg):
    if arg == "-":
        text = sys.stdin.read()
    elif arg.startswith("@"):
        try:
            with open(arg[1:], encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise MalformedInput(f"cannot read {arg[1:]}: {exc}")
    else:
        text = arg
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedInput(f"invalid JSON: {exc}")


def _parse_primes(text):
    try:
        return [int(p) for p in text.split(",") if p.strip()]
    except ValueError:
        raise MalformedInput(f"bad prime list {text!r}")


def _parse_q(text):
    doc = _read_document(text)
    return serialize.prime_power_from_json(doc)


# ---------------------------------------------------------------------------
# handlers: each returns a JSON-able document


def _cmd_field_info(args):
    k = serialize.field_from_json(_read_document(args.field))
    doc = {"degree": k.degree}
    if k.is_concrete:
        r1, r2 = numfield.infinite_places(k)
        doc["r1"] = r1
        doc["r2"] = r2
        places = {}
        for p in _parse_primes(args.primes) if args.primes else []:
            places[str(p)] = [
                {"factor": [str(c) for c in pl.factor], "e": pl.e, "f": pl.f}
                for pl in numfield.places_above(k, p)
            ]
        if places:
            doc["places"] = places
    else:
        doc["abstract"] = True
    return doc


def _cmd_brauer_index(args):
    cls = serialize.brauer_class_from_json(_read_document(args.cls))
    return {"schur_index": brauer.schur_index(cls)}


def _cmd_brauer_add(args):
    a = serialize.brauer_class_from_json(_read_document(args.a))
    b = serialize.brauer_class_from_json(_read_document(args.b))
    return serialize.brauer_class_to_json(brauer.combine(a, b, args.sign))


def _cmd_brauer_restrict(args):
    cls = serialize.brauer_class_from_json(_read_document(args.cls))
    target = serialize.field_from_json(_read_document(args.field))
    emb = None
    if args.map:
        emb = serialize.subfield_map_from_json(_read_document(args.map))
    return serialize.brauer_class_to_json(brauer.restrict(cls, target, emb))


def _cmd_embed_decide(args):
    d = serialize.brauer_class_from_json(_read_document(args.d))
    b = serialize.brauer_class_from_json(_read_document(args.b))
    cands = csa.embed_decision(d, b, _degree_limit(args))
    return serialize.decision_to_json(cands)


def _weil_from_args(args):
    if args.weil:
        return serialize.weil_from_json(_read_document(args.weil))
    if not (args.poly and args.q):
        raise MalformedInput("provide --weil, or --poly together with --q")
    q = _parse_q(args.q)
    return hondatate.WeilNumber.make(
        serialize.poly_from_json(_read_document(args.poly)), q)


def _cmd_weil_check(args):
    if args.weil:
        doc = _read_document(args.weil)
    else:
        if not (args.poly and args.q):
            raise MalformedInput("provide --weil, or --poly together with --q")
        doc = {"poly": _read_document(args.poly), "q": _read_document(args.q)}
    if not (isinstance(doc, dict) and "poly" in doc and "q" in doc):
        raise MalformedInput("weil number needs poly and q")
    q = serialize.prime_power_from_json(doc["q"])
    poly = serialize.poly_from_json(doc["poly"])
    return {"is_weil": hondatate.is_weil_number(poly, q)}


def _cmd_weil_invariants(args):
    w = _weil_from_args(args)
    return serialize.isogeny_to_json(hondatate.isogeny_invariants(w))


def _cmd_weil_enumerate(args):
    q = _parse_q(args.q)
    weils = hondatate.enumerate_weil_polys(q, args.degree)
    return {
        "count": len(weils),
        "weil_numbers": [serialize.weil_to_json(w) for w in weils],
    }


def _cmd_weil_import(args):
    try:
        with open(args.csv, encoding="utf-8", newline="") as fh:
            weils, errors = hondatate.read_weil_csv(fh)
    except OSError as exc:
        raise MalformedInput(f"cannot read {args.csv}: {exc}")
    rows = []
    for w in weils:
        row = {"weil": serialize.weil_to_json(w)}
        try:
            inv = hondatate.isogeny_invariants(w)
            row["schur_index"] = inv.schur_index
            row["dimension"] = inv.dimension
        except BrauerKitError as exc:
            # valid Weil number whose center needs an abstract profile
            row["invariants_error"] = exc.payload()
        rows.append(row)
    return {
        "imported": rows,
        "skipped": [{"line": e.line, "message": e.message} for e in errors],
    }


def _cmd_reduce_obstruction(args):
    endo = serialize.brauer_class_from_json(_read_document(args.endo))
    d = serialize.brauer_class_from_json(_read_document(args.d))
    emb = None
    if args.map:
        emb = serialize.subfield_map_from_json(_read_document(args.map))
    w = serialize.weil_from_json(_read_document(args.weil))
    report = hondatate.reduction_obstruction(
        endo, args.ell, d, w, emb, _degree_limit(args))
    return serialize.obstruction_to_json(report)


def _cmd_reduce_qm_surface(args):
    if args.endo:
        endo = serialize.brauer_class_from_json(_read_document(args.endo))
    elif args.ram:
        from fractions import Fraction

        rationals = numfield.RATIONALS
        data = {numfield.places_above(rationals, p)[0]: Fraction(1, 2)
                for p in _parse_primes(args.ram)}
        endo = brauer.make_class(rationals, data)
    else:
        raise MalformedInput("provide --ram or --endo")
    q = _parse_q(args.q)
    report = hondatate.qm_surface_check(endo, q, _degree_limit(args))
    return serialize.qm_report_to_json(report)


# ---------------------------------------------------------------------------
# text rendering


def _render_text(doc, out):
    def walk(value, indent):
        pad = "  " * indent
        if isinstance(value, dict):
            for key in sorted(value):
                sub = value[key]
                if isinstance(sub, (dict, list)):
                    out.write(f"{pad}{key}:\n")
                    walk(sub, indent + 1)
                else:
                    out.write(f"{pad}{key}: {sub}\n")
        elif isinstance(value, list):
            for item in value:
                if isinstance(item, (dict, list)):
                    out.write(f"{pad}-\n")
                    walk(item, indent + 1)
                else:
                    out.write(f"{pad}- {item}\n")
        else:
            out.write(f"{pad}{value}\n")

    walk(doc, 0)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="brauerkit",
        description="Exact Brauer classes, division-algebra embeddings, and "
                    "reduction obstructions for abelian varieties.")
    parser.add_argument("--format", choices=("json", "text"), default="json")
    parser.add_argument("--degree-limit", type=int, default=None,
                        help="compositum degree bound (default: "
                             "BRAUERKIT_DEGREE_LIMIT or 16)")
    sub = parser.add_subparsers(dest="command", required=True)

    field = sub.add_parser("field", help="number field information")
    field_sub = field.add_subparsers(dest="action", required=True)
    info = field_sub.add_parser("info")
    info.add_argument("--field", required=True)
    info.add_argument("--primes", default="")
    info.set_defaults(handler=_cmd_field_info)

    br_cmd = sub.add_parser("brauer", help="Brauer class arithmetic")
    br_sub = br_cmd.add_subparsers(dest="action", required=True)
    idx = br_sub.add_parser("index")
    idx.add_argument("--class", dest="cls", required=True)
    idx.set_defaults(handler=_cmd_brauer_index)
    add = br_sub.add_parser("add")
    add.add_argument("--a", required=True)
    add.add_argument("--b", required=True)
    add.add_argument("--sign", type=int, choices=(1, -1), default=1)
    add.set_defaults(handler=_cmd_brauer_add)
    rst = br_sub.add_parser("restrict")
    rst.add_argument("--class", dest="cls", required=True)
    rst.add_argument("--field", required=True)
    rst.add_argument("--map", default=None)
    rst.set_defaults(handler=_cmd_brauer_restrict)

    embed = sub.add_parser("embed", help="division-algebra embedding decisions")
    embed_sub = embed.add_subparsers(dest="action", required=True)
    decide = embed_sub.add_parser("decide")
    decide.add_argument("--d", required=True)
    decide.add_argument("--b", required=True)
    decide.set_defaults(handler=_cmd_embed_decide)

    weil = sub.add_parser("weil", help="Weil numbers and isogeny invariants")
    weil_sub = weil.add_subparsers(dest="action", required=True)
    check = weil_sub.add_parser("check")
    check.add_argument("--weil", default=None)
    check.add_argument("--poly", default=None)
    check.add_argument("--q", default=None)
    check.set_defaults(handler=_cmd_weil_check)
    winv = weil_sub.add_parser("invariants")
    winv.add_argument("--weil", default=None)
    winv.add_argument("--poly", default=None)
    winv.add_argument("--q", default=None)
    winv.set_defaults(handler=_cmd_weil_invariants)
    wenum = weil_sub.add_parser("enumerate")
    wenum.add_argument("--q", required=True)
    wenum.add_argument("--degree", type=int, choices=(2, 4), default=2)
    wenum.set_defaults(handler=_cmd_weil_enumerate)
    wimp = weil_sub.add_parser("import")
    wimp.add_argument("--csv", required=True)
    wimp.set_defaults(handler=_cmd_weil_import)

    reduce_cmd = sub.add_parser("reduce", help="reduction obstruction pipeline")
    reduce_sub = reduce_cmd.add_subparsers(dest="action", required=True)
    obst = reduce_sub.add_parser("obstruction")
    obst.add_argument("--endo", required=True)
    obst.add_argument("--ell", type=int, required=True)
    obst.add_argument("--d", required=True)
    obst.add_argument("--map", default=None)
    obst.add_argument("--weil", required=True)
    obst.set_defaults(handler=_cmd_reduce_obstruction)
    qm = reduce_sub.add_parser("qm-surface")
    qm.add_argument("--ram", default=None)
    qm.add_argument("--endo", default=None)
    qm.add_argument("--q", required=True)
    qm.set_defaults(handler=_cmd_reduce_qm_surface)

    return parser


def run(argv, stdout=None, stderr=None):
    stdout = stdout if stdout is not None else sys.stdout
    stderr = stderr if stderr is not None else sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if exc.code is not None else 2
    try:
        doc = args.handler(args)
    except MalformedInput as exc:
        json.dump({"error": exc.payload()}, stderr, sort_keys=True)
        stderr.write("\n")
        return 2
    except BrauerKitError as exc:
        json.dump({"error": exc.payload()}, stderr, sort_keys=True)
        stderr.write("\n")
        return 1
    except (TypeError, ValueError, KeyError) as exc:
        # junk-typed values inside structurally plausible documents
        json.dump({"error": {"code": "MalformedInput", "message": str(exc)}},
                  stderr, sort_keys=True)
        stderr.write("\n")
        return 2
    if args.format == "json":
        json.dump(doc, stdout, sort_keys=True)
        stdout.write("\n")
    else:
        _render_text(doc, stdout)
    return 0


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
