"""Command-line front end.

Exit status: 0 when the checked property holds (or a command simply
succeeds), 3 when a check fails with a witness, 1 on input errors and
2 when a size cap is exceeded.
"""

import argparse
import json
import sys

from .catalog import ATOMS, CatalogError, build, size_of, Atom
from .core import DigraphError
from .enumeration import CapExceeded, classify_cross_check, enumerate_all
from .formats import FormatError, read_shd, to_dot, to_json, to_shd
from .homo import (check_homogeneous, check_k_homogeneous, check_k_set_homogeneous,
                   check_set_homogeneous)
from .infinite import (SampleError, config_census, non_2hom_witness, sample_rn,
                       sample_t4)
from .iso import automorphism_group
from .perm import cycle_notation, orbital_decomposition, orbits_on_points

EXIT_OK, EXIT_ERROR, EXIT_CAP, EXIT_FAILS = 0, 1, 2, 3
MAX_SAMPLE = 60


class UsageError(Exception):
    pass


class CapError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def load_input(source):
    """``expr:<expression>`` or a path to an SHD file."""
    if source.startswith("expr:"):
        return build(source[5:])
    try:
        return read_shd(source)
    except OSError as exc:
        raise UsageError(f"cannot read {source}: {exc.strerror}") from None


def _emit(text, path, out):
    if path is None:
        out.write(text)
    else:
        try:
            with open(path, "w", encoding="ascii", newline="\n") as fh:
                fh.write(text)
        except OSError as exc:
            raise UsageError(f"cannot write {path}: {exc.strerror}") from None


# --- subcommands -------------------------------------------------------------------

def cmd_catalog(args, out):
    for key, (name, arity, _) in ATOMS.items():
        if arity == 0:
            out.write(f"{name:<6} {'-':<9} n={size_of(Atom(key))}\n")
        else:
            params = ",".join("mn"[:arity]) if arity > 1 else "n"
            size = {"KMN": "m+n", "J": "3n"}.get(key, "n")
            out.write(f"{name:<6} {'(' + params + ')':<9} n={size}\n")
    return EXIT_OK


def cmd_build(args, out):
    _emit(to_shd(build(args.expr)), args.output, out)
    return EXIT_OK


def cmd_aut(args, out):
    d = load_input(args.input)
    G = automorphism_group(d)
    out.write(f"order {G.order}\n")
    for g in G.generators:
        out.write(f"generator {cycle_notation(g)}\n")
    orbits = orbits_on_points(G)
    out.write(f"vertex orbits {len(orbits)}: " + " ".join("{" + ",".join(map(str, o)) + "}" for o in orbits) + "\n")
    orb = orbital_decomposition(G)
    out.write(f"orbitals {orb.count}\n")
    for k in range(orb.count):
        pairs = orb.orbital(k)
        i, j = pairs[0]
        out.write(f"  {k}: size {len(pairs)} state {int(d.rows[i][j])} paired {orb.pairing[k]}"
                  f"{' (self-paired)' if orb.self_paired(k) else ''}\n")
    return EXIT_OK


def cmd_check(args, out):
    d = load_input(args.input)
    if args.kind == "set-hom":
        v = check_set_homogeneous(d)
    elif args.kind == "hom":
        max_k = d.n if args.max_k is None else args.max_k
        if not 0 <= max_k <= d.n:
            raise UsageError(f"--max-k must lie in 0..{d.n}")
        v = check_homogeneous(d, max_k)
    else:
        if args.k is None:
            raise UsageError(f"check {args.kind} needs -k")
        if not 0 <= args.k <= d.n:
            raise UsageError(f"-k must lie in 0..{d.n}")
        fn = check_k_homogeneous if args.kind == "k-hom" else check_k_set_homogeneous
        v = fn(d, args.k)
    if args.json:
        doc = {"holds": v.holds, "predicate": v.predicate, "k": v.k,
               "witness": v.witness.as_dict() if v.witness else None}
        out.write(json.dumps(doc) + "\n")
    else:
        out.write(v.describe() + "\n")
    return EXIT_OK if v.holds else EXIT_FAILS


def cmd_enumerate(args, out):
    try:
        if args.cross_check:
            report = classify_cross_check(args.max_n)
            if args.json:
                out.write(json.dumps(report.as_dict()) + "\n")
            else:
                out.write("\n".join(report.lines()) + "\n")
            return EXIT_OK if report.ok else EXIT_FAILS
        classes = enumerate_all(args.max_n)
    except CapExceeded as exc:
        raise CapError(str(exc)) from None
    if args.json:
        out.write(json.dumps({str(n): len(c) for n, c in classes.items()}) + "\n")
    else:
        for n, codes in classes.items():
            out.write(f"n={n}: {len(codes)} classes\n")
    return EXIT_OK


def cmd_infinite(args, out):
    model = args.model.lower()
    if args.size > MAX_SAMPLE:
        raise CapError(f"--size is capped at {MAX_SAMPLE}")
    if model == "t4":
        sample = sample_t4(args.size, args.seed)
    elif model.startswith("r") and model[1:].isdigit():
        sample = sample_rn(int(model[1:]), args.size, args.seed)
    else:
        raise UsageError(f"unknown model {args.model!r} (use t4 or rN)")
    doc = {"model": model, "size": args.size, "seed": args.seed,
           "arcs": len(sample.digraph.arcs())}
    if args.census:
        doc["census"] = {str(k): v for k, v in config_census(sample, args.reverse).items()}
    if args.witness:
        w = non_2hom_witness(sample)
        doc["witness"] = None if w is None else {"x": w.x, "z": w.z, "y": w.y,
                                                 "certificate": w.certificate}
    if args.json:
        out.write(json.dumps(doc) + "\n")
        return EXIT_OK
    out.write(f"{model} sample: {args.size} points, seed {args.seed}, {doc['arcs']} arcs\n")
    if args.census:
        out.write(" ".join(f"L{k}={v}" if k != "Other" else f"Other={v}"
                           for k, v in doc["census"].items()) + "\n")
    if args.witness:
        w = doc["witness"]
        out.write("witness: none\n" if w is None else
                  f"witness: {w['x']} -> {w['z']} -> {w['y']}; {w['certificate']}\n")
    return EXIT_OK


def cmd_export(args, out):
    d = load_input(args.input)
    text = to_dot(d) if args.format == "dot" else to_json(d)
    _emit(text, args.output, out)
    return EXIT_OK


def make_parser():
    p = _Parser(prog="sethom", description="Set-homogeneous s-digraph toolkit")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("catalog", help="list named digraphs")
    c.add_argument("action", choices=["list"])
    c.set_defaults(func=cmd_catalog)

    b = sub.add_parser("build", help="evaluate an expression to SHD")
    b.add_argument("expr")
    b.add_argument("-o", "--output")
    b.set_defaults(func=cmd_build)

    a = sub.add_parser("aut", help="automorphism group summary")
    a.add_argument("input")
    a.set_defaults(func=cmd_aut)

    ch = sub.add_parser("check", help="homogeneity predicates")
    ch.add_argument("kind", choices=["set-hom", "hom", "k-hom", "k-set-hom"])
    ch.add_argument("input")
    ch.add_argument("-k", type=int)
    ch.add_argument("--max-k", type=int)
    ch.add_argument("--json", action="store_true")
    ch.set_defaults(func=cmd_check)

    e = sub.add_parser("enumerate", help="isomorph-free generation")
    e.add_argument("--max-n", type=int, required=True)
    e.add_argument("--cross-check", action="store_true")
    e.add_argument("--json", action="store_true")
    e.set_defaults(func=cmd_enumerate)

    i = sub.add_parser("infinite", help="samples of T(4) and R_n")
    i.add_argument("model", help="t4, or rN for N classes (r2, r3, ...)")
    i.add_argument("--size", type=int, default=40)
    i.add_argument("--seed", type=int, default=0)
    i.add_argument("--census", action="store_true")
    i.add_argument("--witness", action="store_true")
    i.add_argument("--reverse", action="store_true", help="flip the orientation of unrelated pairs")
    i.add_argument("--json", action="store_true")
    i.set_defaults(func=cmd_infinite)

    x = sub.add_parser("export", help="DOT or JSON export")
    x.add_argument("--format", choices=["dot", "json"], required=True)
    x.add_argument("input")
    x.add_argument("-o", "--output")
    x.set_defaults(func=cmd_export)
    return p


def run(argv, out=None, err=None):
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    try:
        args = make_parser().parse_args(argv)
        return args.func(args, out)
    except CapError as exc:
        err.write(f"sethom: {exc}\n")
        return EXIT_CAP
    except (UsageError, CatalogError, DigraphError, FormatError, SampleError) as exc:
        err.write(f"sethom: {exc}\n")
        return EXIT_ERROR


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
