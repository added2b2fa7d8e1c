"""Command-line front end.

Exit codes: 0 success, 1 a certificate failed verification, 2 usage error or
malformed input, 3 an invariant that must always hold was found broken.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import __version__
from .certificates import search_certificate, spectrum_certificate, suite_certificate, verify
from .construct import bcfy_construct, bcfy_for_order, length_certificate
from .cycles import enumerate_cycles, is_two_connected
from .ears import analyze
from .errors import BudgetExceeded, CapExceeded, InvalidInput, InvariantBreach
from .feasible import feasibility_index
from .generate import random_two_connected
from .graph import Graph, load_graph
from .ordering import check_arrangement, check_fences, counting_audit, degree_profile, order_paths, separator
from .props import check_propositions
from .search import exact_f, uniquely_pancyclic_search
from .sidon import greedy_sidon, max_sidon_exact, singer_difference_set


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _edge(text: str) -> tuple[int, int]:
    try:
        u, v = (int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected u,v but got {text!r}") from None
    return u, v


def _emit(args, payload: str):
    if getattr(args, "out", None):
        with open(args.out, "w") as fh:
            fh.write(payload)
    else:
        sys.stdout.write(payload)


def _json(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _write_json(path: str, obj):
    with open(path, "w") as fh:
        fh.write(_json(obj))


def _load(args) -> Graph:
    try:
        return load_graph(args.inp)
    except OSError as exc:
        raise InvalidInput(f"cannot read {args.inp}: {exc.strerror}") from exc


# -- subcommands -------------------------------------------------------------------


def cmd_sidon(args) -> int:
    if args.which == "singer":
        out = singer_difference_set(args.q).to_dict()
    elif args.which == "greedy":
        out = greedy_sidon(args.n, args.convention).to_dict()
    else:
        out = max_sidon_exact(args.n, args.convention).to_dict()
    _emit(args, _json(out))
    return 0


def cmd_construct(args) -> int:
    if (args.q is None) == (args.n is None):
        raise UsageError("construct: give exactly one of --q or --n")
    cg = bcfy_construct(args.q) if args.q is not None else bcfy_for_order(args.n)
    g = cg.graph
    if args.format == "dot":
        _emit(args, g.to_dot("bcfy"))
    else:
        _emit(args, _json(cg.to_dict()))
    if args.cert:
        cert = spectrum_certificate(g, extra_witness={"chords": length_certificate(cg)})
        if sorted(cert["claims"]["spectrum"]) != list(cg.to_dict()["spectrum"]):
            raise InvariantBreach("enumerated spectrum differs from the closed form")
        _write_json(args.cert, cert)
    return 0


def cmd_cycles(args) -> int:
    g = _load(args)
    try:
        sp = enumerate_cycles(g, args.cap)
    except CapExceeded as exc:
        sp = exc.partial
    out = {
        "n": g.n,
        "edge_count": g.m,
        "spectrum": sorted(set(sp.lengths)),
        "distinct": not sp.repeated,
        **sp.to_dict(),
        "two_connected": is_two_connected(g),
    }
    _emit(args, _json(out))
    if args.cert:
        if not sp.authoritative:
            raise InvalidInput("cannot certify a partial spectrum; raise --cap")
        _write_json(args.cert, spectrum_certificate(g, args.cap))
    return 0


def cmd_analyze(args) -> int:
    g = _load(args)
    fam = analyze(g, args.edge)
    out = {
        "n": g.n,
        "edge_count": g.m,
        "decomposition": fam.decomposition.to_dict(),
        "paths": [list(p) for p in fam.paths],
        "pairs": [c.to_dict() for c in fam.classification_matrix().values()],
        "pair_counts": fam.pair_counts(),
    }
    try:
        out["feasibility"] = feasibility_index(fam, args.budget).counts()
    except BudgetExceeded as exc:
        out["feasibility"] = {"skipped": str(exc)}
    failed = []
    if args.check_props:
        checks = check_propositions(fam, budget=args.budget)
        out["propositions"] = [c.to_dict() for c in checks]
        failed = [c.name for c in checks if not c.passed]
    _emit(args, _json(out))
    if args.cert:
        _write_json(args.cert, suite_certificate(g, args.edge))
    if failed:
        raise InvariantBreach(f"checks failed: {', '.join(failed)}")
    return 0


def _ordered(args):
    g = _load(args)
    if not g.edges:
        raise InvalidInput("graph has no edges")
    fam = analyze(g, args.edge or g.edges[0])
    sep = separator(fam, args.subset)
    prof = degree_profile(fam, sep, args.beta, args.gamma)
    return g, order_paths(fam, sep, prof)


def cmd_order(args) -> int:
    g, o = _ordered(args)
    checks = check_arrangement(o) + [check_fences(o)]
    audit = counting_audit(o)
    out = {
        "n": g.n,
        **o.to_dict(),
        "checks": [c.to_dict() for c in checks],
        "audit": audit.to_dict(),
    }
    _emit(args, _json(out))
    bad = [c.name for c in checks if not c.passed]
    if audit.sigma_pairs != audit.sigma_edges or audit.sigma_pairs != sum(audit.cycle_lengths):
        bad.append("audit")
    if bad:
        raise InvariantBreach(f"ordering checks failed: {', '.join(bad)}")
    return 0


AUDIT_FIELDS = [
    "graph", "n", "s", "paths", "beta", "gamma", "intervals", "phi",
    "sigma_pair_major", "sigma_edge_major", "sigma_cycle_lengths", "lower_side", "upper_side",
]


def cmd_audit(args) -> int:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=AUDIT_FIELDS, lineterminator="\n")
    w.writeheader()
    breach = []
    for path in args.inp:
        args_one = argparse.Namespace(**{**vars(args), "inp": path})
        g, o = _ordered(args_one)
        a = counting_audit(o)
        w.writerow({
            "graph": path,
            "n": g.n,
            "s": o.fam.s,
            "paths": len(o.arrangement),
            "beta": o.profile.beta,
            "gamma": o.profile.gamma,
            "intervals": len(o.intervals),
            "phi": len(a.phi),
            "sigma_pair_major": a.sigma_pairs,
            "sigma_edge_major": a.sigma_edges,
            "sigma_cycle_lengths": sum(a.cycle_lengths),
            "lower_side": a.lower_side,
            "upper_side": f"{a.upper_side:.3f}",
        })
        if not a.sigma_pairs == a.sigma_edges == sum(a.cycle_lengths):
            breach.append(path)
    _emit(args, buf.getvalue())
    if breach:
        raise InvariantBreach(f"sigma totals disagree on {', '.join(breach)}")
    return 0


def cmd_search(args) -> int:
    if args.which == "f":
        r = exact_f(args.n, args.two_connected, args.budget)
        out = r.to_dict()
        if args.dot and r.witness is not None:
            with open(args.dot, "w") as fh:
                fh.write(r.witness.to_dot("witness"))
    else:
        out = uniquely_pancyclic_search(args.n, args.budget).to_dict()
    _emit(args, _json(out))
    if args.cert:
        _write_json(args.cert, search_certificate(args.n, args.two_connected, args.budget, args.which))
    return 0


def cmd_verify(args) -> int:
    try:
        with open(args.cert_file) as fh:
            cert = json.load(fh)
    except OSError as exc:
        raise InvalidInput(f"cannot read {args.cert_file}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise InvalidInput(f"invalid JSON: {exc}") from exc
    v = verify(cert, replay=not args.no_replay)
    _emit(args, _json(v.to_dict()))
    return 0 if v.ok else 1


def cmd_gen(args) -> int:
    g = random_two_connected(args.n, args.extra, seed=args.seed)
    _emit(args, g.to_dot("random") if args.format == "dot" else _json(g.to_dict()))
    return 0


# -- parser --------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="cyclelens", description="Graphs without repeated cycle lengths.")
    p.add_argument("--version", action="version", version=f"cyclelens {__version__}")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def out_flag(sp):
        sp.add_argument("--out", help="write output here instead of stdout")

    s = sub.add_parser("sidon", help="Singer difference sets and maximum Sidon sets")
    s.add_argument("which", choices=["singer", "max", "greedy"])
    s.add_argument("--q", type=int)
    s.add_argument("--n", type=int)
    s.add_argument("--convention", choices=["diff", "strict"], default="diff")
    out_flag(s)
    s.set_defaults(func=cmd_sidon)

    s = sub.add_parser("construct", help="chorded-cycle graph from a Singer set")
    s.add_argument("--q", type=int)
    s.add_argument("--n", type=int)
    s.add_argument("--format", choices=["json", "dot"], default="json")
    s.add_argument("--cert", help="also write a distinct-spectrum certificate")
    out_flag(s)
    s.set_defaults(func=cmd_construct)

    s = sub.add_parser("cycles", help="cycle-length spectrum of a graph")
    s.add_argument("--in", dest="inp", required=True)
    s.add_argument("--cap", type=int)
    s.add_argument("--cert")
    out_flag(s)
    s.set_defaults(func=cmd_cycles)

    s = sub.add_parser("analyze", help="ear decomposition, path family and pair types")
    s.add_argument("--in", dest="inp", required=True)
    s.add_argument("--edge", type=_edge, required=True)
    s.add_argument("--check-props", action="store_true")
    s.add_argument("--budget", type=int, help="feasible-tuple budget")
    s.add_argument("--cert")
    out_flag(s)
    s.set_defaults(func=cmd_analyze)

    for name, fn in (("order", cmd_order), ("audit", cmd_audit)):
        s = sub.add_parser(name, help="path arrangement" if name == "order" else "counting audit as CSV")
        if name == "audit":
            s.add_argument("--in", dest="inp", required=True, nargs="+")
        else:
            s.add_argument("--in", dest="inp", required=True)
        s.add_argument("--edge", type=_edge, required=name == "order", help="base edge u,v (audit: first edge of each graph if omitted)")
        s.add_argument("--beta", type=float)
        s.add_argument("--gamma", type=float)
        s.add_argument("--subset", type=lambda t: [int(x) for x in t.split(",")])
        out_flag(s)
        s.set_defaults(func=fn)

    s = sub.add_parser("search", help="exhaustive small-n search")
    s.add_argument("which", choices=["f", "upc"])
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--two-connected", action="store_true")
    s.add_argument("--budget", type=int, help="maximum states to expand")
    s.add_argument("--threads", type=int, default=1, help="accepted for compatibility; the search is sequential")
    s.add_argument("--dot", help="write the witness as DOT")
    s.add_argument("--cert")
    out_flag(s)
    s.set_defaults(func=cmd_search)

    s = sub.add_parser("verify", help="replay a certificate")
    s.add_argument("cert_file")
    s.add_argument("--no-replay", action="store_true", help="check hashes and witnesses only")
    out_flag(s)
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("gen", help="seeded random 2-connected graph")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--extra", type=int, default=2, help="ears beyond the first cycle")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--format", choices=["json", "dot"], default="json")
    out_flag(s)
    s.set_defaults(func=cmd_gen)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command == "sidon":
            need = "q" if args.which == "singer" else "n"
            if getattr(args, need) is None:
                raise UsageError(f"sidon {args.which}: --{need} is required")
        return args.func(args)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return 2
    except InvalidInput as exc:
        print(f"cyclelens: error: {exc}", file=sys.stderr)
        return 2
    except InvariantBreach as exc:
        print(f"cyclelens: invariant broken: {exc}", file=sys.stderr)
        return 3
    except BudgetExceeded as exc:
        print(f"cyclelens: budget exhausted: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
