"""Command-line entry point: verify, query, eliminate, export.

Exit status: 0 when everything passes, 1 when a check fails or a pair is not
eliminated, 2 for usage errors (bad flags, unparsable descriptors, groups
outside a stated range).
"""

from __future__ import annotations

import argparse
import configparser
import json
import sys

from .groups import EVEN_ORTHOGONAL, LINEAR, DomainError, parse_descriptor, p_exponent, phi_of_index
from .primegraph import CHAR, classify_large, index_graph, max_coclique_exact, t_anchored, t_of, zeta_table
from .spectra import big_spectral_element, max_spectral_bound
from .tables import RangeError, table1, table2, table2_applies, zeta_floor
from .verify import CHECKS, DEFAULT_QS, SIGNED_FAMILIES, GridSpec, run_check
from .zsigmondy import LemmaViolation, eta, nu_eps

QUERIES = ("t", "cocliques", "zeta", "graph", "bigk", "pexp")


class UsageError(Exception):
    pass


def _dump(obj, out=None):
    text = json.dumps(obj, indent=2, sort_keys=False, default=str)
    if out:
        with open(out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _descriptor(text):
    try:
        return parse_descriptor(text)
    except DomainError as e:
        raise UsageError(str(e)) from e


# verify

def _int_list(text):
    try:
        return tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError as e:
        raise UsageError(f"expected a comma-separated list of integers, got {text!r}") from e


def _families(text):
    if text.strip() == "all":
        return tuple(SIGNED_FAMILIES)
    keys = tuple(x.strip() for x in text.split(",") if x.strip())
    for k in keys:
        if k not in SIGNED_FAMILIES:
            raise UsageError(f"unknown family {k!r}; use 'all' or a list from {', '.join(SIGNED_FAMILIES)}")
    return keys


def _read_config(path):
    """key = value lines; keys are flag names without dashes."""
    parser = configparser.ConfigParser()
    try:
        with open(path) as fh:
            parser.read_string("[verify]\n" + fh.read())
    except (OSError, configparser.Error) as e:
        raise UsageError(f"cannot read config {path}: {e}") from e
    return {k.replace("-", "_"): v for k, v in parser["verify"].items()}


def _grid_from(args):
    conf = _read_config(args.config) if args.config else {}

    def pick(name):
        v = getattr(args, name)
        return v if v is not None else conf.get(name)

    grid = GridSpec()
    if pick("families") is not None:
        grid.families = _families(str(pick("families")))
    if pick("qs") is not None:
        grid.qs = _int_list(str(pick("qs")))
    for name in ("nmin", "nmax", "amax", "imax", "workers"):
        v = pick(name)
        if v is not None:
            try:
                setattr(grid, name, int(v))
            except ValueError as e:
                raise UsageError(f"{name} must be an integer, got {v!r}") from e
    lemmas = pick("lemma")
    if isinstance(lemmas, str):
        lemmas = [lemmas]
    run_every = args.all or str(conf.get("all", "")).lower() in ("1", "true", "yes")
    return grid, lemmas, run_every


def cmd_verify(args):
    grid, lemmas, run_every = _grid_from(args)
    names = []
    for item in lemmas or []:
        names += [x.strip() for x in item.split(",") if x.strip()]
    if run_every:
        names = list(CHECKS)
    if not names:
        raise UsageError("choose checks with --lemma NAME (repeatable) or --all")
    for n in names:
        if n not in CHECKS:
            raise UsageError(f"unknown check {n!r}; known: {', '.join(CHECKS)}")
    status = 0
    out = open(args.output, "w") if args.output else sys.stdout
    try:
        for n in names:
            report = run_check(n, grid).as_dict()
            if args.no_timing:
                report.pop("wall_time")
            out.write(json.dumps(report, sort_keys=False, default=str) + "\n")
            out.flush()
            if report["status"] != "pass":
                status = 1
    finally:
        if out is not sys.stdout:
            out.close()
    return status


# query

def _relative(t, xs):
    return [f"t-{t - x}" if x != t else "t" for x in sorted(xs, reverse=True)]


def query(L, what):
    """The requested invariant of L as a JSON-ready dict."""
    out = {"group": str(L), "query": what}
    if what == "t":
        t = t_of(L)
        out.update({"t": t, "source": "exact-search"})
        try:
            out["formula"] = table1(L)[0]
        except RangeError as e:
            out["formula"] = None
            out["formula_note"] = str(e)
    elif what == "cocliques":
        out["greatest"] = max_coclique_exact(L).as_dict()
        out["through_char"] = max_coclique_exact(L, CHAR).as_dict()
        try:
            t, E, JE = table1(L)
            out["formula"] = {"t": t, "E": sorted(E), "J-E": sorted(JE)}
        except RangeError:
            out["formula"] = None
        if table2_applies(L):
            tp, Jp = table2(L)
            out["formula_char"] = {"t": tp, "J": sorted(Jp)}
    elif what == "zeta":
        Z = zeta_table(L)
        out.update(Z.as_dict())
        out["source"] = "exact-search"
        out["T_relative"] = _relative(Z.t, Z.T)
        if L.n < zeta_floor(L):
            out["note"] = f"closed forms are stated for n >= {zeta_floor(L)}"
    elif what == "graph":
        G = index_graph(L)
        out["vertices"] = [_vertex(v, L) for v in G.labels]
        out["nonadjacent"] = [[str(u), str(v)] for u, v in G.edges()]
    elif what == "bigk":
        w = big_spectral_element(L)
        out.update(w.as_dict())
        out["max_bound"] = str(max_spectral_bound(L))
    elif what == "pexp":
        out["pexp"] = p_exponent(L)
    else:
        raise UsageError(f"unknown query {what!r}; choose from {', '.join(QUERIES)}")
    return out


def _vertex(v, L):
    if v == CHAR:
        return {"index": CHAR, "t_anchored": t_anchored(CHAR, L)}
    d = {"index": v, "phi": phi_of_index(v, L), "large": classify_large(v, L) == "large"}
    if L.family == LINEAR:
        d["nu_eps"] = nu_eps(v, L.eps)
    else:
        d["eta"] = eta(v)
    return d


def cmd_query(args):
    _dump(query(_descriptor(args.descriptor), args.what), args.output)
    return 0


# eliminate

def cmd_eliminate(args):
    from .eliminator import ContradictionReport, candidates, eliminate

    L = _descriptor(args.L)
    if args.scan == (args.S is not None):
        raise UsageError("give either a second descriptor S or --scan")
    if args.S is not None:
        r = eliminate(L, _descriptor(args.S))
        _dump(r.as_dict(), args.output)
        return 0 if isinstance(r, ContradictionReport) and r.verified else 1
    table1(L)
    reports = [eliminate(L, S) for S in candidates(L)]
    ok = all(isinstance(r, ContradictionReport) and r.verified for r in reports)
    patterns = {}
    for r in reports:
        patterns[r.pattern] = patterns.get(r.pattern, 0) + 1
    _dump({
        "group": str(L),
        "candidates": len(reports),
        "all_eliminated": ok,
        "patterns": dict(sorted(patterns.items())),
        "reports": [r.as_dict() for r in reports] if args.full else
                   [{"S": str(r.S), "pattern": r.pattern, "verified": r.verified} for r in reports],
    }, args.output)
    return 0 if ok else 1


# export

def to_dot(L):
    """The prime graph at index level: an edge joins adjacent vertices."""
    G = index_graph(L)
    lines = [f'graph "{L}" {{']
    for v in G.labels:
        d = _vertex(v, L)
        attrs = ", ".join(f'{k}="{val}"' for k, val in d.items() if k != "index")
        lines.append(f'  "{v}" [{attrs}];')
    for a, u in enumerate(G.labels):
        for v in G.labels[a + 1:]:
            if not G.nonadjacent(u, v):
                lines.append(f'  "{u}" -- "{v}";')
    lines.append("}")
    return "\n".join(lines)


def to_json(L):
    G = index_graph(L)
    adjacent, nonadjacent = [], []
    for a, u in enumerate(G.labels):
        for v in G.labels[a + 1:]:
            (nonadjacent if G.nonadjacent(u, v) else adjacent).append([str(u), str(v)])
    return {"group": str(L), "vertices": [_vertex(v, L) for v in G.labels],
            "adjacent": adjacent, "nonadjacent": nonadjacent}


def cmd_export(args):
    L = _descriptor(args.descriptor)
    if args.format == "dot":
        text = to_dot(L)
        if args.output:
            with open(args.output, "w") as fh:
                fh.write(text + "\n")
        else:
            print(text)
    else:
        _dump(to_json(L), args.output)
    return 0


def build_parser():
    p = argparse.ArgumentParser(prog="classgraph", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run verification checks over a grid")
    v.add_argument("--lemma", action="append", help=f"check name(s), comma separated; one of: {', '.join(CHECKS)}")
    v.add_argument("--all", action="store_true", help="run every check with its default grid")
    v.add_argument("--families", help="'all' or a list from " + ",".join(SIGNED_FAMILIES))
    v.add_argument("--qs", help="field sizes, e.g. " + ",".join(map(str, DEFAULT_QS)))
    v.add_argument("--nmin", type=int)
    v.add_argument("--nmax", type=int)
    v.add_argument("--amax", type=int)
    v.add_argument("--imax", type=int)
    v.add_argument("--workers", type=int)
    v.add_argument("--config", help="key = value file; keys are flag names")
    v.add_argument("--output", "-o")
    v.add_argument("--no-timing", action="store_true", help="omit wall times so reports compare byte for byte")
    v.set_defaults(func=cmd_verify)

    q = sub.add_parser("query", help="compute one invariant of a group")
    q.add_argument("descriptor")
    q.add_argument("what", choices=QUERIES)
    q.add_argument("--output", "-o")
    q.set_defaults(func=cmd_query)

    e = sub.add_parser("eliminate", help="find a contradiction for a candidate pair")
    e.add_argument("L")
    e.add_argument("S", nargs="?")
    e.add_argument("--scan", action="store_true", help="run over every candidate S with t(S) = t(L)")
    e.add_argument("--full", action="store_true", help="with --scan, print complete reports")
    e.add_argument("--output", "-o")
    e.set_defaults(func=cmd_eliminate)

    x = sub.add_parser("export", help="write the index-level prime graph")
    x.add_argument("descriptor")
    x.add_argument("--format", choices=("dot", "json"), default="dot")
    x.add_argument("--output", "-o")
    x.set_defaults(func=cmd_export)
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, RangeError, DomainError) as e:
        print(f"classgraph: error: {e}", file=sys.stderr)
        return 2
    except LemmaViolation as e:
        print(f"classgraph: lemma violation: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
