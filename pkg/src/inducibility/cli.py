"""Command-line front end.

Every verb prints deterministic text by default and a JSON document with
``--json``; the schemas live in ``inducibility/schemas``.  Exit status is 0
on success, 1 on a domain error (bad file, violated precondition) and 2 on
a usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from fractions import Fraction
from pathlib import Path
from typing import Sequence

from .compress import reduce
from .counting import count_pattern, count_stars
from .density import kst_inducibility, kst_inducibility_exact, solve_alpha
from .digraph import random_digraph, read_arclist, to_arclist, write_arclist
from .extremal import (
    aux_3graph,
    balanced_kst_blowup,
    exhaustive_max,
    is_c5_free,
    iterated_blowup,
)
from .patterns import CompleteBipartite, Star, parse_pattern, pattern_label

CONVERGENCE_HEADER = ["n", "construction_density", "alpha", "gap"]


def _fmt(x: float) -> str:
    return f"{x:.9g}"


def _frac(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def _emit(args, payload: dict, lines: list[str]) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        for ln in lines:
            print(ln)


def _count_payload(c) -> dict:
    return {
        "copies": c.copies,
        "n": c.n,
        "pattern_order": c.pattern_order,
        "density": c.density,
        "density_exact": _frac(c.density_exact),
    }


# -- verbs --------------------------------------------------------------------


def cmd_alpha(args) -> None:
    r = solve_alpha(args.k, args.tol)
    payload = {
        "k": r.k,
        "alpha": r.alpha,
        "x_star": r.x_star,
        "fixed_point_residual": r.fixed_point_residual,
        "tolerance": r.tolerance,
        "evaluations": r.evaluations,
    }
    _emit(
        args,
        payload,
        [f"alpha = {_fmt(r.alpha)}", f"x = {_fmt(r.x_star)}", f"residual = {_fmt(r.fixed_point_residual)}"],
    )


def cmd_kst(args) -> None:
    exact = kst_inducibility_exact(args.s, args.t) if min(args.s, args.t) >= 2 else None
    value = kst_inducibility(args.s, args.t)
    payload = {"s": args.s, "t": args.t, "exact": _frac(exact) if exact is not None else None, "value": value}
    _emit(args, payload, [f"exact {_frac(exact) if exact is not None else 'n/a'}", f"value {_fmt(value)}"])


def cmd_construct(args, parser) -> None:
    if args.kind == "star":
        if args.k is None:
            parser.error("construct --kind star needs --k")
        d = iterated_blowup(args.n, args.k)
        pattern = Star(args.k)
    else:
        if args.s is None or args.t is None:
            parser.error("construct --kind kst needs --s and --t")
        d = balanced_kst_blowup(args.n, args.s, args.t)
        pattern = CompleteBipartite(args.s, args.t)
    c = count_pattern(d, pattern)
    if args.out:
        write_arclist(d, args.out)
    else:
        sys.stdout.write(to_arclist(d))
    payload = {"kind": args.kind, "pattern": pattern_label(pattern), **_count_payload(c)}
    lines = [f"copies {c.copies}", f"density {_fmt(c.density)}"]
    if args.out:
        _emit(args, payload, lines)
    else:
        # stdout carries the arclist; the summary goes to stderr
        print(json.dumps(payload, sort_keys=True) if args.json else "\n".join(lines), file=sys.stderr)


def cmd_count(args) -> None:
    pattern = parse_pattern(args.pattern)
    d = read_arclist(args.input)
    c = count_pattern(d, pattern, oracle=args.oracle)
    payload = {"pattern": pattern_label(pattern), "oracle": args.oracle, **_count_payload(c)}
    _emit(args, payload, [f"copies {c.copies}", f"density {_fmt(c.density)} ({_frac(c.density_exact)})"])


def cmd_compress(args) -> None:
    d = read_arclist(args.input)
    before = count_stars(d, args.k)
    red = reduce(d, args.k)
    after = count_stars(red.digraph, args.k)
    if args.out:
        write_arclist(red.digraph, args.out)
    sizes = list(red.partition.sizes)
    payload = {
        "k": args.k,
        "before": _count_payload(before),
        "after": _count_payload(after),
        "class_sizes": sizes,
        "weights": [_frac(Fraction(w)) for w in red.profile.weights],
        "steps": len(red.steps),
    }
    _emit(
        args,
        payload,
        [
            f"before copies {before.copies} density {_fmt(before.density)}",
            f"after copies {after.copies} density {_fmt(after.density)}",
            "profile " + " ".join(_frac(Fraction(w)) for w in red.profile.weights),
            f"steps {len(red.steps)}",
        ],
    )


def cmd_search(args) -> None:
    pattern = parse_pattern(args.pattern)
    rep = exhaustive_max(args.n, pattern, args.mode, threads=args.threads, oracle=args.oracle)
    print(json.dumps(rep.to_json(), sort_keys=True))


def cmd_aux3(args) -> None:
    d = read_arclist(args.input)
    h = aux_3graph(d)
    verdict = is_c5_free(h) if args.check_c5 else None
    if args.json:
        payload = {"n": h.n, "triples": [list(t) for t in sorted(h.triples)], "c5_free": verdict}
        print(json.dumps(payload, sort_keys=True))
        return
    sys.stdout.write(h.to_text())
    if verdict is not None:
        print(f"# c5_free {'true' if verdict else 'false'}")


def _bench_rows(suite: str) -> list[dict]:
    rows = []

    def timed(case: str, n: int, fn):
        t0 = time.perf_counter()
        result = fn()
        rows.append({"suite": suite, "case": case, "n": n, "seconds": round(time.perf_counter() - t0, 6), "result": result})

    if suite == "counting":
        for k in (3, 4):
            for n in (30, 60, 120):
                d = iterated_blowup(n, k)
                timed(f"stars_k{k}_iterated", n, lambda d=d, k=k: count_stars(d, k).copies)
        for seed in range(3):
            d = random_digraph(8, 0.4, "general", seed)
            timed(f"oracle_star4_seed{seed}", 8, lambda d=d: count_pattern(d, Star(4), oracle=True).copies)
    else:
        for n in (3, 4, 5):
            timed("exhaustive_star3_oriented", n, lambda n=n: exhaustive_max(n, Star(3), "oriented").max_copies)
        timed("exhaustive_kst22_general", 4, lambda: exhaustive_max(4, CompleteBipartite(2, 2), "general").max_copies)
    return rows


def cmd_bench(args) -> None:
    rows = _bench_rows(args.suite)
    if args.json:
        print(json.dumps(rows, sort_keys=True))
        return
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=["suite", "case", "n", "seconds", "result"], lineterminator="\n")
    w.writeheader()
    w.writerows(rows)
    sys.stdout.write(buf.getvalue())


def emit_convergence(k: int, n_list: Sequence[int], out: str | Path | None = None) -> list[dict]:
    """Star density of the iterated blow-up against ``alpha_k`` for each ``n``.

    ``gap`` is ``|density - alpha_k|``; finite constructions sit above the
    limit, so the signed difference is negative.
    """
    if not n_list:
        raise ValueError("n_list must be nonempty")
    if list(n_list) != sorted(set(n_list)):
        raise ValueError("n_list must be strictly ascending")
    alpha = solve_alpha(k).alpha
    rows = []
    for n in n_list:
        dens = count_stars(iterated_blowup(n, k), k).density
        rows.append({"n": n, "construction_density": dens, "alpha": alpha, "gap": abs(dens - alpha)})
    if out is not None:
        with open(out, "w", newline="") as fh:
            w = csv.DictWriter(fh, fieldnames=CONVERGENCE_HEADER, lineterminator="\n")
            w.writeheader()
            for r in rows:
                w.writerow({key: (_fmt(v) if isinstance(v, float) else v) for key, v in r.items()})
    return rows


def cmd_convergence(args, parser) -> None:
    try:
        n_list = [int(x) for x in args.n.split(",") if x.strip()]
    except ValueError:
        parser.error(f"--n must be a comma-separated list of integers, got {args.n!r}")
    if not n_list:
        parser.error("--n needs at least one value")
    if n_list != sorted(set(n_list)):
        parser.error("--n values must be strictly ascending")
    rows = emit_convergence(args.k, n_list, args.out)
    if args.json:
        print(json.dumps(rows, sort_keys=True))
    elif not args.out:
        print(",".join(CONVERGENCE_HEADER))
        for r in rows:
            print(",".join(_fmt(r[c]) if isinstance(r[c], float) else str(r[c]) for c in CONVERGENCE_HEADER))


# -- parser -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="inducibility", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="verb", required=True)

    def verb(name: str, help: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help)
        p.add_argument("--json", action="store_true", help="emit JSON instead of text")
        return p

    p = verb("alpha", "solve alpha_k and its maximizer x_k")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--tol", type=float, default=1e-12)

    p = verb("kst", "inducibility of the complete bipartite digraph K_(s,t)")
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--t", type=int, required=True)

    p = verb("construct", "build an iterated or balanced blow-up as an arclist")
    p.add_argument("--kind", choices=["star", "kst"], required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--s", type=int)
    p.add_argument("--t", type=int)
    p.add_argument("--out")

    p = verb("count", "count induced copies of a pattern")
    p.add_argument("--pattern", required=True, help="star:K or kst:S,T")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--oracle", action="store_true", help="use subset enumeration")

    p = verb("compress", "run the count-monotone reduction pipeline")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--out")

    p = verb("search", "exhaustive maximum over all small digraphs (JSON report)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--pattern", required=True)
    p.add_argument("--mode", choices=["oriented", "general"], default="oriented")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--oracle", action="store_true")

    p = verb("aux3", "3-graph of induced 3-stars")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--check-c5", action="store_true")

    p = verb("bench", "timing table as CSV")
    p.add_argument("--suite", choices=["counting", "search"], required=True)

    p = verb("convergence", "iterated blow-up density against alpha_k as CSV")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", required=True, help="comma-separated ascending list")
    p.add_argument("--out")
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        handlers = {
            "alpha": cmd_alpha,
            "kst": cmd_kst,
            "count": cmd_count,
            "compress": cmd_compress,
            "search": cmd_search,
            "aux3": cmd_aux3,
            "bench": cmd_bench,
        }
        if args.verb == "construct":
            cmd_construct(args, parser)
        elif args.verb == "convergence":
            cmd_convergence(args, parser)
        else:
            handlers[args.verb](args)
    except SystemExit as exc:
        return int(exc.code or 0)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
