"""Command-line front end.

JSON goes to stdout, progress and errors to stderr.  Exit codes:
0 success / ok / path found, 1 counterexample or nothing found,
2 malformed input, 3 verdict unknown because a cap was hit.
"""

from __future__ import annotations

import argparse
import csv
import hashlib
import json
import math
import random
import sys
import time

from . import oracle
from .adversary import check_anagram_path, find_anagram_clique_chain, find_anagram_ladder
from .colouring import Colouring, Status, colour_path_asf, dnc_colour, verify_anagram_free
from .errors import (BudgetExceededError, EnumerationOverflowError, InvalidInputError,
                     PreconditionError)
from .graphs import (Graph, PathDecomposition, build_clique_chain, build_ladder,
                     build_path_graph, clique_chain_decomposition, ladder_decomposition,
                     path_graph_decomposition)
from .words import split_even_pairs

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE, EXIT_UNKNOWN = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True)


def _read_json(path: str, stdin_cache: dict):
    try:
        if path == "-":
            if "data" not in stdin_cache:
                stdin_cache["data"] = json.load(sys.stdin)
            return stdin_cache["data"]
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InvalidInputError(f"cannot read JSON from {path}: {exc}") from exc


def _write(text: str, path: str | None) -> None:
    if path is None or path == "-":
        sys.stdout.write(text + "\n")
    else:
        with open(path, "w") as fh:
            fh.write(text + "\n")


def _report(argv, inputs, outcome, payload, started) -> str:
    digest = hashlib.sha256(_dump(inputs).encode()).hexdigest()
    return _dump({
        "command": list(argv),
        "inputs_digest": digest,
        "outcome": outcome,
        "payload": payload,
        "timing": {"seconds": round(time.perf_counter() - started, 6)},
    })


def _family_params(g: Graph, *keys):
    try:
        return [int(g.meta[key]) for key in keys]
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidInputError(f"graph meta lacks {keys}: {exc}") from exc


def _cmd_gen(args, argv, stdin):
    if args.family == "ladder":
        g, _ = build_ladder(args.n)
        d = ladder_decomposition(args.n) if args.n >= 2 else PathDecomposition(({0, 1},))
    elif args.family == "chain":
        if args.k is None:
            raise InvalidInputError("gen chain needs --k")
        g, _ = build_clique_chain(args.n, args.k)
        d = (clique_chain_decomposition(args.n, args.k) if args.n >= 2
             else PathDecomposition((set(range(args.k)),)))
    else:
        g = build_path_graph(args.n)
        d = path_graph_decomposition(args.n)
    _write(_dump(g.to_json()), args.out)
    if args.decomp_out:
        _write(_dump(d.to_json()), args.decomp_out)
    return EXIT_OK


def _cmd_colour(args, argv, stdin):
    if args.method == "dnc":
        if not args.graph or not args.decomp:
            raise InvalidInputError("colour dnc needs --graph and --decomp")
        g = Graph.from_json(_read_json(args.graph, stdin))
        d = PathDecomposition.from_json(_read_json(args.decomp, stdin))
        phi = dnc_colour(g, d)
    else:
        if args.n is None:
            raise InvalidInputError("colour asf-path needs --n")
        phi = colour_path_asf(args.n)
    _write(_dump(phi.to_json()), args.out)
    return EXIT_OK


def _cmd_verify(args, argv, stdin):
    started = time.perf_counter()
    gdata = _read_json(args.graph, stdin)
    cdata = _read_json(args.colouring, stdin)
    g, phi = Graph.from_json(gdata), Colouring.from_json(cdata)
    verdict = verify_anagram_free(g, phi, args.cap)
    payload = verdict.to_json()
    if verdict.path is not None:
        payload["colours"] = list(phi.spell(verdict.path))
    _write(_report(argv, [gdata, cdata, args.cap], verdict.status.value, payload, started), None)
    return {Status.OK: EXIT_OK, Status.COUNTEREXAMPLE: EXIT_NEGATIVE,
            Status.UNKNOWN: EXIT_UNKNOWN}[verdict.status]


def _cmd_attack(args, argv, stdin):
    started = time.perf_counter()
    gdata = _read_json(args.graph, stdin)
    cdata = _read_json(args.colouring, stdin)
    g, phi = Graph.from_json(gdata), Colouring.from_json(cdata)
    if args.family == "ladder":
        (n,) = _family_params(g, "n")
        expected, _ = build_ladder(n)
        attack = lambda: find_anagram_ladder(n, phi)
    else:
        n, k = _family_params(g, "n", "k")
        expected, _ = build_clique_chain(n, k)
        attack = lambda: find_anagram_clique_chain(n, k, phi)
    if g != expected:
        raise InvalidInputError(f"graph is not the {args.family} its meta describes")
    ap = attack()
    payload = ap.to_json() if ap is not None else None
    _write(_report(argv, [gdata, cdata], "found" if ap else "none", payload, started), None)
    return EXIT_OK if ap else EXIT_NEGATIVE


def _cmd_oracle(args, argv, stdin):
    started = time.perf_counter()
    if args.what == "min-colours":
        gdata = _read_json(args.graph, stdin)
        value = oracle.brute_min_afcn(Graph.from_json(gdata), args.max_colours, args.cap)
        inputs, outcome, payload = [gdata, args.max_colours], "done", {"min_colours": value}
    elif args.what == "asf-max":
        value = oracle.brute_asf_max(args.alphabet, args.cap)
        inputs, outcome, payload = [args.alphabet], "done", {"max_length": value}
    elif args.what == "find-path":
        gdata = _read_json(args.graph, stdin)
        cdata = _read_json(args.colouring, stdin)
        path = oracle.brute_find_anagram_path(Graph.from_json(gdata),
                                              Colouring.from_json(cdata), args.cap)
        inputs, outcome = [gdata, cdata], "found" if path else "none"
        payload = {"path": list(path) if path else None}
    else:
        try:
            s = [int(a) for a in json.loads(args.string)]
        except (TypeError, ValueError) as exc:
            raise InvalidInputError(f"--string must be a JSON array of ints: {exc}") from exc
        v = oracle.brute_split(s)
        inputs, outcome = [s], "found" if v is not None else "none"
        payload = {"split": list(v) if v is not None else None,
                   "euler_split": list(split_even_pairs(s)) if v is not None else None}
    _write(_report(argv, inputs, outcome, payload, started), None)
    return EXIT_OK


def _cmd_bounds(args, argv, stdin):
    out = sys.stdout if args.out in (None, "-") else open(args.out, "w", newline="")
    writer = csv.writer(out, lineterminator="\n")
    if args.family == "ladder":
        writer.writerow(["n", "vertices", "log2_n_plus_1", "oracle_min_colours"])
        for n in range(1, args.n_max + 1):
            value = ""
            if n <= args.oracle_max_n:
                print(f"oracle: ladder n={n}", file=sys.stderr)
                found = oracle.brute_min_afcn(build_ladder(n)[0], 2 * n)
                value = "" if found is None else found
            writer.writerow([n, 2 * n, f"{math.log2(n + 1):.6f}", value])
    else:
        if args.k is None:
            raise InvalidInputError("bounds --family chain needs --k")
        writer.writerow(["n", "vertices", "k_minus_2_log2_n_over_3"])
        for n in range(1, args.n_max + 1):
            bound = (args.k - 2) * math.log2(n / 3)
            writer.writerow([n, args.k * n, f"{bound:.6f}"])
    if out is not sys.stdout:
        out.close()
    return EXIT_OK


def _cmd_sweep(args, argv, stdin):
    """Random colourings against an adversary; reports the success count."""
    started = time.perf_counter()
    rng = random.Random(args.seed)
    if args.family == "ladder":
        g, _ = build_ladder(args.n)
        attack = lambda phi: find_anagram_ladder(args.n, phi)
    else:
        if args.k is None:
            raise InvalidInputError("sweep chain needs --k")
        g, _ = build_clique_chain(args.n, args.k)
        attack = lambda phi: find_anagram_clique_chain(args.n, args.k, phi)
    found = 0
    failures = []
    for trial in range(args.samples):
        colours = tuple(rng.randrange(args.alphabet) for _ in range(g.vertex_count))
        phi = Colouring(args.alphabet, colours)
        ap = attack(phi)
        if ap is not None and not check_anagram_path(g, phi, ap):
            found += 1
        else:
            failures.append(trial)
    payload = {"samples": args.samples, "found": found, "failed_trials": failures}
    inputs = [args.family, args.n, args.k, args.alphabet, args.samples, args.seed]
    _write(_report(argv, inputs, "done", payload, started), None)
    return EXIT_OK if not failures else EXIT_NEGATIVE


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="anagramfree", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    gen = sub.add_parser("gen", help="write a graph as JSON")
    gen.add_argument("family", choices=["ladder", "chain", "path"])
    gen.add_argument("--n", type=int, required=True)
    gen.add_argument("--k", type=int)
    gen.add_argument("--out")
    gen.add_argument("--decomp-out", help="also write its path decomposition here")
    gen.set_defaults(func=_cmd_gen)

    col = sub.add_parser("colour", help="write a colouring as JSON")
    col.add_argument("method", choices=["dnc", "asf-path"])
    col.add_argument("--graph")
    col.add_argument("--decomp")
    col.add_argument("--n", type=int)
    col.add_argument("--out")
    col.set_defaults(func=_cmd_colour)

    ver = sub.add_parser("verify", help="exhaustively check a colouring")
    ver.add_argument("--graph", default="-")
    ver.add_argument("--colouring", required=True)
    ver.add_argument("--cap", type=int, default=10**7)
    ver.set_defaults(func=_cmd_verify)

    att = sub.add_parser("attack", help="run a lower-bound adversary")
    att.add_argument("family", choices=["ladder", "chain"])
    att.add_argument("--graph", default="-")
    att.add_argument("--colouring", required=True)
    att.set_defaults(func=_cmd_attack)

    orc = sub.add_parser("oracle", help="brute-force reference computations")
    orc.add_argument("what", choices=["min-colours", "asf-max", "find-path", "split"])
    orc.add_argument("--graph", default="-")
    orc.add_argument("--colouring")
    orc.add_argument("--max-colours", type=int, default=4)
    orc.add_argument("--alphabet", type=int, default=3)
    orc.add_argument("--string")
    orc.add_argument("--cap", type=int, default=10**6)
    orc.set_defaults(func=_cmd_oracle)

    bnd = sub.add_parser("bounds", help="CSV of lower-bound curves")
    bnd.add_argument("--family", choices=["ladder", "chain"], default="ladder")
    bnd.add_argument("--n-max", type=int, required=True)
    bnd.add_argument("--k", type=int)
    bnd.add_argument("--oracle-max-n", type=int, default=3)
    bnd.add_argument("--out")
    bnd.set_defaults(func=_cmd_bounds)

    swp = sub.add_parser("sweep", help="random colourings against an adversary")
    swp.add_argument("family", choices=["ladder", "chain"])
    swp.add_argument("--n", type=int, required=True)
    swp.add_argument("--k", type=int)
    swp.add_argument("--alphabet", type=int, required=True)
    swp.add_argument("--samples", type=int, default=100)
    swp.add_argument("--seed", type=int, default=0)
    swp.set_defaults(func=_cmd_sweep)
    return p


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        args = build_parser().parse_args(argv)
        if getattr(args, "command", None) == "oracle":
            needs = {"find-path": ["colouring"], "split": ["string"]}.get(args.what, [])
            for name in needs:
                if getattr(args, name) is None:
                    raise UsageError(f"oracle {args.what} needs --{name}")
        return args.func(args, argv, {})
    except (UsageError, InvalidInputError, PreconditionError) as exc:
        print(_dump({"error": type(exc).__name__, "message": str(exc)}), file=sys.stderr)
        return EXIT_USAGE
    except (BudgetExceededError, EnumerationOverflowError) as exc:
        print(_dump({"error": type(exc).__name__, "message": str(exc)}), file=sys.stderr)
        return EXIT_UNKNOWN


if __name__ == "__main__":
    sys.exit(main())
