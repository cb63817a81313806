"""Command-line front end.

Exit codes: 0 success, 1 failed identity check or internal inconsistency,
2 unreadable or malformed graph file, 64 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction

from . import fcalc, generators, intersection
from .fcalc import InconsistencyError, derive_seed
from .graph_core import Graph, GraphError, random_vertex_function
from .graph_io import format_edge_list, read_graph, write_graph
from .poly import f_vector_to_poly

EXIT_CHECK_FAILED = 1
EXIT_IO = 2
EXIT_USAGE = 64


class UsageError(Exception):
    pass


class _IOFailure(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _render(p, var="t") -> str:
    return p.render(var, mul=" ")


def _vertex_json(v):
    return list(v) if isinstance(v, tuple) else v


def _emit(args, text: str, payload: dict) -> None:
    if getattr(args, "json", False):
        print(json.dumps(payload))
    else:
        print(text, end="" if text.endswith("\n") else "\n")


def _load(path: str) -> Graph:
    try:
        return read_graph(path)
    except (OSError, GraphError, ValueError) as exc:
        raise _IOFailure(f"cannot read graph {path!r}: {exc}") from exc


# -- subcommands ------------------------------------------------------------


def cmd_gen(args) -> int:
    kind, params = args.kind, args.params
    try:
        if kind in generators.FAMILIES:
            (n,) = params
            G = generators.generate(kind, int(n))
        elif kind == "er":
            n, p = params
            G = generators.erdos_renyi(int(n), Fraction(p), args.seed)
        elif kind == "torus16":
            if params:
                raise ValueError("torus16 takes no parameters")
            G = generators.torus_16()
        elif kind == "barycentric":
            (src,) = params
            G, _ = generators.barycentric(_load(src))
        elif kind == "join":
            a, b = params
            G = generators.join(_load(a), _load(b))
        else:
            raise UsageError(f"unknown generator {kind!r}")
    except (ValueError, GraphError) as exc:
        raise UsageError(f"gen {kind}: {exc}") from exc
    if args.output:
        write_graph(G, args.output)
    else:
        sys.stdout.write(format_edge_list(G))
    return 0


def cmd_fvector(args) -> int:
    G = _load(args.file)
    kwargs = {"workers": args.threads} if args.algo != "brute" else {}
    f = fcalc.f_function(G, args.algo, args.seed, **kwargs)
    fv = list(f.coeffs[1:])
    text = f"f-vector = ({', '.join(map(str, fv))})\nf = {_render(f)}"
    _emit(args, text, {"algo": args.algo, "f_vector": fv, "f_function": f.to_json()})
    return 0


def cmd_euler(args) -> int:
    G = _load(args.file)
    chi = fcalc.euler_characteristic(G, args.algo, args.seed)
    _emit(args, str(chi), {"euler_characteristic": chi})
    return 0


def cmd_curvature(args) -> int:
    G = _load(args.file)
    report = fcalc.curvature_report(G)
    total = report.total()
    lines, rows = [], []
    for v in G.vertices:
        k, kp = report.values[v], report.polys[v]
        line = f"{v}\t{k}"
        if args.poly:
            line += f"\t{_render(kp)}"
        lines.append(line)
        rows.append({"vertex": _vertex_json(v), "curvature": str(k), "poly": kp.to_json()})
    lines.append(f"total\t{total}")
    _emit(args, "\n".join(lines), {"vertices": rows, "total": total})
    return 0


def cmd_indices(args) -> int:
    G = _load(args.file)
    g = random_vertex_function(G, args.seed)
    report = fcalc.index_report(G, g, args.seed)
    lines, rows = [], []
    for v in G.vertices:
        p, i = report.polys[v], report.integers[v]
        lines.append(f"{v}\t{g[v]}\t{i}\t{_render(p)}")
        rows.append({"vertex": _vertex_json(v), "rank": g[v], "index": i, "poly": p.to_json()})
    total = report.integer_sum()
    lines.append(f"total\t\t{total}")
    _emit(args, "\n".join(lines), {"seed": args.seed, "vertices": rows, "total": total})
    return 0


def cmd_wu(args) -> int:
    G = _load(args.file)
    H = _load(args.file2) if args.file2 else G
    if args.algo == "brute":
        fm = intersection.f_matrix_bruteforce(G, H)
    else:
        fm = intersection.f_matrix_ph(G, H, args.seed, cutoff=args.cutoff)
    omega = fm(-1, -1)
    text = intersection.format_f_matrix_tsv(fm) + f"f(t,s) = {fm.render(mul=' ')}\nomega = {omega}"
    _emit(args, text, {"algo": args.algo, "f_matrix": fm.to_json(), "wu_characteristic": omega})
    return 0


def cmd_verify(args) -> int:
    G = _load(args.file)
    g = random_vertex_function(G, args.seed)
    ok = True
    ph_ok = fcalc.verify_ph_identity(G, g, args.seed)
    print(f"poincare-hopf\t{'ok' if ph_ok else 'FAIL'}")
    ok &= ph_ok
    brute = f_vector_to_poly(fcalc.f_vector_bruteforce(G))
    try:
        gb_ok = fcalc.f_function_gb(G) == brute
        chi = 1 - brute(-1)
        gb_ok &= fcalc.curvature_report(G).total() == chi
    except InconsistencyError as exc:
        print(f"gauss-bonnet\tFAIL ({exc})")
        return EXIT_CHECK_FAILED
    print(f"gauss-bonnet\t{'ok' if gb_ok else 'FAIL'}")
    ok &= gb_ok
    return 0 if ok else EXIT_CHECK_FAILED


def _parse_n_list(text: str) -> list[int]:
    try:
        ns = [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"--n-list must be comma-separated integers, got {text!r}") from None
    if not ns or any(n < 0 for n in ns):
        raise UsageError("--n-list must contain nonnegative sizes")
    return ns


def run_bench(ns, p, samples, algo, seed, threads=1, out=None) -> list[tuple[int, int, float]]:
    """Mean wall-clock seconds per size over seeded ER samples; prints TSV."""
    out = sys.stdout if out is None else out
    rows = []
    out.write("n\tsamples\tmean_seconds\n")
    for n in ns:
        elapsed = 0.0
        for k in range(samples):
            G = generators.erdos_renyi(n, p, derive_seed(seed, n, k))
            kwargs = {"workers": threads} if algo != "brute" else {}
            start = time.perf_counter()
            fcalc.f_function(G, algo, seed, **kwargs)
            elapsed += time.perf_counter() - start
        mean = elapsed / samples
        rows.append((n, samples, mean))
        out.write(f"{n}\t{samples}\t{mean:.6f}\n")
        out.flush()
    return rows


def cmd_bench(args) -> int:
    if args.samples < 1:
        raise UsageError("--samples must be positive")
    if not 0 <= args.p <= 1:
        raise UsageError("--p must lie in [0, 1]")
    run_bench(_parse_n_list(args.n_list), args.p, args.samples, args.algo, args.seed, args.threads)
    return 0


# -- parser -----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="fpoly", description="f-functions, curvature and Wu characteristic of graphs")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("gen", help="write a generated graph")
    p.add_argument("kind", help="complete|cycle|path|star|wheel N, er N P, torus16, barycentric FILE, join FILE FILE")
    p.add_argument("params", nargs="*")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gen)

    def common(p, algos=fcalc.ALGORITHMS, default="ph"):
        p.add_argument("--algo", choices=algos, default=default)
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--json", action="store_true")

    p = sub.add_parser("fvector", help="f-vector and f-function")
    p.add_argument("file")
    common(p)
    p.add_argument("--threads", type=int, default=1)
    p.set_defaults(func=cmd_fvector)

    p = sub.add_parser("euler", help="Euler characteristic")
    p.add_argument("file")
    common(p)
    p.set_defaults(func=cmd_euler)

    p = sub.add_parser("curvature", help="per-vertex curvature")
    p.add_argument("file")
    p.add_argument("--poly", action="store_true", help="also print K_v(t)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_curvature)

    p = sub.add_parser("indices", help="index polynomials of a seeded vertex function")
    p.add_argument("file")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_indices)

    p = sub.add_parser("wu", help="f-matrix and Wu characteristic")
    p.add_argument("file")
    p.add_argument("file2", nargs="?")
    common(p, ("brute", "ph"))
    p.add_argument("--cutoff", type=int, default=intersection.DEFAULT_CUTOFF)
    p.set_defaults(func=cmd_wu)

    p = sub.add_parser("verify", help="check Poincare-Hopf and Gauss-Bonnet against the clique listing")
    p.add_argument("file")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="time f-vector computation on ER graphs")
    p.add_argument("--n-list", default="10,20,30,40,50")
    p.add_argument("--p", type=float, default=0.5)
    p.add_argument("--samples", type=int, default=10)
    p.add_argument("--algo", choices=fcalc.ALGORITHMS, default="ph")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--threads", type=int, default=1)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "threads", 1) < 1:
        parser.error("--threads must be positive")
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"fpoly: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except _IOFailure as exc:
        print(f"fpoly: {exc}", file=sys.stderr)
        return EXIT_IO
    except OSError as exc:
        print(f"fpoly: {exc}", file=sys.stderr)
        return EXIT_IO
    except InconsistencyError as exc:
        print(f"fpoly: internal inconsistency: {exc}", file=sys.stderr)
        return EXIT_CHECK_FAILED


if __name__ == "__main__":
    sys.exit(main())
