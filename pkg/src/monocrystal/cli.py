"""Command-line interface.

Exit status: 0 on success, 1 on usage or input errors, 2 when a
verification finds a mismatch or a product set that is not closed.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor

from .crystal import (
    DEFAULT_NODE_BUDGET,
    MonomialCrystal,
    decompose,
    generate_component,
    tensor_product,
    to_dot,
)
from .decomposition import (
    default_convention,
    fundamental_crystal,
    fundamental_graph,
    iter_cases,
    product_set,
    verify_case,
    verify_tensor_case,
    Y,
)
from .errors import CrystalError, MonomialParseError, NotClosedError
from .monomial import Monomial, parse
from .weights import format_weight

EXIT_OK, EXIT_USAGE, EXIT_MISMATCH = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(f"{self.prog}: {message}")


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="monocrystal", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def command(name, help, outputs, default, needs_n=True):
        p = sub.add_parser(name, help=help)
        if needs_n:
            p.add_argument("--n", type=_positive, required=True, help="rank of A_n")
        p.add_argument("--output", choices=outputs, default=default)
        return p

    p = command("component", "connected component of Y_k(shift)", ["text", "json", "dot"], "text")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--shift", type=int, default=1)
    p.add_argument("--node-budget", type=_positive, default=DEFAULT_NODE_BUDGET)

    p = command("graph", "DOT graph of the component of Y_k(shift)", ["dot"], "dot")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--shift", type=int, default=1)
    p.add_argument("--node-budget", type=_positive, default=DEFAULT_NODE_BUDGET)

    p = command("product", "the set M(Y_p(m)) · M(Y_q(1))", ["text", "json"], "text")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--m", type=int, required=True)

    p = command("decompose", "decompose monomials read from stdin", ["text", "json"], "json")
    p.add_argument("--node-budget", type=_positive, default=DEFAULT_NODE_BUDGET)

    p = command("tensor", "decompose B(Lambda_p) ⊗ B(Lambda_q)", ["text", "json", "dot"], "json")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--q", type=int, required=True)

    p = command("verify", "check one product case against the closed form", ["text", "json"], "json")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--m", type=int, required=True)

    p = command("sweep", "verify every case up to the given bounds", ["json"], "json", needs_n=False)
    p.add_argument("--n-max", type=_positive, required=True)
    p.add_argument("--m-max", type=_positive, required=True)
    return parser


def _check_range(name: str, value: int, n: int) -> None:
    if not 1 <= value <= n:
        raise UsageError(f"--{name} must lie in 1..{n}, got {value}")


def _dump(obj) -> str:
    return json.dumps(obj, ensure_ascii=False)


def _component(args, out) -> int:
    _check_range("k", args.k, args.n)
    graph = generate_component(Y(args.n, args.k, args.shift), MonomialCrystal(default_convention(args.n)), args.node_budget)
    if args.output == "dot":
        out.write(to_dot(graph))
    elif args.output == "json":
        index = {b: k for k, b in enumerate(graph.nodes)}
        payload = {
            "n": args.n,
            "seed": Y(args.n, args.k, args.shift).to_json(),
            "size": len(graph),
            "nodes": [b.to_json() for b in graph.nodes],
            "edges": [[index[s], i, index[t]] for s, i, t in graph.edges],
        }
        out.write(_dump(payload) + "\n")
    else:
        for b in graph.nodes:
            out.write(f"{b}\n")
    return EXIT_OK


def _product(args, out) -> int:
    _check_range("p", args.p, args.n)
    _check_range("q", args.q, args.n)
    prod = product_set(fundamental_crystal(args.n, args.p, args.m), fundamental_crystal(args.n, args.q, 1))
    elements = sorted(prod.elements, key=str)
    if args.output == "json":
        payload = {
            "n": args.n,
            "p": args.p,
            "q": args.q,
            "m": args.m,
            "size": len(elements),
            "pair_count": prod.pair_count,
            "elements": [b.to_json() for b in elements],
        }
        out.write(_dump(payload) + "\n")
    else:
        for b in elements:
            out.write(f"{b}\n")
    return EXIT_OK


def read_monomials(text: str, n: int) -> list[Monomial]:
    """Monomials from JSON (component/product output or a bare list) or from text lines."""
    stripped = text.strip()
    if stripped.startswith(("{", "[")):
        try:
            data = json.loads(stripped)
        except json.JSONDecodeError as exc:
            raise UsageError(f"invalid JSON on stdin: {exc}") from None
        if isinstance(data, dict):
            if "n" in data and data["n"] != n:
                raise UsageError(f"input is for rank {data['n']}, but --n is {n}")
            data = data.get("nodes", data.get("elements"))
            if data is None:
                raise UsageError("JSON input needs a 'nodes' or 'elements' array")
        try:
            return [Monomial.from_json(n, item) for item in data]
        except (TypeError, ValueError, IndexError) as exc:
            raise UsageError(f"malformed monomial JSON: {exc}") from None
    out = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            out.append(parse(line, n))
    return out


def _decompose(args, stdin, out) -> int:
    universe = read_monomials(stdin.read(), args.n)
    if len(set(universe)) > args.node_budget:
        raise CrystalError(f"universe of {len(set(universe))} elements exceeds node budget {args.node_budget}")
    result = decompose(universe, MonomialCrystal(default_convention(args.n)))
    if args.output == "json":
        out.write(_dump(result.to_json()) + "\n")
    else:
        for c in result.components:
            out.write(f"{format_weight(c.weight)}\tsize={c.size}\thighest={c.highest}\n")
        out.write(f"universe_size={result.universe_size}\n")
    return EXIT_OK


def _report_text(report) -> str:
    fmt = lambda ws: "{" + ", ".join(format_weight(w) for w in ws) + "}"
    head = f"n={report.n} p={report.p} q={report.q}"
    if report.m is not None:
        head += f" m={report.m}"
    pred = "-" if report.predicted is None else fmt(report.predicted)
    return (
        f"{head} computed={fmt(report.computed)} predicted={pred} match={report.match} "
        f"universe_size={report.universe_size} tensor_size={report.tensor_size}\n"
    )


def _tensor(args, out) -> int:
    _check_range("p", args.p, args.n)
    _check_range("q", args.q, args.n)
    if args.output == "dot":
        out.write(to_dot(tensor_product(fundamental_graph(args.n, args.p), fundamental_graph(args.n, args.q))))
        return EXIT_OK
    report = verify_tensor_case(args.n, args.p, args.q)
    out.write(_dump(report.to_json()) + "\n" if args.output == "json" else _report_text(report))
    return EXIT_OK if report.ok else EXIT_MISMATCH


def _verify(args, out) -> int:
    _check_range("p", args.p, args.n)
    _check_range("q", args.q, args.n)
    report = verify_case(args.n, args.p, args.q, args.m)
    out.write(_dump(report.to_json()) + "\n" if args.output == "json" else _report_text(report))
    return EXIT_OK if report.ok else EXIT_MISMATCH


def _sweep_one(case):
    try:
        report = verify_case(*case)
    except NotClosedError as exc:
        n, p, q, m = case
        return {"n": n, "p": p, "q": q, "m": m, "match": False, "error": str(exc)}, False
    return report.to_json(), report.ok


def sweep_workers() -> int:
    raw = os.environ.get("CRYSTAL_THREADS")
    if raw:
        try:
            return max(1, int(raw))
        except ValueError:
            raise UsageError(f"CRYSTAL_THREADS must be an integer, got {raw!r}") from None
    return os.cpu_count() or 1


def _sweep(args, out, err) -> int:
    cases = list(iter_cases(args.n_max, args.m_max))
    workers = min(sweep_workers(), len(cases))
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = pool.map(_sweep_one, cases, chunksize=4)
            bad = _write_lines(results, out)
    else:
        bad = _write_lines(map(_sweep_one, cases), out)
    err.write(f"{len(cases)} cases, {bad} mismatches\n")
    return EXIT_MISMATCH if bad else EXIT_OK


def _write_lines(results, out) -> int:
    bad = 0
    for payload, ok in results:
        out.write(_dump(payload) + "\n")
        bad += not ok
    return bad


def main(argv=None, stdin=None, stdout=None, stderr=None) -> int:
    stdin = stdin or sys.stdin
    out = stdout or sys.stdout
    err = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command == "component" or args.command == "graph":
            return _component(args, out)
        if args.command == "product":
            return _product(args, out)
        if args.command == "decompose":
            return _decompose(args, stdin, out)
        if args.command == "tensor":
            return _tensor(args, out)
        if args.command == "verify":
            return _verify(args, out)
        return _sweep(args, out, err)
    except UsageError as exc:
        err.write(f"{exc}\n")
        return EXIT_USAGE
    except MonomialParseError as exc:
        err.write(f"parse error: {exc}\n")
        return EXIT_USAGE
    except NotClosedError as exc:
        err.write(f"not closed: {exc}\n")
        return EXIT_MISMATCH
    except CrystalError as exc:
        err.write(f"{exc}\n")
        return EXIT_USAGE
