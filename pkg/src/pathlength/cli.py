"""Command-line front end. Graphs stream as edge lists, results as sorted-key JSON."""

from __future__ import annotations

import argparse
import json
import sys
from typing import Callable, TextIO

from . import atfree, bandwidth, decomposition, distortion, domination, generators, oracle
from .bandwidth import CapExceededError, local_density_bound
from .decomposition import PathDecomposition
from .graph import Graph, GraphError, build_graph
from .parsing import ConvexBipartiteModel, ParseError, parse_graph, parse_model, serialize_graph, serialize_model

EXIT_OK, EXIT_USAGE, EXIT_INVALID = 0, 1, 2
BOUND_CAP = 9

DECOMPOSE_METHODS = ("extended", "atfree", "permutation", "trapezoid", "convex-bipartite")
BANDWIDTH_METHODS = ("dompath", "dompath-fast", "decomposition", "atfree", "exact")
DISTORTION_METHODS = ("dompath", "dompath-fast", "atfree", "exact")
VERIFY_KINDS = ("decomposition", "layout", "embedding", "dompath", "dompair")
ORACLE_QUANTITIES = ("bandwidth", "distortion", "path-length", "path-breadth")
MODEL_KINDS = ("permutation", "trapezoid", "convex-bipartite", "interval")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(f"{self.prog}: {message}")


def _graph_json(g: Graph) -> dict:
    return {"n": g.n, "edges": [list(e) for e in g.edges]}


def _emit(out: TextIO, payload: dict) -> None:
    out.write(json.dumps(payload, sort_keys=True) + "\n")


# ------------------------------------------------------------------------ bounds


def _bw_basis(g: Graph) -> tuple[int, str]:
    if g.n <= BOUND_CAP:
        return oracle.exact_bandwidth(g), "exact"
    return max(1, local_density_bound(g)), "lower-bound"


def _ld_basis(g: Graph) -> tuple[int, str]:
    if g.n <= BOUND_CAP:
        return oracle.exact_line_distortion(g), "exact"
    return max(1, local_density_bound(g)), "lower-bound"


# ---------------------------------------------------------------------- commands


def cmd_gen(args, stdin: TextIO, out: TextIO) -> int:
    if args.kind in MODEL_KINDS:
        n = _require(args.n, "n")
        if args.kind == "permutation":
            text = serialize_model("permutation", generators.random_permutation_model(n, args.seed))
        elif args.kind == "trapezoid":
            text = serialize_model("trapezoid", generators.random_trapezoid_model(n, args.seed))
        elif args.kind == "convex-bipartite":
            q, intervals = generators.random_convex_bipartite_model(n, args.v_count or n, args.seed)
            text = serialize_model("convex-bipartite", ConvexBipartiteModel(q, tuple(intervals)))
        else:
            g = generators.interval_graph(generators.random_interval_model(n, args.seed))
            text = serialize_graph(g)
        out.write(text)
        return EXIT_OK
    spec = generators.FamilySpec(
        args.kind, n=args.n, spine=args.spine, hair=args.hair, p=args.p, seed=args.seed
    )
    out.write(serialize_graph(generators.generate(spec)))
    return EXIT_OK


def _require(value, name: str):
    if value is None:
        raise UsageError(f"missing required argument {name}")
    return value


def _decomposition_payload(g: Graph, pd: PathDecomposition, method: str) -> dict:
    payload = pd.certificate()
    payload.update(graph=_graph_json(g), method=method)
    return payload


def cmd_decompose(args, stdin: TextIO, out: TextIO) -> int:
    method = args.method
    if method in ("permutation", "trapezoid", "convex-bipartite"):
        model = parse_model(method, stdin.read())
        if method == "permutation":
            g, pd = atfree.permutation_decomposition(model)
        elif method == "trapezoid":
            g, pd = atfree.trapezoid_decomposition(model)
        else:
            g, pd = atfree.convex_bipartite_decomposition(model.u_count, model.intervals)
        if args.prune_bags:
            pd = decomposition.prune_bags(pd)
    else:
        g = parse_graph(stdin.read())
        if method == "extended":
            pd = decomposition.extended_layering_best(g, prune=args.prune_bags)
        else:
            pd = atfree.atfree_decomposition(g, force=args.force, prune=args.prune_bags)
    payload = _decomposition_payload(g, pd, method)
    if args.bound and g.n <= oracle.PATH_CAP:
        pl = oracle.exact_path_length(g)
        pb = oracle.exact_path_breadth(g)
        payload.update(path_length=pl, path_breadth=pb)
        if method == "extended":
            payload.update(bound={"length": 2 * pl, "breadth": 3 * pb}, bound_basis="exact")
    _emit(out, payload)
    return EXIT_OK


def _dominating_path(g: Graph, fast: bool) -> domination.DominatingPath:
    if fast:
        return domination.double_bfs_dominating_path(g)
    return domination.best_dominating_shortest_path(g)


def cmd_bandwidth(args, stdin: TextIO, out: TextIO) -> int:
    g = parse_graph(stdin.read())
    method = args.method
    extra: dict = {}
    factor: Callable[[int], int]
    if method in ("dompath", "dompath-fast"):
        p = _dominating_path(g, method == "dompath-fast")
        layout = bandwidth.layout_from_dominating_path(g, p)
        extra["path"], extra["k"] = list(p.vertices), p.radius
        factor = lambda bw: (4 * p.radius + 2) * bw
    elif method == "decomposition":
        pd = decomposition.extended_layering_best(g, prune=args.prune_bags)
        layout = bandwidth.layout_from_decomposition(g, pd, cap=args.cap or bandwidth.DEFAULT_EXACT_CAP)
        extra["length"] = pd.length
        factor = lambda bw: pd.length * bw
    elif method == "atfree":
        layout = atfree.atfree_layout(g, force=args.force)
        factor = lambda bw: 4 * bw
    else:
        layout = oracle.optimal_layout(g, cap=args.cap or oracle.BANDWIDTH_SEARCH_CAP)
        factor = lambda bw: bw
    payload = layout.certificate()
    payload.update(extra, graph=_graph_json(g), method=method)
    if args.bound:
        bw, basis = _bw_basis(g)
        payload.update(bound=factor(bw), bound_basis=basis)
    _emit(out, payload)
    return EXIT_OK


def cmd_distortion(args, stdin: TextIO, out: TextIO) -> int:
    g = parse_graph(stdin.read())
    method = args.method
    extra: dict = {}
    if method in ("dompath", "dompath-fast"):
        p = _dominating_path(g, method == "dompath-fast")
        emb = distortion.embedding_from_dominating_path(g, p)
        extra["path"], extra["k"] = list(p.vertices), p.radius
        factor = lambda ld: distortion.dominating_path_bound(p.radius, ld)
    elif method == "atfree":
        emb = atfree.atfree_embedding(g, force=args.force)
        factor = lambda ld: 8 * ld
    else:
        emb = oracle.optimal_line_embedding(g, cap=args.cap or oracle.DISTORTION_CAP)
        factor = lambda ld: ld
    payload = emb.certificate()
    payload.update(extra, graph=_graph_json(g), method=method)
    if args.bound:
        ld, basis = _ld_basis(g)
        payload.update(bound=factor(ld), bound_basis=basis)
    _emit(out, payload)
    return EXIT_OK


def cmd_dompath(args, stdin: TextIO, out: TextIO) -> int:
    g = parse_graph(stdin.read())
    p = _dominating_path(g, args.method == "fast")
    payload = p.certificate()
    payload.update(graph=_graph_json(g), method=args.method)
    _emit(out, payload)
    return EXIT_OK


def cmd_dompair(args, stdin: TextIO, out: TextIO) -> int:
    g = parse_graph(stdin.read())
    payload = domination.min_dominating_pair(g).certificate()
    payload["graph"] = _graph_json(g)
    _emit(out, payload)
    return EXIT_OK


def cmd_oracle(args, stdin: TextIO, out: TextIO) -> int:
    g = parse_graph(stdin.read())
    q = args.quantity
    if q == "bandwidth":
        value = oracle.exact_bandwidth(g, method=args.method or "bnb", cap=args.cap)
    elif q == "distortion":
        value = oracle.exact_line_distortion(g, method=args.method or "search", cap=args.cap)
    elif q == "path-length":
        value = oracle.exact_path_length(g, method=args.method or "dp", cap=args.cap or oracle.PATH_CAP)
    else:
        value = oracle.exact_path_breadth(g, method=args.method or "dp", cap=args.cap or oracle.PATH_CAP)
    _emit(out, {q.replace("-", "_"): value})
    return EXIT_OK


# ------------------------------------------------------------------------ verify


def _infer_kind(cert: dict) -> str:
    for key, kind in (("bags", "decomposition"), ("bandwidth", "layout"), ("distortion", "embedding"),
                      ("path", "dompath"), ("pair", "dompair")):
        if key in cert:
            return kind
    raise UsageError("cannot tell what kind of certificate this is")


def _verify_decomposition(g: Graph, cert: dict) -> dict:
    pd = PathDecomposition.from_bags(g, cert["bags"])
    report = decomposition.validate(pd)
    if not report:
        return report.as_dict()
    m = pd.metrics
    for key, actual in (("length", m.length), ("breadth", m.breadth)):
        if key in cert and cert[key] != actual:
            return _failure(f"{key}-mismatch", f"stated {key} {cert[key]} but actual is {actual}")
    if "centers" in cert:
        radius = cert.get("breadth", m.breadth)
        centers = cert["centers"]
        if len(centers) != len(pd.bags):
            return _failure("centers", "one center per bag required")
        for i, (c, bag) in enumerate(zip(centers, pd.bags)):
            if not 0 <= c < g.n or any(g.dist[c][u] > radius for u in bag):
                return _failure("centers", f"bag {i} is not inside the disk of radius {radius} around {c}")
    return {"valid": True, "length": m.length, "breadth": m.breadth}


def _verify_layout(g: Graph, cert: dict) -> dict:
    try:
        actual = bandwidth.layout_bandwidth(g, cert["positions"])
    except ValueError as exc:
        return _failure("bijection", str(exc))
    if cert.get("bandwidth", actual) != actual:
        return _failure("bandwidth-mismatch", f"stated {cert['bandwidth']} but actual is {actual}")
    return {"valid": True, "bandwidth": actual}


def _verify_embedding(g: Graph, cert: dict) -> dict:
    raw = cert["positions"]
    positions = {int(v): x for v, x in raw.items()} if isinstance(raw, dict) else dict(enumerate(raw))
    if sorted(positions) != list(range(g.n)):
        return _failure("domain", "positions must cover every vertex exactly once")
    try:
        actual = distortion.embedding_distortion(g, positions)
    except distortion.ContractionError as exc:
        return _failure("contraction", str(exc), list(exc.pair))
    except ValueError as exc:
        return _failure("injective", str(exc))
    if cert.get("distortion", actual) != actual:
        return _failure("distortion-mismatch", f"stated {cert['distortion']} but actual is {actual}")
    return {"valid": True, "distortion": actual}


def _verify_dompath(g: Graph, cert: dict) -> dict:
    p = domination.DominatingPath(tuple(cert["path"]), cert["k"])
    try:
        domination.check_dominating_path(g, p)
    except domination.InvalidPathError as exc:
        return _failure("path", str(exc))
    return {"valid": True, "k": p.radius}


def _verify_dompair(g: Graph, cert: dict) -> dict:
    x, y = cert["pair"]
    if not domination.is_dominating_pair(g, x, y, cert["k"]):
        return _failure("pair", f"some {x},{y}-path is not {cert['k']}-dominating")
    return {"valid": True, "k": cert["k"]}


def _failure(violation: str, message: str, witness=None) -> dict:
    return {"valid": False, "violation": violation, "message": message, "witness": witness}


VERIFIERS = {
    "decomposition": _verify_decomposition,
    "layout": _verify_layout,
    "embedding": _verify_embedding,
    "dompath": _verify_dompath,
    "dompair": _verify_dompair,
}


def cmd_verify(args, stdin: TextIO, out: TextIO) -> int:
    try:
        cert = json.loads(stdin.read())
    except json.JSONDecodeError as exc:
        raise ParseError(f"certificate is not valid JSON: {exc}") from exc
    if not isinstance(cert, dict):
        raise ParseError("certificate must be a JSON object")
    if args.graph:
        with open(args.graph, encoding="utf-8") as fh:
            g = parse_graph(fh.read())
    elif "graph" in cert:
        g = build_graph(cert["graph"]["edges"], cert["graph"]["n"])
    else:
        raise UsageError("certificate has no embedded graph; pass --graph FILE")
    kind = args.kind or _infer_kind(cert)
    try:
        result = VERIFIERS[kind](g, cert)
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, GraphError):
            raise
        result = _failure("malformed", f"certificate does not fit a {kind}: {exc!r}")
    result["kind"] = kind
    _emit(out, result)
    return EXIT_OK if result["valid"] else EXIT_INVALID


# ------------------------------------------------------------------------ parser


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--seed", type=int, default=0, help="seed for every random choice")
    common.add_argument("--cap", type=int, default=None, help="vertex cap for exact computations")
    common.add_argument("--force", action="store_true", help="run AT-free methods on any graph")
    common.add_argument("--prune-bags", action="store_true", help="drop bags contained in a neighbour")
    common.add_argument("--bound", action="store_true", help="add the approximation guarantee")

    parser = _Parser(prog="pathlength", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, handler, help_text):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.set_defaults(handler=handler)
        return p

    p = add("gen", cmd_gen, "generate a graph (edge list) or an intersection model")
    p.add_argument("kind", choices=generators.KINDS + MODEL_KINDS)
    p.add_argument("n", type=int, nargs="?")
    p.add_argument("--spine", type=int)
    p.add_argument("--hair", type=int)
    p.add_argument("--p", type=float, default=None, help="edge probability")
    p.add_argument("--v-count", type=int, help="|V| for convex-bipartite models (default n)")

    for name, handler, methods, help_text in (
        ("decompose", cmd_decompose, DECOMPOSE_METHODS, "path-decomposition certificate"),
        ("bandwidth", cmd_bandwidth, BANDWIDTH_METHODS, "layout certificate"),
        ("distortion", cmd_distortion, DISTORTION_METHODS, "line-embedding certificate"),
        ("dompath", cmd_dompath, ("fast", "best"), "dominating shortest path"),
    ):
        p = add(name, handler, help_text)
        p.add_argument("method_arg", nargs="?", choices=methods, metavar="{" + "|".join(methods) + "}")
        p.add_argument("--method", choices=methods)

    add("dompair", cmd_dompair, "minimum-k dominating pair")

    p = add("verify", cmd_verify, "check a certificate read from stdin")
    p.add_argument("kind", nargs="?", choices=VERIFY_KINDS)
    p.add_argument("--graph", help="edge-list file, if the certificate embeds none")

    p = add("oracle", cmd_oracle, "exact value on a small graph")
    p.add_argument("quantity", choices=ORACLE_QUANTITIES)
    p.add_argument("--method", choices=("bnb", "enumerate", "search", "dp", "closure"))
    return parser


def run(argv: list[str] | None = None, stdin: TextIO | None = None, stdout: TextIO | None = None,
        stderr: TextIO | None = None) -> int:
    stdin = sys.stdin if stdin is None else stdin
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if hasattr(args, "method_arg"):
            if args.method_arg and args.method and args.method_arg != args.method:
                raise UsageError(f"conflicting methods {args.method_arg!r} and {args.method!r}")
            args.method = _require(args.method_arg or args.method, "method")
        return args.handler(args, stdin, stdout)
    except (UsageError, ParseError, GraphError, CapExceededError, atfree.NotATFreeError,
            atfree.ModelError, atfree.ConstructionError, OSError, ValueError) as exc:
        _emit(stderr, {"error": type(exc).__name__, "message": str(exc)})
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
