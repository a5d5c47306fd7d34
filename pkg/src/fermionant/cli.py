"""Command-line interface.

Structured results go to stdout as JSON (one document per run); a short
human-readable summary goes to stderr.  Values that can outgrow a double
(fermionants, immanants, polynomial coefficients, Tutte evaluations, cycle
counts) are serialized as decimal strings.

Exit status: 0 on success, 2 on input or parse errors, 3 on capacity
errors, 4 when ``verify`` finds an identity violation.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Any

from .errors import CapacityError, ConsistencyError, FormatError
from .graphio import read_graph, read_matrix, write_graph
from .graphpoly import circuit_partition_poly, tutte, tutte_subgraph_sum
from .graphs import Digraph, Multigraph, PlaneGraph
from .hamilton import count_hamiltonian_cycles, ham_parity_via_ferm2
from .matrixfn import fermionant, immanant
from .partitions import Partition
from .transforms import bicycle_dimension, line_digraph, medial
from .verify import Limits, verify_suite


def _read_text(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc}") from None


def _load_graph(path: str, *kinds: type) -> Any:
    graph = read_graph(_read_text(path))
    if isinstance(graph, kinds):
        return graph
    wanted = " or ".join(k.__name__ for k in kinds)
    raise FormatError(f"{path}: expected a {wanted} document, got {type(graph).__name__}")


def _emit(payload: dict[str, Any], summary: str) -> None:
    sys.stdout.write(json.dumps(payload, separators=(",", ":")) + "\n")
    sys.stderr.write(summary + "\n")


def _cmd_ferm(args: argparse.Namespace) -> int:
    matrix = read_matrix(_read_text(args.matrix))
    value = fermionant(matrix, args.k, args.algorithm)
    _emit(
        {"n": matrix.n, "k": args.k, "algorithm": args.algorithm, "fermionant": str(value)},
        f"Ferm_{args.k} of {matrix.n}x{matrix.n} matrix ({args.algorithm}) = {value}",
    )
    return 0


def _cmd_imm(args: argparse.Namespace) -> int:
    matrix = read_matrix(_read_text(args.matrix))
    shape = Partition.from_text(args.shape)
    value = immanant(matrix, shape)
    _emit(
        {"n": matrix.n, "shape": list(shape.parts), "immanant": str(value)},
        f"Imm_[{shape}] of {matrix.n}x{matrix.n} matrix = {value}",
    )
    return 0


def _cmd_tutte(args: argparse.Namespace) -> int:
    graph = _load_graph(args.graph, Multigraph, PlaneGraph)
    if isinstance(graph, PlaneGraph):
        graph = graph.graph
    poly = tutte_subgraph_sum(graph) if args.oracle else tutte(graph)
    payload: dict[str, Any] = {
        "num_vertices": graph.num_vertices,
        "num_edges": graph.num_edges,
        "oracle": bool(args.oracle),
        "polynomial": poly.to_json(),
    }
    summary = f"T(G; x, y) = {poly}"
    if args.at is not None:
        try:
            x_text, y_text = args.at.split(",")
            x, y = int(x_text), int(y_text)
        except ValueError:
            raise FormatError(f"--at expects two integers 'X,Y', got {args.at!r}") from None
        payload["at"] = [x, y]
        payload["value"] = str(poly(x, y))
        summary += f"; T({x},{y}) = {poly(x, y)}"
    _emit(payload, summary)
    return 0


def _cmd_circuit_poly(args: argparse.Namespace) -> int:
    graph = _load_graph(args.graph, Digraph)
    poly = circuit_partition_poly(graph)
    _emit(
        {"num_vertices": graph.num_vertices, "num_arcs": graph.num_arcs,
         "coefficients": poly.to_json()},
        f"j(G; z) = {poly}",
    )
    return 0


def _cmd_medial(args: argparse.Namespace) -> int:
    plane = _load_graph(args.graph, PlaneGraph)
    result = medial(plane)
    Path(args.out).write_text(write_graph(result), encoding="utf-8")
    _emit(
        {"num_vertices": result.num_vertices, "num_arcs": result.num_arcs, "out": args.out},
        f"medial graph: {result.num_vertices} vertices, {result.num_arcs} arcs -> {args.out}",
    )
    return 0


def _cmd_line_digraph(args: argparse.Namespace) -> int:
    graph = _load_graph(args.graph, Digraph)
    result = line_digraph(graph)
    Path(args.out).write_text(write_graph(result), encoding="utf-8")
    _emit(
        {"num_vertices": result.num_vertices, "num_arcs": result.num_arcs, "out": args.out},
        f"line digraph: {result.num_vertices} vertices, {result.num_arcs} arcs -> {args.out}",
    )
    return 0


def _cmd_bicycle_dim(args: argparse.Namespace) -> int:
    graph = _load_graph(args.graph, Multigraph, PlaneGraph)
    if isinstance(graph, PlaneGraph):
        graph = graph.graph
    dim = bicycle_dimension(graph)
    _emit({"dimension": dim}, f"bicycle space dimension = {dim}")
    return 0


def _cmd_ham_count(args: argparse.Namespace) -> int:
    graph = _load_graph(args.graph, Multigraph, PlaneGraph)
    if isinstance(graph, PlaneGraph):
        graph = graph.graph
    count = count_hamiltonian_cycles(graph)
    _emit({"count": str(count)}, f"hamiltonian cycles: {count}")
    return 0


def _cmd_ham_parity(args: argparse.Namespace) -> int:
    graph = _load_graph(args.graph, Multigraph, PlaneGraph)
    if isinstance(graph, PlaneGraph):
        graph = graph.graph
    parity = ham_parity_via_ferm2(graph)
    _emit({"parity": parity}, f"hamiltonian-cycle parity via Ferm_2: {parity}")
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    limits = Limits(max_n=args.max_n, max_edges=args.max_edges, trials=args.trials)
    report = verify_suite(args.seed, limits)
    payload = report.to_json()
    if args.json:
        sys.stdout.write(json.dumps(payload, indent=2) + "\n")
    else:
        sys.stdout.write(json.dumps(payload, separators=(",", ":")) + "\n")
    for line in report.summary_lines():
        sys.stderr.write(line + "\n")
    return 0 if report.all_passed else 4


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fermionant",
        description="Exact fermionants, immanants, graph polynomials and identity checks",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ferm", help="fermionant of a matrix")
    p.add_argument("--matrix", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--algorithm", choices=("brute", "dp", "immanants"), default="dp")
    p.set_defaults(fn=_cmd_ferm)

    p = sub.add_parser("imm", help="immanant of a matrix")
    p.add_argument("--matrix", required=True)
    p.add_argument("--shape", required=True, help='partition, e.g. "3,2,1"')
    p.set_defaults(fn=_cmd_imm)

    p = sub.add_parser("tutte", help="Tutte polynomial of a multigraph")
    p.add_argument("--graph", required=True)
    p.add_argument("--at", help="evaluate at integers X,Y")
    p.add_argument("--oracle", action="store_true", help="force the subgraph-sum route")
    p.set_defaults(fn=_cmd_tutte)

    p = sub.add_parser("circuit-poly", help="circuit-partition polynomial of an Eulerian digraph")
    p.add_argument("--graph", required=True)
    p.set_defaults(fn=_cmd_circuit_poly)

    p = sub.add_parser("medial", help="directed medial graph of a plane graph")
    p.add_argument("--graph", required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(fn=_cmd_medial)

    p = sub.add_parser("line-digraph", help="line digraph of a digraph")
    p.add_argument("--graph", required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(fn=_cmd_line_digraph)

    p = sub.add_parser("bicycle-dim", help="dimension of the bicycle space")
    p.add_argument("--graph", required=True)
    p.set_defaults(fn=_cmd_bicycle_dim)

    p = sub.add_parser("ham-count", help="number of Hamiltonian cycles")
    p.add_argument("--graph", required=True)
    p.set_defaults(fn=_cmd_ham_count)

    p = sub.add_parser("ham-parity", help="Hamiltonian-cycle parity via Ferm_2")
    p.add_argument("--graph", required=True)
    p.set_defaults(fn=_cmd_ham_parity)

    p = sub.add_parser("verify", help="run the identity-verification suite")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--max-n", type=int, default=Limits.max_n, dest="max_n")
    p.add_argument("--max-edges", type=int, default=Limits.max_edges, dest="max_edges")
    p.add_argument("--trials", type=int, default=Limits.trials)
    p.add_argument("--json", action="store_true", help="pretty-print the JSON report")
    p.set_defaults(fn=_cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except FormatError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except CapacityError as exc:
        sys.stderr.write(f"capacity error: {exc}\n")
        return 3
    except ConsistencyError as exc:
        sys.stderr.write(f"internal consistency failure: {exc}\n")
        return 1
    except ValueError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
