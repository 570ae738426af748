"""Command-line interface.

    alontarsi analyze GRAPH
    alontarsi certify GRAPH --mode at3-forest -o cert.json
    alontarsi verify GRAPH CERT
    alontarsi decompose GRAPH -o tree.json
    alontarsi gen --kind cliquesum --n 12 --seed 7 -o g.txt

Exit codes: 0 success, 1 certificate rejected, 2 unreadable input,
3 K5 minor found, 4 resource limit, 5 internal contract failure.
Diagnostics go to standard error.
"""
from __future__ import annotations

import argparse
import json
import random
import sys
from typing import Optional, Sequence

from .certifier import DEFAULT_AT_LIMIT, DEFAULT_ENUMERATION_LIMIT, alon_tarsi_witness, degeneracy_bound
from .constructor import Certificate, Mode, solve, verify_certificate
from .corpus import KINDS, generate
from .decomposer import K5Verdict, decompose, sumtree_to_dict
from .decomposer.planarity import is_planar
from .errors import (ContractViolation, GraphFormatError, K5MinorError, MalformedInputError, PreconditionError,
                     ResourceLimitError)
from .graph import Graph, Signature, format_graph, parse_graph

EXIT_OK, EXIT_REJECT, EXIT_PARSE, EXIT_K5, EXIT_LIMIT, EXIT_INTERNAL = 0, 1, 2, 3, 4, 5


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _write(path: Optional[str], text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _load_graph(path: str, signed: bool) -> tuple[Graph, Optional[Signature]]:
    g, sig = parse_graph(_read(path))
    if signed and sig is None:
        sig = Signature.all_positive(g)
    if not signed:
        sig = None
    return g, sig


def _verdict_payload(verdict: K5Verdict) -> str:
    payload = {
        "verdict": "K5 minor",
        "reason": verdict.reason,
        "piece": {"vertices": list(verdict.piece.vertices), "edges": [list(e) for e in verdict.piece.sorted_edges]},
    }
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def cmd_analyze(args) -> int:
    g, sig = _load_graph(args.graph, args.signed)
    print(f"vertices={g.vertex_count} edges={g.edge_count}")
    print(f"degeneracy={degeneracy_bound(g) - 1}")
    print(f"planar={'yes' if is_planar(g) else 'no'}")
    if g.edge_count > args.at_limit:
        print(f"AT=unknown (more than {args.at_limit} edges)")
        return EXIT_OK
    k, vector = alon_tarsi_witness(g, sig, limit=args.at_limit)
    print(f"AT={k}")
    print("witness outdegrees=" + " ".join(str(vector[v]) for v in g.vertices))
    return EXIT_OK


def cmd_certify(args) -> int:
    g, sig = _load_graph(args.graph, args.signed)
    cert = solve(g, Mode(args.mode), sig=sig, exact_limit=args.exact_limit)
    _write(args.output, cert.to_json())
    verdict = verify_certificate(g, cert, args.exact_limit, sig)
    print(f"certified {args.mode}: max out-degree {cert.max_out_degree()}, |removed|={len(cert.removed)}, "
          f"{verdict.reason}", file=sys.stderr)
    return EXIT_OK


def cmd_verify(args) -> int:
    g, sig = _load_graph(args.graph, args.signed)
    try:
        cert = Certificate.from_json(_read(args.certificate))
    except MalformedInputError as exc:
        print(f"reject: {exc}")
        return EXIT_REJECT
    verdict = verify_certificate(g, cert, args.exact_limit, sig)
    checks = ", ".join(verdict.checks)
    print(f"{'accept' if verdict.accepted else 'reject'}: {verdict.reason} [checks: {checks}]")
    return EXIT_OK if verdict.accepted else EXIT_REJECT


def cmd_decompose(args) -> int:
    g, _ = parse_graph(_read(args.graph))
    trees = []
    for comp in g.components():
        out = decompose(g.induced(comp))
        if isinstance(out, K5Verdict):
            raise K5MinorError(out)
        trees.append(sumtree_to_dict(out))
    _write(args.output, json.dumps({"components": trees}, sort_keys=True, indent=2) + "\n")
    return EXIT_OK


def cmd_gen(args) -> int:
    try:
        g = generate(args.kind, args.n, args.seed)
    except ValueError as exc:
        raise PreconditionError(str(exc)) from None
    sig = Signature.random(g, random.Random(args.seed)) if args.signed else None
    _write(args.output, format_graph(g, sig))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="alontarsi", description="Alon-Tarsi certificates for K5-minor-free graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, graph=True):
        if graph:
            p.add_argument("graph", help="graph file ('-' for standard input)")
        p.add_argument("--signed", action="store_true",
                       help="use the signs in the graph file (all positive if it has none)")
        p.add_argument("--exact-limit", type=int, default=DEFAULT_ENUMERATION_LIMIT,
                       help="largest edge count for exact parity counting (default %(default)s)")
        p.add_argument("-o", "--output", default=None, help="output path ('-' or omitted for standard output)")

    p = sub.add_parser("analyze", help="exact AT number and degeneracy of a small graph")
    common(p)
    p.add_argument("--at-limit", type=int, default=DEFAULT_AT_LIMIT)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("certify", help="write a certificate for the chosen mode")
    common(p)
    p.add_argument("--mode", choices=[m.value for m in Mode], default=Mode.AT5.value)
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("verify", help="check a certificate against a graph")
    common(p)
    p.add_argument("certificate", help="certificate JSON file")
    p.add_argument("--mode", choices=[m.value for m in Mode], default=None,
                   help="also require the certificate to be in this mode")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("decompose", help="write the clique-sum tree of every component")
    common(p)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("gen", help="write a reproducible corpus graph")
    common(p, graph=False)
    p.add_argument("--kind", choices=KINDS, required=True)
    p.add_argument("--n", type=int, default=10, help="number of vertices (upper bound for cliquesum)")
    p.add_argument("--seed", type=int, required=True)
    p.set_defaults(func=cmd_gen)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "exact_limit", 0) < 0:
        parser.error("--exact-limit must be nonnegative")
    try:
        if args.command == "verify" and args.mode is not None:
            cert_text = _read(args.certificate)
            try:
                if Certificate.from_json(cert_text).mode.value != args.mode:
                    print(f"reject: certificate is not in mode {args.mode}")
                    return EXIT_REJECT
            except MalformedInputError:
                pass  # reported by cmd_verify
        return args.func(args)
    except GraphFormatError as exc:
        print(f"error: {args.graph}: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (MalformedInputError, PreconditionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except K5MinorError as exc:
        _write(getattr(args, "output", None), _verdict_payload(exc.verdict))
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_K5
    except ResourceLimitError as exc:
        print(f"error: resource limit: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except ContractViolation as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
