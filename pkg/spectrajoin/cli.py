"""
Command-line front end.

Usage:
    python -m spectrajoin join --kind ns --g1 P4 --g2 P2
    python -m spectrajoin charpoly --graph "C4+K1" --matrix A
    python -m spectrajoin spectrum --join nns K2 K1 --matrix A --method closed-form
    python -m spectrajoin verify --theorem 4.1a --random 50 --max-n 6 --seed 1
    python -m spectrajoin nics --template cor5.2 --inputs C4 C4 --found-pair
    python -m spectrajoin search --n 10 --r 4
    python -m spectrajoin reproduce --example all

JSON goes to stdout, logs to stderr. Exit code 0 when every check passed,
1 when a check failed, 2 on bad input or a violated precondition.
"""

import argparse
import json
import logging
import sys
from typing import Any, List, Optional

from dotenv import load_dotenv

from .config import AppConfig, settings
from .container import Container, create_container
from .core.exceptions import (
    CodecException,
    PreconditionException,
    SearchException,
    SpectraJoinException,
    ValidationException,
    VerificationException,
)
from .core.result import Result
from .core.validators import MatrixKindValidator, TemplateValidator
from .graphs.codecs import to_dot, to_graph6
from .graphs.graph import Graph, MatrixKind
from .graphs.isomorphism import are_isomorphic
from .graphs.matrices import build_matrix
from .graphs.spec_parser import try_parse_graph_spec
from .joins.operations import JoinKind, join
from .lab.cospectral import cospectral_verdicts, regular_equivalence_check
from .lab.factories import TEMPLATES, nics_pair
from .lab.probe import SIDES, conjecture_probe
from .lab import reproduce as reproduction
from .schemas import GraphSchema, PolySchema, SpectrumSchema
from .spectra.closed_forms import closed_form_spectrum
from .spectra.numeric import exact_charpoly, numeric_spectrum

logger = logging.getLogger(__name__)


def _emit(data: Any) -> None:
    json.dump(data, sys.stdout, indent=2)
    sys.stdout.write("\n")


def _graph(text: str) -> Graph:
    parsed: Result[Graph] = try_parse_graph_spec(text)
    if parsed.is_err():
        raise ValidationException(parsed.reason)
    return parsed.unwrap()


def _kind(text: str) -> MatrixKind:
    return MatrixKind(MatrixKindValidator.validate_kind(text))


def _target_graph(args) -> Graph:
    """The graph named by --graph, or the join named by --join KIND G1 G2."""
    if args.join:
        kind, g1, g2 = args.join
        return join(JoinKind.parse(kind), _graph(g1), _graph(g2))
    if args.graph is None:
        raise ValidationException("Either --graph or --join is required")
    return _graph(args.graph)


# ========================================
# Command handlers
# ========================================


def cmd_join(args, container: Container) -> int:
    joined = join(JoinKind.parse(args.kind), _graph(args.g1), _graph(args.g2))
    if args.out == "dot":
        sys.stdout.write(to_dot(joined))
    elif args.out == "json":
        _emit(GraphSchema().dump(joined))
    else:
        _emit({"graph6": to_graph6(joined), "n": joined.n, "edge_count": joined.edge_count})
    return settings.EXIT_OK


def cmd_matrix(args, container: Container) -> int:
    kind = _kind(args.matrix)
    matrix = build_matrix(_target_graph(args), kind)
    _emit({"kind": kind.value, "rows": matrix.row_strings()})
    return settings.EXIT_OK


def cmd_charpoly(args, container: Container) -> int:
    kind = _kind(args.matrix)
    poly = exact_charpoly(_target_graph(args), kind)
    _emit({"kind": kind.value, "charpoly": str(poly), **PolySchema().dump(poly)})
    return settings.EXIT_OK


def cmd_spectrum(args, container: Container) -> int:
    kind = _kind(args.matrix)
    numeric = container.resolve("config").numeric
    if args.method == "closed-form":
        if not args.join:
            raise ValidationException("--method closed-form needs --join KIND G1 G2")
        join_kind, g1, g2 = args.join
        spectrum = closed_form_spectrum(JoinKind.parse(join_kind), kind, _graph(g1), _graph(g2))
        graph = None
    else:
        graph = _target_graph(args)
        spectrum = numeric_spectrum(
            graph, kind, numeric.jacobi_tolerance, numeric.jacobi_max_sweeps,
            numeric.multiplicity_tolerance,
        )
    data = SpectrumSchema().dump(spectrum)
    data["violations"] = spectrum.invariant_violations(graph)
    _emit(data)
    return settings.EXIT_OK if not data["violations"] else settings.EXIT_CHECK_FAILED


def cmd_verify(args, container: Container) -> int:
    service = container.resolve("verification_service")
    verify = container.resolve("config").verify
    if args.random is not None:
        seed = args.seed if args.seed is not None else verify.default_seed
        max_n = args.max_n if args.max_n is not None else verify.default_max_n
        reports, stats = service.verify_random(args.theorem, args.random, max_n, seed)
        passed = sum(r["passed"] for r in reports)
        _emit({
            "theorem": args.theorem,
            "seed": seed,
            "passed": passed,
            "failed": len(reports) - passed,
            "trials": reports,
            "stats": stats.to_dict(),
        })
        return settings.EXIT_OK if passed == len(reports) else settings.EXIT_CHECK_FAILED

    if args.g1 is None or args.g2 is None:
        raise ValidationException("verify needs --g1 and --g2, or --random N")
    report = service.verify(args.theorem, _graph(args.g1), _graph(args.g2))
    _emit(report)
    return settings.EXIT_OK if report["passed"] else settings.EXIT_CHECK_FAILED


def cmd_nics(args, container: Container) -> int:
    template = TemplateValidator.validate_template(args.template)
    graphs = [_graph(text) for text in args.inputs]
    if args.found_pair:
        graphs.extend(container.resolve("search_service").first_pair(settings.SMALLEST_COSPECTRAL_REGULAR_ORDER))
    arity = TEMPLATES[template][3]
    if len(graphs) != arity:
        raise ValidationException(f"{template} takes {arity} graphs, got {len(graphs)}")
    _emit(nics_pair(template, graphs).to_dict())
    return settings.EXIT_OK


def cmd_search(args, container: Container) -> int:
    service = container.resolve("search_service")
    if args.r is None:
        results = service.search_all_degrees(args.n)
    else:
        results = [service.search(args.n, args.r)]

    out = []
    consistent = True
    for result in results:
        pairs = []
        for g, h in result.pair_graphs():
            agree = regular_equivalence_check(g, h)
            consistent = consistent and agree
            pairs.append({
                "graphs": [to_graph6(g), to_graph6(h)],
                "cospectral": cospectral_verdicts(g, h),
                "kinds_agree": agree,
            })
        out.append({"r": result.r, "classes": result.class_count, "pairs": pairs})
    _emit({
        "n": args.n,
        "determined_by_spectrum": all(not entry["pairs"] for entry in out),
        "results": out,
    })
    return settings.EXIT_OK if consistent else settings.EXIT_CHECK_FAILED


def cmd_iso(args, container: Container) -> int:
    isomorphic, witness = are_isomorphic(_graph(args.g1), _graph(args.g2))
    _emit({"isomorphic": isomorphic, "witness": witness})
    return settings.EXIT_OK


def cmd_probe(args, container: Container) -> int:
    if args.found_pair:
        pair = container.resolve("search_service").first_pair(settings.SMALLEST_COSPECTRAL_REGULAR_ORDER)
    elif args.pair:
        pair = (_graph(args.pair[0]), _graph(args.pair[1]))
    else:
        raise ValidationException("probe needs --pair F H or --found-pair")
    _emit(conjecture_probe(args.side, _graph(args.g), pair).to_dict())
    return settings.EXIT_OK


def cmd_reproduce(args, container: Container) -> int:
    config = container.resolve("config")
    table = reproduction.load_expected()
    known = list(table) + list(reproduction.FIGURES)
    if args.example != "all" and args.example not in known:
        raise ValidationException(f"Unknown example: {args.example}. Allowed: all, {', '.join(known)}")
    wanted = known if args.example == "all" else [args.example]

    reproduction.check_shared_charpoly()
    out: dict = {"shared_charpoly": str(reproduction.SHARED_CHARPOLY)}
    ok = True

    spectra_ids = [i for i in wanted if i in table]
    if spectra_ids:
        cospectral = reproduction.non_cospectral_joins()
        out["joins_still_cospectral"] = cospectral
        ok = ok and not any(cospectral.values())
        entries = [
            reproduction.compare_spectrum(table[i], config.numeric.reproduce_tolerance)
            for i in spectra_ids
        ]
        out["entries"] = [e.to_dict() for e in entries]
        ok = ok and all(e.passed for e in entries)

    figures = [i for i in wanted if i in reproduction.FIGURES]
    if figures:
        service = container.resolve("search_service")

        def provider():
            return service.first_pair(settings.SMALLEST_COSPECTRAL_REGULAR_ORDER)

        out["figures"] = {f: reproduction.reproduce_figure(f, provider).to_dict() for f in figures}

    _emit(out)
    return settings.EXIT_OK if ok else settings.EXIT_CHECK_FAILED


# ========================================
# Parser
# ========================================


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog=settings.APP_NAME,
        description="Spectra of neighbours-splitting and non-neighbours-splitting graph joins",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def target(p):
        p.add_argument("--graph", help="Graph spec, e.g. C4+K1, K1,4, g6:Ch")
        p.add_argument("--join", nargs=3, metavar=("KIND", "G1", "G2"), help="Use a join instead")

    p = sub.add_parser("join", help="Build a join")
    p.add_argument("--kind", default="ns", choices=settings.JOIN_KINDS)
    p.add_argument("--g1", required=True)
    p.add_argument("--g2", required=True)
    p.add_argument("--out", default="graph6", choices=("graph6", "json", "dot"))
    p.set_defaults(handler=cmd_join)

    p = sub.add_parser("matrix", help="Print an exact matrix")
    target(p)
    p.add_argument("--matrix", default="A")
    p.set_defaults(handler=cmd_matrix)

    p = sub.add_parser("charpoly", help="Exact characteristic polynomial")
    target(p)
    p.add_argument("--matrix", default="A")
    p.set_defaults(handler=cmd_charpoly)

    p = sub.add_parser("spectrum", help="Numeric or closed-form spectrum")
    target(p)
    p.add_argument("--matrix", default="A")
    p.add_argument("--method", default="direct", choices=("direct", "closed-form"))
    p.set_defaults(handler=cmd_spectrum)

    p = sub.add_parser("verify", help="Check a theorem on given or random inputs")
    p.add_argument("--theorem", required=True,
                   choices=settings.CHARPOLY_THEOREMS + settings.SPECTRUM_THEOREMS)
    p.add_argument("--g1")
    p.add_argument("--g2")
    p.add_argument("--random", type=int, metavar="N", help="Number of seeded random trials")
    p.add_argument("--max-n", type=int, help="Largest order of random inputs")
    p.add_argument("--seed", type=int)
    p.set_defaults(handler=cmd_verify)

    p = sub.add_parser("nics", help="Build and certify a NICS pair")
    p.add_argument("--template", required=True, choices=settings.NICS_TEMPLATES)
    p.add_argument("--inputs", nargs="*", default=[],
                   help="Graphs in template order: G F H, or G1 H1 G2 H2")
    p.add_argument("--found-pair", action="store_true",
                   help="Append the first 10-vertex cospectral regular pair to the inputs")
    p.set_defaults(handler=cmd_nics)

    p = sub.add_parser("search", help="Cospectral non-isomorphic regular graphs")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, help="Degree; all degrees when omitted")
    p.set_defaults(handler=cmd_search)

    p = sub.add_parser("iso", help="Isomorphism test with witness")
    p.add_argument("--g1", required=True)
    p.add_argument("--g2", required=True)
    p.set_defaults(handler=cmd_iso)

    p = sub.add_parser("probe", help="Experimental normalized-Laplacian probe")
    p.add_argument("--side", default=SIDES[0], choices=SIDES)
    p.add_argument("--g", required=True)
    p.add_argument("--pair", nargs=2, metavar=("F", "H"))
    p.add_argument("--found-pair", action="store_true")
    p.set_defaults(handler=cmd_probe)

    p = sub.add_parser("reproduce", help="Recompute published spectra and figures")
    p.add_argument("--example", default="all")
    p.set_defaults(handler=cmd_reproduce)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """Main entry point"""
    load_dotenv()
    args = build_parser().parse_args(argv)

    try:
        config = AppConfig.from_env()
    except ValueError as e:
        sys.stderr.write(f"Invalid configuration: {e}\n")
        return settings.EXIT_INPUT_ERROR

    logging.basicConfig(level=config.logging.level, format=config.logging.format, stream=sys.stderr)
    container = create_container(config)

    try:
        return args.handler(args, container)
    except VerificationException as e:
        logger.error(f"✗ Verification failed: {e}")
        _emit({"error": str(e), "type": "verification"})
        return settings.EXIT_CHECK_FAILED
    except (ValidationException, PreconditionException, CodecException, SearchException) as e:
        logger.error(f"✗ {e}")
        _emit({"error": str(e), "type": type(e).__name__})
        return settings.EXIT_INPUT_ERROR
    except SpectraJoinException as e:
        logger.error(f"✗ {e}")
        _emit({"error": str(e), "type": type(e).__name__})
        return settings.EXIT_CHECK_FAILED


if __name__ == "__main__":
    sys.exit(main())
