import argparse
from typing import List, Optional, Sequence

from ..errors import InvalidParameters
from . import ui
from .commands import RunConfig, cmd_analyze, cmd_construct, cmd_separate
from .splitter import split_a_flags


def _add_construction_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--depth", type=int, help="number of ranks (maximal word length for monoids)")
    p.add_argument("--a", help="comma-separated a_i")
    p.add_argument("--b", help="comma-separated b_j (a single b for bconstruction/planar)")
    p.add_argument("--k", help="tree arity")
    p.add_argument("--relations", help="presentation file")
    p.add_argument("--indices", help="t_n indices for sfamily, e.g. 2,3")
    p.add_argument("--left", help="left factor (JSON poset) for product-of")
    p.add_argument("--right", help="right factor (JSON poset) for product-of")
    p.add_argument("--output", "-o", help="write to file instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="upho", description=ui.DESCRIPTION)
    sub = parser.add_subparsers(dest="command", required=True)

    construct = sub.add_parser("construct", help="build a poset", description=ui.CONSTRUCT_HELP)
    construct.add_argument("name", help=", ".join(ui.CONSTRUCTIONS))
    _add_construction_flags(construct)
    construct.add_argument("--format", choices=ui.FORMATS, default="json")
    construct.add_argument("--dot", action="store_true", help="same as --format dot")

    analyze = sub.add_parser("analyze", help="check properties of a poset")
    analyze.add_argument("name", nargs="?", help="inline construction instead of --input")
    analyze.add_argument("--input", "-i", help="JSON poset file")
    _add_construction_flags(analyze)
    analyze.add_argument("--rgf", action="store_true")
    analyze.add_argument("--match", help='rational function, e.g. "(1+x)(1+2x)/(1-x)"')
    analyze.add_argument("--upho", action="store_true")
    analyze.add_argument("--min-depth", type=int, default=3)
    analyze.add_argument("--max-root-rank", type=int, default=2)
    analyze.add_argument("--meets", action="store_true")
    analyze.add_argument("--merges", action="store_true")
    analyze.add_argument("--planar", action="store_true")
    analyze.add_argument("--schur", type=int, metavar="N")
    analyze.add_argument("--davydov", metavar="G/H")
    analyze.add_argument("--cancellation", action="store_true")
    analyze.add_argument("--compare", metavar="FILE", help="isomorphism test against a JSON poset")

    separate = sub.add_parser("separate", help="compare class counts of t_n relation subsets")
    separate.add_argument("--subsets", required=True, help=ui.SUBSETS_HELP)
    separate.add_argument("--depth", type=int, required=True, help="maximal word length")
    separate.add_argument("--output", "-o")

    monoid = sub.add_parser("monoid", help="monoid presentations")
    monoid_sub = monoid.add_subparsers(dest="action", required=True)
    build = monoid_sub.add_parser("build", help="poset of a presentation file")
    build.add_argument("--relations", required=True)
    build.add_argument("--depth", type=int, required=True, help="maximal word length")
    build.add_argument("--format", choices=ui.FORMATS, default="json")
    build.add_argument("--output", "-o")
    return parser


def to_config(args: argparse.Namespace, extra: Sequence[str]) -> RunConfig:
    a_ranks, rest = split_a_flags(extra)
    if rest:
        raise InvalidParameters(f"unrecognized arguments: {' '.join(rest)}")

    if args.command == "separate":
        return RunConfig("separate", params={"subsets": args.subsets}, depth=args.depth,
                         output=args.output)
    if args.command == "monoid":
        return RunConfig("construct", construction="monoid",
                         params={"relations": args.relations}, depth=args.depth,
                         fmt=args.format, output=args.output)

    params = {
        key: getattr(args, key)
        for key in ("a", "b", "k", "relations", "indices", "left", "right")
    }
    params["a_ranks"] = a_ranks
    config = RunConfig(args.command, construction=args.name, params=params, depth=args.depth,
                       output=args.output)
    if args.command == "construct":
        config.fmt = "dot" if args.dot else args.format
    else:
        config.input = args.input
        config.min_depth = args.min_depth
        config.max_root_rank = args.max_root_rank
        config.checks = {
            "rgf": args.rgf, "match": args.match, "upho": args.upho, "meets": args.meets,
            "merges": args.merges, "planar": args.planar, "schur": args.schur,
            "davydov": args.davydov, "cancellation": args.cancellation,
            "compare": args.compare,
        }
    return config


def route_command(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args, extra = parser.parse_known_args(argv)
    config = to_config(args, extra)
    if config.command == "construct":
        return cmd_construct(config)
    if config.command == "analyze":
        return cmd_analyze(config)
    return cmd_separate(config)
