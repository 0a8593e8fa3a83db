"""
Команды CLI. Каждая cmd_* получает RunConfig, печатает результат и
возвращает код выхода: 0 если свойство выполнено, 1 если нарушено (отчёт в JSON).
"""
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional, TextIO

from ..config.settings import logger
from ..constructions import (
    BConstructionSpec, GridSpec, b_construction, bowtie, chain, grid_construction, k_ary_tree,
    theorem12_construction,
)
from ..errors import InvalidParameters, ParseError, StructureError, UnknownConstruction
from ..monoid import (
    MonoidPresentation, congruence_classes, distinct_rgf_check, left_cancellation_check,
    load_presentation, monoid_poset, s_family, stern_presentation,
)
from ..planar import (
    check_embedding, classify_merges, find_embedding, make_schedule, planar_construction,
    planar_rgf_check, to_dot,
)
from ..poset import are_isomorphic, is_meet_semilattice, loads, product, verify_upho
from ..poset.model import RankedPoset
from ..series import IntSeries, match_rational, parse_rational, rgf
from ..symfunc import davydov_check, ehrenborg_monomial, is_schur_positive, schur_expand
from . import ui
from .formatting import dump, poset_document, schur_lines, series_line, series_strings
from .splitter import parse_int_list, parse_subsets


@dataclass
class RunConfig:
    command: str
    construction: Optional[str] = None
    params: Dict[str, Any] = field(default_factory=dict)
    depth: Optional[int] = None
    min_depth: int = 3
    max_root_rank: int = 2
    fmt: str = "json"
    output: Optional[str] = None
    input: Optional[str] = None
    # для analyze: выбранные подотчёты
    checks: Dict[str, Any] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.depth is not None and self.depth < 1:
            raise InvalidParameters(f"--depth must be at least 1, got {self.depth}")


def _emit(text: str, output: Optional[str], stream: Optional[TextIO] = None) -> None:
    if output:
        Path(output).write_text(text + "\n", encoding="utf-8")
        logger.info(f"wrote {output}")
    else:
        print(text, file=stream or sys.stdout)


def _need_depth(config: RunConfig) -> int:
    if config.depth is None:
        raise InvalidParameters(f"construction {config.construction!r} needs --depth")
    return config.depth


def _read_poset(path: str) -> RankedPoset:
    try:
        return loads(Path(path).read_text(encoding="utf-8"))
    except OSError as e:
        raise ParseError(f"cannot read poset file {path}: {e}")


def presentation_for(config: RunConfig) -> MonoidPresentation:
    name = config.construction
    if name == "stern":
        return stern_presentation()
    if name == "sfamily":
        return s_family(parse_int_list(config.params.get("indices") or ""))
    if name == "monoid":
        path = config.params.get("relations")
        if not path:
            raise InvalidParameters("monoid construction needs --relations FILE")
        return load_presentation(path)
    raise InvalidParameters(f"{name!r} is not a monoid construction")


def build_construction(config: RunConfig) -> RankedPoset:
    name = config.construction
    p = config.params
    if name not in ui.CONSTRUCTIONS:
        raise UnknownConstruction(
            f"unknown construction {name!r}; known: {', '.join(ui.CONSTRUCTIONS)}")
    depth = _need_depth(config)

    if name in ui.WORD_CONSTRUCTIONS:
        return monoid_poset(presentation_for(config), depth)
    if name == "chain":
        return chain(depth)
    if name == "tree":
        return k_ary_tree(int(p.get("k") or 2), depth)
    if name == "bowtie":
        return bowtie(depth)
    if name == "grid":
        return grid_construction(GridSpec(tuple(parse_int_list(p.get("a") or "")), depth))
    if name == "bconstruction":
        b = parse_int_list(p.get("b") or "")
        if len(b) != 1:
            raise InvalidParameters("bconstruction needs a single --b")
        return b_construction(BConstructionSpec(tuple(parse_int_list(p.get("a") or "")), b[0], depth))
    if name == "theorem12":
        return theorem12_construction(
            parse_int_list(p.get("a") or ""), parse_int_list(p.get("b") or ""), depth)
    if name == "planar":
        b = parse_int_list(p.get("b") or "")
        if len(b) != 1:
            raise InvalidParameters("planar needs a single --b")
        return planar_construction(make_schedule(b[0], p.get("a_ranks") or {}), depth)
    # остаётся product-of
    left, right = p.get("left"), p.get("right")
    if not left or not right:
        raise InvalidParameters("product-of needs --left FILE and --right FILE")
    return product(_read_poset(left), _read_poset(right), depth)


def load_target(config: RunConfig) -> RankedPoset:
    if config.input:
        return _read_poset(config.input)
    if config.construction:
        return build_construction(config)
    raise InvalidParameters("give a poset with --input FILE or a construction name")


def _schur_document(r: IntSeries, degree: int) -> Dict[str, Any]:
    report = is_schur_positive(r, degree)
    return {
        "positive": report.positive,
        "witness": (
            {"degree": report.witness[0], "partition": list(report.witness[1]),
             "coefficient": str(report.witness[2])}
            if report.witness else None
        ),
        "expansions": {str(g.degree): schur_lines(g) for g in report.expansions},
    }


def cmd_construct(config: RunConfig) -> int:
    P = build_construction(config)
    if config.fmt == "dot":
        text = to_dot(P, name=config.construction.replace("-", "_"))
    elif config.fmt == "series":
        text = series_line(P.rank_sizes())
    elif config.fmt == "schur":
        lines: List[str] = []
        r = rgf(P)
        for n in range(1, P.depth):
            lines.append(f"# degree {n}")
            lines.extend(schur_lines(schur_expand(ehrenborg_monomial(r, n))))
        text = "\n".join(lines)
    else:
        text = dump(poset_document(P))
    _emit(text, config.output)
    return 0


def cmd_analyze(config: RunConfig) -> int:
    P = load_target(config)
    checks = config.checks
    report: Dict[str, Any] = {"rank_sizes": series_strings(P.rank_sizes())}
    failed = False

    if checks.get("rgf") or checks.get("match"):
        report["rgf"] = series_strings(rgf(P).to_list())
    if checks.get("match"):
        ok = match_rational(rgf(P), parse_rational(checks["match"]))
        report["match"] = ui.MATCH if ok else ui.MISMATCH
        failed |= not ok

    if checks.get("upho"):
        upho = verify_upho(P, config.min_depth, config.max_root_rank)
        report["upho"] = {
            "verdict": ui.PASS if upho.passed else ui.FAIL,
            "failures": upho.failures,
            "checked": len(upho.checked_roots),
        }
        failed |= not upho.passed

    if checks.get("meets"):
        pair = is_meet_semilattice(P)
        report["meets"] = {"semilattice": pair is None, "pair": list(pair) if pair else None}
        failed |= pair is not None

    if checks.get("merges"):
        try:
            info = classify_merges(P)
            recurrence = planar_rgf_check(P)
            report["merges"] = {
                "root_bifurcated": info.root_bifurcated,
                "bifurcated": info.bifurcated,
                "recurrence": recurrence,
            }
            failed |= not recurrence
        except StructureError as e:
            report["merges"] = {"error": str(e), "vertex": e.vertex}
            failed = True

    if checks.get("planar"):
        if P.embedding is not None:
            crossings = check_embedding(P)
            report["planar"] = {"crossings": [list(map(list, c)) for c in crossings]}
            failed |= bool(crossings)
        else:
            found = find_embedding(P)
            report["planar"] = {"embedding": [list(r) for r in found] if found else None}
            failed |= found is None

    if checks.get("schur") is not None:
        degree = checks["schur"]
        report["schur"] = _schur_document(rgf(P), degree)
        failed |= not report["schur"]["positive"]

    if checks.get("davydov"):
        ok = davydov_check(parse_rational(checks["davydov"]))
        report["davydov"] = ui.PASS if ok else ui.FAIL
        failed |= not ok

    if checks.get("cancellation"):
        pres = presentation_for(config)
        table = congruence_classes(pres, _need_depth(config))
        result = left_cancellation_check(pres, table.max_len, table=table)
        report["cancellation"] = {
            "verdict": ui.PASS if result.passed else ui.FAIL,
            "witness": list(result.witness) if result.witness else None,
        }
        failed |= not result.passed

    if checks.get("compare"):
        other = _read_poset(checks["compare"])
        iso = are_isomorphic(P, other)
        report["isomorphic"] = iso.isomorphic
        failed |= not iso.isomorphic

    report["verdict"] = ui.FAIL if failed else ui.PASS
    _emit(dump(report), config.output)
    return 1 if failed else 0


def cmd_separate(config: RunConfig) -> int:
    subsets = parse_subsets(config.params.get("subsets") or "")
    result = distinct_rgf_check(subsets, _need_depth(config))
    doc = {
        "subsets": [sorted(s) for s in result.subsets],
        "counts": [series_strings(c) for c in result.counts],
        "distinct": result.distinct,
        "coinciding": list(result.coinciding) if result.coinciding else None,
        "sharp_failures": [list(x) for x in result.sharp_failures],
        "verdict": ui.PASS if result.passed else ui.FAIL,
    }
    _emit(dump(doc), config.output)
    return 0 if result.passed else 1
