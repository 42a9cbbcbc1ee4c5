"""Command-line surface: means, tilings, react, enumerate, simulate, render.

Exit codes are a stable contract: 0 valid, 1 domain violation, 2 usage
error.  Reports are JSON on stdout; domain errors are JSON on stderr.
Every exact value is echoed in canonical text form next to a decimal
approximation flagged as approximate.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from fractions import Fraction
from pathlib import Path
from typing import Optional

from . import simulate as dynamics
from .elements import Reaction, enumerate_decompositions, validate_reaction
from .enclosure import Enclosure
from .field import FieldElement
from .proportion import (
    DEFAULT_TOLERANCE,
    MeanChain,
    chain_valid,
    construct_mean,
    two_mean_chain,
)
from .svg import dissection_svg
from .tiling import (
    Kind,
    cornford_scale,
    economical_equilateral,
    economical_square,
    revisited_scale,
    symmetry_order,
    timaeus_equilateral,
    timaeus_square,
    validate,
)

OUT_DIR_ENV = "STOICHEIA_OUT_DIR"
APPROX_DIGITS = 12

_SCI_RE = re.compile(r"^([+-]?\d+(?:\.\d+)?(?:/\d+)?)[eE]([+-]?\d+)$")


def parse_rational(text: str) -> Fraction:
    s = text.strip()
    m = _SCI_RE.match(s)
    if m:
        return Fraction(m.group(1)) * Fraction(10) ** int(m.group(2))
    return Fraction(s)


def _value_json(x: FieldElement) -> dict:
    return {"exact": str(x), "approx": x.approx(APPROX_DIGITS), "approximate_digits": APPROX_DIGITS}


def _enclosure_json(e: Enclosure) -> dict:
    mid = FieldElement(e.midpoint)
    return {
        "lo": str(e.lo),
        "hi": str(e.hi),
        "width": str(e.width),
        "approx": mid.approx(APPROX_DIGITS),
    }


def _term_json(term) -> dict:
    if isinstance(term, Enclosure):
        return {"enclosure": _enclosure_json(term)}
    return _value_json(term)


def _emit(payload: dict) -> None:
    print(json.dumps(payload, indent=2, sort_keys=True))


def _fail(kind: str, message: str) -> int:
    sys.stderr.write(json.dumps({"error": {"kind": kind, "message": message}}) + "\n")
    return 1


def _resolve_out(path: str) -> Path:
    base = os.environ.get(OUT_DIR_ENV)
    p = Path(path)
    if base and not p.is_absolute():
        return Path(base) / p
    return p


def _read_arg(text: str) -> str:
    if text.startswith("@"):
        return Path(text[1:]).read_text()
    return text


# -- means --------------------------------------------------------------------


def _cmd_means(args: argparse.Namespace) -> int:
    try:
        a = FieldElement.parse(args.a)
        b = FieldElement.parse(args.b)
    except ValueError as exc:
        sys.stderr.write(f"usage error: {exc}\n")
        return 2
    width = parse_rational(args.width)
    tolerance = parse_rational(args.tolerance)
    try:
        if args.double:
            chain = two_mean_chain(a, b, width)
            valid = chain_valid(chain, tolerance)
            report = {
                "kind": "double",
                "chain": [_term_json(t) for t in chain.terms],
                "valid": valid,
                "in_field": chain.exact,
            }
            if not chain.exact:
                _, c, _, _ = chain.terms
                target = a * a * b
                tlo, thi = target.bounds(width)
                cube = c.cube()
                residual = max(thi - cube.lo, cube.hi - tlo, Fraction(0))
                report["cube_residual_bound"] = str(residual)
        else:
            mean = construct_mean(a, b, width)
            chain = MeanChain((a, mean, b))
            report = {
                "kind": "single",
                "chain": [_term_json(t) for t in chain.terms],
                "valid": chain_valid(chain, tolerance),
                "in_field": isinstance(mean, FieldElement),
            }
            if isinstance(mean, Enclosure):
                report["enclosure"] = _enclosure_json(mean)
    except (ValueError, ZeroDivisionError) as exc:
        return _fail("domain", str(exc))
    _emit(report)
    return 0


# -- tilings / render -----------------------------------------------------------


def _build_tiling(target: str, construction: str, side: FieldElement):
    if construction == "economical":
        d = economical_square(side) if target == "square" else economical_equilateral(side)
        return d, None
    if construction == "timaeus":
        d = timaeus_square(side) if target == "square" else timaeus_equilateral(side)
        return d, None
    kind = Kind.ISOSCELES_RIGHT if target == "square" else Kind.HALF_EQUILATERAL
    if construction == "cornford":
        comp = cornford_scale(kind, 2 if kind is Kind.ISOSCELES_RIGHT else 3)
        return comp.dissection, comp
    comp = revisited_scale(kind)
    return comp.dissection, comp


def _piece_json(piece) -> dict:
    entry = {
        "vertices": [[str(v.x), str(v.y)] for v in piece.vertices],
        "area": _value_json(piece.area()),
    }
    if piece.kind is not None:
        entry["kind"] = piece.kind.value
        entry["scale"] = str(piece.scale)
    return entry


def _tiling_report(target: str, construction: str, d, comp, density: Fraction) -> dict:
    check = validate(d, density)
    report = {
        "target": target,
        "construction": construction,
        "mode": d.mode.value,
        "piece_count": len(d.pieces),
        "pieces": [_piece_json(p) for p in d.pieces],
        "target_area": _value_json(d.target_area()),
        "pieces_area": _value_json(d.pieces_area()),
        "validation": {
            "ok": check.ok,
            "violations": list(check.violations),
            "samples_checked": check.samples_checked,
        },
    }
    if comp is None:
        report["symmetry_order"] = symmetry_order(d)
        areas = sorted({str(p.area()) for p in d.pieces})
        report["piece_areas"] = areas
    else:
        report["side_ratio"] = _value_json(comp.side_ratio)
        report["area_ratio"] = _value_json(comp.area_ratio)
        report["basic_count"] = comp.basic_count
    return report


def _cmd_tilings(args: argparse.Namespace) -> int:
    try:
        side = FieldElement.parse(args.side)
    except ValueError as exc:
        sys.stderr.write(f"usage error: {exc}\n")
        return 2
    try:
        d, comp = _build_tiling(args.target, args.construction, side)
        report = _tiling_report(args.target, args.construction, d, comp, Fraction(1, args.grid))
    except (ValueError, ZeroDivisionError) as exc:
        return _fail("domain", str(exc))
    if args.svg:
        path = _resolve_out(args.svg)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(dissection_svg(d, args.pixel_scale))
        report["svg"] = str(path)
    _emit(report)
    return 0 if report["validation"]["ok"] else 1


def _cmd_render(args: argparse.Namespace) -> int:
    try:
        side = FieldElement.parse(args.side)
        d, _ = _build_tiling(args.target, args.construction, side)
    except (ValueError, ZeroDivisionError) as exc:
        return _fail("domain", str(exc))
    path = _resolve_out(args.out)
    path.parent.mkdir(parents=True, exist_ok=True)
    content = dissection_svg(d, args.pixel_scale)
    path.write_text(content)
    _emit({"written": str(path), "bytes": len(content.encode())})
    return 0


# -- react / enumerate ----------------------------------------------------------


def _parse_reaction(text: str) -> Reaction:
    raw = _read_arg(text).strip()
    if raw.startswith("{"):
        return Reaction.from_json(json.loads(raw))
    return Reaction.parse(raw)


def _cmd_react(args: argparse.Namespace) -> int:
    try:
        reaction = _parse_reaction(args.reaction)
    except (ValueError, KeyError, json.JSONDecodeError) as exc:
        sys.stderr.write(f"usage error: cannot parse reaction: {exc}\n")
        return 2
    check = validate_reaction(reaction)
    report = {"reaction": str(reaction), **check.to_json()}
    if check.ok:
        _emit(report)
        return 0
    sys.stderr.write(json.dumps(report, indent=2, sort_keys=True) + "\n")
    return 1


def _cmd_enumerate(args: argparse.Namespace) -> int:
    try:
        total = parse_rational(args.face_total)
        triples = enumerate_decompositions(
            total, integral_only=args.integral, denominator_bound=args.denominator_bound
        )
    except (ValueError, ZeroDivisionError) as exc:
        return _fail("domain", str(exc))
    rows = [[str(a), str(b), str(c)] for a, b, c in triples]
    report = {
        "face_total": str(total),
        "integral_only": args.integral,
        "denominator_bound": 1 if args.integral else args.denominator_bound,
        "count": len(rows),
        "triples": rows,
    }
    if args.csv:
        path = _resolve_out(args.csv)
        path.parent.mkdir(parents=True, exist_ok=True)
        lines = ["fire,air,water"] + [",".join(row) for row in rows]
        path.write_text("\n".join(lines) + "\n")
        report["csv"] = str(path)
    _emit(report)
    return 0


# -- simulate --------------------------------------------------------------------


def _parse_reactions(text: str) -> list[Reaction]:
    raw = _read_arg(text).strip()
    if raw.startswith("["):
        data = json.loads(raw)
        return [
            Reaction.parse(item) if isinstance(item, str) else Reaction.from_json(item)
            for item in data
        ]
    return [Reaction.parse(part) for part in raw.split(";") if part.strip()]


def _cmd_simulate(args: argparse.Namespace) -> int:
    try:
        state = dynamics.State.from_json(json.loads(_read_arg(args.state)))
        reactions = _parse_reactions(args.rules)
    except (ValueError, KeyError, json.JSONDecodeError) as exc:
        sys.stderr.write(f"usage error: cannot parse inputs: {exc}\n")
        return 2
    try:
        rules = dynamics.RuleSet(tuple(reactions))
        trace = dynamics.run(state, rules, args.steps, args.seed)
    except (ValueError, dynamics.InsufficientQuantityError) as exc:
        return _fail("domain", str(exc))
    report_obj = dynamics.conservation_report(trace)
    payload = {
        "seed": args.seed,
        "steps_requested": args.steps,
        "steps_run": len(trace.steps),
        "stopped_early": trace.stopped_early,
        "final": trace.final.to_json(),
        "conservation": report_obj.to_json(),
    }
    if args.trace:
        path = _resolve_out(args.trace)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(trace.to_jsonl())
        payload["trace"] = str(path)
    if args.csv:
        path = _resolve_out(args.csv)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(trace.csv_summary())
        payload["csv"] = str(path)
    _emit(payload)
    return 0 if report_obj.ok else 1


# -- parser ----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="stoicheia",
        description="Exact proportions, triangle dissections and element transformations.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    means = sub.add_parser("means", help="geometric mean or two-mean chain between a and b")
    means.add_argument("a")
    means.add_argument("b")
    group = means.add_mutually_exclusive_group()
    group.add_argument("--single", action="store_true", default=True)
    group.add_argument("--double", action="store_true")
    means.add_argument("--width", default="1e-9", help="enclosure width (rational)")
    means.add_argument("--tolerance", default=str(DEFAULT_TOLERANCE))
    means.set_defaults(func=_cmd_means)

    tilings = sub.add_parser("tilings", help="build and validate a construction")
    tilings.add_argument("target", choices=["square", "equilateral"])
    tilings.add_argument(
        "construction", choices=["economical", "timaeus", "cornford", "revisited"]
    )
    tilings.add_argument("--side", default="1", help="side length (economical/timaeus)")
    tilings.add_argument("--grid", type=int, default=64, help="covering grid density 1/N")
    tilings.add_argument("--svg", help="also write an SVG file")
    tilings.add_argument("--pixel-scale", type=int, default=160)
    tilings.set_defaults(func=_cmd_tilings)

    render = sub.add_parser("render", help="write an SVG of a construction")
    render.add_argument("target", choices=["square", "equilateral"])
    render.add_argument(
        "construction", choices=["economical", "timaeus", "cornford", "revisited"]
    )
    render.add_argument("--out", required=True)
    render.add_argument("--side", default="1")
    render.add_argument("--pixel-scale", type=int, default=160)
    render.set_defaults(func=_cmd_render)

    react = sub.add_parser("react", help="validate a transformation")
    react.add_argument("reaction", help='JSON, @file, or "1 water -> 1 fire + 2 air"')
    react.set_defaults(func=_cmd_react)

    enum = sub.add_parser("enumerate", help="decompositions of a face total")
    enum.add_argument("face_total")
    enum.add_argument("--integral", action="store_true")
    enum.add_argument("--denominator-bound", type=int, default=2)
    enum.add_argument("--csv", help="also write a CSV table")
    enum.set_defaults(func=_cmd_enumerate)

    sim = sub.add_parser("simulate", help="seeded run of reaction dynamics")
    sim.add_argument("--state", required=True, help='census JSON, e.g. {"water": 50}')
    sim.add_argument("--rules", required=True, help="rules JSON or ';'-joined shorthand")
    sim.add_argument("--steps", type=int, required=True)
    sim.add_argument("--seed", type=int, default=0)
    sim.add_argument("--trace", help="write the trace as JSON lines")
    sim.add_argument("--csv", help="write the per-step budget table")
    sim.set_defaults(func=_cmd_simulate)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
