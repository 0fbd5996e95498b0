"""Command-line front end.

Exit codes are a contract: 0 all checks passed, 1 a verified property failed,
2 usage or malformed input, 3 a resource cap was hit.  Caps can be overridden
with HORTONLAB_MAX_K (construction depth) and HORTONLAB_MAX_N (hole search).
"""

from __future__ import annotations

import argparse
import io as _io
import itertools
import json
import os
import sys
from pathlib import Path

from . import constructions
from .analysis import (
    MAX_HOLE_POINTS,
    count_empty_triangles,
    horton_violation,
    largest_empty_hole,
)
from .constructions import classic_horton, drawing_size, small_horton
from .errors import PointFileError, ResourceLimitError
from .exact import find_collinear_triple, orientation
from .io import dump_envelope, json_envelope, load_points, serialize_points
from .lowerbound import lower_bound_report


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError as exc:
        raise ValueError(f"environment variable {name} must be an integer, got {raw!r}") from exc


def cmd_generate(args) -> int:
    if args.k < 0:
        raise ValueError("k must be nonnegative")
    if args.construction == "small":
        cap = _env_int("HORTONLAB_MAX_K", constructions.MAX_SMALL_K)
        pts = small_horton(args.k, max_k=cap)
    else:
        cap = _env_int("HORTONLAB_MAX_K", constructions.MAX_CLASSIC_K)
        pts = classic_horton(args.k, max_k=cap)

    if args.format == "text":
        header = [
            f"construction={args.construction} k={args.k} n={len(pts)} size={drawing_size(pts)}",
        ]
        text = serialize_points(pts, header)
        if args.out:
            Path(args.out).write_text(text, encoding="utf-8")
        else:
            sys.stdout.write(text)
    elif args.format == "json":
        text = dump_envelope(json_envelope(pts, construction=args.construction))
        if args.out:
            Path(args.out).write_text(text, encoding="utf-8")
        else:
            sys.stdout.write(text)
    else:  # svg
        from .plotting import save_drawing_figure

        title = f"{args.construction} drawing, k={args.k}, n={len(pts)}"
        if args.out:
            save_drawing_figure(pts, args.out, fmt="svg", slab=args.slab, title=title)
        else:
            buf = _io.BytesIO()
            save_drawing_figure(pts, buf, fmt="svg", slab=args.slab, title=title)
            sys.stdout.write(buf.getvalue().decode("utf-8"))
    return 0


def _verify_one(check: str, pts, other_pts) -> tuple[bool, str]:
    if check == "horton":
        v = horton_violation(pts)
        if v is None:
            return True, "horton: PASS"
        return False, f"horton: FAIL ({v.describe()})"
    if check == "general-position":
        tri = find_collinear_triple(pts)
        if tri is None:
            return True, "general-position: PASS"
        i, j, k = tri
        return False, (
            f"general-position: FAIL (p{i}={pts[i]}, p{j}={pts[j]}, p{k}={pts[k]} are collinear)"
        )
    # order-type-equal
    if other_pts is None:
        raise ValueError("order-type-equal needs --other FILE")
    if len(pts) != len(other_pts):
        raise ValueError(f"size mismatch: {len(pts)} vs {len(other_pts)} points")
    for i, j, k in itertools.combinations(range(len(pts)), 3):
        sa = orientation(pts[i], pts[j], pts[k])
        sb = orientation(other_pts[i], other_pts[j], other_pts[k])
        if sa == 0 or sb == 0:
            raise ValueError(f"collinear triple ({i}, {j}, {k}): order type undefined")
        if sa != sb:
            return False, (
                f"order-type-equal: FAIL (triple ({i}, {j}, {k}) has orientation "
                f"{sa} vs {sb})"
            )
    return True, "order-type-equal: PASS"


def cmd_verify(args) -> int:
    pts = load_points(args.file)
    other = load_points(args.other) if args.other else None
    failures = 0
    for check in args.check:
        ok, message = _verify_one(check, pts, other)
        print(message)
        if not ok:
            failures += 1
    return 1 if failures else 0


def cmd_holes(args) -> int:
    pts = load_points(args.file)
    if args.mode == "triangles":
        print(f"empty_triangles: {count_empty_triangles(pts)}")
        return 0
    cap = _env_int("HORTONLAB_MAX_N", MAX_HOLE_POINTS)
    report = largest_empty_hole(pts, max_n=cap)
    print(f"max_hole: {report.max_hole}")
    print(f"witness: {' '.join(str(i) for i in report.witness)}")
    print(f"empty_triangles: {report.empty_triangle_count}")
    return 0


def cmd_lowerbound(args) -> int:
    pts = load_points(args.file)
    report = lower_bound_report(pts, args.t)

    print(f"n: {report.n}")
    print(f"k: {report.k}")
    print(f"t: {report.t}")
    print(f"size: {report.size}")
    print(f"reference_isothetic n^(1/8 log n): {report.isothetic_reference:.6g}")
    print(f"reference_general n^(1/24 log (n/2)): {report.general_reference:.6g}")
    if report.certificate is not None:
        print(f"certificate_bound: {report.certificate.bound}")
        print(f"certificate_reason: {report.certificate.reason}")
    if report.slab is not None:
        s = report.slab
        print(f"slab_lines: {s.l1} {s.l2} {s.l3} {s.l4}")
        print(f"gap_widths: d1={s.d1} d2={s.d2} span={s.span}")
    print(f"growth_inequalities_hold: {report.inequalities_hold}")
    if report.failing_nodes:
        print(f"failing_nodes: {report.failing_nodes}")
    cols = (
        "level\tnodes\tgirth1_min\tgirth1_max\tgirth4_min\tgirth4_max"
        "\twidth1_min\twidth1_max\twidth4_min\twidth4_max"
    )
    table = [cols]
    for ls in report.levels:
        table.append(
            "\t".join(
                str(v) if v is not None else "-"
                for v in (
                    ls.level, ls.nodes,
                    ls.girth1_min, ls.girth1_max, ls.girth4_min, ls.girth4_max,
                    ls.width1_min, ls.width1_max, ls.width4_min, ls.width4_max,
                )
            )
        )
    print("\n".join(table))

    if args.json:
        Path(args.json).write_text(json.dumps(report.to_dict(), indent=2) + "\n", encoding="utf-8")
    if args.csv:
        Path(args.csv).write_text("\n".join(table) + "\n", encoding="utf-8")
    if args.figure:
        from .plotting import save_report_figure

        save_report_figure(report, args.figure)
    return 0 if report.inequalities_hold in (True, None) else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="hortonlab",
        description="Generate, verify and measure integer-coordinate Horton set drawings.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("generate", help="emit a drawing as text, JSON or SVG")
    g.add_argument("-k", type=int, required=True, help="doubling depth; the drawing has 2^k points")
    g.add_argument("--construction", choices=["small", "classic"], default="small")
    g.add_argument("--format", choices=["text", "json", "svg"], default="text")
    g.add_argument("--out", type=Path, help="output file (default: stdout)")
    g.add_argument("--slab", action="store_true", help="overlay the analysis slab (SVG only)")
    g.set_defaults(func=cmd_generate)

    v = sub.add_parser("verify", help="check properties of a point-set file")
    v.add_argument("file", type=Path)
    v.add_argument(
        "--check",
        action="append",
        required=True,
        choices=["horton", "general-position", "order-type-equal"],
    )
    v.add_argument("--other", type=Path, help="second file for order-type-equal")
    v.set_defaults(func=cmd_verify)

    h = sub.add_parser("holes", help="largest empty hole or empty-triangle count")
    h.add_argument("file", type=Path)
    h.add_argument("--mode", choices=["max", "triangles"], default="max")
    h.set_defaults(func=cmd_holes)

    lb = sub.add_parser("lowerbound", help="slab, girth/width and growth-inequality report")
    lb.add_argument("file", type=Path)
    lb.add_argument("--t", type=int, default=2, help="measuring-line parameter (default 2)")
    lb.add_argument("--json", type=Path, help="also write the report as JSON")
    lb.add_argument("--csv", type=Path, help="also write the per-level table (TSV)")
    lb.add_argument("--figure", type=Path, help="also render the growth figure (by extension)")
    lb.set_defaults(func=cmd_lowerbound)

    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ResourceLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (PointFileError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def run() -> None:
    raise SystemExit(main())
