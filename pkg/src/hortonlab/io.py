"""Point-set file format and the JSON envelope.

The text format is one point per line, two base-10 signed integers separated
by a space, with optional '#' comment lines.  Coordinates round-trip at any
magnitude because everything stays decimal text.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Optional, Sequence

from .constructions import drawing_size
from .errors import PointFileError
from .exact import Point


def parse_points(text: str) -> list[Point]:
    points: list[Point] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise PointFileError(f"line {lineno}: expected 'x y', got {raw!r}")
        try:
            points.append((int(parts[0]), int(parts[1])))
        except ValueError as exc:
            raise PointFileError(f"line {lineno}: not an integer pair: {raw!r}") from exc
    return points


def serialize_points(points: Sequence[Point], header: Sequence[str] = ()) -> str:
    lines = [f"# {h}" for h in header]
    lines.extend(f"{x} {y}" for x, y in points)
    return "\n".join(lines) + "\n"


def load_points(path: str | Path) -> list[Point]:
    return parse_points(Path(path).read_text(encoding="utf-8"))


def save_points(path: str | Path, points: Sequence[Point], header: Sequence[str] = ()) -> None:
    Path(path).write_text(serialize_points(points, header), encoding="utf-8")


def json_envelope(
    points: Sequence[Point],
    construction: Optional[str] = None,
    analysis: Optional[dict] = None,
) -> dict:
    """JSON-ready record of a drawing: coordinates and size as decimal strings
    (they outgrow 64-bit), k only when the count is a power of two."""
    n = len(points)
    env: dict = {"n": n}
    if n > 0 and n & (n - 1) == 0:
        env["k"] = n.bit_length() - 1
    if construction is not None:
        env["construction"] = construction
    env["size"] = str(drawing_size(points))
    env["points"] = [[str(x), str(y)] for x, y in points]
    if analysis is not None:
        env["analysis"] = analysis
    return env


def dump_envelope(env: dict) -> str:
    return json.dumps(env, indent=2) + "\n"
