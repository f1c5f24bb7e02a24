"""Drawing a double parsing as a path through the product of two tiles.

Rows of the grid are the entries of ``a`` (bottom to top), columns the
entries of ``b`` (left to right), one unit per entry.  Every entry of ``c``
becomes one unit segment:

* inside an a-tile and a b-tile: a diagonal of the cell it names, pointing
  along ``(beta, alpha)`` where ``alpha``/``beta`` are the tile orientations;
* inside an a-tile and a b-connector: a vertical unit on the right edge
  (connector after ``b``) or the left edge (after ``b^-1``);
* inside an a-connector and a b-tile: a horizontal unit on the top edge
  (after ``a``) or the bottom edge (after ``a^-1``).

Entries lying in two connectors at once, breaks in the path and repeated
segments mean the parsing has no such picture; that is reported as
``PathNotRepresentable``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .errors import NotADoubleParsing, PathNotRepresentable, UnsupportedFormat
from .parsing import Parsing, Span, parse, seams
from .words import check_expanded, component_spans, representatives

__all__ = [
    "Cell",
    "Corner",
    "ProductDiagram",
    "Segment",
    "build_diagram",
    "render",
]

Word = tuple[int, ...]
Point = tuple[int, int]


@dataclass(frozen=True)
class Segment:
    start: Point
    end: Point
    kind: str  # "diagonal" or "edge"
    signs: tuple[int, int] | None = None  # (epsilon, eta) on diagonals
    entry: int = 0  # index into c

    @property
    def midpoint2(self) -> Point:
        """Twice the midpoint, kept integral."""
        return (self.start[0] + self.end[0], self.start[1] + self.end[1])


@dataclass(frozen=True)
class Cell:
    """A component-level rectangle ``x0 <= x < x1``, ``y0 <= y < y1``."""

    row: int
    col: int
    x0: int
    x1: int
    y0: int
    y1: int
    white: bool


@dataclass(frozen=True)
class Corner:
    position: int  # number of entries of c before the corner
    point: Point
    kind: str  # "pure" or "mixed"


@dataclass
class ProductDiagram:
    a: Word
    b: Word
    c: Word
    parsing_a: Parsing
    parsing_b: Parsing
    row_components: list[tuple[int, int]]
    col_components: list[tuple[int, int]]
    cells: list[Cell]
    path: list[Segment]
    seams: list[Corner] = field(default_factory=list)

    @property
    def width(self) -> int:
        return len(self.b)

    @property
    def height(self) -> int:
        return len(self.a)

    @property
    def mixed_seams(self) -> list[Corner]:
        return [s for s in self.seams if s.kind == "mixed"]

    def vertical_traversals(self) -> int:
        return _traversals([s.end[1] for s in self.path], self.height)

    def horizontal_traversals(self) -> int:
        return _traversals([s.end[0] for s in self.path], self.width)

    def summary(self) -> dict:
        return {
            "width": self.width,
            "height": self.height,
            "segments": len(self.path),
            "vertical_traversals": self.vertical_traversals(),
            "horizontal_traversals": self.horizontal_traversals(),
            "mixed_seams": [s.position for s in self.mixed_seams],
            "pure_seams": [s.position for s in self.seams if s.kind == "pure"],
        }


def _traversals(coords: list[int], size: int) -> int:
    # count arrivals at the wall opposite the last one touched; start is on 0
    last, count = 0, 0
    for v in coords:
        if v in (0, size) and v != last:
            count += 1
            last = v
    return count


def _pick_parsing(c: Word, tile: Word, name: str) -> Parsing:
    for t in representatives(tile):
        p = parse(c, t)
        if p is not None:
            return p
    raise NotADoubleParsing(f"c does not parse with respect to {name} = {list(tile)}")


def _locate(spans: list[Span], n: int) -> list[tuple[Span, int]]:
    """For every entry of c: the span holding it and the offset inside."""
    out: list[tuple[Span, int]] = []
    for sp in spans:
        for k in range(sp.end - sp.start):
            out.append((sp, k))
    assert len(out) == n
    return out


def _cells(a: Word, b: Word) -> tuple[list, list, list[Cell]]:
    rows = component_spans(a)
    cols = component_spans(b)
    cells = []
    for i, (y0, y1) in enumerate(rows):
        for j, (x0, x1) in enumerate(cols):
            cells.append(Cell(i, j, x0, x1, y0, y1, (i + j) % 2 == 0))
    return rows, cols, cells


def build_diagram(a: Sequence[int], b: Sequence[int], c: Sequence[int]) -> ProductDiagram:
    """Lay out ``c`` as a path in ``a x b``.

    ``a`` and ``b`` may be replaced by whichever representative of their class
    ``c`` actually starts with; the diagram is labelled with that word.
    """
    c = check_expanded(c, "c")
    pa = _pick_parsing(c, check_expanded(a, "a"), "a")
    pb = _pick_parsing(c, check_expanded(b, "b"), "b")
    a, b = pa.tile, pb.tile
    H, W = len(a), len(b)
    loc_a = _locate(pa.spans(), len(c))
    loc_b = _locate(pb.spans(), len(c))

    path: list[Segment] = []
    for idx, ((sa, ka), (sb, kb)) in enumerate(zip(loc_a, loc_b)):
        if sa.kind == "tile" and sb.kind == "tile":
            alpha, beta = sa.orientation, sb.orientation
            row = ka if alpha == 1 else H - 1 - ka
            col = kb if beta == 1 else W - 1 - kb
            if sa.sign * sb.sign * b[col] != a[row]:
                raise PathNotRepresentable(f"entry {idx} has inconsistent cell labels")
            x0 = col if beta == 1 else col + 1
            y0 = row if alpha == 1 else row + 1
            path.append(Segment((x0, y0), (x0 + beta, y0 + alpha), "diagonal",
                                (sa.sign, sb.sign), idx))
        elif sa.kind == "tile":
            alpha = sa.orientation
            row = ka if alpha == 1 else H - 1 - ka
            # connector i follows b-tile i; even tiles are b, odd are b^-1
            x = W if sb.index % 2 == 0 else 0
            y0 = row if alpha == 1 else row + 1
            path.append(Segment((x, y0), (x, y0 + alpha), "edge", None, idx))
        elif sb.kind == "tile":
            beta = sb.orientation
            col = kb if beta == 1 else W - 1 - kb
            y = H if sa.index % 2 == 0 else 0
            x0 = col if beta == 1 else col + 1
            path.append(Segment((x0, y), (x0 + beta, y), "edge", None, idx))
        else:
            raise PathNotRepresentable(f"entry {idx} lies in an a-connector and a b-connector")

    if path[0].start != (0, 0) or path[-1].end != (W, H):
        raise PathNotRepresentable("path does not run corner to corner")
    seen = set()
    for prev, cur in zip(path, path[1:]):
        if prev.end != cur.start:
            raise PathNotRepresentable(f"path breaks before entry {cur.entry}")
    for s in path:
        key = frozenset((s.start, s.end))
        if key in seen:
            raise PathNotRepresentable(f"segment for entry {s.entry} is traversed twice")
        seen.add(key)

    corners = {(0, H): "mixed", (W, 0): "mixed", (0, 0): "pure", (W, H): "pure"}
    marks = [Corner(s.entry + 1, s.end, corners[s.end]) for s in path[:-1] if s.end in corners]
    expected = [(x.position, x.kind) for x in seams(c, pa, pb)]
    if [(m.position, m.kind) for m in marks] != expected:
        raise PathNotRepresentable("corner passages disagree with the seams of the parsings")

    rows, cols, cells = _cells(a, b)
    return ProductDiagram(a, b, c, pa, pb, rows, cols, cells, path, marks)


# ---------------------------------------------------------------- rendering

_UNIT = 24
_MARGIN = 40


def _sign(s: int) -> str:
    return "+" if s > 0 else "-"


def _svg(d: ProductDiagram) -> str:
    u, m = _UNIT, _MARGIN
    W, H = d.width, d.height
    width, height = W * u + 2 * m, H * u + 2 * m

    def X(x: float) -> str:
        return _num(m + x * u)

    def Y(y: float) -> str:
        return _num(m + (H - y) * u)

    s = d.summary()
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{width}" height="{height}" viewBox="0 0 {width} {height}">',
        "<title>path of c in a x b</title>",
        f"<desc>vertical-traversals={s['vertical_traversals']} "
        f"horizontal-traversals={s['horizontal_traversals']} "
        f"mixed-seams={len(s['mixed_seams'])} "
        f"a={_fmt(d.a)} b={_fmt(d.b)} c={_fmt(d.c)}</desc>",
        '<rect x="0" y="0" width="100%" height="100%" fill="white"/>',
        '<g id="cells">',
    ]
    for cell in d.cells:
        if not cell.white:
            out.append(
                f'<rect x="{X(cell.x0)}" y="{Y(cell.y1)}" width="{(cell.x1 - cell.x0) * u}" '
                f'height="{(cell.y1 - cell.y0) * u}" fill="#888"/>'
            )
    out.append("</g>")
    out.append('<g id="grid" stroke="#bbb" stroke-width="0.5">')
    for x in range(W + 1):
        out.append(f'<line x1="{X(x)}" y1="{Y(0)}" x2="{X(x)}" y2="{Y(H)}"/>')
    for y in range(H + 1):
        out.append(f'<line x1="{X(0)}" y1="{Y(y)}" x2="{X(W)}" y2="{Y(y)}"/>')
    out.append("</g>")
    out.append('<g id="components" stroke="black" stroke-width="1.5">')
    for x in sorted({x for span in d.col_components for x in span}):
        out.append(f'<line x1="{X(x)}" y1="{Y(0)}" x2="{X(x)}" y2="{Y(H)}"/>')
    for y in sorted({y for span in d.row_components for y in span}):
        out.append(f'<line x1="{X(0)}" y1="{Y(y)}" x2="{X(W)}" y2="{Y(y)}"/>')
    out.append("</g>")
    out.append('<g id="labels" font-family="monospace" font-size="10" text-anchor="middle">')
    for j, v in enumerate(d.b):
        out.append(f'<text x="{X(j + 0.5)}" y="{Y(-0.8)}">{v}</text>')
    for i, v in enumerate(d.a):
        out.append(f'<text x="{X(-0.8)}" y="{Y(i + 0.5)}">{v}</text>')
    out.append("</g>")
    out.append('<g id="path" stroke="red" stroke-width="2" stroke-linecap="round">')
    for seg in d.path:
        (x1, y1), (x2, y2) = seg.start, seg.end
        out.append(
            f'<line class="{seg.kind}" x1="{X(x1)}" y1="{Y(y1)}" x2="{X(x2)}" y2="{Y(y2)}"/>'
        )
    out.append("</g>")
    out.append('<g id="signs" font-family="monospace" font-size="7" fill="blue" text-anchor="middle">')
    for seg in d.path:
        if seg.signs:
            mx, my = seg.midpoint2
            label = f"({_sign(seg.signs[0])},{_sign(seg.signs[1])})"
            out.append(f'<text x="{X(mx / 2)}" y="{Y(my / 2)}">{label}</text>')
    out.append("</g>")
    out.append('<g id="seams">')
    for c in d.seams:
        color = "blue" if c.kind == "mixed" else "green"
        out.append(
            f'<circle class="{c.kind}-seam" data-position="{c.position}" '
            f'cx="{X(c.point[0])}" cy="{Y(c.point[1])}" r="5" fill="none" '
            f'stroke="{color}" stroke-width="2"/>'
        )
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"


def _num(v: float) -> str:
    return str(int(v)) if float(v).is_integer() else f"{v:.1f}"


def _fmt(w: Sequence[int]) -> str:
    return "[" + ",".join(str(x) for x in w) + "]"


def _ascii(d: ProductDiagram) -> str:
    W, H = d.width, d.height
    rows, cols = 2 * H + 1, 2 * W + 1
    grid = [[" "] * cols for _ in range(rows)]

    def put(x2: int, y2: int, ch: str) -> None:
        grid[rows - 1 - y2][x2] = ch

    for y in range(H + 1):
        for x in range(W + 1):
            put(2 * x, 2 * y, ".")
    for cell in d.cells:
        if not cell.white:
            for y in range(cell.y0, cell.y1):
                for x in range(cell.x0, cell.x1):
                    put(2 * x + 1, 2 * y + 1, "#")
    for seg in d.path:
        mx, my = seg.midpoint2
        if seg.kind == "edge":
            put(mx, my, "|" if seg.start[0] == seg.end[0] else "-")
        else:
            dx = seg.end[0] - seg.start[0]
            dy = seg.end[1] - seg.start[1]
            ch = "/" if dx * dy > 0 else "\\"
            cur = grid[rows - 1 - my][mx]
            put(mx, my, "X" if cur in "/\\" and cur != ch else ch)
    for c in d.seams:
        put(2 * c.point[0], 2 * c.point[1], "M" if c.kind == "mixed" else "P")
    put(0, 0, "S")
    put(2 * W, 2 * H, "E")

    s = d.summary()
    lines = [
        f"a = {_fmt(d.a)}  (rows, bottom to top)",
        f"b = {_fmt(d.b)}  (columns, left to right)",
        f"c = {_fmt(d.c)}",
        f"vertical traversals: {s['vertical_traversals']}",
        f"horizontal traversals: {s['horizontal_traversals']}",
        f"mixed seams: {len(s['mixed_seams'])} at {s['mixed_seams']}",
        "",
    ]
    lines.extend("".join(r).rstrip() for r in grid)
    return "\n".join(lines) + "\n"


def render(d: ProductDiagram, format: str = "svg") -> bytes:
    """Serialize a diagram as SVG 1.1 or plain-text art; output is deterministic."""
    if format == "svg":
        return _svg(d).encode("utf-8")
    if format == "ascii":
        return _ascii(d).encode("utf-8")
    raise UnsupportedFormat(f"unknown diagram format {format!r} (use svg or ascii)")
