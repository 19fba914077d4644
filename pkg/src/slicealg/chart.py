"""Integer-part page charts.

A chart shows the w = 0 column of a page: x is the underlying degree c,
y is the twist s, each nonzero cell is labeled with its group, and the
page's differential is drawn as arrows (c, s) -> (c - 1, s + r).  Output
is either a standalone SVG file or a fixed-width text grid; both are
deterministic byte for byte so charts can be diffed across runs.
"""

from __future__ import annotations

from .config import ConfigError, build_pages
from .graded import Window

# page name -> (pinned height or None, cell source, arrow table)
# cell sources: "start" is the raw start-page presentation, "model" the
# fourth-page presentation, "turned" its d7 homology.
PAGES = {
    "e2": (None, "start", "d3"),
    "e4": (None, "model", "d7"),
    "e8": (None, "turned", None),
    "ko": (1, "model", None),
}

DEFAULT_WINDOW = [24, 0, 26]


def chart_data(cfg: dict, page: str, height=None, window=None) -> dict:
    """Collect the nonzero cells and arrows for one page chart."""
    from .pages import page_at

    if page not in PAGES:
        raise ConfigError("chart.page", "unknown page %r (have %s)"
                          % (page, ", ".join(sorted(PAGES))))
    pinned, source, arrow_name = PAGES[page]
    if pinned is not None:
        height = pinned
    elif height is None:
        height = cfg.get("height", 2)
    if window is None:
        window = cfg.get("window") or DEFAULT_WINDOW
    if not isinstance(window, Window):
        window = Window(*window)

    pages = build_pages(cfg, height, window.max_underlying + 2)
    if source == "start":
        pres, diff = pages["e2"], None
    elif source == "model":
        pres, diff = pages["e4"], None
    else:
        pres, diff = pages["e4"], pages["d7"]
    arrows_from = pages[arrow_name] if arrow_name else None

    cells = []
    arrow_list = []
    for d in window.integer_degrees():
        if not pres.monomials_at(d):
            continue
        grp = page_at(pres, diff, d).group
        if grp.is_zero():
            continue
        cells.append((d.c, d.s, str(grp)))
        if arrows_from is not None:
            cols = arrows_from.columns_at(d)
            if any(any(col) for col in cols):
                shift = arrows_from.shift
                arrow_list.append((d.c, d.s, d.c + shift.c, d.s + shift.s))
    cells.sort()
    arrow_list.sort()
    return {
        "page": page,
        "height": height,
        "window": list(window),
        "differential": arrows_from.name if arrows_from is not None else None,
        "cells": cells,
        "arrows": arrow_list,
    }


def emit_chart(data: dict, path: str, fmt: str = "svg"):
    if fmt == "svg":
        body = _render_svg(data)
    elif fmt == "text":
        body = _render_text(data)
    else:
        raise ConfigError("chart.format", "unknown format %r" % fmt)
    try:
        with open(path, "w") as fh:
            fh.write(body)
    except OSError as exc:
        raise ConfigError("chart.out", "cannot write %r: %s" % (path, exc))


def _extent(data):
    cells = data["cells"]
    if not cells:
        return 0, 0, 0, 0
    cs = [c for c, _s, _g in cells]
    ss = [s for _c, s, _g in cells]
    return min(cs), max(cs), min(ss), max(ss)


def _title(data):
    return "%s page, height %d, window %s" % (
        data["page"], data["height"], data["window"])


def _render_text(data) -> str:
    lines = [_title(data)]
    if not data["cells"]:
        lines.append("(no nonzero cells)")
        return "\n".join(lines) + "\n"
    cmin, cmax, smin, smax = _extent(data)
    grid = {(c, s): g for c, s, g in data["cells"]}
    width = max(3, max(len(g) for g in grid.values()) + 1)
    header = "  s\\c " + "".join(str(c).rjust(width) for c in range(cmin, cmax + 1))
    lines.append(header)
    for s in range(smax, smin - 1, -1):
        row = "".join((grid.get((c, s), ".")).rjust(width)
                      for c in range(cmin, cmax + 1))
        lines.append(str(s).rjust(5) + " " + row)
    if data["differential"] is not None:
        lines.append("")
        lines.append("%s arrows:" % data["differential"])
        if data["arrows"]:
            for c, s, tc, ts in data["arrows"]:
                lines.append("  (%d, %d) -> (%d, %d)" % (c, s, tc, ts))
        else:
            lines.append("  (none)")
    return "\n".join(lines) + "\n"


CELL_W = 64
CELL_H = 30
MARGIN = 48


def _render_svg(data) -> str:
    cmin, cmax, smin, smax = _extent(data)
    ncols = cmax - cmin + 1
    nrows = smax - smin + 1
    w = 2 * MARGIN + ncols * CELL_W
    h = 2 * MARGIN + nrows * CELL_H

    def x(c):
        return MARGIN + (c - cmin) * CELL_W + CELL_W // 2

    def y(s):
        return MARGIN + (smax - s) * CELL_H + CELL_H // 2

    out = []
    out.append('<svg xmlns="http://www.w3.org/2000/svg" '
               'viewBox="0 0 %d %d" width="%d" height="%d">' % (w, h, w, h))
    out.append('<defs><marker id="arr" markerWidth="8" markerHeight="8" '
               'refX="6" refY="3" orient="auto">'
               '<path d="M0,0 L6,3 L0,6 z" fill="#c0392b"/></marker></defs>')
    out.append('<rect width="%d" height="%d" fill="#ffffff"/>' % (w, h))
    out.append('<text x="%d" y="20" font-family="monospace" font-size="13" '
               'fill="#222222">%s</text>' % (MARGIN, _esc(_title(data))))
    for c, s, tc, ts in data["arrows"]:
        if tc < cmin or ts > smax:
            continue
        out.append('<line x1="%d" y1="%d" x2="%d" y2="%d" stroke="#c0392b" '
                   'stroke-width="1.2" marker-end="url(#arr)"/>'
                   % (x(c), y(s), x(tc), y(ts)))
    for c, s, g in data["cells"]:
        out.append('<text x="%d" y="%d" font-family="monospace" '
                   'font-size="11" fill="#222222" text-anchor="middle" '
                   'dominant-baseline="middle">%s</text>'
                   % (x(c), y(s), _esc(g)))
    for c in range(cmin, cmax + 1):
        out.append('<text x="%d" y="%d" font-family="monospace" '
                   'font-size="10" fill="#888888" text-anchor="middle">%d</text>'
                   % (x(c), h - MARGIN // 2, c))
    for s in range(smin, smax + 1):
        out.append('<text x="%d" y="%d" font-family="monospace" '
                   'font-size="10" fill="#888888" text-anchor="middle" '
                   'dominant-baseline="middle">%d</text>'
                   % (MARGIN // 2, y(s), s))
    out.append("</svg>")
    return "\n".join(out) + "\n"


def _esc(text: str) -> str:
    return (text.replace("&", "&amp;").replace("<", "&lt;")
            .replace(">", "&gt;"))
