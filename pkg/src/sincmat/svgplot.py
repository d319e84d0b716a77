"""Minimal self-contained SVG rendering: histograms, curves, and panel grids.

No plotting dependency; every figure is a single static SVG document. All
coordinates are written with %.6g so output is reproducible across runs.
The only run-varying content allowed in a figure is the version comment on
line 2; file comparisons should strip it.
"""

from __future__ import annotations

import math

from ._version import __version__

_FONT = "font-family=\"monospace\" font-size=\"11\""
_BAR = "#4878a8"
_LINE = "#a83838"
_LINE2 = "#388038"
_MARK = "#202020"


def _f(v: float) -> str:
    return f"{v:.6g}"


def _doc(width: int, height: int, body: list[str]) -> str:
    head = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" '
        f'height="{height}" viewBox="0 0 {width} {height}">',
        f"<!-- sincmat {__version__} -->",
        f'<rect x="0" y="0" width="{width}" height="{height}" fill="white"/>',
    ]
    return "\n".join(head + body + ["</svg>"]) + "\n"


class _Frame:
    """Maps data coordinates into one axis-framed pixel rectangle."""

    def __init__(self, x0, y0, w, h, xlim, ylim, logy=False):
        self.x0, self.y0, self.w, self.h = x0, y0, w, h
        self.xa, self.xb = xlim
        self.ya, self.yb = ylim
        self.logy = logy
        if logy:
            self.ya, self.yb = math.log10(self.ya), math.log10(self.yb)
        if self.xb <= self.xa:
            self.xb = self.xa + 1.0
        if self.yb <= self.ya:
            self.yb = self.ya + 1.0

    def px(self, x):
        return self.x0 + (x - self.xa) / (self.xb - self.xa) * self.w

    def py(self, y):
        if self.logy:
            y = math.log10(max(y, 10.0 ** self.ya))
        return self.y0 + self.h - (y - self.ya) / (self.yb - self.ya) * self.h

    def axes(self, title="", xlabel="", ylabel=""):
        out = [f'<rect x="{_f(self.x0)}" y="{_f(self.y0)}" width="{_f(self.w)}" '
               f'height="{_f(self.h)}" fill="none" stroke="black" stroke-width="1"/>']
        ticks_x = (self.xa, 0.5 * (self.xa + self.xb), self.xb)
        for tx in ticks_x:
            px = self.px(tx)
            out.append(f'<line x1="{_f(px)}" y1="{_f(self.y0 + self.h)}" '
                       f'x2="{_f(px)}" y2="{_f(self.y0 + self.h + 4)}" stroke="black"/>')
            out.append(f'<text x="{_f(px)}" y="{_f(self.y0 + self.h + 16)}" '
                       f'text-anchor="middle" {_FONT}>{_f(tx)}</text>')
        for ty in (self.ya, self.yb):
            label = 10.0 ** ty if self.logy else ty
            py = self.y0 + self.h if ty == self.ya else self.y0
            out.append(f'<line x1="{_f(self.x0 - 4)}" y1="{_f(py)}" '
                       f'x2="{_f(self.x0)}" y2="{_f(py)}" stroke="black"/>')
            out.append(f'<text x="{_f(self.x0 - 6)}" y="{_f(py + 4)}" '
                       f'text-anchor="end" {_FONT}>{_f(label)}</text>')
        if title:
            out.append(f'<text x="{_f(self.x0 + self.w / 2)}" y="{_f(self.y0 - 8)}" '
                       f'text-anchor="middle" {_FONT}>{title}</text>')
        if xlabel:
            out.append(f'<text x="{_f(self.x0 + self.w / 2)}" '
                       f'y="{_f(self.y0 + self.h + 32)}" text-anchor="middle" '
                       f'{_FONT}>{xlabel}</text>')
        if ylabel:
            cx, cy = self.x0 - 40, self.y0 + self.h / 2
            out.append(f'<text x="{_f(cx)}" y="{_f(cy)}" text-anchor="middle" '
                       f'{_FONT} transform="rotate(-90 {_f(cx)} {_f(cy)})">{ylabel}</text>')
        return out

    def bars(self, edges, counts, color=_BAR):
        top = max(max(counts), 1)
        out = []
        for i, k in enumerate(counts):
            if k <= 0:
                continue
            x1, x2 = self.px(edges[i]), self.px(edges[i + 1])
            y = self.y0 + self.h * (1.0 - k / top)
            out.append(f'<rect x="{_f(x1)}" y="{_f(y)}" width="{_f(x2 - x1)}" '
                       f'height="{_f(self.y0 + self.h - y)}" fill="{color}" '
                       f'fill-opacity="0.8"/>')
        return out

    def polyline(self, xs, ys, color=_LINE):
        pts = " ".join(f"{_f(self.px(x))},{_f(self.py(y))}" for x, y in zip(xs, ys))
        return [f'<polyline points="{pts}" fill="none" stroke="{color}" '
                f'stroke-width="1.5"/>']

    def vmarks(self, xs, color=_MARK):
        out = []
        for x in xs:
            px = self.px(x)
            out.append(f'<line x1="{_f(px)}" y1="{_f(self.y0)}" x2="{_f(px)}" '
                       f'y2="{_f(self.y0 + self.h)}" stroke="{color}" '
                       f'stroke-width="1" stroke-dasharray="3,3"/>')
        return out


def svg_histogram(path, edges, counts, markers=(), title="", xlabel="",
                  ylabel="count", width=640, height=420):
    """One histogram; optional dashed vertical marker lines at given x."""
    fr = _Frame(60, 30, width - 90, height - 90,
                (float(edges[0]), float(edges[-1])),
                (0.0, float(max(max(counts), 1))))
    body = fr.axes(title, xlabel, ylabel)
    body += fr.bars(edges, counts)
    body += fr.vmarks(markers)
    _write(path, _doc(width, height, body))


def svg_curve(path, xs, ys, second=None, logy=False, title="", xlabel="",
              ylabel="", width=640, height=420):
    """Polyline plot; `second` adds a second (xs, ys) series in another color.

    logy uses a log10 axis; nonpositive values are floored at the axis bottom.
    """
    all_y = list(ys) + (list(second[1]) if second else [])
    if logy:
        pos = [y for y in all_y if y > 0] or [1e-16]
        ylim = (min(pos) * 0.5, max(pos) * 2.0)
    else:
        ylim = (min(all_y), max(all_y))
        if ylim[0] == ylim[1]:
            ylim = (ylim[0] - 0.5, ylim[1] + 0.5)
    fr = _Frame(70, 30, width - 100, height - 90,
                (float(min(xs)), float(max(xs))), ylim, logy=logy)
    body = fr.axes(title, xlabel, ylabel)
    body += fr.polyline(xs, ys)
    if second:
        body += fr.polyline(second[0], second[1], color=_LINE2)
    _write(path, _doc(width, height, body))


def svg_panel_grid(path, panels, ncols=2, panel_w=320, panel_h=240):
    """Grid of histogram panels: each panel is (edges, counts, title)."""
    n = len(panels)
    nrows = (n + ncols - 1) // ncols
    width, height = ncols * panel_w, nrows * panel_h
    body = []
    for i, (edges, counts, title) in enumerate(panels):
        r, col = divmod(i, ncols)
        fr = _Frame(col * panel_w + 50, r * panel_h + 28, panel_w - 70,
                    panel_h - 70, (float(edges[0]), float(edges[-1])),
                    (0.0, float(max(max(counts), 1))))
        body += fr.axes(title)
        body += fr.bars(edges, counts)
    _write(path, _doc(width, height, body))


def _write(path, text):
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write(text)
