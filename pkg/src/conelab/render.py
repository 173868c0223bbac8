"""Poincare disk rendering for rank 3 lattices.

The orientation vector is completed to a rational orthogonal frame by
Gram-Schmidt (the complement of a positive vector is negative definite, so
the process never degenerates).  In frame coordinates the model is the
standard hyperboloid; walls become disk geodesics: circles orthogonal to
the boundary, or diameters when the wall contains the frame origin.

Floats appear only here, for drawing.  Output is deterministic: fixed
float format, fixed element order, no timestamps.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import InvalidArgument, RankNotThree, UnwritablePath
from .geometry import WalkTrace
from .lattice import Lattice, Vec

_FMT = "%.4f"
_ARC_SEGMENTS = 48
_MARGIN = 20.0


@dataclass(frozen=True)
class Scene:
    """What to draw: walls, labelled points, labelled cusps, a walk trace."""

    lattice: Lattice
    walls: tuple[Vec, ...] = ()
    points: tuple[tuple[str, Vec], ...] = ()
    cusps: tuple[tuple[str, Vec], ...] = ()
    trace: WalkTrace | None = None
    view: int = 300

    def __post_init__(self):
        if self.lattice.rank != 3:
            raise RankNotThree("disk rendering needs rank 3, got %d" % self.lattice.rank)
        object.__setattr__(self, "walls", tuple(tuple(w) for w in self.walls))
        object.__setattr__(
            self, "points", tuple((str(s), tuple(v)) for s, v in self.points)
        )
        object.__setattr__(
            self, "cusps", tuple((str(s), tuple(v)) for s, v in self.cusps)
        )


def _frame(L: Lattice):
    """Rational orthogonal frame (f0, f1, f2) with q(f0) > 0 > q(f1), q(f2)."""
    n = L.rank

    def pair_frac(u, w):
        return sum(
            Fraction(u[i]) * L.gram[i][j] * Fraction(w[j])
            for i in range(n)
            for j in range(n)
        )

    frame = [tuple(Fraction(c) for c in L.orientation)]
    squares = [pair_frac(frame[0], frame[0])]
    for k in range(n):
        e = tuple(Fraction(1 if i == k else 0) for i in range(n))
        g = list(e)
        for f, q in zip(frame, squares):
            c = pair_frac(e, f) / q
            for i in range(n):
                g[i] -= c * f[i]
        if any(g):
            gt = tuple(g)
            frame.append(gt)
            squares.append(pair_frac(gt, gt))
            if len(frame) == 3:
                break
    assert len(frame) == 3 and squares[0] > 0 > squares[1] and squares[2] < 0
    return frame, squares, pair_frac


def _nu(L, frame, squares, pair_frac, v):
    """Hyperboloid coordinates (u0, u1, u2) of v in the frame."""
    xs = [pair_frac(v, f) / q for f, q in zip(frame, squares)]
    u0 = float(xs[0]) * math.sqrt(float(squares[0]))
    u1 = float(xs[1]) * math.sqrt(float(-squares[1]))
    u2 = float(xs[2]) * math.sqrt(float(-squares[2]))
    # exact zero test for the wall-through-origin branch
    return (u0, u1, u2), xs[0] == 0


def _disk_point(L, geom, v):
    frame, squares, pair_frac = geom
    qv = L.quad(v)
    (u0, u1, u2), _ = _nu(L, frame, squares, pair_frac, v)
    if qv < 0:
        raise InvalidArgument("cannot place a negative vector in the disk: %r" % (v,))
    if u0 <= 0:
        raise InvalidArgument("vector %r lies on the negative side" % (v,))
    if qv == 0:
        w1, w2 = u1 / u0, u2 / u0
        h = math.hypot(w1, w2)
        return (w1 / h, w2 / h)
    s = math.sqrt(qv)
    return (u1 / (s + u0), u2 / (s + u0))


class _Doc:
    def __init__(self, view):
        self.view = float(view)
        self.size = 2.0 * (self.view + _MARGIN)
        self.parts = []

    def px(self, w):
        # disk coords in [-1,1]^2 to pixels, y flipped
        return (
            _MARGIN + self.view * (1.0 + w[0]),
            _MARGIN + self.view * (1.0 - w[1]),
        )

    def add(self, line):
        self.parts.append(line)

    def text(self):
        head = (
            '<svg xmlns="http://www.w3.org/2000/svg" width="%s" height="%s" '
            'viewBox="0 0 %s %s">' % ((_FMT % self.size,) * 4)
        )
        return "\n".join([head] + self.parts + ["</svg>"]) + "\n"


def _fmt_pt(p):
    return "%s,%s" % (_FMT % p[0], _FMT % p[1])


def _wall_path(L, geom, doc, v):
    frame, squares, pair_frac = geom
    if L.quad(v) >= 0:
        raise InvalidArgument("walls must have negative square, got %r" % (v,))
    (n0, n1, n2), n0_zero = _nu(L, frame, squares, pair_frac, v)
    if n0_zero:
        # wall contains the frame origin: a diameter perpendicular to (n1, n2)
        h = math.hypot(n1, n2)
        d = (-n2 / h, n1 / h)
        pts = [doc.px(d), doc.px((-d[0], -d[1]))]
    else:
        cx, cy = n1 / n0, n2 / n0
        cc = cx * cx + cy * cy
        # spacelike walls give cc > 1: the circle is orthogonal to the boundary
        a = 1.0 / math.sqrt(cc)
        ux, uy = cx * a, cy * a
        half = math.sqrt(max(1.0 - a * a, 0.0))
        r = math.sqrt(max(cc - 1.0, 0.0))
        p1 = (a * ux - half * uy, a * uy + half * ux)
        p2 = (a * ux + half * uy, a * uy - half * ux)
        th1 = math.atan2(p1[1] - cy, p1[0] - cx)
        th2 = math.atan2(p2[1] - cy, p2[0] - cx)
        thm = math.atan2(-uy, -ux)
        # sweep from th1 to th2 passing through thm (the arc inside the disk)
        twopi = 2.0 * math.pi
        d1 = (thm - th1) % twopi
        d2 = (th2 - th1) % twopi
        sweep = d2 if d1 <= d2 else d2 - twopi
        pts = []
        for k in range(_ARC_SEGMENTS + 1):
            th = th1 + sweep * k / _ARC_SEGMENTS
            pts.append(doc.px((cx + r * math.cos(th), cy + r * math.sin(th))))
    d_attr = "M %s" % _fmt_pt(pts[0]) + "".join(" L %s" % _fmt_pt(p) for p in pts[1:])
    doc.add(
        '<path class="geodesic" d="%s" fill="none" stroke="#444444" '
        'stroke-width="1.2"/>' % d_attr
    )


def render_disk(scene: Scene, out=None) -> str:
    """Render the scene to an SVG document; optionally write it to a file."""
    L = scene.lattice
    geom = _frame(L)
    doc = _Doc(scene.view)
    c = doc.px((0.0, 0.0))
    doc.add(
        '<circle class="boundary" cx="%s" cy="%s" r="%s" fill="none" '
        'stroke="#000000" stroke-width="1.5"/>'
        % (_FMT % c[0], _FMT % c[1], _FMT % doc.view)
    )
    for w in scene.walls:
        _wall_path(L, geom, doc, w)
    if scene.trace is not None:
        tr = scene.trace
        classes = [tr.start] + [s.image for s in tr.steps]
        pts = [doc.px(_disk_point(L, geom, v)) for v in classes]
        doc.add(
            '<polyline class="trace" points="%s" fill="none" stroke="#cc3300" '
            'stroke-width="1.0" stroke-dasharray="4,3"/>'
            % " ".join(_fmt_pt(p) for p in pts)
        )
        for p in pts:
            doc.add(
                '<circle class="trace-stop" cx="%s" cy="%s" r="3.0" '
                'fill="#cc3300"/>' % (_FMT % p[0], _FMT % p[1])
            )
    for label, v in scene.points:
        p = doc.px(_disk_point(L, geom, v))
        doc.add(
            '<circle class="point" cx="%s" cy="%s" r="3.5" fill="#0055aa"/>'
            % (_FMT % p[0], _FMT % p[1])
        )
        doc.add(
            '<text class="label" x="%s" y="%s" font-size="11">%s</text>'
            % (_FMT % (p[0] + 5.0), _FMT % (p[1] - 5.0), _esc(label))
        )
    for label, v in scene.cusps:
        w = _disk_point(L, geom, v)
        inner = doc.px((w[0] * 0.96, w[1] * 0.96))
        outer = doc.px((w[0] * 1.04, w[1] * 1.04))
        doc.add(
            '<line class="cusp" x1="%s" y1="%s" x2="%s" y2="%s" '
            'stroke="#007700" stroke-width="2.0"/>'
            % (_FMT % inner[0], _FMT % inner[1], _FMT % outer[0], _FMT % outer[1])
        )
        doc.add(
            '<text class="label" x="%s" y="%s" font-size="11">%s</text>'
            % (_FMT % (outer[0] + 4.0), _FMT % (outer[1] - 4.0), _esc(label))
        )
    text = doc.text()
    if out is not None:
        try:
            with open(out, "w", encoding="utf-8") as fh:
                fh.write(text)
        except OSError as exc:
            raise UnwritablePath("cannot write %s: %s" % (out, exc)) from exc
    return text


def _esc(s: str) -> str:
    return (
        s.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;")
    )
