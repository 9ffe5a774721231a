"""Planar primitives on an exact dyadic grid.

All coordinates are snapped to the grid of multiples of 2**-32 when a Point
is created.  Each point also carries scaled integer coordinates, and every
predicate and distance in the library is evaluated in exact integer
arithmetic on those.  In the recommended regime (integer inputs below 2**20)
every engine distance is therefore bit-exact.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .errors import NotGeneralPosition, NotSimple, TooFewVertices

GRID_BITS = 32
SCALE = 1 << GRID_BITS

LEFT = 1
RIGHT = -1
COLLINEAR = 0


def snap(v: float) -> float:
    """Round a coordinate to the 2**-32 grid (exact as a double)."""
    return round(v * SCALE) / SCALE


class Point:
    """Immutable grid point; (xi, yi) are the authoritative scaled ints."""

    __slots__ = ("x", "y", "xi", "yi")

    def __init__(self, x, y):
        xi = round(x * SCALE)
        yi = round(y * SCALE)
        object.__setattr__(self, "xi", xi)
        object.__setattr__(self, "yi", yi)
        object.__setattr__(self, "x", xi / SCALE)
        object.__setattr__(self, "y", yi / SCALE)

    def __setattr__(self, name, value):
        raise AttributeError("Point is immutable")

    def __eq__(self, other):
        return isinstance(other, Point) and self.xi == other.xi and self.yi == other.yi

    def __hash__(self):
        return hash((self.xi, self.yi))

    def __iter__(self):
        yield self.x
        yield self.y

    def __repr__(self):
        return f"Point({self.x!r}, {self.y!r})"


def _pt_from_scaled(xi: int, yi: int) -> Point:
    p = Point.__new__(Point)
    object.__setattr__(p, "xi", xi)
    object.__setattr__(p, "yi", yi)
    object.__setattr__(p, "x", xi / SCALE)
    object.__setattr__(p, "y", yi / SCALE)
    return p


def as_point(p) -> Point:
    if isinstance(p, Point):
        return p
    x, y = p
    return Point(x, y)


class Segment:
    __slots__ = ("a", "b")

    def __init__(self, a, b):
        self.a = as_point(a)
        self.b = as_point(b)

    @property
    def horizontal(self) -> bool:
        return self.a.yi == self.b.yi

    @property
    def vertical(self) -> bool:
        return self.a.xi == self.b.xi

    def __iter__(self):
        yield self.a
        yield self.b

    def __repr__(self):
        return f"Segment({self.a!r}, {self.b!r})"


class Polyline:
    """Chain of points; L1 length is the sum of |dx|+|dy| over its edges."""

    __slots__ = ("points",)

    def __init__(self, points: Sequence):
        pts = [as_point(p) for p in points]
        if not pts:
            raise ValueError("polyline needs at least one point")
        for p, q in zip(pts, pts[1:]):
            if p == q:
                raise ValueError("consecutive polyline points must differ")
        self.points = tuple(pts)

    def length_scaled(self) -> int:
        pts = self.points
        return sum(
            abs(p.xi - q.xi) + abs(p.yi - q.yi) for p, q in zip(pts, pts[1:])
        )

    def merged_collinear(self) -> "Polyline":
        """Copy with interior vertices dropped where direction is unchanged."""
        pts = list(self.points)
        out = [pts[0]]
        for p in pts[1:]:
            while len(out) >= 2 and orientation(out[-2], out[-1], p) == COLLINEAR and (
                (p.xi - out[-1].xi) * (out[-1].xi - out[-2].xi)
                + (p.yi - out[-1].yi) * (out[-1].yi - out[-2].yi)
            ) >= 0:
                out.pop()
            if p != out[-1]:
                out.append(p)
        return Polyline(out)

    def __iter__(self):
        return iter(self.points)

    def __len__(self):
        return len(self.points)

    def __repr__(self):
        return f"Polyline({list(self.points)!r})"


def l1_length(path) -> float:
    """Exact L1 length of a polyline (0 for a single point)."""
    if not isinstance(path, Polyline):
        path = Polyline(path)
    return path.length_scaled() / SCALE


def l1_dist(p: Point, q: Point) -> float:
    return (abs(p.xi - q.xi) + abs(p.yi - q.yi)) / SCALE


def l1_dist_scaled(p: Point, q: Point) -> int:
    return abs(p.xi - q.xi) + abs(p.yi - q.yi)


def orientation(p, q, r) -> int:
    """Sign of cross(q-p, r-p): LEFT, RIGHT or COLLINEAR. Exact."""
    p = as_point(p)
    q = as_point(q)
    r = as_point(r)
    d = (q.xi - p.xi) * (r.yi - p.yi) - (q.yi - p.yi) * (r.xi - p.xi)
    return LEFT if d > 0 else RIGHT if d < 0 else COLLINEAR


def _orient_i(ax, ay, bx, by, cx, cy) -> int:
    d = (bx - ax) * (cy - ay) - (by - ay) * (cx - ax)
    return 1 if d > 0 else -1 if d < 0 else 0


def _on_segment_i(ax, ay, bx, by, px, py) -> bool:
    """p on closed segment ab, given collinear inputs allowed to be checked."""
    if _orient_i(ax, ay, bx, by, px, py) != 0:
        return False
    return min(ax, bx) <= px <= max(ax, bx) and min(ay, by) <= py <= max(ay, by)


def segments_intersect(p1, q1, p2, q2) -> bool:
    """Closed intersection test between segments p1q1 and p2q2 (exact)."""
    p1, q1, p2, q2 = map(as_point, (p1, q1, p2, q2))
    d1 = _orient_i(p2.xi, p2.yi, q2.xi, q2.yi, p1.xi, p1.yi)
    d2 = _orient_i(p2.xi, p2.yi, q2.xi, q2.yi, q1.xi, q1.yi)
    d3 = _orient_i(p1.xi, p1.yi, q1.xi, q1.yi, p2.xi, p2.yi)
    d4 = _orient_i(p1.xi, p1.yi, q1.xi, q1.yi, q2.xi, q2.yi)
    if ((d1 > 0) != (d2 > 0)) and d1 != 0 and d2 != 0 and ((d3 > 0) != (d4 > 0)) and d3 != 0 and d4 != 0:
        return True
    if d1 == 0 and _on_segment_i(p2.xi, p2.yi, q2.xi, q2.yi, p1.xi, p1.yi):
        return True
    if d2 == 0 and _on_segment_i(p2.xi, p2.yi, q2.xi, q2.yi, q1.xi, q1.yi):
        return True
    if d3 == 0 and _on_segment_i(p1.xi, p1.yi, q1.xi, q1.yi, p2.xi, p2.yi):
        return True
    if d4 == 0 and _on_segment_i(p1.xi, p1.yi, q1.xi, q1.yi, q2.xi, q2.yi):
        return True
    return False


class Polygon:
    """Simple polygon, vertices in CCW order. Construct via validate_polygon."""

    __slots__ = ("vertices", "n", "_edges")

    def __init__(self, vertices: Sequence):
        self.vertices = tuple(as_point(v) for v in vertices)
        self.n = len(self.vertices)
        self._edges = None

    def edges(self):
        """Edge list as (Point, Point) pairs, cached."""
        if self._edges is None:
            vs = self.vertices
            self._edges = tuple(
                (vs[i], vs[(i + 1) % self.n]) for i in range(self.n)
            )
        return self._edges

    def area2_scaled(self) -> int:
        """Twice the signed area in scaled units (positive for CCW)."""
        vs = self.vertices
        total = 0
        for i in range(self.n):
            p = vs[i]
            q = vs[(i + 1) % self.n]
            total += p.xi * q.yi - q.xi * p.yi
        return total

    def area(self) -> float:
        return abs(self.area2_scaled()) / 2 / SCALE / SCALE

    def bbox(self):
        xs = [v.x for v in self.vertices]
        ys = [v.y for v in self.vertices]
        return min(xs), min(ys), max(xs), max(ys)

    def on_boundary(self, p) -> bool:
        p = as_point(p)
        for a, b in self.edges():
            if _on_segment_i(a.xi, a.yi, b.xi, b.yi, p.xi, p.yi):
                return True
        return False

    def contains(self, p) -> bool:
        """Closed containment (boundary counts as inside). Exact."""
        p = as_point(p)
        return contains_closed(self.vertices, p.xi, p.yi)

    def __repr__(self):
        return f"Polygon(n={self.n})"


def contains_closed(vertices, px, py) -> bool:
    """Exact closed point-in-polygon over scaled integer (or Fraction) coords.

    `vertices` is a sequence of Points; px/py are scaled coordinates and may
    be ints or Fractions (for exact midpoint probes).
    """
    n = len(vertices)
    inside = False
    for i in range(n):
        a = vertices[i]
        b = vertices[(i + 1) % n]
        ax, ay, bx, by = a.xi, a.yi, b.xi, b.yi
        # boundary counts as inside
        if (bx - ax) * (py - ay) == (by - ay) * (px - ax):
            if min(ax, bx) <= px <= max(ax, bx) and min(ay, by) <= py <= max(ay, by):
                return True
        if (ay > py) != (by > py):
            # x of edge at height py, compared to px without division
            t = (px - ax) * (by - ay) - (bx - ax) * (py - ay)
            if by > ay:
                if t < 0:
                    inside = not inside
            else:
                if t > 0:
                    inside = not inside
    return inside


def segment_in_polygon(seg, poly: Polygon) -> bool:
    """True iff the closed segment lies in the closed region of poly. Exact."""
    if not isinstance(seg, Segment):
        seg = Segment(*seg)
    a, b = seg.a, seg.b
    if not poly.contains(a) or not poly.contains(b):
        return False
    if a == b:
        return True
    params = {Fraction(0), Fraction(1)}
    axi, ayi, bxi, byi = a.xi, a.yi, b.xi, b.yi
    dx, dy = bxi - axi, byi - ayi
    for p, q in poly.edges():
        d1 = _orient_i(p.xi, p.yi, q.xi, q.yi, axi, ayi)
        d2 = _orient_i(p.xi, p.yi, q.xi, q.yi, bxi, byi)
        d3 = _orient_i(axi, ayi, bxi, byi, p.xi, p.yi)
        d4 = _orient_i(axi, ayi, bxi, byi, q.xi, q.yi)
        if d1 != d2 and d1 != 0 and d2 != 0 and d3 != d4 and d3 != 0 and d4 != 0:
            return False  # proper crossing
        # touching configurations contribute split parameters along seg
        if d3 == 0 and _on_segment_i(axi, ayi, bxi, byi, p.xi, p.yi):
            t = Fraction(
                (p.xi - axi) * dx + (p.yi - ayi) * dy, dx * dx + dy * dy
            )
            params.add(t)
        if d4 == 0 and _on_segment_i(axi, ayi, bxi, byi, q.xi, q.yi):
            t = Fraction(
                (q.xi - axi) * dx + (q.yi - ayi) * dy, dx * dx + dy * dy
            )
            params.add(t)
        if d1 == 0 and _on_segment_i(p.xi, p.yi, q.xi, q.yi, axi, ayi):
            params.add(Fraction(0))
        if d2 == 0 and _on_segment_i(p.xi, p.yi, q.xi, q.yi, bxi, byi):
            params.add(Fraction(1))
    ts = sorted(params)
    for t0, t1 in zip(ts, ts[1:]):
        tm = (t0 + t1) / 2
        mx = axi + tm * dx
        my = ayi + tm * dy
        if not contains_closed(poly.vertices, mx, my):
            return False
    return True


def perpendicular_projection(p, e, poly: Polygon):
    """Foot of the perpendicular from p onto axis-aligned segment e, if the
    connecting segment stays in poly; None otherwise."""
    p = as_point(p)
    if not isinstance(e, Segment):
        e = Segment(*e)
    if e.horizontal:
        lo, hi = sorted((e.a.xi, e.b.xi))
        if not lo <= p.xi <= hi:
            return None
        foot = _pt_from_scaled(p.xi, e.a.yi)
    elif e.vertical:
        lo, hi = sorted((e.a.yi, e.b.yi))
        if not lo <= p.yi <= hi:
            return None
        foot = _pt_from_scaled(e.a.xi, p.yi)
    else:
        raise ValueError("segment must be axis-aligned")
    if segment_in_polygon(Segment(p, foot), poly):
        return foot
    return None


# ---------------------------------------------------------------------------
# simplicity check (Shamos-Hoey sweep, exact predicates)


def _edge_point_side(exi, eyi, fxi, fyi, pxi, pyi) -> int:
    """Is p above (+1) / below (-1) / on (0) the lex-directed edge e->f."""
    return _orient_i(exi, eyi, fxi, fyi, pxi, pyi)


def _find_intersecting_pair(vertices) -> tuple | None:
    """Return (i, j) of a non-adjacent intersecting edge pair, or None."""
    n = len(vertices)
    edges = []
    for i in range(n):
        a = vertices[i]
        b = vertices[(i + 1) % n]
        if (a.xi, a.yi) <= (b.xi, b.yi):
            edges.append((a, b, i))
        else:
            edges.append((b, a, i))

    def adjacent(i, j):
        return (i + 1) % n == j or (j + 1) % n == i

    def bad_overlap(i, j):
        # adjacent edges may only share the common vertex
        a1, b1, _ = edges[i]
        a2, b2, _ = edges[j]
        pts = {(a1.xi, a1.yi), (b1.xi, b1.yi)} & {(a2.xi, a2.yi), (b2.xi, b2.yi)}
        if len(pts) != 1:
            return True
        if _orient_i(a1.xi, a1.yi, b1.xi, b1.yi, a2.xi, a2.yi) == 0 and _orient_i(
            a1.xi, a1.yi, b1.xi, b1.yi, b2.xi, b2.yi
        ) == 0:
            # collinear neighbours: reject unless they only touch at the joint
            lo1, hi1 = sorted(((a1.xi, a1.yi), (b1.xi, b1.yi)))
            lo2, hi2 = sorted(((a2.xi, a2.yi), (b2.xi, b2.yi)))
            return not (hi1 == lo2 or hi2 == lo1)
        return False

    def crossing(i, j):
        if adjacent(i, j):
            return bad_overlap(i, j)
        a1, b1, _ = edges[i]
        a2, b2, _ = edges[j]
        return segments_intersect(a1, b1, a2, b2)

    events = []
    for k, (a, b, idx) in enumerate(edges):
        events.append((a.xi, a.yi, 1, k))  # insert
        events.append((b.xi, b.yi, 0, k))  # remove before insert at same pt
    events.sort()

    status: list[int] = []  # edge slots ordered bottom to top

    def above_edge(k_new, k_old) -> int:
        """Order of the edge being inserted relative to one in the status."""
        a, b, _ = edges[k_new]
        c, d, _ = edges[k_old]
        s = _edge_point_side(c.xi, c.yi, d.xi, d.yi, a.xi, a.yi)
        if s != 0:
            return s
        s = _edge_point_side(c.xi, c.yi, d.xi, d.yi, b.xi, b.yi)
        return s

    for exi, eyi, kind, k in events:
        if kind == 1:
            lo, hi = 0, len(status)
            while lo < hi:
                mid = (lo + hi) // 2
                if above_edge(k, status[mid]) < 0:
                    hi = mid
                else:
                    lo = mid + 1
            for nb in (lo - 1, lo):
                if 0 <= nb < len(status):
                    j = status[nb]
                    if crossing(k, j):
                        return tuple(sorted((edges[k][2], edges[j][2])))
            status.insert(lo, k)
        else:
            # the sweep point is k's right endpoint and lies on k; all alive
            # edges span the sweep x, so ordering against the point is valid
            lo, hi = 0, len(status)
            while lo < hi:
                mid = (lo + hi) // 2
                c, d, _ = edges[status[mid]]
                if _edge_point_side(c.xi, c.yi, d.xi, d.yi, exi, eyi) > 0:
                    lo = mid + 1  # edge strictly below the point
                else:
                    hi = mid
            i = lo
            while i < len(status) and status[i] != k:
                i += 1
            if i == len(status):
                continue
            status.pop(i)
            if 0 < i <= len(status) - 1:
                if crossing(status[i - 1], status[i]):
                    return tuple(
                        sorted((edges[status[i - 1]][2], edges[status[i]][2]))
                    )
    return None


def validate_polygon(raw: Iterable) -> Polygon:
    """Validate simplicity, orientation and general position; return CCW Polygon.

    Raises TooFewVertices, NotSimple or NotGeneralPosition.
    """
    pts = [as_point(p) for p in raw]
    if len(pts) < 3:
        raise TooFewVertices(f"need at least 3 vertices, got {len(pts)}")
    n = len(pts)
    for i in range(n):
        if pts[i] == pts[(i + 1) % n]:
            raise NotSimple(i, (i + 1) % n, "repeated consecutive vertex")

    pair = _find_intersecting_pair(pts)
    if pair is not None:
        raise NotSimple(*pair)

    poly = Polygon(pts)
    a2 = poly.area2_scaled()
    if a2 == 0:
        raise NotSimple(0, 1, "degenerate polygon of zero area")
    if a2 < 0:
        pts = list(reversed(pts))
        poly = Polygon(pts)

    order = sorted(range(n), key=lambda i: pts[i].xi)
    for u, v in zip(order, order[1:]):
        if pts[u].xi == pts[v].xi:
            raise NotGeneralPosition("x", *sorted((u, v)))
    order = sorted(range(n), key=lambda i: pts[i].yi)
    for u, v in zip(order, order[1:]):
        if pts[u].yi == pts[v].yi:
            raise NotGeneralPosition("y", *sorted((u, v)))

    return poly
