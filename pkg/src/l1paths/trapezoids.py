"""Trapezoidal decompositions of simply connected regions by plane sweep.

The sweep works in "sweep coordinates" where extension segments are
vertical.  Horizontal-extension decompositions rotate the region a quarter
turn on the way in and expose results through the same records.  A region
whose first edge is the unique leftmost vertical edge (the rotated base of
a mountain cell) is seeded with a single open gap instead of events at the
base endpoints.
"""

from __future__ import annotations

from .errors import BaseNotOnBoundary, DegenerateRegion, PointOutsideRegion
from .geometry import Point, Segment, _pt_from_scaled, as_point

# event / vertex classifications
START, END, SPLIT, MERGE, REG_FLOOR, REG_CEIL = range(6)

# quarter-turn transforms on scaled ints: ROT[k] maps (x, y) -> new pair
def rot_xy(xi, yi, k):
    if k == 0:
        return xi, yi
    if k == 1:
        return yi, -xi
    if k == 2:
        return -xi, -yi
    return -yi, xi


def rot_point(p: Point, k: int) -> Point:
    if k == 0:
        return p
    xi, yi = rot_xy(p.xi, p.yi, k)
    return _pt_from_scaled(xi, yi)


def unrot(k: int) -> int:
    return (4 - k) % 4


def _round_div(num: int, den: int) -> int:
    """Nearest-integer division for signed ints (ties toward +inf)."""
    if den < 0:
        num, den = -num, -den
    return (2 * num + den) // (2 * den)


class Wall:
    """Vertical extension piece separating two trapezoids in sweep coords."""

    __slots__ = ("vertex", "lo", "hi", "left", "right")

    def __init__(self, vertex, lo, hi):
        self.vertex = vertex
        self.lo = lo
        self.hi = hi
        self.left = None
        self.right = None


class Trapezoid:
    __slots__ = (
        "id", "floor_edge", "ceil_edge", "lo", "hi",
        "left_walls", "right_walls", "parent", "children", "depth",
    )

    def __init__(self, tid, floor_edge, ceil_edge, lo, hi, left_walls, right_walls):
        self.id = tid
        self.floor_edge = floor_edge
        self.ceil_edge = ceil_edge
        self.lo = lo              # sweep-x of the left wall (scaled int)
        self.hi = hi              # sweep-x of the right wall
        self.left_walls = left_walls
        self.right_walls = right_walls
        self.parent = -1
        self.children = ()
        self.depth = 0

    def neighbors(self):
        out = []
        for w in self.left_walls:
            if w.left is not None:
                out.append(w.left)
        for w in self.right_walls:
            if w.right is not None:
                out.append(w.right)
        return out


class VertexEvent:
    __slots__ = ("kind", "floor_below", "down_foot", "up_foot")

    def __init__(self, kind, floor_below=None, down_foot=None, up_foot=None):
        self.kind = kind
        self.floor_below = floor_below
        self.down_foot = down_foot
        self.up_foot = up_foot


class TrapDecomposition:
    """Sweep output; `pts` are the region vertices in sweep coordinates."""

    __slots__ = (
        "axis", "rot", "pts", "n", "trapezoids", "walls", "events",
        "base_seeded", "region_pts",
    )

    def __init__(self, axis, rot, pts, region_pts, trapezoids, walls, events, base_seeded):
        self.axis = axis
        self.rot = rot
        self.pts = pts
        self.n = len(pts)
        self.region_pts = region_pts
        self.trapezoids = trapezoids
        self.walls = walls
        self.events = events
        self.base_seeded = base_seeded

    # --- helpers in sweep coordinates -------------------------------------
    def edge(self, e):
        return self.pts[e], self.pts[(e + 1) % self.n]

    def eval_edge(self, e, x_scaled):
        a, b = self.edge(e)
        if a.xi == b.xi:
            raise ValueError("cannot evaluate a vertical edge")
        y = a.yi + _round_div((x_scaled - a.xi) * (b.yi - a.yi), b.xi - a.xi)
        return y

    def corners(self, t: Trapezoid):
        """(bl, tl, br, tr) corner points in sweep coordinates."""
        fl = self.eval_edge(t.floor_edge, t.lo)
        cl = self.eval_edge(t.ceil_edge, t.lo)
        fr = self.eval_edge(t.floor_edge, t.hi)
        cr = self.eval_edge(t.ceil_edge, t.hi)
        return (
            _pt_from_scaled(t.lo, fl),
            _pt_from_scaled(t.lo, cl),
            _pt_from_scaled(t.hi, fr),
            _pt_from_scaled(t.hi, cr),
        )

    def corners_real(self, t: Trapezoid):
        k = unrot(self.rot)
        return tuple(rot_point(p, k) for p in self.corners(t))

    def trap_area(self, t: Trapezoid) -> float:
        bl, tl, br, tr = self.corners(t)
        return ((tl.y - bl.y) + (tr.y - br.y)) * (br.x - bl.x) / 2.0

    def contains_trap(self, t: Trapezoid, xs: int, ys: int) -> bool:
        """Closed containment of sweep-coord scaled point in trapezoid.

        The region is CCW, so its interior lies left of both the floor and
        the ceiling edge in traversal direction.
        """
        if not t.lo <= xs <= t.hi:
            return False
        for e in (t.floor_edge, t.ceil_edge):
            a, b = self.edge(e)
            if (b.xi - a.xi) * (ys - a.yi) - (b.yi - a.yi) * (xs - a.xi) < 0:
                return False
        return True


def _classify(pts, i):
    n = len(pts)
    p = pts[i]
    prv = pts[i - 1]
    nxt = pts[(i + 1) % n]
    p_key = (p.xi, p.yi)
    prv_after = (prv.xi, prv.yi) > p_key
    nxt_after = (nxt.xi, nxt.yi) > p_key
    if prv_after and nxt_after:
        turn = (p.xi - prv.xi) * (nxt.yi - p.yi) - (p.yi - prv.yi) * (nxt.xi - p.xi)
        return START if turn > 0 else SPLIT
    if not prv_after and not nxt_after:
        turn = (p.xi - prv.xi) * (nxt.yi - p.yi) - (p.yi - prv.yi) * (nxt.xi - p.xi)
        return END if turn > 0 else MERGE
    return REG_FLOOR if nxt_after else REG_CEIL


def _sweep(pts, base_seeded):
    """Vertical decomposition of a CCW simple region given in sweep coords."""
    n = len(pts)
    edges_lex = []
    for e in range(n):
        a, b = pts[e], pts[(e + 1) % n]
        if (a.xi, a.yi) <= (b.xi, b.yi):
            edges_lex.append((a, b))
        else:
            edges_lex.append((b, a))

    def side_of(e, xs, ys):
        a, b = edges_lex[e]
        return (b.xi - a.xi) * (ys - a.yi) - (b.yi - a.yi) * (xs - a.xi)

    def eval_edge(e, xs):
        a, b = edges_lex[e]
        return a.yi + _round_div((xs - a.xi) * (b.yi - a.yi), b.xi - a.xi)

    traps: list[Trapezoid] = []
    walls: list[Wall] = []
    events: dict[int, VertexEvent] = {}

    floors: list[int] = []           # floor edge ids bottom to top
    gaps = {}                        # floor edge -> [ceil_edge, left_x, left_walls]
    ceil_to_floor = {}

    def close_gap(floor_e, x_r, right_walls):
        ceil_e, x_l, left_walls = gaps.pop(floor_e)
        ceil_to_floor.pop(ceil_e, None)
        if x_l == x_r:
            # empty sliver between co-vertical events; pseudo-vertex
            # freshness makes this unreachable for library-built regions
            raise DegenerateRegion("co-vertical events produced an empty cell")
        t = Trapezoid(len(traps), floor_e, ceil_e, x_l, x_r, left_walls, right_walls)
        traps.append(t)
        for w in left_walls:
            w.right = t.id
        for w in right_walls:
            w.left = t.id
        return t

    def open_gap(floor_e, ceil_e, x_l, left_walls):
        gaps[floor_e] = [ceil_e, x_l, left_walls]
        ceil_to_floor[ceil_e] = floor_e

    def floor_pos(xs, ys):
        """First index whose floor is not strictly below the point."""
        lo, hi = 0, len(floors)
        while lo < hi:
            mid = (lo + hi) // 2
            if side_of(floors[mid], xs, ys) > 0:
                lo = mid + 1
            else:
                hi = mid
        return lo

    order = sorted(range(n), key=lambda i: (pts[i].xi, pts[i].yi))
    start_at = 0
    if base_seeded:
        # region's first edge is the unique leftmost vertical edge (the base)
        top, bot = pts[0], pts[1]
        if top.xi != bot.xi or top.yi <= bot.yi:
            raise DegenerateRegion("seeded base must be vertical, CCW downward")
        floor0 = 1
        ceil0 = n - 1
        floors.append(floor0)
        open_gap(floor0, ceil0, top.xi, [])
        order = [i for i in order if i not in (0, 1)]

    for i in order:
        p = pts[i]
        xs, ys = p.xi, p.yi
        kind = _classify(pts, i)
        e_in = (i - 1) % n   # edge arriving at vertex i
        e_out = i            # edge leaving vertex i

        if kind == START:
            d1x, d1y = pts[(i + 1) % n].xi - xs, pts[(i + 1) % n].yi - ys
            d2x, d2y = pts[i - 1].xi - xs, pts[i - 1].yi - ys
            if d1x * d2y - d1y * d2x > 0:
                floor_e, ceil_e = e_out, e_in
            else:
                floor_e, ceil_e = e_in, e_out
            floors.insert(floor_pos(xs, ys), floor_e)
            open_gap(floor_e, ceil_e, xs, [])
            events[i] = VertexEvent(START)

        elif kind == SPLIT:
            pos = floor_pos(xs, ys)
            floor_e = floors[pos - 1]
            ceil_e = gaps[floor_e][0]
            dfoot = _pt_from_scaled(xs, eval_edge(floor_e, xs))
            ufoot = _pt_from_scaled(xs, eval_edge(ceil_e, xs))
            w_dn = Wall(i, dfoot, p)
            w_up = Wall(i, p, ufoot)
            walls.extend((w_dn, w_up))
            close_gap(floor_e, xs, [w_dn, w_up])
            d1x, d1y = pts[(i + 1) % n].xi - xs, pts[(i + 1) % n].yi - ys
            d2x, d2y = pts[i - 1].xi - xs, pts[i - 1].yi - ys
            if d1x * d2y - d1y * d2x > 0:
                lower_e, upper_e = e_out, e_in
            else:
                lower_e, upper_e = e_in, e_out
            open_gap(floor_e, lower_e, xs, [w_dn])
            floors.insert(pos, upper_e)
            open_gap(upper_e, ceil_e, xs, [w_up])
            events[i] = VertexEvent(SPLIT, floor_e, dfoot, ufoot)

        elif kind == MERGE:
            # upper gap's floor is one of the two edges ending at p
            pos = floor_pos(xs, ys)
            j = pos
            upper_floor = None
            while j < len(floors) and side_of(floors[j], xs, ys) == 0:
                if floors[j] in (e_in, e_out):
                    upper_floor = floors[j]
                    del floors[j]
                    break
                j += 1
            lower_ceil = e_in if upper_floor == e_out else e_out
            lower_floor = ceil_to_floor[lower_ceil]
            upper_ceil = gaps[upper_floor][0]
            dfoot = _pt_from_scaled(xs, eval_edge(lower_floor, xs))
            ufoot = _pt_from_scaled(xs, eval_edge(upper_ceil, xs))
            w_dn = Wall(i, dfoot, p)
            w_up = Wall(i, p, ufoot)
            walls.extend((w_dn, w_up))
            close_gap(lower_floor, xs, [w_dn])
            close_gap(upper_floor, xs, [w_up])
            open_gap(lower_floor, upper_ceil, xs, [w_dn, w_up])
            events[i] = VertexEvent(MERGE, lower_floor, dfoot, ufoot)

        elif kind == REG_FLOOR:
            # vertex on the lower chain: e_in ends, e_out continues the floor
            ceil_e = gaps[e_in][0]
            ufoot = _pt_from_scaled(xs, eval_edge(ceil_e, xs))
            w_up = Wall(i, p, ufoot)
            walls.append(w_up)
            close_gap(e_in, xs, [w_up])
            pos = floor_pos(xs, ys)
            j = pos
            while floors[j] != e_in:
                j += 1
            floors[j] = e_out
            open_gap(e_out, ceil_e, xs, [w_up])
            events[i] = VertexEvent(REG_FLOOR, None, None, ufoot)

        elif kind == REG_CEIL:
            # e_out lex-ends at p (it was the ceiling); e_in continues right
            floor_e = ceil_to_floor[e_out]
            dfoot = _pt_from_scaled(xs, eval_edge(floor_e, xs))
            w_dn = Wall(i, dfoot, p)
            walls.append(w_dn)
            close_gap(floor_e, xs, [w_dn])
            open_gap(floor_e, e_in, xs, [w_dn])
            events[i] = VertexEvent(REG_CEIL, floor_e, dfoot, None)

        else:  # END
            floor_e = e_out if e_out in gaps else e_in
            close_gap(floor_e, xs, [])
            pos = floor_pos(xs, ys)
            j = pos
            while floors[j] != floor_e:
                j += 1
            del floors[j]
            events[i] = VertexEvent(END)

    if gaps:
        raise DegenerateRegion("sweep finished with open cells (region not simple?)")
    return traps, walls, events


def build_trap_decomposition(region, axis: str) -> TrapDecomposition:
    """Decompose a simply connected region by vertical or horizontal
    extensions from every vertex.

    `region` is a CCW point sequence (or Polygon); `axis` names the
    extension direction.  A single edge parallel to the extensions is
    allowed only as the region's first edge (a mountain base).
    """
    if hasattr(region, "vertices"):
        pts = list(region.vertices)
    else:
        pts = [as_point(p) for p in region]
    if len(pts) < 3:
        raise DegenerateRegion("region needs at least 3 vertices")
    if axis not in ("vertical", "horizontal"):
        raise ValueError("axis must be 'vertical' or 'horizontal'")

    rot = 0 if axis == "vertical" else 1
    spts = [rot_point(p, rot) for p in pts]

    area2 = 0
    for i in range(len(spts)):
        a, b = spts[i], spts[(i + 1) % len(spts)]
        area2 += a.xi * b.yi - b.xi * a.yi
    if area2 == 0:
        raise DegenerateRegion("region has zero area")
    if area2 < 0:
        raise ValueError("region must be counterclockwise")

    base_seeded = spts[0].xi == spts[1].xi
    if base_seeded:
        min_x = min(p.xi for p in spts)
        if spts[0].xi != min_x:
            raise DegenerateRegion("vertical first edge must be leftmost")
    for i in range(len(spts)):
        if base_seeded and i == 0:
            continue
        a, b = spts[i], spts[(i + 1) % len(spts)]
        if a.xi == b.xi:
            raise DegenerateRegion(f"edge {i} is parallel to the extension axis")

    traps, walls, events = _sweep(spts, base_seeded)
    return TrapDecomposition(axis, rot, spts, pts, traps, walls, events, base_seeded)


def build_trap_tree(d: TrapDecomposition, base=None) -> "TrapCellTree":
    """Root the trapezoid adjacency tree at the cell incident to the base.

    With a seeded decomposition the root is the first trapezoid; otherwise
    `base` (a Segment on the region boundary) selects it.
    """
    if d.base_seeded:
        root = 0
    else:
        if base is None:
            raise BaseNotOnBoundary("base segment required")
        if not isinstance(base, Segment):
            base = Segment(*base)
        a = rot_point(base.a, d.rot)
        b = rot_point(base.b, d.rot)
        mxi = (a.xi + b.xi) // 2
        myi = (a.yi + b.yi) // 2
        root = None
        # the base must be an edge of the region; the root cell is the one
        # whose floor or ceiling is that edge and whose span covers it
        for e in range(d.n):
            p, q = d.edge(e)
            if {(p.xi, p.yi), (q.xi, q.yi)} == {(a.xi, a.yi), (b.xi, b.yi)}:
                cands = [
                    t for t in d.trapezoids
                    if (t.floor_edge == e or t.ceil_edge == e)
                    and t.lo <= mxi <= t.hi
                ]
                if cands:
                    root = cands[0].id
                break
        if root is None:
            raise BaseNotOnBoundary("base is not a boundary edge of the region")

    n = len(d.trapezoids)
    parent = [-1] * n
    depth = [0] * n
    order = [root]
    seen = [False] * n
    seen[root] = True
    qi = 0
    while qi < len(order):
        u = order[qi]
        qi += 1
        for v in d.trapezoids[u].neighbors():
            if not seen[v]:
                seen[v] = True
                parent[v] = u
                depth[v] = depth[u] + 1
                order.append(v)
    if not all(seen):
        raise DegenerateRegion("trapezoid adjacency is not connected")
    kids = [[] for _ in range(n)]
    for v in range(n):
        if parent[v] >= 0:
            kids[parent[v]].append(v)
    for t in d.trapezoids:
        t.parent = parent[t.id]
        t.children = tuple(kids[t.id])
        t.depth = depth[t.id]
    return TrapCellTree(root, parent, tuple(map(tuple, kids)), depth)


class TrapCellTree:
    __slots__ = ("root", "parent", "children", "depth")

    def __init__(self, root, parent, children, depth):
        self.root = root
        self.parent = parent
        self.children = children
        self.depth = depth

    def __len__(self):
        return len(self.parent)


def trap_containing(d: TrapDecomposition, p, tree: TrapCellTree | None = None) -> int:
    """Linear-scan location of the trapezoid whose closure holds p.

    Boundary ties go to the trapezoid nearer the tree root when a tree is
    given, else to the lowest id.
    """
    sp = rot_point(as_point(p), d.rot)
    hits = [t.id for t in d.trapezoids if d.contains_trap(t, sp.xi, sp.yi)]
    if not hits:
        raise PointOutsideRegion(f"{p!r} is outside the region")
    if tree is None:
        return min(hits)
    return min(hits, key=lambda i: tree.depth[i])
