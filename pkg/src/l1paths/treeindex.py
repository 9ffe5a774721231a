"""Constant-time level-ancestor and LCA queries over static rooted trees.

Level ancestors use ladder decomposition plus binary jump pointers
(O(n log n) build, O(1) query).  LCA uses an Euler tour with a sparse
table over depths (O(n log n) build, O(1) query).
"""

from __future__ import annotations

from .errors import DepthOutOfRange


def _children_from_parents(parent):
    n = len(parent)
    kids = [[] for _ in range(n)]
    root = -1
    for v, p in enumerate(parent):
        if p < 0:
            root = v
        else:
            kids[p].append(v)
    return root, kids


class LaIndex:
    """Level-ancestor index: ladders + jump pointers."""

    __slots__ = ("parent", "depth", "jump", "ladder_of", "ladders", "pos")

    def __init__(self, parent):
        n = len(parent)
        root, kids = _children_from_parents(parent)
        depth = [0] * n
        order = [root]
        qi = 0
        while qi < len(order):
            u = order[qi]
            qi += 1
            for v in kids[u]:
                depth[v] = depth[u] + 1
                order.append(v)

        # long-path decomposition: each vertex joins its deepest child's path
        height = [0] * n
        for u in reversed(order):
            if kids[u]:
                height[u] = 1 + max(height[c] for c in kids[u])
        path_child = [-1] * n
        for u in order:
            if kids[u]:
                path_child[u] = max(kids[u], key=lambda c: height[c])

        ladder_of = [-1] * n
        pos = [0] * n
        ladders = []
        for u in order:
            if ladder_of[u] >= 0:
                continue
            # u starts a long path; walk it down
            path = []
            v = u
            while v != -1:
                path.append(v)
                v = path_child[v]
            h = len(path)
            # ladder = the path plus an equally long tail of ancestors
            lad = []
            a = parent[u]
            for _ in range(h):
                if a < 0:
                    break
                lad.append(a)
                a = parent[a]
            lad.reverse()
            lad.extend(path)
            lid = len(ladders)
            ladders.append(lad)
            base = len(lad) - len(path)
            for k, v in enumerate(path):
                ladder_of[v] = lid
                pos[v] = base + k

        log = max(1, n.bit_length())
        jump = [[-1] * n for _ in range(log)]
        jump[0] = list(parent)
        for k in range(1, log):
            jk, jk1 = jump[k], jump[k - 1]
            for v in range(n):
                a = jk1[v]
                jk[v] = jk1[a] if a >= 0 else -1

        self.parent = parent
        self.depth = depth
        self.jump = jump
        self.ladder_of = ladder_of
        self.ladders = ladders
        self.pos = pos

    def level_ancestor(self, v: int, level: int) -> int:
        """Ancestor of v at depth `level` (level 0 is the root)."""
        dv = self.depth[v]
        if not 0 <= level <= dv:
            raise DepthOutOfRange(f"depth {level} not in [0, {dv}]")
        k = dv - level
        if k == 0:
            return v
        b = k.bit_length() - 1
        u = self.jump[b][v]
        k -= 1 << b
        # after the big jump the ladder containing u is long enough
        lad = self.ladders[self.ladder_of[u]]
        return lad[self.pos[u] - k]


class LcaIndex:
    """LCA via Euler tour + sparse-table range minimum."""

    __slots__ = ("first", "euler", "edepth", "table", "logs", "depth")

    def __init__(self, parent):
        n = len(parent)
        root, kids = _children_from_parents(parent)
        euler = []
        edepth = []
        first = [-1] * n
        depth = [0] * n
        # iterative Euler tour
        stack = [(root, 0, iter(kids[root]))]
        euler.append(root)
        edepth.append(0)
        first[root] = 0
        while stack:
            u, d, it = stack[-1]
            nxt = next(it, None)
            if nxt is None:
                stack.pop()
                if stack:
                    euler.append(stack[-1][0])
                    edepth.append(stack[-1][1])
                continue
            depth[nxt] = d + 1
            first[nxt] = len(euler)
            euler.append(nxt)
            edepth.append(d + 1)
            stack.append((nxt, d + 1, iter(kids[nxt])))

        m = len(euler)
        logs = [0] * (m + 1)
        for i in range(2, m + 1):
            logs[i] = logs[i >> 1] + 1
        table = [list(range(m))]
        k = 1
        while (1 << k) <= m:
            prev = table[k - 1]
            half = 1 << (k - 1)
            row = [0] * (m - (1 << k) + 1)
            for i in range(len(row)):
                a, b = prev[i], prev[i + half]
                row[i] = a if edepth[a] <= edepth[b] else b
            table.append(row)
            k += 1

        self.first = first
        self.euler = euler
        self.edepth = edepth
        self.table = table
        self.logs = logs
        self.depth = depth

    def lca(self, u: int, v: int) -> int:
        a, b = self.first[u], self.first[v]
        if a > b:
            a, b = b, a
        k = self.logs[b - a + 1]
        i = self.table[k][a]
        j = self.table[k][b - (1 << k) + 1]
        return self.euler[i if self.edepth[i] <= self.edepth[j] else j]


def build_la(parent) -> LaIndex:
    return LaIndex(list(parent))


def build_lca(parent) -> LcaIndex:
    return LcaIndex(list(parent))


def level_ancestor(idx: LaIndex, node: int, level: int) -> int:
    return idx.level_ancestor(node, level)


def lca(idx: LcaIndex, u: int, v: int) -> int:
    return idx.lca(u, v)
