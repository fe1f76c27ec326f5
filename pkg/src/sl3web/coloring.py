"""Proper edge colorings of webs and their boundary-word order.

A coloring is a tuple of colors in {-1, 0, 1} indexed by edge position in
``web.edges``.  Proper means the three edges at each internal vertex get
distinct colors; boundary vertices impose nothing.
"""

from __future__ import annotations

from collections import deque
from typing import Iterator, Mapping, Sequence

from .weightpath import SignState
from .webgraph import BLACK, Web, WebError

__all__ = [
    "ColoringError",
    "EdgeColoring",
    "COLOR_RANK",
    "is_proper",
    "boundary_word",
    "word_key",
    "iter_colorings",
    "enumerate_colorings",
    "coloring_from_kk",
    "compare_colorings",
    "minimal_coloring",
]

EdgeColoring = tuple[int, ...]

# preferred-first order of colors at a boundary vertex of each color
COLOR_RANK = {BLACK: (1, 0, -1), "W": (-1, 0, 1)}


class ColoringError(ValueError):
    pass


def is_proper(w: Web, coloring: Sequence[int]) -> bool:
    if len(coloring) != len(w.edges) or any(c not in (-1, 0, 1) for c in coloring):
        return False
    for v in w.internal:
        if len({coloring[w.edge_index(h)] for h in v.half_edges}) != len(v.half_edges):
            return False
    return True


def boundary_word(w: Web, coloring: Sequence[int]) -> list[tuple[int, str]]:
    """(color, vertex color) for each boundary half-edge, clockwise from vertex 1."""
    return [(coloring[w.edge_index(h)], v.color) for v in w.boundary for h in v.half_edges]


def word_key(w: Web, coloring: Sequence[int]) -> tuple[int, ...]:
    """Sort key realising the lexicographic order on boundary words."""
    return tuple(COLOR_RANK[vc].index(c) for c, vc in boundary_word(w, coloring))


def compare_colorings(w: Web, c1: Sequence[int], c2: Sequence[int]) -> int:
    """Return -1, 0 or 1 as the boundary word of ``c1`` is below, equal to or above ``c2``'s."""
    if not (is_proper(w, c1) and is_proper(w, c2)):
        raise ColoringError("both arguments must be proper colorings of the web")
    k1, k2 = word_key(w, c1), word_key(w, c2)
    return (k1 > k2) - (k1 < k2)


def _edge_order(w: Web) -> list[int]:
    """Boundary edges clockwise, then the rest breadth-first from the boundary."""
    order: list[int] = []
    seen_edges: set[int] = set()
    seen_vertices: set[int] = set()
    queue: deque[int] = deque()
    for h in w.boundary_half_edges():
        e = w.edge_index(h)
        if e not in seen_edges:
            seen_edges.add(e)
            order.append(e)
        other = w.owner(w.twin(h))
        if not w.is_boundary(other) and other not in seen_vertices:
            seen_vertices.add(other)
            queue.append(other)
    while queue:
        vid = queue.popleft()
        for h in w.vertex(vid).half_edges:
            e = w.edge_index(h)
            if e not in seen_edges:
                seen_edges.add(e)
                order.append(e)
            other = w.owner(w.twin(h))
            if not w.is_boundary(other) and other not in seen_vertices:
                seen_vertices.add(other)
                queue.append(other)
    order += [e for e in range(len(w.edges)) if e not in seen_edges]
    return order


class _Search:
    """Depth-first search over colorings with forced-color propagation."""

    def __init__(self, w: Web) -> None:
        self.ends: list[list[int]] = [[] for _ in w.edges]
        self.vert_edges: list[list[int]] = [[] for _ in w.internal]
        for k, v in enumerate(w.internal):
            for h in v.half_edges:
                e = w.edge_index(h)
                self.ends[e].append(k)
                self.vert_edges[k].append(e)
        self.color: list[int | None] = [None] * len(w.edges)
        self.used: list[set[int]] = [set() for _ in w.internal]
        self.order = _edge_order(w)
        self.candidates: list[tuple[int, ...]] = [(1, 0, -1)] * len(w.edges)
        seen: set[int] = set()
        for v in w.boundary:
            for h in v.half_edges:
                e = w.edge_index(h)
                if e not in seen:
                    seen.add(e)
                    self.candidates[e] = COLOR_RANK[v.color]

    def _assign(self, e: int, c: int) -> list[int] | None:
        trail: list[int] = []
        stack = [(e, c)]
        while stack:
            e, c = stack.pop()
            if self.color[e] is not None:
                if self.color[e] != c:
                    self._undo(trail)
                    return None
                continue
            if any(c in self.used[v] for v in self.ends[e]):
                self._undo(trail)
                return None
            self.color[e] = c
            trail.append(e)
            for v in self.ends[e]:
                self.used[v].add(c)
                if len(self.used[v]) == 2:
                    (missing,) = {-1, 0, 1} - self.used[v]
                    for f in self.vert_edges[v]:
                        if self.color[f] is None:
                            stack.append((f, missing))
        return trail

    def _undo(self, trail: list[int]) -> None:
        for e in reversed(trail):
            c = self.color[e]
            for v in self.ends[e]:
                self.used[v].discard(c)
            self.color[e] = None

    def run(self) -> Iterator[EdgeColoring]:
        order = self.order

        def dfs(k: int) -> Iterator[EdgeColoring]:
            while k < len(order) and self.color[order[k]] is not None:
                k += 1
            if k == len(order):
                yield tuple(self.color)  # type: ignore[arg-type]
                return
            e = order[k]
            for c in self.candidates[e]:
                trail = self._assign(e, c)
                if trail is None:
                    continue
                yield from dfs(k + 1)
                self._undo(trail)

        yield from dfs(0)


def iter_colorings(w: Web) -> Iterator[EdgeColoring]:
    """Stream every proper coloring once, in increasing boundary-word order."""
    if any(len(v.half_edges) != 3 for v in w.internal):
        raise WebError("internal vertices must be trivalent")
    return _Search(w).run()


def enumerate_colorings(w: Web) -> list[EdgeColoring]:
    return list(iter_colorings(w))


def minimal_coloring(w: Web) -> EdgeColoring:
    """The proper coloring with lexicographically least boundary word.

    The search assigns boundary edges first, trying colors in preference
    order, so the first complete coloring it meets is minimal.
    """
    for coloring in iter_colorings(w):
        return coloring
    raise ColoringError("web has no proper edge coloring")


def coloring_from_kk(w: Web, labels: Mapping[int, SignState]) -> EdgeColoring:
    """Coloring induced by growth labels.

    A half-edge labelled ``(sign, state)`` colors its edge ``state`` when the
    sign is ``+`` and ``-state`` when it is ``-``.  Unlabelled edges get the
    unique color completing their internal endpoints.
    """
    color: list[int | None] = [None] * len(w.edges)
    for h, (sign, state) in labels.items():
        e = w.edge_index(h)
        c = state * int(sign)
        if color[e] is not None and color[e] != c:
            raise ColoringError(f"edge {e + 1} gets colors {color[e]} and {c} from its labels")
        color[e] = c
    changed = True
    while changed:
        changed = False
        for v in w.internal:
            es = [w.edge_index(h) for h in v.half_edges]
            known = {color[e] for e in es if color[e] is not None}
            blank = [e for e in es if color[e] is None]
            if len(blank) == 1 and len(known) == 2:
                (color[blank[0]],) = {-1, 0, 1} - known
                changed = True
    if any(c is None for c in color):
        raise ColoringError("labels do not determine every edge color")
    result = tuple(color)  # type: ignore[arg-type]
    if not is_proper(w, result):
        raise ColoringError("labels induce an improper coloring")
    return result
