"""Webs as rotation systems in a disk.

A web is stored combinatorially.  Every edge is a pair of half-edge ids, and
every vertex owns an ordered tuple of half-edges:

* internal vertices list their three half-edges counterclockwise;
* boundary vertices list theirs in the clockwise direction of the boundary,
  i.e. in the order the endpoints would appear after unclasping.

Boundary vertices are numbered ``1..n`` clockwise.  Vertex colors are ``"B"``
(black, vector argument) and ``"W"`` (white, covector argument).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .weightpath import Sign, SignStateString

__all__ = [
    "BLACK",
    "WHITE",
    "WebError",
    "Vertex",
    "Web",
    "validate",
    "check_valid",
    "webs_equal",
    "make_web",
    "canonical_form",
    "normalize",
    "half_edge_correspondence",
    "unclasp",
    "clasp",
    "trim",
    "parse_web",
    "format_web",
    "sign_of_color",
    "color_of_sign",
]

BLACK = "B"
WHITE = "W"


class WebError(ValueError):
    """Raised for malformed webs or violated preconditions of a surgery."""


def sign_of_color(color: str) -> Sign:
    return Sign.PLUS if color == BLACK else Sign.MINUS


def color_of_sign(sign: Sign | int) -> str:
    return BLACK if sign == Sign.PLUS else WHITE


def _opposite(color: str) -> str:
    return WHITE if color == BLACK else BLACK


@dataclass(frozen=True)
class Vertex:
    id: int
    color: str
    half_edges: tuple[int, ...]


@dataclass(frozen=True)
class Web:
    boundary: tuple[Vertex, ...]
    internal: tuple[Vertex, ...]
    edges: tuple[tuple[int, int], ...]
    _owner: dict = field(init=False, repr=False, compare=False, hash=False)
    _twin: dict = field(init=False, repr=False, compare=False, hash=False)
    _edge_index: dict = field(init=False, repr=False, compare=False, hash=False)
    _vertex: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self) -> None:
        boundary = tuple(self.boundary)
        internal = tuple(self.internal)
        edges = tuple((int(a), int(b)) for a, b in self.edges)
        object.__setattr__(self, "boundary", boundary)
        object.__setattr__(self, "internal", internal)
        object.__setattr__(self, "edges", edges)

        for k, v in enumerate(boundary, start=1):
            if v.id != k:
                raise WebError(f"boundary vertex in position {k} has id {v.id}; ids must be 1..n in order")
        vertex: dict[int, Vertex] = {}
        owner: dict[int, int] = {}
        for v in boundary + internal:
            if v.color not in (BLACK, WHITE):
                raise WebError(f"vertex {v.id} has unknown color {v.color!r}")
            if v.id in vertex:
                raise WebError(f"duplicate vertex id {v.id}")
            vertex[v.id] = v
            for h in v.half_edges:
                if h in owner:
                    raise WebError(f"half-edge {h} attached to more than one vertex")
                owner[h] = v.id
        twin: dict[int, int] = {}
        edge_index: dict[int, int] = {}
        for k, (a, b) in enumerate(edges):
            for h in (a, b):
                if h not in owner:
                    raise WebError(f"half-edge {h} of edge {a}-{b} is not attached to a vertex")
                if h in twin:
                    raise WebError(f"half-edge {h} used by more than one edge")
            if a == b:
                raise WebError(f"edge {a}-{b} uses the same half-edge twice")
            twin[a], twin[b] = b, a
            edge_index[a] = edge_index[b] = k
        dangling = set(owner) - set(twin)
        if dangling:
            raise WebError(f"half-edges without an edge: {sorted(dangling)}")
        object.__setattr__(self, "_owner", owner)
        object.__setattr__(self, "_twin", twin)
        object.__setattr__(self, "_edge_index", edge_index)
        object.__setattr__(self, "_vertex", vertex)

    # -- lookups -----------------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.boundary)

    def vertex(self, vid: int) -> Vertex:
        return self._vertex[vid]

    def owner(self, h: int) -> int:
        return self._owner[h]

    def twin(self, h: int) -> int:
        return self._twin[h]

    def edge_index(self, h: int) -> int:
        return self._edge_index[h]

    def is_boundary(self, vid: int) -> bool:
        return 1 <= vid <= len(self.boundary)

    def color(self, vid: int) -> str:
        return self._vertex[vid].color

    def endpoints(self, k: int) -> tuple[int, int]:
        a, b = self.edges[k]
        return self._owner[a], self._owner[b]

    def rot_next(self, h: int) -> int:
        hs = self._vertex[self._owner[h]].half_edges
        return hs[(hs.index(h) + 1) % len(hs)]

    def rot_prev(self, h: int) -> int:
        hs = self._vertex[self._owner[h]].half_edges
        return hs[(hs.index(h) - 1) % len(hs)]

    @property
    def signature(self) -> tuple[str, ...]:
        return tuple(v.color for v in self.boundary)

    @property
    def multidegree(self) -> tuple[int, ...]:
        return tuple(len(v.half_edges) for v in self.boundary)

    @property
    def sign_string(self) -> tuple[Sign, ...]:
        return tuple(sign_of_color(v.color) for v in self.boundary)

    def boundary_half_edges(self) -> list[int]:
        """Half-edges at the boundary, read clockwise from vertex 1."""
        return [h for v in self.boundary for h in v.half_edges]

    def __str__(self) -> str:
        return format_web(self)


# -- validation ---------------------------------------------------------------


def _face_count(w: Web) -> tuple[int, int, int, int]:
    """Return (V, E, F, components) for the web closed up by its boundary circle."""
    rot: dict[object, list] = {}
    twin: dict[object, object] = dict(w._twin)
    n = w.n
    for v in w.boundary:
        k = v.id
        nxt = ("arc", k, 0)
        prv = ("arc", (k - 2) % n + 1, 1)
        rot[k] = [nxt, prv, *v.half_edges]
    for k in range(1, n + 1):
        twin[("arc", k, 0)] = ("arc", k, 1)
        twin[("arc", k, 1)] = ("arc", k, 0)
    for v in w.internal:
        rot[v.id] = list(v.half_edges)

    succ: dict[object, object] = {}
    for hs in rot.values():
        for j, h in enumerate(hs):
            succ[h] = hs[(j + 1) % len(hs)]

    seen: set = set()
    faces = 0
    for h in twin:
        if h in seen:
            continue
        faces += 1
        cur = h
        while cur not in seen:
            seen.add(cur)
            cur = succ[twin[cur]]

    owner: dict[object, int] = dict(w._owner)
    for k in range(1, n + 1):
        owner[("arc", k, 0)] = k
        owner[("arc", k, 1)] = k % n + 1
    parent = {vid: vid for vid in rot}

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for h, t in twin.items():
        a, b = find(owner[h]), find(owner[t])
        if a != b:
            parent[a] = b
    components = len({find(v) for v in rot})
    return len(rot), len(twin) // 2, faces, components


def validate(w: Web) -> list[str]:
    """List every way in which ``w`` fails to be a non-elliptic web.

    Parallel edges joining two boundary vertices are accepted: they encode
    powers of the pairing invariant.  A multiple edge at an internal vertex is
    reported.
    """
    problems: list[str] = []
    for v in w.internal:
        if len(v.half_edges) != 3:
            problems.append(f"internal vertex {v.id} has degree {len(v.half_edges)}, expected 3")
    for k, (a, b) in enumerate(w.edges):
        u, v = w.owner(a), w.owner(b)
        if u == v:
            problems.append(f"edge {k + 1} is a loop at vertex {u}")
        elif w.color(u) == w.color(v):
            problems.append(f"edge {k + 1} joins vertices {u} and {v} of the same color")

    pair_count: dict[tuple[int, int], int] = {}
    for k in range(len(w.edges)):
        u, v = w.endpoints(k)
        key = (min(u, v), max(u, v))
        pair_count[key] = pair_count.get(key, 0) + 1
    for (u, v), c in sorted(pair_count.items()):
        if c > 1 and not (w.is_boundary(u) and w.is_boundary(v)):
            problems.append(f"multiple edge ({c} copies) between vertices {u} and {v}")

    nbrs: dict[int, set[int]] = {v.id: set() for v in w.internal}
    for k in range(len(w.edges)):
        u, v = w.endpoints(k)
        if u in nbrs and v in nbrs and u != v:
            nbrs[u].add(v)
            nbrs[v].add(u)
    squares: set[frozenset[int]] = set()
    for a in nbrs:
        for b in nbrs[a]:
            for d in nbrs[a]:
                if b >= d:
                    continue
                for c in nbrs[b] & nbrs[d]:
                    if c != a:
                        squares.add(frozenset((a, b, c, d)))
    for sq in sorted(squares, key=sorted):
        problems.append(f"4-cycle on internal vertices {sorted(sq)}")

    if w.n == 0:
        if w.internal:
            problems.append("closed component without boundary vertices")
        return problems
    if any(len(v.half_edges) != 3 for v in w.internal):
        return problems  # face tracing needs a well-formed rotation system
    V, E, F, C = _face_count(w)
    if C > 1:
        problems.append(f"{C - 1} closed component(s) without boundary vertices")
    if V - E + F != 2 * C:
        problems.append(f"rotation system is not planar in the disk (V-E+F={V - E + F}, expected {2 * C})")
    return problems


def check_valid(w: Web) -> None:
    problems = validate(w)
    if problems:
        raise WebError("invalid web: " + "; ".join(problems))


# -- canonical relabelling ----------------------------------------------------


def _canonical_labels(w: Web) -> tuple[list[tuple[Vertex, tuple[int, ...]]], dict[int, int], dict[int, int]]:
    n = w.n
    order: list[tuple[Vertex, tuple[int, ...]]] = []
    new_id: dict[int, int] = {}
    queue: deque[tuple[int, int]] = deque()

    def discover(h: int) -> None:
        vid = w.owner(h)
        if vid in new_id or w.is_boundary(vid):
            return
        new_id[vid] = n + 1 + len(new_id)
        queue.append((vid, h))

    for v in w.boundary:
        new_id[v.id] = v.id
        order.append((v, v.half_edges))
        for h in v.half_edges:
            discover(w.twin(h))
    while queue:
        vid, anchor = queue.popleft()
        v = w.vertex(vid)
        k = v.half_edges.index(anchor)
        rotated = v.half_edges[k:] + v.half_edges[:k]
        order.append((v, rotated))
        for h in rotated:
            discover(w.twin(h))
    if len(new_id) != n + len(w.internal):
        raise WebError("web has internal vertices not connected to the boundary")

    new_half: dict[int, int] = {}
    for _, hs in order:
        for h in hs:
            new_half[h] = len(new_half) + 1
    return order, new_id, new_half


def normalize(w: Web) -> Web:
    """Relabel ``w`` canonically.

    Internal vertices are numbered ``n+1, n+2, ...`` in breadth-first order
    from the boundary, each internal rotation starts at the half-edge through
    which the vertex was discovered, and half-edges are numbered in vertex
    order.  Two webs that differ only by ids normalize to equal values.
    """
    order, new_id, new_half = _canonical_labels(w)
    boundary = []
    internal = []
    for v, hs in order:
        nv = Vertex(new_id[v.id], v.color, tuple(new_half[h] for h in hs))
        (boundary if w.is_boundary(v.id) else internal).append(nv)
    edges = sorted(tuple(sorted((new_half[a], new_half[b]))) for a, b in w.edges)
    return Web(tuple(boundary), tuple(internal), tuple(edges))


def half_edge_correspondence(a: Web, b: Web) -> dict[int, int]:
    """Map each half-edge of ``a`` to the matching half-edge of ``b``.

    Raises :class:`WebError` if the webs are not equal up to relabelling.
    """
    if not webs_equal(a, b):
        raise WebError("webs are not isomorphic")
    _, _, half_a = _canonical_labels(a)
    _, _, half_b = _canonical_labels(b)
    inverse_b = {k: h for h, k in half_b.items()}
    return {h: inverse_b[k] for h, k in half_a.items()}


def canonical_form(w: Web) -> bytes:
    """Bytes that agree exactly for webs equal up to relabelling.

    The boundary is fixed linearly: vertex 1 stays vertex 1.
    """
    check_valid(w)
    return format_web(normalize(w)).encode("ascii")


# -- unclasping and clasping ---------------------------------------------------


def unclasp(w: Web) -> Web:
    """Split every boundary vertex of degree d into d consecutive degree-1 vertices.

    Half-edge ids and the edge list are preserved, so edge indices of ``w``
    and of the result refer to the same edges.  Degree-0 boundary vertices
    disappear.
    """
    check_valid(w)
    boundary = []
    for v in w.boundary:
        for h in v.half_edges:
            boundary.append(Vertex(len(boundary) + 1, v.color, (h,)))
    internal = list(w.internal)
    if any(1 <= v.id <= len(boundary) for v in internal):
        internal = [Vertex(len(boundary) + 1 + k, v.color, v.half_edges) for k, v in enumerate(internal)]
    return Web(tuple(boundary), tuple(internal), w.edges)


def clasp(w: Web, degrees: Sequence[int], colors: Sequence[str] | None = None) -> Web:
    """Merge consecutive groups of degree-1 boundary vertices.

    ``degrees[k]`` vertices are merged into new boundary vertex ``k+1``.  A
    zero entry creates an isolated boundary vertex, whose color must then be
    supplied through ``colors``.  The result is not validated; clasping can
    create a multiple edge at an internal vertex, which :func:`validate`
    reports.
    """
    if any(len(v.half_edges) != 1 for v in w.boundary):
        raise WebError("clasp needs every boundary vertex to have degree 1")
    if any(d < 0 for d in degrees):
        raise WebError("clasp multidegree entries must be nonnegative")
    if colors is not None and len(colors) != len(degrees):
        raise WebError("colors and multidegree differ in length")
    if sum(degrees) != w.n:
        raise WebError(f"multidegree sums to {sum(degrees)} but the web has {w.n} boundary vertices")
    boundary = []
    pos = 0
    for k, d in enumerate(degrees):
        group = w.boundary[pos : pos + d]
        if d == 0:
            if colors is None:
                raise WebError("a degree-0 clasp needs the vertex color")
            color = colors[k]
        else:
            found = {v.color for v in group}
            if len(found) != 1:
                raise WebError(f"boundary vertices {pos + 1}..{pos + d} do not share a color")
            color = found.pop()
            if colors is not None and colors[k] != color:
                raise WebError(f"group {k + 1} has color {color}, expected {colors[k]}")
        boundary.append(Vertex(len(boundary) + 1, color, tuple(v.half_edges[0] for v in group)))
        pos += d
    return Web(tuple(boundary), w.internal, w.edges)


# -- trimming --------------------------------------------------------------------


def trim(w: Web, labeling: SignStateString) -> tuple[Web, SignStateString]:
    """Remove the first boundary position whose state is not 1.

    ``labeling`` must be the KK-labeling of ``w``.  With ``i`` the smallest
    index such that the state at ``i+1`` differs from 1, the boundary vertices
    ``i`` and ``i+1`` meet in one of three ways: an H (two internal vertices
    joined by an edge), a Y (one internal vertex) or a cap (one edge).  The H
    and Y are cut off leaving their lower edges as new boundary edges; the cap
    is deleted.  Returns the trimmed web and the state string read off its
    boundary.
    """
    from .weightpath import is_dominant

    if any(len(v.half_edges) != 1 for v in w.boundary):
        raise WebError("trim needs every boundary vertex to have degree 1")
    if len(labeling) != w.n:
        raise WebError("labeling length does not match the boundary")
    if w.n < 2:
        raise WebError("trim needs at least two boundary vertices")
    if not is_dominant(labeling):
        raise WebError("labeling is not dominant")
    for k, (sign, _) in enumerate(labeling):
        if sign_of_color(w.boundary[k].color) != sign:
            raise WebError(f"labeling sign at position {k + 1} disagrees with the vertex color")

    states = [j for _, j in labeling]
    i = next(k for k in range(1, w.n) if states[k] != 1)  # 1-based left vertex
    left, right = w.boundary[i - 1], w.boundary[i]
    (s_l, j_l), (s_r, j_r) = labeling[i - 1], labeling[i]
    h_l, h_r = left.half_edges[0], right.half_edges[0]
    t_l, t_r = w.twin(h_l), w.twin(h_r)
    u, v = w.owner(t_l), w.owner(t_r)

    removed_vertices = {left.id, right.id}
    removed_edges = {w.edge_index(h_l), w.edge_index(h_r)}
    new_vertices: list[Vertex]
    new_labels: SignStateString

    if t_l == h_r:
        if s_l == s_r or (j_l, j_r) != (1, -1):
            raise WebError(f"cap between {i} and {i + 1} does not match labels {labeling[i - 1]}, {labeling[i]}")
        new_vertices, new_labels = [], ()
    elif u == v and not w.is_boundary(u):
        if w.rot_next(t_r) != t_l:
            raise WebError(f"vertices {i} and {i + 1} meet at {u} in the wrong rotation")
        if s_l != s_r or j_l <= j_r:
            raise WebError(f"Y at {i}, {i + 1} does not match labels {labeling[i - 1]}, {labeling[i]}")
        bottom = w.rot_next(t_l)
        removed_vertices.add(u)
        new_vertices = [Vertex(0, w.color(u), (bottom,))]
        new_labels = ((-s_l, {(1, 0): 1, (0, -1): -1, (1, -1): 0}[(j_l, j_r)]),)
    elif not w.is_boundary(u) and not w.is_boundary(v) and u != v:
        horiz_u, bottom_u = w.rot_prev(t_l), w.rot_next(t_l)
        horiz_v, bottom_v = w.rot_next(t_r), w.rot_prev(t_r)
        if w.twin(horiz_u) != horiz_v:
            raise WebError(f"vertices {i} and {i + 1} are not joined by an H, Y or cap")
        if s_l == s_r or (j_l, j_r) != (1, 0):
            raise WebError(f"H at {i}, {i + 1} does not match labels {labeling[i - 1]}, {labeling[i]}")
        removed_vertices |= {u, v}
        removed_edges.add(w.edge_index(horiz_u))
        new_vertices = [Vertex(0, w.color(u), (bottom_u,)), Vertex(0, w.color(v), (bottom_v,))]
        new_labels = ((s_r, 0), (s_l, 1))
    else:
        raise WebError(f"vertices {i} and {i + 1} are not joined by an H, Y or cap")

    old_boundary = list(w.boundary[: i - 1]) + new_vertices + list(w.boundary[i + 1 :])
    boundary = tuple(Vertex(k, v.color, v.half_edges) for k, v in enumerate(old_boundary, start=1))
    internal = tuple(x for x in w.internal if x.id not in removed_vertices)
    edges = tuple(e for k, e in enumerate(w.edges) if k not in removed_edges)
    trimmed = Web(boundary, internal, edges)
    string = tuple(labeling[: i - 1]) + new_labels + tuple(labeling[i + 1 :])
    return trimmed, string


# -- text format -------------------------------------------------------------------


def format_web(w: Web) -> str:
    lines = [f"web n={w.n}"]
    for v in w.boundary:
        lines.append(" ".join(["b", str(v.id), v.color, *map(str, v.half_edges)]))
    for v in w.internal:
        lines.append(" ".join(["i", str(v.id), v.color, *map(str, v.half_edges)]))
    for a, b in w.edges:
        lines.append(f"e {a} {b}")
    return "\n".join(lines) + "\n"


def parse_web(text: str) -> Web:
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines or not lines[0].startswith("web"):
        raise WebError("missing 'web n=<count>' header")
    header = lines[0].split()
    try:
        (count,) = [int(tok[2:]) for tok in header[1:] if tok.startswith("n=")]
    except ValueError:
        raise WebError(f"bad header {lines[0]!r}") from None
    boundary: list[Vertex] = []
    internal: list[Vertex] = []
    edges: list[tuple[int, int]] = []
    for ln in lines[1:]:
        tok = ln.split()
        try:
            if tok[0] in ("b", "i"):
                v = Vertex(int(tok[1]), tok[2], tuple(int(t) for t in tok[3:]))
                (boundary if tok[0] == "b" else internal).append(v)
            elif tok[0] == "e" and len(tok) == 3:
                edges.append((int(tok[1]), int(tok[2])))
            else:
                raise WebError(f"unrecognised line {ln!r}")
        except (IndexError, ValueError) as exc:
            if isinstance(exc, WebError):
                raise
            raise WebError(f"unparsable line {ln!r}") from None
    if len(boundary) != count:
        raise WebError(f"header declares {count} boundary vertices, found {len(boundary)}")
    return Web(tuple(boundary), tuple(internal), tuple(edges))


def webs_equal(a: Web, b: Web) -> bool:
    """Equality up to relabelling, with the boundary held fixed."""
    return a.n == b.n and canonical_form(a) == canonical_form(b)


def make_web(
    boundary: Iterable[tuple[str, Sequence[int]]],
    internal: Iterable[tuple[int, str, Sequence[int]]],
    edges: Iterable[tuple[int, int]],
) -> Web:
    """Convenience constructor: boundary given as (color, half-edges) in order."""
    b = tuple(Vertex(k, c, tuple(hs)) for k, (c, hs) in enumerate(boundary, start=1))
    i = tuple(Vertex(vid, c, tuple(hs)) for vid, c, hs in internal)
    return Web(b, i, tuple(edges))
