"""Khovanov-Kuperberg growth: dominant sign/state strings to webs.

Growth starts from a row of dangling edges hanging below the boundary and
repeatedly rewrites an adjacent pair with one of seven local rules:

* three H rules on opposite signs, which add two internal vertices joined by
  an unlabelled horizontal edge and swap the signs of the two edges;
* the cap, which joins an opposite-sign pair with states (1, -1);
* three Y rules on equal signs, which add one internal vertex with a single
  lower edge of the opposite sign.

Internal rotations follow the picture with the boundary on top, read
counterclockwise: H left vertex (horizontal, top, bottom), H right vertex
(top, horizontal, bottom), Y vertex (top-right, top-left, bottom).
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Sequence

from .weightpath import Sign, SignState, SignStateString, is_dominant, format_string
from .webgraph import Vertex, Web, WebError, check_valid, color_of_sign, sign_of_color, webs_equal

__all__ = [
    "GrowthRule",
    "RULES",
    "GrowthError",
    "GrowthResult",
    "FrontierEntry",
    "applicable_rules",
    "grow",
    "kk_labeling",
]


class GrowthError(ValueError):
    pass


@dataclass(frozen=True)
class GrowthRule:
    kind: str
    same_sign: bool
    top: tuple[int, int]
    bottom: tuple[int, ...]

    def output(self, left_sign: Sign, right_sign: Sign) -> tuple[SignState, ...]:
        if self.same_sign:
            return tuple((-left_sign, j) for j in self.bottom)
        return tuple(zip((right_sign, left_sign), self.bottom))


RULES: tuple[GrowthRule, ...] = (
    GrowthRule("H-swap-10", False, (1, 0), (0, 1)),
    GrowthRule("H-swap-00", False, (0, 0), (-1, 1)),
    GrowthRule("H-swap-0m1", False, (0, -1), (-1, 0)),
    GrowthRule("cap", False, (1, -1), ()),
    GrowthRule("Y-11", True, (1, 0), (1,)),
    GrowthRule("Y-0m1", True, (0, -1), (-1,)),
    GrowthRule("Y-1m1", True, (1, -1), (0,)),
)

_RULE_BY_PATTERN = {(r.same_sign, r.top): r for r in RULES}

# (half-edge id, sign, state) of an edge hanging from the part already built
FrontierEntry = tuple[int, Sign, int]


def applicable_rules(frontier: Sequence[tuple]) -> list[tuple[int, GrowthRule]]:
    """Return ``(position, rule)`` for every adjacent pair matching a rule.

    ``frontier`` holds ``(sign, state)`` pairs or ``(half_edge, sign, state)``
    triples; positions are 1-based and name the left member of the pair.
    """
    pairs = [entry[-2:] for entry in frontier]
    found = []
    for p in range(len(pairs) - 1):
        (s1, j1), (s2, j2) = pairs[p], pairs[p + 1]
        rule = _RULE_BY_PATTERN.get((s1 == s2, (j1, j2)))
        if rule is not None:
            found.append((p + 1, rule))
    return found


@dataclass(frozen=True)
class GrowthResult:
    """A grown web with the sign/state pair of every labelled half-edge.

    ``labels`` is keyed by the upper half-edge of each non-horizontal edge.
    A cap edge carries two labels, one per end; H horizontals carry none.
    """

    web: Web
    labels: dict[int, SignState]
    steps: tuple[tuple[int, str], ...] = field(default=())

    def edge_labels(self) -> dict[int, list[SignState]]:
        out: dict[int, list[SignState]] = {}
        for h, lab in self.labels.items():
            out.setdefault(self.web.edge_index(h), []).append(lab)
        return out

    def boundary_string(self) -> SignStateString:
        return tuple(self.labels[v.half_edges[0]] for v in self.web.boundary)


class _Builder:
    def __init__(self, n: int) -> None:
        self.next_half = 1
        self.next_vertex = n + 1
        self.internal: list[Vertex] = []
        self.edges: list[tuple[int, int]] = []

    def half(self) -> int:
        h = self.next_half
        self.next_half += 1
        return h

    def vertex(self, color: str, half_edges: tuple[int, ...]) -> None:
        self.internal.append(Vertex(self.next_vertex, color, half_edges))
        self.next_vertex += 1


def grow(s: Sequence[SignState], rng: random.Random | None = None) -> GrowthResult:
    """Grow the non-elliptic web of the dominant string ``s``.

    Rules are applied at the leftmost applicable position unless ``rng`` is
    given, in which case each step picks uniformly among applicable rules.
    """
    s = tuple((Sign(sign), state) for sign, state in s)
    if not is_dominant(s):
        raise GrowthError(f"string {format_string(s)!r} is not dominant")
    n = len(s)
    b = _Builder(n)
    labels: dict[int, SignState] = {}
    boundary = []
    frontier: list[FrontierEntry] = []
    for k, (sign, state) in enumerate(s, start=1):
        h = b.half()
        boundary.append(Vertex(k, color_of_sign(sign), (h,)))
        frontier.append((h, sign, state))
        labels[h] = (sign, state)

    steps: list[tuple[int, str]] = []
    limit = n * n
    while frontier:
        options = applicable_rules(frontier)
        if not options:
            raise GrowthError(f"no growth rule applies to frontier {format_string([e[1:] for e in frontier])}")
        if len(steps) >= limit:
            raise GrowthError(f"growth exceeded {limit} steps")
        pos, rule = options[0] if rng is None else rng.choice(options)
        p = pos - 1
        (hl, sl, _), (hr, sr, _) = frontier[p], frontier[p + 1]
        produced: list[FrontierEntry] = []
        outputs = rule.output(sl, sr)
        if rule.kind == "cap":
            b.edges.append((hl, hr))
        elif rule.same_sign:
            tl, tr, bottom = b.half(), b.half(), b.half()
            b.vertex(color_of_sign(-sl), (tr, tl, bottom))
            b.edges += [(hl, tl), (hr, tr)]
            produced.append((bottom, *outputs[0]))
        else:
            tl, horiz_l, bottom_l = b.half(), b.half(), b.half()
            tr, horiz_r, bottom_r = b.half(), b.half(), b.half()
            b.vertex(color_of_sign(-sl), (horiz_l, tl, bottom_l))
            b.vertex(color_of_sign(-sr), (tr, horiz_r, bottom_r))
            b.edges += [(hl, tl), (hr, tr), (horiz_l, horiz_r)]
            produced.append((bottom_l, *outputs[0]))
            produced.append((bottom_r, *outputs[1]))
        for h, sign, state in produced:
            labels[h] = (sign, state)
        frontier[p : p + 2] = produced
        steps.append((pos, rule.kind))

    web = Web(tuple(boundary), tuple(b.internal), tuple(b.edges))
    return GrowthResult(web, labels, tuple(steps))


def kk_labeling(w: Web, check: bool = True) -> SignStateString:
    """Recover the dominant string that grows ``w``.

    The states are read off the lexicographically minimal proper coloring
    (black: state = color, white: state = -color).  With ``check`` the string
    is regrown and compared with ``w`` up to relabelling.
    """
    from .coloring import minimal_coloring

    if any(len(v.half_edges) != 1 for v in w.boundary):
        raise WebError("KK-labeling needs every boundary vertex to have degree 1")
    check_valid(w)
    colors = minimal_coloring(w)
    string = []
    for v in w.boundary:
        sign = sign_of_color(v.color)
        c = colors[w.edge_index(v.half_edges[0])]
        string.append((sign, c * int(sign)))
    result = tuple(string)
    if not is_dominant(result):
        raise WebError(f"minimal coloring gives non-dominant string {format_string(result)}")
    if check and not webs_equal(grow(result).web, w):
        raise WebError(f"string {format_string(result)} does not grow back to this web")
    return result
