"""Web invariants as polynomials, their leading terms and web-basis expansion."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .coloring import EdgeColoring, coloring_from_kk, iter_colorings
from .growth import grow, kk_labeling
from .polyring import Monomial, Polynomial, VariableOrder, grevlex_key
from .weightpath import Sign, format_string, is_dominant
from .webgraph import (
    Web,
    WebError,
    check_valid,
    clasp,
    half_edge_correspondence,
    sign_of_color,
    unclasp,
    validate,
)

__all__ = [
    "ExpansionError",
    "WebExpansion",
    "internal_sign",
    "coloring_sign",
    "coloring_monomial",
    "evaluate",
    "kk_coloring",
    "leading_term_via_kk",
    "web_from_monomial",
    "expand",
]


class ExpansionError(ValueError):
    """The input is not an integer combination of web invariants of the signature."""


def internal_sign(colors: Sequence[int]) -> int:
    """+1 if the counterclockwise colors are a rotation of (-1, 0, 1), else -1."""
    c0, c1, c2 = colors
    if len({c0, c1, c2}) != 3:
        raise ValueError(f"colors {tuple(colors)} are not distinct")
    return 1 if (c1 - c0) % 3 == 1 else -1


def coloring_sign(w: Web, coloring: EdgeColoring) -> int:
    sign = 1
    for v in w.internal:
        sign *= internal_sign([coloring[w.edge_index(h)] for h in v.half_edges])
    return sign


def coloring_monomial(w: Web, coloring: EdgeColoring, order: VariableOrder | None = None) -> Monomial:
    order = order or VariableOrder(w.signature)
    exps = [0] * order.nvars
    for v in w.boundary:
        for h in v.half_edges:
            exps[order.index(v.id, coloring[w.edge_index(h)])] += 1
    return tuple(exps)


def evaluate(w: Web) -> Polynomial:
    """The invariant of ``w``: signed sum of boundary monomials over all proper colorings."""
    check_valid(w)
    order = VariableOrder(w.signature)
    terms: dict[Monomial, int] = {}
    for coloring in iter_colorings(w):
        m = coloring_monomial(w, coloring, order)
        terms[m] = terms.get(m, 0) + coloring_sign(w, coloring)
    return Polynomial(order, terms)


def kk_coloring(w: Web) -> EdgeColoring:
    """Coloring of ``w`` induced by the KK-labeling of its unclasping.

    Edge indices of ``w`` and of its unclasping coincide, so the coloring is
    computed on the unclasped web and used unchanged.
    """
    flat = unclasp(w)
    labeling = kk_labeling(flat, check=False)
    grown = grow(labeling)
    transfer = half_edge_correspondence(grown.web, flat)
    labels = {transfer[h]: lab for h, lab in grown.labels.items()}
    return coloring_from_kk(flat, labels)


def leading_term_via_kk(w: Web) -> tuple[int, Monomial]:
    """Leading coefficient and monomial of ``[w]`` without expanding the invariant."""
    check_valid(w)
    coloring = kk_coloring(w)
    return coloring_sign(w, coloring), coloring_monomial(w, coloring)


def web_from_monomial(m: Monomial, signature: Sequence[str]) -> Web:
    """The web whose invariant has leading monomial ``m``.

    Each vertex contributes its states in weakly increasing order (black:
    state = color, white: state = -color); the resulting degree-1 string is
    grown and clasped back to the multidegree of ``m``.
    """
    order = VariableOrder(tuple(signature))
    if len(m) != order.nvars:
        raise ExpansionError(f"monomial has {len(m)} exponents, signature needs {order.nvars}")
    string = []
    degrees = []
    for vertex, color in enumerate(order.colors, start=1):
        sign = sign_of_color(color)
        states = sorted(c * int(sign) for c in order.vertex_colors(m, vertex))
        string += [(sign, j) for j in states]
        degrees.append(len(states))
    string = tuple(string)
    if not is_dominant(string):
        raise ExpansionError(f"decoded string {format_string(string)} is not dominant")
    web = clasp(grow(string).web, degrees, order.colors)
    problems = validate(web)
    if problems:
        raise ExpansionError("clasped web is not non-elliptic: " + "; ".join(problems))
    _, lead = leading_term_via_kk(web)
    if lead != m:
        raise ExpansionError("rebuilt web has a different leading monomial")
    return web


@dataclass(frozen=True)
class WebExpansion:
    signature: tuple[str, ...]
    terms: tuple[tuple[int, Web], ...]

    def polynomial(self) -> Polynomial:
        total = Polynomial.zero(VariableOrder(self.signature))
        for c, w in self.terms:
            total = total + evaluate(w).scale(c)
        return total


def expand(f: Polynomial, signature: Sequence[str] | None = None) -> WebExpansion:
    """Write ``f`` as an integer combination of web invariants.

    Repeatedly subtracts the web whose leading monomial is the leading
    monomial of the remainder.
    """
    signature = tuple(signature) if signature is not None else f.order.colors
    if f.order.colors != signature:
        raise ExpansionError("polynomial ring does not match the signature")
    remainder = f
    terms: list[tuple[int, Web]] = []
    while remainder:
        c, m = remainder.leading_term()
        try:
            w = web_from_monomial(m, signature)
        except (ExpansionError, WebError) as exc:
            raise ExpansionError(f"leading monomial {f.order.format_monomial(m)} is not a web leading term: {exc}") from None
        p = evaluate(w)
        lc, lm = p.leading_term()
        if lm != m or lc not in (1, -1):
            raise ExpansionError("web invariant has an unexpected leading term")
        k = c * lc
        remainder = remainder - p.scale(k)
        if remainder and grevlex_key(remainder.leading_term()[1]) >= grevlex_key(m):
            raise ExpansionError("leading monomial did not decrease; input is not in the web span")
        terms.append((k, w))
    return WebExpansion(signature, tuple(terms))
