"""Sparse integer polynomials in the coordinates of boundary vectors and covectors.

For a signature (one ``"B"``/``"W"`` per boundary vertex) each vertex ``i``
owns three variables: ``x[c,i]`` if black, ``y[i,c]`` if white, with
``c`` in {-1, 0, 1}.  Monomials are exponent tuples of length ``3n`` laid out
in the order used by the term order:

    vertex 1 first; black: x[-1,i], x[0,i], x[1,i]; white: y[i,1], y[i,0], y[i,-1].

Graded reverse lexicographic order on that layout: higher total degree wins;
at equal degree, the monomial with the *smaller* exponent at the first
differing position is the larger one.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping, Sequence

__all__ = [
    "Monomial",
    "VariableOrder",
    "Polynomial",
    "PolynomialError",
    "grevlex_key",
    "grevlex_compare",
    "leading_term",
]

Monomial = tuple[int, ...]


class PolynomialError(ValueError):
    pass


@dataclass(frozen=True)
class VariableOrder:
    """Variable layout for a signature; ``colors[i]`` is vertex ``i+1``'s color."""

    colors: tuple[str, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "colors", tuple(self.colors))
        if any(c not in ("B", "W") for c in self.colors):
            raise PolynomialError(f"signature must use 'B'/'W', got {self.colors}")

    @property
    def n(self) -> int:
        return len(self.colors)

    @property
    def nvars(self) -> int:
        return 3 * len(self.colors)

    def index(self, vertex: int, color: int) -> int:
        """Position of the variable of ``vertex`` (1-based) with the given color."""
        if color not in (-1, 0, 1):
            raise PolynomialError(f"color must be -1, 0 or 1, got {color}")
        slot = color + 1 if self.colors[vertex - 1] == "B" else 1 - color
        return 3 * (vertex - 1) + slot

    def variable(self, idx: int) -> tuple[int, int]:
        """Inverse of :meth:`index`: ``(vertex, color)``."""
        vertex, slot = divmod(idx, 3)
        color = slot - 1 if self.colors[vertex] == "B" else 1 - slot
        return vertex + 1, color

    def name(self, idx: int) -> str:
        vertex, color = self.variable(idx)
        if self.colors[vertex - 1] == "B":
            return f"x[{color},{vertex}]"
        return f"y[{vertex},{color}]"

    def monomial(self, factors: Iterable[tuple[int, int]]) -> Monomial:
        """Build a monomial from ``(vertex, color)`` factors, repeats allowed."""
        exps = [0] * self.nvars
        for vertex, color in factors:
            exps[self.index(vertex, color)] += 1
        return tuple(exps)

    def vertex_colors(self, m: Monomial, vertex: int) -> list[int]:
        """Multiset of colors of ``vertex``'s variables in ``m``, as a sorted list."""
        out = []
        for color in (-1, 0, 1):
            out += [color] * m[self.index(vertex, color)]
        return out

    def vertex_degrees(self, m: Monomial) -> tuple[int, ...]:
        return tuple(sum(m[3 * i : 3 * i + 3]) for i in range(self.n))

    def format_monomial(self, m: Monomial) -> str:
        parts = []
        for idx, e in enumerate(m):
            if e:
                parts.append(self.name(idx) + (f"^{e}" if e > 1 else ""))
        return "*".join(parts) if parts else "1"


def grevlex_key(m: Monomial) -> tuple:
    """Key whose natural order is the graded reverse lexicographic order."""
    return (sum(m), tuple(-e for e in m))


def grevlex_compare(m1: Monomial, m2: Monomial) -> int:
    if len(m1) != len(m2):
        raise PolynomialError("monomials live in different rings")
    k1, k2 = grevlex_key(m1), grevlex_key(m2)
    return (k1 > k2) - (k1 < k2)


@dataclass(frozen=True)
class Polynomial:
    order: VariableOrder
    terms: Mapping[Monomial, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        clean = {}
        for m, c in self.terms.items():
            m = tuple(m)
            if len(m) != self.order.nvars:
                raise PolynomialError(f"monomial {m} has wrong length for {self.order.nvars} variables")
            if c:
                clean[m] = int(c)
        object.__setattr__(self, "terms", clean)

    @classmethod
    def zero(cls, order: VariableOrder) -> "Polynomial":
        return cls(order, {})

    @classmethod
    def monomial(cls, order: VariableOrder, m: Monomial, coeff: int = 1) -> "Polynomial":
        return cls(order, {m: coeff})

    def _check(self, other: "Polynomial") -> None:
        if self.order != other.order:
            raise PolynomialError("polynomials belong to different rings")

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self) -> Iterator[tuple[Monomial, int]]:
        return iter(self.terms.items())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.order == other.order and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.order, frozenset(self.terms.items())))

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return Polynomial(self.order, out)

    def __neg__(self) -> "Polynomial":
        return self.scale(-1)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def scale(self, c: int) -> "Polynomial":
        return Polynomial(self.order, {m: c * v for m, v in self.terms.items()})

    def __mul__(self, other: "Polynomial | int") -> "Polynomial":
        if isinstance(other, int):
            return self.scale(other)
        self._check(other)
        out: dict[Monomial, int] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                out[m] = out.get(m, 0) + c1 * c2
        return Polynomial(self.order, out)

    __rmul__ = __mul__

    def sorted_terms(self) -> list[tuple[Monomial, int]]:
        """Terms in grevlex-descending order."""
        return sorted(self.terms.items(), key=lambda t: grevlex_key(t[0]), reverse=True)

    def leading_term(self) -> tuple[int, Monomial]:
        if not self.terms:
            raise PolynomialError("the zero polynomial has no leading term")
        m = max(self.terms, key=grevlex_key)
        return self.terms[m], m

    def __str__(self) -> str:
        return format_polynomial(self)


def leading_term(p: Polynomial) -> tuple[int, Monomial]:
    return p.leading_term()


def format_polynomial(p: Polynomial) -> str:
    if not p.terms:
        return "0"
    out = []
    for k, (m, c) in enumerate(p.sorted_terms()):
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        body = p.order.format_monomial(m)
        if body == "1":
            text = str(mag)
        elif mag == 1:
            text = body
        else:
            text = f"{mag}*{body}"
        if k == 0:
            out.append(("-" if c < 0 else "") + text)
        else:
            out.append(f" {sign} {text}")
    return "".join(out)


_FACTOR = re.compile(r"^(?:x\[(-?\d+),(\d+)\]|y\[(\d+),(-?\d+)\])(?:\^(\d+))?$")


def parse_polynomial(text: str, order: VariableOrder) -> Polynomial:
    """Parse the text format written by :func:`format_polynomial`.

    Variables must match the signature: ``x`` at black vertices, ``y`` at white.
    """
    src = text.strip()
    if not src:
        raise PolynomialError("empty polynomial text")
    tokens = re.split(r"\s+([+-])\s+", src)
    first = tokens[0]
    signs = ["-" if first.startswith("-") else "+"]
    bodies = [first[1:].strip() if first[:1] in "+-" else first]
    for k in range(1, len(tokens), 2):
        signs.append(tokens[k])
        bodies.append(tokens[k + 1].strip())
    out: dict[Monomial, int] = {}
    for sign, body in zip(signs, bodies):
        coeff = 1
        exps = [0] * order.nvars
        for factor in body.split("*"):
            factor = factor.strip()
            if re.fullmatch(r"\d+", factor):
                coeff *= int(factor)
                continue
            match = _FACTOR.match(factor)
            if not match:
                raise PolynomialError(f"cannot parse factor {factor!r}")
            xc, xi, yi, yc, power = match.groups()
            if xc is not None:
                vertex, color, kind = int(xi), int(xc), "B"
            else:
                vertex, color, kind = int(yi), int(yc), "W"
            if not 1 <= vertex <= order.n:
                raise PolynomialError(f"vertex {vertex} outside the signature")
            if order.colors[vertex - 1] != kind:
                raise PolynomialError(f"variable {factor!r} does not match the color of vertex {vertex}")
            exps[order.index(vertex, color)] += int(power) if power else 1
        m = tuple(exps)
        out[m] = out.get(m, 0) + (coeff if sign == "+" else -coeff)
    return Polynomial(order, out)


__all__ += ["format_polynomial", "parse_polynomial"]
