"""Sign/state strings and their paths in the SL3 weight lattice.

Weights are written in fundamental-weight coordinates ``(c1, c2)`` so that
the dominant chamber is simply ``c1 >= 0 and c2 >= 0``.
"""

from __future__ import annotations

from enum import IntEnum
from typing import Iterable, Iterator, Sequence

__all__ = [
    "Sign",
    "STATES",
    "SignState",
    "SignStateString",
    "WeightPoint",
    "weight_of",
    "path_of",
    "is_dominant",
    "dominant_strings",
    "parse_string",
    "format_string",
]


class Sign(IntEnum):
    """``PLUS`` marks a black boundary vertex (a vector), ``MINUS`` a white one."""

    PLUS = 1
    MINUS = -1

    @property
    def symbol(self) -> str:
        return "+" if self is Sign.PLUS else "-"

    def __neg__(self) -> "Sign":
        return Sign(-int(self))


STATES = (1, 0, -1)

SignState = tuple[Sign, int]
SignStateString = tuple[SignState, ...]
WeightPoint = tuple[int, int]

_PLUS_WEIGHTS: dict[int, WeightPoint] = {1: (1, 0), 0: (-1, 1), -1: (0, -1)}


def weight_of(sign: Sign | int, state: int) -> WeightPoint:
    if state not in _PLUS_WEIGHTS:
        raise ValueError(f"state must be one of -1, 0, 1, got {state!r}")
    if sign == Sign.PLUS:
        return _PLUS_WEIGHTS[state]
    if sign == Sign.MINUS:
        c1, c2 = _PLUS_WEIGHTS[-state]
        return (-c1, -c2)
    raise ValueError(f"sign must be +1 or -1, got {sign!r}")


def path_of(s: Sequence[SignState]) -> list[WeightPoint]:
    """Return the lattice points ``pi_0, ..., pi_n`` visited by ``s``."""
    c1 = c2 = 0
    path = [(0, 0)]
    for sign, state in s:
        d1, d2 = weight_of(sign, state)
        c1 += d1
        c2 += d2
        path.append((c1, c2))
    return path


def is_dominant(s: Sequence[SignState]) -> bool:
    path = path_of(s)
    return path[-1] == (0, 0) and all(c1 >= 0 and c2 >= 0 for c1, c2 in path)


def dominant_strings(length: int, signs: Sequence[Sign] | None = None) -> Iterator[SignStateString]:
    """Yield every dominant string of exactly ``length`` entries.

    If ``signs`` is given only strings with that sign string are produced.
    Output order is lexicographic in (sign, state) with ``+`` before ``-`` and
    states in the order 1, 0, -1.
    """
    if signs is not None and len(signs) != length:
        raise ValueError("sign string length does not match")

    prefix: list[SignState] = []

    def rec(pos: int, c1: int, c2: int) -> Iterator[SignStateString]:
        remaining = length - pos
        # every step moves c1 + c2 by at most 1
        if c1 + c2 > remaining:
            return
        if remaining == 0:
            if c1 == 0 and c2 == 0:
                yield tuple(prefix)
            return
        choices = (Sign.PLUS, Sign.MINUS) if signs is None else (Sign(signs[pos]),)
        for sign in choices:
            for state in STATES:
                d1, d2 = weight_of(sign, state)
                n1, n2 = c1 + d1, c2 + d2
                if n1 < 0 or n2 < 0:
                    continue
                prefix.append((sign, state))
                yield from rec(pos + 1, n1, n2)
                prefix.pop()

    yield from rec(0, 0, 0)


def _parse_token(token: str) -> SignState:
    token = token.strip()
    if len(token) < 2 or token[0] not in "+-":
        raise ValueError(f"bad sign/state token {token!r}")
    try:
        state = int(token[1:])
    except ValueError:
        raise ValueError(f"bad state in token {token!r}") from None
    if state not in STATES or token[1:] not in ("1", "0", "-1"):
        raise ValueError(f"bad state in token {token!r}")
    return (Sign.PLUS if token[0] == "+" else Sign.MINUS, state)


def parse_string(text: str) -> SignStateString:
    """Parse ``+1,+0,--1`` style text; the empty string is the empty word."""
    text = text.strip()
    if not text:
        return ()
    return tuple(_parse_token(tok) for tok in text.split(","))


def format_string(s: Iterable[SignState]) -> str:
    return ",".join(f"{Sign(sign).symbol}{state}" for sign, state in s)
