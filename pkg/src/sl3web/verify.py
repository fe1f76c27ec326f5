"""Exhaustive property checks over all dominant strings up to a length.

Each check returns a :class:`CheckResult`; a failure records the offending
string.  Used by ``sl3web verify`` and by the acceptance tests.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Callable, Iterator

from .coloring import coloring_from_kk, iter_colorings, minimal_coloring, word_key
from .growth import grow, kk_labeling
from .invariant import coloring_monomial, coloring_sign, evaluate, leading_term_via_kk
from .polyring import VariableOrder, grevlex_key
from .weightpath import SignStateString, dominant_strings, format_string, path_of
from .webgraph import canonical_form, clasp, trim, unclasp, validate, webs_equal

__all__ = ["CheckResult", "CHECKS", "all_dominant", "run_checks", "monotone_clasps"]


@dataclass
class CheckResult:
    name: str
    checked: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def fail(self, what: str) -> None:
        self.failures.append(what)


def all_dominant(max_len: int, min_len: int = 1) -> Iterator[SignStateString]:
    for n in range(min_len, max_len + 1):
        yield from dominant_strings(n)


def check_paths(max_len: int) -> CheckResult:
    res = CheckResult("dominant strings start at state 1 and end at state -1")
    for s in all_dominant(max_len):
        res.checked += 1
        path = path_of(s)
        if len(path) != len(s) + 1 or path[0] != (0, 0) or s[0][1] != 1 or s[-1][1] != -1:
            res.fail(format_string(s))
    return res


def check_growth_valid(max_len: int) -> CheckResult:
    res = CheckResult("grown webs are non-elliptic")
    for s in all_dominant(max_len):
        res.checked += 1
        if validate(grow(s).web):
            res.fail(format_string(s))
    return res


def check_round_trip(max_len: int) -> CheckResult:
    res = CheckResult("kk_labeling(grow(s)) == s")
    for s in all_dominant(max_len):
        res.checked += 1
        if kk_labeling(grow(s).web, check=False) != s:
            res.fail(format_string(s))
    return res


def check_confluence(max_len: int, orders: int = 10, seed: int = 0) -> CheckResult:
    res = CheckResult(f"{orders} random growth orders agree")
    rng = random.Random(seed)
    for s in all_dominant(max_len):
        res.checked += 1
        ref = canonical_form(grow(s).web)
        if any(canonical_form(grow(s, rng=rng).web) != ref for _ in range(orders)):
            res.fail(format_string(s))
    return res


def check_minimal_coloring(max_len: int) -> CheckResult:
    """KK coloring is the unique lexicographic minimum, and leading terms agree."""
    res = CheckResult("KK coloring is the unique minimum and gives the leading term")
    for s in all_dominant(max_len):
        res.checked += 1
        g = grow(s)
        w = g.web
        kk = coloring_from_kk(w, g.labels)
        order = VariableOrder(w.signature)
        best = word_key(w, kk)
        at_min = 0
        terms: dict[tuple, int] = {}
        for c in iter_colorings(w):
            key = word_key(w, c)
            if key < best:
                at_min = -1
                break
            at_min += key == best
            m = coloring_monomial(w, c, order)
            terms[m] = terms.get(m, 0) + coloring_sign(w, c)
        terms = {m: c for m, c in terms.items() if c}
        if at_min != 1 or minimal_coloring(w) != kk:
            res.fail(format_string(s) + " (minimum)")
            continue
        lead = max(terms, key=grevlex_key)
        coeff, via_kk = leading_term_via_kk(w)
        if lead != via_kk or terms[lead] != coeff or coeff not in (1, -1):
            res.fail(format_string(s) + " (leading term)")
    return res


def check_trimming(max_len: int) -> CheckResult:
    res = CheckResult("trimming returns the KK-labeling of the trimmed web")
    for s in all_dominant(max_len, min_len=2):
        res.checked += 1
        trimmed, string = trim(grow(s).web, s)
        if trimmed.n and kk_labeling(trimmed, check=False) != string:
            res.fail(format_string(s))
        elif not trimmed.n and string:
            res.fail(format_string(s))
    return res


def compositions(signs) -> Iterator[tuple[int, ...]]:
    """Multidegrees that group consecutive equal signs."""
    n = len(signs)
    cuts = [k for k in range(1, n) if signs[k] == signs[k - 1]]
    for r in range(len(cuts) + 1):
        for merged in itertools.combinations(cuts, r):
            breaks = sorted(set(range(1, n)) - set(merged))
            bounds = [0, *breaks, n]
            yield tuple(bounds[i + 1] - bounds[i] for i in range(len(bounds) - 1))


def monotone_clasps(max_len: int) -> CheckResult:
    """Minimal colorings of valid clasped webs are monotone at every clasp."""
    res = CheckResult("minimal colorings increase at black clasps, decrease at white")
    for s in all_dominant(max_len):
        web = grow(s).web
        signs = [sign for sign, _ in s]
        for degrees in compositions(signs):
            if max(degrees) == 1:
                continue
            clasped = clasp(web, degrees)
            if validate(clasped):
                continue
            res.checked += 1
            c = minimal_coloring(clasped)
            for v in clasped.boundary:
                seq = [c[clasped.edge_index(h)] for h in v.half_edges]
                want = sorted(seq) if v.color == "B" else sorted(seq, reverse=True)
                if seq != want:
                    res.fail(f"{format_string(s)} clasped {degrees}")
                    break
            if not webs_equal(unclasp(clasped), web):
                res.fail(f"{format_string(s)} clasped {degrees} (unclasp)")
    return res


CHECKS: dict[str, Callable[[int], CheckResult]] = {
    "paths": check_paths,
    "growth": check_growth_valid,
    "round-trip": check_round_trip,
    "confluence": check_confluence,
    "minimal": check_minimal_coloring,
    "trimming": check_trimming,
    "monotone": monotone_clasps,
}


def run_checks(max_len: int, names: list[str] | None = None) -> list[CheckResult]:
    return [CHECKS[name](max_len) for name in (names or list(CHECKS))]
