import random

import pytest

from sl3web.growth import RULES, GrowthError, applicable_rules, grow, kk_labeling
from sl3web.weightpath import Sign, dominant_strings, format_string, parse_string, weight_of
from sl3web.webgraph import WebError, canonical_form, make_web, validate, webs_equal

P, M = Sign.PLUS, Sign.MINUS


def _wsum(pairs):
    return tuple(sum(c) for c in zip((0, 0), (0, 0), *(weight_of(s, j) for s, j in pairs)))


@pytest.mark.parametrize("rule", RULES, ids=lambda r: r.kind)
@pytest.mark.parametrize("sign", [P, M])
def test_rules_conserve_weight(rule, sign):
    right = sign if rule.same_sign else -sign
    top = ((sign, rule.top[0]), (right, rule.top[1]))
    assert _wsum(top) == _wsum(rule.output(sign, right))


def test_h_rules_swap_signs_and_y_rules_flip():
    for rule in RULES:
        out = rule.output(P, P if rule.same_sign else M)
        if rule.kind.startswith("H"):
            assert [s for s, _ in out] == [M, P]
        elif rule.kind.startswith("Y"):
            assert [s for s, _ in out] == [M]
        else:
            assert out == ()


def test_applicable_rules_examples():
    assert [(p, r.kind) for p, r in applicable_rules(parse_string("+1,--1"))] == [(1, "cap")]
    ((pos, rule),) = applicable_rules(parse_string("+1,+0"))
    assert pos == 1 and rule.kind == "Y-11" and rule.output(P, P) == ((M, 1),)
    assert applicable_rules(parse_string("+1,+1")) == []


def test_exactly_seven_patterns():
    matched = 0
    for s1 in (P, M):
        for s2 in (P, M):
            for j1 in (1, 0, -1):
                for j2 in (1, 0, -1):
                    matched += bool(applicable_rules(((s1, j1), (s2, j2))))
    # each pattern matches for two sign choices
    assert matched == 14


def test_grow_single_edge(single_edge):
    g = grow(parse_string("+1,--1"))
    assert webs_equal(g.web, single_edge)
    assert g.steps == ((1, "cap"),)


def test_grow_tripod(tripod):
    g = grow(parse_string("+1,+0,+-1"))
    assert webs_equal(g.web, tripod)
    assert [k for _, k in g.steps] == ["Y-11", "cap"]
    assert validate(g.web) == []


def test_grow_nine_string(nine_string):
    g = grow(nine_string)
    assert g.web.n == 9
    assert g.web.signature == tuple("BBBWBBWBW")
    assert validate(g.web) == []
    assert g.boundary_string() == nine_string


def test_grow_rejects_non_dominant():
    with pytest.raises(GrowthError):
        grow(parse_string("+-1,--1"))


def test_cap_edge_carries_two_labels_and_h_edges_none(h_web):
    g = grow(parse_string("+1,-1,--1,+-1"))
    per_edge = g.edge_labels()
    assert sorted(len(v) for v in per_edge.values()) == [1, 1, 1, 1, 2]
    s = next(s for s in dominant_strings(6) if any(k.startswith("H") for _, k in grow(s).steps))
    g = grow(s)
    assert len(g.edge_labels()) < len(g.web.edges)


def test_kk_labeling_examples(single_edge, h_web, nine_string):
    assert kk_labeling(single_edge) == parse_string("+1,--1")
    assert kk_labeling(h_web) == parse_string("+1,-1,--1,+-1")
    assert kk_labeling(grow(nine_string).web) == nine_string


def test_kk_labeling_needs_degree_one(clasped_web):
    with pytest.raises(WebError):
        kk_labeling(clasped_web)


def test_kk_labeling_rejects_invalid():
    w = make_web([("B", [1]), ("B", [2])], [], [(1, 2)])
    with pytest.raises(WebError):
        kk_labeling(w)


def test_round_trip_and_confluence_to_length_7():
    rng = random.Random(11)
    for n in range(2, 8):
        for s in dominant_strings(n):
            g = grow(s)
            assert kk_labeling(g.web, check=False) == s, format_string(s)
            ref = canonical_form(g.web)
            for _ in range(3):
                assert canonical_form(grow(s, rng=rng).web) == ref


def test_growth_steps_bounded():
    for n in range(2, 9):
        for s in dominant_strings(n):
            assert len(grow(s).steps) <= n * n


def test_frontier_weight_is_conserved(nine_string):
    """Replay growth and check the frontier weight never changes."""
    g = grow(nine_string)
    frontier = list(nine_string)
    for pos, kind in g.steps:
        before = _wsum(frontier)
        (s1, _), (s2, _) = frontier[pos - 1], frontier[pos]
        (rule,) = [r for p, r in applicable_rules(frontier) if p == pos and r.kind == kind]
        frontier[pos - 1 : pos + 1] = rule.output(s1, s2)
        assert _wsum(frontier) == before
    assert frontier == []
