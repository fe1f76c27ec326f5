"""Command-line front end.

Exit status: 0 on success, 1 for unreadable input or a violated
precondition, 2 when a verification or ``--check`` fails.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from pathlib import Path

from .coloring import ColoringError, enumerate_colorings, minimal_coloring
from .growth import GrowthError, grow, kk_labeling
from .invariant import ExpansionError, evaluate, expand, leading_term_via_kk
from .polyring import PolynomialError, VariableOrder, format_polynomial, parse_polynomial
from .verify import CHECKS, all_dominant, run_checks
from .weightpath import format_string, parse_string
from .webgraph import WebError, format_web, parse_web, trim, unclasp

INPUT_ERRORS = (WebError, GrowthError, ColoringError, PolynomialError, ExpansionError, ValueError, OSError)


class VerificationFailed(Exception):
    pass


def _read(path: str) -> str:
    return sys.stdin.read() if path == "-" else Path(path).read_text()


def _web_payload(w) -> dict:
    return {
        "boundary": [{"id": v.id, "color": v.color, "half_edges": list(v.half_edges)} for v in w.boundary],
        "internal": [{"id": v.id, "color": v.color, "half_edges": list(v.half_edges)} for v in w.internal],
        "edges": [list(e) for e in w.edges],
    }


def _label_lines(labels: dict) -> list[str]:
    return [f"# l {h} {format_string([lab])}" for h, lab in sorted(labels.items())]


def cmd_grow(args) -> dict | str:
    import random

    s = parse_string(args.string)
    g = grow(s, rng=random.Random(args.seed) if args.seed is not None else None)
    if args.json:
        return {"web": _web_payload(g.web), "labels": {str(h): format_string([lab]) for h, lab in sorted(g.labels.items())}}
    return format_web(g.web) + "\n".join(_label_lines(g.labels)) + "\n"


def cmd_label(args):
    s = kk_labeling(parse_web(_read(args.web)))
    return {"string": format_string(s)} if args.json else format_string(s) + "\n"


def cmd_colorings(args):
    w = parse_web(_read(args.web))
    colorings = [minimal_coloring(w)] if args.minimal else enumerate_colorings(w)
    if args.json:
        return {"colorings": [list(c) for c in colorings]}
    return "".join(" ".join(f"{k + 1}={c}" for k, c in enumerate(col)) + "\n" for col in colorings)


def cmd_invariant(args):
    p = evaluate(parse_web(_read(args.web)))
    return {"signature": "".join(p.order.colors), "polynomial": format_polynomial(p)} if args.json else format_polynomial(p) + "\n"


def cmd_leading(args):
    w = parse_web(_read(args.web))
    coeff, m = leading_term_via_kk(w)
    order = VariableOrder(w.signature)
    text = f"{coeff:+d} {order.format_monomial(m)}"
    status = None
    if args.check:
        status = "ok" if evaluate(w).leading_term() == (coeff, m) else "MISMATCH"
    if args.json:
        out = {"coefficient": coeff, "monomial": order.format_monomial(m)}
        if status:
            out["check"] = status
        result = out
    else:
        result = text + "\n" + (f"check: {status}\n" if status else "")
    if status == "MISMATCH":
        raise VerificationFailed(result if isinstance(result, str) else json.dumps(result))
    return result


def cmd_expand(args):
    signature = tuple(args.signature.upper())
    f = parse_polynomial(_read(args.polynomial), VariableOrder(signature))
    result = expand(f, signature)
    resummed = result.polynomial()
    digest = hashlib.sha256(format_polynomial(resummed).encode()).hexdigest()
    ok = resummed == f
    if args.out_dir:
        Path(args.out_dir).mkdir(parents=True, exist_ok=True)
    entries = []
    for k, (c, w) in enumerate(result.terms, start=1):
        path = None
        if args.out_dir:
            path = Path(args.out_dir) / f"web_{k}.txt"
            path.write_text(format_web(w))
        entries.append((c, w, path))
    if args.json:
        out = {
            "terms": [{"coefficient": c, "web": _web_payload(w), **({"file": str(p)} if p else {})} for c, w, p in entries],
            "digest": digest,
            "check": "ok" if ok else "MISMATCH",
        }
    else:
        lines = []
        for c, w, p in entries:
            if p:
                lines.append(f"{c} {p}\n")
            else:
                lines.append(f"{c} " + format_web(w))
        lines.append(f"digest: {digest}\ncheck: {'ok' if ok else 'MISMATCH'}\n")
        out = "".join(lines)
    if not ok:
        raise VerificationFailed(out if isinstance(out, str) else json.dumps(out))
    return out


def cmd_trim(args):
    w = parse_web(_read(args.web))
    trimmed, string = trim(w, kk_labeling(w))
    if args.json:
        return {"web": _web_payload(trimmed), "string": format_string(string)}
    return format_web(trimmed) + f"# string {format_string(string)}\n"


def cmd_unclasp(args):
    w = unclasp(parse_web(_read(args.web)))
    return {"web": _web_payload(w)} if args.json else format_web(w)


def cmd_enumerate(args):
    strings = [format_string(s) for s in all_dominant(args.max_len)]
    return {"strings": strings} if args.json else "".join(s + "\n" for s in strings)


def cmd_verify(args):
    results = []
    lines = []
    for name in args.checks or list(CHECKS):
        start = time.perf_counter()
        (res,) = run_checks(args.max_len, [name])
        elapsed = time.perf_counter() - start
        results.append(res)
        status = "PASS" if res.ok else "FAIL"
        lines.append(f"{status} {name}: {res.checked} checked, {len(res.failures)} failed ({elapsed:.1f}s)\n")
        lines += [f"  counterexample: {f}\n" for f in res.failures[:10]]
    if args.json:
        out = {"results": [{"check": r.name, "checked": r.checked, "failures": r.failures} for r in results]}
    else:
        out = "".join(lines)
    if any(not r.ok for r in results):
        raise VerificationFailed(out if isinstance(out, str) else json.dumps(out, indent=2))
    return out


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sl3web", description="SL3 web invariants, leading terms and web-basis expansion.")
    parser.add_argument("--json", action="store_true", help="emit JSON instead of the text formats")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("grow", help="grow the web of a dominant sign/state string")
    p.add_argument("string", help="comma-separated tokens such as +1,--1")
    p.add_argument("--seed", type=int, default=None, help="apply rules in a random order")
    p.set_defaults(func=cmd_grow)

    for name, func, helptext in [
        ("label", cmd_label, "KK-labeling of a degree-1 web"),
        ("invariant", cmd_invariant, "invariant polynomial of a web"),
        ("trim", cmd_trim, "trim a degree-1 web once"),
        ("unclasp", cmd_unclasp, "split boundary vertices into degree-1 vertices"),
    ]:
        p = sub.add_parser(name, help=helptext)
        p.add_argument("web", help="web file, or - for stdin")
        p.set_defaults(func=func)

    p = sub.add_parser("colorings", help="list proper edge colorings")
    p.add_argument("web")
    p.add_argument("--minimal", action="store_true", help="only the lexicographically minimal coloring")
    p.set_defaults(func=cmd_colorings)

    p = sub.add_parser("leading", help="leading term from the KK-labeling")
    p.add_argument("web")
    p.add_argument("--check", action="store_true", help="compare against the full invariant")
    p.set_defaults(func=cmd_leading)

    p = sub.add_parser("expand", help="expand a polynomial in the web basis")
    p.add_argument("polynomial", help="polynomial file, or - for stdin")
    p.add_argument("--signature", required=True, help="boundary colors, e.g. BWWB")
    p.add_argument("--out-dir", default=None, help="write each web to a file here")
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("enumerate", help="list dominant strings")
    p.add_argument("--max-len", type=int, required=True)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", help="run the exhaustive property suite")
    p.add_argument("--max-len", type=int, default=8)
    p.add_argument("--checks", nargs="*", choices=list(CHECKS), default=None)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        out = args.func(args)
    except VerificationFailed as exc:
        sys.stdout.write(str(exc))
        return 2
    except INPUT_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if isinstance(out, dict):
        out = json.dumps(out, indent=2, sort_keys=True) + "\n"
    sys.stdout.write(out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
