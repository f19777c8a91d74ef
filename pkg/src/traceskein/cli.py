"""Command line: ``traceskein {expand,bracket,newton,verify}``.

Exit codes: 0 success, 1 a verification failed, 2 bad input.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .intersect import IntersectionError, Multiloop
from .skein import SkeinElement, expand, format_multicurve, goldman_bracket
from .surface import AlphabetError, Surface, SurfaceError, get_surface
from .sweeps import SWEEPS
from .valuation import (LaminationError, newton_set, parse_lamination,
                        valuation)

_GREEK = {"α": "alpha", "β": "beta", "γ": "gamma", "δ": "delta"}


class UsageError(Exception):
    pass


# -- parsing ---------------------------------------------------------------------

def parse_loop(surface: Surface, token: str):
    """One loop: a word, or the name of a shipped curve (``alpha``, ``<β>``)."""
    name = token.strip().strip("<>").strip()
    name = _GREEK.get(name, name)
    for key, word in surface.curves:
        if key == name:
            return word
    return surface.parse(token)


def parse_loops(surface: Surface, text: str) -> list:
    """Loops separated by commas, or by whitespace when there is no comma."""
    parts = text.split(",") if "," in text else text.split()
    words = [parse_loop(surface, p) for p in parts if p.strip()]
    if not words:
        raise UsageError("no loops given")
    return words


def parse_groups(surface: Surface, text: str) -> list:
    """``"a b | c"`` -> [[a, b], [c]]."""
    return [parse_loops(surface, part) for part in text.split("|")]


def parse_element(surface: Surface, text: str) -> SkeinElement:
    """``"1: gamma; -2: c1, c3"`` -> sum of coefficient times expanded loops."""
    out = SkeinElement.zero(surface)
    for item in text.split(";"):
        if not item.strip():
            continue
        coef, sep, loops = item.partition(":")
        if not sep:
            raise UsageError(f"term {item.strip()!r} needs the form 'coefficient: loops'")
        try:
            c = int(coef)
        except ValueError:
            raise UsageError(f"bad coefficient {coef.strip()!r}") from None
        loops = loops.strip()
        term = (SkeinElement.one(surface) if loops in ("", "1")
                else expand(surface, parse_loops(surface, loops)))
        out = out + term * c
    return out


def _multiloop(words) -> Multiloop:
    return Multiloop.of(*words)


# -- output -----------------------------------------------------------------------

def _element_json(f: SkeinElement) -> list:
    s = f.surface
    return [{"multicurve": [s.format(c.word, ascii=True) for c in mu],
             "label": format_multicurve(s, mu, True),
             "coefficient": coef} for mu, coef in f.items()]


def _emit(args, payload: dict, text: str):
    if args.format == "json":
        print(json.dumps(payload, indent=2, sort_keys=True, ensure_ascii=False))
    else:
        print(text)


def _header(args, surface: Surface, command: str) -> dict:
    return {"command": command, "surface": surface.name, "seed": args.seed}


# -- commands -----------------------------------------------------------------------

def cmd_expand(args, surface: Surface) -> int:
    words = parse_loops(surface, args.loops)
    f = expand(surface, _multiloop(words))
    payload = _header(args, surface, "expand")
    payload.update(loops=[surface.format(w, ascii=True) for w in words],
                   element=_element_json(f), rendered=f.format(ascii=args.ascii))
    if args.laminations:
        lams = [parse_lamination(surface, t) for t in args.laminations]
        payload["valuations"] = [{"lamination": lam.to_json(), "value": str(valuation(lam, f))}
                                 for lam in lams]
    _emit(args, payload, f.format(ascii=args.ascii))
    return 0


def cmd_bracket(args, surface: Surface) -> int:
    groups = parse_groups(surface, args.loops)
    if len(groups) == 1 and len(groups[0]) == 2:
        groups = [[groups[0][0]], [groups[0][1]]]
    if len(groups) != 2:
        raise UsageError("bracket needs two loops, or two groups separated by '|'")
    f, g = (expand(surface, _multiloop(ws)) for ws in groups)
    b = goldman_bracket(f, g)
    payload = _header(args, surface, "bracket")
    payload.update(left=[surface.format(w, ascii=True) for w in groups[0]],
                   right=[surface.format(w, ascii=True) for w in groups[1]],
                   element=_element_json(b), rendered=b.format(ascii=args.ascii))
    _emit(args, payload, b.format(ascii=args.ascii))
    return 0


def cmd_newton(args, surface: Surface) -> int:
    if args.element:
        f = parse_element(surface, args.element)
    elif args.loops:
        groups = parse_groups(surface, args.loops)
        if args.bracket:
            if len(groups) != 2:
                raise UsageError("--bracket needs two groups separated by '|'")
            f = goldman_bracket(*(expand(surface, _multiloop(ws)) for ws in groups))
        else:
            f = expand(surface, _multiloop([w for ws in groups for w in ws]))
    else:
        raise UsageError("newton needs --loops or --element")
    if f.is_zero():
        raise UsageError("the element is zero; its Newton set is empty")
    rep = newton_set(f, max_len=args.family_max_len, max_components=args.max_components)
    payload = _header(args, surface, "newton")
    payload.update(element=_element_json(f), rendered=f.format(ascii=args.ascii),
                   newton=rep.to_json())
    lines = [f"element: {f.format(ascii=args.ascii)}",
             f"family size: {rep.family_size}"]
    for mu in sorted(rep.certified):
        lines.append(f"certified {format_multicurve(surface, mu, args.ascii)}"
                     f"  (coefficient {rep.coefficients[mu]}, witness "
                     f"{format_multicurve(surface, rep.certified[mu], args.ascii)})")
    for mu in sorted(rep.unknown):
        lines.append(f"unknown   {format_multicurve(surface, mu, args.ascii)}"
                     f"  (coefficient {rep.coefficients[mu]})")
    _emit(args, payload, "\n".join(lines))
    return 0


def cmd_verify(args, surface: Surface) -> int:
    names = list(SWEEPS) if args.suite == "all" else [args.suite]
    results = []
    for name in names:
        kwargs = {"seed": args.seed}
        if args.samples is not None and name != "figure1":
            kwargs["samples"] = args.samples
        results.append(SWEEPS[name](**kwargs))
    ok = all(r.ok for r in results)
    payload = {"command": "verify", "seed": args.seed, "passed": ok,
               "suites": [r.to_json(args.seed) for r in results]}
    lines = [f"{'suite':<12} {'checked':>8} {'failed':>7}  result"]
    for r in results:
        lines.append(f"{r.name:<12} {r.checked:>8} {len(r.failures):>7}  "
                     f"{'PASS' if r.ok else 'FAIL'}")
        if r.name == "figure1":
            for key in ("product", "bracket"):
                lines.append(f"    {key}: {r.info[key]}")
            lines.append("    product certified: " + ", ".join(r.info["product_certified"])
                         + "; unknown: " + ", ".join(r.info["product_unknown"]))
        for fail in r.failures[:5]:
            lines.append(f"    reproduce: --seed {args.seed} --suite {r.name} "
                         + json.dumps(fail, sort_keys=True))
    lines.append("all passed" if ok else "FAILED")
    _emit(args, payload, "\n".join(lines))
    return 0 if ok else 1


COMMANDS = {"expand": cmd_expand, "bracket": cmd_bracket,
            "newton": cmd_newton, "verify": cmd_verify}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--surface", default="s4p",
                        help="preset (t1p, s4p, sNp) or surface file (default s4p)")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--ascii", action="store_true",
                        help="plain ASCII rendering (A for a^-1, * for products)")

    p = argparse.ArgumentParser(prog="traceskein", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    e = sub.add_parser("expand", parents=[common], help="expand a product of loops")
    e.add_argument("--loops", required=True)
    e.add_argument("--laminations", action="append", default=[],
                   help="'word: weight; ...' (repeatable); prints valuations")

    b = sub.add_parser("bracket", parents=[common], help="Goldman bracket")
    b.add_argument("--loops", required=True, help="two loops, or 'loops | loops'")

    n = sub.add_parser("newton", parents=[common], help="certified Newton set")
    n.add_argument("--loops", help="loops whose trace product is analysed")
    n.add_argument("--element", help="'coef: loops; coef: loops' linear combination")
    n.add_argument("--bracket", action="store_true",
                   help="analyse the bracket of the two '|' groups instead")
    n.add_argument("--family-max-len", type=int, default=6)
    n.add_argument("--max-components", type=int, default=3)

    v = sub.add_parser("verify", parents=[common], help="run verification sweeps")
    v.add_argument("--suite", choices=["all"] + list(SWEEPS), default="all")
    v.add_argument("--samples", type=int, default=None,
                   help="cases per surface (default: per-suite)")
    v.add_argument("--laminations", action="append", default=[], help=argparse.SUPPRESS)
    v.add_argument("--family-max-len", type=int, default=6, help=argparse.SUPPRESS)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        surface = get_surface(args.surface)
        return COMMANDS[args.command](args, surface)
    except (UsageError, AlphabetError, SurfaceError, LaminationError,
            IntersectionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
