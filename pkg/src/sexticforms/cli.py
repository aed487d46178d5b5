"""Command-line interface: covariant lookup and inline evaluation, Fourier
expansion of the named forms, and the verification suites.

Exit codes: 0 success / all checks pass, 1 computational failure or failed
check, 2 usage error (bad arguments, parse errors, unknown names).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from fractions import Fraction

from . import covariants, modp, numap, ringlab
from .covariants import Covariant
from .errors import (
    NotDivisible,
    ParseError,
    UnknownName,
)
from .poly import SEXTIC_VARS, MultiPoly

CACHE_ENV = "SEXTICFORMS_CACHE"

# frozen display of the weight-(6,8) seed cusp form at truncation 2; the
# chi68-block suite rebuilds the form from theta gradients and compares.
CHI68_GOLDEN = """\
weight (6,8), truncation 2
(1,1): (0, 0, r^-1 - 2 + r, -2*r^-1 + 2*r, r^-1 - 2 + r, 0, 0)
(1,2): (0, 0, -2*r^-2 - 16*r^-1 + 36 - 16*r - 2*r^2, 8*r^-2 + 32*r^-1 - 32*r - 8*r^2, -14*r^-2 + 8*r^-1 + 12 + 8*r - 14*r^2, 12*r^-2 - 24*r^-1 + 24*r - 12*r^2, -4*r^-2 + 16*r^-1 - 24 + 16*r - 4*r^2)
(2,1): (-4*r^-2 + 16*r^-1 - 24 + 16*r - 4*r^2, 12*r^-2 - 24*r^-1 + 24*r - 12*r^2, -14*r^-2 + 8*r^-1 + 12 + 8*r - 14*r^2, 8*r^-2 + 32*r^-1 - 32*r - 8*r^2, -2*r^-2 - 16*r^-1 + 36 - 16*r - 2*r^2, 0, 0)
(2,2): (16*r^-3 - 144*r^-1 + 256 - 144*r + 16*r^3, -72*r^-3 + 216*r^-1 - 216*r + 72*r^3, 128*r^-3 - 256 + 128*r^3, -144*r^-3 - 720*r^-1 + 720*r + 144*r^3, 128*r^-3 - 256 + 128*r^3, -72*r^-3 + 216*r^-1 - 216*r + 72*r^3, 16*r^-3 - 144*r^-1 + 256 - 144*r + 16*r^3)"""


# -- inline polynomial parsing ------------------------------------------------


class _Tokenizer:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def peek(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1
        if self.pos >= len(self.text):
            return None
        return self.text[self.pos]

    def take_op(self, chars):
        ch = self.peek()
        if ch is not None and ch in chars:
            self.pos += 1
            return ch
        return None

    def take_int(self):
        self.peek()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            raise ParseError("expected an integer", start)
        return int(self.text[start : self.pos])

    def take_name(self):
        self.peek()
        start = self.pos
        while self.pos < len(self.text) and (
            self.text[self.pos].isalnum() or self.text[self.pos] == "_"
        ):
            self.pos += 1
        return self.text[start : self.pos]


def parse_polynomial(text: str) -> MultiPoly:
    """Parse +, -, *, /, ^ and parentheses over a0..a6, x1, x2.

    Raises ParseError with the character position on malformed input;
    division is only allowed by nonzero constants.
    """
    tok = _Tokenizer(text)

    def atom():
        ch = tok.peek()
        if ch is None:
            raise ParseError("unexpected end of input", tok.pos)
        if ch == "(":
            tok.take_op("(")
            inner = expr()
            if not tok.take_op(")"):
                raise ParseError("expected ')'", tok.pos)
            return inner
        if ch.isdigit():
            return MultiPoly.const(SEXTIC_VARS, tok.take_int())
        if ch.isalpha():
            pos = tok.pos
            name = tok.take_name()
            if name not in SEXTIC_VARS:
                raise ParseError(f"unknown variable {name!r}", pos)
            return MultiPoly.variable(SEXTIC_VARS, name)
        raise ParseError(f"unexpected character {ch!r}", tok.pos)

    def factor():
        sign = 1
        while True:
            if tok.take_op("-"):
                sign = -sign
            elif tok.take_op("+"):
                pass
            else:
                break
        base = atom()
        if tok.take_op("^"):
            pos = tok.pos
            e = tok.take_int()
            if e < 0:
                raise ParseError("negative exponent", pos)
            base = base**e
        return base if sign == 1 else base.scale(-1)

    def term():
        acc = factor()
        while True:
            if tok.take_op("*"):
                acc = acc * factor()
            elif tok.take_op("/"):
                pos = tok.pos
                div = factor()
                if div.total_degree() != 0 or div.is_zero:
                    raise ParseError(
                        "can only divide by a nonzero constant", pos
                    )
                acc = acc.scale(Fraction(1) / Fraction(div.coefficient()))
            else:
                return acc

    def expr():
        acc = term()
        while True:
            ch = tok.peek()
            if ch == "+":
                tok.take_op("+")
                acc = acc + term()
            elif ch == "-":
                tok.take_op("-")
                acc = acc - term()
            else:
                return acc

    result = expr()
    if tok.peek() is not None:
        raise ParseError(f"trailing input {tok.peek()!r}", tok.pos)
    return result


def covariant_from_text(text: str) -> Covariant:
    """Resolve a catalog name, falling back to inline polynomial parsing."""
    try:
        return covariants.resolve(text)
    except UnknownName:
        pass
    poly = parse_polynomial(text)
    a_vars = SEXTIC_VARS[:7]
    x_vars = SEXTIC_VARS[7:]
    degree = poly.homogeneous_degree_on(a_vars)
    order = poly.homogeneous_degree_on(x_vars)
    if degree is None or order is None:
        raise ParseError("polynomial is not bihomogeneous", 0)
    return Covariant(poly, degree, order)


# -- commands -----------------------------------------------------------------


def _cache_dir(args):
    if args.no_cache:
        return None
    return args.cache or os.environ.get(CACHE_ENV)


def _emit(payload, args):
    if args.json:
        print(json.dumps(payload["json"], sort_keys=True))
    else:
        print(payload["text"])


def cmd_covariant(args) -> int:
    cov = covariant_from_text(args.name)
    _emit(
        {
            "text": f"degree {cov.degree}, order {cov.order}\n{cov.poly.to_text()}",
            "json": {
                "degree": cov.degree,
                "order": cov.order,
                "polynomial": cov.poly.to_json(),
            },
        },
        args,
    )
    return 0


def cmd_expand(args) -> int:
    form = ringlab.named_form(args.name, args.order, _cache_dir(args))
    _emit(
        {
            "text": form.expansion.to_text(),
            "json": form.expansion.to_json(),
        },
        args,
    )
    return 0


def cmd_nu(args) -> int:
    cov = covariant_from_text(args.name)
    power = (
        args.power
        if args.power is not None
        else numap.minimal_chi10_power(cov)
    )
    result = numap.nu_normalized(cov, power, args.order)
    _emit(
        {
            "text": (
                f"chi_10^{power} * nu(covariant), degree {cov.degree}, "
                f"order {cov.order}\n{result.expansion.to_text()}"
            ),
            "json": {
                "chi10_power": power,
                "degree": cov.degree,
                "order": cov.order,
                "expansion": result.expansion.to_json(),
            },
        },
        args,
    )
    return 0


def _suite_even_ring(args):
    rows = ringlab.verify_even_generation(args.kmax, max(args.order, 3))
    lines = [
        f"k={r['weight']:>2}  dim={r['expected_dim']:>2}  "
        f"rank={r['rank']:>2}  {r['status']}"
        for r in rows
    ]
    ok = all(r["status"] == "PASS" for r in rows)
    return ok, "\n".join(lines), {"suite": "even-ring", "rows": rows}


def _suite_chi68_block(args):
    got = ringlab.named_form("chi6_8", 2, _cache_dir(args)).expansion.to_text()
    ok = got == CHI68_GOLDEN
    text = "chi6_8 block matches the frozen expansion" if ok else (
        "chi6_8 block MISMATCH\n--- expected ---\n"
        + CHI68_GOLDEN
        + "\n--- got ---\n"
        + got
    )
    return ok, text, {"suite": "chi68-block", "match": ok}


def _suite_char2(args):
    rep = modp.verify_char2_suite()
    ok = rep["status"] == "PASS"
    lines = [f"{k}: {v}" for k, v in rep.items()]
    return ok, "\n".join(lines), {"suite": "char2-K", "report": rep}


def _suite_char3(args):
    rep = modp.verify_char3_suite()
    ok = rep["status"] == "PASS"
    return ok, json.dumps(rep, indent=2), {"suite": "char3", "report": rep}


def _suite_modp(args):
    if args.prime is None:
        raise SystemExit2("suite modp requires --prime")
    rep = modp.modp_invariance_check(args.prime)
    ok = rep["status"] == "PASS"
    return ok, json.dumps(rep), {"suite": "modp", "prime": args.prime, "report": rep}


def _suite_odd_weight(args):
    rep = ringlab.odd_weight_divisibility_check()
    ok = rep["status"] == "PASS"
    return ok, json.dumps(rep), {"suite": "odd-weight", "report": rep}


def _suite_s68(args):
    rep = ringlab.dim_s68_probe()
    ok = rep["status"] == "PASS"
    return ok, json.dumps(rep), {"suite": "s68", "report": rep}


def _suite_nu(args):
    rep = ringlab.nu_consistency_report()
    ok = rep["status"] == "PASS"
    return ok, json.dumps(rep), {"suite": "nu", "report": rep}


_SUITES = {
    "even-ring": _suite_even_ring,
    "chi68-block": _suite_chi68_block,
    "char2-K": _suite_char2,
    "char3": _suite_char3,
    "modp": _suite_modp,
    "odd-weight": _suite_odd_weight,
    "s68": _suite_s68,
    "nu": _suite_nu,
}

_QUICK_SUITES = ("chi68-block", "char2-K", "char3", "nu")


class SystemExit2(Exception):
    """Usage error raised from inside a command."""


def cmd_verify(args) -> int:
    names = _QUICK_SUITES if args.suite == "quick" else (args.suite,)
    if args.suite == "all":
        names = tuple(n for n in _SUITES if n != "modp" or args.prime)
    all_ok = True
    for name in names:
        if name not in _SUITES:
            raise SystemExit2(
                f"unknown suite {name!r}; choose from "
                + ", ".join(sorted(_SUITES) + ["quick", "all"])
            )
        ok, text, payload = _SUITES[name](args)
        all_ok = all_ok and ok
        if args.json:
            payload["status"] = "PASS" if ok else "FAIL"
            if not args.no_timestamp:
                payload["timestamp"] = int(time.time())
            print(json.dumps(payload, sort_keys=True))
        else:
            print(f"[{name}] {'PASS' if ok else 'FAIL'}")
            print(text)
    return 0 if all_ok else 1


# -- entry point ---------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sexticforms",
        description=__doc__,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument(
            "--order",
            type=int,
            default=2,
            metavar="N",
            help="truncation order (default 2)",
        )
        p.add_argument("--prime", type=int, default=None, metavar="P")
        p.add_argument("--cache", default=None, metavar="DIR")
        p.add_argument("--no-cache", action="store_true")
        p.add_argument("--json", action="store_true")
        p.add_argument(
            "--no-timestamp",
            action="store_true",
            help="omit the timestamp field from JSON reports",
        )

    p = sub.add_parser("covariant", help="print a catalog or inline covariant")
    p.add_argument("name")
    common(p)
    p.set_defaults(func=cmd_covariant)

    p = sub.add_parser("expand", help="Fourier expansion of a named form")
    p.add_argument("name", help="one of: " + ", ".join(ringlab.registry_names()))
    common(p)
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("nu", help="expansion of the nu-image of a covariant")
    p.add_argument("name")
    p.add_argument(
        "--power",
        type=int,
        default=None,
        metavar="M",
        help="chi_10 power to keep (default: minimal holomorphic)",
    )
    common(p)
    p.set_defaults(func=cmd_nu)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument(
        "suite",
        help="one of: " + ", ".join(sorted(_SUITES) + ["quick", "all"]),
    )
    p.add_argument("--kmax", type=int, default=20)
    common(p)
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.order < 1:
        parser.exit(2, "truncation order must be >= 1\n")
    if args.prime is not None and not modp.is_prime(args.prime):
        parser.exit(2, f"{args.prime} is not prime\n")
    try:
        return args.func(args)
    except (ParseError, UnknownName, SystemExit2) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except NotDivisible as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
