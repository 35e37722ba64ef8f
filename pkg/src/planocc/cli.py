"""Command-line front end.

Every subcommand prints exact rationals as ``p/q``.  ``--format json``
emits a single JSON object with rationals as strings; ``--float`` adds
decimal approximations, labelled as such.

Exit status: 0 success, 1 usage error, 2 invalid input map, 3 verification
failure, 4 resource limit.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Any, Sequence

from . import asymptotics, counting, occurrence, oracle
from .errors import InvalidMap, SizeLimitExceeded, UnsupportedValency
from .maps import CombinatorialMap, descriptor, load_map

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_BAD_MAP = 2
EXIT_VERIFY = 3
EXIT_LIMIT = 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse would exit with status 2
        raise UsageError(f"{self.prog}: {message}")


def _q(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


class Report:
    """Ordered key/value output, rendered as text or JSON."""

    def __init__(self, fmt: str, with_float: bool):
        self.fmt = fmt
        self.with_float = with_float
        self.items: list[tuple[str, Any]] = []
        self.lines: list[str] = []

    def scalar(self, key: str, value) -> None:
        self.items.append((key, value))

    def series(self, key: str, coeffs: Sequence, start: int = 0) -> None:
        self.items.append((key, [(start + i, c) for i, c in enumerate(coeffs)]))

    def occurrence_series(self, key: str, coeffs: Sequence[int]) -> None:
        first = next((i for i, c in enumerate(coeffs) if c), len(coeffs))
        self.series(key, [Fraction(c) for c in coeffs[first:]], start=first)

    def _json_value(self, v):
        if isinstance(v, list):
            return {str(i): self._json_value(c) for i, c in v}
        if isinstance(v, (bool, str)):
            return v
        if isinstance(v, (int, Fraction)):
            if self.with_float and isinstance(v, Fraction) and v.denominator != 1:
                return {"exact": _q(v), "approx": float(v)}
            return _q(v)
        return v

    def render(self) -> str:
        if self.fmt == "json":
            obj = {k: self._json_value(v) for k, v in self.items}
            if self.lines:
                obj["details"] = list(self.lines)
            return json.dumps(obj, separators=(", ", ": "))
        lines = list(self.lines)
        for k, v in self.items:
            if isinstance(v, list):
                lines.append(f"{k}: " + ", ".join(f"n={i}: {c if isinstance(c, str) else _q(c)}" for i, c in v))
            elif isinstance(v, (int, Fraction)) and not isinstance(v, bool):
                s = f"{k} = {_q(v)}"
                if self.with_float and Fraction(v).denominator != 1:
                    s += f"  (approx {float(v):.6g})"
                lines.append(s)
            else:
                lines.append(f"{k}: {v}")
        return "\n".join(lines)


def _positive_ell(text: str) -> int:
    v = int(text)
    if v < 2:
        raise argparse.ArgumentTypeError("valency must be at least 2")
    return v


def _nonneg(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError("must be non-negative")
    return v


def _pos(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def build_parser() -> argparse.ArgumentParser:
    # output options are accepted before or after the subcommand
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("plain", "json"), default=argparse.SUPPRESS)
    common.add_argument("--float", action="store_true", dest="with_float", default=argparse.SUPPRESS,
                        help="add decimal approximations")
    p = _Parser(prog="planocc", parents=[common],
                description="Exact counts and limit laws for pattern occurrences in planar maps.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    _add = sub.add_parser

    def add_parser(name, **kw):
        return _add(name, parents=[common], **kw)

    sub.add_parser = add_parser

    c = sub.add_parser("count", help="closed-form counts")
    c.add_argument("what", choices=("maps",))
    c.add_argument("--n", type=_nonneg, required=True)

    s = sub.add_parser("series", help="generating-function coefficients")
    s.add_argument("which", choices=("M", "F"))
    s.add_argument("--order", type=_nonneg, default=10)
    s.add_argument("--u", action="store_true", help="bivariate M(z,u): one polynomial in u per n")
    s.add_argument("--ell", type=_positive_ell)

    x = sub.add_parser("xi", help="limiting pure-polygon probability")
    x.add_argument("--ell", type=_positive_ell, required=True)

    k = sub.add_parser("pstar", help="limiting root-face valency law")
    k.add_argument("--k", type=_pos, required=True)

    lp = sub.add_parser("local-prob", help="limiting probability of a pattern at the root")
    lp.add_argument("--map", required=True)

    for name in ("pattern", "submap"):
        q = sub.add_parser(name, help=f"marked {name} occurrences")
        q.add_argument("--map", required=True)
        q.add_argument("--order", type=_nonneg, default=10)

    o = sub.add_parser("oracle", help="brute-force cross-validation")
    o.add_argument("action", choices=("verify",))
    o.add_argument("--map", required=True)
    o.add_argument("--nmax", type=_nonneg, default=oracle.DEFAULT_NMAX)
    o.add_argument("--workers", type=_pos, default=1)
    return p


def _read_map(path: str) -> CombinatorialMap:
    try:
        return load_map(path)
    except OSError as exc:
        raise InvalidMap(f"cannot read map file {path!r}: {exc.strerror or exc}") from None


def _upoly_text(p) -> str:
    terms = [f"{_q(c)}*u^{k}" for k, c in enumerate(p.coefficients) if c]
    return " + ".join(terms) or "0"


def _cmd_count(args, rep: Report) -> int:
    rep.scalar("m", counting.m_count(args.n))
    return EXIT_OK


def _cmd_series(args, rep: Report) -> int:
    if args.which == "M":
        if args.u:
            M = counting.M_bivariate(args.order)
            rep.items.append(("M(z,u)", [(n, _upoly_text(p)) for n, p in enumerate(M.coefficients)]))
        else:
            rep.series("M(z,1)", counting.M_univariate(args.order).coefficients)
        return EXIT_OK
    if args.ell is None:
        raise UsageError("series F needs --ell")
    s = counting.F_ell(args.ell, args.order)
    rep.series(f"F_{args.ell}", _padded(s.coefficients, args.order))
    return EXIT_OK


def _padded(coeffs, order):
    return list(coeffs) + [0] * (order + 1 - len(coeffs))


def _cmd_xi(args, rep: Report) -> int:
    rep.scalar(f"xi_{args.ell}", counting.xi(args.ell))
    return EXIT_OK


def _cmd_pstar(args, rep: Report) -> int:
    rep.scalar(f"p*_{args.k}", counting.p_star(args.k))
    return EXIT_OK


def _cmd_local_prob(args, rep: Report) -> int:
    m = _read_map(args.map)
    rep.scalar("local_probability", counting.local_pattern_probability(m))
    return EXIT_OK


def _describe(rep: Report, m: CombinatorialMap) -> None:
    d = descriptor(m)
    rep.scalar("ell", d.ell)
    rep.scalar("k", d.k)
    rep.scalar("s", d.s)
    rep.items.append(("inner_valencies", " ".join(map(str, d.inner_valencies)) or "none"))
    rep.scalar("rotational_count", d.rotational_count)


def _cmd_pattern(args, rep: Report) -> int:
    m = _read_map(args.map)
    _describe(rep, m)
    F = occurrence.F_pattern(m, args.order)
    T = occurrence.T_pattern(m, args.order)
    rep.occurrence_series("F", F.coefficients())
    rep.occurrence_series("T", T.coefficients())
    tau = asymptotics.singular_T(m, 3)
    rep.series("tau", tau.coefficients)
    c1, c2 = asymptotics.expectation_pattern(m)
    rep.scalar("c1", c1)
    rep.scalar("c2", c2)
    return EXIT_OK


def _cmd_submap(args, rep: Report) -> int:
    m = _read_map(args.map)
    _describe(rep, m)
    S = occurrence.S_submap(m, args.order)
    rep.occurrence_series("S", S.coefficients())
    rho = asymptotics.singular_S(m, 3)
    rep.series("rho", rho.coefficients)
    c1, c2 = asymptotics.expectation_submap(m)
    rep.scalar("c1'", c1)
    rep.scalar("c2'", c2)
    return EXIT_OK


def _cmd_oracle(args, rep: Report) -> int:
    m = _read_map(args.map)
    if args.nmax > oracle.HARD_NMAX:
        raise SizeLimitExceeded(f"--nmax {args.nmax} exceeds the limit {oracle.HARD_NMAX}")
    N = args.nmax
    series = {
        "at_root": occurrence.F_pattern(m, N),
        "pattern": occurrence.T_pattern(m, N),
    }
    try:
        series["submap"] = occurrence.S_submap(m, N)
    except UnsupportedValency:
        pass
    counters = {
        "at_root": oracle.count_at_root,
        "pattern": oracle.count_marked_patterns,
        "submap": oracle.count_marked_submaps,
    }
    failures = 0
    lines = []
    for n in range(N + 1):
        oracle.enumerate_maps(n, n_max=N, workers=args.workers)
        for kind, s in series.items():
            got = counters[kind](m, n, n_max=N)
            ok = got == s[n]
            failures += not ok
            lines.append(f"{'PASS' if ok else 'FAIL'} {kind} n={n}: oracle={got} series={s[n]}")
    rep.lines.extend(lines)
    rep.scalar("checks", len(lines))
    rep.scalar("failures", failures)
    return EXIT_OK if failures == 0 else EXIT_VERIFY


_COMMANDS = {
    "count": _cmd_count,
    "series": _cmd_series,
    "xi": _cmd_xi,
    "pstar": _cmd_pstar,
    "local-prob": _cmd_local_prob,
    "pattern": _cmd_pattern,
    "submap": _cmd_submap,
    "oracle": _cmd_oracle,
}


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        rep = Report(getattr(args, "format", "plain"), getattr(args, "with_float", False))
        status = _COMMANDS[args.command](args, rep)
    except UsageError as exc:
        print(str(exc), file=err)
        return EXIT_USAGE
    except (InvalidMap, UnsupportedValency) as exc:
        print(f"planocc: invalid map: {type(exc).__name__}: {exc}", file=err)
        return EXIT_BAD_MAP
    except SizeLimitExceeded as exc:
        print(f"planocc: resource limit: {exc}", file=err)
        return EXIT_LIMIT
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    print(rep.render(), file=out)
    return status


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
