"""``wdx`` command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage or input error,
3 internal consistency failure.  Standard output is deterministic for fixed
inputs; timing goes to the log on standard error.
"""

from __future__ import annotations

import argparse
import logging
import sys
import time
from contextlib import contextmanager

from . import io
from .codewords import CodeSpec, WeightDistribution, brute_force_wd, brute_limit
from .construct import (
    blended_order,
    construct_polar,
    construct_rm,
    construct_rmxpolar,
    construct_wmin_beta,
)
from .enumeration import (
    SpectrumEntry,
    complete_wd_rm2_subcode,
    dual_set,
    low_weight_spectrum,
    macwilliams_dual_wd,
)
from .errors import ConsistencyError, InputError, ResourceLimitError
from .monomial import lambda_size
from .verify import SUITES, run_suite

log = logging.getLogger("wdx")

RULES = ("rm", "polar", "rmxpolar", "wmin-beta")


@contextmanager
def _timed(what: str):
    t0 = time.perf_counter()
    yield
    log.info("%s took %.3f s", what, time.perf_counter() - t0)


def _build(args) -> CodeSpec:
    m, k, rule = args.m, args.k, args.rule
    if m is None or rule is None:
        raise InputError("give --code, or --m with --rule (and --k or --r)")
    if rule == "rm":
        if args.r is None:
            raise InputError("--rule rm needs --r")
        code = construct_rm(args.r, m)
        if k is not None and k != code.k:
            raise InputError(f"R({args.r},{m}) has dimension {code.k}, not {k}")
        return code
    if k is None:
        raise InputError(f"--rule {rule} needs --k")
    build = {"polar": construct_polar, "rmxpolar": construct_rmxpolar, "wmin-beta": construct_wmin_beta}[rule]
    return build(m, k)


def _code(args) -> CodeSpec:
    if getattr(args, "code", None):
        return io.load_code(args.code)
    return _build(args)


def _limit(args) -> int:
    return brute_limit() if args.limit_k is None else args.limit_k


def _closed_full(code: CodeSpec) -> WeightDistribution:
    if code.k == 0:
        return WeightDistribution(code.n, 0, {0: 1})
    return complete_wd_rm2_subcode(code)


def _oracle(code: CodeSpec, args) -> WeightDistribution:
    with _timed(f"oracle over 2^{code.k} codewords"):
        return brute_force_wd(code, limit=_limit(args), threads=args.threads)


def _full(code: CodeSpec, args, caveats: list[str]) -> tuple[WeightDistribution, list[str]]:
    methods: list[str] = []
    closed = None
    if args.method in ("closed", "auto"):
        try:
            with _timed("closed form"):
                closed = _closed_full(code)
            methods.append("closed")
        except InputError:
            if args.method == "closed":
                raise
            caveats.append("closed form not applicable; oracle only")
    if args.method == "brute" or (args.method == "auto" and code.k <= _limit(args)):
        brute = _oracle(code, args)
        methods.append("brute")
        if closed is not None and closed.counts != brute.counts:
            raise ConsistencyError(f"closed form {closed.polynomial()} disagrees with oracle {brute.polynomial()}")
        return brute if closed is None else closed, methods
    if closed is None:
        raise ResourceLimitError(f"no closed form for this code and K={code.k} exceeds the oracle limit {_limit(args)}")
    if args.method == "auto":
        caveats.append(f"oracle skipped: K={code.k} exceeds limit {_limit(args)}")
    return closed, methods


def _mu_of(m: int, r: int, w: int) -> int:
    if w == 1 << (m - r):
        return 1
    for mu in range(2, m + 2 - r):
        if w == (1 << (m + 1 - r)) - (1 << (m + 1 - r - mu)):
            return mu
    return 0


def _low(code: CodeSpec, args, caveats: list[str]) -> tuple[list[SpectrumEntry], list[str]]:
    if code.k == 0 or code.r < 1:
        raise InputError("low-weight spectrum needs a code of maximum degree >= 1")
    w_min = code.w_min
    if args.method == "brute":
        wd = _oracle(code, args)
        entries = [SpectrumEntry(w, c, True, _mu_of(code.m, code.r, w))
                   for w, c in wd.counts.items() if w_min <= w < 2 * w_min]
        return entries, ["brute"]
    with _timed("closed spectrum"):
        entries = low_weight_spectrum(code)
    methods = ["closed"]
    if any(not e.exact for e in entries):
        caveats.append("entries with exact=false count Type II codewords only")
    if args.method == "auto":
        if code.k > _limit(args):
            caveats.append(f"oracle skipped: K={code.k} exceeds limit {_limit(args)}")
            return entries, methods
        wd = _oracle(code, args)
        methods.append("brute")
        listed = {e.weight: e for e in entries}
        all_exact = all(e.exact for e in entries)
        for w in range(w_min, 2 * w_min):
            e = listed.get(w)
            if e is None:
                bad = all_exact and wd[w] != 0
            else:
                bad = wd[w] != e.count if e.exact else wd[w] < e.count
            if bad:
                raise ConsistencyError(f"weight {w}: closed {e.count if e else 0} vs oracle {wd[w]}")
    return entries, methods


def _emit(args, payload, text: str) -> None:
    if args.format == "json":
        sys.stdout.write(io.dumps(payload) + "\n")
    else:
        sys.stdout.write(text.rstrip("\n") + "\n")


def _code_text(code: CodeSpec) -> str:
    mons = " ".join(str(f) for f in code.info_set) or "(empty)"
    return f"# (n={code.n}, k={code.k}, r={code.r})\n{mons}"


def cmd_construct(args) -> int:
    code = _build(args)
    _emit(args, io.code_to_json(code), _code_text(code))
    return 0


def cmd_wdist(args) -> int:
    code = _code(args)
    caveats: list[str] = []
    out = {"command": "wdist", "method": args.method, "range": args.range, "code": io.code_to_json(code)}
    if args.range == "full":
        wd, methods = _full(code, args, caveats)
        out.update(methods=methods, distribution=io.wd_to_json(wd), polynomial=wd.polynomial(), caveats=caveats)
        text = wd.polynomial()
    else:
        entries, methods = _low(code, args, caveats)
        out.update(methods=methods, spectrum=io.spectrum_to_json(entries), caveats=caveats)
        text = "\n".join(f"{e.weight}\t{e.count}" + ("" if e.exact else "\t(Type II only)") for e in entries)
    _emit(args, out, text)
    return 0


def _dist_any(code: CodeSpec, args) -> tuple[WeightDistribution | None, str]:
    try:
        return _closed_full(code), "closed"
    except InputError:
        pass
    if code.k <= _limit(args):
        return _oracle(code, args), "brute"
    return None, ""


def cmd_dual(args) -> int:
    code = _code(args)
    dual = CodeSpec(dual_set(code))
    primal, how = _dist_any(code, args)
    routes: dict[str, WeightDistribution] = {}
    if primal is not None:
        with _timed("MacWilliams transform"):
            routes[f"macwilliams({how})"] = macwilliams_dual_wd(primal)
    direct, how_d = _dist_any(dual, args)
    if direct is not None:
        routes[f"dual-set({how_d})"] = direct
    if not routes:
        raise ResourceLimitError("neither the code nor its dual is within the closed-form or oracle range")
    values = list(routes.values())
    if any(v.counts != values[0].counts for v in values[1:]):
        detail = "; ".join(f"{k}: {v.polynomial()}" for k, v in routes.items())
        raise ConsistencyError(f"dual distributions disagree: {detail}")
    wd = values[0]
    caveats = [] if len(routes) > 1 else ["single route; no cross-check"]
    out = {
        "command": "dual",
        "code": io.code_to_json(code),
        "dual_code": io.code_to_json(dual),
        "routes": list(routes),
        "distribution": io.wd_to_json(wd),
        "polynomial": wd.polynomial(),
        "caveats": caveats,
    }
    _emit(args, out, _code_text(dual) + "\n" + wd.polynomial())
    return 0


def cmd_verify(args) -> int:
    names = args.suite or list(SUITES)
    reports = []
    for name in names:
        with _timed(f"suite {name}"):
            reports.append(run_suite(name, args.m, max_k=_limit(args), seed=args.seed))
    lines = []
    for rep in reports:
        status = "PASS" if rep.passed else "FAIL"
        line = f"{rep.name} m={rep.m}: {status} (checked {rep.checked}, skipped {rep.skipped})"
        if "level_sizes" in rep.info:
            line += " levels " + ",".join(map(str, rep.info["level_sizes"]))
        lines.append(line)
        lines.extend(f"  counterexample: {f}" for f in rep.failures)
    _emit(args, {"command": "verify", "m": args.m, "reports": [r.to_json() for r in reports]}, "\n".join(lines))
    return 0 if all(r.passed for r in reports) else 1


def cmd_order(args) -> int:
    if args.m < 3:
        raise InputError("--m must be at least 3")
    order = blended_order(args.m)
    text = "\n".join(f"{lambda_size(f)}\t{f}" for f in order)
    _emit(args, {"command": "order", "m": args.m, "order": io.order_to_json(order)}, text)
    return 0


def _parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--threads", type=int, default=None, help="cap on worker threads (default: all cores)")
    common.add_argument("--limit-k", type=int, default=None, help="oracle dimension cap (default: WDX_BRUTE_LIMIT or 28)")
    common.add_argument("-v", "--verbose", action="store_true", help="log timing to stderr")

    source = argparse.ArgumentParser(add_help=False)
    source.add_argument("--m", type=int)
    source.add_argument("--k", type=int)
    source.add_argument("--r", type=int)
    source.add_argument("--rule", choices=RULES)

    p = argparse.ArgumentParser(prog="wdx", description="Weight distributions of decreasing monomial codes.")
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("construct", parents=[common, source], help="build an information set")
    sp.set_defaults(func=cmd_construct)

    for name, func, helptext in (("wdist", cmd_wdist, "weight distribution"), ("dual", cmd_dual, "dual code and its distribution")):
        sp = sub.add_parser(name, parents=[common, source], help=helptext)
        sp.add_argument("code", nargs="?", help="code JSON file or inline JSON")
        if name == "wdist":
            sp.add_argument("--method", choices=("closed", "brute", "auto"), default="auto")
            sp.add_argument("--range", choices=("full", "low"), default="full")
        sp.set_defaults(func=func)

    sp = sub.add_parser("verify", parents=[common], help="run self-check suites")
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--suite", action="append", choices=list(SUITES))
    sp.add_argument("--seed", type=int, default=0)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("order", parents=[common], help="blended order of degree-2 monomials")
    sp.add_argument("--m", type=int, required=True)
    sp.set_defaults(func=cmd_order)
    return p


def main(argv: list[str] | None = None) -> int:
    args = _parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(name)s: %(message)s", stream=sys.stderr)
    if args.threads is not None and args.threads < 1:
        print("wdx: --threads must be positive", file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except (InputError, ResourceLimitError) as e:
        print(f"wdx: error: {e}", file=sys.stderr)
        return 2
    except ConsistencyError as e:
        print(f"wdx: consistency failure: {e}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
