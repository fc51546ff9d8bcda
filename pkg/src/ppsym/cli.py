"""ppsym: verify CSSC(2n) = TSSC(2n)^2 step by step with exact arithmetic."""
from __future__ import annotations

import argparse
import json
import math
import sys
import time
from typing import Callable

from . import lgvpaths, lozenge, matrices, planepart
from .exactnum import format_rational

PASS, FAIL, SKIPPED = "pass", "fail", "skipped(guard)"

DEFAULT_MAX_N = 10
DEFAULT_ORACLE_MAX_N = 3

GUARD_ERRORS = (planepart.EnumerationTooLarge, lozenge.GraphTooLarge, lgvpaths.FamilyTooLarge)


class UsageError(Exception):
    pass


def _ms(t0: float) -> str:
    return f"{(time.perf_counter() - t0) * 1000:.3f}"


def _status(ok: bool) -> str:
    return PASS if ok else FAIL


def verify_n(n: int, with_oracles: bool, oracle_max_n: int) -> dict:
    """One report record: the determinant chain, plus oracles if requested."""
    timings: dict[str, str] = {}
    identities: dict[str, str] = {}
    values: dict[str, str] = {}

    t0 = time.perf_counter()
    det_u = matrices.det_U(n)
    det_w = matrices.determinant(matrices.build_w(n))
    det_st = matrices.determinant(matrices.build_st(n))
    timings["determinants"] = _ms(t0)

    scaled_u = 2**n * det_u
    root = math.isqrt(det_st.numerator) if det_st.denominator == 1 and det_st >= 0 else None
    is_square = root is not None and root * root == det_st
    identities["half_entry_relation"] = _status(matrices.half_entry_relation(n))
    identities["det_w_eq_2n_det_U"] = _status(det_w == scaled_u)
    identities["det_st_eq_det_w"] = _status(det_st == det_w)
    identities["det_st_perfect_square"] = _status(is_square)
    identities["cssc_eq_tssc_squared"] = _status(is_square and scaled_u == det_st)

    t0 = time.perf_counter()
    lgv = lgvpaths.lgv_matrix(n)
    identities["lgv_entries_eq_U"] = _status(lgv == matrices.build_U(n))
    identities["2n_lstar_eq_cssc_det"] = _status(2**n * matrices.determinant(lgv) == scaled_u)
    timings["lattice_paths"] = _ms(t0)

    record = {
        "n": n,
        "det_U": format_rational(det_u),
        "det_w": format_rational(det_w),
        "det_st": format_rational(det_st),
        "cssc_det": format_rational(scaled_u),
        "tssc_implied": str(root) if is_square else None,
    }

    if with_oracles:
        checks: list[tuple[str, Callable[[], tuple[bool, dict]]]] = [
            ("cssc_bruteforce_eq_det", lambda: _oracle_cssc_bruteforce(n, scaled_u)),
            ("tssc_bruteforce_eq_det", lambda: _oracle_tssc_bruteforce(n, root)),
            ("orbit_matchings_eq_det", lambda: _oracle_orbit(n, scaled_u)),
            ("factorization", lambda: _oracle_factorization(n, det_u)),
            ("lgv_nonintersecting_eq_det", lambda: _oracle_nonintersecting(n, det_u)),
            ("lgv_compatibility", lambda: (lgvpaths.compatibility_check(n), {})),
        ]
        for name, check in checks:
            if n > oracle_max_n:
                identities[name] = SKIPPED
                continue
            t0 = time.perf_counter()
            try:
                ok, found = check()
            except GUARD_ERRORS:
                identities[name] = SKIPPED
                continue
            except (ArithmeticError, lozenge.AxisNotFound):
                ok, found = False, {}
            identities[name] = _status(ok)
            values.update(found)
            timings[name] = _ms(t0)
        record["oracles"] = values

    record["identities"] = identities
    record["timings_ms"] = timings
    return record


def _oracle_cssc_bruteforce(n, scaled_u):
    c = planepart.count_cssc_bruteforce(n)
    return c == scaled_u, {"cssc_bruteforce": str(c)}


def _oracle_tssc_bruteforce(n, root):
    t = planepart.count_tssc_bruteforce(n)
    return root is not None and t == root, {"tssc_bruteforce": str(t)}


def _oracle_orbit(n, scaled_u):
    m = lozenge.count_cssc_via_orbit(n)
    return m == scaled_u, {"orbit_matchings": str(m)}


def _oracle_factorization(n, det_u):
    k_gf = lozenge.matching_gf(lozenge.build_K(n))
    ok = lozenge.factorization_check(n) and k_gf == det_u
    return ok, {"K_matching_gf": format_rational(k_gf)}


def _oracle_nonintersecting(n, det_u):
    gf = lgvpaths.enumerate_nonintersecting(n)
    return gf == det_u, {"nonintersecting_gf": format_rational(gf)}


def run_verification(max_n: int = DEFAULT_MAX_N, with_oracles: bool = False,
                     oracle_max_n: int = DEFAULT_ORACLE_MAX_N) -> dict:
    if max_n < 1:
        raise UsageError(f"--max-n must be at least 1, got {max_n}")
    if oracle_max_n < 0:
        raise UsageError(f"--oracle-max-n must be non-negative, got {oracle_max_n}")
    records = [verify_n(n, with_oracles, oracle_max_n) for n in range(1, max_n + 1)]
    ok = all(v != FAIL for r in records for v in r["identities"].values())
    return {
        "max_n": max_n,
        "with_oracles": with_oracles,
        "oracle_max_n": oracle_max_n,
        "all_passed": ok,
        "records": records,
    }


def report_to_json(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True)


def count(cls: str, n: int, method: str) -> int:
    if n < 1:
        raise UsageError(f"n must be at least 1, got {n}")
    if cls == "cssc":
        if method == "det":
            return matrices.cssc_det(n)
        if method == "bruteforce":
            return planepart.count_cssc_bruteforce(n)
        if method == "orbit":
            return lozenge.count_cssc_via_orbit(n)
        if method == "paths":
            value = 2**n * lgvpaths.lstar(n)
            if value.denominator != 1:
                raise ArithmeticError(f"2^n L*(n) is not an integer: {value}")
            return value.numerator
    elif cls == "tssc":
        if method == "det":
            return matrices.tssc_det(n)
        if method == "bruteforce":
            return planepart.count_tssc_bruteforce(n)
        raise UsageError(f"method {method!r} counts CSSC only; use det or bruteforce for tssc")
    raise UsageError(f"unknown class/method {cls!r}/{method!r}")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="ppsym", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run the identity chain for n = 1..max_n")
    v.add_argument("--max-n", type=int, default=DEFAULT_MAX_N)
    v.add_argument("--with-oracles", action="store_true",
                   help="also run enumeration, matching and path-family oracles")
    v.add_argument("--oracle-max-n", type=int, default=DEFAULT_ORACLE_MAX_N)
    v.add_argument("--json", metavar="PATH", help="write the report here instead of stdout")

    m = sub.add_parser("matrix", help="print U(n), w(n) or st(n) exactly")
    m.add_argument("kind", choices=sorted(matrices.BUILDERS))
    m.add_argument("n", type=int)
    m.add_argument("--format", choices=("csv", "json"), default="csv")

    c = sub.add_parser("count", help="print CSSC(2n) or TSSC(2n)")
    c.add_argument("cls", choices=("cssc", "tssc"))
    c.add_argument("n", type=int)
    c.add_argument("--method", choices=("det", "bruteforce", "orbit", "paths"), default="det")

    d = sub.add_parser("dump-graph", help="edge list of the orbit graph or of K_n")
    d.add_argument("which", choices=("orbit", "K"))
    d.add_argument("n", type=int)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "verify":
            report = run_verification(args.max_n, args.with_oracles, args.oracle_max_n)
            text = report_to_json(report)
            if args.json:
                with open(args.json, "w") as fh:
                    fh.write(text + "\n")
                for r in report["records"]:
                    bad = [k for k, v in r["identities"].items() if v == FAIL]
                    print(f"n={r['n']}: " + ("FAIL " + ", ".join(bad) if bad else "ok"))
            else:
                print(text)
            return 0 if report["all_passed"] else 1
        if args.command == "matrix":
            if args.n < 1:
                raise UsageError(f"n must be at least 1, got {args.n}")
            mat = matrices.BUILDERS[args.kind](args.n)
            print(mat.to_csv() if args.format == "csv" else mat.to_json())
            return 0
        if args.command == "count":
            print(count(args.cls, args.n, args.method))
            return 0
        if args.command == "dump-graph":
            if args.n < 1:
                raise UsageError(f"n must be at least 1, got {args.n}")
            g = lozenge.orbit_graph(args.n) if args.which == "orbit" else lozenge.build_K(args.n)
            print(g.dump())
            return 0
    except (UsageError, *GUARD_ERRORS) as exc:
        print(f"ppsym: error: {exc}", file=sys.stderr)
        return 2
    except (ArithmeticError, lozenge.AxisNotFound) as exc:
        print(f"ppsym: check failed: {exc}", file=sys.stderr)
        return 1
    return 2


if __name__ == "__main__":
    sys.exit(main())
