"""Command line front end.

    splitlaw analyze --poly "x^5-x-1" --mode sym
    splitlaw check --poly "x^7-x-1" --prime 15961129
    splitlaw scan --poly "x^4-x-1" --limit 10000
    splitlaw sequence --poly "x^5-x-1" --count 21
    splitlaw principal --field "y^2+5" --hcf "x^2+1" --limit 100

Exit codes: 0 success, 1 usage error, 2 computation failure, 3 criterion
mismatch (a prime outside E where the congruence and the root count differ).
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
import time

from . import arith, ff
from .arith import EFFORT_PRESETS, Effort, Factorization
from .balls import DEFAULT_MAX_BITS, PrecisionError
from .criterion import TheoremViolation, check_prime, principality_report, scan
from .galois import MODES, ExclusionValue, exclusion_value
from .newton import NewtonSeq, term_mod_trace, terms_exact
from .nf import MonicPoly, NumberField, ResiduePrime, format_elem, residue_primes_above
from .parse import ParseError, format_poly, format_zpoly, parse_field, parse_poly, parse_zpoly

log = logging.getLogger("splitlaw")

EXIT_OK, EXIT_USAGE, EXIT_FAILURE, EXIT_MISMATCH = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


# ---------------------------------------------------------------------------
# serialization (big integers as decimal strings)


def _num(x) -> str:
    return format_elem(x) if hasattr(x, "coords") else str(x)


def _fact_json(fac: Factorization | None):
    if fac is None:
        return None
    return {
        "sign": fac.sign,
        "factors": [[str(p), e] for p, e in fac.factors],
        "cofactor": str(fac.cofactor),
    }


def _field_text(K: NumberField) -> str:
    return "Q" if K.is_rational else format_zpoly(list(K.g), "y")


def _header(f: MonicPoly, mode: str | None) -> dict:
    out = {
        "polynomial": format_poly(f),
        "field": _field_text(f.K),
        "discriminant": _num(f.discriminant),
        "mode": mode,
    }
    if not f.K.is_rational:
        from .nf import nf_norm

        out["discriminant_norm"] = str(nf_norm(f.discriminant))
    return out


def _classes_json(ev: ExclusionValue) -> list[dict]:
    out = []
    for cp in ev.classes:
        d = {
            "cycle_type": list(cp.cycle_type),
            "value": _num(cp.value),
            "size": cp.size,
            "factorization": _fact_json(cp.factorization),
            "is_square": cp.is_square,
        }
        if cp.norm is not None:
            d["norm"] = str(cp.norm)
        out.append(d)
    return out


def _exclusion_json(ev: ExclusionValue) -> dict:
    fac = ev.factorization
    d = {
        "value": _num(ev.value),
        "prime_support": [str(p) for p in fac.primes()] if fac else None,
        "cofactor": str(fac.cofactor) if fac else None,
    }
    if ev.norm is not None:
        d["norm"] = str(ev.norm)
    return d


# ---------------------------------------------------------------------------
# argument handling


def _effort(args) -> Effort:
    base = EFFORT_PRESETS[args.effort]
    return Effort(base.trial_bound, base.rho_rounds, base.rho_iterations, args.seed)


def _poly(args, text: str, K: NumberField) -> MonicPoly:
    try:
        return parse_poly(text, "x", K)
    except ParseError as exc:
        raise UsageError(f"--poly: {exc}") from exc


def _field(text: str | None) -> NumberField:
    try:
        return parse_field(text)
    except (ParseError, ValueError) as exc:
        raise UsageError(f"--field: {exc}") from exc


def _exclusion(args, f: MonicPoly, factor: bool) -> ExclusionValue:
    return exclusion_value(f, args.mode, _effort(args), args.max_bits, factor=factor)


def _residue_primes(K: NumberField, p: int, factor: str | None) -> list[ResiduePrime]:
    if not arith.is_prime(p):
        raise UsageError(f"{p} is not prime")
    primes = residue_primes_above(K, p)
    if factor is None:
        return primes
    try:
        h = parse_zpoly(factor, "y")
    except ParseError as exc:
        raise UsageError(f"--factor: {exc}") from exc
    F = ff.FqField(p)
    want = ff.monic(F, ff.from_ints(F, h))
    for P in primes:
        if list(P.h) == want:
            return [P]
    raise UsageError(f"{factor} is not an irreducible factor of the field polynomial mod {p}")


# ---------------------------------------------------------------------------
# commands


def cmd_analyze(args) -> tuple[dict, int]:
    K = _field(args.field)
    f = _poly(args, args.poly, K)
    ev = _exclusion(args, f, factor=True)
    out = _header(f, args.mode)
    out["classes"] = _classes_json(ev)
    out["exclusion"] = _exclusion_json(ev)
    out["scan"] = None
    if args.limit:
        rep = scan(f, ev, args.limit, raise_on_mismatch=False)
        out["scan"] = rep.as_dict()
        if rep.mismatches:
            return out, EXIT_MISMATCH
    return out, EXIT_OK


def cmd_check(args) -> tuple[dict, int]:
    K = _field(args.field)
    f = _poly(args, args.poly, K)
    ev = _exclusion(args, f, factor=False)
    out = _header(f, args.mode)
    out["exclusion"] = _exclusion_json(ev)
    reports = []
    code = EXIT_OK
    for P in _residue_primes(K, args.prime, args.factor):
        if not P.usable:
            reports.append({"prime": P.label, "norm": str(P.norm), "verdict": "Skipped",
                            "reason": "ramified" if P.ramified else "divides disc(g)"})
            continue
        r = check_prime(f, P, ev)
        reports.append(r.as_dict())
        if r.verdict.value == "MISMATCH":
            code = EXIT_MISMATCH
    out["primes"] = reports
    return out, code


def cmd_scan(args) -> tuple[dict, int]:
    K = _field(args.field)
    f = _poly(args, args.poly, K)
    ev = _exclusion(args, f, factor=False)
    rep = scan(f, ev, args.limit, max_norm=args.max_norm, raise_on_mismatch=False)
    out = _header(f, args.mode)
    out["exclusion"] = _exclusion_json(ev)
    out["scan"] = rep.as_dict()
    log.info("scanned %d primes in %.2f s", rep.primes_checked, rep.seconds)
    return out, EXIT_MISMATCH if rep.mismatches or rep.forward_violations else EXIT_OK


def cmd_sequence(args) -> tuple[dict, int]:
    K = _field(args.field)
    f = _poly(args, args.poly, K)
    if args.count < 1:
        raise UsageError("--count must be positive")
    seq = NewtonSeq.from_poly(f)
    out = {"polynomial": format_poly(f), "field": _field_text(K), "count": args.count}
    if args.mod is None:
        out["terms"] = [_num(t) for t in terms_exact(seq, args.count)]
        return out, EXIT_OK
    primes = _residue_primes(K, args.mod, args.factor)
    usable = [P for P in primes if P.usable]
    if not usable:
        raise UsageError(f"no usable residue prime above {args.mod}")
    P = usable[0]
    out["prime"] = P.label
    fbar = f.reduce(P)
    out["terms"] = [_field_elem_json(term_mod_trace(seq, n, P, fbar)) for n in range(args.count)]
    return out, EXIT_OK


def _field_elem_json(v):
    return str(v) if isinstance(v, int) else [str(c) for c in v]


def cmd_principal(args) -> tuple[dict, int]:
    K = _field(args.field)
    if K.is_rational:
        raise UsageError("--field must define a number field of degree >= 2")
    f = _poly(args, args.hcf, K)
    ev = _exclusion(args, f, factor=False)
    rep, rows = principality_report(K, f, args.limit, ev, args.max_norm)
    out = _header(f, args.mode)
    out["exclusion"] = _exclusion_json(ev)
    out["scan"] = rep.as_dict()
    out["primes"] = [r.as_dict() for r in rows]
    return out, EXIT_OK


# ---------------------------------------------------------------------------


def _short(v: str, width: int = 80) -> str:
    if len(v) <= width:
        return v
    return f"{v[:30]}...{v[-10:]} ({len(v)} chars)"


def _text(out: dict) -> str:
    lines = []
    for key in ("polynomial", "field", "discriminant", "discriminant_norm", "mode"):
        if out.get(key) is not None:
            lines.append(f"{key}: {out[key]}")
    for cp in out.get("classes") or []:
        fac = cp["factorization"]
        ftxt = ""
        if fac:
            parts = [f"{p}^{e}" if e > 1 else p for p, e in fac["factors"]]
            if fac["cofactor"] != "1":
                parts.append(f"C({fac['cofactor']})")
            ftxt = ("-" if fac["sign"] < 0 else "") + " * ".join(parts or ["1"])
        sq = " square" if cp["is_square"] else ""
        lines.append(f"  class {cp['cycle_type']}: {ftxt or _short(cp['value'])}{sq}")
    ex = out.get("exclusion")
    if ex:
        if ex["prime_support"] is not None:
            lines.append(f"exclusion primes: {', '.join(ex['prime_support']) or 'none'}"
                         + (f" (unfactored {ex['cofactor']})" if ex["cofactor"] != "1" else ""))
        else:
            lines.append(f"exclusion value: {_short(ex['value'])}")
    sc = out.get("scan")
    if sc:
        lines.append(f"scan below {sc['bound']}: {sc['residue_primes']} residue primes, "
                     f"{sc['split_count']} split, {len(sc['excluded'])} excluded, "
                     f"{len(sc['skipped'])} skipped, {len(sc['mismatches'])} mismatches")
        for e in sc["excluded"]:
            lines.append(f"  excluded {e['prime']} ({e['status']})")
    for r in out.get("primes") or []:
        extra = f" principal={r['principal']}" if "principal" in r else ""
        if "oracle_split" in r:
            extra += f" (roots {r['roots']}, congruence {r['congruence']})"
        lines.append(f"  {r['prime']} norm {r['norm']}: {r['verdict']}{extra}")
    if "terms" in out:
        lines.append("terms: " + ", ".join(str(t) for t in out["terms"]))
    return "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", default=None, help="defining polynomial of K in y (default Q)")
    common.add_argument("--mode", choices=MODES, default="classes",
                        help="sym/alt assume Gal(f) = S_k / A_k; classes is always valid")
    common.add_argument("--max-bits", type=int, default=DEFAULT_MAX_BITS, help="precision cap")
    common.add_argument("--effort", choices=sorted(EFFORT_PRESETS), default="default",
                        help="integer factorization budget")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized factoring")
    fmt = common.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="fmt", action="store_const", const="json", default="json")
    fmt.add_argument("--text", dest="fmt", action="store_const", const="text")
    common.add_argument("-v", "--verbose", action="store_true")

    p = _Parser(prog="splitlaw", description="Prime splitting through Newton power sums.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    a = sub.add_parser("analyze", parents=[common], help="class products and exclusion value")
    a.add_argument("--poly", required=True)
    a.add_argument("--limit", type=int, default=0, help="also scan primes below this bound")

    c = sub.add_parser("check", parents=[common], help="classify one prime")
    c.add_argument("--poly", required=True)
    c.add_argument("--prime", type=int, required=True)
    c.add_argument("--factor", default=None, help="irreducible factor of g mod p, in y")

    s = sub.add_parser("scan", parents=[common], help="classify all primes below a bound")
    s.add_argument("--poly", required=True)
    s.add_argument("--limit", type=int, required=True)
    s.add_argument("--max-norm", type=int, default=None)

    q = sub.add_parser("sequence", parents=[common], help="Newton sums T_0 .. T_{count-1}")
    q.add_argument("--poly", required=True)
    q.add_argument("--count", type=int, required=True)
    q.add_argument("--mod", type=int, default=None, help="reduce modulo a prime above this p")
    q.add_argument("--factor", default=None, help="irreducible factor of g mod p, in y")

    r = sub.add_parser("principal", parents=[common], help="principal primes via a class field polynomial")
    r.add_argument("--hcf", required=True, help="polynomial in x over K defining the Hilbert class field")
    r.add_argument("--limit", type=int, required=True)
    r.add_argument("--max-norm", type=int, default=None)
    return p


COMMANDS = {
    "analyze": cmd_analyze,
    "check": cmd_check,
    "scan": cmd_scan,
    "sequence": cmd_sequence,
    "principal": cmd_principal,
}


def run(argv: list[str] | None = None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, stream=sys.stderr,
                        format="%(levelname)s %(name)s: %(message)s")
    if args.command == "principal" and args.field is None:
        print("splitlaw: error: principal needs --field", file=sys.stderr)
        return EXIT_USAGE
    t0 = time.perf_counter()
    try:
        out, code = COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"splitlaw: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except TheoremViolation as exc:
        print(f"splitlaw: MISMATCH: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    except (PrecisionError, ArithmeticError, ValueError) as exc:
        print(f"splitlaw: computation failed: {exc}", file=sys.stderr)
        return EXIT_FAILURE
    if args.fmt == "text":
        print(_text(out), file=stdout)
    else:
        print(json.dumps(out, indent=2), file=stdout)
    log.info("done in %.2f s", time.perf_counter() - t0)
    if code == EXIT_MISMATCH:
        print("splitlaw: MISMATCH found; see the mismatches list", file=sys.stderr)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
