"""The splitting test T_{N(P)+1} == T_2 (mod P) checked against a direct count
of roots of f in the residue field, one prime at a time or over a range.
"""

from __future__ import annotations

import logging
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from enum import Enum

from . import arith, ff
from .galois import ExclusionValue
from .newton import NewtonSeq, trace_combine
from .nf import MonicPoly, NumberField, ResiduePrime, rational_prime, residue_primes_above

log = logging.getLogger(__name__)


class Verdict(str, Enum):
    SPLIT = "Split"
    NOT_SPLIT = "NotSplit"
    EXCLUDED = "Excluded"
    MISMATCH = "MISMATCH"


class TheoremViolation(RuntimeError):
    """Oracle and congruence disagree at a prime that does not divide E."""

    def __init__(self, reports):
        self.reports = list(reports)
        lines = ", ".join(f"{r.prime.label} (oracle={r.oracle_split}, congruence={r.congruence_holds})"
                          for r in self.reports)
        super().__init__(f"criterion mismatch at {lines}")


@dataclass
class PrimeReport:
    prime: ResiduePrime
    roots: int  # N_P(f), distinct roots in the residue field
    oracle_split: bool
    congruence_holds: bool
    excluded: bool
    verdict: Verdict

    @property
    def agrees(self) -> bool:
        return self.oracle_split == self.congruence_holds

    def as_dict(self) -> dict:
        return {
            "prime": self.prime.label,
            "p": str(self.prime.p),
            "norm": str(self.prime.norm),
            "roots": self.roots,
            "oracle_split": self.oracle_split,
            "congruence": self.congruence_holds,
            "excluded": self.excluded,
            "verdict": self.verdict.value,
        }


def _prepare(f) -> tuple[MonicPoly, NewtonSeq]:
    if isinstance(f, NewtonSeq):
        return f.poly, f
    if not isinstance(f, MonicPoly):
        f = MonicPoly.over_q(list(f))
    return f, NewtonSeq.from_poly(f)


def _as_prime(P) -> ResiduePrime:
    return rational_prime(P) if isinstance(P, int) else P


def _frobenius_data(f: MonicPoly, seq: NewtonSeq, P: ResiduePrime):
    """(N_P(f), T_{N(P)+1} - T_2 == 0) from one power X^q mod f."""
    F = P.field
    fbar = f.reduce(P)
    _, init = seq.reduce(P)
    x = [F.zero, F.one]
    xq = ff.pow_x_mod(F, fbar, F.q)
    roots = len(ff.gcd_mod(F, fbar, ff.sub(F, xq, x))) - 1
    xq1 = ff.mod(F, ff.mul(F, xq, x), fbar)  # X^{q+1}
    t_q1 = trace_combine(F, xq1, init)
    t2 = trace_combine(F, ff.pow_x_mod(F, fbar, 2), init)
    return roots, t_q1 == t2


def congruence_test(f, P) -> bool:
    """T_{N(P)+1} == T_2 in O_K/P."""
    f, seq = _prepare(f)
    P = _as_prime(P)
    F = P.field
    fbar = f.reduce(P)
    _, init = seq.reduce(P)
    t_q1 = trace_combine(F, ff.pow_x_mod(F, fbar, P.norm + 1), init)
    return t_q1 == trace_combine(F, ff.pow_x_mod(F, fbar, 2), init)


def oracle_split(f, P) -> bool:
    """N_P(f) = k, counted as deg gcd(X^q - X, f mod P)."""
    f, _ = _prepare(f)
    P = _as_prime(P)
    return ff.count_roots(P.field, f.reduce(P)) == f.k


def check_prime(f, P, E: ExclusionValue | None = None) -> PrimeReport:
    f, seq = _prepare(f)
    P = _as_prime(P)
    roots, cong = _frobenius_data(f, seq, P)
    split = roots == f.k
    excluded = E is not None and E.divides_at(P)
    if excluded:
        verdict = Verdict.EXCLUDED
    elif split != cong:
        verdict = Verdict.MISMATCH
    else:
        verdict = Verdict.SPLIT if split else Verdict.NOT_SPLIT
    return PrimeReport(P, roots, split, cong, excluded, verdict)


# ---------------------------------------------------------------------------
# scans


@dataclass
class ScanReport:
    bound: int
    field: NumberField
    primes_checked: int = 0
    reports: list[PrimeReport] = field(default_factory=list)
    skipped: list[tuple[int, str, str]] = field(default_factory=list)  # (p, label, reason)
    seconds: float = 0.0

    @property
    def split(self) -> list[PrimeReport]:
        return [r for r in self.reports if r.verdict is Verdict.SPLIT]

    @property
    def excluded(self) -> list[PrimeReport]:
        return [r for r in self.reports if r.verdict is Verdict.EXCLUDED]

    @property
    def mismatches(self) -> list[PrimeReport]:
        return [r for r in self.reports if r.verdict is Verdict.MISMATCH]

    @property
    def forward_violations(self) -> list[PrimeReport]:
        """Split primes where the congruence fails (never allowed, excluded or not)."""
        return [r for r in self.reports if r.oracle_split and not r.congruence_holds]

    def disagreements(self) -> list[PrimeReport]:
        return [r for r in self.reports if not r.agrees]

    def as_dict(self) -> dict:
        # no timing here so that identical runs give identical JSON
        return {
            "bound": str(self.bound),
            "primes_checked": self.primes_checked,
            "residue_primes": len(self.reports),
            "split": [r.prime.label for r in self.split],
            "split_count": len(self.split),
            "excluded": [
                {"prime": r.prime.label, "status": "agrees" if r.agrees else "disagrees",
                 "oracle_split": r.oracle_split, "congruence": r.congruence_holds}
                for r in self.excluded
            ],
            "skipped": [{"prime": lab, "reason": why} for _, lab, why in self.skipped],
            "mismatches": [r.as_dict() for r in self.mismatches],
        }


def _scan_chunk(args):
    f, E, ps, max_norm = args
    seq = NewtonSeq.from_poly(f)
    out, skipped = [], []
    for p in ps:
        for P in residue_primes_above(f.K, p):
            if max_norm is not None and P.norm >= max_norm:
                continue
            if not P.usable:
                why = "ramified" if P.ramified else "divides disc(g)"
                skipped.append((p, P.label, why))
                continue
            out.append(check_prime(seq, P, E))
    return out, skipped


def _workers() -> int:
    try:
        n = int(os.environ.get("SPLITLAW_THREADS", "1"))
    except ValueError:
        n = 1
    return max(1, min(n, os.cpu_count() or 1))


def scan(f, E: ExclusionValue | None, bound: int, K: NumberField | None = None,
         max_norm: int | None = None, raise_on_mismatch: bool = True) -> ScanReport:
    """Check every usable residue prime above each rational p < bound.

    ``max_norm`` additionally drops residue primes of norm >= max_norm.
    """
    f, _ = _prepare(f)
    if K is not None and K != f.K:
        raise ValueError("polynomial is defined over a different field")
    if E is not None and E.poly != f:
        raise ValueError("exclusion value belongs to another polynomial")
    t0 = time.perf_counter()
    primes = arith.primes_below(bound)
    workers = _workers()
    report = ScanReport(bound, f.K, len(primes))
    if workers > 1 and len(primes) > 1000:
        chunks = [primes[i::workers] for i in range(workers)]
        with ProcessPoolExecutor(workers) as pool:
            results = list(pool.map(_scan_chunk, [(f, E, c, max_norm) for c in chunks]))
    else:
        results = [_scan_chunk((f, E, primes, max_norm))]
    for out, skipped in results:
        report.reports.extend(out)
        report.skipped.extend(skipped)
    report.reports.sort(key=lambda r: (r.prime.p, r.prime.h))
    report.skipped.sort()
    report.seconds = time.perf_counter() - t0
    if E is not None:
        for r in report.excluded:
            # re-verified by exact arithmetic, not by the factorization
            assert E.divides_at(r.prime), r.prime.label
    if raise_on_mismatch and (report.mismatches or report.forward_violations):
        raise TheoremViolation(report.mismatches or report.forward_violations)
    return report


# ---------------------------------------------------------------------------
# principality through the Hilbert class field


@dataclass
class PrincipalReport:
    report: PrimeReport

    @property
    def principal(self) -> bool:
        # split completely in H_K <=> principal; f is assumed to define H_K
        return self.report.oracle_split

    @property
    def criterion(self) -> bool:
        return self.report.congruence_holds

    def as_dict(self) -> dict:
        d = self.report.as_dict()
        d["principal"] = self.principal
        return d


def principality_report(K: NumberField, hcf: MonicPoly, bound: int, E: ExclusionValue | None = None,
                        max_norm: int | None = None) -> tuple[ScanReport, list[PrincipalReport]]:
    if hcf.K != K:
        raise ValueError("class field polynomial must be defined over K")
    rep = scan(hcf, E, bound, K, max_norm)
    return rep, [PrincipalReport(r) for r in rep.reports]
