"""Self-verification checks run by ``hfdinv verify``.

Each check reproduces one published computation or cross-checks two
independent routes to the same numbers, over a default sweep that
``--range q=LO..HI`` / ``--range p=LO..HI`` can narrow.
"""

from __future__ import annotations

import time
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .dinv import Slope, integral_table, lens_table, table
from .exactmath import squarefree
from .knots import V, from_polynomial, pretzel, torsion, torsion_closed_form
from .obstruction import Conclusion, obstruct
from .scan import ScanConfig, scan_to_string


@dataclass
class Ranges:
    q: tuple[int, int] | None = None
    p: tuple[int, int] | None = None

    def get(self, var: str, default: tuple[int, int]) -> range:
        lo, hi = getattr(self, var) or default
        return range(lo, hi + 1)


@dataclass(frozen=True)
class Check:
    name: str
    description: str
    run: Callable[[Ranges], str | None]  # None = pass, else a failure message


def _v_sequence(r: Ranges) -> str | None:
    K = pretzel(3)
    got = [V(K, s) for s in range(12)]
    want = [2, 2, 1, 1, 1] + [0] * 7
    return None if got == want else f"V_0..V_11 = {got}"


def _torsion_closed_form(r: Ranges) -> str | None:
    for k in range(1, 101):
        for family, q in (("4k+3", 2 * k + 1), ("4k+1", 2 * k)):
            K = pretzel(q)
            for j in range(K.genus + 3):
                if torsion(K, j) != torsion_closed_form(family, k, j):
                    return f"q={q}, j={j}: {torsion(K, j)} vs closed form"
    return None


def _integral_negativity(r: Ranges) -> str | None:
    for q in r.get("q", (4, 100)):
        tab = table(pretzel(q), Slope(2 * q + 3))
        if not all(d < 0 for d in tab.values):
            return f"q={q}: max d = {tab.max_d}"
    return None


def _integral_verdicts(r: Ranges) -> str | None:
    qs = r.get("q", (4, 100))
    for q in qs:
        v = obstruct(pretzel(q), Slope(2 * q + 3))
        want = Conclusion.NO_WEAK_FILLING if squarefree(2 * q + 3) else Conclusion.INCONCLUSIVE
        if v.conclusion is not want:
            return f"q={q}: {v.conclusion}, expected {want}"
    if 11 in qs:
        v = obstruct(pretzel(11), Slope(25))
        if v.delta_squarefree or v.conclusion is not Conclusion.INCONCLUSIVE:
            return "q=11 (delta=25) not INCONCLUSIVE"
    return None


def _rational_nonpositivity(r: Ranges) -> str | None:
    K = pretzel(3)
    for p in r.get("p", (1, 100)):
        tab = table(K, Slope(10 * p + 1, p))
        if not all(d <= 0 for d in tab.values):
            return f"p={p}: max d = {tab.max_d}"
    return None


def _rational_verdicts(r: Ranges) -> str | None:
    K = pretzel(3)
    ps = r.get("p", (1, 100))
    for p in ps:
        v = obstruct(K, Slope(10 * p + 1, p))
        want = Conclusion.NO_WEAK_FILLING if squarefree(10 * p + 1) else Conclusion.INCONCLUSIVE
        if v.conclusion is not want:
            return f"p={p}: {v.conclusion}, expected {want}"
    if 12 in ps and obstruct(K, Slope(121, 12)).conclusion is not Conclusion.INCONCLUSIVE:
        return "p=12 (delta=121) not INCONCLUSIVE"
    return None


def _ten_surgery(r: Ranges) -> str | None:
    v = obstruct(pretzel(3), Slope(10))
    if not (v.max4d < 1 and v.threshold == 1):
        return f"max 4d = {v.max4d}, threshold = {v.threshold}"
    if v.conclusion is not Conclusion.NO_WEAK_FILLING:
        return f"conclusion {v.conclusion}"
    return None


def _cross_formula(r: Ranges) -> str | None:
    for q in range(1, 11):
        K = pretzel(q)
        for n in range(2 * K.genus - 1, 2 * K.genus + 21):
            a = Counter(d for _, d in integral_table(K, n))
            b = Counter(table(K, Slope(n)).values)
            if a != b:
                return f"q={q}, n={n}: integral and rational multisets differ"
    return None


def _lens(r: Ranges) -> str | None:
    for p in range(1, 201):
        got = lens_table(p, 1)
        want = tuple(Fraction((p - 2 * j) ** 2, 4 * p) - Fraction(1, 4) for j in range(p))
        if got != want:
            return f"L({p},1) differs from the closed form"
    for g in range(2, 121):
        for h in range(1, g):
            if Fraction(g, h).denominator != h:
                continue
            if Counter(lens_table(g, h)) != Counter(-d for d in lens_table(g, g - h)):
                return f"L({g},{h}) vs -L({g},{g - h}) multisets differ"
    if lens_table(2, 1) != (Fraction(1, 4), Fraction(-1, 4)):
        return f"L(2,1) = {lens_table(2, 1)}"
    return None


def _v_equals_torsion(r: Ranges) -> str | None:
    for q in range(1, 51):
        K = pretzel(q)
        for s in range(K.genus + 3):
            if V(K, s) != torsion(K, s):
                return f"q={q}, s={s}: V={V(K, s)}, t={torsion(K, s)}"
    U = from_polynomial("unknot", "1")
    if any(V(U, s) != torsion(U, s) for s in range(3)):
        return "unknot"
    return None


def _scan_determinism(r: Ranges) -> str | None:
    lo, hi = r.get("q", (4, 50))[0], r.get("q", (4, 50))[-1]
    one = scan_to_string(ScanConfig("pretzel_integral", lo, hi, jobs=1))
    many = scan_to_string(ScanConfig("pretzel_integral", lo, hi, jobs=8))
    return None if one == many else "jobs=1 and jobs=8 outputs differ"


CHECKS = (
    Check("v-sequence", "V-sequence of P(-2,3,7) is 2,2,1,1,1,0,...", _v_sequence),
    Check("torsion-closed-form", "torsion coefficients match the piecewise closed forms, k=1..100", _torsion_closed_form),
    Check("integral-negativity", "all d of (2q+3)-surgery on P(-2,3,2q+1) are < 0", _integral_negativity),
    Check("integral-verdicts", "NO_WEAK_FILLING for (2q+3)-surgery iff 2q+3 square-free", _integral_verdicts),
    Check("rational-nonpositivity", "all d of (10p+1)/p-surgery on P(-2,3,7) are <= 0", _rational_nonpositivity),
    Check("rational-verdicts", "NO_WEAK_FILLING for (10p+1)/p-surgery iff 10p+1 square-free", _rational_verdicts),
    Check("ten-surgery", "10-surgery on P(-2,3,7): max 4d < 1 and NO_WEAK_FILLING", _ten_surgery),
    Check("cross-formula", "integral and rational surgery formulas agree as multisets", _cross_formula),
    Check("lens", "lens recursion: L(p,1) closed form, orientation antisymmetry, L(2,1)", _lens),
    Check("v-equals-torsion", "V_s = t_s for s >= 0, q=1..50", _v_equals_torsion),
    Check("scan-determinism", "scan output identical for --jobs 1 and --jobs 8", _scan_determinism),
)


def run_checks(only: list[str] | None = None, ranges: Ranges | None = None, out=print) -> bool:
    names = {c.name for c in CHECKS}
    unknown = set(only or ()) - names
    if unknown:
        raise ValueError(f"unknown check(s) {sorted(unknown)}; available: {sorted(names)}")
    ranges = ranges or Ranges()
    ok = True
    for check in CHECKS:
        if only and check.name not in only:
            continue
        t0 = time.perf_counter()
        try:
            failure = check.run(ranges)
        except Exception as exc:  # a crash is a failed check, keep going
            failure = f"{type(exc).__name__}: {exc}"
        dt = time.perf_counter() - t0
        status = "PASS" if failure is None else "FAIL"
        line = f"{status}  {check.name:<24} {check.description} [{dt:.2f}s]"
        if failure is not None:
            line += f"\n      {failure}"
            ok = False
        out(line)
    return ok
