"""Checks for the published claims, shared by ``seqcx verify`` and the test suite."""
from __future__ import annotations

import math
from dataclasses import dataclass, field

from .bitseq import BitSequence
from .expansion import eval_bivariate, expansion_complexity, series_from, witness_pattern, witness_tm
from .formulas import (
    RUDIN_SHAPIRO_SMALL,
    pattern_bounds,
    pattern_moc_formula,
    pattern_outer_bounds,
    pattern_shift_check,
    pattern_threshold,
    tm_bounds,
    tm_moc_formula,
    tm_shift_check,
)
from .linear import lc_profile
from .moc import moc_profile
from .seqgen import AlongSquares, ThueMorse, generate, pattern_sequence, thue_morse

CLAIMS = (
    "theorem1",
    "theorem2",
    "remark1",
    "remark2",
    "remark3",
    "witness-tm",
    "witness-pattern",
    "shift-tm",
    "shift-pattern",
    "inequalities",
    "squares-probe",
)

EXPLORATORY = frozenset({"squares-probe"})


@dataclass
class ClaimResult:
    claim: str
    passed: bool
    detail: str = ""
    data: dict = field(default_factory=dict)

    @property
    def exploratory(self) -> bool:
        return self.claim in EXPLORATORY


def _first_mismatch(pairs):
    for n, got, want in pairs:
        if got != want:
            return n, got, want
    return None


def check_theorem1(nmax: int = 5000) -> ClaimResult:
    prof = moc_profile(thue_morse(nmax), nmax)
    bad = _first_mismatch((n, prof[n], tm_moc_formula(n).value) for n in range(4, nmax + 1))
    if bad:
        return ClaimResult("theorem1", False, "N=%d: computed %d, formula %d" % bad)
    return ClaimResult("theorem1", True, f"M(T,N) = 2^l + 1 for 4 <= N <= {nmax}")


def check_theorem2(nmax: int = 5000, kmax: int = 4) -> ClaimResult:
    checked = []
    for k in range(2, kmax + 1):
        lo = pattern_threshold(k)
        if lo > nmax:
            continue
        prof = moc_profile(pattern_sequence(k, nmax), nmax)
        bad = _first_mismatch(
            (n, prof[n], pattern_moc_formula(k, n).value) for n in range(lo, nmax + 1)
        )
        if bad:
            return ClaimResult("theorem2", False, "k=%d, " % k + "N=%d: computed %d, formula %d" % bad)
        checked.append(k)
    return ClaimResult("theorem2", bool(checked), f"k in {checked}, N up to {nmax}", {"k": checked})


def check_remark1(nmax: int = 5000) -> ClaimResult:
    prof = moc_profile(thue_morse(max(nmax, 3)), max(nmax, 3))
    if (prof[1], prof[2], prof[3]) != (0, 1, 1):
        return ClaimResult("remark1", False, f"small values {prof.values[:3]}")
    for n in range(4, nmax + 1):
        lo, hi = tm_bounds(n)
        if not lo <= prof[n] <= hi:
            return ClaimResult("remark1", False, f"N={n}: {prof[n]} outside [{lo}, {hi}]")
    return ClaimResult("remark1", True, f"sandwich holds for 4 <= N <= {nmax}")


def check_remark2() -> ClaimResult:
    prof = moc_profile(pattern_sequence(2, 24), 24)
    for lo, hi, value in RUDIN_SHAPIRO_SMALL:
        for n in range(lo, hi + 1):
            formula = pattern_moc_formula(2, n).value
            if formula != value or prof[n] != value:
                return ClaimResult(
                    "remark2", False, f"N={n}: table {value}, formula {formula}, computed {prof[n]}"
                )
    return ClaimResult("remark2", True, "M(P_2, N) = 0/3/6 on 1-3/4-9/10-24")


def check_remark3(nmax: int = 5000, kmax: int = 4) -> ClaimResult:
    for k in range(2, kmax + 1):
        lo_n = pattern_threshold(k)
        if lo_n > nmax:
            continue
        prof = moc_profile(pattern_sequence(k, nmax), nmax)
        for n in range(lo_n, nmax + 1):
            m = prof[n]
            inner_lo, inner_hi = pattern_bounds(k, n)
            outer_lo, outer_hi = pattern_outer_bounds(n)
            if not (outer_lo <= inner_lo <= m <= inner_hi < outer_hi):
                return ClaimResult("remark3", False, f"k={k}, N={n}: M={m}")
    return ClaimResult("remark3", True, f"sandwich holds for k <= {kmax}, N <= {nmax}")


def check_witness_tm(nmax: int = 65536) -> ClaimResult:
    residue = eval_bivariate(witness_tm(), series_from(thue_morse(nmax), nmax))
    return ClaimResult(
        "witness-tm", residue.is_zero(), f"h(x, G(x)) mod x^{nmax} is {'zero' if residue.is_zero() else 'nonzero'}"
    )


def check_witness_pattern(nmax: int = 65536, kmax: int = 5) -> ClaimResult:
    failed = [
        k
        for k in range(1, kmax + 1)
        if not eval_bivariate(witness_pattern(k), series_from(pattern_sequence(k, nmax), nmax)).is_zero()
    ]
    if failed:
        return ClaimResult("witness-pattern", False, f"nonzero residue for k in {failed}")
    return ClaimResult("witness-pattern", True, f"vanishes mod x^{nmax} for k = 1..{kmax}")


def check_shift_tm(ellmax: int = 12) -> ClaimResult:
    failed = [ell for ell in range(1, ellmax + 1) if not tm_shift_check(ell)]
    return ClaimResult("shift-tm", not failed, f"ell = 1..{ellmax}" + (f", failed {failed}" if failed else ""))


def check_shift_pattern(kmax: int = 5, ellmax: int = 10) -> ClaimResult:
    failed = [
        (k, ell) for k in range(2, kmax + 1) for ell in range(ellmax + 1) if not pattern_shift_check(k, ell)
    ]
    return ClaimResult(
        "shift-pattern", not failed, f"k = 2..{kmax}, ell = 0..{ellmax}" + (f", failed {failed}" if failed else "")
    )


def inequality_violations(seq: BitSequence, nmax: int, dmax: int = 64) -> list[str]:
    """Check ``M <= L`` and ``E <= L + 1`` for every prefix length up to ``nmax``.

    ``E(S, N)`` is nondecreasing in ``N`` (an annihilator mod ``x^N`` also
    works mod ``x^(N-1)``), so ``E(S, nmax)`` bounds every shorter prefix and
    ``E`` is computed exactly only where ``L + 1`` falls below that bound.
    """
    moc = moc_profile(seq, nmax)
    lc = lc_profile(seq, nmax)
    out = [f"N={n}: M={moc[n]} > L={lc[n]}" for n in range(1, nmax + 1) if moc[n] > lc[n]]
    top = expansion_complexity(seq, nmax, dmax).value
    for n in range(1, nmax + 1):
        if top is not None and top <= lc[n] + 1:
            continue
        e = expansion_complexity(seq, n, lc[n] + 1).value
        if e is None:
            out.append(f"N={n}: E > L+1 = {lc[n] + 1}")
    return out


def check_inequalities(nmax: int = 5000, kmax: int = 4) -> ClaimResult:
    sequences = {"thue-morse": thue_morse(nmax)}
    for k in range(2, kmax + 1):
        sequences[f"pattern-{k}"] = pattern_sequence(k, nmax)
    for name, seq in sequences.items():
        bad = inequality_violations(seq, nmax)
        if bad:
            return ClaimResult("inequalities", False, f"{name}: {bad[0]}")
    return ClaimResult("inequalities", True, f"M <= L and E <= L+1 on {sorted(sequences)} up to N={nmax}")


def squares_probe(nmax: int = 4096) -> ClaimResult:
    """Does ``M((t_{i^2}), N) >= sqrt(N)/2`` hold for ``2 <= N <= nmax``?  Reported only.

    ``N = 1`` is skipped: the first complexity is 0 for every sequence.
    """
    prof = moc_profile(generate(AlongSquares(ThueMorse()), nmax), nmax)
    probed = range(2, nmax + 1)
    below = [n for n in probed if 4 * prof[n] ** 2 < n]
    ratio = min((prof[n] / math.sqrt(n) for n in probed), default=math.inf)
    detail = (
        f"held for all 2 <= N <= {nmax}" if not below else f"failed at {len(below)} values of N, first N={below[0]}"
    )
    return ClaimResult(
        "squares-probe",
        not below,
        detail + f"; min M/sqrt(N) = {ratio:.3f}",
        {"violations": below[:20], "final": prof[nmax]},
    )


def run_claim(claim: str, nmax: int | None = None, kmax: int | None = None) -> ClaimResult:
    n = {} if nmax is None else {"nmax": nmax}
    k = {} if kmax is None else {"kmax": kmax}
    if claim == "theorem1":
        return check_theorem1(**n)
    if claim == "theorem2":
        return check_theorem2(**n, **k)
    if claim == "remark1":
        return check_remark1(**n)
    if claim == "remark2":
        return check_remark2()
    if claim == "remark3":
        return check_remark3(**n, **k)
    if claim == "witness-tm":
        return check_witness_tm(**n)
    if claim == "witness-pattern":
        return check_witness_pattern(**n, **k)
    if claim == "shift-tm":
        return check_shift_tm()
    if claim == "shift-pattern":
        return check_shift_pattern(**k)
    if claim == "inequalities":
        return check_inequalities(**n, **k)
    if claim == "squares-probe":
        return squares_probe(**n)
    raise KeyError(claim)
