"""Riemann-Roch interval arithmetic for Hilbert-scheme equivalence ranges.

For a polarized surface with irregularity zero and a cycle of degree d,
the n for which the degree-d comparison argument applies form a closed
integer interval for each power e of the bundle: membership of n means
Hilb^n and Hilb^(n+d) are stably birational, provided e is at least some
uncomputable threshold e0. Every interval produced here therefore
carries conditional=True; only the arithmetic is certified, never e0.

All computation is exact. Counts that come out of Riemann-Roch are
halves of intersection numbers, and a half-integer appearing anywhere
means the input data violates adjunction parity (D.D + D.K is even on a
smooth surface), so we raise ParityError rather than round.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple

from .errors import MethodInapplicableError, ParityError, ValidationError
from .surfaces import ConicBundleData, PolarizedSurface

__all__ = [
    "IntInterval",
    "AssumptionReport",
    "CoverageVerdict",
    "CoverageThreshold",
    "exact_half",
    "riemann_roch_h0",
    "adjunction_genus",
    "equivalence_interval",
    "blowup_interval",
    "conic_interval",
    "gap_interval",
    "gap_count_formula",
    "nonempty_witness",
    "infinitely_nonempty",
    "gap_coverage",
    "gap_filled_by_blowup",
    "blowup_fill_start",
    "first_uncovered",
    "coverage_threshold",
    "conic_twist_bound",
    "check_assumptions",
    "merge_intervals",
]


@dataclass(frozen=True)
class IntInterval:
    """Closed integer interval [lo, hi], empty when lo > hi.

    Endpoints are preserved even for empty intervals; emptiness is a
    derived predicate, not a normalization. conditional marks results
    that hold only for bundle powers past the uncomputed threshold e0.
    """

    lo: int
    hi: int
    conditional: bool = True

    @property
    def empty(self) -> bool:
        return self.lo > self.hi

    @property
    def count(self) -> int:
        """Number of integers contained (0 when empty)."""
        return max(0, self.hi - self.lo + 1)

    def __contains__(self, n: int) -> bool:
        return self.lo <= n <= self.hi

    def contains_interval(self, other: "IntInterval") -> bool:
        """True when every integer of other lies in self (vacuous if other is empty)."""
        if other.empty:
            return True
        return self.lo <= other.lo and other.hi <= self.hi

    def __str__(self) -> str:
        if self.empty:
            return f"empty[{self.lo},{self.hi}]"
        return f"[{self.lo},{self.hi}]"


@dataclass(frozen=True)
class AssumptionReport:
    """Which of the five comparison assumptions can be checked numerically.

    a2 is the section-count bound, a5 the genus bound; the remaining
    three (a1, a3, a4) are vanishing/very-ampleness statements that hold
    for e >> 0 but are not decidable from intersection numbers.
    """

    a2_holds: bool
    a5_holds: bool
    a1_a3_a4: str = "asymptotic-only"


class CoverageVerdict(NamedTuple):
    coverable: bool
    reason: str  # "overlap" | "blowup-fill" | "growing-gaps"


class CoverageThreshold(NamedTuple):
    n_star: int
    conditional: bool


def exact_half(value: int, what: str) -> int:
    """value / 2, raising ParityError when value is odd."""
    half, rem = divmod(value, 2)
    if rem:
        raise ParityError(
            f"{what} = {value} is odd; intersection data violates adjunction parity"
        )
    return half


def _check_positive(value: int, name: str) -> None:
    if value < 1:
        raise ValidationError(f"{name} must be >= 1", path=name)


def riemann_roch_h0(polarized: PolarizedSurface, e: int) -> int:
    """Euler-characteristic value of h^0 for the e-th power of the bundle.

    Equals the actual section count once higher cohomology of the power
    vanishes, which holds for e >> 0; the returned number itself is exact.
    """
    _check_positive(e, "e")
    chi = exact_half(
        e * e * polarized.c1_sq - e * polarized.c1_dot_K, "e^2*c1_sq - e*c1_dot_K"
    )
    return chi + 1 + polarized.h2


def adjunction_genus(polarized: PolarizedSurface, e: int) -> int:
    """Arithmetic genus of curves in the linear system of the e-th power."""
    _check_positive(e, "e")
    return exact_half(
        e * e * polarized.c1_sq + e * polarized.c1_dot_K, "e^2*c1_sq + e*c1_dot_K"
    ) + 1


def equivalence_interval(polarized: PolarizedSurface, e: int, d: int) -> IntInterval:
    """The n-range in which Hilb^n ~ Hilb^(n+d) via the e-th power.

    Lower endpoint is the genus bound, upper endpoint the section-count
    bound: [genus(e), h0(e) - 1 - 2d].
    """
    _check_positive(d, "d")
    return IntInterval(
        lo=adjunction_genus(polarized, e),
        hi=riemann_roch_h0(polarized, e) - 1 - 2 * d,
        conditional=True,
    )


def blowup_interval(
    polarized: PolarizedSurface, e: int, d: int, d_prime: int
) -> IntInterval:
    """Same range after blowing up a degree-d' point and twisting by -2E.

    Closed form of equivalence_interval(blow_up(P, e, d'), 1, d); both
    endpoints shift down, which is what lets these fill the gaps left
    between consecutive plain intervals.
    """
    _check_positive(d, "d")
    _check_positive(d_prime, "d_prime")
    lo = adjunction_genus(polarized, e) - d_prime
    hi = riemann_roch_h0(polarized, e) - 1 - 2 * d - 3 * d_prime
    return IntInterval(lo=lo, hi=hi, conditional=True)


def conic_interval(conic: ConicBundleData, e: int, b: int, d: int) -> IntInterval:
    """Range for the fiber-twisted power L^e(b*F) on a conic bundle.

    The twist by b fibers raises the upper endpoint faster than the
    lower one, so consecutive b stitch together once b is large enough.
    """
    _check_positive(e, "e")
    _check_positive(d, "d")
    if b < 0:
        raise ValidationError("b must be >= 0", path="b")
    s = e * e * conic.c1_sq + 4 * e * b * conic.m * conic.delta
    t = e * conic.c1_dot_K - 2 * b * conic.delta
    return IntInterval(
        lo=exact_half(s + t, "twisted c1_sq + c1_dot_K") + 1,
        hi=exact_half(s - t, "twisted c1_sq - c1_dot_K") - 2 * d,
        conditional=True,
    )


def gap_interval(polarized: PolarizedSurface, e: int, d: int) -> IntInterval:
    """Integers strictly between the e-th and (e+1)-st intervals."""
    cur = equivalence_interval(polarized, e, d)
    nxt = equivalence_interval(polarized, e + 1, d)
    return IntInterval(lo=cur.hi + 1, hi=nxt.lo - 1, conditional=True)


def gap_count_formula(polarized: PolarizedSurface, e: int, d: int) -> int:
    """Closed form for the integer count of gap_interval(P, e, d).

    Equals (2e+1)(c1_sq + c1_dot_K)/2 + 2d - h2; the published h2-free
    form is the h2 = 0 case, which is the only one realizable when the
    gap machinery applies (c1.K < 0 with an ample bundle forces h2 = 0).
    Can be negative, meaning the neighbouring intervals overlap.
    """
    _check_positive(e, "e")
    _check_positive(d, "d")
    base = exact_half(
        (2 * e + 1) * (polarized.c1_sq + polarized.c1_dot_K),
        "(2e+1)*(c1_sq + c1_dot_K)",
    )
    return base + 2 * d - polarized.h2


def nonempty_witness(polarized: PolarizedSurface, e: int, d: int) -> int:
    """hi - lo of the e-th interval: nonnegative iff the interval is nonempty.

    Closed form -e*c1_dot_K + h2 - 2d - 1, linear in e, so its sign for
    large e is decided by the sign of c1_dot_K alone.
    """
    _check_positive(e, "e")
    _check_positive(d, "d")
    return -e * polarized.c1_dot_K + polarized.h2 - 2 * d - 1


def infinitely_nonempty(polarized: PolarizedSurface, d: int) -> bool:
    """Whether the intervals are nonempty for infinitely many e.

    True iff c1_dot_K < 0 on realizable data; the degenerate arithmetic
    case c1_dot_K = 0 with h2 >= 2d + 1 also yields constantly nonempty
    intervals and is reported as True (such data does not come from an
    ample bundle on an actual surface).
    """
    _check_positive(d, "d")
    if polarized.c1_dot_K < 0:
        return True
    if polarized.c1_dot_K == 0:
        return polarized.h2 - 2 * d - 1 >= 0
    return False


def gap_coverage(
    polarized: PolarizedSurface, d: int, d_prime: int | None = None
) -> CoverageVerdict:
    """Can all large n be reached, and by which mechanism.

    "overlap": consecutive intervals eventually meet on their own.
    "blowup-fill": gaps have fixed width and blow-up intervals of cycle
    degree d' cover them iff d' >= 2d (verdict False when d' is absent
    or too small).
    "growing-gaps": gaps grow without bound, nothing fills them.
    Requires c1_dot_K < 0; otherwise intervals die out and the question
    is moot.
    """
    _check_positive(d, "d")
    if polarized.c1_dot_K >= 0:
        raise MethodInapplicableError(
            "gap coverage requires c1(L).K < 0; otherwise only finitely many "
            "intervals are nonempty"
        )
    growth = polarized.c1_sq + polarized.c1_dot_K
    if growth < 0:
        return CoverageVerdict(True, "overlap")
    if growth == 0:
        ok = d_prime is not None and d_prime >= 2 * d
        return CoverageVerdict(ok, "blowup-fill")
    return CoverageVerdict(False, "growing-gaps")


def gap_filled_by_blowup(
    polarized: PolarizedSurface, e: int, d: int, d_prime: int
) -> bool:
    """Whether the e-th gap sits inside the (e+1)-st blow-up interval."""
    gap = gap_interval(polarized, e, d)
    filler = blowup_interval(polarized, e + 1, d, d_prime)
    return filler.contains_interval(gap)


def blowup_fill_start(polarized: PolarizedSurface, d: int, d_prime: int) -> int:
    """Least e from which every gap is covered by the next blow-up interval.

    Only meaningful in the fixed-width regime c1_sq + c1_dot_K = 0 (with
    c1_dot_K < 0), where the covering condition is monotone in e; raises
    in the other regimes.
    """
    _check_positive(d, "d")
    _check_positive(d_prime, "d_prime")
    if polarized.c1_dot_K >= 0 or polarized.c1_sq + polarized.c1_dot_K != 0:
        raise MethodInapplicableError(
            "blow-up fill threshold is defined for c1(L).K < 0 with "
            "c1_sq + c1_dot_K = 0 (fixed-width gaps)"
        )
    if 2 * d - polarized.h2 <= 0:
        # gaps are empty from the start, nothing to fill
        return 1
    if d_prime < 2 * d - polarized.h2:
        raise MethodInapplicableError(
            f"cycle degree d'={d_prime} cannot fill gaps of width {2 * d - polarized.h2}"
        )
    # containment needs (e+1)*(-c1_dot_K) >= 2d + 3d' - h2
    need = Fraction(2 * d + 3 * d_prime - polarized.h2, -polarized.c1_dot_K)
    return max(1, math.ceil(need) - 1)


def first_uncovered(
    polarized: PolarizedSurface,
    d: int,
    d_prime: int,
    e_start: int = 1,
    e_stop: int = 200,
) -> tuple[int, int] | None:
    """Search gaps for an integer no interval of either kind reaches.

    Returns (e, n) with n in gap_e but in no equivalence or blow-up
    interval of any power, or None when every inspected gap is covered.
    Used to exhibit concrete failures when d' is too small.
    """
    for e in range(e_start, e_stop + 1):
        gap = gap_interval(polarized, e, d)
        if gap.empty:
            continue
        for n in range(gap.lo, gap.hi + 1):
            if n < 0:
                continue
            if _reached_by_any(polarized, n, d, d_prime):
                continue
            return (e, n)
    return None


def _reached_by_any(
    polarized: PolarizedSurface, n: int, d: int, d_prime: int | None
) -> bool:
    """Is n inside some interval (plain or blow-up) of any power f >= 1?

    Enumeration stops as soon as even the blow-up lower endpoint passes
    n, which needs c1_sq > 0 to terminate.
    """
    if polarized.c1_sq <= 0:
        raise MethodInapplicableError("interval search requires c1_sq > 0")
    f = 1
    while True:
        plain = equivalence_interval(polarized, f, d)
        if n in plain:
            return True
        lo_floor = plain.lo
        if d_prime is not None:
            if n in blowup_interval(polarized, f, d, d_prime):
                return True
            lo_floor -= d_prime
        if lo_floor > n:
            return False
        f += 1


def merge_intervals(intervals: Iterable[IntInterval]) -> list[IntInterval]:
    """Union of integer intervals as a sorted list of disjoint runs.

    Adjacent runs (next.lo == cur.hi + 1) are merged since the union
    contains every integer in between. Empty inputs are dropped; the
    merged runs are conditional when any contributing interval is.
    """
    items = sorted((iv for iv in intervals if not iv.empty), key=lambda iv: (iv.lo, iv.hi))
    merged: list[IntInterval] = []
    for iv in items:
        if merged and iv.lo <= merged[-1].hi + 1:
            last = merged[-1]
            merged[-1] = IntInterval(
                lo=last.lo,
                hi=max(last.hi, iv.hi),
                conditional=last.conditional or iv.conditional,
            )
        else:
            merged.append(iv)
    return merged


def coverage_threshold(
    polarized: PolarizedSurface,
    d: int,
    d_prime: int | None,
    e_min: int,
    horizon: int,
) -> CoverageThreshold:
    """Least n_star with [n_star, horizon] fully covered by the intervals.

    Enumerates every power e >= e_min whose interval can still reach the
    horizon, including blow-up fillers when d' is given, merges, and
    reads off the run containing the horizon. Raises when the horizon
    itself is not covered.
    """
    _check_positive(d, "d")
    _check_positive(e_min, "e_min")
    if horizon < 0:
        raise ValidationError("horizon must be >= 0", path="horizon")
    if polarized.c1_sq <= 0:
        raise MethodInapplicableError(
            "coverage enumeration requires c1_sq > 0 (ample necessary condition)"
        )
    collected: list[IntInterval] = []
    e = e_min
    shift = d_prime if d_prime is not None else 0
    while True:
        plain = equivalence_interval(polarized, e, d)
        if plain.lo - shift > horizon:
            break
        collected.append(plain)
        if d_prime is not None:
            collected.append(blowup_interval(polarized, e, d, d_prime))
        e += 1
    runs = merge_intervals(collected)
    for run in runs:
        if horizon in run:
            return CoverageThreshold(n_star=max(run.lo, 0), conditional=True)
    raise MethodInapplicableError(
        f"intervals with e >= {e_min} do not cover the horizon {horizon}"
    )


def conic_twist_bound(conic: ConicBundleData, e: int, d: int) -> int:
    """Least fiber twist b making consecutive twisted intervals stitch.

    From b on, the (b+1)-st interval starts no later than one past the
    end of the b-th, so the union over b' >= b is one unbroken run.
    """
    _check_positive(e, "e")
    _check_positive(d, "d")
    need = (
        Fraction(d, conic.delta)
        + e * (Fraction(conic.m * (conic.r - 8), 2 * conic.delta) - conic.a + conic.m)
        - Fraction(1, 2)
    )
    return math.ceil(need)


def check_assumptions(
    polarized: PolarizedSurface, e: int, d: int, n: int
) -> AssumptionReport:
    """Check the two numerically decidable comparison assumptions at (e, n).

    a2: enough sections, h0(e) >= n + 1 + 2d. a5: genus small enough,
    genus(e) <= n. Together they are equivalent to n lying in the e-th
    interval once h0 is the Euler characteristic.
    """
    _check_positive(d, "d")
    if n < 0:
        raise ValidationError("n must be >= 0", path="n")
    return AssumptionReport(
        a2_holds=riemann_roch_h0(polarized, e) >= n + 1 + 2 * d,
        a5_holds=adjunction_genus(polarized, e) <= n,
    )
