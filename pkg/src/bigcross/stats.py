"""Median aggregation and the two-sided Wilcoxon signed-rank paired test.

Layout metrics are rarely normally distributed, so comparisons aggregate by
median and test paired differences nonparametrically. Zero differences are
dropped (classic signed-rank practice; n_effective records how many remain)
and ties in |diff| receive average ranks. The test is two-sided.

For n_effective <= 25 the p-value is exact over all 2^n sign assignments
(aggregated by a counting recurrence over rank sums, which gives identical
results to literal enumeration); larger samples use the normal
approximation with tie-corrected variance and continuity correction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

EXACT_LIMIT = 25


class StatsError(ValueError):
    pass


@dataclass(frozen=True)
class WilcoxonResult:
    w_statistic: float
    n_effective: int
    p_value: float
    method: str  # "exact", "normal_approx" or "degenerate"


def median(values) -> float:
    """Middle order statistic; mean of the two middles for even length."""
    vals = sorted(values)
    if not vals:
        raise StatsError("median of an empty sequence is undefined")
    k = len(vals)
    mid = k // 2
    if k % 2:
        return float(vals[mid])
    return (float(vals[mid - 1]) + float(vals[mid])) / 2.0


def _average_ranks(magnitudes) -> list[float]:
    """Ranks of the values (1-based), average rank within tie groups."""
    order = sorted(range(len(magnitudes)), key=lambda i: magnitudes[i])
    ranks = [0.0] * len(magnitudes)
    i = 0
    while i < len(order):
        j = i
        while j + 1 < len(order) and magnitudes[order[j + 1]] == magnitudes[order[i]]:
            j += 1
        avg = (i + j) / 2.0 + 1.0
        for k in range(i, j + 1):
            ranks[order[k]] = avg
        i = j + 1
    return ranks


def _exact_p(doubled_ranks: list[int], doubled_w: int) -> float:
    """P(min(W+, W-) <= w) under uniform signs, by exact counting.

    Works on doubled ranks so ties (.5 ranks) stay integral. counts[s] is
    the number of sign assignments whose positive rank sum is s.
    """
    total = sum(doubled_ranks)
    counts = [0] * (total + 1)
    counts[0] = 1
    for r in doubled_ranks:
        for s in range(total, r - 1, -1):
            if counts[s - r]:
                counts[s] += counts[s - r]
    hits = sum(c for s, c in enumerate(counts) if min(s, total - s) <= doubled_w)
    return hits / float(1 << len(doubled_ranks))


def _normal_p(w: float, ranks: list[float]) -> float:
    n = len(ranks)
    mu = n * (n + 1) / 4.0
    var = n * (n + 1) * (2 * n + 1) / 24.0
    # Tie correction: each group of t equal magnitudes removes (t^3 - t)/48.
    seen: dict[float, int] = {}
    for r in ranks:
        seen[r] = seen.get(r, 0) + 1
    for t in seen.values():
        if t > 1:
            var -= (t ** 3 - t) / 48.0
    sigma = math.sqrt(var)
    z = (w - mu + 0.5) / sigma
    p = 2.0 * 0.5 * math.erfc(-z / math.sqrt(2.0))
    return min(p, 1.0)


def wilcoxon_signed_rank(diffs) -> WilcoxonResult:
    """Two-sided Wilcoxon signed-rank test on paired differences.

    Returns W = min(W+, W-) over the nonzero differences and its two-sided
    p-value. An all-zero sample yields a flagged degenerate result with an
    undefined (NaN) p-value.
    """
    nonzero = [float(d) for d in diffs if d != 0]
    for d in nonzero:
        if not math.isfinite(d):
            raise StatsError("differences must be finite")
    n = len(nonzero)
    if n == 0:
        return WilcoxonResult(0.0, 0, float("nan"), "degenerate")
    ranks = _average_ranks([abs(d) for d in nonzero])
    w_plus = sum(r for d, r in zip(nonzero, ranks) if d > 0)
    w_minus = sum(r for d, r in zip(nonzero, ranks) if d < 0)
    w = min(w_plus, w_minus)
    if n <= EXACT_LIMIT:
        doubled = [int(round(2 * r)) for r in ranks]
        p = _exact_p(doubled, int(round(2 * w)))
        return WilcoxonResult(w, n, p, "exact")
    return WilcoxonResult(w, n, _normal_p(w, ranks), "normal_approx")
