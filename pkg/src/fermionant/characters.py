"""Irreducible characters of the symmetric group.

``character(lam, mu)`` evaluates chi_lam on the conjugacy class of cycle type
mu via the Murnaghan-Nakayama border-strip recursion: remove a border strip
of length equal to the first part of mu from lam in every legal way, weight
each removal by (-1)^(rows spanned - 1), and recurse on the rest of mu.

Strips are manipulated through beta-numbers (first-column hook lengths):
with d rows padded to b_i = lam_i + d - 1 - i, removing a strip of length r
replaces some b_i by b_i - r, legal iff the new value is nonnegative and not
already present; the strip then spans 1 + #{b_j between b_i - r and b_i}
rows.

The recursion is memoized on (remaining shape, remaining cycle type).  The
cache is the functools one: safe under concurrent callers, which at worst
duplicate work.
"""

from __future__ import annotations

from functools import cache

from .partitions import Partition, count_ssyt, partitions_with_depth_at_most


@cache
def _mn(lam: tuple[int, ...], mu: tuple[int, ...]) -> int:
    if not lam:
        return 1
    r = mu[0]
    rest = mu[1:]
    d = len(lam)
    beta = [lam[i] + d - 1 - i for i in range(d)]
    present = set(beta)
    total = 0
    for b in beta:
        nb = b - r
        if nb < 0 or nb in present:
            continue
        crossed = sum(1 for x in beta if nb < x < b)
        new_beta = sorted((x for x in beta if x != b), reverse=True)
        new_beta.append(nb)
        new_beta.sort(reverse=True)
        new_lam = tuple(
            p for j in range(d) if (p := new_beta[j] - (d - 1 - j)) > 0
        )
        term = _mn(new_lam, rest)
        total += -term if crossed % 2 else term
    return total


def character(lam: Partition, mu: Partition) -> int:
    """chi_lam evaluated on the class of cycle type mu; both must partition
    the same n.  chi_[n] is identically 1 and chi_[1^n] is the sign."""
    if lam.size != mu.size:
        raise ValueError(
            f"shape {lam} partitions {lam.size} but cycle type {mu} partitions {mu.size}"
        )
    return _mn(lam.parts, mu.parts)


def schur_weyl_expand(n: int, k: int) -> dict[Partition, int]:
    """Multiplicities in the expansion of the class function k^(number of
    cycles) into irreducible characters: maps lam to the number of
    semistandard tableaux of shape lam with entries in {1..k}, over
    partitions of n with at most k rows.

    For every cycle type mu of n,
    sum over lam of count_ssyt(lam, k) * character(lam, mu) == k ** depth(mu).
    """
    if n < 1:
        raise ValueError("n must be positive")
    if k < 1:
        raise ValueError("k must be positive")
    return {
        lam: count_ssyt(lam, k) for lam in partitions_with_depth_at_most(n, k)
    }
