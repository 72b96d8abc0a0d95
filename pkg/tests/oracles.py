"""Independent brute-force oracles used to freeze expected test values.

Everything here deliberately avoids the package's algorithms: membership is
a plain sieve, factorizations come from exhaustive search, and genus counts
come from gap-subset enumeration.
"""

from __future__ import annotations

from itertools import product
from math import gcd


def sieve_members(gens, bound=None):
    """Sorted members of <gens> up to ``bound`` via a naive sieve."""
    if bound is None:
        bound = 2 * max(gens) ** 2
    member = [False] * (bound + 1)
    member[0] = True
    for n in range(1, bound + 1):
        for g in gens:
            if g <= n and member[n - g]:
                member[n] = True
                break
    return [n for n, ok in enumerate(member) if ok]


def sieve_gaps_and_frob(gens):
    """(gaps list, Frobenius) for a gcd-1 generator list, by sieving."""
    if 1 in gens:
        return [], -1
    assert _gcd_all(gens) == 1
    bound = 2 * max(gens) ** 2
    members = set(sieve_members(gens, bound))
    gaps = [n for n in range(1, bound + 1) if n not in members]
    # a run of min(gens) members certifies the sieve saw past the Frobenius number
    assert gaps[-1] + min(gens) <= bound
    return gaps, gaps[-1]


def _gcd_all(gens):
    d = 0
    for g in gens:
        d = gcd(d, g)
    return d


def minimal_generators(gens):
    """Minimal generating set by testing each element against naive sums."""
    bound = 2 * max(gens) ** 2
    members = set(sieve_members(gens, bound))
    out = []
    for g in sorted(set(gens)):
        if not any(a in members and (g - a) in members for a in range(1, g)):
            out.append(g)
    return out


def brute_factorizations(gens, n):
    """All exponent vectors by bounded exhaustive search."""
    ranges = [range(n // g + 1) for g in gens]
    return sorted(
        vec for vec in product(*ranges) if sum(a * g for a, g in zip(vec, gens)) == n
    )


def brute_pseudo_frobenius(gens):
    gaps, frob = sieve_gaps_and_frob(gens)
    member_set = set(sieve_members(gens, 2 * frob + 4 + 2 * max(gens) ** 2))
    small = [s for s in sorted(member_set) if 0 < s <= frob + 1]
    out = []
    for p in gaps:
        # s > frob + 1 gives p + s > frob automatically, so only small s matter
        if all(p + s > frob or (p + s) in member_set for s in small):
            out.append(p)
    return out


def gapset_genus_counts(gmax):
    """Number of numerical semigroups per genus, by gap-subset enumeration.

    Every semigroup of genus g has all gaps inside [1, 2g - 1].  The search
    walks n = 1, 2, ... deciding gap or element; a gap set is valid iff every
    split n = a + b of a gap has a or b a gap.
    """
    counts = [0] * (gmax + 1)

    def valid_gap(n, gapset):
        return all((a in gapset) or ((n - a) in gapset) for a in range(1, n // 2 + 1))

    def rec(n, gapset, g):
        if g <= gmax:
            counts[g] += 1
        if g == gmax:
            return
        limit = 2 * gmax - 1
        # extend: all gaps of any continuation lie in [n, limit]
        for nxt in range(n, limit + 1):
            if valid_gap(nxt, gapset):
                gapset.add(nxt)
                rec(nxt + 1, gapset, g + 1)
                gapset.remove(nxt)

    rec(1, set(), 0)
    return counts
