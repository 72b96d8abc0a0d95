"""Hilbert-series numerator, cyclotomic test, complete-intersection and
gluing recognition.

Complete intersections are recognized two independent ways: by counting
relations (rho = edim - 1) and by the recursive gluing characterization; the
test suite checks that the two always agree.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb, gcd

from .core import NumericalSemigroup, from_generators, naturals
from .errors import InternalConsistencyError, InvalidInput, ResourceLimit
from .factorization import rho
from .polynomials import CyclotomicFactorization, IntegerPolynomial, peel_cyclotomic
from .resolution import graded_betti

__all__ = [
    "semigroup_polynomial",
    "is_cyclotomic",
    "is_complete_intersection",
    "GluingNode",
    "GLUING_LEAF",
    "gluing_decomposition",
    "reconstruct_gluing",
    "CIStructureReport",
    "ci_structure_checks",
    "enumerate_complete_intersections",
]

MAX_GLUING_EDIM = 20


def semigroup_polynomial(S: NumericalSemigroup) -> IntegerPolynomial:
    """Numerator P(z) = 1 + (z - 1) * sum of z^gap of the Hilbert series.

    Monic, constant term 1, degree Frob + 1.
    """
    if S.frobenius < 0:
        return IntegerPolynomial((1,))
    coeffs = [0] * (S.frobenius + 2)
    coeffs[0] = 1
    for x in S.gap_list():
        coeffs[x] -= 1
        coeffs[x + 1] += 1
    return IntegerPolynomial(tuple(coeffs))


def is_cyclotomic(P: IntegerPolynomial) -> CyclotomicFactorization:
    """Whether P is a product of cyclotomic polynomials, with the factor multiset."""
    return peel_cyclotomic(P)


def is_complete_intersection(S: NumericalSemigroup, verify_betti: bool = False) -> bool:
    """True iff the relation count equals edim - 1.

    With ``verify_betti`` the Koszul shape b_i = C(edim-1, i) is also checked
    (slower; mainly for the verification suites).
    """
    ci = rho(S) == S.edim - 1
    if ci and verify_betti:
        e = S.edim
        expected = [comb(e - 1, i) for i in range(e)]
        got = graded_betti(S).totals()
        if got != expected:
            raise InternalConsistencyError(
                f"complete intersection <{S}> has Betti numbers {got}, expected {expected}"
            )
    return ci


@dataclass(frozen=True)
class GluingLeaf:
    """Tree leaf: one copy of the full monoid <1>."""

    def to_json_dict(self):
        return "N"


GLUING_LEAF = GluingLeaf()


@dataclass(frozen=True)
class GluingNode:
    """Binary gluing tree: d1 * S1 + d2 * S2; leaves stand for copies of <1>."""

    d1: int
    left: "GluingNode | GluingLeaf"
    d2: int
    right: "GluingNode | GluingLeaf"

    def to_json_dict(self) -> dict:
        return {
            "left": {"multiplier": self.d1, "tree": self.left.to_json_dict()},
            "right": {"multiplier": self.d2, "tree": self.right.to_json_dict()},
        }


def reconstruct_gluing(tree: GluingNode | GluingLeaf) -> NumericalSemigroup:
    """Rebuild the semigroup encoded by a gluing tree (leaf = the full monoid)."""
    if isinstance(tree, GluingLeaf):
        return naturals()
    a = reconstruct_gluing(tree.left)
    b = reconstruct_gluing(tree.right)
    gens = [tree.d1 * g for g in a.gens] + [tree.d2 * g for g in b.gens]
    return from_generators(gens)


def gluing_decomposition(S: NumericalSemigroup, _memo=None) -> GluingNode | GluingLeaf | None:
    """Gluing tree of S, or None when S is not a complete intersection.

    Searches partitions of the minimal generators into parts A, B with
    d1 = gcd(A), d2 = gcd(B) coprime such that d2 lies in <A/d1> and d1 lies
    in <B/d2>, then recurses on the scaled parts.  Deterministic: the first
    admissible partition in bitmask order is chosen.
    """
    if S.edim > MAX_GLUING_EDIM:
        raise ResourceLimit(f"gluing search limited to edim <= {MAX_GLUING_EDIM}")
    if _memo is None:
        _memo = {}
    if S.gens in _memo:
        return _memo[S.gens]
    result = _gluing_search(S, _memo)
    _memo[S.gens] = result
    return result


def _gluing_search(S, memo):
    gens = S.gens
    e = len(gens)
    if e == 1:
        return GLUING_LEAF  # only the full monoid has one generator
    for pick in range(1, 1 << (e - 1)):
        a = [gens[0]]
        b = []
        for i in range(1, e):
            (b if (pick >> (i - 1)) & 1 else a).append(gens[i])
        d1 = 0
        for g in a:
            d1 = gcd(d1, g)
        d2 = 0
        for g in b:
            d2 = gcd(d2, g)
        if gcd(d1, d2) != 1:
            continue
        s1 = from_generators([g // d1 for g in a])
        if not s1.contains(d2):
            continue
        s2 = from_generators([g // d2 for g in b])
        if not s2.contains(d1):
            continue
        t1 = gluing_decomposition(s1, memo)
        if t1 is None:
            continue
        t2 = gluing_decomposition(s2, memo)
        if t2 is None:
            continue
        return GluingNode(d1, t1, d2, t2)
    return None


@dataclass(frozen=True)
class CIStructureReport:
    gens: tuple[int, ...]
    complete_intersection: bool
    mult_bound_ok: bool | None  # mult >= 2^(e-1), only meaningful when CI
    symmetric_pair_ok: bool
    pair: tuple[int, int]

    def to_json_dict(self) -> dict:
        return {
            "gens": list(self.gens),
            "ci": self.complete_intersection,
            "mult_bound_ok": self.mult_bound_ok,
            "symmetric_pair_ok": self.symmetric_pair_ok,
            "edim": self.pair[0],
            "mult": self.pair[1],
        }


def _symmetric_pair_exists(e: int, m: int) -> bool:
    """Whether a symmetric semigroup with the given edim and mult exists."""
    return 2 <= e <= m - 1 or (e, m) in ((1, 1), (2, 2))


def ci_structure_checks(S: NumericalSemigroup) -> CIStructureReport:
    """Structural consequences of the complete-intersection property.

    When S is CI, mult >= 2^(edim-1) must hold; when S is symmetric, its
    (edim, mult) pair must be realizable by a symmetric semigroup.
    """
    from .core import is_symmetric

    ci = is_complete_intersection(S)
    mult_ok = S.multiplicity >= 2 ** (S.edim - 1) if ci else None
    sym_ok = _symmetric_pair_exists(S.edim, S.multiplicity) if is_symmetric(S) else True
    return CIStructureReport(S.gens, ci, mult_ok, sym_ok, (S.edim, S.multiplicity))


def enumerate_complete_intersections(
    frob_max: int, edim_max: int | None = None
) -> list[NumericalSemigroup]:
    """Every complete intersection with Frobenius number <= frob_max.

    Worklist closure under gluing: S = d1*S1 + d2*S2 with d1 in S2, d2 in S1,
    neither a minimal generator of its side, gcd(d1, d2) = 1.  The Frobenius
    number of a gluing is d1*F1 + d2*F2 + d1*d2, which strictly exceeds both
    inputs' Frobenius numbers, so saturation terminates and is exhaustive.
    Sorted by (genus, generators) for determinism.
    """
    if frob_max < -1:
        raise InvalidInput(f"frob_max must be >= -1: {frob_max}")
    found: dict[tuple[int, ...], NumericalSemigroup] = {}
    nat = naturals()
    found[nat.gens] = nat
    frontier = [nat]
    while frontier:
        fresh: list[NumericalSemigroup] = []
        pool = list(found.values())
        for s1 in frontier:
            for s2 in pool:
                for t in _gluings_within(s1, s2, frob_max, edim_max):
                    if t.gens not in found:
                        found[t.gens] = t
                        fresh.append(t)
                if s2 is not s1:
                    for t in _gluings_within(s2, s1, frob_max, edim_max):
                        if t.gens not in found:
                            found[t.gens] = t
                            fresh.append(t)
        frontier = fresh
    return sorted(found.values(), key=lambda s: (s.genus, s.gens))


def _gluings_within(s1, s2, frob_max, edim_max):
    """All admissible gluings d1*s1 + d2*s2 with Frobenius <= frob_max.

    Frob(d1*S1 + d2*S2) = d1*F1 + d2*F2 + d1*d2 >= (d1-1)(d2-1) - 1, which
    bounds the multiplier search space.
    """
    if edim_max is not None and s1.edim + s2.edim > edim_max:
        return
    f1, f2 = s1.frobenius, s2.frobenius
    mg1, mg2 = set(s1.gens), set(s2.gens)
    for d1 in range(2, frob_max + 3):
        if not (s2.contains(d1) and d1 not in mg2):
            continue
        for d2 in range(2, (frob_max + 1) // (d1 - 1) + 2):
            frob = d1 * f1 + d2 * f2 + d1 * d2
            if frob > frob_max:
                break  # increasing in d2 since f2 + d1 >= 1
            if gcd(d1, d2) != 1 or not s1.contains(d2) or d2 in mg1:
                continue
            gens = sorted([d1 * g for g in s1.gens] + [d2 * g for g in s2.gens])
            t = from_generators(gens)
            if t.edim != s1.edim + s2.edim or t.frobenius != frob:
                raise InternalConsistencyError(
                    f"gluing {d1}*<{s1}> + {d2}*<{s2}> is not admissible"
                )
            yield t
