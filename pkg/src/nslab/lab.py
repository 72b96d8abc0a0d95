"""Enumeration engines and the harness that verifies classical theorems and
probes open problems, producing replayable reports and witnesses.

The genus tree enumerates every numerical semigroup exactly once: the root is
the full monoid, and the children of S are S minus one minimal generator
exceeding Frob(S).  Fixed-embedding-dimension families are enumerated by a
generator-tuple search with sumset-mask pruning.  Theorem suites treat any
failure as an implementation bug; conjecture checks treat a failure as a
research witness and never drop it.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from math import comb, gcd

from .classify import is_complete_intersection, is_cyclotomic, semigroup_polynomial
from .core import (
    NumericalSemigroup,
    from_generators,
    invariants,
    is_almost_symmetric,
    is_nearly_gorenstein,
    is_symmetric,
    naturals,
    pseudo_frobenius,
    semigroup_type,
)
from .errors import InternalConsistencyError, InvalidInput, ResourceLimit
from .factorization import betti_elements, factorizations, minimal_presentation, rho
from .resolution import bound_C, bound_D, graded_betti
from .tangent_cone import is_HF_nondecreasing

__all__ = [
    "SemigroupTreeNode",
    "CheckReport",
    "RFMatrix",
    "iter_genus_tree",
    "enumerate_by_genus",
    "genus_counts",
    "enumerate_filtered",
    "enumerate_max_edim",
    "random_semigroups",
    "check_wilf",
    "check_weak_wilf",
    "check_width_rho",
    "check_cyclo_ci",
    "check_rossi",
    "check_erv",
    "rf_matrices",
    "rf_relations",
    "rf_relation_check",
    "CHECKS",
    "run_checks",
    "SuiteResult",
    "SUITES",
    "verify_theorem_suite",
    "search_supremum",
    "boundedness_probe",
]


# -- check reports -------------------------------------------------------------


@dataclass(frozen=True)
class CheckReport:
    """Outcome of one check on one semigroup; the gens make it replayable."""

    check: str
    gens: tuple[int, ...]
    verdict: str  # "pass" | "fail" | "inconclusive"
    data: dict = field(default_factory=dict)

    def to_json_dict(self) -> dict:
        return {
            "check": self.check,
            "gens": list(self.gens),
            "verdict": self.verdict,
            "data": self.data,
        }


# -- genus tree ----------------------------------------------------------------


@dataclass(frozen=True)
class SemigroupTreeNode:
    semigroup: NumericalSemigroup
    effective_generators: tuple[int, ...]  # minimal generators above Frob


def tree_node(S: NumericalSemigroup) -> SemigroupTreeNode:
    return SemigroupTreeNode(S, tuple(g for g in S.gens if g > S.frobenius))


def remove_generator(S: NumericalSemigroup, g: int) -> NumericalSemigroup:
    """Child of S in the genus tree: drop one minimal generator above Frob.

    The removed g becomes the new Frobenius number; the minimal generators
    are recomputed from scratch on the window (0, g + new multiplicity],
    which provably contains them all.
    """
    mask = S.member_mask(3 * g + 3) & ~(1 << g)
    pos = mask & ~1
    m2 = (pos & -pos).bit_length() - 1
    lim = g + m2
    full = (1 << (lim + 1)) - 1
    sums = 0
    rest = pos & ((1 << (lim - m2 + 1)) - 1)
    while rest:
        low = rest & -rest
        sums |= pos << (low.bit_length() - 1)
        rest ^= low
    sums &= full
    gens = []
    scan = pos & full
    while scan:
        low = scan & -scan
        x = low.bit_length() - 1
        scan ^= low
        if not (sums >> x) & 1:
            gens.append(x)
    return NumericalSemigroup(tuple(gens), g, S.gaps | (1 << g))


def iter_genus_tree(gmax: int):
    """Every semigroup of genus <= gmax, exactly once, in preorder."""
    if gmax < 0:
        raise InvalidInput(f"gmax must be >= 0: {gmax}")
    stack = [naturals()]
    while stack:
        S = stack.pop()
        yield S
        if S.genus < gmax:
            kids = [remove_generator(S, g) for g in S.gens if g > S.frobenius]
            stack.extend(reversed(kids))


def enumerate_by_genus(gmax: int, visitor=None):
    """Stream the genus tree; apply ``visitor`` to each semigroup if given."""
    for S in iter_genus_tree(gmax):
        if visitor is not None:
            visitor(S)
        yield S


def _subtree_counts(args):
    gens, frobenius, gmax = args
    S = from_generators(gens)
    counts = [0] * (gmax + 1)
    stack = [S]
    while stack:
        T = stack.pop()
        counts[T.genus] += 1
        if T.genus < gmax:
            stack.extend(remove_generator(T, g) for g in T.gens if g > T.frobenius)
    return counts


def genus_counts(gmax: int, jobs: int = 1) -> list[int]:
    """Number of semigroups of each genus 0..gmax."""
    if jobs <= 1 or gmax <= 8:
        counts = [0] * (gmax + 1)
        for S in iter_genus_tree(gmax):
            counts[S.genus] += 1
        return counts
    split = min(8, gmax)
    counts = [0] * (gmax + 1)
    roots = []
    for S in iter_genus_tree(split):
        if S.genus < split:
            counts[S.genus] += 1
        else:
            roots.append((S.gens, S.frobenius, gmax))
    for sub in _pool_map(_subtree_counts, roots, jobs):
        for g, c in enumerate(sub):
            counts[g] += c
    return counts


def _pool_map(fn, items, jobs):
    import multiprocessing as mp

    ctx = mp.get_context("fork")
    with ctx.Pool(jobs) as pool:
        return pool.map(fn, items, chunksize=1)


def random_semigroups(count: int, genus_max: int, seed: int = 0) -> list[NumericalSemigroup]:
    """Deterministic random semigroups of genus at most genus_max.

    Two sampling modes alternate: random walks down the genus tree (which
    favor long low-multiplicity chains) and closures of random generator
    sets (which produce generic multiplicities and embedding dimensions).
    """
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        if len(out) % 2 == 0:
            target = rng.randint(0, genus_max)
            S = naturals()
            ok = True
            while S.genus < target:
                effective = [g for g in S.gens if g > S.frobenius]
                if not effective:
                    ok = False
                    break
                S = remove_generator(S, rng.choice(effective))
            if ok:
                out.append(S)
        else:
            m = rng.randint(2, max(2, min(18, genus_max + 1)))
            want = rng.randint(2, max(2, min(m, 10)))
            gens = {m}
            for _ in range(4 * want):
                if len(gens) >= want:
                    break
                gens.add(rng.randint(m + 1, 3 * m))
            from math import gcd as _gcd

            d = 0
            for g in gens:
                d = _gcd(d, g)
            if d != 1:
                gens.add(m + 1)
            S = from_generators(gens)
            if S.genus <= genus_max:
                out.append(S)
    return out


# -- filtered enumeration ------------------------------------------------------


def _grow_mask(mask, g, full):
    while True:
        t = (mask | (mask << g)) & full
        if t == mask:
            return mask
        mask = t


def enumerate_filtered(
    edim: int | None = None,
    mult: int | None = None,
    width: int | None = None,
    frob_max: int | None = None,
    gen_max: int | None = None,
    genus_max: int | None = None,
):
    """Stream every semigroup matching the filters inside the stated bounds.

    At least one of frob_max, gen_max, genus_max must be given (finiteness).
    Reports based on this stream are bounded searches, not proofs.
    """
    if frob_max is None and gen_max is None and genus_max is None:
        raise InvalidInput("need frob_max, gen_max or genus_max to bound the search")

    def keep(S):
        if edim is not None and S.edim != edim:
            return False
        if mult is not None and S.multiplicity != mult:
            return False
        if width is not None and S.width != width:
            return False
        if frob_max is not None and S.frobenius > frob_max:
            return False
        if gen_max is not None and S.gens[-1] > gen_max:
            return False
        return True

    if genus_max is not None:
        for S in iter_genus_tree(genus_max):
            if keep(S):
                yield S
        return
    if edim is not None:
        yield from _iter_edim_family(edim, mult, width, frob_max, gen_max, keep)
        return
    if width is not None:
        yield from _iter_width_family(width, frob_max, gen_max, keep)
        return
    raise InvalidInput("unbounded request: give edim, width or genus_max")


def _iter_edim_family(edim, mult, width, frob_max, gen_max, keep):
    if edim < 1:
        raise InvalidInput(f"edim must be >= 1: {edim}")
    if edim == 1:
        S = naturals()
        if keep(S):
            yield S
        return
    if mult is not None:
        mults = [mult]
    else:
        hi = gen_max if gen_max is not None else frob_max + 1
        mults = range(2, hi + 1)
    for m in mults:
        if edim > m:
            continue
        hi = gen_max if gen_max is not None else frob_max + m
        if width is not None:
            hi = min(hi, m + width)
        if hi <= m:
            continue
        certify = frob_max + m + 2 if frob_max is not None else hi + 1
        bound = max(hi, certify)
        full = (1 << (bound + 1)) - 1
        base = _grow_mask((1 << m) | 1, m, full)
        stack = [((m,), base, m)]
        while stack:
            gens, mask, d = stack.pop()
            if len(gens) == edim:
                if d != 1:
                    continue
                if frob_max is not None:
                    inv = ~mask & full
                    frob = inv.bit_length() - 1
                    if frob > frob_max:
                        continue
                    gaps = inv & ~1
                    S = NumericalSemigroup(gens, frob, gaps)
                else:
                    S = from_generators(gens)
                if keep(S):
                    yield S
                continue
            lo = gens[-1] + 1
            room = edim - len(gens) - 1  # generators still needed after this one
            for g in range(lo, hi - room + 1):
                if (mask >> g) & 1:
                    continue  # not a minimal generator
                stack.append((gens + (g,), _grow_mask(mask, g, full), gcd(d, g)))


def _iter_width_family(width, frob_max, gen_max, keep):
    if width == 0:
        S = naturals()
        if keep(S):
            yield S
        return
    if gen_max is not None:
        m_hi = gen_max - width
    else:
        m_hi = frob_max + 1
    seen = set()
    for m in range(2, m_hi + 1):
        interior = list(range(m + 1, m + width))
        for pick in range(1 << len(interior)):
            gens = [m] + [g for k, g in enumerate(interior) if (pick >> k) & 1] + [m + width]
            d = 0
            for g in gens:
                d = gcd(d, g)
            if d != 1:
                continue
            S = from_generators(gens)
            if S.width != width or S.gens in seen:
                continue
            seen.add(S.gens)
            if keep(S):
                yield S


def enumerate_max_edim(mult: int, frob_max: int):
    """All maximal-embedding-dimension semigroups with the given multiplicity
    and Frobenius number at most frob_max.

    Works over Apery tuples: (w_1..w_{m-1}) with w_r = r mod m is a valid
    Apery set iff w_i + w_j >= w_{(i+j) mod m}, and gives maximal embedding
    dimension iff all those inequalities are strict (no Apery element is a
    sum of two others, so every one is a minimal generator).
    """
    import itertools

    m = mult
    if m < 2:
        if frob_max >= -1:
            yield naturals()
        return
    choices = [range(r + m, frob_max + m + 1, m) for r in range(1, m)]
    for combo in itertools.product(*choices):
        w = (0,) + combo
        ok = True
        for i in range(1, m):
            wi = w[i]
            for j in range(i, m):
                k = (i + j) % m
                if k and wi + w[j] <= w[k]:
                    ok = False
                    break
            if not ok:
                break
        if not ok:
            continue
        frob = max(combo) - m
        gaps = 0
        for x in range(1, frob + 1):
            if x < w[x % m]:
                gaps |= 1 << x
        yield NumericalSemigroup(tuple(sorted((m,) + combo)), frob, gaps)


# -- individual checks ---------------------------------------------------------


def check_wilf(S: NumericalSemigroup) -> CheckReport:
    """Wilf inequality Frob < edim * eta; fast path when Frob < 3 * mult."""
    if S.frobenius < 3 * S.multiplicity:
        return CheckReport("wilf", S.gens, "pass", {"fast_path": True})
    ok = S.frobenius < S.edim * S.eta
    data = {"frobenius": S.frobenius, "edim": S.edim, "eta": S.eta, "fast_path": False}
    return CheckReport("wilf", S.gens, "pass" if ok else "fail", data)


def check_weak_wilf(S: NumericalSemigroup) -> CheckReport:
    """Every first-syzygy degree is at most edim*(eta - 1) + sum(gens) + 1."""
    if S.edim <= 1:
        return CheckReport("weakwilf", S.gens, "pass", {"vacuous": True})
    degrees = sorted(betti_elements(S))
    bound = S.edim * (S.eta - 1) + sum(S.gens) + 1
    worst = max(degrees) if degrees else 0
    ok = worst <= bound
    return CheckReport(
        "weakwilf", S.gens, "pass" if ok else "fail", {"max_degree": worst, "bound": bound}
    )


def check_width_rho(S: NumericalSemigroup) -> CheckReport:
    """Conjectural bound rho <= C(width + 1, 2); a failure is a witness."""
    r = rho(S)
    bound = comb(S.width + 1, 2)
    ok = r <= bound
    return CheckReport(
        "widthr", S.gens, "pass" if ok else "fail", {"rho": r, "bound": bound}
    )


def check_cyclo_ci(S: NumericalSemigroup) -> CheckReport:
    """Cyclotomic <=> complete intersection probe.

    CI implies cyclotomic is a theorem, so that direction failing raises an
    internal error.  A cyclotomic non-CI semigroup would be a counterexample
    witness and is reported as a failure, never discarded.
    """
    ci = is_complete_intersection(S)
    cyc = is_cyclotomic(semigroup_polynomial(S))
    if ci and not cyc.is_cyclotomic:
        raise InternalConsistencyError(f"complete intersection <{S}> is not cyclotomic")
    data = {"ci": ci, "cyclotomic": cyc.is_cyclotomic}
    if cyc.is_cyclotomic:
        data["factors"] = list(cyc.factors)
    verdict = "pass" if (ci == cyc.is_cyclotomic) else "fail"
    return CheckReport("cyclo-ci", S.gens, verdict, data)


def check_rossi(S: NumericalSemigroup) -> CheckReport | None:
    """Non-decreasing Hilbert function probe; reported for complete intersections."""
    if not is_complete_intersection(S):
        return None
    hc = is_HF_nondecreasing(S)
    data = {"values": list(hc.values[: min(len(hc.values), 24)]), "violation_at": hc.violation_at}
    return CheckReport("rossi", S.gens, "pass" if hc.nondecreasing else "fail", data)


def check_erv(S: NumericalSemigroup) -> CheckReport:
    """rho <= C and type <= D at the semigroup's parameters (a theorem)."""
    if S.edim < 4:
        return CheckReport("erv", S.gens, "pass", {"vacuous": True})
    e, m = S.edim - 1, S.multiplicity
    r = rho(S)
    t = semigroup_type(S)
    cb, db = bound_C(e, m), bound_D(e, m)
    ok = r <= cb and t <= db
    return CheckReport(
        "erv",
        S.gens,
        "pass" if ok else "fail",
        {"rho": r, "type": t, "bound_C": cb, "bound_D": db},
    )


# -- RF matrices and relations -------------------------------------------------


@dataclass(frozen=True)
class RFMatrix:
    """Row-factorization matrix: row i factors p + g_i with -1 in position i."""

    pf: int
    rows: tuple[tuple[int, ...], ...]


def _rf_rows(S: NumericalSemigroup, p: int) -> list[list[tuple[int, ...]]]:
    """For each generator index i, the candidate rows for p (diagonal -1)."""
    rows = []
    for i, g in enumerate(S.gens):
        cand = []
        for a in factorizations(S, p + g):
            if a[i] != 0:
                # would imply p itself is an element
                raise InternalConsistencyError(f"factorization of {p}+{g} uses g_{i}")
            row = list(a)
            row[i] = -1
            cand.append(tuple(row))
        rows.append(cand)
    return rows


def rf_matrices(S: NumericalSemigroup, p: int, cap: int = 10**5) -> list[RFMatrix]:
    """All RF matrices of the pseudo-Frobenius number p (Cartesian product of rows)."""
    import itertools

    if p not in set(pseudo_frobenius(S)):
        raise InvalidInput(f"{p} is not a pseudo-Frobenius number of <{S}>")
    rows = _rf_rows(S, p)
    count = 1
    for r in rows:
        count *= len(r)
        if count > cap:
            raise ResourceLimit(f"{count}+ RF matrices for p={p} exceeds cap {cap}")
    return [RFMatrix(p, combo) for combo in itertools.product(*rows)]


def rf_relations(S: NumericalSemigroup, cap: int = 10**6) -> dict[int, set]:
    """All RF-relations, grouped by degree.

    A relation comes from the difference of two rows (for distinct generator
    indices) of some RF matrix; only the two rows matter, so the pairs are
    enumerated directly instead of expanding the Cartesian product.
    """
    out: dict[int, set] = {}
    gens = S.gens
    pairs = 0
    for p in pseudo_frobenius(S):
        rows = _rf_rows(S, p)
        for i in range(len(gens)):
            for j in range(i + 1, len(gens)):
                pairs += len(rows[i]) * len(rows[j])
                if pairs > cap:
                    raise ResourceLimit(f"more than {cap} RF row pairs")
                for a in rows[i]:
                    for b in rows[j]:
                        plus = tuple(max(x - y, 0) for x, y in zip(a, b))
                        minus = tuple(max(y - x, 0) for x, y in zip(a, b))
                        deg = sum(x * g for x, g in zip(plus, gens))
                        rel = (plus, minus) if plus <= minus else (minus, plus)
                        out.setdefault(deg, set()).add(rel)
    return out


def rf_relation_check(S: NumericalSemigroup, cap: int = 10**6) -> CheckReport:
    """Can the minimal relations be realized by RF-relations?

    Mode A (existential): at every Betti degree, the RF-relations of that
    degree must connect the factorization graph; then some minimal
    presentation consists of RF-relations.  Mode B (canonical): every
    relation of the canonical presentation is itself an RF-relation.
    A mode-A failure is a research witness.
    """
    if S.edim <= 1:
        return CheckReport("rf", S.gens, "pass", {"vacuous": True})
    rels = rf_relations(S, cap=cap)
    mode_a = True
    bad_degree = None
    for n, count in sorted(betti_elements(S).items()):
        facs = factorizations(S, n)
        index = {a: k for k, a in enumerate(facs)}
        labels = _component_labels(facs, S.edim)
        roots = sorted(set(labels))
        if len(roots) != count:
            raise InternalConsistencyError(f"component count mismatch at degree {n}")
        pos = {r: i for i, r in enumerate(roots)}
        parent = list(range(count))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for plus, minus in rels.get(n, ()):
            ka, kb = index.get(plus), index.get(minus)
            if ka is None or kb is None:
                raise InternalConsistencyError(f"RF-relation at {n} is not a factorization pair")
            ra, rb = find(pos[labels[ka]]), find(pos[labels[kb]])
            if ra != rb:
                parent[rb] = ra
        if len({find(c) for c in range(count)}) > 1:
            mode_a = False
            bad_degree = n
            break
    rel_set = {r for rs in rels.values() for r in rs}
    mode_b = True
    for rel in minimal_presentation(S).relations:
        pair = (rel.left, rel.right) if rel.left <= rel.right else (rel.right, rel.left)
        if pair not in rel_set:
            mode_b = False
            break
    data = {"mode_a": mode_a, "mode_b": mode_b}
    if bad_degree is not None:
        data["disconnected_degree"] = bad_degree
    return CheckReport("rf", S.gens, "pass" if mode_a else "fail", data)


def _component_labels(facs, e):
    """Label of the shared-support component of each factorization."""
    k = len(facs)
    parent = list(range(k))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i in range(e):
        prev = -1
        for idx in range(k):
            if facs[idx][i]:
                if prev >= 0:
                    ra, rb = find(prev), find(idx)
                    if ra != rb:
                        parent[rb] = ra
                prev = idx
    return [find(i) for i in range(k)]


# -- streaming checks over the tree ---------------------------------------------


CHECKS = {
    "wilf": check_wilf,
    "weakwilf": check_weak_wilf,
    "widthr": check_width_rho,
    "cyclo-ci": check_cyclo_ci,
    "rossi": check_rossi,
    "erv": check_erv,
    "rf": rf_relation_check,
}


def _subtree_checks(args):
    gens, gmax, ids, fails_only = args
    S = from_generators(gens)
    out = []
    stack = [S]
    while stack:
        T = stack.pop()
        for cid in ids:
            rep = CHECKS[cid](T)
            if rep is not None and (not fails_only or rep.verdict != "pass"):
                out.append(rep)
        if T.genus < gmax:
            stack.extend(remove_generator(T, g) for g in T.gens if g > T.frobenius)
    return out


def run_checks(
    check_ids, genus_max: int, jobs: int = 1, fails_only: bool = False
) -> list[CheckReport]:
    """Run the named checks over the full tree up to genus_max.

    Output is sorted by (genus, gens, check), so serial and parallel runs
    produce identical report streams.
    """
    for cid in check_ids:
        if cid not in CHECKS:
            raise InvalidInput(f"unknown check {cid!r}; known: {sorted(CHECKS)}")
    reports: list[CheckReport] = []
    if jobs <= 1 or genus_max <= 8:
        for S in iter_genus_tree(genus_max):
            for cid in check_ids:
                rep = CHECKS[cid](S)
                if rep is not None and (not fails_only or rep.verdict != "pass"):
                    reports.append(rep)
    else:
        split = min(8, genus_max)
        work = []
        for S in iter_genus_tree(split):
            if S.genus < split:
                for cid in check_ids:
                    rep = CHECKS[cid](S)
                    if rep is not None and (not fails_only or rep.verdict != "pass"):
                        reports.append(rep)
            else:
                work.append((S.gens, genus_max, tuple(check_ids), fails_only))
        for chunk in _pool_map(_subtree_checks, work, jobs):
            reports.extend(chunk)
    reports.sort(key=lambda r: (r.gens, r.check))
    return reports


# -- theorem suites --------------------------------------------------------------


@dataclass
class SuiteResult:
    suite: str
    checked: int
    failures: list[CheckReport]
    data: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json_dict(self) -> dict:
        return {
            "suite": self.suite,
            "checked": self.checked,
            "failures": [f.to_json_dict() for f in self.failures],
            "data": self.data,
        }


def _suite_herzog(frob_max: int = 60, **_):
    """Three-generator Betti numbers: (1,2,1) if symmetric else (1,3,2),
    agreed between the homology pipeline and the presentation pipeline."""
    checked = 0
    failures = []
    for S in enumerate_filtered(edim=3, frob_max=frob_max):
        checked += 1
        expected = [1, 2, 1] if is_symmetric(S) else [1, 3, 2]
        totals = graded_betti(S).totals()
        r = rho(S)
        if totals != expected or r != expected[1]:
            failures.append(
                CheckReport(
                    "herzog",
                    S.gens,
                    "fail",
                    {"totals": totals, "rho": r, "expected": expected},
                )
            )
    return SuiteResult("herzog", checked, failures)


def _suite_bresinsky4(frob_max: int = 80, **_):
    """Symmetric with four generators: the relation count is 3 or 5."""
    checked = 0
    failures = []
    for S in enumerate_filtered(edim=4, frob_max=frob_max):
        if not is_symmetric(S):
            continue
        checked += 1
        r = rho(S)
        if r not in (3, 5):
            failures.append(CheckReport("bresinsky4", S.gens, "fail", {"rho": r}))
    return SuiteResult("bresinsky4", checked, failures)


def _suite_bresinsky5(gen_max: int = 40, mult_max: int | None = None, **_):
    """Symmetric, five generators, with g_i + g_j = g_h + g_k: rho <= 13."""
    checked = 0
    best = 0
    best_gens = None
    failures = []
    for S in iter_symmetric_pattern_edim5(gen_max, mult_max):
        checked += 1
        r = rho(S)
        if r > best:
            best, best_gens = r, S.gens
        if r > 13:
            failures.append(CheckReport("bresinsky5", S.gens, "fail", {"rho": r}))
    data = {"max_rho": best, "argmax": list(best_gens) if best_gens else None}
    return SuiteResult("bresinsky5", checked, failures, data)


def _suite_etohw(frob_max: int = 80, **_):
    """Almost symmetric with four generators: rho <= 7."""
    checked = 0
    failures = []
    for S in enumerate_filtered(edim=4, frob_max=frob_max):
        if not is_almost_symmetric(S):
            continue
        checked += 1
        r = rho(S)
        if r > 7:
            failures.append(CheckReport("etohw", S.gens, "fail", {"rho": r}))
    return SuiteResult("etohw", checked, failures)


def _suite_moscariello4(frob_max: int = 80, **_):
    """Almost symmetric with four generators: type <= 3 (and 3 is attained)."""
    checked = 0
    best = 0
    failures = []
    for S in enumerate_filtered(edim=4, frob_max=frob_max):
        if not is_almost_symmetric(S):
            continue
        checked += 1
        t = semigroup_type(S)
        best = max(best, t)
        if t > 3:
            failures.append(CheckReport("moscariello4", S.gens, "fail", {"type": t}))
    return SuiteResult("moscariello4", checked, failures, {"max_type": best})


def _suite_as5type(frob_max: int = 28, **_):
    """Almost symmetric with five generators: type <= 473."""
    checked = 0
    best = 0
    failures = []
    for S in enumerate_filtered(edim=5, frob_max=frob_max):
        if not is_almost_symmetric(S):
            continue
        checked += 1
        t = semigroup_type(S)
        best = max(best, t)
        if t > 473:
            failures.append(CheckReport("as5type", S.gens, "fail", {"type": t}))
    return SuiteResult("as5type", checked, failures, {"max_type": best})


def _suite_ng4(frob_max: int = 50, **_):
    """Nearly Gorenstein with four generators: type <= 3."""
    checked = 0
    failures = []
    for S in enumerate_filtered(edim=4, frob_max=frob_max):
        if not is_nearly_gorenstein(S):
            continue
        checked += 1
        t = semigroup_type(S)
        if t > 3:
            failures.append(CheckReport("ng4", S.gens, "fail", {"type": t}))
    return SuiteResult("ng4", checked, failures)


def _suite_bresinsky88(frob_max: int = 50, **_):
    """Four generators: rho <= 4 + 9 * type."""
    checked = 0
    failures = []
    for S in enumerate_filtered(edim=4, frob_max=frob_max):
        checked += 1
        r = rho(S)
        t = semigroup_type(S)
        if r > 4 + 9 * t:
            failures.append(CheckReport("bresinsky88", S.gens, "fail", {"rho": r, "type": t}))
    return SuiteResult("bresinsky88", checked, failures)


# sup of rho at (paper-e, delta): e+1 generators, multiplicity e + delta
def _rem_expected(e: int, delta: int):
    base = comb(e + 1, 2)
    if delta <= 3:
        return base, True
    if delta in (4, 5):
        return base + 1, True
    if delta == 6:
        return base + 2, True
    if delta == 7:
        if e >= 9:
            return base + 4, True
        return base + 4, False  # strict upper bound for e = 3, 4, 5
    return None, False


def _suite_rem_table(e_values=(3, 4), deltas=(1, 2, 3, 4, 5, 6, 7), span: int = 5, **_):
    """Tabulated sup values for the relation count at small multiplicity excess.

    Bounded search: within the window no semigroup may exceed the tabulated
    value (failure = bug); attainment is recorded as a lower-bound witness.
    """
    checked = 0
    failures = []
    observed = {}
    for e in e_values:
        for delta in deltas:
            expected, attainable = _rem_expected(e, delta)
            if expected is None:
                continue
            m = e + delta
            best = 0
            gen_max = span * m
            for S in enumerate_filtered(edim=e + 1, mult=m, gen_max=gen_max):
                checked += 1
                r = rho(S)
                best = max(best, r)
                limit = expected if attainable else expected - 1
                if r > limit:
                    failures.append(
                        CheckReport(
                            "rem_table",
                            S.gens,
                            "fail",
                            {"rho": r, "e": e, "delta": delta, "limit": limit},
                        )
                    )
            observed[f"e{e}_d{delta}"] = {"max_rho": best, "expected_sup": expected,
                                          "attainable": attainable}
    return SuiteResult("rem_table", checked, failures, observed)


def _suite_erv(genus_max: int = 12, jobs: int = 1, **_):
    """rho <= C and type <= D over the whole tree (a theorem)."""
    failures = [r for r in run_checks(["erv"], genus_max, jobs=jobs, fails_only=True)]
    total = sum(genus_counts(genus_max, jobs=jobs))
    return SuiteResult("erv", total, failures)


SUITES = {
    "herzog": _suite_herzog,
    "bresinsky4": _suite_bresinsky4,
    "bresinsky5": _suite_bresinsky5,
    "etohw": _suite_etohw,
    "moscariello4": _suite_moscariello4,
    "as5type": _suite_as5type,
    "ng4": _suite_ng4,
    "bresinsky88": _suite_bresinsky88,
    "rem_table": _suite_rem_table,
    "erv": _suite_erv,
}


def verify_theorem_suite(suite: str, **bounds) -> SuiteResult:
    """Run one named suite; any failure means an implementation bug."""
    if suite not in SUITES:
        raise InvalidInput(f"unknown suite {suite!r}; known: {sorted(SUITES)}")
    return SUITES[suite](**bounds)


# -- pattern-constrained symmetric search (five generators) ----------------------


def iter_symmetric_pattern_edim5(gen_max: int, mult_max: int | None = None):
    """Symmetric semigroups with 5 minimal generators of which four distinct
    ones satisfy g_i + g_j = g_h + g_k, all generators <= gen_max.

    For a sorted quadruple the only possible pattern is min + max = sum of
    the middle two, so patterned quadruples are enumerated directly and the
    fifth generator ranges freely.
    """
    yielded = set()
    top = gen_max
    full = (1 << (top + 1)) - 1
    for p in range(2, top - 2):
        if mult_max is not None and p > mult_max + 1:
            break
        mask_p = _grow_mask((1 << p) | 1, p, full)
        for q in range(p + 1, top):
            if (mask_p >> q) & 1:
                continue
            mask_pq = _grow_mask(mask_p, q, full)
            for r in range(q + 1, top):
                s = q + r - p  # sorted quadruples force min+max = mid+mid
                if s > top:
                    break
                if (mask_pq >> r) & 1:
                    continue
                mask_pqr = _grow_mask(mask_pq, r, full)
                if (mask_pqr >> s) & 1:
                    continue
                mask_quad = _grow_mask(mask_pqr, s, full)
                quad = (p, q, r, s)
                for u in range(2, top + 1):
                    if u in quad:
                        continue
                    if u > p and (mask_quad >> u) & 1:
                        continue  # u is redundant over the quadruple
                    gens = tuple(sorted(quad + (u,)))
                    if mult_max is not None and gens[0] > mult_max:
                        continue
                    if gens in yielded:
                        continue
                    d = 0
                    for g in gens:
                        d = gcd(d, g)
                    if d != 1:
                        continue
                    S = from_generators(gens)
                    if S.gens != gens:
                        continue  # not a minimal generating set
                    if 2 * S.genus != S.frobenius + 1:
                        continue  # not symmetric
                    yielded.add(gens)
                    yield S


# -- bounded supremum searches ----------------------------------------------------


def search_supremum(
    target: str,
    *,
    edim: int | None = None,
    mult: int | None = None,
    width: int | None = None,
    gen_max: int | None = None,
    frob_max: int | None = None,
    mult_max: int | None = None,
    pattern: bool = False,
) -> CheckReport:
    """Best lower-bound witness for one of the sup quantities.

    targets: R (max rho at fixed edim and mult), T (max type, same family),
    S (max rho over symmetric at fixed edim), A (max type over almost
    symmetric), W (max rho at fixed width).  The result is always labelled a
    bounded lower-bound witness, never a supremum.
    """
    if target not in ("R", "T", "S", "A", "W"):
        raise InvalidInput(f"unknown search target {target!r}")
    best_val = -1
    best: NumericalSemigroup | None = None
    checked = 0

    def consider(S, val):
        nonlocal best_val, best, checked
        checked += 1
        if val > best_val or (val == best_val and best and S.gens < best.gens):
            best_val, best = val, S

    if target in ("R", "T"):
        if edim is None or mult is None:
            raise InvalidInput("R/T searches need edim and mult")
        for S in enumerate_filtered(edim=edim, mult=mult, gen_max=gen_max, frob_max=frob_max):
            consider(S, rho(S) if target == "R" else semigroup_type(S))
    elif target == "S":
        if edim is None:
            raise InvalidInput("S search needs edim")
        if pattern and edim == 5:
            if gen_max is None:
                raise InvalidInput("pattern search needs gen_max")
            for S in iter_symmetric_pattern_edim5(gen_max, mult_max):
                consider(S, rho(S))
        else:
            for S in enumerate_filtered(edim=edim, gen_max=gen_max, frob_max=frob_max):
                if is_symmetric(S):
                    consider(S, rho(S))
    elif target == "A":
        if edim is None:
            raise InvalidInput("A search needs edim")
        for S in enumerate_filtered(edim=edim, gen_max=gen_max, frob_max=frob_max):
            if is_almost_symmetric(S):
                consider(S, semigroup_type(S))
    else:  # W
        if width is None:
            raise InvalidInput("W search needs width")
        for S in enumerate_filtered(width=width, gen_max=gen_max, frob_max=frob_max):
            consider(S, rho(S))
    data = {
        "target": target,
        "params": {
            "edim": edim,
            "mult": mult,
            "width": width,
            "gen_max": gen_max,
            "frob_max": frob_max,
            "mult_max": mult_max,
            "pattern": pattern,
        },
        "checked": checked,
        "best_value": best_val,
        "bounded_search": True,  # lower-bound witness, not a supremum
    }
    if best is not None:
        data["invariants"] = invariants(best)
        data["rho"] = rho(best)
    gens = best.gens if best is not None else ()
    return CheckReport(f"search-{target}", gens, "witness", data)


def boundedness_probe(edim: int = 4, frob_max: int = 40) -> list[dict]:
    """Joint (rho, type, b_2) statistics for the boundedness question.

    For four generators, b_2 = rho + type - 1 must hold (alternating sum);
    a violation raises an internal error.
    """
    rows = []
    for S in enumerate_filtered(edim=edim, frob_max=frob_max):
        r = rho(S)
        t = semigroup_type(S)
        totals = graded_betti(S).totals()
        if edim == 4 and totals[2] != r + t - 1:
            raise InternalConsistencyError(
                f"b_2 = {totals[2]} != rho + type - 1 = {r + t - 1} for <{S}>"
            )
        rows.append(
            {
                "gens": list(S.gens),
                "rho": r,
                "type": t,
                "betti": totals,
                "bresinsky88_ok": r <= 4 + 9 * t,
            }
        )
    return rows
