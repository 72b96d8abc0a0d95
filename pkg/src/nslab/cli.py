"""Command-line surface: invariants, betti, tangent-cone, series, enumerate,
verify, search, replay.

Exit codes: 0 all-pass, 1 a fail verdict / witness disagreement, 2 bad usage,
3 a resource cap was exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import lab
from .classify import (
    gluing_decomposition,
    is_complete_intersection,
    is_cyclotomic,
    semigroup_polynomial,
)
from .core import (
    from_generators,
    has_canonical_reduction,
    invariants,
    is_almost_symmetric,
    is_max_edim,
    is_nearly_gorenstein,
    is_symmetric,
    pseudo_frobenius,
)
from .errors import InvalidInput, NotMember, ResourceLimit, SemigroupError
from .factorization import minimal_presentation
from .reporting import Config, WitnessStore, betti_csv, canonical_json, replay_record, report_id
from .resolution import graded_betti
from .tangent_cone import b1_G, hilbert_function_G, is_HF_nondecreasing


def _gens(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError as exc:
        raise InvalidInput(f"bad generator list {text!r}") from exc


def _chars(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError as exc:
        raise InvalidInput(f"bad characteristic list {text!r}") from exc


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="nslab", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, gens=False):
        if gens:
            sp.add_argument("--gens", required=True, help="comma-separated generators, e.g. 4,5,6")
        sp.add_argument("--char", default="0,2", help="coefficient characteristics (default 0,2)")
        sp.add_argument("--jobs", type=int, default=1)
        sp.add_argument("--out", default=None, help="append JSON-lines output to this path")
        sp.add_argument("--json", action="store_true", help="emit JSON instead of plain text")
        sp.add_argument("--csv", action="store_true", help="emit CSV where applicable")
        sp.add_argument("--no-timestamps", action="store_true")
        return sp

    common(sub.add_parser("invariants", help="full invariant record of one semigroup"), gens=True)
    common(sub.add_parser("betti", help="graded Betti tables"), gens=True)
    tc = common(sub.add_parser("tangent-cone", help="Hilbert function of the tangent cone"), gens=True)
    tc.add_argument("--jmax", type=int, default=None)
    common(sub.add_parser("series", help="Hilbert-series numerator and cyclotomic factors"), gens=True)

    en = common(sub.add_parser("enumerate", help="run checks over the genus tree"))
    en.add_argument("--genus-max", type=int, required=True)
    en.add_argument("--check", default="wilf", help=f"comma list from {sorted(lab.CHECKS)}")
    en.add_argument("--fails-only", action="store_true")

    ve = common(sub.add_parser("verify", help="run theorem suites"))
    ve.add_argument("--suite", action="append", required=True, help=f"one of {sorted(lab.SUITES)}")
    ve.add_argument("--frob-max", type=int, default=None)
    ve.add_argument("--genus-max", type=int, default=None)
    ve.add_argument("--gen-max", type=int, default=None)
    ve.add_argument("--mult-max", type=int, default=None)

    se = common(sub.add_parser("search", help="bounded lower-bound witness search"))
    se.add_argument("--target", required=True, choices=["R", "T", "S", "A", "W"])
    se.add_argument("--edim", type=int, default=None)
    se.add_argument("--mult", type=int, default=None)
    se.add_argument("--width", type=int, default=None)
    se.add_argument("--gen-max", type=int, default=None)
    se.add_argument("--frob-max", type=int, default=None)
    se.add_argument("--mult-max", type=int, default=None)
    se.add_argument("--pattern", action="store_true",
                    help="restrict to tuples with g_i+g_j = g_h+g_k (edim-5 symmetric search)")

    re_ = sub.add_parser("replay", help="recompute a stored witness and diff it")
    re_.add_argument("--store", required=True)
    re_.add_argument("id")
    return p


def _emit(args, payload: dict) -> None:
    if args.out:
        with open(args.out, "a") as fh:
            fh.write(canonical_json(payload) + "\n")
    if getattr(args, "json", False) or args.out:
        print(canonical_json(payload))
    else:
        for key, val in payload.items():
            print(f"{key}: {val}")


def cmd_invariants(args) -> int:
    S = from_generators(_gens(args.gens))
    chars = _chars(args.char)
    Config(characteristics=chars).validate()
    pres = minimal_presentation(S)
    series = semigroup_polynomial(S)
    cyc = is_cyclotomic(series)
    record = S.to_json_dict()
    record.update(
        {
            "pseudo_frobenius": pseudo_frobenius(S),
            "symmetric": is_symmetric(S),
            "almost_symmetric": is_almost_symmetric(S),
            "nearly_gorenstein": is_nearly_gorenstein(S),
            "canonical_reduction": has_canonical_reduction(S),
            "max_edim": is_max_edim(S),
            "complete_intersection": is_complete_intersection(S),
            "rho": pres.rho,
            "presentation": [r.to_json_dict() for r in pres.relations],
            "betti": {str(c): graded_betti(S, c).totals() for c in chars},
            "series_numerator": list(series.coeffs),
            "cyclotomic": cyc.to_json_dict(),
            "hilbert": hilbert_function_G(S, 8).to_json_dict() if S.edim > 1 else {"values": [1] * 9},
            "b1_tangent_cone": b1_G(S).to_json_dict(),
        }
    )
    _emit(args, record)
    return 0


def cmd_betti(args) -> int:
    S = from_generators(_gens(args.gens))
    chars = _chars(args.char)
    Config(characteristics=chars).validate()
    tables = [graded_betti(S, c) for c in chars]
    if args.csv:
        for t in tables:
            sys.stdout.write(betti_csv(t))
        return 0
    _emit(args, {"gens": list(S.gens), "tables": [t.to_json_dict() for t in tables]})
    return 0


def cmd_tangent_cone(args) -> int:
    S = from_generators(_gens(args.gens))
    jmax = args.jmax if args.jmax is not None else 8
    hf = hilbert_function_G(S, jmax) if S.edim > 1 else None
    check = is_HF_nondecreasing(S)
    payload = {
        "gens": list(S.gens),
        "hilbert": check.to_json_dict(),
        "values_upto_jmax": list(hf.values) if hf else [1] * (jmax + 1),
        "b1": b1_G(S).to_json_dict(),
    }
    _emit(args, payload)
    return 0


def cmd_series(args) -> int:
    S = from_generators(_gens(args.gens))
    series = semigroup_polynomial(S)
    cyc = is_cyclotomic(series)
    glue = gluing_decomposition(S) if S.edim <= 12 else None
    payload = {
        "gens": list(S.gens),
        "numerator": list(series.coeffs),
        "numerator_str": str(series),
        "cyclotomic": cyc.to_json_dict(),
        "complete_intersection": is_complete_intersection(S),
        "gluing": glue.to_json_dict() if glue is not None else None,
    }
    _emit(args, payload)
    return 0


def cmd_enumerate(args) -> int:
    ids = [x for x in args.check.split(",") if x]
    reports = lab.run_checks(ids, args.genus_max, jobs=args.jobs, fails_only=args.fails_only)
    store = WitnessStore(args.out) if args.out else None
    counts = {"pass": 0, "fail": 0, "inconclusive": 0}
    for rep in reports:
        counts[rep.verdict] = counts.get(rep.verdict, 0) + 1
        if store is not None:
            store.append(rep, timestamp=not args.no_timestamps)
        elif args.json:
            print(canonical_json(rep.to_json_dict()))
    summary = {"checks": ids, "genus_max": args.genus_max, "counts": counts}
    print(canonical_json(summary) if args.json else f"summary: {summary}")
    return 1 if counts.get("fail") else 0


def cmd_verify(args) -> int:
    bounds = {}
    for name in ("frob_max", "genus_max", "gen_max", "mult_max"):
        val = getattr(args, name)
        if val is not None:
            bounds[name] = val
    if args.jobs > 1:
        bounds["jobs"] = args.jobs
    suites = []
    for entry in args.suite:
        suites.extend(x for x in entry.split(",") if x)
    failed = False
    for suite in suites:
        result = lab.verify_theorem_suite(suite, **bounds)
        payload = result.to_json_dict()
        print(canonical_json(payload) if args.json else
              f"{suite}: checked={result.checked} failures={len(result.failures)} {result.data}")
        if args.out:
            with open(args.out, "a") as fh:
                fh.write(canonical_json(payload) + "\n")
        failed = failed or not result.ok
    return 1 if failed else 0


def cmd_search(args) -> int:
    witness = lab.search_supremum(
        args.target,
        edim=args.edim,
        mult=args.mult,
        width=args.width,
        gen_max=args.gen_max,
        frob_max=args.frob_max,
        mult_max=args.mult_max,
        pattern=args.pattern,
    )
    rec = witness.to_json_dict()
    rec["id"] = report_id(rec)
    if args.out:
        WitnessStore(args.out).append(witness, timestamp=not args.no_timestamps)
    print(canonical_json(rec))
    return 0


def cmd_replay(args) -> int:
    store = WitnessStore(args.store)
    rec = store.find(args.id)
    if rec is None:
        print(f"no record with id {args.id}", file=sys.stderr)
        return 2
    ok, diffs = replay_record(rec)
    print(canonical_json({"id": args.id, "match": ok, "diffs": diffs}))
    return 0 if ok else 1


_COMMANDS = {
    "invariants": cmd_invariants,
    "betti": cmd_betti,
    "tangent-cone": cmd_tangent_cone,
    "series": cmd_series,
    "enumerate": cmd_enumerate,
    "verify": cmd_verify,
    "search": cmd_search,
    "replay": cmd_replay,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except ResourceLimit as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return 3
    except (InvalidInput, NotMember) as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return 2
    except SemigroupError as exc:  # pragma: no cover - internal bug trap
        print(f"internal error: {exc}", file=sys.stderr)
        raise


if __name__ == "__main__":
    sys.exit(main())
