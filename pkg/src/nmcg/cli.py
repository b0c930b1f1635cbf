"""Command-line front end.

Subcommands:
  present     print a presentation (text or JSON)
  verify      run tiered verification for one (genus, boundary) pair
  abelianize  H_1 of a presented group via Smith normal form
  enumerate   Todd-Coxeter coset enumeration (small groups only)
  replay      replay recorded derivation scripts
  tables      dump the frozen generator action tables

Exit status: 0 on success, 1 if any verification check fails, 2 on
usage errors. Output is deterministic for fixed inputs.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import pi1_action, replay
from .abelianized import h1
from .catalogue import catalogue
from .cosets import CapExceeded, coset_enumeration
from .presentations import expansion_env, nonorientable_mcg_presentation
from .verify import (
    Verdict,
    boundary_fixation,
    pinned_conjugators,
    pinned_exponents,
    verify_catalogue,
    verify_entry,
    verify_relators,
)


def _pres(args):
    return nonorientable_mcg_presentation(args.genus, args.boundary)


def _print_verdicts(verdicts) -> int:
    bad = 0
    for v in verdicts:
        mark = "ok  " if v.ok else "FAIL"
        print(f"{mark} ({v.genus},{v.boundary}) tier {v.tier} {v.label}: {v.detail}")
        bad += not v.ok
    return bad


def _cmd_present(args) -> int:
    pres = _pres(args)
    if args.format == "json":
        print(pres.to_json())
        return 0
    print(f"genus {pres.genus}, boundary components {pres.boundary}")
    print("generators: " + " ".join(g.label() for g in pres.generators))
    for r in pres.relators:
        print("  " + r.text())
    return 0


def _refresh_diff(args) -> None:
    """Recompute pinned values in scope and print differences."""
    from .one_relator import find_inner_conjugator
    from .catalogue import KMAX

    env = expansion_env(args.genus, args.boundary)
    if args.boundary == 0:
        stored = pinned_conjugators()
        for e in catalogue(args.genus, 0):
            if e.tier != 3:
                continue
            key = f"{e.genus}:{e.label()}"
            table = pi1_action.evaluate(e.word, e.genus, env)
            res = find_inner_conjugator(table, e.genus, radius=args.radius)
            fresh = tuple(res.conjugator) if res.conjugator is not None else None
            if stored.get(key) != fresh:
                print(f"fixture diff conjugators.json {key}: "
                      f"{list(stored[key]) if key in stored else 'absent'}"
                      f" -> {list(fresh) if fresh is not None else res.status}")
    else:
        stored = pinned_exponents()
        for e in catalogue(args.genus, 1):
            if e.tier != 2:
                continue
            key = f"{e.genus}:{e.label()}"
            table = pi1_action.evaluate(e.word, e.genus, env)
            k = pi1_action.conjugation_exponent(table, e.genus, KMAX)
            if stored.get(key, "absent") != k:
                print(f"fixture diff tier2_exponents.json {key}: "
                      f"{stored.get(key, 'absent')} -> {k}")


def _cmd_verify(args) -> int:
    tiers = None if args.tier == "all" else {int(args.tier)}
    hints = {} if args.no_hints else None
    bad = 0
    if args.boundary == 1 and (tiers is None or tiers == {1}):
        bad += _print_verdicts(verify_relators(args.genus))
        bad += _print_verdicts(boundary_fixation(args.genus))
    bad += _print_verdicts(
        verify_catalogue(args.genus, args.boundary, tiers=tiers,
                         radius=args.radius, hints=hints)
    )
    if args.refresh_fixtures:
        _refresh_diff(args)
    return 1 if bad else 0


def _cmd_abelianize(args) -> int:
    res = h1(_pres(args))
    print(f"H_1 = {res.label()}")
    print(f"free rank {res.free_rank}, torsion {list(res.torsion)}")
    return 0


def _cmd_enumerate(args) -> int:
    try:
        table = coset_enumeration(_pres(args), max_cosets=args.max_cosets)
    except CapExceeded as e:
        print(f"coset cap {e.cap} exceeded; the group is large or infinite", file=sys.stderr)
        return 1
    print(f"index {table.index()}")
    if args.csv:
        print(table.to_csv())
    return 0


def _cmd_replay(args) -> int:
    names = args.names or replay.available_scripts()
    memo = {}
    bad = 0
    for name in names:
        try:
            rep = replay.replay_script(name, memo)
        except Exception as e:  # mismatch, missing file, failed endpoint
            print(f"FAIL {name}: {e}")
            bad += 1
            continue
        extra = f" w^{rep.w_power}" if rep.tier == 2 else ""
        print(f"ok   {name}: ({rep.genus},{rep.boundary}) steps={rep.steps} "
              f"tier={rep.tier}{extra}")
    return 1 if bad else 0


def _cmd_tables(args) -> int:
    print(pi1_action.format_tables(args.genus))
    return 0


def _add_gn(p, boundary=True):
    p.add_argument("-g", "--genus", type=int, required=True)
    if boundary:
        p.add_argument("-n", "--boundary", type=int, choices=(0, 1), required=True)


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="nmcg",
        description="presentations of mapping class groups of nonorientable surfaces",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("present", help="print a presentation")
    _add_gn(p)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(fn=_cmd_present)

    p = sub.add_parser("verify", help="run tiered verification")
    _add_gn(p)
    p.add_argument("--tier", choices=("1", "2", "3", "all"), default="all")
    p.add_argument("--radius", type=int, default=None,
                   help="search radius cap for the tier-3 conjugator search")
    p.add_argument("--no-hints", action="store_true",
                   help="ignore pinned conjugators and search from scratch")
    p.add_argument("--refresh-fixtures", action="store_true",
                   help="recompute pinned values in scope and print differences")
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("abelianize", help="H_1 via Smith normal form")
    _add_gn(p)
    p.set_defaults(fn=_cmd_abelianize)

    p = sub.add_parser("enumerate", help="Todd-Coxeter coset enumeration")
    _add_gn(p)
    p.add_argument("--max-cosets", type=int, default=10**6)
    p.add_argument("--csv", action="store_true", help="print the coset table")
    p.set_defaults(fn=_cmd_enumerate)

    p = sub.add_parser("replay", help="replay derivation scripts")
    p.add_argument("names", nargs="*", help="script names (default: all)")
    p.set_defaults(fn=_cmd_replay)

    p = sub.add_parser("tables", help="dump generator action tables")
    _add_gn(p, boundary=False)
    p.set_defaults(fn=_cmd_tables)

    args = parser.parse_args(argv)
    if getattr(args, "boundary", None) == 0 and args.command in ("verify",) and args.genus < 4:
        parser.error("closed-surface verification needs genus >= 4")
    return args.fn(args)


if __name__ == "__main__":
    raise SystemExit(main())
