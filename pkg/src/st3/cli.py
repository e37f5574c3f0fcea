"""Command-line interface.

Subcommands: catalog build|list|show, moments, diagonal, densities,
verify, roots, match, sample, serve.  Exit status: 0 on success, 1 on a
verification failure, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from . import catalog as catmod
from .catalog import build_catalog, find_group, load_catalog, save_catalog, verify_counts
from .identify import key, match_empirical
from .lpoly import LPolyFormatError, ingest
from .rationality import (
    beukers_smyth_check,
    cyclic_integrality_classes,
    single_integrality_classes,
)
from .sample import UnsupportedSampler, sample
from .stats import densities, diagonal, simplex


def _frac(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}" if x.denominator != 1 else str(x.numerator)


def _get_catalog(args):
    if getattr(args, "catalog_file", None):
        return load_catalog(args.catalog_file)
    return build_catalog(extended=getattr(args, "extended", False),
                         blocks_path=getattr(args, "blocks", None))


def cmd_catalog(args) -> int:
    if args.action == "build":
        groups = _get_catalog(args)
        from .catalog import last_missing_blocks

        for letter, labels in sorted(last_missing_blocks().items()):
            print(f"warning: type {letter} skipped, missing blocks: "
                  f"{', '.join(labels)}", file=sys.stderr)
        if args.out:
            save_catalog(groups, args.out)
        print(f"{len(groups)} groups")
        return 0
    groups = _get_catalog(args)
    if args.action == "list":
        for g in groups:
            flag = "R" if g.realizable else "-"
            flag += "M" if g.maximal else "-"
            print(f"{g.label:18s} {flag} {g.n_components:4d}  {g.name}")
        return 0
    if args.action == "show":
        if not args.label:
            print("catalog show requires LABEL", file=sys.stderr)
            return 2
        g = find_group(groups, args.label)
        print(f"label:      {g.label}")
        print(f"name:       {g.name}")
        print(f"type:       {g.letter} ({g.conn.name})")
        print(f"components: {g.n_components}")
        print(f"realizable: {g.realizable}")
        print(f"maximal:    {g.maximal}")
        print(f"provenance: {g.provenance}")
        fp = g.comps.fingerprint()
        print(f"components fingerprint: {fp.short()}")
        if g.subgroups:
            print(f"recorded subgroups: {', '.join(g.subgroups)}")
        return 0
    return 2


def cmd_moments(args) -> int:
    g = find_group(_get_catalog(args), args.group)
    vals = simplex(g, args.simplex)
    for (e1, e2, e3), v in sorted(vals.items()):
        print(f"{e1},{e2},{e3},{_frac(v)}")
    return 0


def cmd_diagonal(args) -> int:
    g = find_group(_get_catalog(args), args.group)
    for lam, v in diagonal(g, args.m).items():
        print(f"{lam[0]},{lam[1]},{lam[2]},{_frac(v)}")
    return 0


def cmd_densities(args) -> int:
    g = find_group(_get_catalog(args), args.group)
    for row in densities(g):
        print(",".join(_frac(x) for x in row))
    return 0


def cmd_verify(args) -> int:
    failed = 0
    if args.tables or args.all:
        for chk in verify_counts(getattr(args, "blocks", None)):
            status = "ok" if chk.ok else "FAIL"
            print(f"[{status}] {chk.name}: expected {chk.expected}, got {chk.got}")
            if not chk.ok:
                failed += 1
    if args.roots or args.all:
        singles = single_integrality_classes()
        cyclics = cyclic_integrality_classes()
        for nm, got, want in [("single-integrality classes", len(singles), 16),
                              ("cyclic-integrality classes", len(cyclics), 23)]:
            status = "ok" if got == want else "FAIL"
            print(f"[{status}] {nm}: expected {want}, got {got}")
            failed += 0 if got == want else 1
        rep = beukers_smyth_check()
        status = "ok" if rep["ok"] else "FAIL"
        print(f"[{status}] Beukers-Smyth re-derivation "
              f"(missing {len(rep['missing'])}, extra {len(rep['extra'])})")
        if not rep["ok"]:
            failed += 1
    if failed:
        print(f"{failed} check(s) failed")
        return 1
    print("all checks passed")
    return 0


def cmd_roots(args) -> int:
    if args.mode == "single":
        for t in single_integrality_classes():
            print(t)
    elif args.mode == "cyclic":
        for t in cyclic_integrality_classes():
            print(t)
    else:
        rep = beukers_smyth_check()
        for t in rep["recovered"]:
            print(t)
        if not rep["ok"]:
            print(f"mismatch: missing {rep['missing']} extra {rep['extra']}",
                  file=sys.stderr)
            return 1
    return 0


def cmd_match(args) -> int:
    try:
        prof = ingest(args.input)
    except LPolyFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    groups = _get_catalog(args)
    res = match_empirical(prof, args.tol, args.variant, groups)
    print("label,max_deviation")
    for label, dev in res:
        print(f"{label},{dev:.6g}")
    if not res:
        print("# no catalog group within tolerance", file=sys.stderr)
    return 0


def cmd_sample(args) -> int:
    g = find_group(_get_catalog(args), args.group)
    try:
        for a1, a2, a3 in sample(g, args.n, args.seed):
            print(f"{a1:.9f},{a2:.9f},{a3:.9f}")
    except UnsupportedSampler as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


def cmd_serve(args) -> int:
    try:
        import uvicorn
    except ImportError:
        print("error: uvicorn is required for `st3 serve`", file=sys.stderr)
        return 2
    from .service.app import create_app

    uvicorn.run(create_app(), host=args.host, port=args.port)
    return 0


def _add_catalog_opts(p):
    p.add_argument("--extended", action="store_true",
                   help="use the 433-group extended classification")
    p.add_argument("--blocks", help="alternate genus-2 building-block file")
    p.add_argument("--catalog-file", help="load a serialized catalog instead of building")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="st3",
                                 description="Sato-Tate groups of abelian threefolds")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("catalog", help="build, list or inspect the group catalog")
    p.add_argument("action", choices=["build", "list", "show"])
    p.add_argument("label", nargs="?")
    p.add_argument("--out", help="write the catalog in the record-per-line format")
    _add_catalog_opts(p)
    p.set_defaults(fn=cmd_catalog)

    p = sub.add_parser("moments", help="m-simplex of moments of one group")
    p.add_argument("--group", required=True)
    p.add_argument("--simplex", type=int, default=12)
    _add_catalog_opts(p)
    p.set_defaults(fn=cmd_moments)

    p = sub.add_parser("diagonal", help="m-diagonal of character norms")
    p.add_argument("--group", required=True)
    p.add_argument("-m", type=int, default=3, dest="m")
    _add_catalog_opts(p)
    p.set_defaults(fn=cmd_diagonal)

    p = sub.add_parser("densities", help="matrix of point densities Z(G)")
    p.add_argument("--group", required=True)
    _add_catalog_opts(p)
    p.set_defaults(fn=cmd_densities)

    p = sub.add_parser("verify", help="verify classification tables and root lists")
    p.add_argument("--tables", action="store_true")
    p.add_argument("--roots", action="store_true")
    p.add_argument("--all", action="store_true")
    p.add_argument("--blocks")
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("roots", help="root-of-unity triple classifications")
    p.add_argument("--mode", choices=["single", "cyclic", "verify"], required=True)
    p.set_defaults(fn=cmd_roots)

    p = sub.add_parser("match", help="match an L-polynomial file against the catalog")
    p.add_argument("--input", required=True)
    p.add_argument("--variant", choices=["a", "b", "c"], default="b")
    p.add_argument("--tol", type=float, required=True)
    _add_catalog_opts(p)
    p.set_defaults(fn=cmd_match)

    p = sub.add_parser("sample", help="synthetic Haar samples of (a1,a2,a3)")
    p.add_argument("--group", required=True)
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    _add_catalog_opts(p)
    p.set_defaults(fn=cmd_sample)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.set_defaults(fn=cmd_serve)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.fn(args)
    except KeyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
