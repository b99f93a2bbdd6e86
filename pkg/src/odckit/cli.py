"""Command-line front end.

Four subcommands: construct (build a starter and optionally its full cover
and witness certificate), verify (re-check fixture files), search
(exhaustive enumeration for small orders), and coverage (which criteria
certify an order).  Output is either human-oriented text or a single
machine-readable JSON document; both carry the same numeric content.

Exit codes are a stable contract: 0 = success/verified, 1 = a verification
failed, 2 = invalid or ineligible input.  Path data in text output uses the
fixture format (comma-separated labels, '#' comments), so emitted paths can
be fed straight back to `verify`.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict
from pathlib import Path
from typing import Any

from . import construction, coverage, odc, pathcore, search
from .construction import NotEligibleError
from .pathcore import VertexPath

SCHEMA_VERSION = "1"

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_BAD_INPUT = 2


def _print_envelope(command: str, inputs: dict[str, Any], result: dict[str, Any], verified: bool) -> None:
    doc = {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "inputs": inputs,
        "result": result,
        "verified": verified,
    }
    print(json.dumps(doc, indent=2))


def _form_dict(tag: coverage.FormTag) -> dict[str, Any]:
    return {"kind": tag.kind, "witness": tag.witness}


def _witness_dict(w: construction.WitnessPair) -> dict[str, Any]:
    d = asdict(w)
    d["edge_i"] = list(w.edge_i)
    d["edge_j"] = list(w.edge_j)
    return d


# ---------------------------------------------------------------- construct


def cmd_construct(args: argparse.Namespace) -> int:
    inst = construction.build_starter(args.n, args.root)
    ok_terrace, _ = pathcore.is_terrace(inst.terrace)
    ok_starter, profile = odc.is_odc_starter(inst.terrace)
    collection = odc.translates(inst.terrace)
    report = odc.verify_odc(collection)
    verified = bool(ok_terrace and ok_starter and report.ok)

    lengths = pathcore.edge_lengths(inst.terrace)
    distances = sorted(profile.assignment.items()) if profile else []
    want_odc = args.emit in ("odc", "all")
    want_wit = args.emit in ("witnesses", "all")
    cert = construction.witness_certificate(inst) if want_wit else None

    result: dict[str, Any] = {
        "n": inst.n,
        "root": inst.root,
        "modulus": inst.modulus,
        "starter": list(inst.terrace.vertices),
        "lengths": list(lengths),
        "distances": [[ell, k] for ell, k in distances],
    }
    if want_odc:
        result["odc"] = [list(p.vertices) for p in collection.paths]
    if want_wit and cert is not None:
        result["witnesses"] = [_witness_dict(cert[k]) for k in sorted(cert)]

    inputs = {"n": args.n, "root": args.root, "emit": args.emit}
    if args.format == "machine":
        _print_envelope("construct", inputs, result, verified)
    else:
        print(f"# construct n={inst.n} root={inst.root} modulus={inst.modulus} "
              f"verified={'true' if verified else 'false'}")
        print(f"# lengths {','.join(map(str, lengths))}")
        print("# distances " + " ".join(f"{ell}->{k}" for ell, k in distances))
        if args.emit in ("starter", "all"):
            print(pathcore.format_path(inst.terrace))
        if want_odc:
            print(f"# odc {inst.n} rows")
            for p in collection.paths:
                print(pathcore.format_path(p))
        if want_wit and cert is not None:
            print("# witnesses")
            for k in sorted(cert):
                w = cert[k]
                print(f"# k={w.k} x={w.x} u={w.u} i={w.i} j={w.j} "
                      f"edge_i={w.edge_i[0]},{w.edge_i[1]} edge_j={w.edge_j[0]},{w.edge_j[1]} "
                      f"length={w.length} pos_i={w.edge_index_i} pos_j={w.edge_index_j}")
    return EXIT_OK if verified else EXIT_VERIFY_FAILED


# ------------------------------------------------------------------- verify


def _paths_from_text(text: str, mode: str) -> list[VertexPath]:
    """Fixture lines, or a machine JSON document (sniffed by its first byte)."""
    if text.lstrip().startswith("{"):
        doc = json.loads(text)
        result = doc.get("result", {})
        if mode == "odc" and "odc" in result:
            rows = result["odc"]
        elif "starter" in result:
            rows = [result["starter"]]
        elif "odc" in result:
            rows = result["odc"]
        elif "starters" in result:
            rows = result["starters"]
        else:
            raise ValueError("machine document carries no paths")
        return [VertexPath(tuple(row)) for row in rows]
    return pathcore.parse_paths(text)


def cmd_verify(args: argparse.Namespace) -> int:
    text = Path(args.file).read_text(encoding="utf-8")
    paths = _paths_from_text(text, args.mode)
    if not paths:
        raise ValueError(f"no paths in {args.file}")
    inputs = {"file": args.file, "mode": args.mode}

    if args.mode == "odc":
        collection = odc.OdcCollection(paths)  # wrong size/mixed orders -> bad input
        report = odc.verify_odc(collection)
        result = {
            "mode": "odc",
            "n": collection.n,
            "double_cover_ok": report.double_cover_ok,
            "orthogonality_ok": report.orthogonality_ok,
            "violations": [
                {"kind": v.kind, "subject": list(v.subject), "count": v.count}
                for v in report.violations
            ],
        }
        ok = report.ok
        if args.format == "machine":
            _print_envelope("verify", inputs, result, ok)
        else:
            print(f"# verify file={args.file} mode=odc paths={len(paths)}")
            print(f"double_cover: {'ok' if report.double_cover_ok else 'FAIL'}")
            print(f"orthogonality: {'ok' if report.orthogonality_ok else 'FAIL'}")
            for v in report.violations:
                print(f"violation: {v.kind} {v.subject[0]},{v.subject[1]} count={v.count}")
        return EXIT_OK if ok else EXIT_VERIFY_FAILED

    rows = []
    ok_all = True
    for idx, p in enumerate(paths):
        if args.mode == "terrace":
            ok, profile = pathcore.is_terrace(p)
            bad = [[ell, c] for ell, c in sorted(profile.counts.items()) if c != 2]
            missing = [ell for ell in range(1, p.m + 1) if ell not in profile.counts]
            bad.extend([ell, 0] for ell in missing)
            rows.append({"index": idx, "ok": ok, "bad_length_counts": bad if not ok else []})
        else:  # starter
            ok, profile = odc.is_odc_starter(p)
            row: dict[str, Any] = {"index": idx, "ok": ok}
            if profile is not None:
                row["distances"] = [[ell, k] for ell, k in sorted(profile.assignment.items())]
            rows.append(row)
        ok_all &= ok
    result = {"mode": args.mode, "paths": rows}
    if args.format == "machine":
        _print_envelope("verify", inputs, result, ok_all)
    else:
        print(f"# verify file={args.file} mode={args.mode} paths={len(paths)}")
        for row in rows:
            if row["ok"]:
                print(f"path {row['index']}: ok")
            elif args.mode == "terrace":
                detail = " ".join(f"length {ell} count={c}" for ell, c in row["bad_length_counts"])
                print(f"path {row['index']}: FAIL not a terrace: {detail}")
            else:
                print(f"path {row['index']}: FAIL not a starter")
    return EXIT_OK if ok_all else EXIT_VERIFY_FAILED


# ------------------------------------------------------------------- search


def cmd_search(args: argparse.Namespace) -> int:
    cfg = search.SearchConfig(
        n=args.n,
        canonicalize=not args.no_canonicalize,
        limit=args.limit,
        ceiling=args.ceiling,
    )
    res = search.enumerate_starters(cfg)
    verified = all(odc.is_odc_starter(p)[0] for p in res.starters)
    result = {
        "n": args.n,
        "count": len(res.starters),
        "nodes_explored": res.nodes_explored,
        "wall_time_s": res.wall_time,
        "starters": [list(p.vertices) for p in res.starters],
    }
    inputs = {
        "n": args.n,
        "canonicalize": not args.no_canonicalize,
        "limit": args.limit,
        "ceiling": args.ceiling,
    }
    if args.format == "machine":
        _print_envelope("search", inputs, result, verified)
    else:
        for p in res.starters:
            print(pathcore.format_path(p))
    print(
        f"# search n={args.n} found={len(res.starters)} "
        f"nodes={res.nodes_explored} time={res.wall_time:.3f}s",
        file=sys.stderr,
    )
    # An empty enumeration is a valid answer, not a failure.
    return EXIT_OK if verified else EXIT_VERIFY_FAILED


# ----------------------------------------------------------------- coverage


def _verdict_dict(v: coverage.CoverageVerdict, families: tuple[str, ...] | None = None) -> dict[str, Any]:
    cert = v.product_cert
    d: dict[str, Any] = {
        "n": v.n,
        "product": None
        if cert is None
        else {
            "base": cert.base,
            "base_form": _form_dict(cert.base_tag),
            "factors": [[q, _form_dict(tag)] for q, tag in cert.factors],
        },
        "complement_prime": v.complement_prime,
        "is_new": v.is_new,
    }
    if families is not None:
        d["families"] = list(families)
    return d


def _verdict_line(v: coverage.CoverageVerdict, families: tuple[str, ...] | None = None) -> str:
    cert = v.product_cert
    if cert is None:
        product = "none"
    else:
        pieces = [f"{cert.base}[{cert.base_tag.kind}:{cert.base_tag.witness}]"]
        pieces.extend(f"{q}[{tag.kind}:{tag.witness}]" for q, tag in cert.factors)
        product = "*".join(pieces)
    line = (
        f"n={v.n} new={'yes' if v.is_new else 'no'} "
        f"complement_prime={'yes' if v.complement_prime else 'no'} product={product}"
    )
    if families is not None:
        line += f" families={','.join(families) if families else '-'}"
    return line


def cmd_coverage(args: argparse.Namespace) -> int:
    if args.n is not None:
        verdicts = [(coverage.classify(args.n), None)]
        inputs: dict[str, Any] = {"n": args.n}
    else:
        lo, hi = args.range
        if args.new_only:
            verdicts = [(nv.verdict, nv.families) for nv in coverage.enumerate_new_values(hi)
                        if nv.verdict.n >= lo]
        else:
            verdicts = [(coverage.classify(n), None) for n in range(lo | 1, hi + 1, 2)]
        inputs = {"range": [lo, hi], "new_only": args.new_only}

    # Re-validate every certificate in-process before reporting.
    verified = True
    for v, _ in verdicts:
        if v.product_cert is not None:
            cert = v.product_cert
            ok = (
                cert.product == v.n
                and coverage.qualifies_base(cert.base) is not None
                and all(coverage.qualifies_prime_power(q) is not None for q, _ in cert.factors)
            )
            verified &= ok

    if args.format == "machine":
        result = {"verdicts": [_verdict_dict(v, fams) for v, fams in verdicts]}
        _print_envelope("coverage", inputs, result, verified)
    else:
        for v, fams in verdicts:
            print(_verdict_line(v, fams))
    return EXIT_OK if verified else EXIT_VERIFY_FAILED


# ------------------------------------------------------------------ parsing


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="odckit",
        description="Orthogonal double covers of K_n by Hamiltonian paths.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build a starter from discrete logs mod 2n+1")
    p.add_argument("--n", type=int, required=True, help="odd order with 2n+1 prime")
    p.add_argument("--root", type=int, default=None, help="primitive root of 2n+1 (default: smallest)")
    p.add_argument("--emit", choices=["starter", "odc", "witnesses", "all"], default="starter")
    p.add_argument("--format", choices=["text", "machine"], default="text")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="re-check paths from a fixture or machine file")
    p.add_argument("file", help="fixture file (one comma-separated path per line) or machine JSON")
    p.add_argument("--mode", choices=["terrace", "starter", "odc"], default="starter")
    p.add_argument("--format", choices=["text", "machine"], default="text")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("search", help="exhaustively enumerate starters for small n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--limit", type=int, default=None, help="stop after this many starters")
    p.add_argument("--ceiling", type=int, default=search.DEFAULT_CEILING,
                   help="largest order the search will accept")
    p.add_argument("--no-canonicalize", action="store_true",
                   help="list every starter with first vertex 0, not one per class")
    p.add_argument("--format", choices=["text", "machine"], default="text")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("coverage", help="which criteria certify an odd order")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--n", type=int, default=None)
    group.add_argument("--range", type=int, nargs=2, metavar=("LO", "HI"), default=None)
    p.add_argument("--new-only", action="store_true",
                   help="only orders certified by the discrete-log route alone")
    p.add_argument("--format", choices=["text", "machine"], default="text")
    p.set_defaults(func=cmd_coverage)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse reports its own errors on stderr
        return EXIT_BAD_INPUT if exc.code else EXIT_OK
    if getattr(args, "new_only", False) and args.n is not None:
        print("error: --new-only needs --range", file=sys.stderr)
        return EXIT_BAD_INPUT
    try:
        return args.func(args)
    except (NotEligibleError, ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    except RuntimeError as exc:
        print(f"verification defect: {exc}", file=sys.stderr)
        return EXIT_VERIFY_FAILED


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
