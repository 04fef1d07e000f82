"""Command-line interface.

Commands: dim, decompose, stability, invariants, oracle, character,
verify-paper.  Output is text by default or a single JSON document with
--format json.  Exit codes: 0 success, 1 verification failure, 2 argument
error, 3 resource limit exceeded, 4 internal consistency failure.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from datetime import datetime, timezone
from pathlib import Path

from .action import cohomology_character, trivial_multiplicity
from .classtables import class_table
from .decompose import (
    DEFAULT_MAX_N_SN,
    DEFAULT_MAX_N_WN,
    decompose,
    stability_scan,
)
from .errors import ConsistencyError, ResourceLimitError
from .forests import count_forests_enumerated, forest_count
from .oracle import (
    DEFAULT_ORACLE_MAX_K,
    DEFAULT_ORACLE_MAX_N,
    quotient_rank,
    verify_forest_basis,
)
from .partitions import format_label, normalize_kind
from .verify import VerifyCaps, run_verification

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_ARGUMENT = 2
EXIT_RESOURCE = 3
EXIT_CONSISTENCY = 4

COUNT_CAP = 9  # largest n for which dim enumerates as well as evaluates


@dataclass
class RunConfig:
    format: str = "text"
    cache_dir: Path | None = None
    threads: int = 1
    max_n: int | None = None

    def cap(self, kind):
        if self.max_n is not None:
            return self.max_n
        return DEFAULT_MAX_N_SN if normalize_kind(kind) == "Sn" else DEFAULT_MAX_N_WN


def default_cache_dir():
    env = os.environ.get("STRINGMOTION_CACHE_DIR")
    if env:
        return Path(env)
    return Path.home() / ".cache" / "stringmotion"


def _common_flags(parser):
    parser.add_argument("--format", choices=("text", "json"), default="text")
    parser.add_argument("--cache-dir", type=Path, default=None,
                        help="character table cache (default: $STRINGMOTION_CACHE_DIR "
                             "or ~/.cache/stringmotion)")
    parser.add_argument("--threads", type=int, default=1)
    parser.add_argument("--max-n", type=int, default=None,
                        help="override the per-group rank caps")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="stringmotion",
        description="Exact W_n/S_n-equivariant cohomology of pure string motion groups.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("dim", help="dimension of H^k, formula and enumerated count")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-k", type=int, required=True)
    _common_flags(p)

    p = sub.add_parser("decompose", help="irreducible multiplicities of H^k")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-k", type=int, required=True)
    p.add_argument("-g", choices=("Sn", "Wn"), required=True)
    _common_flags(p)

    p = sub.add_parser("stability", help="scan a degree for its stabilization onset")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("-g", choices=("Sn", "Wn"), required=True)
    p.add_argument("-N", type=int, default=None, help="largest rank to scan")
    _common_flags(p)

    p = sub.add_parser("invariants", help="trivial multiplicities (invariant dimensions)")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-g", choices=("Sn", "Wn"), required=True)
    p.add_argument("-k", type=int, default=None, help="single degree (default: all)")
    _common_flags(p)

    p = sub.add_parser("oracle", help="presentation-based rank and basis checks")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-k", type=int, required=True)
    _common_flags(p)

    p = sub.add_parser("character", help="dump the class function of H^k")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-k", type=int, required=True)
    p.add_argument("-g", choices=("Sn", "Wn"), required=True)
    _common_flags(p)

    p = sub.add_parser("verify-paper", help="run the full verification battery")
    _common_flags(p)

    return parser


# ---------------------------------------------------------------------------
# command handlers: each returns (exit_code, result_dict, text_lines)


def cmd_dim(args, config):
    n, k = args.n, args.k
    formula = forest_count(n, k)
    result = {"n": n, "k": k, "formula": formula}
    lines = [f"dim H^{k}(PSigma_{n}; Q) = {formula}"]
    cap = COUNT_CAP if config.max_n is None else min(COUNT_CAP, config.max_n)
    if n <= cap:
        enumerated = count_forests_enumerated(n, k)
        result["enumerated"] = enumerated
        result["match"] = enumerated == formula
        lines.append(f"enumerated {enumerated} forests: "
                     + ("match" if result["match"] else "MISMATCH"))
        if not result["match"]:
            raise ConsistencyError("enumerated count disagrees with the formula")
    else:
        result["enumerated"] = None
        result["match"] = None
        result["note"] = f"n > {cap}: formula only, enumeration skipped"
        lines.append(result["note"])
    return EXIT_OK, result, lines


def cmd_decompose(args, config):
    mv = decompose(args.n, args.k, args.g, max_n=config.cap(args.g),
                   threads=config.threads, cache_dir=config.cache_dir)
    result = mv.to_json()
    result["dimension"] = mv.dimension()
    result["dimension_formula"] = forest_count(args.n, args.k)
    result["dimension_check"] = result["dimension"] == result["dimension_formula"]
    lines = [f"H^{args.k}(PSigma_{args.n}; Q) as {args.g}-representation:"]
    lines += mv.text_lines()
    lines.append(f"total dim {result['dimension']} "
                 f"(formula {result['dimension_formula']}: "
                 + ("ok" if result["dimension_check"] else "MISMATCH") + ")")
    return EXIT_OK, result, lines


def cmd_stability(args, config):
    report = stability_scan(args.k, args.g, n_max=args.N, max_n=config.cap(args.g),
                            threads=config.threads, cache_dir=config.cache_dir)
    result = report.to_json()
    lines = [f"stability scan: k={args.k}, group {args.g}, "
             f"n = {report.n_min}..{report.n_max}"]
    for n in sorted(report.vectors):
        mv = report.vectors[n]
        stable = ", ".join(
            f"{_fmt_name(mv.kind, name)} x{m}"
            for name, m in sorted(mv.stable().items(), key=_stable_sort_key)
        )
        lines.append(f"  n={n}: {stable if stable else '(zero)'}")
    if report.stable_from is None:
        lines.append("no stabilization detected in range")
    else:
        lines.append(f"stable from n = {report.stable_from} (bound 4k = {report.bound})")
    if report.provisional:
        lines.append("provisional: scan shorter than the 4k bound")
    return EXIT_OK, result, lines


def _stable_sort_key(item):
    name = item[0]
    if name and isinstance(name[0], tuple):
        return (sum(name[0]) + sum(name[1]), name)
    return (sum(name), name)


def _fmt_name(kind, name):
    from .partitions import format_stable

    return format_stable(kind, name)


def cmd_invariants(args, config):
    n = args.n
    degrees = [args.k] if args.k is not None else list(range(0, n))
    values = {}
    for k in degrees:
        values[k] = trivial_multiplicity(n, k, args.g, max_n=config.cap(args.g),
                                         threads=config.threads)
    result = {
        "kind": normalize_kind(args.g),
        "n": n,
        "multiplicities": [{"k": k, "trivial_multiplicity": values[k]}
                           for k in degrees],
    }
    lines = [f"trivial {args.g} multiplicities in H^k(PSigma_{n}; Q):"]
    for k in degrees:
        lines.append(f"  k={k}: {values[k]}")
    return EXIT_OK, result, lines


def cmd_oracle(args, config):
    n, k = args.n, args.k
    max_n = config.max_n if config.max_n is not None else DEFAULT_ORACLE_MAX_N
    rank = quotient_rank(n, k, max_n=max_n, max_k=DEFAULT_ORACLE_MAX_K)
    formula = forest_count(n, k)
    basis_ok = verify_forest_basis(n, k, max_n=max_n, max_k=DEFAULT_ORACLE_MAX_K)
    result = {
        "n": n,
        "k": k,
        "quotient_rank": rank,
        "formula": formula,
        "rank_matches": rank == formula,
        "forest_basis": basis_ok,
    }
    lines = [
        f"presentation rank at (n={n}, k={k}): {rank} "
        f"(formula {formula}: " + ("ok" if rank == formula else "MISMATCH") + ")",
        "forest monomials are a basis" if basis_ok else "forest monomials are NOT a basis",
    ]
    code = EXIT_OK if (rank == formula and basis_ok) else EXIT_CHECK_FAILED
    return code, result, lines


def cmd_character(args, config):
    cf = cohomology_character(args.n, args.k, kind=args.g, max_n=config.cap(args.g),
                              threads=config.threads)
    table = class_table(args.g, args.n, max_n=config.cap(args.g))
    result = {
        "kind": normalize_kind(args.g),
        "n": args.n,
        "k": args.k,
        "values": [
            {"class": _class_to_json(args.g, c.label), "z": c.z, "value": v}
            for c, v in zip(table, cf.values)
        ],
    }
    lines = [f"character of H^{args.k}(PSigma_{args.n}; Q) on {args.g} classes:"]
    for c, v in zip(table, cf.values):
        lines.append(f"  {format_label(args.g, c.label):24s} z={c.z:<8d} {v}")
    return EXIT_OK, result, lines


def _class_to_json(kind, label):
    if normalize_kind(kind) == "Sn":
        return list(label)
    return [list(label[0]), list(label[1])]


def cmd_verify_paper(args, config):
    caps = VerifyCaps(threads=config.threads, cache_dir=config.cache_dir)
    if config.max_n is not None:
        caps.wn_max_n = min(caps.wn_max_n, config.max_n)
        caps.sn_max_n = min(caps.sn_max_n, config.max_n)
        caps.count_max_n = min(caps.count_max_n, config.max_n)
        caps.involution_max_n = min(caps.involution_max_n, config.max_n)
        caps.pieri_max_n = min(caps.pieri_max_n, config.max_n)
    lines = []
    ok, results = run_verification(caps, out=lines.append)
    lines.append("all criteria passed" if ok else "SOME CRITERIA FAILED")
    result = {"ok": ok, "criteria": results}
    return (EXIT_OK if ok else EXIT_CHECK_FAILED), result, lines


HANDLERS = {
    "dim": cmd_dim,
    "decompose": cmd_decompose,
    "stability": cmd_stability,
    "invariants": cmd_invariants,
    "oracle": cmd_oracle,
    "character": cmd_character,
    "verify-paper": cmd_verify_paper,
}


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    config = RunConfig(
        format=args.format,
        cache_dir=args.cache_dir if args.cache_dir is not None else default_cache_dir(),
        threads=max(1, args.threads),
        max_n=args.max_n,
    )
    try:
        code, result, lines = HANDLERS[args.command](args, config)
    except ResourceLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except ConsistencyError as exc:
        print(f"internal consistency error: {exc}", file=sys.stderr)
        return EXIT_CONSISTENCY
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ARGUMENT

    if config.format == "json":
        document = {
            "command": args.command,
            "generated_at": datetime.now(timezone.utc).isoformat(),
            "result": result,
        }
        print(json.dumps(document, sort_keys=True, separators=(",", ":")))
    else:
        for line in lines:
            print(line)
    return code


if __name__ == "__main__":
    sys.exit(main())
