"""Command-line surface.

Subcommands: gen, analyze, cover, capable, sweep, oracle-compare.
Exit codes: 0 ok; 2 usage/parse error; 3 construction failure;
4 Jacobi violation; 5 unexpected mismatch.  GHA_THREADS overrides the sweep
worker count.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import docio, hopf
from .fixtures import canonical_gh, relations_from_pairs
from .liealg import (
    CenterViolation,
    ClassTwoRequired,
    GhSpec,
    LieAlgebra,
    abelian,
    center,
    derived_subalgebra,
    direct_sum,
    gh_construct,
    heisenberg,
    jacobi_check,
    nilpotency_class,
)
from .multiplier import capability_by_quotients
from .report import analyze
from .sweep import SweepConfig, run_sweep, sweep_exit_code


def _parse_range(text: str) -> list[int]:
    if ".." in text:
        lo, hi = text.split("..", 1)
        return list(range(int(lo), int(hi) + 1))
    return [int(x) for x in text.split(",") if x]


def _emit(doc: dict, path: str | None) -> None:
    payload = docio.dumps(doc)
    if path:
        with open(path, "w", encoding="utf-8") as f:
            f.write(payload)
    else:
        sys.stdout.write(payload)


def _status(a: LieAlgebra) -> dict:
    der = derived_subalgebra(a)
    return {
        "dim": a.dim,
        "class": nilpotency_class(a),
        "dim_derived": der.dim,
        "center_equals_derived": center(a) == der,
    }


def _load(path: str) -> tuple[LieAlgebra, dict]:
    a, meta = docio.read_document(path)
    return a, meta


def _require_jacobi(a: LieAlgebra) -> None:
    bad = jacobi_check(a)
    if bad:
        raise _JacobiViolation(bad)


class _JacobiViolation(Exception):
    def __init__(self, triples):
        super().__init__(f"Jacobi identity fails on triples {triples[:5]}")
        self.triples = triples


def _parse_kill(text: str) -> list[tuple[int, int]]:
    pairs = []
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        i, j = (int(x) for x in chunk.split(","))
        pairs.append((min(i, j) - 1, max(i, j) - 1))
    return pairs


def _build_gh(args) -> tuple[LieAlgebra, dict]:
    d = args.d
    if d is None:
        raise docio.DocumentError("--d is required for the gh family")
    max_rank = d * (d - 1) // 2
    if args.rank is not None:
        rank = args.rank
    elif args.defect is not None:
        rank = max_rank - args.defect
    else:
        raise docio.DocumentError("need --rank or --defect")
    defect = max_rank - rank
    meta = {"family": "gh", "d": d, "rank": rank, "defect": defect}
    if args.kill:
        rel = relations_from_pairs(d, _parse_kill(args.kill))
        a = gh_construct(GhSpec(d=d, rank=rank, relation_subspace=rel))
        meta["relations"] = args.kill
    elif args.canonical:
        a = canonical_gh(d, defect, args.variant)
        meta["variant"] = args.variant
        meta["canonical"] = True
    else:
        a = gh_construct(GhSpec(d=d, rank=rank, seed=args.seed))
        meta["seed"] = args.seed
    meta["gh"] = center(a) == derived_subalgebra(a)
    return a, meta


def cmd_gen(args) -> int:
    if args.family == "abelian":
        if args.n is None:
            raise docio.DocumentError("--n is required for the abelian family")
        a, meta = abelian(args.n), {"family": "abelian", "n": args.n}
    elif args.family == "heisenberg":
        if args.m is None:
            raise docio.DocumentError("--m is required for the heisenberg family")
        a, meta = heisenberg(args.m), {"family": "heisenberg", "m": args.m}
    elif args.family == "gh":
        a, meta = _build_gh(args)
    elif args.family == "sum":
        core, meta = _build_gh(args)
        t = args.t or 0
        a = direct_sum(core, abelian(t))
        meta = dict(meta, family="sum", t=t)
    else:  # pragma: no cover - argparse restricts choices
        raise docio.DocumentError(f"unknown family {args.family}")
    _emit(docio.algebra_to_document(a, meta), args.out)
    status = _status(a)
    out = sys.stdout if args.out else sys.stderr
    if args.json:
        print(json.dumps(status), file=out)
    else:
        print(
            f"dim={status['dim']} class={status['class']} "
            f"dimL2={status['dim_derived']} Z=L2: {status['center_equals_derived']}",
            file=out,
        )
    return 0


def cmd_analyze(args) -> int:
    a, meta = _load(args.path)
    _require_jacobi(a)
    rep = analyze(
        a,
        d=meta.get("d"),
        defect=meta.get("defect"),
        t=meta.get("t"),
        variant=meta.get("variant"),
        with_oracle=args.oracle,
        include_suspect=not args.skip_suspect_forms,
        provenance=meta.get("family", ""),
    )
    print(json.dumps(rep.to_dict(), indent=2))
    return 0 if rep.match else 5


def cmd_cover(args) -> int:
    a, meta = _load(args.path)
    _require_jacobi(a)
    pres = hopf.presentation_from_class2(a)
    cov = hopf.cover_construct(pres)
    rep = hopf.verify_cover(pres.target, cov.algebra, cov.central_ideal)
    b_rows = [
        {str(c): docio.rational_str(x) for c, x in sorted(v.items())}
        for v in cov.central_ideal.vectors()
    ]
    out_meta = dict(meta, B=b_rows, cover_of=meta.get("family", ""))
    _emit(docio.algebra_to_document(cov.algebra, out_meta), args.out)
    report = {
        "cover_dim": rep.cover_dim,
        "expected_dim": rep.expected_dim,
        "class": rep.nilpotency_class,
        "z_in_derived": rep.z_in_derived,
        "b_central": rep.b_central,
        "b_in_derived": rep.b_in_derived,
        "b_dim": rep.b_dim,
        "multiplier": rep.multiplier,
        "quotient_matches": rep.quotient_matches,
        "cube_dim": rep.cube_dim,
        "s": rep.s,
        "defect": rep.defect,
        "branch_ok": rep.branch_ok,
        "witness_ok": rep.witness_ok,
        "ok": rep.ok,
    }
    stream = sys.stdout if args.out else sys.stderr
    print(json.dumps(report, indent=2), file=stream)
    return 0 if rep.ok else 5


def cmd_capable(args) -> int:
    a, _ = _load(args.path)
    _require_jacobi(a)
    rep = capability_by_quotients(a, random_lines=args.random_lines, seed=args.seed or 0)
    print(json.dumps({
        "capable": rep.capable,
        "exterior_center_dim": rep.exterior_center_dim,
        "multiplier": rep.multiplier,
        "evidence": [
            {
                "line": {str(c): docio.rational_str(x) for c, x in sorted(e.line.items())},
                "quotient_multiplier": e.quotient_multiplier,
                "strict_drop": e.strict_drop,
            }
            for e in rep.evidence
        ],
        "all_quotients_drop": rep.all_quotients_drop,
    }, indent=2))
    return 0


def cmd_sweep(args) -> int:
    cfg = SweepConfig(
        d_values=tuple(_parse_range(args.d)),
        defects=tuple(_parse_range(args.defect)),
        t_values=tuple(_parse_range(args.t)),
        seeds=args.seeds,
        include_suspect=not args.skip_suspect_forms,
        with_oracle=not args.no_oracle,
        max_cases=args.max_cases,
        jobs=args.jobs,
    )
    report = run_sweep(cfg)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as f:
            json.dump(report, f, indent=2, sort_keys=True)
            f.write("\n")
    summary = report["summary"]
    if args.json:
        print(json.dumps(summary))
    else:
        print(
            f"cases={summary['cases']} matching={summary['rows_matching']} "
            f"expected_mismatches={summary['expected_mismatches']} "
            f"unexpected={summary['unexpected_mismatches']}"
        )
    return sweep_exit_code(report)


def cmd_oracle_compare(args) -> int:
    a, _ = _load(args.path)
    _require_jacobi(a)
    rep = analyze(a, with_oracle=True)
    formula = {k: rep.dims[k] for k in ("m_L", "wedge")}
    oracle = {k: rep.oracle[k] for k in ("m_L", "wedge")}
    agree = formula == oracle and rep.oracle.get("ker_beta_matches", True)
    print(json.dumps({
        "formula": formula,
        "oracle": oracle,
        "ker_beta_matches": rep.oracle.get("ker_beta_matches"),
        "agree": agree,
    }, indent=2))
    return 0 if agree else 5


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ghlie",
        description="Schur multipliers, exterior/tensor squares, capability and "
        "covers of class-2 nilpotent Lie algebras over Q.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="construct an algebra and write its document")
    gen.add_argument("--family", required=True, choices=["gh", "abelian", "heisenberg", "sum"])
    gen.add_argument("--d", type=int)
    gen.add_argument("--rank", type=int)
    gen.add_argument("--defect", type=int)
    gen.add_argument("--n", type=int, help="dimension for --family abelian")
    gen.add_argument("--m", type=int, help="index for --family heisenberg")
    gen.add_argument("--t", type=int, help="abelian summand dimension for --family sum")
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--canonical", action="store_true")
    gen.add_argument("--variant", choices=["generic", "deficient"], default="generic")
    gen.add_argument("--kill", help="explicit relations, e.g. '1,2;3,4' (1-based pairs)")
    gen.add_argument("--out")
    gen.add_argument("--json", action="store_true")
    gen.set_defaults(func=cmd_gen)

    an = sub.add_parser("analyze", help="dimension report for a document")
    an.add_argument("path")
    an.add_argument("--oracle", action="store_true")
    an.add_argument("--skip-suspect-forms", action="store_true")
    an.add_argument("--json", action="store_true")
    an.set_defaults(func=cmd_analyze)

    cov = sub.add_parser("cover", help="construct and verify the cover")
    cov.add_argument("path")
    cov.add_argument("--out")
    cov.add_argument("--json", action="store_true")
    cov.set_defaults(func=cmd_cover)

    cap = sub.add_parser("capable", help="capability verdict with quotient evidence")
    cap.add_argument("path")
    cap.add_argument("--random-lines", type=int, default=4)
    cap.add_argument("--seed", type=int, default=0)
    cap.add_argument("--json", action="store_true")
    cap.set_defaults(func=cmd_capable)

    sw = sub.add_parser("sweep", help="grid sweep against the printed formulas")
    sw.add_argument("--d", default="3..6")
    sw.add_argument("--defect", default="1..3")
    sw.add_argument("--t", default="0..2")
    sw.add_argument("--seeds", type=int, default=5)
    sw.add_argument("--out")
    sw.add_argument("--jobs", type=int)
    sw.add_argument("--max-cases", type=int, default=5000)
    sw.add_argument("--no-oracle", action="store_true")
    sw.add_argument(
        "--include-printed-j2", action="store_true",
        help="compare the suspect printed forms too (already the default)",
    )
    sw.add_argument(
        "--skip-suspect-forms", action="store_true",
        help="drop the ledgered suspect printed forms from comparison",
    )
    sw.add_argument("--json", action="store_true")
    sw.set_defaults(func=cmd_sweep)

    oc = sub.add_parser("oracle-compare", help="formula route vs Hopf oracle")
    oc.add_argument("path")
    oc.add_argument("--json", action="store_true")
    oc.set_defaults(func=cmd_oracle_compare)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except docio.DocumentError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except FileNotFoundError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except ClassTwoRequired as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except CenterViolation as e:
        print(f"error: {e}", file=sys.stderr)
        return 3
    except _JacobiViolation as e:
        print(f"error: {e}", file=sys.stderr)
        return 4
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
