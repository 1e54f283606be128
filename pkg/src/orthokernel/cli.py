"""Command-line surface: property suites, witnesses, reconstruction, demos.

Exit codes: 0 all checks pass, 1 a violation or disagreement was found,
2 malformed input.  The master seed comes from --seed, then the
ORTHOKERNEL_SEED environment variable, then 0; every run is a pure
function of (flags, seed), so reports are byte-stable.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path
from typing import Optional, Sequence

from .errors import GenerationError, InputError, UnsatisfiableParams
from .generators import (
    GenConfig,
    gen_line_pair,
    gen_pair_with_meet_dim,
    space_of,
    trial_rng,
)
from .linalg import matrix_to_wire
from .ortho import TypedPerpParams, make_perp_pair
from .properties import (
    ALL_PROPERTY_IDS,
    CORE_PROPERTY_IDS,
    PropertyReport,
    default_forms,
    run_suite,
)
from .counterexamples import emit_counterexamples
from .reconstruct import (
    ReconstructionMode,
    ground_truth_oracle,
    lemma1_witness,
    lemma2_witness,
    line_perp_ground_truth,
    reconstruct_line_perp,
)


def _resolve_seed(value: Optional[int]) -> int:
    if value is not None:
        return value
    env = os.environ.get("ORTHOKERNEL_SEED")
    if env is None:
        return 0
    try:
        return int(env)
    except ValueError:
        raise InputError(f"ORTHOKERNEL_SEED is not an integer: {env!r}") from None


def _parse_props(value: str) -> list[str]:
    if value == "all":
        return list(ALL_PROPERTY_IDS)
    if value == "core":
        return list(CORE_PROPERTY_IDS)
    return [p.strip() for p in value.split(",") if p.strip()]


def _parse_forms(value: str) -> list:
    if value == "all":
        return list(default_forms())
    if value in default_forms():
        return [value]
    path = Path(value)
    if path.suffix == ".json" or path.exists():
        try:
            rows = json.loads(path.read_text())
        except (OSError, json.JSONDecodeError) as exc:
            raise InputError(f"cannot read form matrix from {value}: {exc}") from exc
        if not isinstance(rows, list):
            raise InputError("form file must hold a matrix (list of rows)")
        return [tuple(tuple(str(x) for x in row) for row in rows)]
    raise InputError(
        f"unknown form {value!r}: use identity, diag, tridiag, all, or a JSON file"
    )


def _form_config_entry(form) -> object:
    if isinstance(form, str):
        return form
    return [list(row) for row in form]


def _parse_params(args: argparse.Namespace, required: bool) -> Optional[TypedPerpParams]:
    given = [v is not None for v in (args.m, args.k1, args.k2)]
    if not any(given):
        if required:
            raise InputError("--m, --k1, and --k2 are required")
        return None
    if not all(given):
        raise InputError("--m, --k1, and --k2 must be given together")
    return TypedPerpParams(args.m, args.k1, args.k2)


def _write_json(path: str, payload: dict) -> None:
    text = json.dumps(payload, sort_keys=True, indent=2) + "\n"
    Path(path).write_text(text)


def _report_payload(config: dict, reports: Sequence[PropertyReport]) -> dict:
    return {
        "schema": 1,
        "config": config,
        "reports": [r.to_json_dict() for r in reports],
    }


# ---------------------------------------------------------------------------
# subcommands


def _cmd_check(args: argparse.Namespace) -> int:
    seed = _resolve_seed(args.seed)
    props = _parse_props(args.props)
    forms = _parse_forms(args.form)
    params = _parse_params(args, required=False)
    if params is not None and params.k1 > params.k2:
        raise InputError("pinned params need k1 <= k2")
    cfg = GenConfig(
        dim=args.dim,
        seed=seed,
        numerator_bound=args.numerator_bound,
        denominator_bound=args.denominator_bound,
        retries=args.retries,
        perp_params=params,
        sample_count=args.samples,
    )
    reports = run_suite(cfg, props, args.trials, forms, args.jobs)
    total = 0
    for rep in reports:
        total += rep.violations
        line = (
            f"{rep.property_id:16s} form={rep.form:8s} trials={rep.trials}"
            f" violations={rep.violations} [{rep.elapsed_ms} ms]"
        )
        print(line)
    print(f"total violations: {total}")
    if args.json:
        config = {
            "dim": cfg.dim,
            "trials": args.trials,
            "seed": seed,
            "forms": [_form_config_entry(f) for f in forms],
            "props": sorted(set(props)),
            "numerator_bound": cfg.numerator_bound,
            "denominator_bound": cfg.denominator_bound,
            "retries": cfg.retries,
            "sample_count": cfg.sample_count,
        }
        if params is not None:
            config["perp_params"] = {"m": params.m, "k1": params.k1, "k2": params.k2}
        _write_json(args.json, _report_payload(config, reports))
    return 1 if total else 0


def _cmd_witness(args: argparse.Namespace) -> int:
    seed = _resolve_seed(args.seed)
    params = _parse_params(args, required=True)
    if params.k1 > params.k2:
        raise InputError("witness generation needs k1 <= k2")
    cfg = GenConfig(dim=args.dim, seed=seed, perp_params=params)
    space = space_of(cfg)
    payload: dict = {
        "schema": 1,
        "dim": args.dim,
        "params": {"m": params.m, "k1": params.k1, "k2": params.k2},
        "seed": seed,
    }
    items = []
    for i in range(args.count):
        rng = trial_rng(seed, f"witness:{args.lemma or 'pair'}", i)
        if args.lemma is None:
            x1, x2 = make_perp_pair(
                space, params, rng, cfg.numerator_bound, cfg.denominator_bound
            )
            items.append({"x1": x1.to_wire(), "x2": x2.to_wire()})
        elif args.lemma == 1:
            y1, x2 = gen_pair_with_meet_dim(
                cfg, params.k1 - params.m, params.k2, 0, rng
            )
            x1 = lemma1_witness(y1, x2, params.m)
            items.append(
                {"y1": y1.to_wire(), "x2": x2.to_wire(), "x1": x1.to_wire()}
            )
        else:
            if params.k2 < 2:
                raise InputError("the line-wrapping witness needs k2 >= 2")
            l1, l2 = gen_line_pair(cfg, rng, orthogonal=True)
            x1, x2 = lemma2_witness(l1, l2, params.k1 - params.m, params.k2)
            items.append(
                {
                    "l1": l1.to_wire(),
                    "l2": l2.to_wire(),
                    "x1": x1.to_wire(),
                    "x2": x2.to_wire(),
                }
            )
    payload["witnesses"] = items
    print(json.dumps(payload, sort_keys=True, indent=2))
    return 0


def _cmd_reconstruct(args: argparse.Namespace) -> int:
    seed = _resolve_seed(args.seed)
    params = _parse_params(args, required=True)
    if not params.satisfiable_in(args.dim):
        raise InputError(
            f"(m,k1,k2)=({params.m},{params.k1},{params.k2}) is unsatisfiable"
            f" in dimension {args.dim}"
        )
    cfg = GenConfig(
        dim=args.dim, seed=seed, perp_params=params, sample_count=args.samples
    )
    oracle = ground_truth_oracle(params)
    run_sampled = args.mode in ("sampled", "both")
    run_witness = args.mode in ("witness", "both")
    label = f"reconstruct:{params.m}:{params.k1}:{params.k2}"
    agree = 0
    contradictions = 0
    for i in range(args.pairs):
        rng = trial_rng(seed, label, i)
        l1, l2 = gen_line_pair(cfg, rng, orthogonal=(i % 2 == 0))
        truth = line_perp_ground_truth(l1, l2)
        got_w = None
        if run_witness:
            got_w = reconstruct_line_perp(
                l1, l2, params, oracle, ReconstructionMode.witness()
            )
            if got_w == truth:
                agree += 1
        if run_sampled:
            got_s = reconstruct_line_perp(
                l1,
                l2,
                params,
                oracle,
                ReconstructionMode.sampled(args.samples),
                rng,
            )
            reference = got_w if got_w is not None else truth
            if reference and not got_s:
                contradictions += 1
    ok = True
    if run_witness:
        print(
            f"(m,k1,k2)=({params.m},{params.k1},{params.k2}) dim={args.dim}:"
            f" witness agreement {agree}/{args.pairs}"
        )
        ok = ok and agree == args.pairs
    if run_sampled:
        print(
            f"(m,k1,k2)=({params.m},{params.k1},{params.k2}) dim={args.dim}:"
            f" sampled contradictions {contradictions}"
        )
        ok = ok and contradictions == 0
    if args.json:
        payload = {
            "schema": 1,
            "config": {
                "dim": args.dim,
                "pairs": args.pairs,
                "seed": seed,
                "mode": args.mode,
                "samples": args.samples,
                "perp_params": {"m": params.m, "k1": params.k1, "k2": params.k2},
            },
            "witness_agreements": agree if run_witness else None,
            "sampled_contradictions": contradictions if run_sampled else None,
        }
        _write_json(args.json, payload)
    return 0 if ok else 1


def _cmd_counterexample(args: argparse.Namespace) -> int:
    instances = emit_counterexamples()
    payload = {"schema": 1, "instances": instances}
    text = json.dumps(payload, sort_keys=True, indent=2)
    print(text)
    if args.json:
        _write_json(args.json, payload)
    return 0


# ---------------------------------------------------------------------------
# parser


def _add_params(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--m", type=int, default=None, help="meet dimension")
    parser.add_argument("--k1", type=int, default=None, help="first flat dimension")
    parser.add_argument("--k2", type=int, default=None, help="second flat dimension")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="orthokernel",
        description="exact rational orthogonality kernel and property harness",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    check = sub.add_parser("check", help="run randomized property suites")
    check.add_argument("--dim", type=int, required=True)
    check.add_argument("--trials", type=int, default=200)
    check.add_argument("--seed", type=int, default=None)
    check.add_argument(
        "--props",
        default="all",
        help="'all', 'core', or a comma-separated list of property ids",
    )
    check.add_argument(
        "--form",
        default="all",
        help="identity, diag, tridiag, all, or a JSON matrix file",
    )
    check.add_argument("--json", default=None, help="write the report here")
    check.add_argument("--jobs", type=int, default=1)
    check.add_argument("--numerator-bound", type=int, default=9)
    check.add_argument("--denominator-bound", type=int, default=3)
    check.add_argument("--retries", type=int, default=64)
    check.add_argument("--samples", type=int, default=20)
    _add_params(check)
    check.set_defaults(func=_cmd_check)

    witness = sub.add_parser(
        "witness", help="emit typed orthogonal pairs or lemma witnesses"
    )
    witness.add_argument("--dim", type=int, required=True)
    witness.add_argument("--seed", type=int, default=None)
    witness.add_argument("--count", type=int, default=3)
    witness.add_argument(
        "--lemma",
        type=int,
        choices=(1, 2),
        default=None,
        help="emit extension (1) or line-wrapping (2) witnesses",
    )
    _add_params(witness)
    witness.set_defaults(func=_cmd_witness)

    recon = sub.add_parser(
        "reconstruct", help="compare oracle reconstruction against ground truth"
    )
    recon.add_argument("--dim", type=int, required=True)
    recon.add_argument("--pairs", type=int, default=500)
    recon.add_argument("--seed", type=int, default=None)
    recon.add_argument("--mode", choices=("witness", "sampled", "both"), default="both")
    recon.add_argument("--samples", type=int, default=20)
    recon.add_argument("--json", default=None)
    _add_params(recon)
    recon.set_defaults(func=_cmd_reconstruct)

    cex = sub.add_parser(
        "counterexample", help="emit the fixed non-transitivity instances"
    )
    cex.add_argument("--json", default=None)
    cex.set_defaults(func=_cmd_counterexample)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (InputError, UnsatisfiableParams, GenerationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
