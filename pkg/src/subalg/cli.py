"""Command-line interface.

Subcommands: construct, verify, length, centralizer, sweep.  Every command
writes one JSON document (sorted keys, trailing newline) to --out or
stdout.  Exit codes: 0 when all verdicts pass, 1 when a verdict fails,
2 on usage errors or malformed input.  The elapsed_ms field is wall-clock
and informational; everything else is deterministic for a given input,
field, and seed.
"""

from __future__ import annotations

import argparse
import sys
import time
from concurrent.futures import ProcessPoolExecutor

from .commute import centralizer, is_commutative
from .constructions import (
    BkmParams,
    ConstructionParams,
    build_bkm,
    build_bkml,
    valid_bkm_params,
    valid_bkml_params,
    witness_system,
    witness_system_bkm,
)
from .errors import (
    BudgetExceeded,
    InvalidGeneratorFile,
    InvalidParams,
    NotLocalForm,
    SubalgError,
)
from .exact_linalg import field_from_name, span_of
from .jsonio import dumps, load_system, matrix_entries, system_to_dict
from .lengths import (
    algebra_closure,
    enumerate_words,
    length_of_system,
    li_chain,
    li_chain_spans,
    sample_generating_systems,
)
from .radical import radical_power_dims, radical_span


def _field_arg(s: str):
    try:
        return field_from_name(s)
    except InvalidParams as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _positive_int(s: str) -> int:
    try:
        v = int(s)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {s!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1: {s}")
    return v


def _range_arg(s: str) -> tuple:
    """Accepts "8", "6..10", or "1,3,5"; returns a sorted tuple of ints."""
    try:
        if ".." in s:
            lo, hi = s.split("..", 1)
            lo, hi = int(lo), int(hi)
            if hi < lo:
                raise ValueError
            return tuple(range(lo, hi + 1))
        if "," in s:
            return tuple(sorted({int(part) for part in s.split(",")}))
        return (int(s),)
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"bad range {s!r}: use N, LO..HI, or A,B,C"
        ) from None


def _emit(text: str, out_path: str | None) -> None:
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _fail2(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return 2


def _params_dict(params) -> dict:
    if isinstance(params, ConstructionParams):
        return {"n": params.n, "m": params.m, "l": params.l, "k": params.k}
    return {"n": params.n, "m": params.m, "k": params.k}


def _build_family(family: str, params, field):
    if family == "bkml":
        return build_bkml(params, field), witness_system(params, field)
    return build_bkm(params, field), witness_system_bkm(params, field)


def _family_report(
    family: str, params_dict: dict, field_name: str, samples: int, seed: int
) -> dict:
    """Full verification report for one construction; pure and picklable."""
    field = field_from_name(field_name)
    params = (
        ConstructionParams(**params_dict)
        if family == "bkml"
        else BkmParams(**params_dict)
    )
    t0 = time.perf_counter()
    gens, witness = _build_family(family, params, field)
    closure = algebra_closure(gens)
    commutes, _ = is_commutative(gens.matrices)
    cent = centralizer(gens.matrices)
    maximal = commutes and cent == closure
    witness_report = li_chain(witness, target=closure)
    certified = params.k + 1
    radical = radical_span(closure)
    power_dims = radical_power_dims(radical)
    nilpotency = len(power_dims)
    bound_holds = (
        witness_report.length is not None
        and witness_report.length <= nilpotency - 1
    )
    report = {
        "family": family,
        "params": dict(params_dict),
        "field": field_name,
        "algebra_dimension": closure.dim,
        "commutative": commutes,
        "maximal": maximal,
        "centralizer_dimension": cent.dim,
        "length_certified": certified,
        "witness_length": witness_report.length,
        "witness_chain_dims": list(witness_report.dims),
        "radical_nilpotency": nilpotency,
        "bound_holds": bound_holds,
        "samples": None,
    }
    samples_ok = True
    if samples > 0:
        systems = sample_generating_systems(closure, samples, seed)
        lengths = [length_of_system(s, closure) for s in systems]
        samples_ok = all(v <= nilpotency - 1 for v in lengths)
        report["samples"] = {
            "count": samples,
            "seed": seed,
            "lengths": lengths,
            "all_within_bound": samples_ok,
        }
    report["pass"] = bool(
        commutes
        and maximal
        and witness_report.length == certified
        and bound_holds
        and samples_ok
    )
    report["elapsed_ms"] = int((time.perf_counter() - t0) * 1000)
    return report


def _file_report(path: str, samples: int, seed: int) -> dict:
    """Verification report for a generator-set file; no certified length."""
    system = load_system(path)
    t0 = time.perf_counter()
    closure = algebra_closure(system)
    commutes, _ = is_commutative(system.matrices)
    cent = centralizer(system.matrices)
    maximal = commutes and cent == closure
    own_report = li_chain(system, target=closure)
    try:
        radical = radical_span(closure)
        power_dims = radical_power_dims(radical)
        nilpotency = len(power_dims)
        bound_holds = own_report.length <= nilpotency - 1
    except NotLocalForm:
        nilpotency = None
        bound_holds = None
    report = {
        "family": None,
        "params": None,
        "field": system.field.name,
        "algebra_dimension": closure.dim,
        "commutative": commutes,
        "maximal": maximal,
        "centralizer_dimension": cent.dim,
        "length_certified": None,
        "witness_length": own_report.length,
        "witness_chain_dims": list(own_report.dims),
        "radical_nilpotency": nilpotency,
        "bound_holds": bound_holds,
        "samples": None,
    }
    samples_ok = True
    if samples > 0 and maximal and nilpotency is not None:
        systems = sample_generating_systems(closure, samples, seed)
        lengths = [length_of_system(s, closure) for s in systems]
        samples_ok = all(v <= nilpotency - 1 for v in lengths)
        report["samples"] = {
            "count": samples,
            "seed": seed,
            "lengths": lengths,
            "all_within_bound": samples_ok,
        }
    report["pass"] = bool(
        commutes and maximal and bound_holds is not False and samples_ok
    )
    report["elapsed_ms"] = int((time.perf_counter() - t0) * 1000)
    return report


def _require_family_args(args) -> object:
    if args.family == "bkml":
        if args.m is None or args.l is None or args.k is None:
            raise InvalidParams("family bkml needs --m, --l, and --k")
        return ConstructionParams(args.n, args.m, args.l, args.k)
    if args.l is not None:
        raise InvalidParams("family bkm takes no --l")
    if args.m is None or args.k is None:
        raise InvalidParams("family bkm needs --m and --k")
    return BkmParams(args.n, args.m, args.k)


def cmd_construct(args) -> int:
    params = _require_family_args(args)
    gens, _ = _build_family(args.family, params, args.field)
    _emit(dumps(system_to_dict(gens)), args.out)
    return 0


def cmd_verify(args) -> int:
    if args.infile:
        report = _file_report(args.infile, args.samples, args.seed)
    else:
        if args.n is None:
            raise InvalidParams("verify needs either --in or family parameters")
        params = _require_family_args(args)
        report = _family_report(
            args.family,
            _params_dict(params),
            args.field.name,
            args.samples,
            args.seed,
        )
    _emit(dumps(report), args.out)
    return 0 if report["pass"] else 1


def cmd_length(args) -> int:
    system = load_system(args.infile)
    report = li_chain(system)
    doc = {
        "labels": list(system.labels),
        "admit_empty_word": system.admit_empty_word,
        "field": system.field.name,
        "n": system.n,
        "dims": list(report.dims),
        "stabilization_step": report.stabilization_step,
        "length": report.length,
        "target_dimension": report.target_dim,
    }
    if args.check_words:
        spans = li_chain_spans(system)
        for i, span in enumerate(spans):
            words = enumerate_words(system, i, budget=args.word_budget)
            oracle = span_of(words, n=system.n, field=system.field)
            if oracle != span:
                doc["word_oracle"] = f"mismatch at step {i}"
                _emit(dumps(doc), args.out)
                return 1
        doc["word_oracle"] = "verified"
    _emit(dumps(doc), args.out)
    return 0


def cmd_centralizer(args) -> int:
    if args.infile:
        system = load_system(args.infile)
    else:
        if args.n is None:
            raise InvalidParams(
                "centralizer needs either --in or family parameters"
            )
        params = _require_family_args(args)
        system, _ = _build_family(args.family, params, args.field)
    cent = centralizer(system.matrices)
    basis = [
        {"label": f"c{idx + 1}", "entries": matrix_entries(m)}
        for idx, m in enumerate(cent.basis_matrices())
    ]
    doc = {
        "n": system.n,
        "field": system.field.name,
        "dimension": cent.dim,
        "basis": basis,
    }
    _emit(dumps(doc), args.out)
    return 0


def _sweep_task(task) -> dict:
    family, params_dict, field_name, samples, seed = task
    return _family_report(family, params_dict, field_name, samples, seed)


def cmd_sweep(args) -> int:
    explicit_all = (
        args.m is not None
        and args.k is not None
        and (args.family == "bkm" or args.l is not None)
    )
    selected = []
    skipped = []
    for n in args.n:
        if explicit_all:
            if args.family == "bkml":
                combos = [
                    (n, m, l, k) for m in args.m for l in args.l for k in args.k
                ]
                for n_, m, l, k in combos:
                    try:
                        selected.append(ConstructionParams(n_, m, l, k))
                    except InvalidParams as exc:
                        skipped.append(
                            {
                                "params": {"n": n_, "m": m, "l": l, "k": k},
                                "reason": str(exc),
                            }
                        )
            else:
                for m in args.m:
                    for k in args.k:
                        try:
                            selected.append(BkmParams(n, m, k))
                        except InvalidParams as exc:
                            skipped.append(
                                {
                                    "params": {"n": n, "m": m, "k": k},
                                    "reason": str(exc),
                                }
                            )
        else:
            pool = (
                valid_bkml_params(n)
                if args.family == "bkml"
                else valid_bkm_params(n)
            )
            for params in pool:
                if args.m is not None and params.m not in args.m:
                    continue
                if args.k is not None and params.k not in args.k:
                    continue
                if args.family == "bkml" and args.l is not None and params.l not in args.l:
                    continue
                selected.append(params)
    if not selected:
        return _fail2("sweep selected no valid parameter tuples")
    key = (
        (lambda p: (p.n, p.m, p.l, p.k))
        if args.family == "bkml"
        else (lambda p: (p.n, p.m, p.k))
    )
    selected.sort(key=key)
    tasks = [
        (args.family, _params_dict(p), args.field.name, args.samples, args.seed)
        for p in selected
    ]
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            reports = list(pool.map(_sweep_task, tasks))
    else:
        reports = [_sweep_task(t) for t in tasks]
    passed = sum(1 for r in reports if r["pass"])
    failed = len(reports) - passed
    doc = {
        "family": args.family,
        "field": args.field.name,
        "reports": reports,
        "skipped": skipped,
        "summary": {"pass": passed, "fail": failed, "skipped": len(skipped)},
    }
    _emit(dumps(doc), args.out)
    print(
        f"sweep: pass {passed} fail {failed} skipped {len(skipped)}",
        file=sys.stderr,
    )
    return 0 if failed == 0 else 1


def _add_family_args(parser, include_field=True) -> None:
    parser.add_argument("--family", choices=("bkml", "bkm"), default="bkml")
    parser.add_argument("--n", type=_positive_int)
    parser.add_argument("--m", type=_positive_int)
    parser.add_argument("--l", type=_positive_int)
    parser.add_argument("--k", type=_positive_int)
    if include_field:
        parser.add_argument(
            "--field",
            type=_field_arg,
            default=field_from_name("rational"),
            help='scalar field: "rational" or "gf:<prime>"',
        )


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="subalg",
        description=(
            "Construct maximal commutative matrix subalgebras, verify them, "
            "and measure lengths of generating systems."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="write a generator-set file")
    _add_family_args(p)
    p.add_argument("--out", help="output path (default: stdout)")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="full verdict for a family or a file")
    p.add_argument("--in", dest="infile", help="generator-set file")
    _add_family_args(p)
    p.add_argument("--samples", type=int, default=25)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("length", help="span-chain report for a file")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument(
        "--check-words",
        action="store_true",
        help="cross-check every chain step against brute-force word spans",
    )
    p.add_argument("--word-budget", type=int, default=1_000_000)
    p.add_argument("--out")
    p.set_defaults(func=cmd_length)

    p = sub.add_parser("centralizer", help="dump a centralizer basis")
    p.add_argument("--in", dest="infile")
    _add_family_args(p)
    p.add_argument("--out")
    p.set_defaults(func=cmd_centralizer)

    p = sub.add_parser("sweep", help="verify whole parameter grids")
    p.add_argument("--n", type=_range_arg, required=True)
    p.add_argument("--m", type=_range_arg)
    p.add_argument("--l", type=_range_arg)
    p.add_argument("--k", type=_range_arg)
    p.add_argument("--family", choices=("bkml", "bkm"), default="bkml")
    p.add_argument(
        "--field", type=_field_arg, default=field_from_name("rational")
    )
    p.add_argument("--samples", type=int, default=25)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out")
    p.set_defaults(func=cmd_sweep)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except FileNotFoundError as exc:
        return _fail2(f"cannot read {exc.filename}")
    except (InvalidParams, InvalidGeneratorFile, BudgetExceeded) as exc:
        return _fail2(str(exc))
    except SubalgError as exc:
        return _fail2(str(exc))


if __name__ == "__main__":
    sys.exit(main())
