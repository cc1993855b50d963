"""Command-line front end.

Subcommands expose pair enumeration, Laurent-coefficient assembly, matrix
elements and the identity verification suite, with json, text and latex
output.  Exit codes: 0 success, 1 a verification identity failed, 2 usage
or configuration error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .combinatorics import Cutoffs, enumerate_pq
from .expansion import elementary_schur, matrix_element_closed, schur_terms
from .fock import BasisConfig, OneParticleVector
from . import serialize as ser
from .verify import run_suite


def _dumps(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _load_json_arg(value: str, what: str):
    """Accept inline JSON or a path to a JSON file."""
    text = value.strip()
    if not text.startswith("{"):
        try:
            text = Path(value).read_text()
        except OSError as exc:
            raise ValueError(f"cannot read {what} file {value!r}: {exc}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"malformed {what} JSON: {exc}") from exc


def _parse_cutoffs(args) -> Cutoffs:
    return Cutoffs(K=args.modes, M=args.order, D=args.degree)


def _parse_basis(args, K: int) -> BasisConfig:
    if args.basis is None:
        return BasisConfig.identity(K)
    config = ser.basis_from_json(_load_json_arg(args.basis, "basis"))
    if config.K != K:
        raise ValueError(f"basis declares {config.K} modes but --modes is {K}")
    return config


def _parse_vector(value, K: int, name: str) -> OneParticleVector:
    if value is None:
        return OneParticleVector.zero()
    vector, _ = ser.vector_from_json(_load_json_arg(value, name))
    if vector.max_mode() > K:
        raise ValueError(
            f"{name} uses mode {vector.max_mode()} outside the {K}-mode basis"
        )
    return vector


def _add_common(parser, with_order=True, with_degree=True):
    parser.add_argument("--modes", type=int, default=2, help="mode cutoff K")
    if with_degree:
        parser.add_argument("--degree", type=int, default=3, help="degree cutoff D")
    if with_order:
        parser.add_argument("--order", type=int, default=4, help="order cutoff M")
    parser.add_argument(
        "--basis", help="basis matrices as inline JSON or a file path (default identity)"
    )
    parser.add_argument(
        "--format", choices=("json", "text", "latex"), default="text", dest="fmt"
    )
    parser.add_argument("--output", help="write to this file instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fockschur",
        description="Exact Laurent coefficients of vertex operators on a "
        "truncated bosonic mode algebra.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("schur-terms", help="emit one Laurent coefficient operator")
    p.add_argument("--w", type=int, required=True, help="Laurent weight")
    _add_common(p)

    p = sub.add_parser("enumerate", help="list exponent pairs of one (m, w) class")
    p.add_argument("--m", type=int, required=True, help="total degree")
    p.add_argument("--w", type=int, required=True, help="net weight")
    _add_common(p, with_order=False, with_degree=False)

    p = sub.add_parser(
        "matrix-element",
        help="coherent matrix element as a Laurent polynomial "
        "(with the truncated exponential prefactor, flagged in the output)",
    )
    p.add_argument("--u", help="left vector as JSON or a file path (default zero)")
    p.add_argument("--v", help="right vector as JSON or a file path (default zero)")
    _add_common(p)

    p = sub.add_parser("elementary-schur", help="classical Schur polynomial S_m")
    p.add_argument("--m", type=int, required=True, help="target weight")
    _add_common(p, with_order=False, with_degree=False)

    p = sub.add_parser("verify", help="run the exact identity suite")
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--trials", type=int, default=5)
    p.add_argument("--modes", type=int, default=2, help="mode cutoff K")
    p.add_argument("--degree", type=int, default=3, help="degree cutoff D")
    p.add_argument("--order", type=int, default=4, help="order cutoff M")
    p.add_argument("--basis", help="basis matrices as inline JSON or a file path")
    p.add_argument("--format", choices=("json", "text"), default="text", dest="fmt")
    p.add_argument("--output", help="write to this file instead of stdout")

    return parser


def cmd_schur_terms(args) -> tuple[str, int]:
    cutoffs = _parse_cutoffs(args)
    _parse_basis(args, cutoffs.K)  # validated even though assembly is basis-free
    op = schur_terms(args.w, cutoffs)
    if args.fmt == "json":
        return _dumps(ser.schur_operator_to_json(op)), 0
    if args.fmt == "latex":
        return ser.schur_operator_latex(op), 0
    return ser.schur_operator_text(op), 0


def cmd_enumerate(args) -> tuple[str, int]:
    pairs = enumerate_pq(args.m, args.w, args.modes)
    if args.fmt == "json":
        body = {
            "m": args.m,
            "w": args.w,
            "modes": args.modes,
            "count": len(pairs),
            "pairs": [ser.pair_to_json(pair) for pair in pairs],
        }
        return _dumps(body), 0
    if args.fmt == "latex":
        return "\n".join(ser.pair_latex(pair) for pair in pairs), 0
    return "\n".join(ser.pair_text(pair) for pair in pairs), 0


def cmd_matrix_element(args) -> tuple[str, int]:
    cutoffs = _parse_cutoffs(args)
    config = _parse_basis(args, cutoffs.K)
    u = _parse_vector(args.u, cutoffs.K, "u")
    v = _parse_vector(args.v, cutoffs.K, "v")
    slice_ = matrix_element_closed(u, v, config, cutoffs)
    if args.fmt == "json":
        body = ser.laurent_to_json(slice_)
        body["prefactor"] = {
            "form": "exp-partial-sum",
            "order": cutoffs.M,
            "inner": ser.scalar_to_json(u.inner(v)),
        }
        return _dumps(body), 0
    rendered = (
        ser.laurent_latex(slice_) if args.fmt == "latex" else ser.laurent_text(slice_)
    )
    note = (
        f"prefactor: exp partial sum of <u,v> = {u.inner(v)} "
        f"at order {cutoffs.M}"
    )
    return f"{rendered}\n{note}", 0


def cmd_elementary_schur(args) -> tuple[str, int]:
    poly = elementary_schur(args.m, args.modes)
    if args.fmt == "json":
        return _dumps(ser.polynomial_to_json(poly, "x")), 0
    if args.fmt == "latex":
        return ser.polynomial_latex(poly, "x"), 0
    return ser.polynomial_text(poly, "x"), 0


def cmd_verify(args) -> tuple[str, int]:
    if args.trials < 1:
        raise ValueError(f"trials must be >= 1, got {args.trials}")
    cutoffs = _parse_cutoffs(args)
    config = _parse_basis(args, cutoffs.K)
    results = run_suite(cutoffs, seed=args.seed, trials=args.trials, config=config)
    passed = all(r.passed for r in results)
    if args.fmt == "json":
        body = {
            "seed": args.seed,
            "trials": args.trials,
            "cutoffs": ser.cutoffs_to_json(cutoffs),
            "checks": [
                {
                    "name": r.name,
                    "passed": r.passed,
                    "trials": r.trials,
                    "counterexample": r.counterexample,
                }
                for r in results
            ],
            "passed": passed,
        }
        return _dumps(body), 0 if passed else 1
    lines = []
    for r in results:
        if r.passed:
            lines.append(f"PASS {r.name} trials={r.trials}")
        else:
            lines.append(f"FAIL {r.name} trials={r.trials}")
            lines.append(f"  counterexample: {_dumps(r.counterexample)}")
    good = sum(r.passed for r in results)
    lines.append(f"RESULT {'pass' if passed else 'fail'} ({good}/{len(results)} identities)")
    return "\n".join(lines), 0 if passed else 1


_HANDLERS = {
    "schur-terms": cmd_schur_terms,
    "enumerate": cmd_enumerate,
    "matrix-element": cmd_matrix_element,
    "elementary-schur": cmd_elementary_schur,
    "verify": cmd_verify,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        text, code = _HANDLERS[args.command](args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.output:
        Path(args.output).write_text(text + "\n")
    else:
        print(text)
    return code
