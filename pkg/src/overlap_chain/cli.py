"""``overlap-chain`` command line.

Exit status: 0 for YES (or success), 1 for NO, 2 for usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .bench import METHODS, bench, check_plan, to_csv
from .certificate import Certificate, extract_certificate, verify_certificate
from .connectivity import fast_components, paper_components
from .core import InstanceError, build_pseudodigraph, degree_table, parse_instance, render
from .decision import decide
from .generate import GEN_MODES, GeneratorSpec, generate
from .oracle import OracleCapError, oracle_backtrack, oracle_permutations

YES, NO, ERROR = 0, 1, 2


class UsageError(Exception):
    pass


def _int_list(text: str) -> list[int]:
    return [int(x) for x in text.split(",") if x]


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--s", type=int, help="string length (default: header, else first line)")
    common.add_argument("--t", type=int, help="overlap length (default: header, else 1)")
    common.add_argument("--mode", choices=("chars", "tokens"), help="symbol mode (default: header, else chars)")
    common.add_argument("--format", choices=("json", "plain"), default="json")
    common.add_argument("--fidelity", action="store_true",
                        help="set-merging connectivity and augment-and-rotate certificates")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--out", type=Path, help="write output here instead of stdout")

    parser = argparse.ArgumentParser(prog="overlap-chain", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decide", parents=[common], help="decide whether the strings chain")
    p.add_argument("instance", type=Path)
    p.add_argument("--explain", action="store_true", help="include components and degree table")

    p = sub.add_parser("certify", parents=[common], help="print a witness ordering")
    p.add_argument("instance", type=Path)

    p = sub.add_parser("verify", parents=[common], help="check a certificate JSON file")
    p.add_argument("instance", type=Path)
    p.add_argument("--cert", type=Path, required=True)

    p = sub.add_parser("oracle", parents=[common], help="decide by exhaustive search")
    p.add_argument("instance", type=Path)
    p.add_argument("--method", choices=("perms", "backtrack"), default="backtrack")
    p.add_argument("--cap", type=int, help="override the size cap")

    p = sub.add_parser("generate", parents=[common], help="write a random instance")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--alphabet-size", type=int, default=3)
    p.add_argument("--gen-mode", choices=GEN_MODES, default="uniform")

    p = sub.add_parser("bench", parents=[common], help="time methods, CSV out")
    p.add_argument("--methods", default="decide", help=f"comma list of {','.join(METHODS)}")
    p.add_argument("--sizes", type=_int_list, default=[1000, 10000, 100000])
    p.add_argument("--trials", type=int, default=5)
    p.add_argument("--alphabet-size", type=int, default=4)
    p.add_argument("--gen-mode", choices=GEN_MODES, default="planted_yes")
    p.add_argument("--parallel-trials", action="store_true")
    return parser


def _load(args):
    try:
        text = args.instance.read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {args.instance}: {exc.strerror or exc}") from exc
    return parse_instance(text, args.s, args.t, args.mode)


def _emit(args, payload, plain: str) -> None:
    text = json.dumps(payload, indent=2, ensure_ascii=False) if args.format == "json" else plain
    if args.out:
        args.out.write_text(text + "\n", encoding="utf-8")
    else:
        print(text)


def cmd_decide(args) -> int:
    u = _load(args)
    verdict = decide(u, fidelity=args.fidelity)
    payload = verdict.to_json()
    if args.explain:
        g = build_pseudodigraph(u)
        comps = (paper_components if args.fidelity else fast_components)(g.edges)
        deg = degree_table(g)
        payload["components"] = sorted(sorted(render(v) for v in c) for c in comps)
        payload["degrees"] = {render(v): {"out": deg.out_weight[v], "in": deg.in_weight[v]}
                              for v in g.sorted_vertices()}
    plain = "YES" if verdict else f"NO ({verdict.failure_reason})"
    if verdict.odd_vertices:
        plain += "\nunbalanced: " + ", ".join(f"{render(v)}:{d:+d}" for v, d in verdict.odd_vertices)
    _emit(args, payload, plain)
    return YES if verdict else NO


def cmd_certify(args) -> int:
    u = _load(args)
    cert = extract_certificate(u, fidelity=args.fidelity)
    if cert is None:
        _emit(args, {"answer": "no", "failure_reason": decide(u).failure_reason}, "NO")
        return NO
    payload = {"answer": "yes", **cert.to_json(), "chain": cert.chain(u)}
    _emit(args, payload, cert.chain(u))
    return YES


def cmd_verify(args) -> int:
    u = _load(args)
    try:
        data = json.loads(args.cert.read_text(encoding="utf-8"))
        cert = Certificate.from_json(data, u)
    except OSError as exc:
        raise UsageError(f"cannot read {args.cert}: {exc.strerror or exc}") from exc
    except (ValueError, KeyError, TypeError) as exc:
        raise UsageError(f"malformed certificate {args.cert}: {exc}") from exc
    check = verify_certificate(u, cert)
    plain = "VALID" if check else f"INVALID {check.reason}: {check.detail}"
    _emit(args, check.to_json(), plain)
    return YES if check else NO


def cmd_oracle(args) -> int:
    u = _load(args)
    fn = oracle_permutations if args.method == "perms" else oracle_backtrack
    answer = fn(u) if args.cap is None else fn(u, cap=args.cap)
    _emit(args, {"answer": "yes" if answer else "no", "method": args.method}, "YES" if answer else "NO")
    return YES if answer else NO


def cmd_generate(args) -> int:
    spec = GeneratorSpec(n=args.n, s=args.s or 2, t=args.t or 1, alphabet_size=args.alphabet_size,
                         seed=args.seed, mode=args.gen_mode)
    u = generate(spec)
    text = u.to_text().rstrip("\n")
    if args.out:
        args.out.write_text(text + "\n", encoding="utf-8")
    else:
        print(text)
    return YES


def cmd_bench(args) -> int:
    methods = [m for m in args.methods.split(",") if m]
    check_plan(methods, args.sizes)
    template = GeneratorSpec(s=args.s or 2, t=args.t or 1, alphabet_size=args.alphabet_size,
                             seed=args.seed, mode=args.gen_mode)
    records = bench(methods, args.sizes, args.trials, template, parallel=args.parallel_trials)
    text = to_csv(records)
    if args.out:
        args.out.write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return YES


COMMANDS = {
    "decide": cmd_decide,
    "certify": cmd_certify,
    "verify": cmd_verify,
    "oracle": cmd_oracle,
    "generate": cmd_generate,
    "bench": cmd_bench,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return ERROR if exc.code else YES
    try:
        return COMMANDS[args.command](args)
    except (UsageError, InstanceError, OracleCapError, ValueError) as exc:
        print(f"overlap-chain: error: {exc}", file=sys.stderr)
        return ERROR


if __name__ == "__main__":
    raise SystemExit(main())
