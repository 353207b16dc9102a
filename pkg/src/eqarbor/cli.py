"""Command line front end.

stdout carries data (result lines, witness JSON, sweep CSV); diagnostics go
to stderr.  Exit codes: 0 success, 1 semantic failure (a value mismatch, an
invalid coloring, a nonexistent witness), 2 usage or parse errors.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from typing import Iterator, Optional, Sequence, Tuple

from . import closed_form, construct, oracle
from .errors import (
    InstanceTooLarge,
    InvalidPart,
    MalformedColoring,
    NoWitnessFound,
    PreconditionViolated,
)
from .model import ClassComposition, TreeColoring, decompose_n, normalize
from .verify import verify_coloring

CSV_FIELDS = ["kind", "parts", "N", "b", "c", "va_closed", "case_tag", "va_oracle", "match"]


def coloring_to_json(coloring: TreeColoring) -> dict:
    classes = []
    for idx, cls in enumerate(coloring.classes):
        entry: dict = {"counts": list(cls.counts)}
        if coloring.vertices is not None:
            entry["vertices"] = [list(v) for v in coloring.vertices[idx]]
        classes.append(entry)
    return {"parts": list(coloring.spec.parts), "r": coloring.r, "classes": classes}


def coloring_from_json(obj: dict) -> TreeColoring:
    """Parse the canonical coloring document; counts align with the parts list."""
    try:
        parts = list(obj["parts"])
        r = obj["r"]
        raw_classes = obj["classes"]
        counts = [tuple(cls["counts"]) for cls in raw_classes]
        vertices = None
        if any("vertices" in cls for cls in raw_classes):
            vertices = tuple(
                tuple(tuple(v) for v in cls["vertices"]) for cls in raw_classes
            )
    except (KeyError, TypeError) as exc:
        raise MalformedColoring(f"bad coloring document: {exc}") from None
    if parts != sorted(parts):
        # counts are positional, so an unsorted parts list would be ambiguous
        raise MalformedColoring("parts must be listed ascending")
    return TreeColoring(
        spec=normalize(parts),
        r=r,
        classes=tuple(ClassComposition(c) for c in counts),
        vertices=vertices,
    )


def cmd_va(args: argparse.Namespace) -> int:
    parts = args.parts
    if args.oracle_only:
        try:
            value = oracle.brute_va(parts, args.r, max_n=args.max_n)
        except InstanceTooLarge as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2
        print(f"va={value} oracle-only r={args.r}")
        return 0
    if args.r != 2:
        print("error: the closed form covers r=2 only; use --oracle-only", file=sys.stderr)
        return 2
    if len(parts) == 2:
        result = closed_form.va2_bipartite(*parts)
    elif len(parts) == 3:
        result = closed_form.va2_tripartite(*parts)
    else:
        print("error: the closed form needs 2 or 3 parts; use --oracle-only", file=sys.stderr)
        return 2
    line = f"va={result.value} case={result.case_tag.value}"
    if result.b is not None:
        line += f" b={result.b} c={result.c}"
    if args.oracle_check:
        try:
            oracle_value = oracle.brute_va(parts, 2, max_n=args.max_n)
        except InstanceTooLarge as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2
        agree = oracle_value == result.value
        line += f" oracle={oracle_value} {'MATCH' if agree else 'MISMATCH'}"
        print(line)
        return 0 if agree else 1
    print(line)
    return 0


def cmd_p(args: argparse.Namespace) -> int:
    try:
        p, d = closed_form.p_value_detail(args.q, args.parts)
    except PreconditionViolated as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(f"p={p} d={d}")
    return 0


def cmd_witness(args: argparse.Namespace) -> int:
    spec = normalize(args.parts)
    q = args.q
    coloring = None
    if args.r == 2 and len(spec.parts) <= 3 and q <= spec.n:
        try:
            coloring = construct.algorithm_a(spec, q)
        except PreconditionViolated:
            coloring = None
        if coloring is None:
            try:
                coloring = construct.construct_pattern_witness(spec, q)
            except (NoWitnessFound, PreconditionViolated):
                coloring = None
    if coloring is None:
        try:
            cert = oracle.exists_coloring(spec.parts, q, args.r, max_n=args.max_n)
        except InstanceTooLarge as exc:
            print(f"error: constructions found nothing and {exc}", file=sys.stderr)
            return 1
        if not cert.exists:
            print("NONEXISTENT")
            return 1
        coloring = cert.witness
    if not verify_coloring(coloring).valid:
        print("error: produced coloring failed verification; internal bug", file=sys.stderr)
        return 1
    print(json.dumps(coloring_to_json(coloring)))
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    try:
        with open(args.file, "r", encoding="utf-8") as fh:
            obj = json.load(fh)
        coloring = coloring_from_json(obj)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (json.JSONDecodeError, MalformedColoring, InvalidPart, ValueError) as exc:
        print(f"error: cannot parse coloring: {exc}", file=sys.stderr)
        return 2
    report = verify_coloring(coloring)
    if report.valid:
        print("VALID")
        return 0
    print("INVALID")
    for failure in report.failures:
        bits = [failure.reason]
        if failure.class_index is not None:
            bits.append(f"class={failure.class_index}")
        if failure.part_index is not None:
            bits.append(f"part={failure.part_index}")
        if failure.detail:
            bits.append(failure.detail)
        print(" ".join(bits))
    return 1


def cmd_oracle(args: argparse.Namespace) -> int:
    try:
        cert = oracle.exists_coloring(
            args.parts, args.q, args.r, proper_only=args.proper_only, max_n=args.max_n
        )
    except InstanceTooLarge as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print("EXISTS" if cert.exists else "NONEXISTENT")
    return 0 if cert.exists else 1


def _bipartite_instances(max_sum: int) -> Iterator[Tuple[int, ...]]:
    for m in range(1, max_sum // 2 + 1):
        for n in range(m, max_sum - m + 1):
            yield (m, n)


def _tripartite_instances(max_sum: int) -> Iterator[Tuple[int, ...]]:
    for l in range(1, max_sum // 3 + 1):
        for m in range(l, (max_sum - l) // 2 + 1):
            for n in range(m, max_sum - l - m + 1):
                yield (l, m, n)


def cmd_sweep(args: argparse.Namespace) -> int:
    min_sum = 3 if args.tripartite else 2
    if args.max_sum < min_sum:
        print(f"error: --max-sum must be at least {min_sum}", file=sys.stderr)
        return 2
    if args.oracle and args.max_sum > args.max_n:
        print("error: --max-sum exceeds the oracle bound; raise --max-n", file=sys.stderr)
        return 2
    if args.tripartite:
        instances = _tripartite_instances(args.max_sum)
        compute = closed_form.va2_tripartite
    else:
        instances = _bipartite_instances(args.max_sum)
        compute = closed_form.va2_bipartite
    rows = []
    mismatch = False
    for parts in instances:
        spec = normalize(parts)
        b, c = decompose_n(spec)
        result = compute(*parts)
        row = {
            "kind": spec.kind,
            "parts": "x".join(str(p) for p in spec.parts),
            "N": spec.n,
            "b": b,
            "c": c,
            "va_closed": result.value,
            "case_tag": result.case_tag.value,
            "va_oracle": "",
            "match": "",
        }
        if args.oracle:
            oracle_value = oracle.brute_va(parts, 2, max_n=args.max_n)
            row["va_oracle"] = oracle_value
            row["match"] = "1" if oracle_value == result.value else "0"
            if row["match"] == "0":
                mismatch = True
        rows.append(row)
    sink = open(args.out, "w", newline="", encoding="utf-8") if args.out else sys.stdout
    try:
        writer = csv.DictWriter(sink, fieldnames=CSV_FIELDS, lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
    finally:
        if args.out:
            sink.close()
    return 1 if mismatch else 0


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
    if value < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="eqarbor",
        description=(
            "Strong equitable vertex 2-arboricity of complete bipartite and "
            "tripartite graphs: closed forms, witnesses, verification, search."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    va = sub.add_parser("va", help="compute va by the closed form (2 or 3 parts)")
    va.add_argument("parts", nargs="+", type=_positive_int, help="part sizes")
    va.add_argument("--r", type=_positive_int, default=2, help="degree bound (closed form: 2)")
    va.add_argument("--oracle-check", action="store_true", help="cross-check against the oracle")
    va.add_argument("--oracle-only", action="store_true", help="skip the closed form, search only")
    va.add_argument("--max-n", type=_positive_int, default=oracle.DEFAULT_MAX_N)
    va.set_defaults(func=cmd_va)

    p = sub.add_parser("p", help="evaluate the threshold function p(q: parts)")
    p.add_argument("--q", type=_positive_int, required=True)
    p.add_argument("parts", nargs="+", type=_positive_int)
    p.set_defaults(func=cmd_p)

    witness = sub.add_parser("witness", help="emit an equitable (q,r)-tree-coloring as JSON")
    witness.add_argument("--q", type=_positive_int, required=True)
    witness.add_argument("--r", type=_positive_int, default=2)
    witness.add_argument("--format", choices=["json"], default="json")
    witness.add_argument("--max-n", type=_positive_int, default=oracle.DEFAULT_MAX_N)
    witness.add_argument("parts", nargs="+", type=_positive_int)
    witness.set_defaults(func=cmd_witness)

    verify = sub.add_parser("verify", help="verify a coloring JSON file")
    verify.add_argument("file")
    verify.set_defaults(func=cmd_verify)

    oracle_cmd = sub.add_parser("oracle", help="exhaustive existence query")
    oracle_cmd.add_argument("--q", type=_positive_int, required=True)
    oracle_cmd.add_argument("--r", type=_positive_int, default=2)
    oracle_cmd.add_argument("--proper-only", action="store_true", help="independent classes only")
    oracle_cmd.add_argument("--max-n", type=_positive_int, default=oracle.DEFAULT_MAX_N)
    oracle_cmd.add_argument("parts", nargs="+", type=_positive_int)
    oracle_cmd.set_defaults(func=cmd_oracle)

    sweep = sub.add_parser("sweep", help="tabulate closed-form values as CSV")
    kind = sweep.add_mutually_exclusive_group(required=True)
    kind.add_argument("--bipartite", action="store_true")
    kind.add_argument("--tripartite", action="store_true")
    sweep.add_argument("--max-sum", type=_positive_int, required=True)
    sweep.add_argument("--oracle", action="store_true", help="add oracle values and match flags")
    sweep.add_argument("--out", help="write the CSV here instead of stdout")
    sweep.add_argument("--max-n", type=_positive_int, default=oracle.DEFAULT_MAX_N)
    sweep.set_defaults(func=cmd_sweep)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InvalidPart as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
