"""Command-line entry point: ``subspace-codes <command> ...``.

Exit status: 0 on success, 1 when a verification fails, 2 on bad usage.
"""

from __future__ import annotations

import argparse
import os
import sys
import time
from collections import Counter

from .codefile import CodeFileError, read_code, write_code
from .ferrers_forms import as_binary_vector, diagram_of, echelon_ferrers_form, theorem1_bound, vector_str
from .finite_field import field_from_order
from .multilevel import SkeletonCode, construct_code, lexicode_skeleton, verify_lemma1
from .puncturing import coordinate_hyperplane, fiber_contributions, puncture, verify_min_distance
from .rank_metric import ferrers_code
from .subspace_core import identifying_vector

DEFAULT_SEED = 20080101


class UsageError(Exception):
    pass


def _read_skeleton(path: str, d: int) -> SkeletonCode:
    with open(path, encoding="utf-8") as fh:
        vectors = [line.strip() for line in fh if line.strip() and not line.startswith("#")]
    return SkeletonCode.from_vectors(vectors, d)


def cmd_construct(args) -> int:
    if args.d % 2 or args.d < 2:
        raise UsageError(f"--d must be even and >= 2 for construct, got {args.d}")
    field = field_from_order(args.q)
    skeleton = _read_skeleton(args.skeleton, args.d) if args.skeleton else "default"
    start = time.perf_counter()
    code = construct_code(field, args.n, args.k, args.d // 2, skeleton)
    elapsed = time.perf_counter() - start
    print(f"code in G_{args.q}({args.n},{args.k}), claimed d_S={args.d}: size {len(code)}")
    print(f"{'vector':>{args.n}}  dim  bound  size")
    for f in code.fibers:
        flag = "" if f.attains_bound else "  deficit"
        print(f"{vector_str(f.v)}  {f.dimension:>3}  {f.bound:>5}  {f.size}{flag}")
    deficits = code.deficits()
    if deficits:
        print(f"bound missed on {len(deficits)} fibers")
    else:
        print("every fiber attains its bound")
    print(f"constructed in {elapsed:.2f} s", file=sys.stderr)
    if args.out:
        write_code(code, args.out)
    return 0


def cmd_skeleton(args) -> int:
    skeleton = lexicode_skeleton(args.n, args.k, args.d)
    text = "".join(vector_str(v) + "\n" for v in skeleton.vectors)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
        print(f"{len(skeleton)} vectors")
    else:
        sys.stdout.write(text)
    return 0


def cmd_bound(args) -> int:
    v = as_binary_vector(args.v)
    if args.delta < 1:
        raise UsageError(f"--delta must be >= 1, got {args.delta}")
    ef = echelon_ferrers_form(v)
    s = diagram_of(v)
    print(f"EF({vector_str(v)}):")
    print(ef.render())
    print(f"S (columns {' '.join(str(c + 1) for c in s.columns)}):")
    print(s.render())
    print(f"dots: {s.dots}  rows: {s.row_counts}  columns: {s.col_counts}")
    print(f"bounding box: {s.box_rows}x{s.box_cols}")
    bound = theorem1_bound(s, args.delta)
    print(f"bound (delta={args.delta}): {bound}")
    if args.q is not None:
        code = ferrers_code(s, args.delta, field_from_order(args.q))
        print(f"ferrers code dimension over GF({args.q}): {code.dimension}")
    return 0


def cmd_puncture(args) -> int:
    code = read_code(args.input)
    v = tuple(int(ch) for ch in args.v)
    if len(v) != code.n:
        raise UsageError(f"--v has length {len(v)}, the code lives in F^{code.n}")
    plane = coordinate_hyperplane(code.field, code.n, args.drop_coordinate)
    out = puncture(code, plane, v)
    print(
        f"punctured size {len(out)}: {out.notes['inside_hyperplane']} inside Q, "
        f"{out.notes['through_vector']} through v, overlap {out.notes['overlap']}"
    )
    if args.fibers:
        for key, (inside, through) in fiber_contributions(code, plane, v).items():
            print(f"  {key}  inside={inside}  through={through}")
    if args.out:
        write_code(out, args.out)
    return 0


def cmd_verify(args) -> int:
    code = read_code(args.input)
    expect = args.expect_distance if args.expect_distance is not None else code.distance
    workers = args.workers or os.cpu_count() or 1
    report = verify_min_distance(code, expect, samples=args.sample, seed=args.seed, workers=workers)
    mode = "exhaustive" if report.exhaustive else "sampled"
    status = "pass" if report.passed else "FAIL"
    eq = " (equal)" if report.exact else ""
    print(f"min d_S = {report.minimum} over {report.pairs} pairs ({mode}); expect >= {expect}: {status}{eq}")
    ok = report.passed
    if code.skeleton is not None:
        lemma = verify_lemma1(code, samples=args.sample, seed=args.seed)
        print(
            f"lemma 1: {lemma.pairs_checked} pairs ({lemma.same_pairs} same fiber), "
            f"{len(lemma.violations)} violations"
        )
        for a, b, what in lemma.violations[:10]:
            print(f"  codewords {a}, {b}: {what}")
        ok = ok and lemma.ok
    return 0 if ok else 1


def cmd_stats(args) -> int:
    code = read_code(args.input)
    print(f"size {len(code)}")
    print(f"ambient n={code.n}, q={code.field.q}, claimed d={code.distance}")
    dims = Counter(c.dim for c in code.codewords)
    print("dimensions: " + ", ".join(f"{k}:{dims[k]}" for k in sorted(dims)))
    hist = Counter(vector_str(identifying_vector(c)) for c in code.codewords)
    for v in sorted(hist, reverse=True):
        print(f"  {v}  {hist[v]}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="subspace-codes", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="multilevel constant-dimension code")
    p.add_argument("--q", type=int, default=2)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--d", type=int, required=True, help="even subspace distance 2*delta")
    p.add_argument("--skeleton", help="file with one binary vector per line")
    p.add_argument("--out")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("skeleton", help="greedy constant-weight lexicode")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_skeleton)

    p = sub.add_parser("bound", help="echelon Ferrers form and dimension bound of a vector")
    p.add_argument("--v", required=True)
    p.add_argument("--delta", type=int, required=True)
    p.add_argument("--q", type=int, help="also build the Ferrers code over GF(q)")
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("puncture", help="puncture by a coordinate hyperplane")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--drop-coordinate", type=int, required=True, help="1-based")
    p.add_argument("--v", required=True)
    p.add_argument("--out")
    p.add_argument("--fibers", action="store_true", help="list contributions per source fiber")
    p.set_defaults(func=cmd_puncture)

    p = sub.add_parser("verify", help="minimum distance and lemma 1 checks")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--expect-distance", type=int)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--exhaustive", action="store_true", default=True)
    mode.add_argument("--sample", type=int, metavar="N")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--workers", type=int, default=0, help="0 = all CPUs")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("stats", help="size and identifying-vector histogram")
    p.add_argument("--in", dest="input", required=True)
    p.set_defaults(func=cmd_stats)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, CodeFileError, ValueError, OSError) as exc:
        print(f"{parser.prog} {args.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

