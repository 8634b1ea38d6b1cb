"""Command line front end.

    semigroup-rings classify FILE [--max-degree N] [--multiple-bound M] [--format json|text]
    semigroup-rings family --n N --k K -o FILE
    semigroup-rings check ID (--corpus DIR | --seed S [--bounds C,G] [--count N] | --family-grid N | --fixtures)
    semigroup-rings oracle FILE [--samples N] [--seed S]

Exit status: 0 success, 2 usage/parse error, 3 invalid mathematical input,
4 certification failure, 1 when a check reports FAIL or the oracle finds
mismatches.
"""

import argparse
import json
import os
import random
import sys

from .errors import SemigroupError, exit_code_for
from .families import corpus_generate, family_document, fixture_catalog
from .report import classify_semigroup
from .semigroup import load_document, member, semigroup_from_document
from .staircase import certified_staircase, staircase_member
from .validators import CHECK_IDS


def classify_document(doc, max_degree=None, multiple_bound=64):
    S = semigroup_from_document(doc)
    external = doc.get("canonical_generators")
    return classify_semigroup(S, external=external, max_degree=max_degree, multiple_bound=multiple_bound)


def classify(input_path, max_degree=None, multiple_bound=64):
    return classify_document(load_document(input_path), max_degree, multiple_bound)


def _cmd_classify(args):
    rep = classify(args.file, args.max_degree, args.multiple_bound)
    sys.stdout.write(rep.to_json() if args.format == "json" else rep.to_text())
    return 0


def _cmd_family(args):
    doc = family_document(args.n, args.k)
    with open(args.output, "w", encoding="utf-8") as fh:
        json.dump(doc, fh, indent=2)
        fh.write("\n")
    return 0


def _parse_bounds(text):
    try:
        max_coord, max_gens = (int(x) for x in text.split(","))
    except ValueError as exc:
        raise SemigroupError("PARSE_ERROR", f"--bounds expects C,G, got {text!r}") from exc
    return max_coord, max_gens


def check_instances(check_id, docs):
    """Classify each document and collect (name, verdict) rows for one check."""
    if check_id not in CHECK_IDS:
        raise SemigroupError("UNKNOWN_THEOREM", f"choose one of {', '.join(CHECK_IDS)}")
    key = CHECK_IDS[check_id]
    rows = []
    for doc in docs:
        rep = classify_document(doc)
        rows.append((rep.name, rep.validator_results[key]))
    return rows


def _cmd_check(args):
    if args.check_id not in CHECK_IDS:
        raise SemigroupError("UNKNOWN_THEOREM", f"choose one of {', '.join(CHECK_IDS)}")
    if args.corpus:
        names = sorted(f for f in os.listdir(args.corpus) if f.endswith(".json"))
        docs = [load_document(os.path.join(args.corpus, f)) for f in names]
    elif args.family_grid:
        docs = [family_document(n, k) for n in range(2, args.family_grid + 1) for k in range(1, n + 2)]
    elif args.fixtures:
        docs = [f.document for f in fixture_catalog()]
    else:
        max_coord, max_gens = _parse_bounds(args.bounds)
        docs = [S.to_document() for S in corpus_generate(args.seed, max_coord, max_gens, args.count)]
    rows = check_instances(args.check_id, docs)
    totals = {"PASS": 0, "FAIL": 0, "VACUOUS": 0}
    for name, verdict in rows:
        totals[verdict] += 1
        print(f"{name:32s} {verdict}")
    print(f"total {len(rows)}: " + " ".join(f"{k}={v}" for k, v in totals.items()))
    return 0 if totals["FAIL"] == 0 else 1


def sample_vectors(S, samples, seed=0):
    """Seeded random vectors around S, including ones outside the cone and the group."""
    rng = random.Random(seed)
    top = 3 * max(S.degrees)
    gens = S.generators
    out = []
    for _ in range(samples):
        v = [0] * S.ambient_dim
        for _ in range(rng.randint(0, top)):
            g = rng.choice(gens)
            v = [a + b for a, b in zip(v, g)]
        mode = rng.random()
        if mode < 0.5:
            v = [a + rng.randint(-2, 2) for a in v]
        elif mode < 0.6:
            v = [rng.randint(-3, 3 * top) for _ in v]
        out.append(tuple(v))
    return out


def oracle_mismatches(S, T, samples, seed=0):
    return [v for v in sample_vectors(S, samples, seed) if member(S, v) != staircase_member(T, v)]


def _cmd_oracle(args):
    S = semigroup_from_document(load_document(args.file))
    T = certified_staircase(S)
    bad = oracle_mismatches(S, T, args.samples, args.seed)
    print(f"{S.name or args.file}: {args.samples} samples, {len(bad)} mismatches")
    for v in bad[:10]:
        print(f"  mismatch at {list(v)}")
    return 0 if not bad else 1


def build_parser():
    p = argparse.ArgumentParser(prog="semigroup-rings", description=__doc__.split("\n")[0])
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("classify", help="classify one semigroup document")
    c.add_argument("file")
    c.add_argument("--max-degree", type=int, default=None)
    c.add_argument("--multiple-bound", type=int, default=64)
    c.add_argument("--format", choices=["json", "text"], default="json")
    c.set_defaults(func=_cmd_classify)

    f = sub.add_parser("family", help="write the (n, k) family member as a document")
    f.add_argument("--n", type=int, required=True)
    f.add_argument("--k", type=int, required=True)
    f.add_argument("-o", "--output", required=True)
    f.set_defaults(func=_cmd_family)

    k = sub.add_parser("check", help="run one implication check over a set of instances")
    k.add_argument("check_id", help=f"one of {', '.join(CHECK_IDS)}")
    src = k.add_mutually_exclusive_group()
    src.add_argument("--corpus", help="directory of semigroup documents")
    src.add_argument("--family-grid", type=int, metavar="N", help="all family members with n <= N")
    src.add_argument("--fixtures", action="store_true", help="the built-in fixture catalog")
    k.add_argument("--seed", type=int, default=1)
    k.add_argument("--bounds", default="12,7", help="max coordinate, max generators")
    k.add_argument("--count", type=int, default=100)
    k.set_defaults(func=_cmd_check)

    o = sub.add_parser("oracle", help="compare staircase membership with direct search")
    o.add_argument("file")
    o.add_argument("--samples", type=int, default=1000)
    o.add_argument("--seed", type=int, default=0)
    o.set_defaults(func=_cmd_oracle)
    return p


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code
    try:
        return args.func(args)
    except SemigroupError as err:
        print(f"error: {err}", file=sys.stderr)
        return exit_code_for(err)


if __name__ == "__main__":
    sys.exit(main())
