"""Classify the seeded corpus plus the fixture catalog and tally every implication check.

    python scripts/run_corpus_checks.py --seed 1 --bounds 12,7 --count 100
"""

import argparse
import collections
import time

from semigroup_rings.cli import classify_document
from semigroup_rings.families import corpus_generate, fixture_catalog


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--seed", type=int, default=1)
    ap.add_argument("--bounds", default="12,7")
    ap.add_argument("--count", type=int, default=100)
    ap.add_argument("--no-fixtures", action="store_true")
    args = ap.parse_args()
    max_coord, max_gens = (int(x) for x in args.bounds.split(","))

    t0 = time.perf_counter()
    docs = [S.to_document() for S in corpus_generate(args.seed, max_coord, max_gens, args.count)]
    if not args.no_fixtures:
        docs += [f.document for f in fixture_catalog()]
    tally = collections.defaultdict(collections.Counter)
    props = collections.Counter()
    failures = []
    for doc in docs:
        rep = classify_document(doc)
        for check, verdict in rep.validator_results.items():
            tally[check][verdict] += 1
            if verdict == "FAIL":
                failures.append((rep.name, check))
        for key in ("is_gorenstein", "is_level", "is_nearly_gorenstein", "is_almost_gorenstein"):
            props[key] += getattr(rep, key) is True
    elapsed = time.perf_counter() - t0

    print(f"{len(docs)} instances in {elapsed:.1f}s")
    print(f"{'check':28s} {'PASS':>5s} {'FAIL':>5s} {'VACUOUS':>8s}")
    for check in sorted(tally):
        t = tally[check]
        print(f"{check:28s} {t['PASS']:5d} {t['FAIL']:5d} {t['VACUOUS']:8d}")
    print("property counts:", dict(props))
    for name, check in failures:
        print(f"FAIL {name} {check}")
    return 1 if failures else 0


if __name__ == "__main__":
    raise SystemExit(main())
