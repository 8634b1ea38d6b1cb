"""Write every catalog fixture to data/fixtures/<name>.json in the CLI input format."""

import argparse
import json
import os

from semigroup_rings.families import fixture_catalog

HERE = os.path.dirname(os.path.abspath(__file__))


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default=os.path.join(HERE, os.pardir, "data", "fixtures"))
    args = ap.parse_args()
    os.makedirs(args.out, exist_ok=True)
    for f in fixture_catalog():
        path = os.path.join(args.out, f"{f.name}.json")
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(f.document, fh, indent=2)
            fh.write("\n")
        print(path)


if __name__ == "__main__":
    main()
