#!/usr/bin/env python3
"""Evidence sweep for the open question whether every vertex-induced
subdivision of a simplex has a unimodal local h-vector.

Generates seeded random quasi-geometric instances (optionally together with
their barycentric subdivisions, which are always vertex-induced), tabulates
the predicate combinations seen, and dumps any vertex-induced instance with
non-unimodal local h - finding one would be a refutation, so it is almost
certainly a bug.

Example:
    python3 scripts/search_unimodality.py --seeds 500 --max-d 6 --steps 6
"""

from __future__ import annotations

import argparse
import collections
import json
import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent.parent / "src"))

from localh.constructions import OpStep, OpWord, random_subdivision  # noqa: E402
from localh.polynomials import is_unimodal  # noqa: E402
from localh.posets import sd_subdivision  # noqa: E402
from localh.serialize import opword_to_obj, subdivision_to_obj  # noqa: E402


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--seeds", type=int, default=200)
    parser.add_argument("--max-d", type=int, default=5)
    parser.add_argument("--steps", type=int, default=6)
    parser.add_argument("--skip-sd", action="store_true",
                        help="do not also test barycentric subdivisions")
    parser.add_argument("--dump-dir", default=None,
                        help="where to write any refuting instance")
    args = parser.parse_args()

    tally = collections.Counter()
    hits = 0
    for seed in range(args.seeds):
        s, word = random_subdivision(seed, args.max_d, args.steps)
        cases = [(s, word)]
        if not args.skip_sd:
            cases.append(
                (sd_subdivision(s), OpWord(word.seed_vertices,
                                           word.steps + (OpStep("sd"),)))
            )
        for sub, w in cases:
            d = len(sub.base.vertices)
            ell = sub.local_h().padded(d)
            vi = sub.is_vertex_induced().holds
            uni = is_unimodal(ell)
            tally[(vi, uni)] += 1
            if vi and not uni:
                hits += 1
                print(f"REFUTATION CANDIDATE at seed {seed}: local h {list(ell)}")
                if args.dump_dir:
                    out = pathlib.Path(args.dump_dir)
                    out.mkdir(parents=True, exist_ok=True)
                    payload = {
                        "opword": opword_to_obj(w),
                        "instance": subdivision_to_obj(sub),
                        "local_h": list(ell),
                    }
                    path = out / f"refutation_seed{seed}.json"
                    path.write_text(json.dumps(payload, indent=2))
                    print(f"  wrote {path}")

    print(f"\nseeds: {args.seeds}  (sd included: {not args.skip_sd})")
    for (vi, uni), count in sorted(tally.items()):
        print(f"  vertex_induced={vi!s:<5} unimodal={uni!s:<5} count={count}")
    if hits:
        print(f"\n{hits} vertex-induced non-unimodal instances found - "
              "treat as a bug until proven otherwise")
        return 1
    print("\nno vertex-induced instance with non-unimodal local h")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
