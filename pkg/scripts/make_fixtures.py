#!/usr/bin/env python3
"""Regenerate the shipped fixture files under fixtures/.

Run from the repository root:  python3 scripts/make_fixtures.py
"""

from __future__ import annotations

import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent.parent / "src"))

from localh import serialize  # noqa: E402
from localh.constructions import push_then_stellar, stellar_facet, trivial_on  # noqa: E402
from localh.posets import FacePoset, face_poset, sd_subdivision  # noqa: E402

FIXTURES = pathlib.Path(__file__).resolve().parent.parent / "fixtures"


def main() -> None:
    FIXTURES.mkdir(exist_ok=True)

    for n in range(2, 6):
        serialize.dump_json(
            serialize.subdivision_to_obj(trivial_on(n)),
            str(FIXTURES / f"trivial_d{n}.json"),
        )

    stellar = stellar_facet(trivial_on(3))
    serialize.dump_json(
        serialize.subdivision_to_obj(stellar),
        str(FIXTURES / "stellar_triangle.json"),
    )
    serialize.dump_json(
        serialize.subdivision_to_obj(sd_subdivision(stellar)),
        str(FIXTURES / "bary_stellar_triangle.json"),
    )

    # the classic quasi-geometric subdivision with non-unimodal local h:
    # push a ridge of the 3-simplex, then stellarly subdivide the new facet
    serialize.dump_json(
        serialize.subdivision_to_obj(push_then_stellar(trivial_on(4))),
        str(FIXTURES / "nonunimodal_quasigeometric.json"),
    )

    hexagon = FacePoset(
        elements=tuple((f"v{i}", 0) for i in range(1, 7))
        + tuple((f"e{i}", 1) for i in range(1, 7)),
        covers=tuple(
            c
            for i in range(1, 7)
            for c in ((f"v{i}", f"e{i}"), (f"v{i % 6 + 1}", f"e{i}"))
        ),
    )
    serialize.dump_json(serialize.poset_to_obj(hexagon), str(FIXTURES / "hexagon_poset.json"))

    square = FacePoset(
        elements=(
            ("v1", 0), ("v2", 0), ("v3", 0), ("v4", 0),
            ("e1", 1), ("e2", 1), ("e3", 1), ("e4", 1),
            ("c", 2),
        ),
        covers=(
            ("v1", "e1"), ("v2", "e1"),
            ("v2", "e2"), ("v3", "e2"),
            ("v3", "e3"), ("v4", "e3"),
            ("v4", "e4"), ("v1", "e4"),
            ("e1", "c"), ("e2", "c"), ("e3", "c"), ("e4", "c"),
        ),
    )
    serialize.dump_json(serialize.poset_to_obj(square), str(FIXTURES / "square_poset.json"))

    # a carrier-equipped poset: the stellar triangle viewed as a cell complex
    serialize.dump_json(
        serialize.poset_to_obj(face_poset(stellar)),
        str(FIXTURES / "stellar_triangle_poset.json"),
    )

    print(f"wrote fixtures to {FIXTURES}")


if __name__ == "__main__":
    main()
