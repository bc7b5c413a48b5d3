"""Shared corpus for the acceptance suite.

One session-scoped pass builds the generated corpus (seeds 0..99, base
dimension capped at 5, up to 6 construction steps) together with each
member's barycentric subdivision, evaluates every per-member check the
acceptance criteria need, and keeps only small summary records so memory
stays bounded.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

import pytest

from localh.constructions import random_subdivision
from localh.identities import (
    boundary_h_from_h,
    local_h_via_boundary_recursion,
    local_h_via_derangements,
)
from localh.polynomials import Polynomial
from localh.posets import CdPolynomial, ek_difference, sd_subdivision

CORPUS_SEEDS = range(100)
CORPUS_MAX_D = 5
CORPUS_MAX_STEPS = 6


@dataclass
class MemberSummary:
    seed: int
    bary: bool
    d: int
    local_h: tuple[int, ...]
    gamma: tuple[int, ...]
    quasi_geometric: bool
    vertex_induced: bool
    failures: list[str] = field(default_factory=list)


def _identity_failures(s) -> list[str]:
    out = []
    direct = s.local_h()
    if local_h_via_boundary_recursion(s) != direct:
        out.append("boundary-recursion mismatch")
    if local_h_via_derangements(s) != direct:
        out.append("derangement-expansion mismatch")
    if s.h_via_locality() != s.total.h_polynomial():
        out.append("locality mismatch")
    return out


def _boundary_formula_failures(s) -> list[str]:
    out = []
    verts = s.base.vertices
    for k in range(1, len(verts) + 1):
        for face in combinations(verts, k):
            h_f = s.subset_h(face)
            try:
                predicted = boundary_h_from_h(h_f, k)
            except ValueError:
                out.append(f"restriction {face} is not a ball")
                continue
            if predicted != s.subset_boundary_h(face):
                out.append(f"boundary formula fails at {face}")
    return out


def _ek_failures(s, cache: dict) -> list[str]:
    out = []
    x = Polynomial([0, 1])
    one_plus_x = Polynomial([1, 1])
    verts = s.base.vertices
    for k in range(1, min(len(verts), 4) + 1):
        for face in combinations(verts, k):
            restriction = s.restriction_complex(face)
            key = restriction.facets
            if key in cache:
                result = cache[key]
            else:
                result = ek_difference(restriction)
                cache[key] = result
            coeffs = result.difference.padded(k)
            if coeffs != tuple(reversed(coeffs)):
                out.append(f"cd difference not symmetric at {face}")
            if not isinstance(result.cd, CdPolynomial):
                out.append(f"cd not expressible at {face}: {result.cd.residual}")
                continue
            if not result.cd.is_nonnegative:
                out.append(f"cd has a negative coefficient at {face}")
            if result.cd.evaluate(one_plus_x, 2 * x) != result.difference:
                out.append(f"cd evaluation mismatch at {face}")
    return out


def _summaries():
    ek_cache: dict = {}
    records = []
    for seed in CORPUS_SEEDS:
        s, _ = random_subdivision(seed, CORPUS_MAX_D, seed % (CORPUS_MAX_STEPS + 1))
        bary = sd_subdivision(s)
        for sub, is_bary in ((s, False), (bary, True)):
            d = len(sub.base.vertices)
            failures = _identity_failures(sub)
            failures += _boundary_formula_failures(sub)
            if not is_bary:
                failures += _ek_failures(sub, ek_cache)
            local = sub.local_h()
            records.append(
                MemberSummary(
                    seed=seed,
                    bary=is_bary,
                    d=d,
                    local_h=local.padded(d),
                    gamma=sub.local_gamma().gammas,
                    quasi_geometric=sub.is_quasi_geometric().holds,
                    vertex_induced=sub.is_vertex_induced().holds,
                    failures=failures,
                )
            )
    return records


@pytest.fixture(scope="session")
def corpus_summaries():
    return _summaries()
