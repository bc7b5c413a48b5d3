import math
from itertools import combinations

import pytest

from localh.complexes import SimplicialComplex, simplex, simplex_boundary
from localh.constructions import (
    push_ridge,
    push_then_stellar,
    stellar_facet,
    trivial_on,
)
from localh.polynomials import Polynomial
from localh.posets import sd_subdivision
from localh.subdivisions import BaseNotSimplexError, Subdivision


def oracle_local_h(s):
    """Independent route: naive per-subset membership scan and naive h from
    scratch, no shared code with the library implementation."""
    verts = s.base.vertices
    d = len(verts)
    total = [0] * (d + 1)
    for k in range(d + 1):
        for sub in combinations(verts, k):
            members = [g for g, c in s.carrier.items() if set(c) <= set(sub)]
            h = naive_h(members)
            sign = (-1) ** (d - k)
            for i, c in enumerate(h):
                total[i] += sign * c
    return Polynomial(total)


def naive_h(nonempty_faces):
    card = [0] * 20
    card[0] = 1
    top = 0
    for f in nonempty_faces:
        card[len(f)] += 1
        top = max(top, len(f))
    return [
        sum(
            (-1) ** (i - j) * math.comb(top - j, i - j) * card[j]
            for j in range(i + 1)
        )
        for i in range(top + 1)
    ]


def bary_of_trivial(n):
    return sd_subdivision(trivial_on(n))


def test_trivial_subdivision_valid():
    t = trivial_on(4)
    report = t.validate()
    assert report.valid
    assert report.verdict == "valid-weak"
    assert t.local_h() == Polynomial()
    assert t.is_quasi_geometric().holds
    assert t.is_vertex_induced().holds


def test_restriction_examples():
    s = bary_of_trivial(3)
    full = s.restriction(("v1", "v2", "v3"))
    assert full.total == s.total
    assert full.carrier == s.carrier

    edge = s.restriction(("v1", "v2"))
    # the subdivided edge: two edges glued at the barycenter vertex
    assert edge.total.f_vector() == (1, 3, 2)
    assert edge.base == simplex(["v1", "v2"])

    vertex = s.restriction(("v1",))
    assert vertex.total.f_vector() == (1, 1)
    with pytest.raises(ValueError):
        trivial_on(3).restriction(("v1", "nope"))


def test_restriction_of_valid_is_valid():
    s = bary_of_trivial(4)
    for face in [("v1",), ("v1", "v2"), ("v1", "v2", "v3")]:
        assert s.restriction(face).validate().valid


def test_validate_of_bary():
    for n in (2, 3, 4, 5):
        bary = bary_of_trivial(n)
        assert bary.validate().valid
        assert bary.is_vertex_induced().holds


def test_validate_catches_broken_interior():
    # send an interior edge of the subdivided edge onto a vertex of the base
    s = bary_of_trivial(2)
    carrier = dict(s.carrier)
    bad_edge = next(g for g in carrier if len(g) == 2)
    carrier[bad_edge] = ("v1",)
    broken = Subdivision(s.base, s.total, carrier)
    report = broken.validate()
    assert not report.valid
    failed = {c.face: c.failures for c in report.failures()}
    assert any("interior-condition" in fs or "dimension" in fs for fs in failed.values())


def test_validate_flags_closed_restriction():
    # a hexagon pretending to subdivide an edge: the full restriction is a
    # circle, which has no boundary and the wrong homology
    hexagon = SimplicialComplex(
        [("1", "2"), ("2", "3"), ("3", "4"), ("4", "5"), ("5", "6"), ("1", "6")]
    )
    base = simplex("ab")
    carrier = {}
    for g in hexagon.nonempty_faces():
        carrier[g] = ("a", "b")
    carrier[("1",)] = ("a",)
    carrier[("4",)] = ("b",)
    s = Subdivision(base, hexagon, carrier)
    failed = {c.face: set(c.failures) for c in s.validate().failures()}
    assert ("a", "b") in failed
    assert {"betti-ball", "boundary-betti-sphere"} <= failed[("a", "b")]


def test_validate_flags_pseudomanifold_failure():
    three_sheets = SimplicialComplex(
        [("1", "2", "3"), ("1", "2", "4"), ("1", "2", "5")]
    )
    base = simplex("xyz")
    carrier = {}
    for g in three_sheets.nonempty_faces():
        carrier[g] = ("x", "y", "z")
    carrier[("1",)] = ("x",)
    carrier[("2",)] = ("y",)
    for v in ("3", "4", "5"):
        carrier[(v,)] = ("z",)
    carrier[("1", "2")] = ("x", "y")
    s = Subdivision(base, three_sheets, carrier)
    failed = {c.face: set(c.failures) for c in s.validate().failures()}
    assert "pseudomanifold" in failed[("x", "y", "z")]
    # the fibre over z is three disconnected points
    assert "betti-ball" in failed[("z",)]


def test_validate_reports_monotonicity():
    s = trivial_on(2)
    carrier = dict(s.carrier)
    carrier[("v1",)] = ("v2",)  # vertex carrier not inside the edge carrier? it is;
    # break monotonicity instead: edge carried to a vertex
    carrier[("v1", "v2")] = ("v1",)
    broken = Subdivision(s.base, s.total, carrier)
    report = broken.validate()
    assert not report.valid


def test_quasi_geometric_examples():
    fig = push_then_stellar(trivial_on(4))
    assert fig.is_quasi_geometric().holds
    assert trivial_on(3).is_quasi_geometric().holds


def test_double_push_breaks_quasi_geometric():
    s = push_ridge(trivial_on(4), ("v1", "v2", "v3"))
    assert s.validate().valid
    w1 = next(v for v in s.total.vertices if v.startswith("w"))
    s2 = push_ridge(s, ("v1", "v2", w1))
    assert s2.validate().valid
    result = s2.is_quasi_geometric()
    assert not result.holds
    e, f = result.witness
    assert len(f) < len(e)
    assert set(f) == {"v1", "v2", "v3"}


def test_vertex_induced_examples():
    assert bary_of_trivial(4).is_vertex_induced().holds
    fig = push_then_stellar(trivial_on(4))
    result = fig.is_vertex_induced()
    assert not result.holds
    assert result.witness == (("v1", "v2", "v3"), ("v1", "v2", "v3"))


def test_local_h_examples():
    assert bary_of_trivial(3).local_h() == Polynomial([0, 1, 1])
    fig = push_then_stellar(trivial_on(4))
    assert fig.local_h() == Polynomial([0, 1, 0, 1])
    stellar_bary = sd_subdivision(stellar_facet(trivial_on(3)))
    assert stellar_bary.local_h() == Polynomial([0, 7, 7])


def test_local_h_matches_naive_oracle():
    for s in [
        trivial_on(3),
        stellar_facet(trivial_on(3)),
        push_then_stellar(trivial_on(4)),
        bary_of_trivial(3),
    ]:
        assert s.local_h() == oracle_local_h(s)


def test_local_h_requires_simplex_base():
    hexagon = SimplicialComplex(
        [("1", "2"), ("2", "3"), ("3", "4"), ("4", "5"), ("5", "6"), ("1", "6")]
    )
    s = Subdivision.trivial(hexagon)
    with pytest.raises(BaseNotSimplexError):
        s.local_h()


def test_local_gamma_examples():
    assert bary_of_trivial(3).local_gamma().gammas == (0, 1)
    assert push_then_stellar(trivial_on(4)).local_gamma().gammas == (0, 1, -2)
    assert trivial_on(4).local_gamma().gammas == (0, 0, 0)


def test_h_via_locality_examples():
    s = bary_of_trivial(3)
    assert s.h_via_locality() == Polynomial([1, 4, 1])
    assert s.h_via_locality() == s.total.h_polynomial()

    stellar_bary = sd_subdivision(stellar_facet(trivial_on(3)))
    assert stellar_bary.h_via_locality() == Polynomial([1, 10, 7])


def test_h_via_locality_trivial_of_pure_base():
    for base in [
        simplex_boundary("1234"),
        SimplicialComplex([("1", "2"), ("2", "3"), ("3", "4"), ("4", "5"),
                           ("5", "6"), ("1", "6")]),
    ]:
        s = Subdivision.trivial(base)
        assert s.h_via_locality() == base.h_polynomial()


def test_local_h_symmetry_properties():
    for s in [
        stellar_facet(trivial_on(3)),
        push_then_stellar(trivial_on(4)),
        bary_of_trivial(4),
    ]:
        d = len(s.base.vertices)
        ell = s.local_h().padded(d)
        assert ell == tuple(reversed(ell))
        assert ell[0] == 0
        assert ell[1] >= 0
        if s.is_quasi_geometric().holds:
            assert all(c >= 0 for c in ell)


def test_carrier_totality_enforced():
    base = simplex("12")
    with pytest.raises(ValueError):
        Subdivision(base, base, {("1",): ("1",), ("2",): ("2",)})
    with pytest.raises(ValueError):
        Subdivision(
            base,
            base,
            {("1",): ("1",), ("2",): ("2",), ("1", "2"): ("1", "2"),
             ("9",): ("1",)},
        )


def test_subset_h_matches_restriction_complex():
    s = push_then_stellar(trivial_on(4))
    for k in range(5):
        for sub in combinations(s.base.vertices, k):
            got = s.subset_h(sub)
            want = s.restriction_complex(sub).h_polynomial()
            assert got == want
