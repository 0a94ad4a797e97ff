import numpy as np
import pytest

from subspace_codes.finite_field import Field
from subspace_codes.gf_matrix import GFMatrix
from subspace_codes.multilevel import SubspaceCode, construct_code
from subspace_codes.puncturing import (
    Hyperplane,
    coordinate_hyperplane,
    fiber_contributions,
    puncture,
    verify_min_distance,
)
from subspace_codes.subspace_core import Subspace, subspace_distance, subspace_from_rows

GF2 = Field(2)


def test_coordinate_hyperplane_matches_display():
    q = coordinate_hyperplane(GF2, 8, 8)
    assert q.subspace.dim == 7
    assert q.subspace.rows == tuple(tuple(int(i == j) for j in range(8)) for i in range(7))
    assert q.contains((1, 0, 0, 0, 0, 0, 0, 0))
    assert not q.contains((0, 0, 0, 0, 0, 0, 0, 1))
    with pytest.raises(ValueError):
        coordinate_hyperplane(GF2, 8, 9)


@pytest.mark.parametrize("dropped", [1, 4, 8])
def test_coordinate_round_trip(dropped):
    q = coordinate_hyperplane(GF2, 8, dropped)
    rng = np.random.default_rng(50)
    for _ in range(100):
        x = rng.integers(0, 2, size=8)
        x[dropped - 1] = 0
        x = tuple(int(a) for a in x)
        y = q.to_coordinates(x)
        assert y == x[: dropped - 1] + x[dropped:]
        assert q.from_coordinates(y) == x


def test_general_hyperplane_round_trip():
    q = Hyperplane(subspace_from_rows(GF2, 5, [(1, 1, 0, 0, 0), (0, 1, 1, 0, 0), (0, 0, 1, 1, 0), (0, 0, 0, 1, 1)]))
    for x in [(1, 1, 0, 0, 0), (1, 0, 1, 0, 0), (1, 1, 1, 1, 0), (0, 0, 0, 0, 0)]:
        assert q.from_coordinates(q.to_coordinates(x)) == x
    with pytest.raises(ValueError):
        Hyperplane(subspace_from_rows(GF2, 5, [(1, 0, 0, 0, 0)]))


def test_puncture_identity_case():
    c = subspace_from_rows(GF2, 4, [(1, 0, 1, 0), (0, 1, 1, 0)])
    code = SubspaceCode(GF2, 4, [c], 4)
    out = puncture(code, coordinate_hyperplane(GF2, 4, 4), (0, 0, 0, 1))
    assert [u.rows for u in out.codewords] == [((1, 0, 1), (0, 1, 1))]
    assert out.n == 3 and out.distance == 3


def test_puncture_to_empty():
    c = subspace_from_rows(GF2, 4, [(1, 0, 0, 1), (0, 1, 0, 0)])
    code = SubspaceCode(GF2, 4, [c], 4)
    out = puncture(code, coordinate_hyperplane(GF2, 4, 4), (0, 0, 1, 1))
    assert len(out) == 0


def test_puncture_rejects_vector_in_hyperplane(code71):
    with pytest.raises(ValueError, match="outside"):
        puncture(code71, coordinate_hyperplane(GF2, 6, 6), (1, 0, 0, 0, 0, 0))


def test_puncture_intersections_have_dimension_k_minus_1(code71):
    out = puncture(code71, coordinate_hyperplane(GF2, 6, 6), (1, 0, 0, 0, 0, 1))
    assert set(out.dimension_profile) <= {2, 3}
    assert len(out) == int(out.notes["inside_hyperplane"]) + int(out.notes["through_vector"])
    assert out.notes["overlap"] == "0"
    contributions = fiber_contributions(code71, coordinate_hyperplane(GF2, 6, 6), (1, 0, 0, 0, 0, 1))
    assert sum(a + b for a, b in contributions.values()) == len(out)


def lemma2_sweep(code, n):
    checked = 0
    for dropped in range(1, n + 1):
        q = coordinate_hyperplane(GF2, n, dropped)
        for x in range(1, 2**n):
            v = tuple((x >> (n - 1 - j)) & 1 for j in range(n))
            if not v[dropped - 1]:
                continue
            out = puncture(code, q, v)
            if len(out) >= 2:
                assert verify_min_distance(out, code.distance - 1).passed
            assert set(out.dimension_profile) <= {code.k - 1, code.k}
            checked += 1
    return checked


def test_lemma2_all_coordinate_choices_on_71(code71):
    assert lemma2_sweep(code71, 6) == 6 * 2**5


def test_lemma2_sampled_on_289(code289):
    rng = np.random.default_rng(51)
    for _ in range(40):
        dropped = int(rng.integers(1, 8))
        v = rng.integers(0, 2, size=7)
        v[dropped - 1] = 1
        out = puncture(code289, coordinate_hyperplane(GF2, 7, dropped), tuple(int(a) for a in v))
        if len(out) >= 2:
            assert verify_min_distance(out, 3).passed


def test_lemma2_general_hyperplane(code71):
    q = Hyperplane(subspace_from_rows(GF2, 6, [(1, 0, 0, 0, 0, 1), (0, 1, 0, 0, 1, 0), (0, 0, 1, 1, 0, 0), (0, 0, 0, 1, 1, 1), (0, 0, 0, 0, 1, 1)]))
    v = (1, 0, 0, 0, 0, 0)
    assert not q.contains(v)
    out = puncture(code71, q, v)
    assert len(out) >= 2
    assert verify_min_distance(out, 3).passed


def test_verify_min_distance_71(code71):
    report = verify_min_distance(code71, 4)
    assert report.minimum == 4 and report.passed and report.exact
    assert report.pairs == 2485


def test_verify_min_distance_matches_scalar_path(code71):
    from itertools import combinations

    brute = min(subspace_distance(u, v) for u, v in combinations(code71.codewords, 2))
    assert verify_min_distance(code71).minimum == brute
    assert verify_min_distance(code71, 4, workers=2).minimum == brute


def test_verify_min_distance_sampled(code289):
    report = verify_min_distance(code289, 4, samples=2000, seed=3)
    assert not report.exhaustive and report.minimum >= 4


def test_verify_min_distance_errors(code71):
    with pytest.raises(ValueError, match="two codewords"):
        verify_min_distance(SubspaceCode(GF2, 6, code71.codewords[:1]))


def test_verify_min_distance_over_gf3():
    gf3 = Field(3)
    code = construct_code(gf3, 4, 2, 2)
    assert verify_min_distance(code, 4).passed


def test_duplicate_does_not_change_measurement(code71):
    from subspace_codes.multilevel import dedup

    with_dup, removed = dedup(list(code71.codewords) + [code71.codewords[5]])
    assert removed == 1
    assert verify_min_distance(SubspaceCode(GF2, 6, with_dup), 4).minimum == 4


def test_mixed_dimension_distance():
    a = subspace_from_rows(GF2, 4, [(1, 0, 0, 0)])
    b = subspace_from_rows(GF2, 4, [(1, 0, 0, 0), (0, 1, 0, 0)])
    c = Subspace(GFMatrix(GF2, [], 4), [], trusted=True)
    code = SubspaceCode(GF2, 4, [a, b, c])
    assert verify_min_distance(code).minimum == 1
