import itertools

import pytest

from oracles import disjoint_families_bruteforce, lattice_paths
from pascaldet import SizeLimitError, count_nonintersecting_paths, count_paths, det_entry, pascal_entry
from pascaldet.lgv import OracleLimits, PathFamilySpec, families_disjoint, iter_paths


@pytest.mark.parametrize("a,b,expected", [((0, 0), (0, 0), 1), ((0, 0), (2, 2), 6), ((0, 0), (3, 1), 4), ((1, 1), (0, 3), 0)])
def test_count_paths(a, b, expected):
    assert count_paths(a, b) == expected
    assert len(list(iter_paths(a, b))) == expected


def test_iter_paths_matches_recursive_enumeration():
    for end in [(2, 3), (4, 1), (0, 3)]:
        assert sorted(iter_paths((0, 0), end)) == sorted(tuple(p) for p in lattice_paths((0, 0), end))


@pytest.mark.parametrize("k,i,j,expected", [(1, 2, 2, 6), (2, 1, 1, 3), (2, 0, 0, 1)])
def test_oracle_examples(k, i, j, expected):
    assert count_nonintersecting_paths(k, i, j) == expected


def test_oracle_against_full_product_enumeration():
    for k in (1, 2, 3):
        for i in range(3):
            for j in range(3):
                assert count_nonintersecting_paths(k, i, j) == disjoint_families_bruteforce(k, i, j)


def test_kernels_agree(kernels):
    fams = [[0b0011, 0b0100], [0b1000, 0b0110, 0b0001], [0b10000]]
    # pairwise disjoint picks: (0011, 1000), (0100, 1000), (0100, 0001) -> 3 with the last
    assert kernels.count_disjoint(fams) == 3
    assert kernels.count_disjoint([]) == 1
    wide = [[1 << 70, 1], [1 << 70, 2]]
    assert kernels.count_disjoint(wide) == 3


def test_order_one_is_pascal():
    for i in range(5):
        for j in range(5):
            assert count_nonintersecting_paths(1, i, j) == pascal_entry(i, j)


def test_geometry():
    spec = PathFamilySpec.for_entry(3, 2, 1)
    assert spec.sources == ((-2, 0), (-3, 0), (-4, 0))
    assert spec.sinks == ((0, 1), (0, 2), (0, 3))
    for a in range(3):
        for b in range(3):
            assert count_paths(spec.sources[a], spec.sinks[b]) == pascal_entry(2 + a, 1 + b)


def test_disjointness_symmetric_under_permutation():
    paths = [tuple(p) for p in lattice_paths((-2, 0), (0, 2))][:6] + [((5, 5),)]
    for fam in itertools.combinations(paths, 3):
        verdicts = {families_disjoint(perm) for perm in itertools.permutations(fam)}
        assert len(verdicts) == 1


def test_size_guard():
    with pytest.raises(SizeLimitError):
        count_nonintersecting_paths(4, 0, 0)
    with pytest.raises(SizeLimitError):
        count_nonintersecting_paths(3, 9, 0)
    # the bound is configurable
    assert count_nonintersecting_paths(4, 1, 1, OracleLimits(max_order=4)) == det_entry(4, 1, 1)


def test_oracle_matches_det_on_guard_range():
    for k in (1, 2, 3):
        for i in range(5):
            for j in range(5):
                assert count_nonintersecting_paths(k, i, j) == det_entry(k, i, j)
