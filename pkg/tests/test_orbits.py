import pytest

from kronkit.groupcore import GroupError, SubgroupSpec, conjugacy_data, subgroup_closure
from kronkit.orbits import (
    diagonal_subgroup,
    double_cosets,
    frame_pair_count,
    gelfand_symmetric_check,
    left_coset_map,
    simultaneous_classes,
    square_root_counts,
)
from kronkit.zoo import cyclic, symmetric

from conftest import build

TINY = [
    ("cyclic", (1,)),
    ("cyclic", (4,)),
    ("abelian", (2, 2)),
    ("symmetric", (3,)),
    ("generalized_quaternion", (4,)),
    ("extraspecial2", (1, 0)),
]


@pytest.mark.parametrize("family,params", TINY)
def test_d1_matches_conjugacy_classes(family, params):
    G = build(family, *params)
    cd = conjugacy_data(G)
    op = simultaneous_classes(G, 1)
    assert op.orbit_count == cd.num_classes
    assert op.real_orbit_count == sum(
        1 for c in range(cd.num_classes) if cd.inverse_class[c] == c
    )


@pytest.mark.parametrize("family,params", TINY)
@pytest.mark.parametrize("d", [1, 2])
def test_diagonal_double_cosets_biject_with_orbits(family, params, d):
    # |ΔG \ G^(d+1) / ΔG| equals the number of simultaneous classes of G^d
    G = build(family, *params)
    P, Delta = diagonal_subgroup(G, d)
    dc = double_cosets(P, Delta)
    op = simultaneous_classes(G, d)
    assert len(dc.cosets) == op.orbit_count
    assert dc.self_inverse_count == op.real_orbit_count


def test_orbit_reps_are_canonical():
    G = symmetric(3)
    op = simultaneous_classes(G, 2)
    assert op.orbit_count == 11
    assert op.reps[0] == (0, 0)
    assert list(op.reps) == sorted(op.reps)
    assert len(op.real_flags) == 11 and all(op.real_flags)


def test_orbit_cap():
    with pytest.raises(GroupError):
        simultaneous_classes(symmetric(4), 3, orbit_cap=1000)


def test_double_cosets_whole_group_and_trivial():
    G = build("generalized_quaternion", 4)
    whole = SubgroupSpec(elements=tuple(range(8)), order=8)
    dc = double_cosets(G, whole)
    assert len(dc.cosets) == 1 and dc.self_inverse_count == 1
    triv = SubgroupSpec(elements=(0,), order=1)
    dc = double_cosets(G, triv)
    assert len(dc.cosets) == 8
    assert dc.self_inverse_count == sum(1 for g in range(8) if G.mul[g][g] == 0)


def test_double_cosets_requires_subgroup():
    G = cyclic(6)
    with pytest.raises(GroupError):
        double_cosets(G, SubgroupSpec(elements=(0, 1), order=2))


def test_frame_pair_count_trivial_cases():
    G = symmetric(3)
    whole = SubgroupSpec(elements=tuple(range(6)), order=6)
    assert frame_pair_count(G, whole) == 1
    triv = SubgroupSpec(elements=(0,), order=1)
    assert frame_pair_count(G, triv) == sum(1 for g in range(6) if G.mul[g][g] == 0)


def test_frame_equals_self_inverse_count():
    # S4 with an S3 point stabilizer
    G = symmetric(4)
    fix = [g for g in range(24) if eval(G.labels[g])[3] == 3]
    K = subgroup_closure(G, fix)
    assert K.order == 6
    dc = double_cosets(G, K)
    assert frame_pair_count(G, K) == dc.self_inverse_count
    # and the diagonal pair
    S3 = symmetric(3)
    P, Delta = diagonal_subgroup(S3, 1)
    assert frame_pair_count(P, Delta) == double_cosets(P, Delta).self_inverse_count


def test_left_coset_map_partitions():
    G = symmetric(3)
    K = subgroup_closure(G, [next(g for g in range(6) if G.element_order(g) == 3)])
    coset_of, reps = left_coset_map(G, K)
    assert len(reps) == 2
    assert sorted(coset_of) == [0, 0, 0, 1, 1, 1]


def test_gelfand_symmetric_check():
    S3 = symmetric(3)
    P, Delta = diagonal_subgroup(S3, 1)
    assert gelfand_symmetric_check(P, Delta)
    C4 = cyclic(4)
    triv = SubgroupSpec(elements=(0,), order=1)
    assert not gelfand_symmetric_check(C4, triv)
    whole = SubgroupSpec(elements=tuple(range(4)), order=4)
    assert gelfand_symmetric_check(C4, whole)


def test_square_root_counts():
    G = build("generalized_quaternion", 4)
    r = square_root_counts(G)
    assert sum(r) == 8
    assert r[0] == 2  # identity: itself and the central involution
    assert max(r) == 6


def test_real_iff_all_orbits_real():
    real = simultaneous_classes(build("symmetric", 4), 2)
    assert real.real_orbit_count == real.orbit_count
    complexish = simultaneous_classes(build("cyclic", 3), 1)
    assert complexish.real_orbit_count == 1
