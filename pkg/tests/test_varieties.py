import pytest
from hypothesis import given, strategies as st

from charbound.varieties import (
    CompleteIntersection,
    DimensionError,
    MultiIndex,
    Partition,
    partitions_of,
)


def test_dimension_examples():
    assert CompleteIntersection(3, (2,)).dimension == 2
    assert CompleteIntersection(4, (2, 2)).dimension == 2
    assert CompleteIntersection(2, (5,)).dimension == 1


def test_degree_examples():
    assert CompleteIntersection(3, (2,)).degree == 2
    assert CompleteIntersection(4, (2, 2)).degree == 4
    assert CompleteIntersection(5, (1, 1)).degree == 1


def test_multidegree_canonically_sorted():
    assert CompleteIntersection(5, (3, 1, 2)).multidegree == (1, 2, 3)
    assert CompleteIntersection(5, (3, 1, 2)) == CompleteIntersection(5, (2, 3, 1))


def test_hyperplane_section_examples():
    assert CompleteIntersection(3, (3,)).hyperplane_section() == CompleteIntersection(2, (3,))
    assert CompleteIntersection(4, (2, 2)).hyperplane_section() == CompleteIntersection(
        3, (2, 2)
    )


def test_hyperplane_section_of_curve_fails():
    with pytest.raises(DimensionError):
        CompleteIntersection(2, (4,)).hyperplane_section()


def test_validation():
    with pytest.raises(ValueError):
        CompleteIntersection(3, ())
    with pytest.raises(ValueError):
        CompleteIntersection(3, (2, 2, 2))
    with pytest.raises(ValueError):
        CompleteIntersection(3, (0,))


def test_json_roundtrip():
    ci = CompleteIntersection(4, (2, 3))
    assert CompleteIntersection.from_dict(ci.to_dict()) == ci
    assert CompleteIntersection.from_dict({"ambient_dim": 3, "multidegree": [2]}) == (
        CompleteIntersection(3, (2,))
    )
    with pytest.raises(ValueError):
        CompleteIntersection.from_dict({"multidegree": [2]})


varieties = st.integers(min_value=2, max_value=8).flatmap(
    lambda m: st.lists(
        st.integers(min_value=1, max_value=5), min_size=1, max_size=m - 1
    ).map(lambda degs: CompleteIntersection(m, tuple(degs)))
)


@given(varieties)
def test_hyperplane_section_preserves_degree(ci):
    if ci.dimension >= 2:
        section = ci.hyperplane_section()
        assert section.degree == ci.degree
        assert section.dimension == ci.dimension - 1


def test_multi_index():
    idx = MultiIndex((2, 1, 1))
    assert idx.weight == 4
    assert len(idx) == 3
    assert list(idx) == [2, 1, 1]
    with pytest.raises(ValueError):
        MultiIndex((0,))


def test_partition_normalization():
    assert Partition((2, 1, 0, 0)).parts == (2, 1)
    assert Partition(()).size == 0
    with pytest.raises(ValueError):
        Partition((1, 2))
    with pytest.raises(ValueError):
        Partition((-1,))


def test_partition_box_helpers():
    lam = Partition((2, 1))
    assert lam.fits_in_box(2, 2)
    assert not lam.fits_in_box(1, 5)
    assert lam.box_complement(2, 3) == Partition((2, 1))
    assert Partition((1,)).box_complement(2, 2) == Partition((2, 1))
    assert Partition(()).box_complement(2, 2) == Partition((2, 2))


def test_partitions_of():
    assert sorted(partitions_of(4)) == sorted(
        [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    )
    assert list(partitions_of(0)) == [()]
    assert sorted(partitions_of(4, max_part=2)) == sorted([(2, 2), (2, 1, 1), (1, 1, 1, 1)])
