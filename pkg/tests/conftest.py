import pytest

from bicomm import (
    RationalMatrix,
    diagonal_matrix,
    group_closure,
    permutation_matrix,
    symmetric_group,
    trivial_group,
)


@pytest.fixture(scope="session")
def swap_group():
    return group_closure([permutation_matrix((1, 0))])


@pytest.fixture(scope="session")
def negation_d1():
    return group_closure([diagonal_matrix([-1])])


@pytest.fixture(scope="session")
def negation_d2():
    return group_closure([diagonal_matrix([-1, -1])])


@pytest.fixture(scope="session")
def rotation_c4():
    return group_closure([RationalMatrix.from_rows([[0, -1], [1, 0]])])


@pytest.fixture(scope="session")
def signed_permutations_d2():
    return group_closure([permutation_matrix((1, 0)), diagonal_matrix([-1, 1])])


@pytest.fixture(scope="session")
def s3_group():
    return symmetric_group(3)


@pytest.fixture(scope="session")
def catalogue(swap_group, negation_d1, negation_d2, rotation_c4, signed_permutations_d2, s3_group):
    """The full acceptance catalogue of (name, group) pairs."""
    return [
        ("trivial d=1", trivial_group(1)),
        ("trivial d=2", trivial_group(2)),
        ("trivial d=3", trivial_group(3)),
        ("negation d=1", negation_d1),
        ("negation d=2", negation_d2),
        ("S_2 d=2", swap_group),
        ("S_3 d=3", s3_group),
        ("C_4 d=2", rotation_c4),
        ("signed permutations d=2", signed_permutations_d2),
    ]
