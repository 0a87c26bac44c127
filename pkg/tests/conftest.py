import pytest

from coxinv.reflection_groups import AffineWeylGroup, FiniteCoxeterGroup
from coxinv.root_systems import build_root_system


@pytest.fixture(scope="session")
def finite_groups():
    return {(t, r): FiniteCoxeterGroup(build_root_system(t, r))
            for t, r in [("A", 1), ("A", 2), ("A", 3), ("B", 2), ("B", 3),
                         ("G", 2)]}


@pytest.fixture(scope="session")
def affine_groups():
    return {(t, r): AffineWeylGroup(build_root_system(t, r))
            for t, r in [("A", 1), ("A", 2), ("B", 2), ("G", 2)]}
