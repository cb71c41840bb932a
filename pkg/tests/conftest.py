"""Shared fixtures and hypothesis strategies."""

from pathlib import Path

import pytest
from hypothesis import strategies as st

from roughalg import FiniteAlgebra, Partition, Subset
from roughalg.tables import B4, BH4, BO5, Z4

REPO_ROOT = Path(__file__).resolve().parent.parent
TABLES_DIR = REPO_ROOT / "tables"


@pytest.fixture
def b4():
    return B4


@pytest.fixture
def bo5():
    return BO5


@pytest.fixture
def bh4():
    return BH4


@pytest.fixture
def z4():
    return Z4


@pytest.fixture
def worked_partition():
    """The order-5 partition {0,1 | 2 | 3 | 4} used by many examples."""
    return Partition(5, [[0, 1], [2], [3], [4]])


@pytest.fixture
def tables_dir():
    return TABLES_DIR


def algebras(max_n=4):
    """Random raw operation tables (no axioms imposed, any zero element)."""

    def build(n):
        entry = st.integers(0, n - 1)
        row = st.lists(entry, min_size=n, max_size=n)
        rows = st.lists(row, min_size=n, max_size=n)
        return st.tuples(rows, st.integers(0, n - 1)).map(
            lambda rz: FiniteAlgebra(n, rz[0], zero=rz[1])
        )

    return st.integers(1, max_n).flatmap(build)


def partitions(n):
    """Random partitions of {0..n-1}, via arbitrary label assignments."""

    def build(labels):
        classes = [
            [i for i in range(n) if labels[i] == lab] for lab in sorted(set(labels))
        ]
        return Partition(n, classes)

    return st.lists(st.integers(0, n - 1), min_size=n, max_size=n).map(build)


def subsets(n):
    return st.integers(0, (1 << n) - 1).map(lambda m: Subset(n, m))
