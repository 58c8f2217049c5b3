import random

import pytest

from ybk.classify import enumerate_solutions, random_bijection_table
from ybk.solution import Solution, builtin


@pytest.fixture(scope="session")
def census2():
    return enumerate_solutions(2)


@pytest.fixture(scope="session")
def census3():
    return enumerate_solutions(3)


@pytest.fixture(scope="session")
def standard():
    return {
        "id1": builtin("identity", 1),
        "id2": builtin("identity", 2),
        "id3": builtin("identity", 3),
        "flip2": builtin("flip", 2),
        "flip3": builtin("flip", 3),
        "flip4": builtin("flip", 4),
        "dbl2": builtin("double_shift", 2),
        "shift2": builtin("shift", 2),
        "dih3": builtin("dihedral", 3),
        "dih5": builtin("dihedral", 5),
    }


def random_solutions(size, count, seed, require_ybe=True):
    """Seeded random bijections, optionally filtered to braid-relation solutions."""
    from ybk.solution import _table_is_ybe

    rng = random.Random(seed)
    out = []
    attempts = 0
    while len(out) < count and attempts < 100000:
        attempts += 1
        table = random_bijection_table(size, rng)
        if require_ybe and not _table_is_ybe(size, table):
            continue
        out.append(Solution(size, table))
    return out
