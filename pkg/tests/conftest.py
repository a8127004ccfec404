"""Session fixtures for objects that are worth building once."""

from __future__ import annotations

import pytest
from hypothesis import settings

from weylcheb import (
    AlgebraId,
    Kind,
    build_basis,
    build_root_system,
    closed_form_gf,
    recurrence_table,
    second_kind_table,
)

settings.register_profile("suite", max_examples=40, deadline=None)
settings.load_profile("suite")


@pytest.fixture(scope="session")
def a1():
    return build_root_system(AlgebraId.A1)


@pytest.fixture(scope="session")
def a2():
    return build_root_system(AlgebraId.A2)


@pytest.fixture(scope="session")
def c2():
    return build_root_system(AlgebraId.C2)


@pytest.fixture(scope="session")
def g2():
    return build_root_system(AlgebraId.G2)


@pytest.fixture(scope="session")
def g2_second(g2):
    return build_basis(g2, Kind.SECOND)


@pytest.fixture(scope="session")
def g2_first(g2):
    return build_basis(g2, Kind.FIRST)


@pytest.fixture(scope="session")
def a1_second(a1):
    return build_basis(a1, Kind.SECOND)


@pytest.fixture(scope="session")
def a1_first(a1):
    return build_basis(a1, Kind.FIRST)


@pytest.fixture(scope="session")
def g2_gf(g2, g2_second):
    return closed_form_gf(g2, g2_second)


@pytest.fixture(scope="session")
def g2_tables(g2, g2_second):
    """Both construction routes over 0 <= m, n <= 12, built once.

    Several tests compare against or read from these; the acceptance
    test rebuilds its own copies so its timing stays honest.
    """
    return (
        second_kind_table(g2, g2_second, 12, 12),
        recurrence_table(g2, g2_second, 12, 12),
    )
