import pytest

from minuscule.cli import build_case, default_catalog


@pytest.fixture(scope="session")
def catalog():
    return default_catalog()


@pytest.fixture(scope="session")
def bundle():
    """Cached access to a fully built case."""

    def _get(family, rank, node):
        return build_case(family, rank, node)

    return _get


def small_catalog():
    """Cases cheap enough for quadratic-or-worse exhaustive tests."""
    return [
        ("A", 1, 1),
        ("A", 2, 1),
        ("A", 3, 2),
        ("A", 4, 2),
        ("A", 5, 3),
        ("D", 4, 1),
        ("D", 4, 4),
        ("D", 5, 5),
        ("E", 6, 6),
    ]
