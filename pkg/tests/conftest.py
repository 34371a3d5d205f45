"""Shared fixtures: the hand-checked groups and their pipelines, built once."""

import pytest

from mckay_lab import (
    QuiverAnalysis,
    build_fan,
    marked_triangulation,
    parse_group_spec,
)


class Pipeline:
    """Everything computed for one group, for compact test access."""

    def __init__(self, spec):
        self.group = parse_group_spec(spec)
        self.fan = build_fan(self.group)
        self.qa = QuiverAnalysis(self.fan)
        self.marked = marked_triangulation(self.fan)

    def ray(self, coords):
        from fractions import Fraction

        from mckay_lab import WeightVector

        return self.fan.ray_index(WeightVector(tuple(Fraction(c) for c in coords)))

    def chi(self, *residues):
        return next(
            c for c in self.group.characters if c.residues == tuple(residues)
        )

    def edge(self, coords_a, coords_b):
        return self.fan.edge_between(self.ray(coords_a), self.ray(coords_b))


_CACHE = {}


def pipeline(spec):
    if spec not in _CACHE:
        _CACHE[spec] = Pipeline(spec)
    return _CACHE[spec]


@pytest.fixture(scope="session")
def p3():
    """1/3(1,1,1): one interior divisor, case 1 / shape A."""
    return pipeline("3:1,1,1")


@pytest.fixture(scope="session")
def p4():
    """1/4(1,1,2): case 2 / shape B at P plus a boundary divisor at Q."""
    return pipeline("4:1,1,2")


@pytest.fixture(scope="session")
def p13():
    """1/13(1,5,7): the quiver picture group."""
    return pipeline("13:1,5,7")


@pytest.fixture(scope="session")
def p6():
    return pipeline("6:1,2,3")


@pytest.fixture(scope="session")
def p2():
    return pipeline("2:1,1,0")


@pytest.fixture(scope="session")
def p22():
    """Z/2 x Z/2: every junior point on the boundary."""
    return pipeline("2:1,1,0+2:0,1,1")


@pytest.fixture(scope="session")
def p33():
    """Z/3 x Z/3: has a case-3 / shape-C divisor."""
    return pipeline("3:1,2,0+3:0,1,2")


@pytest.fixture(scope="session")
def trivial_group():
    return parse_group_spec("1:0,0,0")
