"""Junior simplex points, valuations and simplicial cones in the weight lattice."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DegenerateCone
from .groups import GroupData, Monomial
from .intlin import det3, dot3

CORNERS = (
    (Fraction(1), Fraction(0), Fraction(0)),
    (Fraction(0), Fraction(1), Fraction(0)),
    (Fraction(0), Fraction(0), Fraction(1)),
)


@dataclass(frozen=True, order=True)
class WeightVector:
    """A point of the junior simplex: l in L with l >= 0 and sum(l) = 1."""

    coords: tuple[Fraction, Fraction, Fraction]

    @property
    def is_corner(self) -> bool:
        return self.coords in CORNERS

    @property
    def is_boundary(self) -> bool:
        """True on the boundary of the simplex (some coordinate vanishes)."""
        return any(v == 0 for v in self.coords)

    @property
    def is_interior(self) -> bool:
        return all(v > 0 for v in self.coords)

    def scaled(self, n: int) -> tuple[int, int, int]:
        """Integer coordinates n*l (n a multiple of every denominator)."""
        triple = tuple(Fraction(v) * n for v in self.coords)
        assert all(v.denominator == 1 for v in triple)
        return tuple(int(v) for v in triple)

    def __repr__(self) -> str:
        return "(" + ",".join(str(v) for v in self.coords) + ")"


@dataclass(frozen=True)
class Cone:
    """A simplicial cone spanned by 1-3 junior-simplex rays."""

    rays: tuple[WeightVector, ...]

    def __post_init__(self):
        object.__setattr__(self, "rays", tuple(sorted(self.rays)))

    @property
    def dim(self) -> int:
        return len(self.rays)


def junior_points(group: GroupData) -> list[WeightVector]:
    """All lattice points of the junior simplex, corners included, in lex order."""
    points = {WeightVector(c) for c in CORNERS}
    for el in group.elements:
        if sum(el) == 1:
            points.add(WeightVector(tuple(el)))
    return sorted(points)


def valuation(e: WeightVector, m: Monomial) -> Fraction:
    """The Q-valuation e(m) of a Laurent monomial along the divisor of e."""
    return Fraction(dot3(e.coords, m))


def cone_is_unimodular(group: GroupData, cone: Cone) -> bool:
    """True iff the three rays form a Z-basis of L, i.e. |det| = 1/|G|."""
    if cone.dim != 3:
        raise DegenerateCone(f"expected a 3-cone, got dimension {cone.dim}")
    d = det3([r.coords for r in cone.rays])
    if d == 0:
        raise DegenerateCone("cone rays are linearly dependent")
    return abs(d) == Fraction(1, group.order)
