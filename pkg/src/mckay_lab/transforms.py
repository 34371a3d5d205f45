"""Cohomological degree and support of the skyscraper transforms.

For each character the transform of the origin skyscraper twisted by it is a
shift of a sheaf; which shift, and its support, is read off arrow vanishing
data: degree 0 lives where all three arrows out of the character die (a
(3,0)-sink for divisor components, a split pair of vanishing divisors for
curve components), degree -1 on the divisors where the character is a
source, and degree -2 only for the trivial character, on the whole
exceptional locus.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import EmptySupport, MultiDegreeSupport, NoExceptionalLocus
from .ghilb import GHilbFan
from .groups import Character
from .quiver import ORIENTATIONS, QuiverAnalysis

# support cells: ("divisor", ray) or ("curve", (ray, ray))
Cell = tuple


def divisor_cell(ray_idx: int) -> Cell:
    return ("divisor", ray_idx)

def curve_cell(i: int, j: int) -> Cell:
    return ("curve", (min(i, j), max(i, j)))


def support_h0(fan: GHilbFan, qa: QuiverAnalysis, chi: Character) -> list[Cell]:
    """Maximal cells where all three arrows out of chi vanish jointly.

    A divisor qualifies when the three arrows all vanish along it; a compact
    curve qualifies when every arrow dies on one of its two divisors but
    neither divisor kills all three.
    """
    _require_nontrivial_locus(fan)
    divisors = []
    for ri in fan.exceptional_ray_indices():
        mult = qa.multiplicities(ri)
        if all(mult[(chi, o)] for o in ORIENTATIONS):
            divisors.append(ri)
    cells = [divisor_cell(ri) for ri in divisors]
    chosen = set(divisors)
    for edge in fan.interior_edges():
        i, j = edge.rays
        if i in chosen or j in chosen:
            continue  # the curve lies inside an included divisor
        mi, mj = qa.multiplicities(i), qa.multiplicities(j)
        covered = all(mi[(chi, o)] or mj[(chi, o)] for o in ORIENTATIONS)
        all_i = all(mi[(chi, o)] for o in ORIENTATIONS)
        all_j = all(mj[(chi, o)] for o in ORIENTATIONS)
        if covered and not all_i and not all_j:
            cells.append(curve_cell(i, j))
    return sorted(cells)


def support_h1(fan: GHilbFan, qa: QuiverAnalysis, chi: Character) -> list[Cell]:
    """Divisors whose sink-source graph classifies chi as a source."""
    _require_nontrivial_locus(fan)
    return sorted(
        divisor_cell(ri)
        for ri in fan.exceptional_ray_indices()
        if qa.classify_vertex(ri, chi).is_source
    )


def support_h2(fan: GHilbFan, qa: QuiverAnalysis, chi: Character) -> list[Cell]:
    """The full exceptional locus for the trivial character, else empty."""
    _require_nontrivial_locus(fan)
    if not chi.is_trivial:
        return []
    return sorted(divisor_cell(ri) for ri in fan.exceptional_ray_indices())


@dataclass(frozen=True)
class TransformProfile:
    """Unique nonzero cohomological degree and support of one transform."""

    character: Character
    degree: int  # 0, -1 or -2
    components: tuple[Cell, ...]
    descriptor: str
    connected: bool


def transform_profile(fan: GHilbFan, qa: QuiverAnalysis, chi: Character) -> TransformProfile:
    _require_nontrivial_locus(fan)
    h0 = support_h0(fan, qa, chi)
    h1 = support_h1(fan, qa, chi)
    h2 = support_h2(fan, qa, chi)
    if chi.is_trivial:
        # independent content: the honest degree-0 and -1 supports must vanish
        if h0 or h1:
            raise MultiDegreeSupport(
                f"trivial character has higher support: h0={h0} h1={h1}"
            )
        return TransformProfile(
            character=chi,
            degree=-2,
            components=tuple(h2),
            descriptor="O_Y(Exc) (x) O_Exc[2]",
            connected=_is_connected(fan, h2),
        )
    nonempty = [deg for deg, sup in ((0, h0), (-1, h1)) if sup]
    if len(nonempty) > 1:
        raise MultiDegreeSupport(f"{chi} supported in degrees {nonempty}")
    if not nonempty:
        raise EmptySupport(f"{chi} has empty support in all degrees")
    if nonempty == [0]:
        return TransformProfile(
            character=chi,
            degree=0,
            components=tuple(h0),
            descriptor="L_chi^{-1} (x) O_supp",
            connected=_is_connected(fan, h0),
        )
    return TransformProfile(
        character=chi,
        degree=-1,
        components=tuple(h1),
        descriptor="sheaf[1]",
        connected=_is_connected(fan, h1),
    )


def _require_nontrivial_locus(fan: GHilbFan) -> None:
    if fan.group.order < 2:
        raise NoExceptionalLocus("the trivial group has no exceptional locus")


def _cell_rays(cell: Cell) -> tuple[int, ...]:
    return (cell[1],) if cell[0] == "divisor" else cell[1]


def _is_connected(fan: GHilbFan, cells) -> bool:
    """Connectivity of a cell set under nonempty scheme intersection."""
    if not cells:
        return True
    cone_sets = [frozenset(t) for t in fan.cone_rays]

    def meets(c1: Cell, c2: Cell) -> bool:
        both = set(_cell_rays(c1)) | set(_cell_rays(c2))
        return any(both <= rays for rays in cone_sets)

    remaining = list(cells)
    component = {remaining.pop()}
    grew = True
    while grew and remaining:
        grew = False
        for cell in list(remaining):
            if any(meets(cell, c) for c in component):
                component.add(cell)
                remaining.remove(cell)
                grew = True
    return not remaining
