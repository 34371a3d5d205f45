"""The McKay quiver, arrow vanishing orders, and sink-source graphs.

Vertices are characters; from each vertex three arrows leave, one per
coordinate, landing on the character twisted by that coordinate's weight.
Along a fixed exceptional divisor each arrow either survives or vanishes to
first order, every quiver triangle loses exactly one of its three arrows,
and the vanishing pattern around a vertex places it in one of 18 classes:
two sinks, seven sources, six charges and three tiles.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import (
    InvalidSpokePattern,
    MultiplicityOutOfRange,
    ShapeUnrecognized,
    WalkDiverged,
)
from .ghilb import GHilbFan
from .groups import Character, GroupData, VARIABLES
from .intlin import dot3

ORIENTATIONS = VARIABLES  # ("x", "y", "z")


@dataclass(frozen=True)
class VertexClass:
    """One of the 18 vanishing patterns around a quiver vertex."""

    kind: str  # "sink" | "source" | "charge" | "tile"
    bidegree: tuple[int, int]  # charges emitted/received: (1,0)-type vs (0,1)-type
    orientation: str | None = None  # line orientation, None for (3,0)/(0,3)/(3,3)

    @property
    def is_sink(self) -> bool:
        return self.kind == "sink"

    @property
    def is_source(self) -> bool:
        return self.kind == "source"

    def label(self) -> str:
        deg = f"({self.bidegree[0]},{self.bidegree[1]})"
        if self.orientation:
            return f"{self.orientation}-{deg}-{self.kind}"
        return f"{deg}-{self.kind}"

    def __repr__(self) -> str:
        return self.label()


SINK30 = VertexClass("sink", (3, 0))
SINK03 = VertexClass("sink", (0, 3))
SOURCE33 = VertexClass("source", (3, 3))


def _classify_pattern(outs: frozenset, ins: frozenset) -> VertexClass:
    """Map the vanishing out/in spoke orientations to a vertex class."""
    if outs and ins:
        if outs == ins and len(outs) == 1:
            return VertexClass("tile", (0, 0), next(iter(outs)))
        raise InvalidSpokePattern(f"mixed vanishing spokes out={outs} in={ins}")
    if not outs and not ins:
        return SOURCE33
    spokes = outs or ins
    out_side = bool(outs)
    if len(spokes) == 3:
        return SINK30 if out_side else SINK03
    if len(spokes) == 1:
        o = next(iter(spokes))
        # a vanishing out-spoke keeps one backward line: a (2,1)-source
        return VertexClass("source", (2, 1) if out_side else (1, 2), o)
    if len(spokes) == 2:
        o = next(iter(set(ORIENTATIONS) - spokes))
        # out-pairs sit on lines running along the arrows, in-pairs against them
        return VertexClass("charge", (1, 0) if out_side else (0, 1), o)
    raise InvalidSpokePattern(f"out={outs} in={ins}")


@dataclass(frozen=True)
class ChargeLine:
    """A straight run of same-orientation arrows from a source to a sink."""

    orientation: str
    chirality: tuple[int, int]  # (1,0): along the arrows, (0,1): against them
    source: Character
    sink: Character
    vertices: tuple[Character, ...]  # from source to sink, endpoints included

    @property
    def length(self) -> int:
        return len(self.vertices) - 1


@dataclass
class SinkSourceGraph:
    """Per-divisor analysis: vertex classes, charge lines, shape and lengths."""

    ray_index: int
    classes: dict[Character, VertexClass]
    lines: list[ChargeLine] = field(default_factory=list)
    shape: str | None = None  # "A" | "B" | "C", None when unrecognized
    shape_axis: str | None = None  # B: orientation of the lone third line
    lengths: dict | None = None
    problems: list[str] = field(default_factory=list)

    @property
    def sources(self) -> list[Character]:
        return sorted(
            (c for c, k in self.classes.items() if k.is_source),
            key=lambda c: c.residues,
        )

    @property
    def sink30_count(self) -> int:
        return sum(1 for k in self.classes.values() if k == SINK30)

    def sink03_vertices(self) -> list[Character]:
        return [c for c, k in self.classes.items() if k == SINK03]


class QuiverAnalysis:
    """Arrow vanishing data of the cluster family over one fan, all divisors."""

    def __init__(self, fan: GHilbFan):
        self.fan = fan
        self.group = fan.group
        self._mult: dict[int, dict[tuple[Character, str], int]] = {}
        self._graphs: dict[int, SinkSourceGraph] = {}

    # -- multiplicities ------------------------------------------------------

    def multiplicities(self, ray_idx: int) -> dict[tuple[Character, str], int]:
        """Vanishing order in {0,1} of every arrow along the ray's divisor."""
        if ray_idx not in self._mult:
            self._mult[ray_idx] = self._compute_mult(ray_idx)
        return self._mult[ray_idx]

    def _compute_mult(self, ray_idx: int) -> dict[tuple[Character, str], int]:
        fan, group = self.fan, self.group
        n = group.order
        e = fan.rays[ray_idx].scaled(n)
        cone_idx = fan.cones_at_ray(ray_idx)[0]
        graph = fan.ggraphs[cone_idx]
        out: dict[tuple[Character, str], int] = {}
        for chi in group.characters:
            r_tail = graph.representative(chi)
            for k, o in enumerate(ORIENTATIONS):
                head = chi * group.kappa_of_variable(o)
                val = e[k] + dot3(e, r_tail) - dot3(e, graph.representative(head))
                if val not in (0, n):
                    raise MultiplicityOutOfRange(
                        f"arrow ({chi},{o}) has multiplicity {val}/{n} along ray {ray_idx}"
                    )
                out[(chi, o)] = val // n
        return out

    def arrow_vanishing_order(self, tail: Character, orientation: str, ray_idx: int) -> int:
        """Public form of the multiplicity, asserting chart independence."""
        fan, group = self.fan, self.group
        n = group.order
        e = fan.rays[ray_idx].scaled(n)
        head = tail * group.kappa_of_variable(orientation)
        seen = set()
        for ci in fan.cones_at_ray(ray_idx):
            graph = fan.ggraphs[ci]
            val = (
                e[ORIENTATIONS.index(orientation)]
                + dot3(e, graph.representative(tail))
                - dot3(e, graph.representative(head))
            )
            seen.add(val)
        if len(seen) != 1:
            raise MultiplicityOutOfRange(
                f"arrow ({tail},{orientation}) is chart-dependent along ray {ray_idx}"
            )
        val = seen.pop()
        if val not in (0, n):
            raise MultiplicityOutOfRange(
                f"arrow ({tail},{orientation}) has multiplicity {val}/{n}"
            )
        return val // n

    def vanishing_counts(self, ray_idx: int) -> tuple[int, int, int]:
        """(a, b, c): how many x-, y-, z-arrows vanish along the divisor."""
        mult = self.multiplicities(ray_idx)
        return tuple(
            sum(mult[(chi, o)] for chi in self.group.characters) for o in ORIENTATIONS
        )

    def triangles_consistent(self, ray_idx: int) -> bool:
        """Exactly one vanishing arrow in each of the 2|G| quiver triangles."""
        mult = self.multiplicities(ray_idx)
        group = self.group
        kx, ky, kz = group.kappa_x, group.kappa_y, group.kappa_z
        for chi in group.characters:
            cyc = mult[(chi, "x")] + mult[(chi * kx, "y")] + mult[(chi * kx * ky, "z")]
            acyc = mult[(chi, "x")] + mult[(chi * kx, "z")] + mult[(chi * kx * kz, "y")]
            if cyc != 1 or acyc != 1:
                return False
        return True

    # -- vertex classes ------------------------------------------------------

    def classify_vertex(self, ray_idx: int, chi: Character) -> VertexClass:
        mult = self.multiplicities(ray_idx)
        group = self.group
        outs = frozenset(o for o in ORIENTATIONS if mult[(chi, o)])
        ins = frozenset(
            o
            for o in ORIENTATIONS
            if mult[(chi * group.kappa_of_variable(o).inverse(), o)]
        )
        return _classify_pattern(outs, ins)

    def all_classes(self, ray_idx: int) -> dict[Character, VertexClass]:
        return {c: self.classify_vertex(ray_idx, c) for c in self.group.characters}

    # -- sink-source graphs ---------------------------------------------------

    def sink_source_graph(self, ray_idx: int) -> SinkSourceGraph:
        if ray_idx not in self._graphs:
            self._graphs[ray_idx] = self._build_graph(ray_idx)
        return self._graphs[ray_idx]

    def _build_graph(self, ray_idx: int) -> SinkSourceGraph:
        classes = self.all_classes(ray_idx)
        ss = SinkSourceGraph(ray_index=ray_idx, classes=classes)
        interior = self.fan.rays[ray_idx].is_interior
        if not self.triangles_consistent(ray_idx):
            ss.problems.append("triangle identity fails")
        try:
            self._walk_lines(ss)
        except (WalkDiverged, InvalidSpokePattern) as exc:
            ss.problems.append(str(exc))
            if interior:
                raise
            return ss
        self._detect_shape(ss, interior)
        return ss

    def _walk_lines(self, ss: SinkSourceGraph) -> None:
        classes = ss.classes
        for source in ss.sources:
            cls = classes[source]
            if cls == SOURCE33:
                emitted = [(o, d) for o in ORIENTATIONS for d in (+1, -1)]
            elif cls.bidegree == (1, 2):
                # vanishing in-spoke: one forward line, two backward ones
                emitted = [(cls.orientation, +1)] + [
                    (o, -1) for o in ORIENTATIONS if o != cls.orientation
                ]
            else:  # (2,1): vanishing out-spoke
                emitted = [(cls.orientation, -1)] + [
                    (o, +1) for o in ORIENTATIONS if o != cls.orientation
                ]
            for orientation, direction in emitted:
                ss.lines.append(self._walk_one(classes, source, orientation, direction))
        # every charge vertex must lie on exactly one line
        visits: dict[Character, int] = {}
        for line in ss.lines:
            for v in line.vertices[1:-1]:
                visits[v] = visits.get(v, 0) + 1
        charges = {c for c, k in classes.items() if k.kind == "charge"}
        if set(visits) != charges or any(v != 1 for v in visits.values()):
            raise InvalidSpokePattern(
                f"charge vertices not covered exactly once on ray {ss.ray_index}"
            )

    def _walk_one(self, classes, source: Character, orientation: str, direction: int) -> ChargeLine:
        group = self.group
        step = group.kappa_of_variable(orientation)
        if direction < 0:
            step = step.inverse()
        want_chirality = (1, 0) if direction > 0 else (0, 1)
        want_sink = SINK30 if direction > 0 else SINK03
        path = [source]
        cur = source
        for _ in range(group.order + 1):
            cur = cur * step
            path.append(cur)
            cls = classes[cur]
            if cls == want_sink:
                # path runs in propagation order: the source emits, the sink receives
                return ChargeLine(
                    orientation=orientation,
                    chirality=want_chirality,
                    source=source,
                    sink=cur,
                    vertices=tuple(path),
                )
            if not (
                cls.kind == "charge"
                and cls.orientation == orientation
                and cls.bidegree == want_chirality
            ):
                raise InvalidSpokePattern(
                    f"line from {source} ({orientation},{direction}) hits {cls} at {cur}"
                )
        raise WalkDiverged(f"line from {source} exceeded {group.order} steps")

    def _detect_shape(self, ss: SinkSourceGraph, interior: bool) -> None:
        classes = ss.classes
        sources = ss.sources
        trivial = self.group.trivial_character
        sink03s = ss.sink03_vertices()

        def fail(msg: str):
            ss.problems.append(msg)
            if interior:
                raise ShapeUnrecognized(f"ray {ss.ray_index}: {msg}")

        if sink03s != [trivial]:
            return fail(f"(0,3)-sinks are {sink03s}, expected the trivial character")

        kinds = sorted(classes[s].bidegree for s in sources)
        if len(sources) == 1 and classes[sources[0]] == SOURCE33:
            ss.shape = "A"
            self._lengths_a(ss)
        elif len(sources) == 2 and kinds == [(1, 2), (2, 1)]:
            ss.shape = "B"
            self._lengths_b(ss)
        elif len(sources) == 3 and kinds in ([(1, 2)] * 3, [(2, 1)] * 3):
            ss.shape = "C"
            self._lengths_c(ss)
        else:
            return fail(f"source pattern {kinds} matches no shape")

    # -- shape lengths ---------------------------------------------------------

    def _backward_lines(self, ss: SinkSourceGraph) -> dict[str, ChargeLine]:
        """The (0,1)-lines into the trivial character, keyed by orientation."""
        back = {}
        for line in ss.lines:
            if line.chirality == (0, 1):
                if line.orientation in back:
                    raise ShapeUnrecognized(
                        f"two backward {line.orientation}-lines on ray {ss.ray_index}"
                    )
                back[line.orientation] = line
        return back

    def _lengths_a(self, ss: SinkSourceGraph) -> None:
        back = self._backward_lines(ss)
        fwd = {l.orientation: l for l in ss.lines if l.chirality == (1, 0)}
        a, b, c = (back[o].length for o in ORIENTATIONS)
        if any(fwd[o].length != back[o].length for o in ORIENTATIONS):
            raise ShapeUnrecognized(
                f"forward and backward line lengths differ on ray {ss.ray_index}"
            )
        ss.lengths = {"a": a, "b": b, "c": c}

    def _lengths_b(self, ss: SinkSourceGraph) -> None:
        classes = ss.classes
        back = self._backward_lines(ss)
        double = [s for s in ss.sources if sum(1 for l in back.values() if l.source == s) == 2]
        single = [s for s in ss.sources if s not in double]
        if len(double) != 1 or len(single) != 1:
            raise ShapeUnrecognized(f"ray {ss.ray_index}: bad backward line split")
        first, second = double[0], single[0]
        axis = classes[second].orientation
        if classes[first].orientation != axis:
            raise ShapeUnrecognized(
                f"ray {ss.ray_index}: the two sources disagree on the axis"
            )
        o1, o2 = [o for o in ORIENTATIONS if o != axis]
        a, b, c = back[o1].length, back[o2].length, back[axis].length
        fwd = {
            l.orientation: l
            for l in ss.lines
            if l.chirality == (1, 0) and l.source == second
        }
        a1 = self._steps_until(first, o1, set(fwd[o2].vertices))
        b1 = self._steps_until(first, o2, set(fwd[o1].vertices))
        ss.shape_axis = axis
        ss.lengths = {"a": a, "b": b, "c": c, "a1": a1, "b1": b1,
                      "orientations": (o1, o2, axis)}

    def _steps_until(self, start: Character, orientation: str, targets: set) -> int:
        """Forward steps from a vertex until first landing on a target vertex."""
        step = self.group.kappa_of_variable(orientation)
        cur = start
        for k in range(1, self.group.order + 1):
            cur = cur * step
            if cur in targets:
                return k
        raise WalkDiverged(f"no target reached from {start} along {orientation}")

    def _lengths_c(self, ss: SinkSourceGraph) -> None:
        back = self._backward_lines(ss)
        a, b, c = (back[o].length for o in ORIENTATIONS)
        source_of = {o: back[o].source for o in ORIENTATIONS}
        fwd: dict[tuple[str, str], int] = {}
        for line in ss.lines:
            if line.chirality == (1, 0):
                for o, s in source_of.items():
                    if line.source == s:
                        fwd[(o, line.orientation)] = line.length
        # the two forward lines of each source have the other two orientations
        expected = {(o, p) for o in ORIENTATIONS for p in ORIENTATIONS if o != p}
        if set(fwd) != expected:
            raise ShapeUnrecognized(
                f"ray {ss.ray_index}: forward lines {sorted(fwd)} are not the six chords"
            )
        ss.lengths = {
            "a": a, "b": b, "c": c,
            # length of the forward p-line emitted by the source of the o-line
            "fwd": fwd,
        }


def shape_lengths(ss: SinkSourceGraph) -> dict:
    """The shape-specific length record of a recognized sink-source graph."""
    if ss.shape is None or ss.lengths is None:
        raise ShapeUnrecognized(f"ray {ss.ray_index} has no recognized shape")
    return dict(ss.lengths)


def quiver_counts(group: GroupData) -> dict[str, int]:
    """Vertex, arrow and triangle counts of the McKay quiver."""
    n = group.order
    return {"vertices": n, "arrows": 3 * n, "triangles": len(quiver_triangles(group))}


def quiver_triangles(group: GroupData) -> set[frozenset]:
    """The 2|G| directed 3-cycles, each as a frozenset of (tail, orientation).

    Every triangle uses one arrow of each orientation; the two chiralities
    contribute |G| cycles each, keyed by the tail of their x-arrow.
    """
    kx, ky, kz = group.kappa_x, group.kappa_y, group.kappa_z
    triangles = set()
    for chi in group.characters:
        triangles.add(
            frozenset({(chi, "x"), (chi * kx, "y"), (chi * kx * ky, "z")})
        )
        triangles.add(
            frozenset({(chi, "x"), (chi * kx, "z"), (chi * kx * kz, "y")})
        )
    return triangles


def torus_positions(group: GroupData) -> dict[Character, tuple[int, int]]:
    """Positions of the quiver vertices in a fundamental domain of the torus.

    A monomial exponent (a, b, c) sits at a*u + b*v + c*w for unit steps u, v
    at 0 and 120 degrees and w = -(u+v); in the (u, v) basis that is
    (a-c, b-c).  Projected invariant monomials form a rank-2 lattice (xyz
    projects to zero), and reducing any exponent lift of a character against
    a reduced basis of that lattice gives one well-defined point per
    character inside a half-open fundamental parallelogram.
    """
    from .ghilb import _minimal_by_character

    basis = _reduced_projected_lattice(group)
    minimal = _minimal_by_character(group)
    pos = {}
    for chi in group.characters:
        w = minimal[chi][0]  # deterministic lift: smallest minimal monomial
        pos[chi] = _reduce_mod_lattice((w[0] - w[2], w[1] - w[2]), basis)
    return pos


def _reduced_projected_lattice(group: GroupData):
    """A Lagrange-reduced basis of the projected invariant lattice in Z^2."""
    from .intlin import hnf_rows

    rows = hnf_rows([(m[0] - m[2], m[1] - m[2]) for m in group.invariant_basis])
    if len(rows) != 2:
        raise InvalidSpokePattern("projected invariant lattice is not rank 2")
    b1, b2 = rows
    while True:
        if b1[0] ** 2 + b1[1] ** 2 > b2[0] ** 2 + b2[1] ** 2:
            b1, b2 = b2, b1
        norm = b1[0] ** 2 + b1[1] ** 2
        mu = (2 * (b1[0] * b2[0] + b1[1] * b2[1]) + norm) // (2 * norm)  # round
        if mu == 0:
            return b1, b2
        b2 = (b2[0] - mu * b1[0], b2[1] - mu * b1[1])


def _reduce_mod_lattice(p, basis):
    """Translate an integer point into the half-open fundamental parallelogram."""
    b1, b2 = basis
    det = b1[0] * b2[1] - b1[1] * b2[0]
    # integer floors of the rational coordinates of p in the basis
    s_num = p[0] * b2[1] - p[1] * b2[0]
    t_num = b1[0] * p[1] - b1[1] * p[0]
    if det < 0:
        s_num, t_num, det = -s_num, -t_num, -det
    fs, ft = s_num // det, t_num // det
    return (
        p[0] - fs * b1[0] - ft * b2[0],
        p[1] - fs * b1[1] - ft * b2[1],
    )
