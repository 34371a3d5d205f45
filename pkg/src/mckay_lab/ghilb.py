"""G-Hilb fan construction from torus-fixed clusters.

A cluster is a monomial set that is divisibility-closed, contains one
monomial per character, and avoids multiples of xyz; its cone is cut out by
the valuation inequalities v(m) >= v(r_chi) over the divisibility-minimal
monomials m of each character chi.  All clusters are found by seeding from a
generic weight and crossing every interior wall of every discovered cone;
the assembled fan is then validated as a unimodular triangulation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import (
    BoundaryEdge,
    FanValidationFailed,
    InconsistentCharts,
    LowerDimensionalCone,
    MultiplicityOutOfRange,
    SearchExhausted,
    UnknownCone,
)
from .groups import (
    Character,
    GroupData,
    Monomial,
    MONO_ONE,
    mono_divides,
    mono_degree,
)
from .intlin import cross3, dot3, primitive, primitive_signed, rank_of
from .lattice import Cone, WeightVector, cone_is_unimodular, junior_points, valuation


class GGraph:
    """One monomial per character, divisibility-closed and xyz-free."""

    def __init__(self, group: GroupData, representatives: dict[Character, Monomial]):
        self.group = group
        self.representatives = dict(representatives)
        self.monomials = frozenset(representatives.values())
        self._key = tuple(sorted(self.monomials))
        self._validate()

    def representative(self, chi: Character) -> Monomial:
        return self.representatives[chi]

    def __contains__(self, m: Monomial) -> bool:
        return m in self.monomials

    def __eq__(self, other) -> bool:
        return isinstance(other, GGraph) and self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    def __repr__(self) -> str:
        from .groups import mono_str

        return "{" + ", ".join(mono_str(m) for m in self._key) + "}"

    def _validate(self) -> None:
        group = self.group
        n = group.order
        if len(self.representatives) != n or len(self.monomials) != n:
            raise SearchExhausted(f"cluster needs exactly {n} distinct monomials")
        if self.representatives.get(group.trivial_character) != MONO_ONE:
            raise SearchExhausted("the trivial character must be represented by 1")
        for chi, m in self.representatives.items():
            if group.kappa(m) != chi:
                raise SearchExhausted(f"representative {m} has the wrong character")
            if min(m) > 0:
                raise SearchExhausted(f"representative {m} is divisible by xyz")
            if max(m) >= n:
                raise SearchExhausted(f"representative {m} has an exponent >= {n}")
        for m in self.monomials:
            for i in range(3):
                if m[i]:
                    lower = tuple(v - (1 if j == i else 0) for j, v in enumerate(m))
                    if lower not in self.monomials:
                        raise SearchExhausted(f"{m} has divisor {lower} outside the cluster")


@dataclass(frozen=True)
class FanEdge:
    """A 2-cone of the fan: a pair of ray indices plus the cones gluing along it."""

    rays: tuple[int, int]
    cones: tuple[int, ...]

    @property
    def is_boundary(self) -> bool:
        return len(self.cones) == 1


class DivisorCoefficients:
    """The table q[chi, ray] = e(r_chi), checked for chart consistency."""

    def __init__(self, fan: "GHilbFan"):
        self.fan = fan
        self.q: dict[tuple[Character, int], Fraction] = {}
        for ray_idx, ray in enumerate(fan.rays):
            cone_indices = fan.cones_at_ray(ray_idx)
            for chi in fan.group.characters:
                vals = {
                    valuation(ray, fan.ggraphs[ci].representative(chi))
                    for ci in cone_indices
                }
                if len(vals) != 1:
                    raise InconsistentCharts(
                        f"charts at ray {ray} disagree on q for {chi}: {sorted(vals)}"
                    )
                self.q[(chi, ray_idx)] = vals.pop()

    def __call__(self, chi: Character, ray_idx: int) -> Fraction:
        return self.q[(chi, ray_idx)]


class GHilbFan:
    """The validated triangulation of the junior simplex with its cluster charts."""

    def __init__(self, group: GroupData, ggraphs: list[GGraph], cones: list[Cone]):
        self.group = group
        self.rays: tuple[WeightVector, ...] = tuple(junior_points(group))
        self._ray_index = {r: i for i, r in enumerate(self.rays)}
        self.ggraphs = tuple(ggraphs)
        self.cones = tuple(cones)
        self.cone_rays: tuple[tuple[int, int, int], ...] = tuple(
            tuple(sorted(self._ray_index[r] for r in c.rays)) for c in cones
        )
        self._cones_at_ray: dict[int, list[int]] = {i: [] for i in range(len(self.rays))}
        for ci, triple in enumerate(self.cone_rays):
            for ri in triple:
                self._cones_at_ray[ri].append(ci)
        self.edges = self._collect_edges()
        self._edge_index = {e.rays: k for k, e in enumerate(self.edges)}
        self._validate()
        self.q = DivisorCoefficients(self)

    # -- lookups ------------------------------------------------------------

    def ray_index(self, ray: WeightVector) -> int:
        return self._ray_index[ray]

    def cones_at_ray(self, ray_idx: int) -> list[int]:
        return self._cones_at_ray[ray_idx]

    def edge_between(self, i: int, j: int) -> FanEdge:
        key = (min(i, j), max(i, j))
        if key not in self._edge_index:
            raise UnknownCone(f"rays {key} do not span an edge of the fan")
        return self.edges[self._edge_index[key]]

    def cone_index(self, cone: Cone) -> int:
        triple = tuple(sorted(self._ray_index.get(r, -1) for r in cone.rays))
        for ci, rays in enumerate(self.cone_rays):
            if rays == triple:
                return ci
        raise UnknownCone(f"{cone} is not a maximal cone of the fan")

    def interior_edges(self) -> list[FanEdge]:
        return [e for e in self.edges if not e.is_boundary]

    def edges_at_ray(self, ray_idx: int) -> list[FanEdge]:
        return [e for e in self.edges if ray_idx in e.rays]

    def exceptional_ray_indices(self) -> list[int]:
        """Rays of exceptional divisors: the non-corner junior points."""
        return [i for i, r in enumerate(self.rays) if not r.is_corner]

    # -- construction helpers -----------------------------------------------

    def _collect_edges(self) -> tuple[FanEdge, ...]:
        pairs: dict[tuple[int, int], list[int]] = {}
        for ci, triple in enumerate(self.cone_rays):
            for k in range(3):
                for l in range(k + 1, 3):
                    pairs.setdefault((triple[k], triple[l]), []).append(ci)
        return tuple(
            FanEdge(rays=key, cones=tuple(sorted(cs))) for key, cs in sorted(pairs.items())
        )

    def _validate(self) -> None:
        group = self.group
        n = group.order
        if len(self.cones) != n:
            raise FanValidationFailed(f"{len(self.cones)} cones for a group of order {n}")
        if len(set(self.cone_rays)) != n:
            raise FanValidationFailed("duplicate maximal cones")
        used_rays = {ri for triple in self.cone_rays for ri in triple}
        if used_rays != set(range(len(self.rays))):
            raise FanValidationFailed("fan rays do not match the junior points")
        for cone in self.cones:
            if not cone_is_unimodular(group, cone):
                raise FanValidationFailed(f"non-unimodular cone {cone}")
        for edge in self.edges:
            i, j = edge.rays
            geometric_boundary = any(
                self.rays[i].coords[k] == 0 and self.rays[j].coords[k] == 0
                for k in range(3)
            )
            if geometric_boundary != (len(edge.cones) == 1) or len(edge.cones) > 2:
                raise FanValidationFailed(
                    f"edge {edge.rays} is glued by {len(edge.cones)} cones"
                )
        for ri in range(len(self.rays)):
            self._validate_link(ri)

    def _validate_link(self, ray_idx: int) -> None:
        """The triangles around a vertex must close into a disc (or half-disc)."""
        cones_here = self.cones_at_ray(ray_idx)
        degree: dict[int, int] = {}
        for ci in cones_here:
            for other in self.cone_rays[ci]:
                if other != ray_idx:
                    degree[other] = degree.get(other, 0) + 1
        odd = [v for v, d in degree.items() if d == 1]
        bad = [v for v, d in degree.items() if d > 2]
        on_boundary = self.rays[ray_idx].is_boundary
        if bad or (len(odd) != 0 if not on_boundary else len(odd) != 2):
            raise FanValidationFailed(f"bad vertex link at ray {self.rays[ray_idx]}")
        # single component: walk the link graph
        adjacency: dict[int, list[int]] = {v: [] for v in degree}
        for ci in cones_here:
            a, b = [v for v in self.cone_rays[ci] if v != ray_idx]
            adjacency[a].append(b)
            adjacency[b].append(a)
        seen = set()
        stack = [next(iter(adjacency))]
        while stack:
            v = stack.pop()
            if v in seen:
                continue
            seen.add(v)
            stack.extend(adjacency[v])
        if seen != set(adjacency):
            raise FanValidationFailed(f"disconnected link at ray {self.rays[ray_idx]}")


# ---------------------------------------------------------------------------
# minimal monomials and cluster enumeration


@lru_cache(maxsize=None)
def _box_monomials(n: int) -> tuple[Monomial, ...]:
    """xyz-free monomials with exponents < n, by total degree then lex."""
    out = [
        (i, j, k)
        for i in range(n)
        for j in range(n)
        for k in range(n)
        if min(i, j, k) == 0
    ]
    out.sort(key=lambda m: (mono_degree(m), m))
    return tuple(out)


def minimal_monomials(group: GroupData, chi: Character) -> set[Monomial]:
    """Divisibility-minimal regular monomials of character chi."""
    return set(_minimal_by_character(group)[chi])


def _minimal_by_character(group: GroupData) -> dict[Character, tuple[Monomial, ...]]:
    if not hasattr(group, "_minimal_cache"):
        buckets: dict[Character, list[Monomial]] = {c: [] for c in group.characters}
        for m in _box_monomials(group.order):
            buckets[group.kappa(m)].append(m)
        result = {}
        for chi, monos in buckets.items():
            # monos is degree-sorted, so earlier elements can only divide later ones
            minimal: list[Monomial] = []
            for m in monos:
                if not any(mono_divides(p, m) for p in minimal):
                    minimal.append(m)
            result[chi] = tuple(minimal)
        group._minimal_cache = result
    return group._minimal_cache


def seed_ggraph(group: GroupData) -> GGraph:
    """The cluster of the chart containing a fixed generic interior weight.

    With v = (1, n, n^2), n the group order, every character has a unique
    valuation-minimizing monomial (distinct bounded exponent vectors cannot
    pair to the same base-n value), and the minimizers form a cluster: a
    divisor of a minimizer is the minimizer of its own character.
    """
    n = group.order
    v = (1, n, n * n)
    best: dict[Character, Monomial] = {}
    for m in _box_monomials(n):
        chi = group.kappa(m)
        cur = best.get(chi)
        if cur is None or dot3(v, m) < dot3(v, cur):
            best[chi] = m
    return GGraph(group, best)


def invariant_perpendicular(group: GroupData, e, f) -> tuple[int, int, int]:
    """Primitive invariant-lattice vector perpendicular to two junior points.

    Sign is lexicographic; callers orient as needed.
    """
    n = group.order
    u = primitive_signed(cross3(e.scaled(n), f.scaled(n)))
    order = group.character_order(group.kappa(u))
    return tuple(w * order for w in u)


def flip_ggraph(group: GroupData, graph: GGraph, cone: Cone, facet: tuple) -> GGraph:
    """The cluster of the chart across one interior facet of a cone.

    Every representative moves by the largest power of the facet's carving
    direction t (oriented positively on the cone's far ray) that keeps it a
    regular monomial: smaller shifts fail to generate on the far chart
    because t has negative valuation there.
    """
    e, f = facet
    (g,) = [r for r in cone.rays if r not in facet]
    t = invariant_perpendicular(group, e, f)
    if dot3(g.coords, t) < 0:
        t = tuple(-v for v in t)
    elif dot3(g.coords, t) == 0:
        raise LowerDimensionalCone(f"facet {facet} is not a facet of {cone}")
    shifted: dict[Character, Monomial] = {}
    for chi, r in graph.representatives.items():
        cur = r
        for _ in range(3 * group.order + 1):
            nxt = (cur[0] + t[0], cur[1] + t[1], cur[2] + t[2])
            if min(nxt) < 0:
                break
            cur = nxt
        else:
            raise SearchExhausted(f"unbounded shift across facet {facet}")
        shifted[chi] = cur
    return GGraph(group, shifted)


def _ggraphs_with_cones(group: GroupData) -> list[tuple[GGraph, Cone]]:
    """All torus-fixed clusters with their cones, by wall-crossing closure.

    Starting from the cluster of a generic chart, repeatedly cross every
    interior facet of every discovered chart; the dual graph of the
    triangulation is connected, so this reaches all |G| clusters.
    """
    n = group.order
    seed = seed_ggraph(group)
    found: dict[tuple, tuple[GGraph, Cone]] = {}
    queue = [seed]
    while queue:
        graph = queue.pop()
        if graph._key in found:
            continue
        cone = cone_of_ggraph(group, graph)
        found[graph._key] = (graph, cone)
        if len(found) > n:
            raise SearchExhausted(f"more than {n} clusters reached by wall crossing")
        rays = cone.rays
        for a in range(3):
            for b in range(a + 1, 3):
                e, f = rays[a], rays[b]
                if any(e.coords[k] == 0 and f.coords[k] == 0 for k in range(3)):
                    continue  # boundary facet of the octant
                neighbor = flip_ggraph(group, graph, cone, (e, f))
                if neighbor._key not in found:
                    queue.append(neighbor)
    if len(found) != n:
        raise SearchExhausted(f"found {len(found)} clusters, expected {n}")
    return [pair for _, pair in sorted(found.items())]


def enumerate_ggraphs(group: GroupData) -> list[GGraph]:
    """All torus-fixed clusters of the group, in a deterministic order."""
    return [g for g, _ in _ggraphs_with_cones(group)]


# ---------------------------------------------------------------------------
# cones of clusters


def ggraph_inequalities(group: GroupData, graph: GGraph) -> list[tuple[int, int, int]]:
    """Integer normals a with the cone of the cluster equal to {v >= 0, a.v >= 0}.

    Normals that are nonnegative throughout are implied by the octant and
    dropped; the rest are deduplicated up to positive scaling.
    """
    normals = []
    seen = set()
    minimal = _minimal_by_character(group)
    for chi in group.characters:
        r = graph.representative(chi)
        for m in minimal[chi]:
            if m == r:
                continue
            vec = (m[0] - r[0], m[1] - r[1], m[2] - r[2])
            if min(vec) >= 0:
                continue
            key = primitive(vec)
            if key not in seen:
                seen.add(key)
                normals.append(vec)
    return normals


def _extreme_rays(normals) -> list[tuple[int, int, int]]:
    """Extreme rays of {v >= 0} cut by the given halfspaces (incremental DD)."""
    octant = [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
    rays = [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
    seen: list[tuple[int, int, int]] = []

    def is_extreme(r) -> bool:
        tight = [a for a in octant + seen if dot3(a, r) == 0]
        return rank_of(tight) >= 2

    for a in normals:
        vals = [dot3(a, r) for r in rays]
        if all(v >= 0 for v in vals):
            seen.append(a)
            continue
        keep = [r for r, v in zip(rays, vals) if v >= 0]
        new = []
        for rp, vp in zip(rays, vals):
            if vp <= 0:
                continue
            for rm, vm in zip(rays, vals):
                if vm >= 0:
                    continue
                combo = primitive_signed(
                    tuple(vp * x - vm * y for x, y in zip(rm, rp))
                )
                new.append(combo)
        seen.append(a)
        candidates = {r for r in keep + new}
        rays = [
            r
            for r in sorted(candidates)
            if all(dot3(b, r) >= 0 for b in seen) and is_extreme(r)
        ]
    return rays


def cone_of_ggraph(group: GroupData, graph: GGraph) -> Cone:
    """The maximal cone whose chart carries the given cluster."""
    rays = _extreme_rays(ggraph_inequalities(group, graph))
    if len(rays) != 3 or rank_of(rays) != 3:
        raise LowerDimensionalCone(
            f"cluster {graph} cuts a cone with rays {rays}"
        )
    juniors = []
    for r in rays:
        total = sum(r)
        coords = tuple(Fraction(v, total) for v in r)
        wv = WeightVector(coords)
        if not group.in_weight_lattice(coords):
            raise LowerDimensionalCone(f"ray {coords} is not a lattice point")
        juniors.append(wv)
    return Cone(tuple(juniors))


def build_fan(group: GroupData) -> GHilbFan:
    """Enumerate all clusters, take their cones, and assemble the validated fan."""
    ggraphs = enumerate_ggraphs(group)
    paired = sorted(
        ((cone_of_ggraph(group, g), g) for g in ggraphs), key=lambda p: p[0].rays
    )
    return GHilbFan(group, [g for _, g in paired], [c for c, _ in paired])


# ---------------------------------------------------------------------------
# chart data


def chart_generator(fan: GHilbFan, cone: Cone, chi: Character) -> Monomial:
    """The monomial generating the chi-eigensheaf on the chart of the cone."""
    return fan.ggraphs[fan.cone_index(cone)].representative(chi)


def divisor_coefficients(fan: GHilbFan) -> DivisorCoefficients:
    return fan.q


def tautological_degree(fan: GHilbFan, chi: Character, edge: FanEdge) -> int:
    """Degree of the chi tautological bundle on the compact curve of an edge.

    With r, r' the chart generators on the two sides, r'/r = (m'/m)^k for the
    carving ratio m:m' oriented positively against the far ray of the first
    chart; the degree is that k, and it is never negative.
    """
    if edge.is_boundary:
        raise BoundaryEdge(f"edge {edge.rays} has a single chart")
    ci, cj = edge.cones
    r = fan.ggraphs[ci].representative(chi)
    r2 = fan.ggraphs[cj].representative(chi)
    if r == r2:
        return 0
    delta = (r2[0] - r[0], r2[1] - r[1], r2[2] - r[2])
    w = _oriented_edge_vector(fan, edge)
    # delta must be an integer multiple of w
    ks = {d // ww for d, ww in zip(delta, w) if ww}
    if len(ks) != 1 or any(d != ks.copy().pop() * ww for d, ww in zip(delta, w)):
        raise MultiplicityOutOfRange(
            f"generator ratio across {edge.rays} is not a power of the carving ratio"
        )
    k = ks.pop()
    if k < 0:
        raise MultiplicityOutOfRange(
            f"negative tautological degree {k} across {edge.rays}"
        )
    return k


def _oriented_edge_vector(fan: GHilbFan, edge: FanEdge) -> tuple[int, int, int]:
    """Primitive generator of M perpendicular to the edge, positive on the
    far ray of the first adjacent cone."""
    w = perpendicular_invariant(fan, edge)
    ci = edge.cones[0]
    far = [ri for ri in fan.cone_rays[ci] if ri not in edge.rays][0]
    val = dot3(fan.rays[far].coords, w)
    if val == 0:
        raise MultiplicityOutOfRange("carving direction degenerate on the far ray")
    return w if val > 0 else tuple(-v for v in w)


def perpendicular_invariant(fan: GHilbFan, edge: FanEdge) -> tuple[int, int, int]:
    """A primitive vector of M perpendicular to both rays of the edge.

    The sign is the lexicographic one; callers orient it as needed.
    """
    i, j = edge.rays
    n = fan.group.order
    u = primitive_signed(cross3(fan.rays[i].scaled(n), fan.rays[j].scaled(n)))
    order = fan.group.character_order(fan.group.kappa(u))
    return tuple(v * order for v in u)
