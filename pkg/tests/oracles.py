"""Brute-force reference implementations, independent of the library's
algorithms, used to compute and freeze expected values."""

from fractions import Fraction

from mckay_lab.groups import MONO_ONE, mono_degree


def naive_ggraphs(group):
    """Depth-first enumeration over divisibility-closed, one-per-character,
    xyz-free monomial sets (feasible for small orders only)."""
    n = group.order
    pool = [
        (i, j, k)
        for i in range(n)
        for j in range(n)
        for k in range(n)
        if min(i, j, k) == 0
    ]
    pool.sort(key=lambda m: (mono_degree(m), m))
    kappa = {m: group.kappa(m) for m in pool}
    suffix = [set() for _ in range(len(pool) + 1)]
    for i in range(len(pool) - 1, -1, -1):
        suffix[i] = suffix[i + 1] | {kappa[pool[i]]}

    found = []
    chosen = {group.trivial_character: MONO_ONE}
    members = {MONO_ONE}

    def closed(m):
        return all(
            tuple(v - (1 if j == i else 0) for j, v in enumerate(m)) in members
            for i in range(3)
            if m[i]
        )

    def extend(start):
        if len(chosen) == n:
            found.append(frozenset(members))
            return
        missing = {c for c in group.characters if c not in chosen}
        for i in range(start, len(pool)):
            if not missing <= suffix[i]:
                return
            m = pool[i]
            chi = kappa[m]
            if chi in chosen or not closed(m):
                continue
            chosen[chi] = m
            members.add(m)
            extend(i + 1)
            del chosen[chi]
            members.discard(m)

    extend(1)
    return found


def cyclic_juniors(r, weights):
    """Junior points of 1/r(a,b,c) by direct enumeration of group powers."""
    out = set()
    for k in range(1, r):
        coords = tuple(Fraction((k * w) % r, r) for w in weights)
        if sum(coords) == 1:
            out.add(coords)
    return out


def cyclic_junior_count(r, weights):
    """The counting formula: powers whose reduced weights sum to r, plus corners."""
    a, b, c = weights
    interior = sum(
        1
        for k in range(1, r)
        if (k * a) % r + (k * b) % r + (k * c) % r == r
    )
    return interior + 3


def brute_carving_vector(group, e_coords, f_coords, bound):
    """Smallest invariant vector perpendicular to two rays, by box scan."""
    best = None
    for i in range(-bound, bound + 1):
        for j in range(-bound, bound + 1):
            for k in range(-bound, bound + 1):
                v = (i, j, k)
                if v == (0, 0, 0) or not group.is_invariant(v):
                    continue
                if sum(a * b for a, b in zip(e_coords, v)) != 0:
                    continue
                if sum(a * b for a, b in zip(f_coords, v)) != 0:
                    continue
                size = sum(abs(t) for t in v)
                if best is None or size < best[0]:
                    best = (size, v)
    return best[1] if best else None
