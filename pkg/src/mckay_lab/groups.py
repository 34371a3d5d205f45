"""Finite abelian diagonal subgroups of SL(3,C) as lattice quotients.

A group generated by diag(eps^a, eps^b, eps^c), eps a primitive r-th root of
unity, is stored through the weight overlattice L = Z^3 + sum Z*(a,b,c)/r and
the sublattice M of Z^3 of invariant Laurent monomials.  Characters are the
classes of Z^3/M, represented by their pairing residues against the given
generators, so that for a cyclic 1/r(a,b,c) the monomial x^i y^j z^k has
character (a*i + b*j + c*k) mod r.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import EmptyGenerators, NotInLattice, NotInSL3
from .intlin import det3, dot3, hnf_rows, hnf_rows_rational, mat3_inverse, smith_diagonal

Monomial = tuple  # (i, j, k) exponents of x^i y^j z^k; Laurent if negatives allowed

MONO_ONE: Monomial = (0, 0, 0)
VARIABLES = ("x", "y", "z")


def mono_mul(m1: Monomial, m2: Monomial) -> Monomial:
    return (m1[0] + m2[0], m1[1] + m2[1], m1[2] + m2[2])


def mono_div(m1: Monomial, m2: Monomial) -> Monomial:
    return (m1[0] - m2[0], m1[1] - m2[1], m1[2] - m2[2])


def mono_divides(m1: Monomial, m2: Monomial) -> bool:
    return m1[0] <= m2[0] and m1[1] <= m2[1] and m1[2] <= m2[2]


def mono_degree(m: Monomial) -> int:
    return m[0] + m[1] + m[2]


def mono_str(m: Monomial) -> str:
    """Compact text form: (2,1,0) -> 'x^2y', (0,0,0) -> '1'."""
    parts = []
    for var, e in zip(VARIABLES, m):
        if e == 1:
            parts.append(var)
        elif e != 0:
            parts.append(f"{var}^{e}")
    return "".join(parts) or "1"


@dataclass(frozen=True)
class Character:
    """An element of Z^3/M, as pairing residues against the group generators."""

    residues: tuple[int, ...]
    moduli: tuple[int, ...]

    def __mul__(self, other: "Character") -> "Character":
        return Character(
            tuple((a + b) % r for a, b, r in zip(self.residues, other.residues, self.moduli)),
            self.moduli,
        )

    def __pow__(self, k: int) -> "Character":
        return Character(
            tuple((a * k) % r for a, r in zip(self.residues, self.moduli)), self.moduli
        )

    def inverse(self) -> "Character":
        return self ** (-1)

    @property
    def is_trivial(self) -> bool:
        return not any(self.residues)

    def label(self) -> str:
        if len(self.residues) == 1:
            return f"chi_{self.residues[0]}"
        if not self.residues:  # the trivial group's one character
            return "chi_0"
        return "chi_(" + ",".join(str(a) for a in self.residues) + ")"

    def __repr__(self) -> str:
        return self.label()


class GroupData:
    """Immutable container for one finite abelian diagonal subgroup.

    Built by :func:`group_from_generators`; do not mutate after construction.
    """

    def __init__(self, generators):
        gens = _normalize_generators(generators)
        self.generators = gens
        # residue coordinates pair against every nontrivial generator
        self.moduli = tuple(r for r, _ in gens) or ()

        self.elements = _element_closure(gens)
        self.order = len(self.elements)

        self.weight_basis = _weight_basis(gens)
        self.invariant_basis = _invariant_basis(self.weight_basis)
        self._check_indices()

        self.kappa_x = self.kappa((1, 0, 0))
        self.kappa_y = self.kappa((0, 1, 0))
        self.kappa_z = self.kappa((0, 0, 1))
        self.trivial_character = self.kappa(MONO_ONE)
        self.characters = self._character_closure()

    # -- characters --------------------------------------------------------

    def kappa(self, m: Monomial) -> Character:
        """Character of a (Laurent) monomial: its class in Z^3/M."""
        return Character(
            tuple(dot3(w, m) % r for r, w in self.generators), self.moduli
        )

    def kappa_of_variable(self, var: str) -> Character:
        return {"x": self.kappa_x, "y": self.kappa_y, "z": self.kappa_z}[var]

    def is_invariant(self, m: Monomial) -> bool:
        return self.kappa(m).is_trivial

    def character_order(self, chi: Character) -> int:
        k, acc = 1, chi
        while not acc.is_trivial:
            acc, k = acc * chi, k + 1
        return k

    def _character_closure(self):
        seen = {self.trivial_character}
        frontier = [self.trivial_character]
        gens = (self.kappa_x, self.kappa_y, self.kappa_z)
        while frontier:
            cur = frontier.pop()
            for g in gens:
                nxt = cur * g
                if nxt not in seen:
                    seen.add(nxt)
                    frontier.append(nxt)
        if len(seen) != self.order:
            raise NotInSL3(
                f"character count {len(seen)} != group order {self.order}"
            )
        return tuple(sorted(seen, key=lambda c: c.residues))

    # -- lattices ----------------------------------------------------------

    def in_weight_lattice(self, l) -> bool:
        """Membership in L, tested by integrality against the M basis."""
        return all(dot3(l, m).denominator == 1 for m in self.invariant_basis)

    def age(self, l) -> int:
        """Coordinate sum of a fractional weight vector in L with coords in [0,1)."""
        coords = tuple(Fraction(v) for v in l)
        if any(v < 0 or v >= 1 for v in coords):
            raise NotInLattice(f"{l} has coordinates outside [0,1)")
        if not self.in_weight_lattice(coords):
            raise NotInLattice(f"{l} is not in the weight lattice")
        total = sum(coords)
        if total.denominator != 1:
            raise NotInSL3(f"age of {l} is not an integer")
        return int(total)

    def spec_string(self) -> str:
        """Round-trippable 'r:a,b,c+...' syntax."""
        return "+".join(f"{r}:{w[0]},{w[1]},{w[2]}" for r, w in self.generators) or "1:0,0,0"

    def _check_indices(self) -> None:
        # |G| = [L : Z^3] = [Z^3 : M]; both computed from determinants
        d = det3(self.weight_basis)
        if d == 0 or Fraction(1) / abs(d) != self.order:
            raise NotInSL3("weight lattice index disagrees with element count")
        if abs(det3(self.invariant_basis)) != self.order:
            raise NotInSL3("invariant lattice index disagrees with element count")
        diag = smith_diagonal([list(r) for r in self.invariant_basis])
        prod = 1
        for v in diag:
            prod *= v
        if prod != self.order:
            raise NotInSL3("Smith normal form index disagrees with element count")
        if not self.in_weight_lattice((1, 1, 1)):
            raise NotInSL3("xyz is not invariant")  # would contradict SL3

    def __repr__(self) -> str:
        return f"GroupData({self.spec_string()!r}, order={self.order})"


def _normalize_generators(generators):
    gens = []
    for r, weights in generators:
        r = int(r)
        a, b, c = (int(w) for w in weights)
        if r < 1:
            raise NotInSL3(f"generator order {r} must be >= 1")
        if (a + b + c) % r:
            raise NotInSL3(f"weights {(a, b, c)} do not sum to 0 mod {r}")
        reduced = (a % r, b % r, c % r)
        if reduced == (0, 0, 0):
            continue  # trivial generator contributes nothing
        if (r, reduced) not in gens:
            gens.append((r, reduced))
    return tuple(gens)


def _element_closure(gens):
    """All fractional weight vectors of group elements, as triples in [0,1)^3."""
    zero = (Fraction(0), Fraction(0), Fraction(0))
    seen = {zero}
    frontier = [zero]
    steps = [tuple(Fraction(w, r) for w in weights) for r, weights in gens]
    while frontier:
        cur = frontier.pop()
        for s in steps:
            nxt = tuple((a + b) % 1 for a, b in zip(cur, s))
            if nxt not in seen:
                seen.add(nxt)
                frontier.append(nxt)
    return tuple(sorted(seen))


def _weight_basis(gens):
    rows = [
        (Fraction(1), Fraction(0), Fraction(0)),
        (Fraction(0), Fraction(1), Fraction(0)),
        (Fraction(0), Fraction(0), Fraction(1)),
    ]
    rows += [tuple(Fraction(w, r) for w in weights) for r, weights in gens]
    basis = hnf_rows_rational(rows)
    if len(basis) != 3:
        raise NotInSL3("weight lattice is not full rank")
    return tuple(basis)


def _invariant_basis(weight_basis):
    # M = { m in Z^3 : B m in Z^3 } = B^{-1} Z^3 for B the L basis rows,
    # so a basis of M sits in the columns of B^{-1}
    inverse = mat3_inverse(weight_basis)
    rows = [tuple(inverse[i][j] for i in range(3)) for j in range(3)]
    for row in rows:
        if any(v.denominator != 1 for v in row):
            raise NotInSL3("invariant lattice basis is not integral")
    return tuple(tuple(int(v) for v in row) for row in hnf_rows([tuple(int(v) for v in r) for r in rows]))


def group_from_generators(generators) -> GroupData:
    """Build a GroupData from (r, (a, b, c)) generator pairs."""
    gens = list(generators)
    if not gens:
        raise EmptyGenerators("at least one generator is required")
    return GroupData(gens)


def parse_group_spec(spec: str) -> GroupData:
    """Parse the 'r:a,b,c' syntax, with '+' joining product factors."""
    gens = []
    for part in spec.split("+"):
        part = part.strip()
        if not part:
            continue
        try:
            r_text, w_text = part.split(":")
            weights = tuple(int(v) for v in w_text.split(","))
            if len(weights) != 3:
                raise ValueError
            gens.append((int(r_text), weights))
        except ValueError as exc:
            raise NotInSL3(f"cannot parse group factor {part!r}") from exc
    return group_from_generators(gens)

