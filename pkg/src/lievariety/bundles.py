"""Formal vector bundles over the rings of :mod:`lievariety.gradedring`.

A :class:`Bundle` is a rank together with a total Chern class.  Every
tensorial construction goes through the Chern character: Newton's
identities turn Chern classes into power sums of the Chern roots, the
character is multiplicative, and the inverse dictionary recovers Chern
classes.  Virtual differences (``End U - O``, say) live as
:class:`CharacterVector` values and only become bundles when asked.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import List

from .gradedring import (
    ChowRing,
    GradedClass,
    ProjBundleLayer,
    RingMismatchError,
    NotAUnitError,
    degree_part,
    invert_unit,
)

__all__ = [
    "Bundle",
    "CharacterVector",
    "from_chern",
    "trivial",
    "line_bundle",
    "segre",
    "chern_character",
    "bundle_from_character",
    "power_sums",
    "dual",
    "dsum",
    "tensor",
    "hom",
    "det",
    "twist",
    "adams",
    "adams2",
    "exterior_square",
    "sym_square",
    "pullback",
    "tautological_subline",
    "projbundle_pushforward",
]


@dataclass(frozen=True)
class Bundle:
    ring: ChowRing
    rank: int
    total_chern: GradedClass

    def __post_init__(self):
        if self.rank < 0:
            raise ValueError("rank must be nonnegative")
        if self.total_chern.ring != self.ring:
            raise RingMismatchError("total Chern class lives on another ring")
        if self.total_chern.constant != 1:
            raise NotAUnitError("total Chern class must have constant term 1")

    def chern(self, k: int) -> GradedClass:
        return degree_part(self.total_chern, k)

    @property
    def segre(self) -> GradedClass:
        return invert_unit(self.total_chern)

    @property
    def character(self) -> "CharacterVector":
        return chern_character(self)

    def __str__(self):
        return f"rank {self.rank}, c = {self.total_chern}"


@dataclass(frozen=True)
class CharacterVector:
    """A Chern character ch_0 + ch_1 + ..., stored as one graded class.

    ch_0 is the (virtual) rank and may be any integer.
    """

    ring: ChowRing
    ch: GradedClass

    @property
    def rank(self) -> Fraction:
        return self.ch.constant

    def component(self, k: int) -> GradedClass:
        return degree_part(self.ch, k)

    def power_sum(self, k: int) -> GradedClass:
        """p_k = k! ch_k (for k >= 1)."""
        return self.component(k) * factorial(k)

    def __add__(self, other: "CharacterVector") -> "CharacterVector":
        return CharacterVector(self.ring, self.ch + other.ch)

    def __sub__(self, other: "CharacterVector") -> "CharacterVector":
        return CharacterVector(self.ring, self.ch - other.ch)

    def __mul__(self, other: "CharacterVector") -> "CharacterVector":
        return CharacterVector(self.ring, self.ch * other.ch)

    def scaled(self, r) -> "CharacterVector":
        return CharacterVector(self.ring, self.ch * Fraction(r))

    def __eq__(self, other):
        return isinstance(other, CharacterVector) and self.ch == other.ch

    def __hash__(self):
        return hash(self.ch)

    def __str__(self):
        return f"ch = {self.ch}"


def from_chern(ring: ChowRing, rank: int, total_chern: GradedClass) -> Bundle:
    return Bundle(ring, rank, total_chern)


def trivial(ring: ChowRing, rank: int) -> Bundle:
    return Bundle(ring, rank, ring.one())


def line_bundle(c1: GradedClass) -> Bundle:
    """The line bundle with first Chern class ``c1``."""
    return Bundle(c1.ring, 1, c1.ring.one() + degree_part(c1, 1))


def segre(E: Bundle) -> GradedClass:
    """Total Segre class, the formal inverse of the total Chern class."""
    return invert_unit(E.total_chern)


# Newton's identities between elementary symmetric functions (Chern classes)
# and power sums of the Chern roots.

def _power_sums_from_chern(c: GradedClass) -> List[GradedClass]:
    ring = c.ring
    e = [degree_part(c, k) for k in range(ring.top_degree + 1)]
    p: List[GradedClass] = [ring.zero()]
    for k in range(1, ring.top_degree + 1):
        acc = e[k] * ((-1) ** (k - 1) * k)
        for i in range(1, k):
            acc = acc + e[i] * p[k - i] * ((-1) ** (i - 1))
        p.append(acc)
    return p


def _chern_from_power_sums(p: List[GradedClass], ring: ChowRing) -> GradedClass:
    e: List[GradedClass] = [ring.one()]
    for k in range(1, ring.top_degree + 1):
        acc = ring.zero()
        for i in range(1, k + 1):
            acc = acc + e[k - i] * p[i] * ((-1) ** (i - 1))
        e.append(acc * Fraction(1, k))
    total = ring.zero()
    for x in e:
        total = total + x
    return total


def power_sums(E: Bundle) -> List[GradedClass]:
    """[0, p_1, p_2, ...] up to the top degree of the ring."""
    return _power_sums_from_chern(E.total_chern)


def chern_character(E: Bundle) -> CharacterVector:
    ring = E.ring
    p = _power_sums_from_chern(E.total_chern)
    ch = ring.const(E.rank)
    for k in range(1, ring.top_degree + 1):
        ch = ch + p[k] * Fraction(1, factorial(k))
    return CharacterVector(ring, ch)


def _chern_of_character(v: CharacterVector) -> GradedClass:
    ring = v.ring
    p = [ring.zero()] + [v.power_sum(k) for k in range(1, ring.top_degree + 1)]
    return _chern_from_power_sums(p, ring)


def bundle_from_character(ring: ChowRing, v: CharacterVector) -> Bundle:
    """Materialize a character as a bundle; the rank must be a nonnegative integer."""
    if v.ring != ring:
        raise RingMismatchError(f"{v.ring!r} vs {ring!r}")
    r = v.rank
    if r.denominator != 1 or r < 0:
        raise ValueError(f"character has rank {r}; not an honest bundle")
    return Bundle(ring, int(r), _chern_of_character(v))


def adams(v: CharacterVector, k: int) -> CharacterVector:
    """psi^k: multiply the degree-d component by k^d."""
    ring = v.ring
    out = ring.zero()
    for d in range(ring.top_degree + 1):
        out = out + v.component(d) * (k ** d)
    return CharacterVector(ring, out)


def adams2(v: CharacterVector) -> CharacterVector:
    return adams(v, 2)


def _dual_character(v: CharacterVector) -> CharacterVector:
    return adams(v, -1)


def dual(E: Bundle) -> Bundle:
    return bundle_from_character(E.ring, _dual_character(chern_character(E)))


def dsum(E: Bundle, F: Bundle) -> Bundle:
    _same(E, F)
    return bundle_from_character(E.ring, chern_character(E) + chern_character(F))


def tensor(E: Bundle, F: Bundle) -> Bundle:
    _same(E, F)
    return bundle_from_character(E.ring, chern_character(E) * chern_character(F))


def hom(E: Bundle, F: Bundle) -> Bundle:
    """Hom(E, F) = E* (x) F."""
    return tensor(dual(E), F)


def det(E: Bundle) -> Bundle:
    return line_bundle(E.chern(1))


def twist(E: Bundle, L: Bundle) -> Bundle:
    if L.rank != 1:
        raise ValueError(f"can only twist by a line bundle, got rank {L.rank}")
    return tensor(E, L)


def exterior_square(E: Bundle) -> Bundle:
    ch = chern_character(E)
    return bundle_from_character(E.ring, (ch * ch - adams2(ch)).scaled(Fraction(1, 2)))


def sym_square(E: Bundle) -> Bundle:
    ch = chern_character(E)
    return bundle_from_character(E.ring, (ch * ch + adams2(ch)).scaled(Fraction(1, 2)))


def _same(E: Bundle, F: Bundle) -> None:
    if E.ring != F.ring:
        raise RingMismatchError(f"{E.ring!r} vs {F.ring!r}")


def pullback(E: Bundle, layer: ProjBundleLayer) -> Bundle:
    return Bundle(layer, E.rank, layer.lift(E.total_chern))


def tautological_subline(layer: ProjBundleLayer) -> Bundle:
    """O(-1) on the layer, with first Chern class -xi."""
    return line_bundle(-layer.xi)


def projbundle_pushforward(a: GradedClass, E: Bundle) -> GradedClass:
    """Push a class on P(E) down to the base.

    ``xi^k`` goes to ``s_{k-e+1}(E)``, which vanishes for ``k <= e - 2``.
    """
    layer = a.ring
    if not isinstance(layer, ProjBundleLayer):
        raise TypeError("push-forward needs a class on a projective bundle layer")
    if layer.base != E.ring or layer.fiber_bundle_rank != E.rank:
        raise RingMismatchError(f"{E} does not define {layer!r}")
    e = E.rank
    s = segre(E)
    out = layer.base.zero()
    for k, coeff in layer.coefficients(a).items():
        j = k - e + 1
        if j < 0:
            continue
        out = out + coeff * degree_part(s, j)
    return out
