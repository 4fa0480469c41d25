"""Truncated graded rings over the rationals.

Three kinds of rings are supported:

* the Chow ring of P^3, generated by the hyperplane class ``h``;
* the Chow ring of the Grassmannian G(2,4), generated by ``c1`` and ``c2``
  (the Chern classes of the dual tautological bundle U*);
* projective bundle layers ``P(E) -> B``, polynomial in the tautological
  class ``xi = c1(O_E(1))`` with coefficients in the base ring ``B``.

Elements are :class:`GradedClass` instances.  They are immutable, hashable,
and always kept in a fixed normal form so that equality is syntactic.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Dict, Iterable, Mapping, Tuple, Union

Monomial = Tuple
Scalar = Union[int, Fraction]

__all__ = [
    "ChowRing",
    "GradedClass",
    "ProjBundleLayer",
    "RingMismatchError",
    "NotAUnitError",
    "ring_p3",
    "ring_g24",
    "add",
    "mul",
    "scale",
    "invert_unit",
    "integrate",
    "degree_part",
    "exp_class",
]


class RingMismatchError(ValueError):
    """Raised when classes from different rings are combined."""


class NotAUnitError(ValueError):
    """Raised when inverting a class whose constant term is not 1."""


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


class ChowRing:
    """Base class for the rings above.

    Subclasses define the monomials, their degrees, how to multiply two
    normal-form monomials, and how to integrate.
    """

    top_degree: int

    def degree(self, mono: Monomial) -> int:
        raise NotImplementedError

    def mul_monomials(self, a: Monomial, b: Monomial) -> Dict[Monomial, Fraction]:
        raise NotImplementedError

    def one_monomial(self) -> Monomial:
        raise NotImplementedError

    def format_monomial(self, mono: Monomial) -> str:
        raise NotImplementedError

    def sort_key(self, mono: Monomial):
        return (self.degree(mono), mono)

    def point_monomial(self) -> Monomial:
        raise TypeError(f"{self!r} has no integration; push forward first")

    # construction helpers

    def element(self, terms: Mapping[Monomial, Scalar]) -> "GradedClass":
        return GradedClass(self, {m: _frac(c) for m, c in terms.items()})

    def one(self) -> "GradedClass":
        return GradedClass(self, {self.one_monomial(): Fraction(1)})

    def zero(self) -> "GradedClass":
        return GradedClass(self, {})

    def const(self, c: Scalar) -> "GradedClass":
        return GradedClass(self, {self.one_monomial(): _frac(c)})

    def _normalize(self, terms: Mapping[Monomial, Fraction]) -> Dict[Monomial, Fraction]:
        out: Dict[Monomial, Fraction] = {}
        one = self.one_monomial()
        for m, c in terms.items():
            if c == 0 or self.degree(m) > self.top_degree:
                continue
            # route each monomial through the reduction rules
            for m2, c2 in self.mul_monomials(m, one).items():
                v = out.get(m2, Fraction(0)) + c * c2
                if v:
                    out[m2] = v
                else:
                    out.pop(m2, None)
        return out


class _P3Ring(ChowRing):
    top_degree = 3

    def __repr__(self):
        return "P3"

    def __eq__(self, other):
        return isinstance(other, _P3Ring)

    def __hash__(self):
        return hash("P3")

    def degree(self, mono):
        return mono[0]

    def one_monomial(self):
        return (0,)

    def mul_monomials(self, a, b):
        d = a[0] + b[0]
        return {(d,): Fraction(1)} if d <= 3 else {}

    def point_monomial(self):
        return (3,)

    def format_monomial(self, mono):
        d = mono[0]
        return "" if d == 0 else ("h" if d == 1 else f"h^{d}")

    @property
    def h(self) -> "GradedClass":
        return GradedClass(self, {(1,): Fraction(1)})

    def poly(self, coeffs: Iterable[Scalar]) -> "GradedClass":
        """Class ``sum coeffs[d] h^d``."""
        return GradedClass(self, {(d,): _frac(c) for d, c in enumerate(coeffs)})


# degree-3 and degree-4 reduction table on G(2,4), basis
#   deg 2: c1^2, c2   deg 3: c1 c2   deg 4: c2^2 (the point class)
_G24_RULES: Dict[Monomial, Dict[Monomial, Fraction]] = {
    (3, 0): {(1, 1): Fraction(2)},
    (4, 0): {(0, 2): Fraction(2)},
    (2, 1): {(0, 2): Fraction(1)},
}


class _G24Ring(ChowRing):
    top_degree = 4

    def __repr__(self):
        return "G24"

    def __eq__(self, other):
        return isinstance(other, _G24Ring)

    def __hash__(self):
        return hash("G24")

    def degree(self, mono):
        return mono[0] + 2 * mono[1]

    def one_monomial(self):
        return (0, 0)

    def mul_monomials(self, a, b):
        m = (a[0] + b[0], a[1] + b[1])
        if self.degree(m) > 4:
            return {}
        return dict(_G24_RULES.get(m, {m: Fraction(1)}))

    def point_monomial(self):
        return (0, 2)

    def sort_key(self, mono):
        # c1^2 before c2 inside degree 2
        return (self.degree(mono), -mono[0])

    def format_monomial(self, mono):
        a, b = mono
        parts = []
        if a:
            parts.append("c1" if a == 1 else f"c1^{a}")
        if b:
            parts.append("c2" if b == 1 else f"c2^{b}")
        return "".join(parts)

    @property
    def c1(self) -> "GradedClass":
        return GradedClass(self, {(1, 0): Fraction(1)})

    @property
    def c2(self) -> "GradedClass":
        return GradedClass(self, {(0, 1): Fraction(1)})


_P3 = _P3Ring()
_G24 = _G24Ring()


def ring_p3() -> ChowRing:
    """Chow ring of P^3: basis 1, h, h^2, h^3 with h^4 = 0."""
    return _P3


def ring_g24() -> ChowRing:
    """Chow ring of G(2,4) presented by c1, c2 and the Schubert pairing table."""
    return _G24


class ProjBundleLayer(ChowRing):
    """Classes on a projective bundle P(E) over ``base``, as polynomials in xi.

    There is no Grothendieck relation here: the fiber class is only ever
    eliminated by :func:`lievariety.bundles.projbundle_pushforward`.  Terms of
    total degree above ``dim B + rank - 1`` are dropped.
    """

    def __init__(self, base: ChowRing, fiber_bundle_rank: int, fiber_class_name: str = "xi"):
        if fiber_bundle_rank < 1:
            raise ValueError("a projective bundle needs rank >= 1")
        self.base = base
        self.fiber_bundle_rank = fiber_bundle_rank
        self.fiber_class_name = fiber_class_name
        self.top_degree = base.top_degree + fiber_bundle_rank - 1

    def __repr__(self):
        return f"P[{self.fiber_class_name}, rank {self.fiber_bundle_rank}]({self.base!r})"

    def __eq__(self, other):
        return (
            isinstance(other, ProjBundleLayer)
            and self.base == other.base
            and self.fiber_bundle_rank == other.fiber_bundle_rank
            and self.fiber_class_name == other.fiber_class_name
        )

    def __hash__(self):
        return hash((self.base, self.fiber_bundle_rank, self.fiber_class_name))

    def degree(self, mono):
        k, bm = mono
        return k + self.base.degree(bm)

    def one_monomial(self):
        return (0, self.base.one_monomial())

    def mul_monomials(self, a, b):
        k = a[0] + b[0]
        out = {}
        for bm, c in self.base.mul_monomials(a[1], b[1]).items():
            if k + self.base.degree(bm) <= self.top_degree:
                out[(k, bm)] = c
        return out

    def sort_key(self, mono):
        return (self.degree(mono), -mono[0], self.base.sort_key(mono[1]))

    def format_monomial(self, mono):
        k, bm = mono
        x = "" if k == 0 else (self.fiber_class_name if k == 1 else f"{self.fiber_class_name}^{k}")
        return x + self.base.format_monomial(bm)

    @property
    def xi(self) -> "GradedClass":
        return GradedClass(self, {(1, self.base.one_monomial()): Fraction(1)})

    def lift(self, a: "GradedClass") -> "GradedClass":
        """Pull a base class back to the layer."""
        if a.ring != self.base:
            raise RingMismatchError(f"cannot lift a class on {a.ring!r} to {self!r}")
        return GradedClass(self, {(0, m): c for m, c in a.terms.items()})

    def coefficients(self, a: "GradedClass") -> Dict[int, "GradedClass"]:
        """Split ``a = sum_k xi^k * b_k`` and return ``{k: b_k}``."""
        if a.ring != self:
            raise RingMismatchError(f"{a.ring!r} is not {self!r}")
        split: Dict[int, Dict[Monomial, Fraction]] = {}
        for (k, bm), c in a.terms.items():
            split.setdefault(k, {})[bm] = c
        return {k: GradedClass(self.base, t) for k, t in split.items()}


class GradedClass:
    """An element of a truncated graded ring, in normal form."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: ChowRing, terms: Mapping[Monomial, Fraction]):
        self.ring = ring
        self.terms = ring._normalize(terms)
        self._hash = None

    # arithmetic

    def _coerce(self, other) -> "GradedClass":
        if isinstance(other, GradedClass):
            if other.ring != self.ring:
                raise RingMismatchError(f"{self.ring!r} vs {other.ring!r}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        t = dict(self.terms)
        for m, c in other.terms.items():
            t[m] = t.get(m, Fraction(0)) + c
        return GradedClass(self.ring, t)

    __radd__ = __add__

    def __neg__(self):
        return GradedClass(self.ring, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return GradedClass(self.ring, {m: c * other for m, c in self.terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: Dict[Monomial, Fraction] = {}
        ring = self.ring
        for ma, ca in self.terms.items():
            da = ring.degree(ma)
            for mb, cb in other.terms.items():
                if da + ring.degree(mb) > ring.top_degree:
                    continue
                for m, c in ring.mul_monomials(ma, mb).items():
                    out[m] = out.get(m, Fraction(0)) + ca * cb * c
        return GradedClass(ring, out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (Fraction(1) / other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * inverse(other)

    def __rtruediv__(self, other):
        return inverse(self) * other

    def __pow__(self, n: int):
        if n < 0:
            return inverse(self) ** (-n)
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # comparison / hashing

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.const(other)
        if not isinstance(other, GradedClass):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self.terms.items())))
        return self._hash

    # inspection

    @property
    def constant(self) -> Fraction:
        return self.terms.get(self.ring.one_monomial(), Fraction(0))

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, mono: Monomial) -> Fraction:
        return self.terms.get(tuple(mono), Fraction(0))

    def part(self, d: int) -> "GradedClass":
        return degree_part(self, d)

    def components(self) -> Dict[int, Dict[Monomial, Fraction]]:
        """Per-degree coefficient maps, ascending in degree."""
        out: Dict[int, Dict[Monomial, Fraction]] = {}
        for m in sorted(self.terms, key=self.ring.sort_key):
            out.setdefault(self.ring.degree(m), {})[m] = self.terms[m]
        return out

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for m in sorted(self.terms, key=self.ring.sort_key):
            c = self.terms[m]
            name = self.ring.format_monomial(m)
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if name and a == 1:
                body = name
            elif name and a.denominator != 1:
                body = f"({a}){name}"
            else:
                body = f"{a}{name}"
            pieces.append((sign, body))
        first_sign, first = pieces[0]
        s = ("-" if first_sign == "-" else "") + first
        for sign, body in pieces[1:]:
            s += f" {sign} {body}"
        return s

    def __repr__(self):
        return f"GradedClass({self.ring!r}, {self})"


def _check(a: GradedClass, b: GradedClass) -> None:
    if a.ring != b.ring:
        raise RingMismatchError(f"{a.ring!r} vs {b.ring!r}")


def add(a: GradedClass, b: GradedClass) -> GradedClass:
    _check(a, b)
    return a + b


def mul(a: GradedClass, b: GradedClass) -> GradedClass:
    _check(a, b)
    return a * b


def scale(a: GradedClass, r: Scalar) -> GradedClass:
    return a * _frac(r)


def degree_part(a: GradedClass, d: int) -> GradedClass:
    if d < 0:
        raise ValueError("degree must be nonnegative")
    ring = a.ring
    return GradedClass(ring, {m: c for m, c in a.terms.items() if ring.degree(m) == d})


def invert_unit(a: GradedClass) -> GradedClass:
    """Inverse of a class with constant term 1, as a truncated geometric series."""
    if a.constant != 1:
        raise NotAUnitError(f"constant term of {a} is {a.constant}, not 1")
    nil = a.ring.one() - a
    result = a.ring.one()
    power = a.ring.one()
    for _ in range(a.ring.top_degree):
        power = power * nil
        if power.is_zero():
            break
        result = result + power
    return result


def inverse(a: GradedClass) -> GradedClass:
    """Inverse of a class with nonzero constant term."""
    c = a.constant
    if c == 0:
        raise NotAUnitError(f"{a} has zero constant term")
    return invert_unit(a * (1 / c)) * (1 / c)


def integrate(a: GradedClass) -> Fraction:
    """Coefficient of the point class (P3 or G24 only)."""
    if isinstance(a.ring, ProjBundleLayer):
        raise TypeError("cannot integrate on a projective bundle layer; push forward first")
    return a.coefficient(a.ring.point_monomial())


def exp_class(x: GradedClass) -> GradedClass:
    """exp(x) for x with zero constant term, truncated at the top degree."""
    if x.constant != 0:
        raise ValueError("exp_class needs a nilpotent argument")
    result = x.ring.one()
    power = x.ring.one()
    for k in range(1, x.ring.top_degree + 1):
        power = power * x
        if power.is_zero():
            break
        result = result + power * Fraction(1, factorial(k))
    return result
