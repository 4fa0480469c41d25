"""Degrees of the four components of the variety of 4-dimensional Lie brackets.

Each component ``C1..C4`` of the cone of Lie brackets in
``Hom(wedge^2 V4, V4) = C^24`` has a smooth birational model: a projective
bundle over ``P(V4*)`` (hyperplanes U), the flag variety ``F(1,3,V4)``, or
a bundle of ``P^1 x P^2`` over ``G(2,V4)``.  Degrees are Segre numbers of
these bundles, computed here twice:

* ``degree_component`` builds every bundle from the tautological sequence
  with the tools of :mod:`lievariety.bundles` (the *derived* route);
* ``reference_degree`` evaluates the same closed formulas on the published
  reference classes (``REFERENCE_CLASSES``), verbatim.

``degree_report`` runs both, together with several independent
re-derivations (iterated push-forwards, closed forms), and collects every
comparison as a :class:`CrossCheck`.  It raises :class:`CrossCheckError`
when any of them disagree.

Conventions on ``P(V4*)``: ``h`` is the hyperplane class, ``B = V4/U`` is the
line bundle with ``c1(B) = h``, so ``s(U) = 1 + h``, and ``E(-1)`` means
``E (x) B*``.  On ``G(2,V4)``, ``c1, c2`` are the Chern classes of ``U*`` and
``E(-1)`` means ``E (x) det U``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Callable, Dict, List, Optional, Union

from . import bundles as bd
from .bundles import Bundle
from .gradedring import (
    GradedClass,
    ProjBundleLayer,
    degree_part,
    integrate,
    invert_unit,
    ring_g24,
    ring_p3,
)

__all__ = [
    "ComponentTag",
    "CrossCheck",
    "CrossCheckError",
    "DegreeReport",
    "REFERENCE_CLASSES",
    "REFERENCE_DEGREES",
    "REFERENCE_TOTAL",
    "p3_bundles",
    "g24_bundles",
    "flag_bundles",
    "stretched_chern",
    "stretched_elementary",
    "pushforward_S",
    "pushforward_S_closed_form",
    "c3_power_sums",
    "c3_power_sum_formula",
    "degree_component",
    "reference_degree",
    "degree_report",
]


class ComponentTag(str, enum.Enum):
    C1 = "C1"
    C2 = "C2"
    C3 = "C3"
    C4 = "C4"

    @classmethod
    def parse(cls, tag: Union[str, "ComponentTag"]) -> "ComponentTag":
        if isinstance(tag, cls):
            return tag
        try:
            return cls(str(tag).upper())
        except ValueError:
            raise ValueError(f"unknown component {tag!r}; expected one of C1, C2, C3, C4") from None


Number = Union[GradedClass, Fraction]


# -- bundles on P(V4*) ----------------------------------------------------------

def p3_bundles() -> Dict[str, Bundle]:
    """Tautological bundles on P(V4*) and the parameter bundles built from them."""
    R = ring_p3()
    h = R.h
    B = bd.line_bundle(h)  # V4/U
    V = bd.trivial(R, 4)
    U = bd.bundle_from_character(R, V.character - B.character)
    Bd = bd.dual(B)
    U_tw = bd.twist(U, Bd)  # U(-1)
    detU_dual = bd.dual(bd.det(U))
    return {
        "V4/U": B,
        "U": U,
        "U*": bd.dual(U),
        "U(-1)": U_tw,
        # G_U: maps V4 -> U whose restriction to U is scalar
        "G": bd.dsum(bd.hom(B, U), bd.trivial(R, 1)),
        # H_U: symmetric tensors in Hom(wedge^2 U, U)
        "H": bd.twist(bd.sym_square(U), detU_dual),
        "End(U)(-1)": bd.twist(bd.tensor(U, bd.dual(U)), Bd),
        "Hom(V4/U,End U)": bd.hom(B, bd.tensor(U, bd.dual(U))),
        "U* (x) wedge2 U*": bd.tensor(bd.dual(U), bd.exterior_square(bd.dual(U))),
    }


def g24_bundles() -> Dict[str, Bundle]:
    """Tautological bundles on G(2,V4) and the bundles of the C4 model."""
    R = ring_g24()
    U_dual = bd.from_chern(R, 2, R.one() + R.c1 + R.c2)
    U = bd.dual(U_dual)
    Q = bd.bundle_from_character(R, bd.trivial(R, 4).character - U.character)
    end_u = bd.tensor(U, U_dual)
    sl_u = bd.bundle_from_character(R, end_u.character - bd.trivial(R, 1).character)
    # Hom(wedge^2(V4/U), U) = U (x) det Q* = U (x) det U
    u_tw = bd.twist(U, bd.det(U))
    return {
        "U": U,
        "U*": U_dual,
        "Q": Q,
        "Q*": bd.dual(Q),
        "sl(U)": sl_u,
        "U(-1)": u_tw,
        "R": bd.dsum(bd.dual(Q), u_tw),
    }


# -- the flag variety F(1,3,V4) = P(U) over P(V4*) -----------------------------------

def flag_bundles() -> Dict[str, Bundle]:
    """Bundles on the flag layer; its fiber class is l = c1(L*)."""
    base = p3_bundles()
    U = base["U"]
    layer = ProjBundleLayer(U.ring, U.rank, "l")
    L = bd.tautological_subline(layer)
    Ld = bd.dual(L)
    Up = bd.pullback(U, layer)
    Bp = bd.pullback(base["V4/U"], layer)
    U_over_L = bd.bundle_from_character(layer, Up.character - L.character)
    M = bd.hom(bd.exterior_square(U_over_L), L)
    end_u = bd.tensor(Up, bd.dual(Up))
    hom_lu = bd.hom(L, Up)
    # F = M + Hom(V4/U, End U) - Hom(V4/U, Hom(L, U)) in K-theory
    F_ch = M.character + bd.hom(Bp, end_u).character - bd.hom(Bp, hom_lu).character
    return {
        "L": L,
        "U": Up,
        "V4/U": Bp,
        "M": M,
        "U(-1) (x) L*": bd.tensor(bd.twist(Up, bd.dual(Bp)), Ld),
        "F": bd.bundle_from_character(layer, F_ch),
    }


def pushforward_S() -> GradedClass:
    """p_* of S = s(M) c(U(-1) (x) L*) from the flag variety to P(V4*)."""
    fb = flag_bundles()
    S = fb["M"].segre * fb["U(-1) (x) L*"].total_chern
    return bd.projbundle_pushforward(S, p3_bundles()["U"])


def stretched_chern(E: Bundle, z: Union[int, Fraction, GradedClass]) -> GradedClass:
    """c_z(E) = sum_j z^j c_j(E); ``z`` may be a scalar or a class."""
    ring = E.ring
    zc = z if isinstance(z, GradedClass) else ring.const(z)
    out = ring.zero()
    power = ring.one()
    for j in range(ring.top_degree + 1):
        out = out + power * E.chern(j)
        power = power * zc
    return out


def stretched_elementary(E: Bundle, z: Union[int, Fraction, GradedClass]) -> GradedClass:
    """e_z(E) = sum_j z^j e_j, e_j elementary in the shifted roots 1 + v_i.

    Uses e_z = (1 + z)^r c_{z/(1+z)}(E), with r the rank of E.
    """
    ring = E.ring
    zc = z if isinstance(z, GradedClass) else ring.const(z)
    onez = ring.one() + zc
    # expanded as sum_j z^j c_j (1 + z)^(r - j), so z may have a constant term
    out = ring.zero()
    power_w = ring.one()
    for j in range(E.rank + 1):
        c_j = E.chern(j) if j <= ring.top_degree else ring.zero()
        out = out + power_w * c_j * onez ** (E.rank - j)
        power_w = power_w * zc
    return out


def pushforward_S_closed_form() -> GradedClass:
    """p_* S = (e_w - 1)/2 + h/(1+h) e_w with w = 2/(1+h), e = e(U(-1)).

    Summing the two geometric series term by term gives a plus sign in front
    of the second term.
    """
    R = ring_p3()
    h = R.h
    inv = invert_unit(R.one() + h)
    e_w = stretched_elementary(p3_bundles()["U(-1)"], 2 * inv)
    return (e_w - 1) * Fraction(1, 2) + h * inv * e_w


# -- C3 -----------------------------------------------------------------------------

def c3_power_sums() -> List[GradedClass]:
    """[p1, p2, p3] of U* (x) wedge^2 U*, from ch(U*) ch(wedge^2 U*)."""
    b = p3_bundles()
    v = b["U*"].character * bd.exterior_square(b["U*"]).character
    return [v.power_sum(k) for k in (1, 2, 3)]


def c3_power_sum_formula() -> GradedClass:
    """(p1^3 + 3 p1 p2 + 2 p3)/6 for U* (x) wedge^2 U*.

    This is the complete homogeneous h_3 of the Chern roots, i.e. s_3 of the
    *dual* bundle Hom(V4/U, End U).
    """
    p1, p2, p3 = c3_power_sums()
    return (p1 ** 3 + 3 * p1 * p2 + 2 * p3) * Fraction(1, 6)


# -- multinomial sums ----------------------------------------------------------------

def _s(seg: GradedClass, k: int) -> GradedClass:
    return degree_part(seg, k) if k >= 0 else seg.ring.zero()


def _c1_sum(sG: GradedClass, sH: GradedClass, n: int = 11) -> Fraction:
    total = Fraction(0)
    for i in range(n + 1):
        j = n - i
        total += Fraction(factorial(n), factorial(i) * factorial(j)) * integrate(_s(sG, i - 3) * _s(sH, j - 5))
    return total


def _c4_sum(sA: GradedClass, sSl: GradedClass, sR: GradedClass, n: int = 7) -> Fraction:
    total = Fraction(0)
    for i in range(n + 1):
        for j in range(n + 1 - i):
            coeff = Fraction(factorial(i + j), factorial(i) * factorial(j))
            total += coeff * integrate(_s(sA, i - 1) * _s(sSl, j - 2) * _s(sR, n - i - j))
    return total


def _iterated_degree(E1: Bundle, E2: Bundle, extra: Optional[Callable[[GradedClass], GradedClass]] = None) -> Fraction:
    """Integral of c1(O(1,1))^dim over P(E1) x_B P(E2), by two push-forwards.

    ``extra`` maps the combined class zeta to the integrand (default zeta^dim).
    """
    base = E1.ring
    lay1 = ProjBundleLayer(base, E1.rank, "x")
    E2p = bd.pullback(E2, lay1)
    lay2 = ProjBundleLayer(lay1, E2.rank, "y")
    zeta = lay2.lift(lay1.xi) + lay2.xi
    integrand = extra(zeta) if extra else zeta ** lay2.top_degree
    once = bd.projbundle_pushforward(integrand, E2p)
    twice = bd.projbundle_pushforward(once, E1)
    return integrate(twice)


# -- derived degrees ------------------------------------------------------------------

def _degree_c1() -> Fraction:
    b = p3_bundles()
    return _c1_sum(b["G"].segre, b["H"].segre)


def _degree_c2() -> Fraction:
    sE = p3_bundles()["End(U)(-1)"].segre
    return integrate(degree_part(sE * pushforward_S(), 3))


def _degree_c3() -> Fraction:
    return integrate(p3_bundles()["Hom(V4/U,End U)"].segre.part(3))


def _degree_c4() -> Fraction:
    g = g24_bundles()
    # the P^1 factor parametrizes lines in (V4/U)* = Q*
    return _c4_sum(g["Q*"].segre, g["sl(U)"].segre, g["R"].segre)


_DERIVED = {
    ComponentTag.C1: _degree_c1,
    ComponentTag.C2: _degree_c2,
    ComponentTag.C3: _degree_c3,
    ComponentTag.C4: _degree_c4,
}


def degree_component(tag: Union[str, ComponentTag]) -> Fraction:
    """Degree of the projectivized component, from bundles derived by the engine."""
    return _DERIVED[ComponentTag.parse(tag)]()


# -- reference classes ------------------------------------------------------------------

def _reference_classes() -> Dict[str, GradedClass]:
    P, G = ring_p3(), ring_g24()
    h, c1, c2 = P.h, G.c1, G.c2
    return {
        "s(G)": (1 - h) ** -4,
        "s(H)": (1 + 2 * h) ** 4 * (1 + h) ** -10,
        "p_*S": P.poly([13, -90, 318, -738]),
        "c(End(U)(-1))": (1 - h) / (1 + h) ** 4,
        "p1(E)": 9 * h,
        "p2(E)": h ** 2,
        "p3(E)": -15 * h ** 3,
        "s3(E)": 121 * h ** 3,
        "c(sl(U))": 1 + 4 * c2 - c1 ** 2,
        "s(sl(U))": 1 - 4 * c2 + c1 ** 2 + 10 * c2 ** 2,
        "s(Q)": 1 - c1 + c1 ** 2 - c2,
        "s(R)": 1 + 4 * c1 + 10 * c1 ** 2 + 40 * c1 * c2 + 70 * c2 ** 2,
    }


REFERENCE_CLASSES: Dict[str, GradedClass] = _reference_classes()
REFERENCE_DEGREES: Dict[ComponentTag, int] = {
    ComponentTag.C1: 660,
    ComponentTag.C2: 57,
    ComponentTag.C3: 121,
    ComponentTag.C4: 195,
}
REFERENCE_TOTAL = 1033


def reference_degree(tag: Union[str, ComponentTag]) -> Fraction:
    """The degree formulas evaluated on ``REFERENCE_CLASSES`` as given."""
    tag = ComponentTag.parse(tag)
    ref = REFERENCE_CLASSES
    if tag is ComponentTag.C1:
        return _c1_sum(ref["s(G)"], ref["s(H)"])
    if tag is ComponentTag.C2:
        return integrate(degree_part(invert_unit(ref["c(End(U)(-1))"]) * ref["p_*S"], 3))
    if tag is ComponentTag.C3:
        p1, p2, p3 = ref["p1(E)"], ref["p2(E)"], ref["p3(E)"]
        return integrate((p1 ** 3 + 3 * p1 * p2 + 2 * p3) * Fraction(1, 6))
    return _c4_sum(ref["s(Q)"], ref["s(sl(U))"], ref["s(R)"])


# -- report -------------------------------------------------------------------------

@dataclass(frozen=True)
class CrossCheck:
    name: str
    lhs: Number
    rhs: Number

    @property
    def ok(self) -> bool:
        return self.lhs == self.rhs

    def __str__(self):
        mark = "ok" if self.ok else "MISMATCH"
        return f"[{mark}] {self.name}: {_fmt(self.lhs)} vs {_fmt(self.rhs)}"


def _fmt(x: Number) -> str:
    if isinstance(x, Fraction):
        return str(x.numerator) if x.denominator == 1 else str(x)
    return str(x)


@dataclass
class DegreeReport:
    degrees: Dict[ComponentTag, Fraction]
    reference: Dict[ComponentTag, Fraction]
    intermediates: Dict[str, Number] = field(default_factory=dict)
    checks: List[CrossCheck] = field(default_factory=list)

    @property
    def total(self) -> Fraction:
        return sum(self.degrees.values(), Fraction(0))

    @property
    def reference_total(self) -> Fraction:
        return sum(self.reference.values(), Fraction(0))

    @property
    def failures(self) -> List[CrossCheck]:
        return [c for c in self.checks if not c.ok]

    @property
    def ok(self) -> bool:
        return not self.failures

    def as_dict(self) -> Dict[str, int]:
        out = {t.value: _as_int(d) for t, d in self.degrees.items()}
        out["total"] = _as_int(self.total)
        return out


def _as_int(x: Fraction):
    return int(x) if x.denominator == 1 else str(x)


class CrossCheckError(RuntimeError):
    """Two evaluation routes of the same quantity disagree."""

    def __init__(self, report: DegreeReport):
        self.report = report
        names = ", ".join(c.name for c in report.failures)
        super().__init__(f"{len(report.failures)} cross-check(s) failed: {names}")


def degree_report(strict: bool = True) -> DegreeReport:
    """Compute all four degrees, the intermediates and every cross-check.

    With ``strict`` a :class:`CrossCheckError` (carrying the report) is
    raised if any check fails.
    """
    p3 = p3_bundles()
    g24 = g24_bundles()
    ref = REFERENCE_CLASSES
    degrees = {t: degree_component(t) for t in ComponentTag}
    reference = {t: reference_degree(t) for t in ComponentTag}

    pS = pushforward_S()
    p1, p2, p3_ = c3_power_sums()
    E = p3["U* (x) wedge2 U*"]
    inter: Dict[str, Number] = {
        "s(G)": p3["G"].segre,
        "s(H)": p3["H"].segre,
        "p_*S": pS,
        "c(End(U)(-1))": p3["End(U)(-1)"].total_chern,
        "s(End(U)(-1))": p3["End(U)(-1)"].segre,
        "p1(E)": p1,
        "p2(E)": p2,
        "p3(E)": p3_,
        "s3(E)": degree_part(E.segre, 3),
        "power-sum s3": c3_power_sum_formula(),
        "s(Q)": g24["Q"].segre,
        "s(Q*)": g24["Q*"].segre,
        "s(sl(U))": g24["sl(U)"].segre,
        "c(sl(U))": g24["sl(U)"].total_chern,
        "s(R)": g24["R"].segre,
    }

    checks = [
        # independent re-derivations
        CrossCheck("C1 s(H) from Sym^2 U (x) det U*", inter["s(H)"], ref["s(H)"]),
        CrossCheck("C1 s(G) from Hom(V4/U, U) + O", inter["s(G)"], ref["s(G)"]),
        CrossCheck("C1 multinomial sum vs iterated push-forward", degrees[ComponentTag.C1],
                   _iterated_degree(p3["G"], p3["H"])),
        CrossCheck("C2 p_*S generic vs closed form", pS, pushforward_S_closed_form()),
        CrossCheck("C2 projection formula vs s_5(F) on the flag variety", degrees[ComponentTag.C2],
                   _degree_c2_full()),
        CrossCheck("C3 s3(E) from Segre class vs power-sum formula", inter["s3(E)"], inter["power-sum s3"]),
        CrossCheck("C4 s(sl(U)) inverse of c(sl(U))", invert_unit(ref["c(sl(U))"]), ref["s(sl(U))"]),
        CrossCheck("C4 multinomial sum vs iterated push-forward", degrees[ComponentTag.C4], _degree_c4_iterated()),
        # derived classes against the reference classes
        CrossCheck("p_*S derived vs reference", pS, ref["p_*S"]),
        CrossCheck("c(End(U)(-1)) derived vs reference", inter["c(End(U)(-1))"], ref["c(End(U)(-1))"]),
        CrossCheck("s(Q) derived vs reference", inter["s(Q)"], ref["s(Q)"]),
        CrossCheck("s(R) derived vs reference", inter["s(R)"], ref["s(R)"]),
        CrossCheck("c(sl(U)) derived vs reference", inter["c(sl(U))"], ref["c(sl(U))"]),
        CrossCheck("s(sl(U)) derived vs reference", inter["s(sl(U))"], ref["s(sl(U))"]),
        CrossCheck("s3(E) derived vs reference", inter["s3(E)"], ref["s3(E)"]),
    ]
    for t in ComponentTag:
        checks.append(CrossCheck(f"{t.value} derived vs reference route", degrees[t], reference[t]))
    for t in ComponentTag:
        checks.append(CrossCheck(f"{t.value} reference route vs published", reference[t], Fraction(REFERENCE_DEGREES[t])))
    checks.append(CrossCheck("total vs published", sum(degrees.values(), Fraction(0)), Fraction(REFERENCE_TOTAL)))

    report = DegreeReport(degrees, reference, inter, checks)
    if strict and not report.ok:
        raise CrossCheckError(report)
    return report


def _degree_c2_full() -> Fraction:
    """Integral of s_5(F) over the flag variety, without the projection formula."""
    fb = flag_bundles()
    s5 = degree_part(fb["F"].segre, 5)
    return integrate(bd.projbundle_pushforward(s5, p3_bundles()["U"]))


def _degree_c4_iterated() -> Fraction:
    """s_7(O_S(-1) + R) integrated over S = P(Q*) x P(sl U), two push-forwards."""
    g = g24_bundles()
    sR = g["R"].segre

    def integrand(zeta):
        lay = zeta.ring
        sR_up = lay.lift(lay.base.lift(sR))
        total = lay.zero()
        for k in range(8):
            total = total + zeta ** k * degree_part(sR_up, 7 - k)
        return total

    return _iterated_degree(g["Q*"], g["sl(U)"], integrand)
