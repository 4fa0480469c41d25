"""Structure constants of small Lie algebras, over the rationals.

A bracket on ``V = Q^n`` is stored through its structure constants
``[e_i, e_j] = sum_k c[i][j][k] e_k`` for ``i < j``; skew-symmetry is
structural.  The module checks the Jacobi identity, computes derived
algebras and centres, sorts four-dimensional algebras into the four
irreducible components of the variety of Lie brackets, and draws exact
random points of each component from its birational model.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Mapping, Optional, Sequence, Tuple, Union

from . import linalg

__all__ = [
    "StructureConstants",
    "Dim3Decomposition",
    "LieProfile",
    "GenericityError",
    "jacobi_defect",
    "is_lie",
    "decompose_dim3",
    "recompose_dim3",
    "contraction",
    "derived_algebra",
    "center",
    "classify",
    "build_c1",
    "build_c2",
    "build_c3",
    "build_c4",
    "sample_c1",
    "sample_c2",
    "sample_c3",
    "sample_c4",
    "sample",
    "random_basis_change",
    "COMPONENTS",
    "DERIVED_TYPES",
]

Vector = List[Fraction]
Seed = Union[int, random.Random]

COMPONENTS = ("C1", "C2", "C3", "C4")
DERIVED_TYPES = ("zero", "ab1", "ab2", "ab3", "he3", "sl2", "other")

# draws use small integers from this range
DRAW_RANGE = (-5, 5)
MAX_REDRAWS = 32


class GenericityError(RuntimeError):
    """A generic sample could not be drawn within the re-draw budget."""


class StructureConstants:
    """Skew bracket on Q^n, 2 <= n <= 4, with exact rational coefficients."""

    __slots__ = ("dim", "_c")

    def __init__(self, dim: int, brackets: Optional[Mapping[Tuple[int, int], Sequence]] = None):
        if not 2 <= dim <= 4:
            raise ValueError(f"dimension must be between 2 and 4, got {dim}")
        self.dim = dim
        zero = (Fraction(0),) * dim
        c: Dict[Tuple[int, int], Tuple[Fraction, ...]] = {p: zero for p in itertools.combinations(range(dim), 2)}
        for (i, j), coeffs in (brackets or {}).items():
            if not 0 <= i < j < dim:
                raise ValueError(f"bracket index pair ({i}, {j}) must satisfy 0 <= i < j < {dim}")
            if len(coeffs) != dim:
                raise ValueError(f"bracket [e{i}, e{j}] needs {dim} coefficients")
            c[(i, j)] = tuple(Fraction(x) for x in coeffs)
        self._c = c

    @classmethod
    def from_bracket(cls, dim: int, bracket) -> "StructureConstants":
        """Build from a function ``(i, j) -> vector`` evaluated for i < j."""
        return cls(dim, {p: bracket(*p) for p in itertools.combinations(range(dim), 2)})

    @classmethod
    def abelian(cls, dim: int) -> "StructureConstants":
        return cls(dim)

    def coeff(self, i: int, j: int, k: int) -> Fraction:
        if i == j:
            return Fraction(0)
        if i < j:
            return self._c[(i, j)][k]
        return -self._c[(j, i)][k]

    def bracket_basis(self, i: int, j: int) -> Vector:
        if i == j:
            return [Fraction(0)] * self.dim
        if i < j:
            return list(self._c[(i, j)])
        return [-x for x in self._c[(j, i)]]

    def bracket(self, x: Sequence, y: Sequence) -> Vector:
        n = self.dim
        out = [Fraction(0)] * n
        for i in range(n):
            if not x[i]:
                continue
            for j in range(n):
                if i == j or not y[j]:
                    continue
                f = x[i] * y[j]
                for k, c in enumerate(self.bracket_basis(i, j)):
                    if c:
                        out[k] += f * c
        return out

    def ad(self, x: Sequence) -> linalg.Matrix:
        """Matrix of ad(x) in the standard basis (columns are images)."""
        cols = [self.bracket(x, _unit(self.dim, j)) for j in range(self.dim)]
        return linalg.transpose(cols)

    def pairs(self):
        return sorted(self._c.items())

    def scaled(self, lam) -> "StructureConstants":
        lam = Fraction(lam)
        return StructureConstants(self.dim, {p: [lam * x for x in v] for p, v in self._c.items()})

    def transformed(self, P: Sequence[Sequence]) -> "StructureConstants":
        """Structure constants in the basis given by the columns of ``P``."""
        n = self.dim
        cols = linalg.transpose(linalg.to_matrix(P))
        Pinv = linalg.inverse(P)
        return StructureConstants.from_bracket(n, lambda a, b: linalg.matvec(Pinv, self.bracket(cols[a], cols[b])))

    def is_abelian(self) -> bool:
        return all(not any(v) for v in self._c.values())

    def __eq__(self, other):
        return isinstance(other, StructureConstants) and self.dim == other.dim and self._c == other._c

    def __hash__(self):
        return hash((self.dim, tuple(sorted(self._c.items()))))

    def __repr__(self):
        nz = {p: [str(x) for x in v] for p, v in self._c.items() if any(v)}
        return f"StructureConstants({self.dim}, {nz})"


def _unit(n: int, i: int) -> Vector:
    v = [Fraction(0)] * n
    v[i] = Fraction(1)
    return v


def jacobi_defect(omega: StructureConstants) -> List[Fraction]:
    """Cyclic sums [[ei,ej],ek] + [[ej,ek],ei] + [[ek,ei],ej] for i < j < k.

    Entries come triple by triple, n coefficients each.
    """
    n = omega.dim
    out: List[Fraction] = []
    for i, j, k in itertools.combinations(range(n), 3):
        total = [Fraction(0)] * n
        for a, b, c in ((i, j, k), (j, k, i), (k, i, j)):
            v = omega.bracket(omega.bracket_basis(a, b), _unit(n, c))
            total = [s + t for s, t in zip(total, v)]
        out.extend(total)
    return out


def is_lie(omega: StructureConstants) -> bool:
    return not any(jacobi_defect(omega))


# -- dimension three: omega = q + u ------------------------------------------

_CYCLIC = ((1, 2, 0), (2, 0, 1), (0, 1, 2))  # (i, j, k): e_i ^ e_j <-> e_k^*


@dataclass(frozen=True)
class Dim3Decomposition:
    q: Tuple[Tuple[Fraction, ...], ...]  # symmetric 3x3
    u: Tuple[Fraction, ...]


def _levi(i: int, j: int, k: int) -> int:
    if len({i, j, k}) < 3:
        return 0
    return 1 if (i, j, k) in _CYCLIC else -1


def decompose_dim3(omega: StructureConstants, volume=1) -> Dim3Decomposition:
    """Split a bracket on Q^3 into a symmetric tensor and a linear form.

    The volume form ``volume * det`` identifies wedge^2 V with V*, hence
    Hom(wedge^2 V, V) with V (x) V = Sym^2 V + wedge^2 V = Sym^2 V + V*.
    """
    if omega.dim != 3:
        raise ValueError("decompose_dim3 needs a three-dimensional bracket")
    vol = Fraction(volume)
    if vol == 0:
        raise ValueError("volume must be nonzero")
    # M[k][m]: coefficient of e_m in the image of e_k^*
    M = [[Fraction(0)] * 3 for _ in range(3)]
    for i, j, k in _CYCLIC:
        for m, c in enumerate(omega.bracket_basis(i, j)):
            M[k][m] = c / vol
    q = tuple(tuple((M[a][b] + M[b][a]) / 2 for b in range(3)) for a in range(3))
    u = tuple(
        sum((_levi(a, b, r) * (M[a][b] - M[b][a]) / 2 for a in range(3) for b in range(3)), Fraction(0)) / 2
        for r in range(3)
    )
    return Dim3Decomposition(q, u)


def recompose_dim3(dec: Dim3Decomposition, volume=1) -> StructureConstants:
    vol = Fraction(volume)
    M = [[dec.q[a][b] + sum((_levi(a, b, r) * dec.u[r] for r in range(3)), Fraction(0)) for b in range(3)] for a in range(3)]
    brackets = {}
    for i, j, k in _CYCLIC:
        pair, sign = ((i, j), 1) if i < j else ((j, i), -1)
        brackets[pair] = [sign * vol * M[k][m] for m in range(3)]
    return StructureConstants(3, brackets)


def contraction(dec: Dim3Decomposition) -> Vector:
    """q contracted with u; zero exactly when the bracket is a Lie bracket."""
    return linalg.matvec(dec.q, dec.u)


# -- invariants -----------------------------------------------------------------

def derived_algebra(omega: StructureConstants) -> Tuple[int, List[Vector]]:
    """Dimension and an echelon basis of [g, g]."""
    vecs = [v for _, v in omega.pairs() if any(v)]
    basis, _ = linalg.rref(vecs) if vecs else ([], [])
    return len(basis), basis


def center(omega: StructureConstants) -> List[Vector]:
    n = omega.dim
    rows = []
    for j in range(n):
        # x is central iff [x, e_j] = 0 for all j
        for k in range(n):
            rows.append([omega.coeff(i, j, k) for i in range(n)])
    return linalg.nullspace(rows, n)


def _span_bracket(omega: StructureConstants, A: List[Vector], B: List[Vector]) -> List[Vector]:
    vecs = [omega.bracket(a, b) for a in A for b in B]
    vecs = [v for v in vecs if any(v)]
    return linalg.rref(vecs)[0] if vecs else []


def _coords(basis: List[Vector], v: Vector) -> Vector:
    return linalg.solve(linalg.transpose(basis), v)


def _killing_rank(omega: StructureConstants, basis: List[Vector]) -> int:
    """Rank of the Killing form of the subalgebra spanned by ``basis``."""
    ads = []
    for b in basis:
        ads.append(linalg.transpose([_coords(basis, omega.bracket(b, c)) for c in basis]))
    K = [[sum(linalg.matmul(x, y)[i][i] for i in range(len(basis))) for y in ads] for x in ads]
    return linalg.rank(K)


def _derived_type(omega: StructureConstants, basis: List[Vector]) -> str:
    d = len(basis)
    if d == 0:
        return "zero"
    DD = _span_bracket(omega, basis, basis)
    if not DD:
        return f"ab{d}" if d <= 3 else "other"
    if d == 3:
        if len(DD) == 1 and not _span_bracket(omega, basis, DD):
            return "he3"
        if _killing_rank(omega, basis) == 3:
            return "sl2"
    return "other"


def _tau_images(omega: StructureConstants, U: List[Vector]) -> List[linalg.Matrix]:
    """Matrices of ad(T)|_U, in U-coordinates, for T running over a complement of U."""
    n = omega.dim
    _, pivots = linalg.rref(U)
    mats = []
    for j in range(n):
        if j in pivots:
            continue
        T = _unit(n, j)
        mats.append(linalg.transpose([_coords(U, omega.bracket(T, u)) for u in U]))
    return mats


def _is_two_aff(omega: StructureConstants, U: List[Vector]) -> bool:
    """Derived algebra U abelian of dim 2: is ad(V)|_U a split torus of rank 2?"""
    mats = _tau_images(omega, U)
    flat = [[m[0][0], m[0][1], m[1][0], m[1][1]] for m in mats]
    if linalg.rank(flat) != 2:
        return False
    A, B = mats
    if linalg.matmul(A, B) != linalg.matmul(B, A):
        return False
    # discriminant of the char. polynomial of sA + tB is a binary quadratic
    # form in (s, t); diagonalizable with distinct eigenvalues iff it is nonzero
    def disc(M):
        tr = M[0][0] + M[1][1]
        dt = M[0][0] * M[1][1] - M[0][1] * M[1][0]
        return tr * tr - 4 * dt
    S = [[A[i][j] + B[i][j] for j in range(2)] for i in range(2)]
    D = [[A[i][j] - B[i][j] for j in range(2)] for i in range(2)]
    dA, dB, dS, dD = disc(A), disc(B), disc(S), disc(D)
    # coefficients of s^2, t^2, st
    return any((dA, dB, (dS - dD) / 2))


@dataclass(frozen=True)
class LieProfile:
    jacobi_ok: bool
    derived_dim: int
    derived_type: str
    component: str
    is_abelian: bool
    center_dim: int

    def describe(self) -> str:
        if not self.jacobi_ok:
            return "not a Lie algebra (Jacobi identity fails)"
        if self.component == "boundary":
            reason = "abelian" if self.is_abelian else f"derived: {self.derived_type}"
            return f"boundary ({reason})"
        return f"component: {self.component}, derived: {self.derived_type}"


def classify(omega: StructureConstants) -> LieProfile:
    ok = is_lie(omega)
    d, basis = derived_algebra(omega)
    dtype = _derived_type(omega, basis) if ok else ("zero" if d == 0 else "other")
    zdim = len(center(omega))
    component = "not_lie"
    if ok:
        component = "boundary"
        if omega.dim == 4:
            if dtype == "sl2" and zdim == 1:
                component = "C1"
            elif dtype == "he3":
                component = "C2"
            elif dtype == "ab3":
                component = "C3"
            elif dtype == "ab2" and _is_two_aff(omega, basis):
                component = "C4"
    return LieProfile(ok, d, dtype, component, omega.is_abelian(), zdim)


# -- the four birational models ---------------------------------------------------
#
# Every builder works in an adapted basis e0..e3 of V; ``random_basis_change``
# moves the result to general position.

def _sigma(q: Sequence[Sequence], x: Sequence, y: Sequence) -> Vector:
    """The bracket on Q^3 attached to a symmetric tensor q (u = 0)."""
    cross = [x[1] * y[2] - x[2] * y[1], x[2] * y[0] - x[0] * y[2], x[0] * y[1] - x[1] * y[0]]
    return [sum((cross[m] * Fraction(q[m][k]) for m in range(3)), Fraction(0)) for k in range(3)]


def build_c1(q: Sequence[Sequence], p_T: Sequence, scalar) -> StructureConstants:
    """Bracket omega(T, X) = sigma(p(T), X) for X in U = <e1, e2, e3>, T = e0.

    ``q`` is the symmetric tensor defining sigma on U, ``p_T`` the
    U-coordinates of p(e0), and p restricts to ``scalar`` times the identity
    on U.
    """
    q = [[Fraction(x) for x in row] for row in q]
    if any(q[a][b] != q[b][a] for a in range(3) for b in range(3)):
        raise ValueError("q must be symmetric")
    lam = Fraction(scalar)
    pT = [Fraction(x) for x in p_T]

    def br(i, j):
        x = pT if i == 0 else [lam * t for t in _unit(3, i - 1)]
        return [Fraction(0)] + _sigma(q, x, _unit(3, j - 1))

    omega = StructureConstants.from_bracket(4, br)
    # sigma(p(X), Y) must be skew on U: holds because p|U is scalar
    for i in range(1, 4):
        for j in range(1, 4):
            xi = [lam * t for t in _unit(3, i - 1)]
            xj = [lam * t for t in _unit(3, j - 1)]
            assert _sigma(q, xi, _unit(3, j - 1)) == [-t for t in _sigma(q, xj, _unit(3, i - 1))]
    return omega


def build_c2(omega_scalar, theta: Sequence[Sequence]) -> StructureConstants:
    """Flag L = <e1> in U = <e1, e2, e3>, T = e0.

    ``omega_scalar`` gives the two-form on U with kernel L: [e2, e3] =
    omega_scalar * e1.  ``theta`` is ad(e0) on U (columns are images of
    e1, e2, e3); it must preserve L and satisfy
    theta_L = trace(theta on U/L).
    """
    th = [[Fraction(x) for x in row] for row in theta]
    if th[1][0] or th[2][0]:
        raise ValueError("theta must preserve L = <e1>")
    if th[0][0] != th[1][1] + th[2][2]:
        raise ValueError("theta must satisfy theta_L = trace of theta on U/L")
    w = Fraction(omega_scalar)

    def br(i, j):
        if i == 0:
            return [Fraction(0)] + [th[r][j - 1] for r in range(3)]
        if (i, j) == (2, 3):
            return [Fraction(0), w, Fraction(0), Fraction(0)]
        return [Fraction(0)] * 4

    return StructureConstants.from_bracket(4, br)


def build_c3(theta: Sequence[Sequence]) -> StructureConstants:
    """U = <e1, e2, e3> abelian, ad(e0)|U = theta (columns are images)."""
    th = [[Fraction(x) for x in row] for row in theta]

    def br(i, j):
        if i == 0:
            return [Fraction(0)] + [th[r][j - 1] for r in range(3)]
        return [Fraction(0)] * 4

    return StructureConstants.from_bracket(4, br)


def build_c4(m: Sequence[Sequence], phi: Sequence, psi: Sequence, g: Sequence) -> StructureConstants:
    """U = <e2, e3> abelian, T1 = e0, T2 = e1.

    ad(T_z)|U = psi[z] * id + phi[z] * m with m traceless, so the traceless
    part of tau is the rank-one tensor phi (x) m; [T1, T2] = g in U.
    """
    m = [[Fraction(x) for x in row] for row in m]
    if m[0][0] + m[1][1] != 0:
        raise ValueError("m must be traceless")
    phi = [Fraction(x) for x in phi]
    psi = [Fraction(x) for x in psi]
    g = [Fraction(x) for x in g]

    def tau(z):
        return [[psi[z] * int(a == b) + phi[z] * m[a][b] for b in range(2)] for a in range(2)]

    def br(i, j):
        zero = [Fraction(0)] * 4
        if (i, j) == (0, 1):
            return [Fraction(0), Fraction(0), g[0], g[1]]
        if i < 2 <= j:
            t = tau(i)
            col = j - 2
            return [Fraction(0), Fraction(0), t[0][col], t[1][col]]
        return zero

    return StructureConstants.from_bracket(4, br)


def _rng(seed: Seed) -> random.Random:
    return seed if isinstance(seed, random.Random) else random.Random(seed)


def _draw(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(*DRAW_RANGE))


def random_basis_change(omega: StructureConstants, seed: Seed) -> StructureConstants:
    rng = _rng(seed)
    n = omega.dim
    while True:
        P = [[_draw(rng) for _ in range(n)] for _ in range(n)]
        if linalg.det(P) != 0:
            return omega.transformed(P)


def _draw_c1(rng):
    a = [[_draw(rng) for _ in range(3)] for _ in range(3)]
    q = [[a[i][j] if i <= j else a[j][i] for j in range(3)] for i in range(3)]
    return build_c1(q, [_draw(rng) for _ in range(3)], _draw(rng))


def _draw_c2(rng):
    th = [[_draw(rng) for _ in range(3)] for _ in range(3)]
    th[1][0] = th[2][0] = Fraction(0)
    th[0][0] = th[1][1] + th[2][2]
    return build_c2(_draw(rng), th)


def _draw_c3(rng):
    return build_c3([[_draw(rng) for _ in range(3)] for _ in range(3)])


def _draw_c4(rng):
    a, b, c = (_draw(rng) for _ in range(3))
    return build_c4(
        [[a, b], [c, -a]],
        [_draw(rng), _draw(rng)],
        [_draw(rng), _draw(rng)],
        [_draw(rng), _draw(rng)],
    )


_DRAWS = {"C1": _draw_c1, "C2": _draw_c2, "C3": _draw_c3, "C4": _draw_c4}


def sample(component: str, seed: Seed, generic: bool = True, random_basis: bool = False) -> StructureConstants:
    """Draw a point of the given component from its model.

    With ``generic`` the draw is repeated (at most 32 times) until the
    result classifies to ``component``; :class:`GenericityError` otherwise.
    """
    component = component.upper()
    if component not in _DRAWS:
        raise ValueError(f"unknown component {component!r}")
    rng = _rng(seed)
    for _ in range(MAX_REDRAWS):
        omega = _DRAWS[component](rng)
        if random_basis:
            omega = random_basis_change(omega, rng)
        if not generic or classify(omega).component == component:
            return omega
    raise GenericityError(f"no generic {component} sample within {MAX_REDRAWS} draws")


def sample_c1(seed: Seed, generic: bool = True, random_basis: bool = False) -> StructureConstants:
    return sample("C1", seed, generic, random_basis)


def sample_c2(seed: Seed, generic: bool = True, random_basis: bool = False) -> StructureConstants:
    return sample("C2", seed, generic, random_basis)


def sample_c3(seed: Seed, generic: bool = True, random_basis: bool = False) -> StructureConstants:
    return sample("C3", seed, generic, random_basis)


def sample_c4(seed: Seed, generic: bool = True, random_basis: bool = False) -> StructureConstants:
    return sample("C4", seed, generic, random_basis)
