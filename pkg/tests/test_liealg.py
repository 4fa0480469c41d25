import random
from fractions import Fraction

import pytest

from lievariety import liealg as L
from lievariety import linalg
from lievariety.liealg import StructureConstants

Z = Fraction(0)


def sc(dim, brackets):
    """Structure constants from a 0-indexed dict {(i, j): {k: coeff}}."""
    full = {}
    for (i, j), img in brackets.items():
        v = [Z] * dim
        for k, c in img.items():
            v[k] = Fraction(c)
        full[(i, j)] = v
    return StructureConstants(dim, full)


SL2 = sc(3, {(0, 1): {1: 2}, (0, 2): {2: -2}, (1, 2): {0: 1}})  # h, e, f
HEIS = sc(3, {(0, 1): {2: 1}})
GL2 = sc(4, {(0, 1): {1: 2}, (0, 2): {2: -2}, (1, 2): {0: 1}})  # e3 central
TWO_AFF = sc(4, {(0, 1): {1: 1}, (2, 3): {3: 1}})
HE3_PLUS = sc(4, {(1, 2): {3: 1}})


# -- structure constants ------------------------------------------------------------

def test_skew_symmetry_is_structural():
    assert SL2.bracket_basis(1, 0) == [Z, Fraction(-2), Z]
    assert SL2.bracket_basis(1, 1) == [Z, Z, Z]
    assert SL2.coeff(2, 0, 2) == 2


def test_constructor_validation():
    with pytest.raises(ValueError):
        StructureConstants(5)
    with pytest.raises(ValueError):
        StructureConstants(3, {(1, 0): [1, 0, 0]})
    with pytest.raises(ValueError):
        StructureConstants(3, {(0, 1): [1, 0]})


def test_bracket_bilinear():
    x = [Fraction(1), Fraction(2), Fraction(-1)]
    y = [Fraction(0), Fraction(3), Fraction(1)]
    assert SL2.bracket(x, y) == [-SL2.bracket(y, x)[k] for k in range(3)]


def test_transform_identity_and_back():
    P = [[1, 2, 0], [0, 1, 0], [1, 0, 1]]
    W = SL2.transformed(P)
    assert W.transformed(linalg.inverse(P)) == SL2
    assert SL2.transformed([[1, 0, 0], [0, 1, 0], [0, 0, 1]]) == SL2


# -- Jacobi --------------------------------------------------------------------------

def test_jacobi_examples():
    assert not any(L.jacobi_defect(StructureConstants.abelian(4)))
    assert not any(L.jacobi_defect(SL2))
    assert len(L.jacobi_defect(GL2)) == 4 * 4


def test_jacobi_semidirect_example_vanishes():
    # [e1,e2]=e3, [e1,e3]=e3: e1 acts by a derivation on the abelian plane <e2,e3>.
    # The three cyclic terms are [e3,e3], [0,e1] and [-e3,e2] = [e2,e3] = 0.
    w = sc(3, {(0, 1): {2: 1}, (0, 2): {2: 1}})
    assert L.jacobi_defect(w) == [Z, Z, Z]


def test_jacobi_failure_example():
    # [e1,e2]=e1, [e1,e3]=e2: cyclic sum on (e1,e2,e3) is [e1,e3] + 0 + [-e2,e2] = e2
    w = sc(3, {(0, 1): {0: 1}, (0, 2): {1: 1}})
    assert L.jacobi_defect(w) == [Z, Fraction(1), Z]
    assert not L.is_lie(w)


# -- dimension three -------------------------------------------------------------------

def _rank(m):
    return linalg.rank([list(r) for r in m])


def test_decompose_examples():
    d = L.decompose_dim3(SL2)
    assert d.u == (Z, Z, Z) and _rank(d.q) == 3
    d = L.decompose_dim3(HEIS)
    assert d.u == (Z, Z, Z) and _rank(d.q) == 1
    d = L.decompose_dim3(StructureConstants.abelian(3))
    assert _rank(d.q) == 0 and d.u == (Z, Z, Z)


def test_decompose_rejects_other_dims():
    with pytest.raises(ValueError):
        L.decompose_dim3(GL2)
    with pytest.raises(ValueError):
        L.decompose_dim3(SL2, volume=0)


def test_volume_rescales_only():
    d1 = L.decompose_dim3(SL2, 1)
    d2 = L.decompose_dim3(SL2, 2)
    assert d2.q == tuple(tuple(x / 2 for x in row) for row in d1.q)


def _random_dim3(rng: random.Random) -> StructureConstants:
    mode = rng.randrange(4)
    r = lambda: Fraction(rng.randint(-4, 4))
    if mode == 0:
        return StructureConstants(3, {p: [r() for _ in range(3)] for p in [(0, 1), (0, 2), (1, 2)]})
    # build a Lie point q + u with q u = 0, sometimes perturbed
    u = [r() for _ in range(3)]
    a = [[r() for _ in range(3)] for _ in range(3)]
    q = [[a[i][j] + a[j][i] for j in range(3)] for i in range(3)]
    if mode in (1, 2) and any(u):
        # project q so that u lies in its kernel: q -> P q P with P killing u
        uu = sum(x * x for x in u)
        P = [[Fraction(int(i == j)) - u[i] * u[j] / uu for j in range(3)] for i in range(3)]
        q = linalg.matmul(linalg.matmul(P, q), P)
    if mode == 3:
        u = [Z, Z, Z]
    dec = L.Dim3Decomposition(tuple(tuple(row) for row in q), tuple(u))
    w = L.recompose_dim3(dec, volume=rng.choice([1, 2, Fraction(-1, 3)]))
    if mode == 2:
        w = L.random_basis_change(w, rng)
    return w


def test_dim3_equivalence():
    rng = random.Random(2024)
    counts = {True: 0, False: 0}
    for _ in range(600):
        w = _random_dim3(rng)
        vol = rng.choice([1, 3, Fraction(1, 2)])
        dec = L.decompose_dim3(w, vol)
        assert L.recompose_dim3(dec, vol) == w
        lie = L.is_lie(w)
        assert lie == (not any(L.contraction(dec)))
        counts[lie] += 1
    # both directions exercised
    assert counts[True] >= 100 and counts[False] >= 100


# -- invariants and classification --------------------------------------------------------

def test_derived_algebra_examples():
    assert L.derived_algebra(StructureConstants.abelian(4))[0] == 0
    assert L.derived_algebra(GL2)[0] == 3
    assert L.derived_algebra(L.sample_c4(3))[0] == 2


def test_center():
    assert L.center(GL2) == [[Z, Z, Z, Fraction(1)]]
    assert len(L.center(StructureConstants.abelian(3))) == 3


@pytest.mark.parametrize(
    "omega,component,derived",
    [
        (GL2, "C1", "sl2"),
        (TWO_AFF, "C4", "ab2"),
        (HE3_PLUS, "boundary", "ab1"),
        (StructureConstants.abelian(4), "boundary", "zero"),
    ],
)
def test_classify_examples(omega, component, derived):
    p = L.classify(omega)
    assert p.jacobi_ok
    assert p.component == component
    assert p.derived_type == derived


def test_classify_he3_and_ab3():
    # T acting on he3 with theta_L = trace on U/L
    w = L.build_c2(1, [[2, 0, 0], [0, 1, 0], [0, 0, 1]])
    p = L.classify(w)
    assert (p.component, p.derived_type) == ("C2", "he3")
    w = L.build_c3([[1, 0, 0], [0, 2, 0], [0, 0, 3]])
    assert L.classify(w).derived_type == "ab3"
    assert L.classify(w).component == "C3"


def test_classify_not_lie():
    w = sc(4, {(0, 1): {0: 1}, (0, 2): {1: 1}})
    p = L.classify(w)
    assert not p.jacobi_ok and p.component == "not_lie"
    assert "Jacobi" in p.describe()


def test_describe():
    assert L.classify(GL2).describe() == "component: C1, derived: sl2"
    assert L.classify(StructureConstants.abelian(4)).describe() == "boundary (abelian)"


def test_sl2_plus_ab1_detected_over_other_bases():
    rng = random.Random(5)
    for _ in range(10):
        assert L.classify(L.random_basis_change(GL2, rng)).component == "C1"


def test_two_aff_needs_split_torus():
    # tau image 2-dimensional but containing a nilpotent direction: not 2aff1
    w = sc(4, {(0, 2): {2: 1, 3: 1}, (0, 3): {3: 1}, (1, 2): {2: 1}, (1, 3): {3: 1}})
    assert L.is_lie(w)
    p = L.classify(w)
    assert p.derived_type == "ab2"
    assert p.component == "boundary"


# -- builders --------------------------------------------------------------------------

def test_build_c1_degenerate_sigma():
    w = L.build_c1([[0] * 3] * 3, [1, 2, 3], 1)
    assert w.is_abelian() and L.is_lie(w)


def test_build_c1_rejects_asymmetric():
    with pytest.raises(ValueError):
        L.build_c1([[1, 1, 0], [0, 1, 0], [0, 0, 1]], [0, 0, 0], 1)


def test_build_c2_validation():
    with pytest.raises(ValueError):
        L.build_c2(1, [[1, 0, 0], [1, 1, 0], [0, 0, 0]])
    with pytest.raises(ValueError):
        L.build_c2(1, [[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    assert L.build_c2(0, [[0] * 3] * 3).is_abelian()


def test_build_c3_zero_is_abelian():
    assert L.build_c3([[0] * 3] * 3).is_abelian()


def test_build_c4_pure_trace():
    w = L.build_c4([[0, 0], [0, 0]], [1, 2], [3, -1], [1, 1])
    assert L.is_lie(w)
    assert L.classify(w).component == "boundary"
    with pytest.raises(ValueError):
        L.build_c4([[1, 0], [0, 1]], [1, 0], [0, 0], [0, 0])


def _span_dim(vectors):
    return linalg.rank([[c for _, v in w.pairs() for c in v] for w in vectors])


def test_fiber_dimensions():
    rng = random.Random(8)
    r = lambda: rng.randint(-5, 5)
    # C3: theta arbitrary, 9-dimensional fiber over the 3-dimensional P(V4*)
    assert _span_dim([L.build_c3([[r() for _ in range(3)] for _ in range(3)]) for _ in range(20)]) == 9
    # C2: (Omega, theta) in a 7-dimensional fiber over the 5-dimensional flag variety
    c2 = []
    for _ in range(30):
        th = [[r() for _ in range(3)] for _ in range(3)]
        th[1][0] = th[2][0] = 0
        th[0][0] = th[1][1] + th[2][2]
        c2.append(L.build_c2(r(), th))
    assert _span_dim(c2) == 7
    assert 5 + 7 - 1 == 11
    # C4: over a fixed traceless line m, the fiber has dimension 5 (scale of phi (x) m, psi, g)
    m = [[1, 2], [3, -1]]
    c4 = [L.build_c4(m, [r(), 0], [r(), r()], [r(), r()]) for _ in range(20)]
    assert _span_dim(c4) == 5
    assert 4 + 1 + 2 + 5 - 1 == 11


# -- samplers ----------------------------------------------------------------------------

@pytest.mark.parametrize("comp", L.COMPONENTS)
def test_sampler_jacobi_200_seeds(comp):
    for seed in range(200):
        w = L.sample(comp, seed, generic=False)
        assert not any(L.jacobi_defect(w)), (comp, seed)


@pytest.mark.parametrize("comp", L.COMPONENTS)
def test_sampler_generic_classifies(comp):
    for seed in range(200):
        w = L.sample(comp, seed, generic=True)
        assert L.classify(w).component == comp


@pytest.mark.parametrize("comp", L.COMPONENTS)
def test_sampler_random_basis(comp):
    for seed in range(40):
        w = L.sample(comp, seed, generic=True, random_basis=True)
        assert L.classify(w).component == comp


def test_sampler_helpers_and_determinism():
    for fn, comp in zip((L.sample_c1, L.sample_c2, L.sample_c3, L.sample_c4), L.COMPONENTS):
        assert fn(11) == fn(11) == L.sample(comp, 11)
    rng = random.Random(3)
    a = L.sample_c3(rng)
    b = L.sample_c3(rng)
    assert a != b


def test_sampler_unknown_component():
    with pytest.raises(ValueError):
        L.sample("C7", 1)


def test_genericity_budget(monkeypatch):
    monkeypatch.setitem(L._DRAWS, "C3", lambda rng: L.build_c3([[0] * 3] * 3))
    with pytest.raises(L.GenericityError):
        L.sample_c3(1)
    assert L.sample_c3(1, generic=False).is_abelian()


@pytest.mark.parametrize("comp", L.COMPONENTS)
def test_basis_invariance(comp):
    rep = L.sample(comp, 0)
    profile = L.classify(rep)
    rng = random.Random(99)
    for _ in range(50):
        assert L.classify(L.random_basis_change(rep, rng)) == profile


@pytest.mark.parametrize("comp", L.COMPONENTS)
def test_scaling_invariance(comp):
    w = L.sample(comp, 4)
    for lam in (Fraction(-1), Fraction(3, 7), Fraction(5)):
        p, q = L.classify(w), L.classify(w.scaled(lam))
        assert (p.jacobi_ok, p.component) == (q.jacobi_ok, q.component)


@pytest.mark.parametrize("comp", L.COMPONENTS)
def test_derived_types_possible(comp):
    allowed = {"zero", "ab1", "ab2", "ab3", "he3", "sl2"}
    for seed in range(60):
        assert L.classify(L.sample(comp, seed, generic=False)).derived_type in allowed
