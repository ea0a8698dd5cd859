"""Scratch smoke test for derived.py against hand-computed facts."""
import random
from fractions import Fraction

from smckit.algebra import (
    QuiverAlgebra, preprojective_algebra, Module, ModuleMap, simple_module,
    projective_module, hom_module, truncated_resolution, random_module,
    is_isomorphic_modules, direct_sum,
)
from smckit.derived import (
    ComplexOfModules, ChainMap, stalk_complex, complex_direct_sum, cone,
    truncate_below, truncate_above, tighten, minimize, normal_form,
    replacement_of, hom_table, hom_db, representing_chain_maps,
    chain_map_space, is_isomorphic_complexes, random_complex,
)

from smckit.dynkin import parse_dynkin
pa2 = preprojective_algebra(parse_dynkin("A2")[0])
S1, S2 = simple_module(pa2, 1), simple_module(pa2, 2)
P1, P2 = projective_module(pa2, 1), projective_module(pa2, 2)
E = P2    # nonsplit extension of S2 by S1
Ep = P1   # nonsplit extension of S1 by S2

ka2 = QuiverAlgebra([1, 2], [("a", 1, 2)], [])

# --- stalk / shift basics ------------------------------------------------
x = stalk_complex(S1)
assert x.support() == [0] and x.std_bounds() == (0, 0)
sh = x.shift(-1)
assert sh.support() == [1], sh.support()          # x[-1]^1 = x^0
assert x.shift(2).support() == [-2]
assert x.shift(0) is x
print("stalk/shift OK")

# --- Ext tables over pi(A2) (2-periodic) ---------------------------------
t11 = hom_table(stalk_complex(S1), stalk_complex(S1), -2, 5)
assert [t11[n] for n in range(-2, 6)] == [0, 0, 1, 0, 1, 0, 1, 0], t11
t12 = hom_table(stalk_complex(S1), stalk_complex(S2), -2, 5)
assert [t12[n] for n in range(-2, 6)] == [0, 0, 0, 1, 0, 1, 0, 1], t12
assert hom_db(stalk_complex(S1), stalk_complex(E)) == 1
assert hom_db(stalk_complex(E), stalk_complex(S2)) == 1
assert hom_db(stalk_complex(S2), stalk_complex(E)) == 0
assert hom_db(stalk_complex(E), stalk_complex(S1)) == 0
print("pi(A2) Ext tables OK")

# --- degree-0 Hom of stalks == module Hom; dual route for Ext -------------
rng = random.Random(7)
for _ in range(6):
    m = random_module(pa2, rng)
    n = random_module(pa2, rng)
    assert hom_db(stalk_complex(m), stalk_complex(n)) == len(hom_module(m, n))
# independent route: H^k of Hom(minimal resolution, N) via module-level data
for (mm, nn) in [(S1, S2), (S1, S1), (S2, S1), (E, S1), (S1, E)]:
    for k in range(0, 4):
        lhs = hom_db(stalk_complex(mm), stalk_complex(nn), k)
        # build the cochain ranks directly
        res = truncated_resolution(mm, k + 2)
        import smckit.linalg as lin
        def rk(j):
            d = res.diff(j)
            bs = hom_module(res.term(j + 1), nn)
            if not bs or res.term(j).total_dim == 0:
                return 0
            cols = []
            for b in bs:
                comp = b.compose(d)
                vec = []
                for v in pa2.vertices:
                    for r in range(comp.target.dims[v]):
                        for c in range(comp.source.dims[v]):
                            vec.append(comp.mats[v][r][c])
                cols.append(vec)
            return lin.rank(cols, len(cols[0]))
        dim_k = len(hom_module(res.term(-k), nn)) if res.term(-k).total_dim else 0
        rhs = dim_k - rk(-k) - (rk(-k - 1) if res.term(-k - 1).total_dim else 0)
        assert lhs == rhs, (mm.dim_vector(), nn.dim_vector(), k, lhs, rhs)
print("dual-route Ext OK")

# --- cone / minimize / normal_form ----------------------------------------
from smckit.algebra import identity_map
idE = ChainMap(stalk_complex(E), stalk_complex(E), {0: identity_map(E)})
cE = cone(idE)
assert normal_form(cE).is_zero_complex()
zmap = ChainMap(stalk_complex(S1), stalk_complex(S2), {})
cz = cone(zmap)   # = S1[1] + S2
sum_, _, _ = complex_direct_sum([stalk_complex(S1).shift(1), stalk_complex(S2)])
assert is_isomorphic_complexes(cz, sum_)
# pad with a contractible summand and minimize back down
pad, _, _ = complex_direct_sum([stalk_complex(E), cone(ChainMap(stalk_complex(P1), stalk_complex(P1), {0: identity_map(P1)}))])
nf = normal_form(pad)
assert nf.support() == [0] and is_isomorphic_modules(nf.term(0), E)
print("cone/minimize OK")

# --- truncations -----------------------------------------------------------
# two-term complex P1 -> P2 (cover of rad P2): H^0 = S2, H^-1 = S2
d_mats = {1: [[Fraction(1)]], 2: [[Fraction(0)]]}
two = ComplexOfModules(pa2, {-1: P1, 0: P2}, {-1: ModuleMap(P1, P2, d_mats)})
assert is_isomorphic_modules(two.cohomology(0), S2)
assert is_isomorphic_modules(two.cohomology(-1), S2)
tb = truncate_above(two, -1)
assert is_isomorphic_complexes(tb, stalk_complex(S2).shift(1))
tl = truncate_below(two, 0)
assert is_isomorphic_complexes(tl, stalk_complex(S2))
assert tighten(two).support() == [-1, 0]
print("truncations OK")

# --- replacement quasi-iso -------------------------------------------------
repE = replacement_of(stalk_complex(E), -3)
rc = repE.as_complex(-3)
assert is_isomorphic_modules(rc.cohomology(0), E)
assert rc.cohomology(-1).is_zero() and rc.cohomology(-2).is_zero()
# over the hereditary algebra kA2 resolutions terminate on their own
s1k = simple_module(ka2, 1)
repk = replacement_of(stalk_complex(s1k), -6)
assert repk.exhausted is not None
print("replacement OK")

# --- representing maps are genuine chain maps ------------------------------
z0 = stalk_complex(S2).shift(-1)          # S2 placed in degree +1
assert hom_db(z0, stalk_complex(S1)) == 1  # Ext^1(S2, S1)
rcx, maps = representing_chain_maps(z0, stalk_complex(S1), 0)
assert len(maps) == 1
ChainMap(maps[0].source, maps[0].target, maps[0].comps, check=True)

# left-mutation cone: tau_{>=0}(cone(R(S2[-1]) -> S1)) == E
C = cone(maps[0])
t = truncate_below(C, 0)
res = normal_form(t)
assert res.support() == [0] and is_isomorphic_modules(res.term(0), E), res
print("left mutation cone pipeline OK")

# --- right-mutation cone: fiber of R(S2) -> S1[1] is E ---------------------
d = hom_db(stalk_complex(S2), stalk_complex(S1), 1)
assert d == 1
rcx2, maps2 = representing_chain_maps(stalk_complex(S2), stalk_complex(S1), 1)
assert len(maps2) == 1
ChainMap(maps2[0].source, maps2[0].target, maps2[0].comps, check=True)
C2 = cone(maps2[0]).shift(-1)
t2 = truncate_below(C2, 0)
res2 = normal_form(t2)
assert res2.support() == [0] and is_isomorphic_modules(res2.term(0), E), res2
print("right mutation cone pipeline OK")

# --- iso testing -----------------------------------------------------------
assert not is_isomorphic_complexes(stalk_complex(S1), stalk_complex(S2))
assert not is_isomorphic_complexes(stalk_complex(E), stalk_complex(Ep))
assert not is_isomorphic_complexes(stalk_complex(E), stalk_complex(S1).shift(1))
s12, _, _ = complex_direct_sum([stalk_complex(S1), stalk_complex(S2)])
assert not is_isomorphic_complexes(s12, stalk_complex(E))
assert is_isomorphic_complexes(stalk_complex(S1).shift(3), stalk_complex(S1).shift(3))
print("iso tests OK")

# --- hom caches + zero objects ---------------------------------------------
zc = ComplexOfModules(pa2, {}, {})
assert hom_db(zc, stalk_complex(S1)) == 0 and hom_db(stalk_complex(S1), zc) == 0
assert hom_db(stalk_complex(S1), stalk_complex(S2), 1) == 1  # cached path
assert is_isomorphic_complexes(zc, ComplexOfModules(pa2, {}, {}))
print("zero-object handling OK")

# --- random complexes ------------------------------------------------------
rng = random.Random(11)
for _ in range(8):
    rx = random_complex(ka2, rng)
    nfx = normal_form(rx)
    assert is_isomorphic_complexes(nfx, nfx, assume_minimal=True)
print("random complexes OK")

# --- the shift convention in Hom: Hom(x[1], y) == Hom(x, y[-1]) -------------
a_ = stalk_complex(S1).shift(1)
assert hom_db(a_, stalk_complex(S2)) == hom_db(stalk_complex(S1), stalk_complex(S2), -1)
assert hom_db(stalk_complex(S1).shift(-2), stalk_complex(S2)) == hom_db(stalk_complex(S1), stalk_complex(S2), 2)
print("shift adjunction OK")

print("ALL DERIVED SMOKE TESTS PASSED")
