"""Scratch smoke test for algebra.py against hand-derived facts."""
import random
from fractions import Fraction

from smckit.dynkin import DynkinDiagram
from smckit import algebra as al
from smckit import linalg

# --- path algebra of A2 quiver (no relations) ---
kA2 = al.QuiverAlgebra([1, 2], [("a", 1, 2)], [])
assert kA2.dim == 3, kA2.dim
print("kA2 dim 3 OK")

# --- preprojective algebras: dim = sum of heights of positive roots ---
for fam, rk in [("A", 2), ("A", 3), ("D", 4)]:
    diag = DynkinDiagram(fam, rk)
    hsum = sum(sum(r) for r in diag.positive_roots())
    alg = al.preprojective_algebra(diag)
    assert alg.dim == hsum, (fam, rk, alg.dim, hsum)
    print(f"Pi({fam}{rk}) dim {alg.dim} == height sum {hsum} OK")

pi2 = al.preprojective_algebra(DynkinDiagram("A", 2))
assert sorted(pi2.word_str(w) for w in pi2.basis) == ["a", "a*", "e_1", "e_2"]

# associativity spot check on Pi(A3)
pi3 = al.preprojective_algebra(DynkinDiagram("A", 3))
rng = random.Random(5)
bw = pi3.basis
for _ in range(200):
    x, y, z = (({w: Fraction(rng.randint(-2, 2))} ) for w in rng.choices(bw, k=3))
    lhs = pi3.multiply(pi3.multiply(x, y), z)
    rhs = pi3.multiply(x, pi3.multiply(y, z))
    assert lhs == rhs
print("associativity OK")

# --- projectives of Pi(A2): P_1 = E' (dims (1,1), a=1, a*=0), P_2 = E ---
P1 = al.projective_module(pi2, 1)
P2 = al.projective_module(pi2, 2)
assert P1.dim_vector() == (1, 1) and P2.dim_vector() == (1, 1)
assert P1.mat("a") == [[Fraction(1)]] and linalg.is_zero(P1.mat("a*"))
assert P2.mat("a*") == [[Fraction(1)]] and linalg.is_zero(P2.mat("a"))
print("Pi(A2) projectives OK")

# Pi(A3) projectives: P_1 dims (1,1,1), P_2 dims (1,2,1), P_3 dims (1,1,1)
p31 = al.projective_module(pi3, 1)
p32 = al.projective_module(pi3, 2)
p33 = al.projective_module(pi3, 3)
assert p31.dim_vector() == (1, 1, 1) and p32.dim_vector() == (1, 2, 1) and p33.dim_vector() == (1, 1, 1)
print("Pi(A3) projective dims OK")

# --- Hom(P_i, M) = M_i ---
for v in (1, 2, 3):
    M = al.random_module(pi3, random.Random(v), max_dim=2)
    assert al.hom_dim(al.projective_module(pi3, v), M) == M.dims[v]
print("Yoneda Hom(P_i, M) = M_i OK")

# --- simples over Pi(A2): Ext^1 via syzygies is not needed yet; check Hom facts ---
S1 = al.simple_module(pi2, 1)
S2 = al.simple_module(pi2, 2)
E = al.Module(pi2, {1: 1, 2: 1}, {"a*": [[1]]})   # socle S_1, top S_2
Ep = al.Module(pi2, {1: 1, 2: 1}, {"a": [[1]]})   # socle S_2, top S_1
assert al.hom_dim(S1, E) == 1 and al.hom_dim(E, S2) == 1
assert al.hom_dim(S2, E) == 0 and al.hom_dim(E, S1) == 0
assert al.hom_dim(E, E) == 1 and al.is_brick(E)
assert al.is_semibrick([S1, S2]) and not al.is_semibrick([S1, E])
print("Pi(A2) Hom facts OK")

# --- projective cover / syzygy: resolution of S_1 over Pi(A2) is 2-periodic ---
P, p, verts = al.projective_cover(S1)
assert verts == [1]
K, incl = al.kernel_module(p)
assert K.dim_vector() == (0, 1)   # rad P_1 = S_2
P2c, p2c, verts2 = al.projective_cover(K)
assert verts2 == [2]
K2, _ = al.kernel_module(p2c)
assert K2.dim_vector() == (1, 0)  # back to S_1
print("2-periodic resolution OK")

try:
    res = al.truncated_resolution(S1, 4)
    assert sorted(res.terms) == [-4, -3, -2, -1, 0]
    print("truncated_resolution terms:", {k: res.terms[k].dim_vector() for k in sorted(res.terms)})
except ModuleNotFoundError:
    print("truncated_resolution deferred (derived.py not written yet)")

# --- kernel/cokernel sanity: E -> S_2 projection ---
phi = al.hom_module(E, S2)[0]
K, incl = al.kernel_module(phi)
assert K.dim_vector() == (1, 0)
Q, proj, _ = al.cokernel_module(phi)
assert Q.dim_vector() == (0, 0)
phi2 = al.hom_module(S1, E)[0]
Q2, proj2, sect = al.cokernel_module(phi2)
assert Q2.dim_vector() == (0, 1)
# section splits the projection
comp = linalg.mat_mul(proj2.mats[2], sect[2], inner=1)
assert comp == linalg.identity(1)
I, iincl = al.image_module(phi2)
assert I.dim_vector() == (1, 0)
print("kernel/cokernel/image OK")

# --- corner algebra of Pi(A3) at {2} ---
c = al.corner_algebra(pi3, [2])
assert c.dim == 4, c.dim
assert sorted(c.word_str(w) for w in c.basis) == ["ab", "b*a*", "e_1", "e_3"], [c.word_str(w) for w in c.basis]
# both products vanish
u = c.element_from_word([w for w in c.basis if c.word_str(w) == "ab"][0])
v = c.element_from_word([w for w in c.basis if c.word_str(w) == "b*a*"][0])
assert c.multiply(u, v) == {} and c.multiply(v, u) == {}
assert al.corner_algebra(pi3, []) is pi3
try:
    al.corner_algebra(pi3, [1, 2, 3])
    raise AssertionError("should have raised")
except Exception as e:
    assert type(e).__name__ == "PreconditionError"
print("corner(Pi(A3), {2}) OK:", {k: w for k, w in c.corner_parent_words.items()})

# --- brick census over F_2 and F_3 for Pi(A2), bound (2,2) ---
for p in (2, 3):
    bricks = al.enumerate_bricks(pi2, {1: 2, 2: 2}, p)
    assert bricks == [((0, 1), 1), ((1, 0), 1), ((1, 1), 2)], (p, bricks)
print("Pi(A2) brick census OK: dim vectors 10,01 and 11 twice (E and E')")

# corner of Pi(A3) at {2}: bricks bound (1,1) should match restricted primitives
for p in (2, 3):
    bricks = al.enumerate_bricks(c, {1: 1, 3: 1}, p)
    print(f"corner bricks p={p}:", bricks)

# random module determinism
m1 = al.random_module(pi3, random.Random(42), max_dim=2)
m2 = al.random_module(pi3, random.Random(42), max_dim=2)
assert m1.dims == m2.dims and all(m1.mat(a.name) == m2.mat(a.name) for a in pi3.arrows)
print("random_module deterministic OK")

# iso test
assert al.is_isomorphic_modules(E, E)
assert not al.is_isomorphic_modules(E, Ep)
S1S2, _, _ = al.direct_sum([S1, S2])
S2S1, _, _ = al.direct_sum([S2, S1])
assert al.is_isomorphic_modules(S1S2, S2S1)
assert not al.is_isomorphic_modules(S1S2, E)
print("module iso OK")
print("ALL ALGEBRA SMOKE TESTS PASSED")
