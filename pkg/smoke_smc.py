"""Scratch smoke test for smc.py against hand-computed facts."""
import time

from smckit.algebra import (
    QuiverAlgebra, preprojective_algebra, Module, simple_module,
    projective_module, direct_sum, is_isomorphic_modules,
)
from smckit.derived import (
    stalk_complex, complex_direct_sum, normal_form, hom_db, hom_table,
    is_isomorphic_complexes, has_no_negative_selfext,
)
from smckit.dynkin import parse_dynkin
from smckit.smc import (
    SMC, MutationPath, standard_smc, validate, smc_bounds, two_term_wrt,
    smc_leq, left_mutate, right_mutate, replay_path, narrow, heart_membership,
    complete_semibrick, semibrick_pair_check, simples_shift_test,
)
from smckit.errors import PreconditionError

t0 = time.time()


def tick(label):
    global t0
    now = time.time()
    print(f"{label} OK  ({now - t0:.2f}s)")
    t0 = now


pa2 = preprojective_algebra(parse_dynkin("A2")[0])
S1, S2 = simple_module(pa2, 1), simple_module(pa2, 2)
E = projective_module(pa2, 2)    # nonsplit extension of S2 by S1 (a=0, a*=1)
Ep = projective_module(pa2, 1)   # nonsplit extension of S1 by S2 (a=1, a*=0)
std2 = standard_smc(pa2)

a1 = QuiverAlgebra([1], [], [])
std1 = standard_smc(a1)

pa3 = preprojective_algebra(parse_dynkin("A3")[0])
T1, T2, T3 = (simple_module(pa3, v) for v in (1, 2, 3))
M = Module(pa3, {1: 1, 2: 1, 3: 0}, {"a": [[1]]})
N = Module(pa3, {1: 1, 2: 1, 3: 1}, {"a": [[1]], "b": [[1]]})
K = Module(pa3, {1: 0, 2: 1, 3: 1}, {"b": [[1]]})
std3 = standard_smc(pa3)

# --- standard smcs validate ------------------------------------------------
assert validate(std2).ok and validate(std1).ok and validate(std3).ok
bad = SMC(pa2, [stalk_complex(S1), stalk_complex(S1)], path=None)
rep = validate(bad)
assert not rep.ok and (1, 2, 0) in rep.failures, rep.failures
tick("validate")

# --- smc_bounds fixtures ----------------------------------------------------
assert smc_bounds(stalk_complex(S1), std2) == (0, 0)
assert smc_bounds(stalk_complex(S1).shift(1), std2) == (-1, -1)
x02 = complex_direct_sum([stalk_complex(S1), stalk_complex(S2).shift(-2)])[0]
assert smc_bounds(x02, std2) == (0, 2), smc_bounds(x02, std2)
golden = complex_direct_sum([stalk_complex(M), stalk_complex(N).shift(1)])[0]
assert golden.std_bounds() == (-1, 0)
assert hom_db(golden, golden, 0) == 2
assert smc_bounds(golden, std3) == (-1, 0), smc_bounds(golden, std3)
T2c = simple_module(pa3, 2)
Sprime = [stalk_complex(M), stalk_complex(T2c).shift(1), stalk_complex(N).shift(1)]
assert validate(SMC(pa3, Sprime, path=None)).ok
assert smc_bounds(golden, Sprime) == (0, 0)
for s in Sprime:
    for i in range(-3, 0):
        assert hom_db(s, golden, i) == 0 and hom_db(golden, s, i) == 0
tick("smc_bounds")

# --- left mutation over pi(A2) ----------------------------------------------
nu1 = left_mutate(std2, 1)           # verify=True exercises the postconditions
assert is_isomorphic_complexes(nu1.element(1), stalk_complex(S1).shift(1))
assert is_isomorphic_complexes(nu1.element(2), stalk_complex(E))
assert nu1.path == ((1, "L"),)
nu_a1 = left_mutate(std1, 1)
assert is_isomorphic_complexes(nu_a1.element(1), std1.element(1).shift(1))
tick("left_mutate")

# --- right mutation over pi(A2): rho_2(std) = {E, S_2[-1]} -------------------
rho2 = right_mutate(std2, 2)
assert is_isomorphic_complexes(rho2.element(1), stalk_complex(E)), rho2
assert is_isomorphic_complexes(rho2.element(2), stalk_complex(S2).shift(-1))
assert not is_isomorphic_complexes(rho2.element(1), stalk_complex(Ep))
rho_a1 = right_mutate(std1, 1)
assert is_isomorphic_complexes(rho_a1.element(1), std1.element(1).shift(-1))
tick("right_mutate")

# --- inverse round trips (also run by verify, but assert explicitly) --------
for i in (1, 2):
    V = left_mutate(std2, i, verify=False)
    back = right_mutate(V, i, verify=False)
    for u, w in zip(std2.objects, back.objects):
        assert is_isomorphic_complexes(u, w)
tick("inverse round trip")

# --- pi(A3): mutation leaves far members untouched (object identity) ---------
nu1_3 = left_mutate(std3, 1)
assert nu1_3.objects[2] is std3.objects[2]   # Hom(S_3[-1], S_1) = 0: untouched
tick("untouched member")

# --- two_term_wrt / smc_leq --------------------------------------------------
assert two_term_wrt(std2, std2)
assert two_term_wrt(nu1, std2)
# the standard collection sits in the *dual* window [0,1] of nu_1(std):
# S_1 = (S_1[1])[-1] lands at (1,1), so two_term (= [-1,0]) is false
assert not two_term_wrt(std2, nu1)
assert smc_bounds(stalk_complex(S1), nu1) == (1, 1)
for u in std2.objects:
    ua, ub = smc_bounds(u, nu1)
    assert 0 <= ua and ub <= 1
assert smc_leq(std2, std2)
assert smc_leq(nu1, std2)           # std >= nu_1(std)
assert not smc_leq(std2, nu1)       # nu_1(std) >= std fails
tick("order")

# --- longest word over pi(A2): nu_1 nu_2 nu_1 sends simples to simples[1] ----
W = left_mutate(left_mutate(left_mutate(std2, 1), 2), 1)
shifted_simples = [stalk_complex(S1).shift(1), stalk_complex(S2).shift(1)]
matched = set()
for y in W.objects:
    for t, s in enumerate(shifted_simples):
        if t not in matched and is_isomorphic_complexes(y, s):
            matched.add(t)
            break
assert matched == {0, 1}, W
tick("longest word")

# --- narrow fixtures ----------------------------------------------------------
V, path = narrow(stalk_complex(S1).shift(5), std2)
assert path.steps == () and path.shift == 5   # bounds were (-5,-5); shift by -a
assert smc_bounds(stalk_complex(S1).shift(5), V) == (0, 0)
assert is_isomorphic_complexes(V.element(1), stalk_complex(S1).shift(5))
V, path = narrow(stalk_complex(E), std2)
assert path == MutationPath((), 0) and V is std2
V3, path3 = narrow(golden, std3)
assert smc_bounds(golden, V3) == (0, 0)
for u in std3.objects:
    ua, ub = smc_bounds(u, V3)
    assert 0 <= ua and ub <= 1, (ua, ub)
print("  golden narrow path:", path3)
R = replay_path(pa3, MutationPath(std3.path, 0))  # sanity: empty replay
for i, d in path3.steps:
    pass
# replay the narrow path on the standard smc and compare elementwise
U = std3
for i, d in path3.steps:
    U = left_mutate(U, i, verify=False) if d == "L" else right_mutate(U, i, verify=False)
U = U.shifted(path3.shift)
for y, w in zip(U.objects, V3.objects):
    assert is_isomorphic_complexes(y, w)
tick("narrow")

# --- negative self-extension facts -------------------------------------------
bad1 = complex_direct_sum([stalk_complex(S1), stalk_complex(S1).shift(-1)])[0]
assert not has_no_negative_selfext(bad1)          # identity between the copies
ok1 = complex_direct_sum([stalk_complex(S1), stalk_complex(S2).shift(-1)])[0]
assert has_no_negative_selfext(ok1)               # no cross maps downward
assert has_no_negative_selfext(golden)
assert not has_no_negative_selfext(x02)           # Ext^1(S2,S1) at degree -1
tick("selfext")

# --- heart membership ----------------------------------------------------------
res = heart_membership(stalk_complex(E))
assert res and res.witness[1] == MutationPath((), 0)
res = heart_membership(ok1)                       # in a heart despite the spread
assert res.in_heart
Vw, pw = res.witness
assert smc_bounds(ok1, Vw) == (0, 0)
res = heart_membership(x02)
assert not res.in_heart and res.violating_degree == -1, res
res = heart_membership(golden)
assert res.in_heart
tick("heart membership")

# --- completion -----------------------------------------------------------------
C = complete_semibrick(stalk_complex(S1))
assert len(C) == 2
assert any(is_isomorphic_complexes(y, stalk_complex(S1)) for y in C.objects)
C = complete_semibrick(stalk_complex(E))
assert any(is_isomorphic_complexes(y, stalk_complex(E)) for y in C.objects)
print("  completion of E:", C)
t1 = time.time()
C3 = complete_semibrick(golden)
print(f"  golden completion took {time.time() - t1:.2f}s:", C3)
assert len(C3) == 3
assert validate(C3).ok
assert any(is_isomorphic_complexes(y, stalk_complex(M)) for y in C3.objects)
assert any(is_isomorphic_complexes(y, stalk_complex(N).shift(1)) for y in C3.objects)
tick("complete_semibrick")

# --- semibrick pairs -------------------------------------------------------------
r = semibrick_pair_check([S1], [S2])
assert not r.is_pair and any("Ext^1" in f for f in r.failures), r
r = semibrick_pair_check([M], [N])
assert r.is_pair and r.rank == 2 and r.n_simples == 3 and r.smc_ok is None, r
r = semibrick_pair_check([M], [])
assert r.is_pair
tick("semibrick pairs")

# --- simples shift ---------------------------------------------------------------
assert simples_shift_test(std2, 1)
assert simples_shift_test(std3, 2)
assert simples_shift_test(nu1, 2)
tick("simples shift")

print("ALL SMC SMOKE PASSED")
