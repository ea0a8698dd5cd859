import random

import pytest

from smckit.algebra import Module, simple_module, zero_module
from smckit.derived import (
    ChainMap,
    ComplexOfModules,
    complex_direct_sum,
    cone,
    has_no_negative_selfext,
    hom_db,
    hom_table,
    identity_map,
    is_isomorphic_complexes,
    minimize,
    random_complex,
    representing_chain_maps,
    stalk_complex,
    standard_model,
    tighten,
    truncate_below,
)
from smckit.errors import PreconditionError
from smckit.smc import left_mutate, right_mutate, standard_smc


def test_shift_convention(alg2, simples2):
    x = stalk_complex(simples2[0])
    assert x.support() == [0]
    assert x.shift(1).support() == [-1]   # x[1]^k = x^{k+1}
    assert x.shift(-2).support() == [2]
    assert x.shift(1).shift(-1).support() == [0]


def test_shift_differential_sign(alg2, simples2):
    from smckit.algebra import projective_cover, projective_module
    s1, _ = simples2
    p1 = projective_module(alg2, 1)
    _, pi, _ = projective_cover(s1)
    x = ComplexOfModules(alg2, {0: p1, 1: s1}, {0: pi})
    odd, even = x.shift(1), x.shift(2)
    assert odd.support() == [-1, 0] and even.support() == [-2, -1]
    for v in alg2.vertices:
        assert odd.diff(-1).mats[v] == [[-c for c in row] for row in pi.mats[v]]
        assert even.diff(-2).mats[v] == pi.mats[v]


def test_d_squared_enforced(alg2):
    p1 = ComplexOfModules(alg2, {0: simple_module(alg2, 1)}, {})
    assert p1.diff(0).is_zero()
    m = Module(alg2, {1: 1, 2: 1}, {"a": [[1]]})
    with pytest.raises(PreconditionError):
        ComplexOfModules(
            alg2,
            {0: m, 1: m, 2: m},
            {0: identity_map(m), 1: identity_map(m)},
        )


def test_cohomology_of_stalk_and_cone(alg3, mods3):
    M, N, _ = mods3
    x = stalk_complex(M)
    assert x.cohomology(0).dim_vector() == M.dim_vector()
    assert x.cohomology(1).is_zero()
    # cone over the identity is acyclic
    c = cone(ChainMap(x, x, {0: identity_map(M)}))
    assert all(c.cohomology(k).is_zero() for k in range(-2, 2))
    assert minimize(c).is_zero_complex()


def test_cone_of_zero_map_is_sum(alg3, mods3):
    M, N, _ = mods3
    f = ChainMap(stalk_complex(M), stalk_complex(N), {})
    c = cone(f)
    assert c.term(-1).dim_vector() == M.dim_vector()
    assert c.term(0).dim_vector() == N.dim_vector()
    assert c.cohomology(-1).dim_vector() == M.dim_vector()


def test_truncate_and_tighten(alg3, mods3):
    M, N, _ = mods3
    x, _, _ = complex_direct_sum([stalk_complex(M), stalk_complex(N).shift(2)])
    assert x.support() == [-2, 0]
    t = truncate_below(x, -1)
    assert t.support() == [0]
    padded = ComplexOfModules(alg3, {0: M, 2: zero_module(alg3)}, {})
    assert tighten(padded).support() == [0]


def test_direct_sum_projections_section(alg3, mods3):
    M, N, K = mods3
    parts = [stalk_complex(M), stalk_complex(K).shift(1)]
    total, injs, projs = complex_direct_sum(parts)
    for part, inj, proj in zip(parts, injs, projs):
        for k in part.support():
            comp = proj.component(k).compose(inj.component(k))
            assert comp.mats == identity_map(part.term(k)).mats


# frozen shifted-Hom tables over the A2 preprojective algebra
def test_hom_tables_frozen(alg2, simples2):
    s1, s2 = simples2
    x1, x2 = stalk_complex(s1), stalk_complex(s2)
    assert [hom_db(x1, x1, n) for n in range(-2, 6)] == [0, 0, 1, 0, 1, 0, 1, 0]
    assert [hom_db(x1, x2, n) for n in range(-2, 6)] == [0, 0, 0, 1, 0, 1, 0, 1]
    table = hom_table(x1, x1, -2, 5)
    assert [table[n] for n in range(-2, 6)] == [0, 0, 1, 0, 1, 0, 1, 0]


def test_hom_against_module_dims(alg3, mods3):
    from smckit.algebra import projective_module
    M, N, K = mods3
    for v in alg3.vertices:
        p = stalk_complex(projective_module(alg3, v))
        for m in (M, N, K):
            assert hom_db(p, stalk_complex(m), 0) == m.dims[v]
            assert hom_db(p, stalk_complex(m), -1) == 0


def test_hom_shift_invariance(alg2, simples2):
    s1, s2 = simples2
    x, y = stalk_complex(s1), stalk_complex(s2)
    for n in range(-2, 4):
        base = hom_db(x, y, n)
        assert hom_db(x.shift(3), y.shift(3), n) == base
        assert hom_db(x, y.shift(n), 0) == base
        assert hom_db(x.shift(-n), y, 0) == base


def test_hom_minimize_invariance(alg2, simples2):
    s1, _ = simples2
    x = stalk_complex(s1)
    c = cone(ChainMap(x, x, {0: identity_map(s1)}))
    fat, _, _ = complex_direct_sum([x, c])
    slim = minimize(fat)
    assert slim.total_dim() < fat.total_dim()
    for n in range(-2, 3):
        assert hom_db(fat, fat, n) == hom_db(slim, slim, n) == hom_db(x, x, n)


def test_representing_chain_maps_match_dimension(alg3, mods3):
    M, N, _ = mods3
    x, y = stalk_complex(N), stalk_complex(M)
    replacement, maps = representing_chain_maps(x, y, 0)
    assert len(maps) == hom_db(x, y, 0) == 1
    f = maps[0]
    assert not f.is_zero()
    assert f.source is replacement
    # the replacement really computes x: same cohomology where it matters
    assert replacement.cohomology(0).dim_vector() == N.dim_vector()


def test_is_isomorphic_complexes(alg3, mods3, simples3):
    M, N, _ = mods3
    a = stalk_complex(M)
    assert is_isomorphic_complexes(a, stalk_complex(M))
    assert not is_isomorphic_complexes(a, stalk_complex(N))
    assert not is_isomorphic_complexes(a, a.shift(1))
    two = Module(alg3, {1: 1, 2: 1, 3: 0}, {"a": [[7]]})
    assert is_isomorphic_complexes(a, stalk_complex(two))


def test_random_complex_seeded(alg2):
    a = random_complex(alg2, random.Random(3))
    b = random_complex(alg2, random.Random(3))
    assert a.support() == b.support()
    assert [a.term(k).dim_vector() for k in a.support()] == \
           [b.term(k).dim_vector() for k in b.support()]


# ---------------------------------------------------------------------------
# canonical representatives

def test_standard_model_fixes_stalks(alg3, mods3):
    M, _, _ = mods3
    x = stalk_complex(M)
    assert standard_model(x) is x


def test_standard_model_idempotent(alg2, simples2):
    rng = random.Random(17)
    for _ in range(6):
        x = random_complex(alg2, rng)
        if x.is_zero_complex():
            continue
        s = standard_model(x)
        assert standard_model(s) is s
        assert is_isomorphic_complexes(standard_model(minimize(x)), s,
                                       assume_minimal=True)


def test_standard_model_commutes_with_shift(alg2):
    rng = random.Random(23)
    x = random_complex(alg2, rng)
    s = standard_model(x)
    assert is_isomorphic_complexes(standard_model(x.shift(2)), s.shift(2),
                                   assume_minimal=True)


def test_standard_model_preserves_cohomology(alg3, golden):
    s = standard_model(golden)
    for k in range(-3, 3):
        assert s.cohomology(k).dim_vector() == golden.cohomology(k).dim_vector()
    for n in range(-2, 3):
        assert hom_db(s, s, n) == hom_db(golden, golden, n)


def test_standard_model_not_additive_but_containment_safe(alg3, mods3, golden):
    """The model of a direct sum is smaller than the stalk sum: the summand
    starting higher gets resolved below its own bottom degree.  Derived-level
    comparison still identifies the two."""
    M, N, _ = mods3
    s = standard_model(golden)
    raw_dims = {k: golden.term(k).dim_vector() for k in golden.support()}
    model_dims = {k: s.term(k).dim_vector() for k in s.support()}
    assert model_dims != raw_dims
    assert is_isomorphic_complexes(s, standard_model(golden), assume_minimal=True)


def test_mutation_members_heal_to_same_class(alg3, std3):
    """Mutating back after a left/right word must recover the collection up
    to derived isomorphism even when chain-level models disagree."""
    U = right_mutate(left_mutate(std3, 2, verify=False), 1, verify=False)
    W = right_mutate(U, 1)   # verify=True exercises inverse recovery
    back = left_mutate(W, 1)
    for u, b in zip(U.objects, back.objects):
        assert is_isomorphic_complexes(standard_model(u), standard_model(b),
                                       assume_minimal=True)


def test_no_negative_selfext_fixtures(alg3, mods3, golden, simples3):
    M, _, _ = mods3
    s1, s2, _ = simples3
    assert has_no_negative_selfext(stalk_complex(M))
    assert has_no_negative_selfext(golden)
    bad, _, _ = complex_direct_sum(
        [stalk_complex(s1), stalk_complex(s2).shift(2)])
    assert not has_no_negative_selfext(bad)


def test_magic_window_identity_sample(path_a2):
    """dim Hom(y, x[a-d]) = dim Hom(H^d y, H^a x) for doubly-sharp windows."""
    from smckit.algebra import hom_dim
    rng = random.Random(41)
    done = 0
    while done < 12:
        x = random_complex(path_a2, rng)
        y = random_complex(path_a2, rng)
        if x.is_zero_complex() or y.is_zero_complex():
            continue
        a, _ = x.std_bounds()
        _, d = y.std_bounds()
        lhs = hom_db(y, x, a - d)
        rhs = hom_dim(y.cohomology(d), x.cohomology(a))
        assert lhs == rhs
        done += 1
