import pytest

from smckit.algebra import Module, simple_module
from smckit.derived import (
    complex_direct_sum,
    is_isomorphic_complexes,
    stalk_complex,
    standard_model,
)
from smckit.errors import BudgetError, PreconditionError
from smckit.smc import (
    SMC,
    MutationPath,
    _containment,
    complete_semibrick,
    heart_membership,
    left_mutate,
    narrow,
    replay_path,
    right_mutate,
    semibrick_pair_check,
    simples_shift_test,
    smc_bounds,
    smc_leq,
    standard_smc,
    two_term_wrt,
    validate,
)


def test_standard_smc_validates(std2, std3):
    assert validate(std2).ok
    assert validate(std3).ok
    assert std2.path == () and std2.shift == 0


def test_validate_catches_bad_collection(alg3, simples3):
    s1 = stalk_complex(simples3[0])
    bad = SMC(alg3, [s1, s1, s1], path=None)
    rep = validate(bad)
    assert not rep.ok
    assert rep.failures


def test_smc_needs_full_rank(alg3, simples3):
    with pytest.raises(PreconditionError):
        SMC(alg3, [stalk_complex(simples3[0])])


def test_bounds_fixtures(alg3, std3, mods3, golden):
    M, _, _ = mods3
    m = stalk_complex(M)
    assert smc_bounds(m, std3) == (0, 0)
    assert smc_bounds(m.shift(1), std3) == (-1, -1)
    assert smc_bounds(golden, std3) == (-1, 0)
    assert smc_bounds(m.shift(-2), std3) == (2, 2)


def test_bounds_of_members_are_zero(std3):
    for y in std3.objects:
        assert smc_bounds(y, std3) == (0, 0)


def test_bounds_relative_to_mutated_collection(alg2, std2, simples2):
    nu1 = left_mutate(std2, 1)
    assert smc_bounds(stalk_complex(simples2[0]), nu1) == (1, 1)


def test_two_term_fixtures(std2):
    nu1 = left_mutate(std2, 1)
    assert two_term_wrt(nu1, std2)
    assert not two_term_wrt(std2, nu1)
    assert two_term_wrt(std2, std2)


def test_leq_strict_descent(std2):
    nu1 = left_mutate(std2, 1)
    assert smc_leq(std2, std2)
    assert smc_leq(nu1, std2)
    assert not smc_leq(std2, nu1)


def test_left_mutation_shifts_chosen_simple(std2, std3):
    for std in (std2, std3):
        for i in range(1, len(std.objects) + 1):
            assert simples_shift_test(std, i)


def test_mutation_round_trip(std2):
    for i in (1, 2):
        V = left_mutate(std2, i)
        W = right_mutate(V, i)
        for u, w in zip(std2.objects, W.objects):
            assert is_isomorphic_complexes(standard_model(u), standard_model(w),
                                           assume_minimal=True)


def test_mutation_provenance(std2):
    V = right_mutate(left_mutate(std2, 2), 2)
    assert V.path == ((2, "L"), (2, "R"))
    assert V.provenance() == MutationPath([(2, "L"), (2, "R")], 0)


def test_right_mutation_of_standard_a2(alg2, std2, simples2):
    """Mutating the standard collection right at 2 swaps in the extension
    module with socle S2 and pushes S2 down one degree."""
    _, s2 = simples2
    E = Module(alg2, {1: 1, 2: 1}, {"a*": [[1]]})
    r2 = right_mutate(std2, 2)
    assert is_isomorphic_complexes(r2.element(1), stalk_complex(E))
    assert is_isomorphic_complexes(r2.element(2), stalk_complex(s2).shift(-1))
    assert validate(r2).ok


def test_longest_word_permutes_shifted_simples(std2, simples2):
    s1, s2 = simples2
    V = left_mutate(left_mutate(left_mutate(std2, 1), 2), 1)
    assert is_isomorphic_complexes(V.element(1), stalk_complex(s2).shift(1))
    assert is_isomorphic_complexes(V.element(2), stalk_complex(s1).shift(1))


def test_mutation_index_range(std2):
    with pytest.raises(PreconditionError):
        left_mutate(std2, 0)
    with pytest.raises(PreconditionError):
        right_mutate(std2, 3)


def test_narrow_golden(alg3, std3, golden, mods3, simples3):
    M, N, _ = mods3
    s1, s2, _ = simples3
    V, path = narrow(golden, std3)
    assert path.steps == ((3, "L"), (2, "L"), (1, "L"))
    assert path.shift == 0
    assert smc_bounds(golden, V) == (0, 0)
    assert is_isomorphic_complexes(V.element(1), stalk_complex(N).shift(1))
    assert is_isomorphic_complexes(V.element(2), stalk_complex(s1))
    assert is_isomorphic_complexes(V.element(3), stalk_complex(s2))
    assert validate(V).ok


def test_narrow_already_in_heart_is_identity(std3, mods3):
    x = stalk_complex(mods3[0])
    V, path = narrow(x, std3)
    assert path.steps == () and path.shift == 0
    assert V is std3


def test_narrow_pure_shift(std2, simples2):
    x = stalk_complex(simples2[0]).shift(5)
    V, path = narrow(x, std2)
    assert path.steps == ()
    assert path.shift == 5
    assert V.shift == 5
    assert smc_bounds(x, V) == (0, 0)


def test_narrow_rejects_negative_selfext(std2, simples2):
    s1, s2 = simples2
    bad, _, _ = complex_direct_sum(
        [stalk_complex(s1), stalk_complex(s2).shift(2)])
    with pytest.raises(PreconditionError):
        narrow(bad, std2)


def test_narrow_budget_raises(alg3, std3, golden):
    with pytest.raises(BudgetError):
        narrow(golden, std3, total_limit=1)


def test_replay_path_reproduces_witness(alg3, std3, golden):
    V, path = narrow(golden, std3)
    W = replay_path(alg3, path)
    for a, b in zip(V.objects, W.objects):
        assert is_isomorphic_complexes(standard_model(a), standard_model(b),
                                       assume_minimal=True)


def test_window_stays_controlled_along_narrow(alg3, std3, golden):
    """Each narrowing step keeps the object's window inside the starting one."""
    a0, b0 = smc_bounds(golden, std3)
    V, path = narrow(golden, std3)
    U = std3
    for i, d in path.steps:
        U = left_mutate(U, i, verify=False) if d == "L" else right_mutate(U, i, verify=False)
        a, b = smc_bounds(golden, U)
        assert a0 <= a and b <= b0 + 1


def test_heart_membership_fixtures(alg3, golden, simples3, std3):
    r = heart_membership(golden)
    assert r.in_heart
    W, path = r.witness
    assert smc_bounds(golden, W) == (0, 0)
    s1, s2, _ = simples3
    bad, _, _ = complex_direct_sum(
        [stalk_complex(s1), stalk_complex(s2).shift(2)])
    r2 = heart_membership(bad)
    assert not r2.in_heart
    assert r2.violating_degree == -1


def test_heart_membership_rejects_zero(alg3):
    from smckit.derived import ComplexOfModules
    with pytest.raises(PreconditionError):
        heart_membership(ComplexOfModules(alg3, {}, {}))


def test_complete_golden(alg3, golden, mods3, simples3):
    M, N, _ = mods3
    s1 = simples3[0]
    C = complete_semibrick(golden)
    assert len(C.objects) == 3
    assert validate(C).ok
    assert is_isomorphic_complexes(C.element(1), stalk_complex(N).shift(1))
    assert is_isomorphic_complexes(C.element(2), stalk_complex(s1).shift(-1))
    assert is_isomorphic_complexes(C.element(3), stalk_complex(M))
    assert _containment(golden, C) == [1, 3]


def test_complete_single_brick_a2(alg2):
    E = Module(alg2, {1: 1, 2: 1}, {"a*": [[1]]})
    x = stalk_complex(E)
    C = complete_semibrick(x)
    assert len(C.objects) == 2
    assert _containment(x, C) is not None
    assert validate(C).ok


def test_complete_rejects_non_semibrick(alg2, simples2):
    s1, _ = simples2
    doubled, _, _ = complex_direct_sum([stalk_complex(s1), stalk_complex(s1)])
    with pytest.raises(PreconditionError):
        complete_semibrick(doubled)


def test_containment_handles_shifted_members(alg3, std3, simples3):
    x = stalk_complex(simples3[1])
    assert _containment(x, std3) == [2]
    total, _, _ = complex_direct_sum([std3.element(1), std3.element(3)])
    assert _containment(total, std3) == [1, 3]
    assert _containment(x.shift(1), std3) is None


def test_semibrick_pair_fixtures(alg3, mods3, simples3):
    M, N, K = mods3
    s1, s2, _ = simples3
    assert semibrick_pair_check([M], [N]).is_pair
    assert not semibrick_pair_check([M], [s1]).is_pair   # Hom(M, S1) != 0
    assert not semibrick_pair_check([M, K], []).is_pair  # Hom(K, M) != 0
    assert semibrick_pair_check([M, simples3[2]], []).is_pair


def test_collection_from_pair_validates(alg3, mods3, simples3):
    """The corrected two-term collection from the worked example."""
    M, N, _ = mods3
    s2 = simples3[1]
    good = SMC(alg3, [stalk_complex(M),
                      stalk_complex(s2).shift(1),
                      stalk_complex(N).shift(1)], path=None)
    assert validate(good).ok
    # the naive guess with S1 and the 011 module fails: Hom(M, S1) != 0
    K = mods3[2]
    s1 = simples3[0]
    naive = SMC(alg3, [stalk_complex(M),
                       stalk_complex(s1).shift(1),
                       stalk_complex(K).shift(1)], path=None)
    assert not validate(naive).ok
