import pytest

from smckit.algebra import Module, QuiverAlgebra, preprojective_algebra, simple_module
from smckit.derived import complex_direct_sum, stalk_complex
from smckit.dynkin import parse_dynkin
from smckit.smc import standard_smc


@pytest.fixture(scope="session")
def alg2():
    return preprojective_algebra(parse_dynkin("A2")[0])


@pytest.fixture(scope="session")
def alg3():
    return preprojective_algebra(parse_dynkin("A3")[0])


@pytest.fixture(scope="session")
def path_a2():
    """Hereditary path algebra of the A2 quiver 1 -> 2."""
    return QuiverAlgebra([1, 2], [("a", 1, 2)], [])


@pytest.fixture(scope="session")
def mods3(alg3):
    """The three interval modules over the A3 preprojective algebra with
    dimension vectors 110, 111, 011."""
    M = Module(alg3, {1: 1, 2: 1, 3: 0}, {"a": [[1]]})
    N = Module(alg3, {1: 1, 2: 1, 3: 1}, {"a": [[1]], "b": [[1]]})
    K = Module(alg3, {1: 0, 2: 1, 3: 1}, {"b": [[1]]})
    return M, N, K


@pytest.fixture(scope="session")
def golden(alg3, mods3):
    """The two-term object M + N[1] used across the narrowing fixtures."""
    M, N, _ = mods3
    x, _, _ = complex_direct_sum([stalk_complex(M), stalk_complex(N).shift(1)])
    return x


@pytest.fixture(scope="session")
def simples2(alg2):
    return tuple(simple_module(alg2, v) for v in alg2.vertices)


@pytest.fixture(scope="session")
def simples3(alg3):
    return tuple(simple_module(alg3, v) for v in alg3.vertices)


@pytest.fixture(scope="session")
def std2(alg2):
    return standard_smc(alg2)


@pytest.fixture(scope="session")
def std3(alg3):
    return standard_smc(alg3)
