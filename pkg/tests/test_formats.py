import json
from fractions import Fraction

import pytest

from smckit.algebra import Module
from smckit.derived import is_isomorphic_complexes, stalk_complex
from smckit.errors import ParseError, PreconditionError
from smckit.formats import (
    algebra_from_json_obj,
    algebra_to_json_obj,
    complex_from_json_obj,
    complex_to_json_obj,
    dumps,
    frac_str,
    load_smc,
    module_from_json_obj,
    module_to_json_obj,
    parse_frac,
    save_smc,
    smc_from_json_obj,
    smc_to_json_obj,
)
from smckit.smc import left_mutate, smc_bounds, standard_smc, validate


def test_frac_round_trip():
    for x in (Fraction(1, 2), Fraction(-3), Fraction(0), Fraction(22, 7)):
        assert parse_frac(frac_str(x)) == x
    with pytest.raises(ParseError):
        parse_frac("1/0")
    with pytest.raises(ParseError):
        parse_frac("3.x")


def test_algebra_round_trip(alg3):
    obj = algebra_to_json_obj(alg3)
    back = algebra_from_json_obj(obj)
    assert back.vertices == alg3.vertices
    assert [a.name for a in back.arrows] == [a.name for a in alg3.arrows]
    assert back.dim == alg3.dim
    assert dumps(algebra_to_json_obj(back)) == dumps(obj)


def test_algebra_rejects_other_convention(alg3):
    obj = algebra_to_json_obj(alg3)
    obj["convention"] = "right-to-left"
    with pytest.raises(ParseError):
        algebra_from_json_obj(obj)


def test_module_round_trip(alg3, mods3):
    M, N, K = mods3
    for m in (M, N, K):
        back = module_from_json_obj(module_to_json_obj(m), alg3)
        assert back.dims == m.dims
        assert all(back.mats[a.name] == m.mats[a.name] for a in alg3.arrows)


def test_module_bad_inputs(alg3):
    with pytest.raises(ParseError):
        module_from_json_obj({"dims": {"9": 1}}, alg3)
    with pytest.raises(ParseError):
        module_from_json_obj({"dims": {"1": -1}}, alg3)
    with pytest.raises(ParseError):
        module_from_json_obj({"dims": {}, "arrows": {"zz": [[]]}}, alg3)
    with pytest.raises(ParseError):
        module_from_json_obj({"dims": {"1": 1}, "arrows": {"a": [["1", "2"], ["3"]]}}, alg3)
    # shape errors surface from the Module constructor
    with pytest.raises(PreconditionError):
        module_from_json_obj({"dims": {"1": 1, "2": 1},
                              "arrows": {"a": [["1", "1"]]}}, alg3)


def test_complex_round_trip(alg3, golden):
    obj = complex_to_json_obj(golden)
    back = complex_from_json_obj(obj, alg3)
    assert back.support() == golden.support()
    assert is_isomorphic_complexes(back, golden)
    assert dumps(complex_to_json_obj(back)) == dumps(obj)


def test_complex_rejects_bad_differential(alg3, mods3):
    M, _, _ = mods3
    obj = complex_to_json_obj(stalk_complex(M))
    obj["differentials"] = {"0": {str(v): [["1"]] for v in alg3.vertices}}
    with pytest.raises((ParseError, PreconditionError)):
        complex_from_json_obj(obj, alg3)


def test_smc_round_trip_preserves_bytes(alg3, std3, golden, tmp_path):
    V = left_mutate(std3, 2)
    path = tmp_path / "v.json"
    save_smc(str(path), V)
    W = load_smc(str(path), alg3)
    assert W.path == V.path and W.shift == V.shift
    # loading does not canonicalize: a second save is byte-identical
    path2 = tmp_path / "w.json"
    save_smc(str(path2), W)
    assert path.read_bytes() == path2.read_bytes()
    assert validate(W).ok
    assert smc_bounds(golden, W) == smc_bounds(golden, V)


def test_smc_provenance_round_trip(alg2):
    std = standard_smc(alg2)
    obj = smc_to_json_obj(std)
    assert obj["provenance"] == {"path": [], "shift": 0}
    back = smc_from_json_obj(obj, alg2)
    assert back.path == () and back.shift == 0


def test_smc_bad_inputs(alg2, std2):
    with pytest.raises(ParseError):
        smc_from_json_obj({"elements": "nope"}, alg2)
    obj = smc_to_json_obj(std2)
    obj["elements"] = obj["elements"][:1]
    with pytest.raises(PreconditionError):
        smc_from_json_obj(obj, alg2)
    obj2 = smc_to_json_obj(std2)
    obj2["provenance"] = {"path": [[1, "Q"]], "shift": 0}
    with pytest.raises((ParseError, PreconditionError)):
        smc_from_json_obj(obj2, alg2)


def test_dumps_deterministic_and_floatless(alg3, golden):
    a = dumps(complex_to_json_obj(golden))
    b = dumps(complex_to_json_obj(golden))
    assert a == b
    data = json.loads(a)

    def no_floats(x):
        if isinstance(x, float):
            return False
        if isinstance(x, dict):
            return all(no_floats(v) for v in x.values())
        if isinstance(x, list):
            return all(no_floats(v) for v in x)
        return True

    assert no_floats(data)
