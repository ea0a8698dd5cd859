"""JSON file formats for algebras, modules, complexes, and smcs.

Every numeric entry is an exact rational rendered as a string ("1/2", "-3");
no floats anywhere.  Vertex labels are integers in the data model and appear
as string keys inside JSON objects; loaders match them back against the
algebra.  The only path-composition convention supported is left-to-right
(pq means "p then q"), and every algebra file records it.

Malformed files raise ParseError; files that parse but violate a semantic
precondition (a module breaking a relation, d^2 != 0, wrong member count)
raise PreconditionError from the constructors themselves.
"""

import json
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .algebra import Module, ModuleMap, QuiverAlgebra
from .derived import ComplexOfModules
from .errors import ParseError
from .linalg import Mat
from .smc import SMC

CONVENTION = "left-to-right"


def frac_str(x) -> str:
    return str(Fraction(x))


def parse_frac(s) -> Fraction:
    try:
        return Fraction(str(s))
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad rational {s!r}") from exc


def mat_to_json(m: Mat) -> List[List[str]]:
    return [[frac_str(x) for x in row] for row in m]


def mat_from_json(obj, what: str) -> Mat:
    if not isinstance(obj, list) or any(not isinstance(r, list) for r in obj):
        raise ParseError(f"{what}: expected a list of rows")
    mat = [[parse_frac(x) for x in row] for row in obj]
    if mat and any(len(r) != len(mat[0]) for r in mat):
        raise ParseError(f"{what}: ragged rows")
    return mat


def _expect_obj(obj, what: str) -> dict:
    if not isinstance(obj, dict):
        raise ParseError(f"{what}: expected a JSON object")
    return obj


def _vertex_lookup(alg: QuiverAlgebra) -> Dict[str, object]:
    return {str(v): v for v in alg.vertices}


# -- algebra ------------------------------------------------------------

def algebra_to_json_obj(alg: QuiverAlgebra) -> dict:
    rels = []
    for rel in alg.relations:
        terms = []
        for (src, idxs), c in sorted(rel.items(), key=lambda kv: kv[0][1]):
            terms.append({"coeff": frac_str(c),
                          "path": [alg.arrows[i].name for i in idxs]})
        rels.append(terms)
    return {
        "vertices": list(alg.vertices),
        "arrows": [{"name": a.name, "from": a.source, "to": a.target}
                   for a in alg.arrows],
        "relations": rels,
        "convention": CONVENTION,
    }


def algebra_from_json_obj(obj) -> QuiverAlgebra:
    obj = _expect_obj(obj, "algebra")
    conv = obj.get("convention", CONVENTION)
    if conv != CONVENTION:
        raise ParseError(f"unsupported composition convention {conv!r}")
    verts = obj.get("vertices")
    if not isinstance(verts, list) or not verts:
        raise ParseError("algebra: 'vertices' must be a nonempty list")
    arrows = []
    for a in obj.get("arrows", []):
        a = _expect_obj(a, "algebra arrow")
        try:
            arrows.append((str(a["name"]), a["from"], a["to"]))
        except KeyError as exc:
            raise ParseError(f"algebra arrow missing field {exc}") from exc
    relations = []
    for rel in obj.get("relations", []):
        if not isinstance(rel, list):
            raise ParseError("algebra relation: expected a list of terms")
        terms = []
        for t in rel:
            t = _expect_obj(t, "relation term")
            path = t.get("path")
            if not isinstance(path, list) or not all(isinstance(p, str) for p in path):
                raise ParseError("relation term: 'path' must be a list of arrow names")
            terms.append((parse_frac(t.get("coeff", "1")), path))
        relations.append(terms)
    return QuiverAlgebra(verts, arrows, relations)


# -- module -------------------------------------------------------------

def module_to_json_obj(m: Module) -> dict:
    arrows = {}
    for ar in m.alg.arrows:
        mat = m.mat(ar.name)
        if mat and mat[0]:
            arrows[ar.name] = mat_to_json(mat)
    return {"dims": {str(v): m.dims[v] for v in m.alg.vertices},
            "arrows": arrows}


def module_from_json_obj(obj, alg: QuiverAlgebra) -> Module:
    obj = _expect_obj(obj, "module")
    vmap = _vertex_lookup(alg)
    dims: Dict[object, int] = {}
    for k, d in _expect_obj(obj.get("dims", {}), "module dims").items():
        if k not in vmap:
            raise ParseError(f"module dims: unknown vertex {k!r}")
        if not isinstance(d, int) or d < 0:
            raise ParseError(f"module dims: bad dimension {d!r} at vertex {k}")
        dims[vmap[k]] = d
    mats: Dict[str, Mat] = {}
    for name, mat in _expect_obj(obj.get("arrows", {}), "module arrows").items():
        if name not in alg.arrow_index:
            raise ParseError(f"module arrows: unknown arrow {name!r}")
        mats[name] = mat_from_json(mat, f"module matrix for {name!r}")
    return Module(alg, dims, mats)


# -- complex ------------------------------------------------------------

def _degree_key(k, what: str) -> int:
    try:
        return int(k)
    except (TypeError, ValueError) as exc:
        raise ParseError(f"{what}: bad degree key {k!r}") from exc


def complex_to_json_obj(x: ComplexOfModules) -> dict:
    terms = {str(k): module_to_json_obj(x.term(k)) for k in x.support()}
    diffs = {}
    for k, d in sorted(x.diffs.items()):
        per_vertex = {}
        for v in x.alg.vertices:
            mat = d.mats[v]
            if mat and mat[0]:
                per_vertex[str(v)] = mat_to_json(mat)
        diffs[str(k)] = per_vertex
    return {"terms": terms, "differentials": diffs}


def complex_from_json_obj(obj, alg: QuiverAlgebra) -> ComplexOfModules:
    obj = _expect_obj(obj, "complex")
    vmap = _vertex_lookup(alg)
    terms: Dict[int, Module] = {}
    for k, mobj in _expect_obj(obj.get("terms", {}), "complex terms").items():
        terms[_degree_key(k, "complex terms")] = module_from_json_obj(mobj, alg)
    diffs: Dict[int, ModuleMap] = {}
    for k, dobj in _expect_obj(obj.get("differentials", {}),
                               "complex differentials").items():
        deg = _degree_key(k, "complex differentials")
        if deg not in terms or (deg + 1) not in terms:
            raise ParseError(f"differential at degree {deg} lacks an endpoint term")
        mats = {}
        for vk, mat in _expect_obj(dobj, f"differential at {deg}").items():
            if vk not in vmap:
                raise ParseError(f"differential at {deg}: unknown vertex {vk!r}")
            mats[vmap[vk]] = mat_from_json(mat, f"differential at {deg}, vertex {vk}")
        diffs[deg] = ModuleMap(terms[deg], terms[deg + 1], mats)
    return ComplexOfModules(alg, terms, diffs)


# -- smc ----------------------------------------------------------------

def smc_to_json_obj(u: SMC) -> dict:
    path = None if u.path is None else [[i, d] for i, d in u.path]
    return {"elements": [complex_to_json_obj(y) for y in u.objects],
            "provenance": {"path": path, "shift": u.shift}}


def smc_from_json_obj(obj, alg: QuiverAlgebra) -> SMC:
    obj = _expect_obj(obj, "smc")
    elts = obj.get("elements")
    if not isinstance(elts, list):
        raise ParseError("smc: 'elements' must be a list")
    objects = [complex_from_json_obj(e, alg) for e in elts]
    prov = _expect_obj(obj.get("provenance", {"path": None, "shift": 0}),
                       "smc provenance")
    raw_path = prov.get("path")
    path: Optional[List[Tuple[int, str]]] = None
    if raw_path is not None:
        if not isinstance(raw_path, list):
            raise ParseError("smc provenance: 'path' must be a list or null")
        path = []
        for step in raw_path:
            if (not isinstance(step, (list, tuple)) or len(step) != 2
                    or not isinstance(step[0], int) or step[1] not in ("L", "R")):
                raise ParseError(f"smc provenance: bad step {step!r}")
            path.append((step[0], step[1]))
    shift = prov.get("shift", 0)
    if not isinstance(shift, int):
        raise ParseError(f"smc provenance: bad shift {shift!r}")
    return SMC(alg, objects, path=path, shift=shift)


# -- files --------------------------------------------------------------

def dumps(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def read_json_file(path: str):
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path} is not valid JSON: {exc}") from exc


def write_json_file(path: str, obj) -> None:
    with open(path, "w") as fh:
        fh.write(dumps(obj))


def load_algebra(path: str) -> QuiverAlgebra:
    return algebra_from_json_obj(read_json_file(path))


def load_module(path: str, alg: QuiverAlgebra) -> Module:
    return module_from_json_obj(read_json_file(path), alg)


def load_complex(path: str, alg: QuiverAlgebra) -> ComplexOfModules:
    return complex_from_json_obj(read_json_file(path), alg)


def load_smc(path: str, alg: QuiverAlgebra) -> SMC:
    return smc_from_json_obj(read_json_file(path), alg)


def save_algebra(path: str, alg: QuiverAlgebra) -> None:
    write_json_file(path, algebra_to_json_obj(alg))


def save_module(path: str, m: Module) -> None:
    write_json_file(path, module_to_json_obj(m))


def save_complex(path: str, x: ComplexOfModules) -> None:
    write_json_file(path, complex_to_json_obj(x))


def save_smc(path: str, u: SMC) -> None:
    write_json_file(path, smc_to_json_obj(u))
