"""Named self-check suites with pinned time budgets.

Each suite re-derives a frozen family of facts from scratch (root data,
chamber counts, Hom tables, mutation round trips, ...) and reports one
Check per fact.  The `verify` CLI subcommand and the acceptance tests both
run these; a suite passes only if every check holds AND it finishes inside
its budget.
"""

from __future__ import annotations

import random
import time
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from .algebra import (
    Module,
    QuiverAlgebra,
    corner_algebra,
    enumerate_bricks,
    hom_dim,
    preprojective_algebra,
    random_module,
    simple_module,
)
from .arrangement import ChamberGraph, atom_length, atom_leq, atoms_from, hyperplanes_from, longest_atom
from .derived import (
    ComplexOfModules,
    complex_direct_sum,
    has_no_negative_selfext,
    hom_db,
    is_isomorphic_complexes,
    random_complex,
    stalk_complex,
)
from .dynkin import parse_dynkin, primitive_restricted_roots, restrict_roots
from .smc import (
    SMC,
    _containment,
    _degree_fingerprint,
    _mutate,
    _same_collection,
    complete_semibrick,
    heart_membership,
    narrow,
    semibrick_pair_check,
    smc_bounds,
    smc_leq,
    standard_smc,
    validate,
)


class Check:
    def __init__(self, name: str, ok: bool, detail: str = ""):
        self.name = name
        self.ok = bool(ok)
        self.detail = detail

    def __repr__(self) -> str:
        mark = "ok" if self.ok else "FAIL"
        return f"[{mark}] {self.name}" + (f": {self.detail}" if self.detail else "")


class SuiteResult:
    """Checks plus wall time; `ok` demands green checks within budget."""

    def __init__(self, name: str, budget: float):
        self.name = name
        self.budget = budget
        self.checks: List[Check] = []
        self.elapsed = 0.0

    def add(self, name: str, ok: bool, detail: str = "") -> bool:
        self.checks.append(Check(name, ok, detail))
        return bool(ok)

    @property
    def checks_ok(self) -> bool:
        return all(c.ok for c in self.checks)

    @property
    def within_budget(self) -> bool:
        return self.elapsed <= self.budget

    @property
    def ok(self) -> bool:
        return self.checks_ok and self.within_budget

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        msg = f"{status} {self.name} ({len(self.checks)} checks, {self.elapsed:.2f}s / budget {self.budget:.0f}s)"
        if not self.checks_ok:
            first = next(c for c in self.checks if not c.ok)
            msg += f" -- first failure: {first.name}"
            if first.detail:
                msg += f" ({first.detail})"
        elif not self.within_budget:
            msg += " -- over budget"
        return msg

    def __repr__(self) -> str:
        return self.line()


def _pi(name: str) -> QuiverAlgebra:
    return preprojective_algebra(parse_dynkin(name)[0])


def _golden(alg3: QuiverAlgebra):
    """The two-term A3 fixture: M, N, K and x = M + N[1]."""
    M = Module(alg3, {1: 1, 2: 1, 3: 0}, {"a": [[1]]})
    N = Module(alg3, {1: 1, 2: 1, 3: 1}, {"a": [[1]], "b": [[1]]})
    K = Module(alg3, {1: 0, 2: 1, 3: 1}, {"b": [[1]]})
    x = ComplexOfModules(alg3, {-1: N, 0: M}, {})
    return M, N, K, x


# ---------------------------------------------------------------------------
# the suites


def suite_restricted_roots(seed: int = 0) -> SuiteResult:
    """Restriction of the D5 positive roots to the middle coordinates."""
    res = SuiteResult("restricted-roots", budget=1.0)
    t0 = time.perf_counter()
    d, deleted = parse_dynkin("D5:I=1,3,5")
    rr = restrict_roots(d, deleted)
    coords = {r.coords for r in rr}
    res.add("restricted coordinate set",
            coords == {(1, 0), (0, 1), (1, 1), (2, 1), (2, 2)}, f"got {sorted(coords)}")
    prim = {r.coords for r in primitive_restricted_roots(rr)}
    res.add("primitive subset",
            prim == {(1, 0), (0, 1), (1, 1), (2, 1)}, f"got {sorted(prim)}")
    res.elapsed = time.perf_counter() - t0
    return res


def suite_arrangement_counts(seed: int = 0) -> SuiteResult:
    """Hyperplane/chamber counts for three fixed restrictions, each under 1s."""
    res = SuiteResult("arrangement-counts", budget=3.0)
    t0 = time.perf_counter()

    def fixture(label: str, dynkin: str, n_hyp: int, n_chambers: int) -> ChamberGraph:
        t = time.perf_counter()
        d, deleted = parse_dynkin(dynkin)
        normals = hyperplanes_from(restrict_roots(d, deleted))
        graph = ChamberGraph(normals)
        dt = time.perf_counter() - t
        res.add(f"{label} hyperplanes", len(normals) == n_hyp, f"got {len(normals)}")
        res.add(f"{label} chambers", len(graph.chambers) == n_chambers,
                f"got {len(graph.chambers)}")
        res.add(f"{label} under 1s", dt < 1.0, f"{dt:.2f}s")
        return graph

    fixture("restricted D5", "D5:I=1,3,5", 4, 8)
    d4, del4 = parse_dynkin("D4:I=3,4")
    rr4 = {r.coords for r in restrict_roots(d4, del4)}
    res.add("restricted D4 coordinate set",
            rr4 == {(1, 0), (0, 1), (1, 1), (1, 2)}, f"got {sorted(rr4)}")
    fixture("restricted D4", "D4:I=3,4", 4, 8)
    g = fixture("full A2", "A2", 3, 6)

    src = g.chamber_index((1,) * len(g.normals))
    atoms = atoms_from(g, src)
    lengths = [atom_length(g, a) for a in atoms]
    res.add("A2 atom lengths reach 3", max(lengths) == 3, f"got {sorted(lengths)}")
    res.add("A2 longest atom unique", lengths.count(3) == 1)
    top = longest_atom(g, src)
    res.add("A2 atom order has a maximum",
            all(atom_leq(g, a, top) for a in atoms))
    res.elapsed = time.perf_counter() - t0
    return res


def suite_root_counts(seed: int = 0) -> SuiteResult:
    """Positive-root counts and braid relations on the root lattice."""
    res = SuiteResult("root-counts", budget=1.0)
    t0 = time.perf_counter()
    for name, count in (("D5", 20), ("D4", 12), ("A3", 6)):
        d, _ = parse_dynkin(name)
        got = len(d.positive_roots())
        res.add(f"{name} positive roots", got == count, f"got {got}")
    for name in ("A2", "A3", "D4"):
        d, _ = parse_dynkin(name)
        ok = all(d.braid_check(i, j)
                 for i in d.vertices for j in d.vertices if i < j)
        res.add(f"{name} braid relations", ok)
    res.elapsed = time.perf_counter() - t0
    return res


def suite_ex_6_13(seed: int = 0) -> SuiteResult:
    """The worked two-term example over the A3 preprojective algebra."""
    res = SuiteResult("ex-6-13", budget=30.0)
    t0 = time.perf_counter()
    alg = _pi("A3")
    M, N, K, x = _golden(alg)
    s1, s2 = simple_module(alg, 1), simple_module(alg, 2)

    res.add("x has no negative self-extension", has_no_negative_selfext(x))
    res.add("(M; N) is a semibrick pair", semibrick_pair_check([M], [N]).is_pair)

    naive = SMC(alg, [stalk_complex(M), stalk_complex(s1).shift(1),
                      stalk_complex(K).shift(1)], path=None)
    res.add("naive completion by (S_1, K) fails the Hom axiom",
            not validate(naive).ok, f"Hom(M, S_1) = {hom_dim(M, s1)}")

    sp = SMC(alg, [stalk_complex(M), stalk_complex(s2).shift(1),
                   stalk_complex(N).shift(1)], path=None)
    res.add("corrected completion validates", validate(sp).ok)

    vanish = all(hom_db(y, x, i) == 0 and hom_db(x, y, i) == 0
                 for y in sp.objects for i in range(-4, 0))
    res.add("no negative Homs between x and the completion", vanish)
    res.add("x sits in the heart of the completion", smc_bounds(x, sp) == (0, 0))

    V, path = narrow(x, standard_smc(alg))
    res.add("narrowing lands x in a heart",
            smc_bounds(x, V) == (0, 0) and validate(V).ok, f"path {path!r}")
    res.add("heart membership confirms", bool(heart_membership(x)))
    res.elapsed = time.perf_counter() - t0
    return res


def suite_brick_vectors(seed: int = 0) -> SuiteResult:
    """Brick censuses match the restricted-root predictions."""
    res = SuiteResult("brick-vectors", budget=300.0)
    t0 = time.perf_counter()
    alg2 = _pi("A2")
    for p in (2, 3):
        census = enumerate_bricks(alg2, {1: 2, 2: 2}, p)
        got = {vec for vec, _ in census}
        res.add(f"A2 preprojective bricks over F_{p}",
                got == {(1, 0), (0, 1), (1, 1)}, f"got {sorted(got)}")
    alg3 = _pi("A3")
    cor = corner_algebra(alg3, [2])
    d3, _ = parse_dynkin("A3")
    prim = {r.coords for r in primitive_restricted_roots(restrict_roots(d3, [2]))}
    res.add("primitive restricted roots of the corner",
            prim == {(1, 0), (0, 1), (1, 1)}, f"got {sorted(prim)}")
    for p in (2, 3):
        census = enumerate_bricks(cor, {v: 2 for v in cor.vertices}, p)
        got = {vec for vec, _ in census}
        res.add(f"corner bricks over F_{p} realize exactly the primitives",
                got == prim, f"got {sorted(got)}")
    res.elapsed = time.perf_counter() - t0
    return res


def suite_magic_lemma(seed: int = 0) -> SuiteResult:
    """Edge-degree Hom formula over the hereditary A2 path algebra:
    with (a, b) the cohomological bounds of x and (c, d) those of y,
    dim Hom(y, x[a - d]) = dim Hom(H^d y, H^a x) on 100 seeded pairs."""
    res = SuiteResult("magic-lemma", budget=120.0)
    t0 = time.perf_counter()
    ka2 = QuiverAlgebra([1, 2], [("a", 1, 2)], [])
    rng = random.Random(seed)
    failures = []
    trials = 0
    while trials < 100:
        x = random_complex(ka2, rng)
        y = random_complex(ka2, rng)
        if x.is_zero_complex() or y.is_zero_complex():
            continue
        try:
            a, _ = x.std_bounds()
            _, d = y.std_bounds()
        except Exception:
            continue
        trials += 1
        lhs = hom_db(y, x, a - d)
        rhs = hom_dim(y.cohomology(d), x.cohomology(a))
        if lhs != rhs:
            failures.append((trials, lhs, rhs))
    res.add("edge formula on 100 seeded pairs", not failures,
            f"failures {failures[:3]}" if failures else "0 failures")
    res.elapsed = time.perf_counter() - t0
    return res


def _mutation_closure_checks(res: SuiteResult, name: str, depth: int) -> None:
    from collections import deque

    alg = _pi(name)
    std = standard_smc(alg)
    seen: Dict[tuple, List[Tuple[int, SMC]]] = {}

    def key(U: SMC) -> tuple:
        return tuple(sorted(_degree_fingerprint(y) for y in U.objects))

    def find(U: SMC) -> Optional[int]:
        for t, old in seen.get(key(U), []):
            if _same_collection(old, U):
                return t
        return None

    nodes: List[SMC] = [std]
    depths = [0]
    seen[key(std)] = [(0, std)]
    # fresh mutation results per (node, index, direction): the deduplicated
    # node objects cannot stand in for these, their member order may differ
    fresh: Dict[Tuple[int, int, str], SMC] = {}
    queue = deque([0])
    while queue:
        u = queue.popleft()
        if depths[u] >= depth:
            continue
        U = nodes[u]
        for i in range(1, len(U.objects) + 1):
            for dr in ("L", "R"):
                V = _mutate(U, i, dr, verify=False)
                fresh[u, i, dr] = V
                if find(V) is None:
                    t = len(nodes)
                    nodes.append(V)
                    depths.append(depths[u] + 1)
                    seen.setdefault(key(V), []).append((t, V))
                    queue.append(t)

    rt_fail = shift_fail = descent_fail = window_fail = 0
    for u, U in enumerate(nodes):
        for i in range(1, len(U.objects) + 1):
            V = fresh.get((u, i, "L")) or _mutate(U, i, "L", verify=False)
            if not _same_collection(_mutate(V, i, "R", verify=False), U):
                rt_fail += 1
            W = fresh.get((u, i, "R"))
            if W is not None and not _same_collection(
                    _mutate(W, i, "L", verify=False), U):
                rt_fail += 1
            if not is_isomorphic_complexes(V.element(i), U.element(i).shift(1),
                                           assume_minimal=True):
                shift_fail += 1
            if not smc_leq(V, U) or _same_collection(V, U):
                descent_fail += 1
            for y in U.objects:
                a, b = smc_bounds(y, V)
                if a < 0 or b > 1:
                    window_fail += 1

    res.add(f"{name} closure round trips", rt_fail == 0,
            f"{len(nodes)} collections, {rt_fail} failures")
    res.add(f"{name} mutated member shifts", shift_fail == 0, f"{shift_fail} failures")
    res.add(f"{name} left mutation strictly descends", descent_fail == 0,
            f"{descent_fail} failures")
    res.add(f"{name} window growth stays in [0,1]", window_fail == 0,
            f"{window_fail} failures")


def suite_mutation(seed: int = 0) -> SuiteResult:
    """Round trips, index shift, descent and window growth over the depth-4
    mutation closures of the standard collections."""
    res = SuiteResult("mutation", budget=300.0)
    t0 = time.perf_counter()
    _mutation_closure_checks(res, "A2", 4)
    _mutation_closure_checks(res, "A3", 4)
    res.elapsed = time.perf_counter() - t0
    return res


def suite_heart_membership(seed: int = 0) -> SuiteResult:
    """25 seeded objects built inside known hearts classify as members; 10
    seeded objects with a verified negative self-extension classify out."""
    res = SuiteResult("heart-membership", budget=300.0)
    t0 = time.perf_counter()
    rng = random.Random(seed)
    alg2, alg3 = _pi("A2"), _pi("A3")

    pos_bad = []
    hearts: Dict[str, List[SMC]] = {}
    for name, alg in (("A2", alg2), ("A3", alg3)):
        U = standard_smc(alg)
        pool = [U]
        for _ in range(3):
            i = rng.randrange(1, len(U.objects) + 1)
            dr = rng.choice("LR")
            U = _mutate(U, i, dr, verify=False)
            pool.append(U)
        hearts[name] = pool
    for t in range(25):
        name, alg = ("A2", alg2) if t % 2 == 0 else ("A3", alg3)
        shift = rng.randrange(-1, 2)
        if t % 5 == 0:
            m = random_module(alg, rng)
            x = stalk_complex(m).shift(shift)
        else:
            U = rng.choice(hearts[name])
            n = len(U.objects)
            picks = [j for j in range(n) if rng.random() < 0.5] or [rng.randrange(n)]
            parts = [U.objects[j].shift(shift) for j in picks]
            x = complex_direct_sum(parts)[0] if len(parts) > 1 else parts[0]
        r = heart_membership(x)
        if not r.in_heart:
            pos_bad.append(t)
        else:
            V, _ = r.witness
            if smc_bounds(x, V) != (0, 0):
                pos_bad.append(t)
    res.add("25 in-heart objects recognized", not pos_bad, f"misclassified {pos_bad}")

    neg_found = 0
    neg_bad = []
    attempts = 0
    while neg_found < 10 and attempts < 2000:
        attempts += 1
        alg = alg2 if attempts % 2 == 0 else alg3
        x = random_complex(alg, rng)
        if x.is_zero_complex() or all(x.cohomology(i).is_zero() for i in x.support()):
            continue
        if has_no_negative_selfext(x):
            continue
        neg_found += 1
        r = heart_membership(x)
        if r.in_heart:
            neg_bad.append(attempts)
            continue
        d = r.violating_degree
        if d is None or d >= 0 or hom_db(x, x, d) == 0:
            neg_bad.append(attempts)
    res.add("10 obstructed objects generated", neg_found == 10, f"got {neg_found}")
    res.add("obstructed objects rejected with a verified degree", not neg_bad,
            f"misclassified {neg_bad}")

    s1, s2 = simple_module(alg2, 1), simple_module(alg2, 2)
    both = complex_direct_sum([stalk_complex(s1), stalk_complex(s2).shift(2)])[0]
    r = heart_membership(both)
    res.add("pinned obstructed fixture rejected at degree -1",
            (not r.in_heart) and r.violating_degree == -1, repr(r))
    res.elapsed = time.perf_counter() - t0
    return res


def suite_completion(seed: int = 0) -> SuiteResult:
    """Completion of semibrick complexes to full collections."""
    res = SuiteResult("completion", budget=120.0)
    t0 = time.perf_counter()
    alg3 = _pi("A3")
    M, N, K, x = _golden(alg3)
    C = complete_semibrick(x)
    res.add("two-term fixture completes to 3 members", len(C.objects) == 3)
    res.add("completion validates", validate(C).ok)
    res.add("completion contains the fixture",
            _containment(x, C) is not None)
    res.add("M appears among the members",
            _containment(stalk_complex(M), C) is not None)
    res.add("N[1] appears among the members",
            _containment(stalk_complex(N).shift(1), C) is not None)

    alg2 = _pi("A2")
    E = Module(alg2, {1: 1, 2: 1}, {"a*": [[1]]})
    xe = stalk_complex(E)
    C2 = complete_semibrick(xe)
    res.add("extension brick completes to 2 members", len(C2.objects) == 2)
    res.add("its completion validates", validate(C2).ok)
    res.add("E appears among the members", _containment(xe, C2) is not None)
    res.elapsed = time.perf_counter() - t0
    return res


SUITES: Dict[str, Callable[[int], SuiteResult]] = {
    "restricted-roots": suite_restricted_roots,
    "arrangement-counts": suite_arrangement_counts,
    "root-counts": suite_root_counts,
    "ex-6-13": suite_ex_6_13,
    "brick-vectors": suite_brick_vectors,
    "magic-lemma": suite_magic_lemma,
    "mutation": suite_mutation,
    "heart-membership": suite_heart_membership,
    "completion": suite_completion,
}


def run_suite(name: str, seed: int = 0) -> SuiteResult:
    from .errors import PreconditionError
    if name not in SUITES:
        raise PreconditionError(
            f"unknown suite {name!r}; pick from {', '.join(SUITES)} or 'all'")
    return SUITES[name](seed)


def run_all(seed: int = 0) -> List[SuiteResult]:
    return [fn(seed) for fn in SUITES.values()]
