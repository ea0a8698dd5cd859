"""Bounded complexes of modules and exact derived-category calculations.

Complexes are cohomological: d^k maps degree k to degree k+1, and shifting by
n moves a degree-0 stalk to degree -n while multiplying differentials by
(-1)^n.  Morphism spaces Hom(x, y[n]) are computed by replacing x with a
truncated complex of projectives R (built degree by degree downward so that
cone(R -> x) is exact above the truncation depth) and taking cohomology of the
Hom complex Hom*(R, y).  Since the terms of R are direct sums of P_v, maps out
of them are Yoneda data: an element of y at a vertex per summand, and the
differentials act through exact path-action matrices, so the Hom complex stays
small even when the modules do not.

`minimize` strips contractible summands by exact Gaussian elimination: find
h with h o d not nilpotent, split off the Fitting image where d restricts to
an isomorphism, and repeat.  The search for h is randomized (with fixed seeds
and an exhaustive fallback for small Hom spaces), the splitting itself is
exact.  `normal_form` combines sharp truncation to the cohomological support
with `minimize`; on these inputs it collapses exact complexes to zero and
one-point-support complexes to honest stalks.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from . import linalg
from .algebra import (
    Element,
    Module,
    ModuleMap,
    QuiverAlgebra,
    direct_sum,
    hom_module,
    identity_map,
    image_module,
    kernel_module,
    cokernel_module,
    projective_cover,
    projective_module,
    zero_map,
    zero_module,
)
from .errors import BudgetError, InternalError, PreconditionError
from .linalg import Q0, Q1

MAX_MINIMIZE_PASSES = 10000


class ComplexOfModules:
    """Bounded complex; zero terms are dropped on construction."""

    _canonical = False  # set by standard_model; shifts inherit it

    def __init__(self, alg: QuiverAlgebra, terms: Dict[int, Module], diffs: Dict[int, ModuleMap], *, check: bool = True):
        self.alg = alg
        self.terms = {k: m for k, m in terms.items() if m.total_dim}
        self.diffs = {}
        for k, d in diffs.items():
            if k in self.terms and (k + 1) in self.terms:
                self.diffs[k] = d
            elif check and not d.is_zero():
                raise PreconditionError(f"differential at degree {k} touches a zero term but is nonzero")
        if check:
            for k, d in self.diffs.items():
                if d.source.dims != self.terms[k].dims or d.target.dims != self.terms[k + 1].dims:
                    raise PreconditionError(f"differential at degree {k} has wrong endpoints")
            for k in self.diffs:
                if (k + 1) in self.diffs:
                    if not self.diffs[k + 1].compose(self.diffs[k]).is_zero():
                        raise PreconditionError(f"d^2 != 0 at degree {k}")
        self._coh: Dict[int, Module] = {}
        self._shifts: Dict[int, "ComplexOfModules"] = {}

    def support(self) -> List[int]:
        return sorted(self.terms)

    def is_zero_complex(self) -> bool:
        return not self.terms

    def lo_term(self) -> int:
        return min(self.terms)

    def hi_term(self) -> int:
        return max(self.terms)

    def term(self, k: int) -> Module:
        return self.terms.get(k) or zero_module(self.alg)

    def diff(self, k: int) -> ModuleMap:
        d = self.diffs.get(k)
        if d is not None:
            return d
        return zero_map(self.term(k), self.term(k + 1))

    def total_dim(self) -> int:
        return sum(m.total_dim for m in self.terms.values())

    def shift(self, n: int) -> "ComplexOfModules":
        """x[n]^k = x^(k+n) with differential scaled by (-1)^n."""
        if n == 0:
            return self
        if n in self._shifts:
            return self._shifts[n]
        sgn = Fraction(1) if n % 2 == 0 else Fraction(-1)
        terms = {k - n: m for k, m in self.terms.items()}
        diffs = {k - n: d.scale(sgn) for k, d in self.diffs.items()}
        out = ComplexOfModules(self.alg, terms, diffs, check=False)
        out._canonical = self._canonical
        self._shifts[n] = out
        return out

    def cohomology(self, i: int) -> Module:
        """H^i = ker d^i / im d^(i-1), as a module."""
        if i in self._coh:
            return self._coh[i]
        if i not in self.terms:
            out = zero_module(self.alg)
        else:
            z, incl = kernel_module(self.diff(i))
            prev = self.diff(i - 1)
            if prev.is_zero() or z.is_zero():
                out = z
            else:
                lift = {}
                for v in self.alg.vertices:
                    m = linalg.zeros(z.dims[v], prev.source.dims[v])
                    for j in range(prev.source.dims[v]):
                        col = [prev.mats[v][r][j] for r in range(prev.target.dims[v])]
                        sol = linalg.solve(incl.mats[v], col, z.dims[v])
                        if sol is None:
                            raise InternalError("boundary does not land in the cycles")
                        for r in range(z.dims[v]):
                            m[r][j] = sol[r]
                    lift[v] = m
                g = ModuleMap(prev.source, z, lift, check=False)
                out = cokernel_module(g)[0]
        self._coh[i] = out
        return out

    def std_bounds(self) -> Tuple[int, int]:
        """(lo, hi) of the cohomological support; errors on a zero object."""
        degs = [i for i in self.support() if not self.cohomology(i).is_zero()]
        if not degs:
            raise PreconditionError("zero object has no standard bounds")
        return degs[0], degs[-1]

    def __repr__(self) -> str:
        return "Complex{" + ", ".join(f"{k}:{self.terms[k].dim_vector()}" for k in self.support()) + "}"


def stalk_complex(m: Module, degree: int = 0) -> ComplexOfModules:
    out = ComplexOfModules(m.alg, {degree: m}, {}, check=False)
    # a one-term complex is its own standard model: the good truncation of any
    # projective model at its single cohomology degree is the stalk again
    out._canonical = True
    return out


class ChainMap:
    def __init__(self, source: ComplexOfModules, target: ComplexOfModules, comps: Dict[int, ModuleMap], *, check: bool = True):
        self.source = source
        self.target = target
        self.comps = {k: f for k, f in comps.items() if not f.is_zero()}
        if check:
            degs = set(self.source.terms) | set(self.target.terms)
            for k in degs:
                lhs = self.component(k + 1).compose(source.diff(k))
                rhs = target.diff(k).compose(self.component(k))
                for v in source.alg.vertices:
                    if lhs.mats[v] != rhs.mats[v]:
                        raise PreconditionError(f"chain-map square fails at degree {k}")

    def component(self, k: int) -> ModuleMap:
        f = self.comps.get(k)
        if f is not None:
            return f
        return zero_map(self.source.term(k), self.target.term(k))

    def is_zero(self) -> bool:
        return not self.comps


def complex_direct_sum(xs: Sequence[ComplexOfModules]) -> Tuple[ComplexOfModules, List[ChainMap], List[ChainMap]]:
    """(sum, injections, projections), degreewise."""
    if not xs:
        raise PreconditionError("empty direct sum of complexes")
    alg = xs[0].alg
    degs = sorted({k for x in xs for k in x.terms})
    terms: Dict[int, Module] = {}
    injs_by_deg: Dict[int, List[ModuleMap]] = {}
    projs_by_deg: Dict[int, List[ModuleMap]] = {}
    for k in degs:
        total, injs, projs = direct_sum([x.term(k) for x in xs])
        terms[k] = total
        injs_by_deg[k] = injs
        projs_by_deg[k] = projs
    diffs: Dict[int, ModuleMap] = {}
    for k in degs:
        if (k + 1) not in terms:
            continue
        acc = zero_map(terms[k], terms[k + 1])
        for t, x in enumerate(xs):
            d = x.diff(k)
            if d.is_zero():
                continue
            acc = acc.add(injs_by_deg[k + 1][t].compose(d.compose(projs_by_deg[k][t])))
        diffs[k] = acc
    total = ComplexOfModules(alg, terms, diffs, check=False)
    cinjs = [
        ChainMap(x, total, {k: injs_by_deg[k][t] for k in degs if x.term(k).total_dim}, check=False)
        for t, x in enumerate(xs)
    ]
    cprojs = [
        ChainMap(total, x, {k: projs_by_deg[k][t] for k in degs if x.term(k).total_dim}, check=False)
        for t, x in enumerate(xs)
    ]
    return total, cinjs, cprojs


def cone(f: ChainMap) -> ComplexOfModules:
    """C^k = A^(k+1) + B^k with d(a, b) = (-d_A a, f a + d_B b)."""
    a, b = f.source, f.target
    alg = a.alg
    degs = sorted({k - 1 for k in a.terms} | set(b.terms))
    pieces: Dict[int, Tuple[Module, List[ModuleMap], List[ModuleMap]]] = {}
    for k in degs:
        total, injs, projs = direct_sum([a.term(k + 1), b.term(k)])
        pieces[k] = (total, injs, projs)
    terms = {k: pieces[k][0] for k in degs}
    diffs: Dict[int, ModuleMap] = {}
    for k in degs:
        if (k + 1) not in pieces:
            continue
        src, (_, injs1, projs0) = pieces[k][0], (pieces[k + 1][0], pieces[k + 1][1], pieces[k][2])
        inj_a, inj_b = injs1
        proj_a, proj_b = projs0
        acc = zero_map(src, pieces[k + 1][0])
        da = a.diff(k + 1)
        if not da.is_zero():
            acc = acc.add(inj_a.compose(da.neg().compose(proj_a)))
        fc = f.component(k + 1)
        if not fc.is_zero():
            acc = acc.add(inj_b.compose(fc.compose(proj_a)))
        db = b.diff(k)
        if not db.is_zero():
            acc = acc.add(inj_b.compose(db.compose(proj_b)))
        diffs[k] = acc
    return ComplexOfModules(alg, terms, diffs, check=False)


def truncate_below(x: ComplexOfModules, c: int) -> ComplexOfModules:
    """Good truncation keeping degrees >= c: the degree-c term becomes
    coker(d^(c-1)), so cohomology in degrees >= c is unchanged."""
    if x.is_zero_complex() or c <= x.lo_term():
        return x
    if c > x.hi_term():
        return ComplexOfModules(x.alg, {}, {}, check=False)
    terms = {k: m for k, m in x.terms.items() if k > c}
    diffs = {k: d for k, d in x.diffs.items() if k > c}
    prev = x.diff(c - 1)
    if prev.is_zero():
        if c in x.terms:
            terms[c] = x.terms[c]
            if c in x.diffs:
                diffs[c] = x.diffs[c]
        return ComplexOfModules(x.alg, terms, diffs, check=False)
    q, proj, sect = cokernel_module(prev)
    if not q.is_zero():
        terms[c] = q
        nxt = x.diff(c)
        if not nxt.is_zero():
            mats = {
                v: linalg.mat_mul(nxt.mats[v], sect[v], inner=x.term(c).dims[v])
                for v in x.alg.vertices
            }
            diffs[c] = ModuleMap(q, x.term(c + 1), mats, check=False)
    return ComplexOfModules(x.alg, terms, diffs, check=False)


def truncate_above(x: ComplexOfModules, c: int) -> ComplexOfModules:
    """Good truncation keeping degrees <= c: the degree-c term becomes
    ker(d^c), so cohomology in degrees <= c is unchanged."""
    if x.is_zero_complex() or c >= x.hi_term():
        return x
    if c < x.lo_term():
        return ComplexOfModules(x.alg, {}, {}, check=False)
    terms = {k: m for k, m in x.terms.items() if k < c}
    diffs = {k: d for k, d in x.diffs.items() if k + 1 < c}
    nxt = x.diff(c)
    if nxt.is_zero():
        if c in x.terms:
            terms[c] = x.terms[c]
            if (c - 1) in x.diffs:
                diffs[c - 1] = x.diffs[c - 1]
        return ComplexOfModules(x.alg, terms, diffs, check=False)
    z, incl = kernel_module(nxt)
    if not z.is_zero():
        terms[c] = z
        prev = x.diff(c - 1)
        if not prev.is_zero():
            lift = {}
            for v in x.alg.vertices:
                m = linalg.zeros(z.dims[v], prev.source.dims[v])
                for j in range(prev.source.dims[v]):
                    col = [prev.mats[v][r][j] for r in range(prev.target.dims[v])]
                    sol = linalg.solve(incl.mats[v], col, z.dims[v])
                    if sol is None:
                        raise InternalError("boundary escapes the kernel truncation")
                    for r in range(z.dims[v]):
                        m[r][j] = sol[r]
                lift[v] = m
            diffs[c - 1] = ModuleMap(prev.source, z, lift, check=False)
    return ComplexOfModules(x.alg, terms, diffs, check=False)


def tighten(x: ComplexOfModules) -> ComplexOfModules:
    """Truncate sharply to the cohomological support (exact complexes become
    the zero complex)."""
    if x.is_zero_complex():
        return x
    degs = [i for i in x.support() if not x.cohomology(i).is_zero()]
    if not degs:
        return ComplexOfModules(x.alg, {}, {}, check=False)
    return truncate_above(truncate_below(x, degs[0]), degs[-1])


# ---------------------------------------------------------------------------
# minimization

def _map_power(f: ModuleMap, n: int) -> ModuleMap:
    out = identity_map(f.source)
    base = f
    while n:
        if n & 1:
            out = base.compose(out)
        base = base.compose(base)
        n >>= 1
    return out


def _split_candidates(basis: List[ModuleMap], rng: random.Random) -> List[List[int]]:
    combos = [[1 if i == j else 0 for j in range(len(basis))] for i in range(len(basis))]
    combos += [[rng.randint(-9, 9) for _ in range(len(basis))] for _ in range(30)]
    if len(basis) <= 3:
        combos += [list(t) for t in itertools.product((-1, 0, 1, 2), repeat=len(basis))]
    return combos


def minimize(x: ComplexOfModules) -> ComplexOfModules:
    """Strip contractible two-term summands until every composite h o d is
    nilpotent.  Exact (Gaussian elimination); the search for a splitting h is
    seeded Monte Carlo with an exhaustive fallback on small Hom spaces."""
    if x.is_zero_complex():
        return x
    terms = dict(x.terms)
    diffs = dict(x.diffs)
    rng = random.Random(9173)
    for _pass in range(MAX_MINIMIZE_PASSES):
        progress = False
        for k in sorted(diffs):
            d = diffs[k]
            if d.is_zero():
                continue
            src, tgt = terms[k], terms[k + 1]
            basis = hom_module(tgt, src)
            if not basis:
                continue
            split = None
            for coef in _split_candidates(basis, rng):
                h = None
                for c, b in zip(coef, basis):
                    if not c:
                        continue
                    sb = b.scale(Fraction(c))
                    h = sb if h is None else h.add(sb)
                if h is None:
                    continue
                e = h.compose(d)
                en = _map_power(e, src.total_dim)
                if not en.is_zero():
                    split = (h, e, en)
                    break
            if split is None:
                continue
            h, e, en = split
            terms, diffs = _eliminate(terms, diffs, k, h, en)
            progress = True
            break
        if not progress:
            break
    else:
        raise BudgetError("minimize did not stabilize")
    return ComplexOfModules(x.alg, terms, diffs, check=False)


def _eliminate(terms, diffs, k, h, en):
    """Split off the invertible block of d^k found through h (en = (h d)^N)."""
    d = diffs[k]
    src, tgt = terms[k], terms[k + 1]
    alg = src.alg
    a_mod, iota_a = image_module(en)
    k_mod, iota_k = kernel_module(en)
    # X^k = A + K: invert [iota_a | iota_k] per vertex for the projections
    pa, pk = {}, {}
    for v in alg.vertices:
        t = linalg.hstack([iota_a.mats[v], iota_k.mats[v]], src.dims[v])
        inv = linalg.inverse(t)
        if inv is None:
            raise InternalError("Fitting decomposition is not a splitting")
        pa[v] = inv[: a_mod.dims[v]]
        pk[v] = inv[a_mod.dims[v]:]
    proj_a = ModuleMap(src, a_mod, pa, check=False)
    proj_k = ModuleMap(src, k_mod, pk, check=False)
    # retraction u with u o (d iota_a) = id_A
    e_on_a = proj_a.compose(h.compose(d).compose(iota_a))
    inv_mats = {}
    for v in alg.vertices:
        inv = linalg.inverse(e_on_a.mats[v])
        if inv is None:
            raise InternalError("restriction to the Fitting image is singular")
        inv_mats[v] = inv
    e_inv = ModuleMap(a_mod, a_mod, inv_mats, check=False)
    u = e_inv.compose(proj_a.compose(h))
    q = d.compose(iota_a).compose(u)             # idempotent onto B = d(A)
    one_minus_q = identity_map(tgt).add(q.neg())
    c_mod, iota_c = image_module(one_minus_q)
    pc = {}
    for v in alg.vertices:
        m = linalg.zeros(c_mod.dims[v], tgt.dims[v])
        for j in range(tgt.dims[v]):
            col = [one_minus_q.mats[v][r][j] for r in range(tgt.dims[v])]
            sol = linalg.solve(iota_c.mats[v], col, c_mod.dims[v])
            if sol is None:
                raise InternalError("complement of the split block is not free")
            for r in range(c_mod.dims[v]):
                m[r][j] = sol[r]
        pc[v] = m
    proj_c = ModuleMap(tgt, c_mod, pc, check=False)

    new_terms = dict(terms)
    new_diffs = dict(diffs)
    new_terms[k] = k_mod
    new_terms[k + 1] = c_mod
    new_diffs[k] = proj_c.compose(d.compose(iota_k))
    if (k - 1) in diffs:
        new_diffs[k - 1] = proj_k.compose(diffs[k - 1])
    if (k + 1) in diffs:
        new_diffs[k + 1] = diffs[k + 1].compose(iota_c)
    # drop zero terms and their boundary differentials
    for deg in (k, k + 1):
        if new_terms[deg].is_zero():
            del new_terms[deg]
    for deg in (k - 1, k, k + 1):
        if deg in new_diffs and (deg not in new_terms or (deg + 1) not in new_terms):
            del new_diffs[deg]
    return new_terms, new_diffs


def normal_form(x: ComplexOfModules) -> ComplexOfModules:
    """Sharp truncation to cohomological support, then minimize."""
    return minimize(tighten(x))


MAX_STANDARD_MODEL_PASSES = 16


def _term_dims(x: ComplexOfModules):
    return tuple((k, tuple(x.term(k).dims[v] for v in x.alg.vertices)) for k in x.support())


def standard_model(x: ComplexOfModules) -> ComplexOfModules:
    """Canonical representative of the derived-category class of x.

    Replace x by a minimized projective model built two degrees below its
    bottom cohomology a, good-truncate back at a, and repeat until the result
    reproduces itself up to isomorphism.  Minimal models of this shape are
    unique up to isomorphism, so two complexes with isomorphic standard models
    are isomorphic in the derived category and conversely.  A single pass is
    not enough: the stage-wise cover construction can return a model with a
    unit component in a differential (seen in practice), and minimizing that
    model changes the truncation it feeds.
    """
    if x._canonical:
        return x
    cur = normal_form(x)
    if cur.is_zero_complex():
        cur._canonical = True
        return cur
    a = cur.lo_term()
    for _ in range(MAX_STANDARD_MODEL_PASSES):
        model = minimize(replacement_of(cur, a - 2).as_complex(a - 2))
        nxt = minimize(tighten(truncate_below(model, a)))
        if _term_dims(nxt) == _term_dims(cur) and is_isomorphic_complexes(nxt, cur, assume_minimal=True):
            nxt._canonical = True
            return nxt
        cur = nxt
    raise InternalError("standard model iteration did not stabilize")


# ---------------------------------------------------------------------------
# projective replacement (formal, built downward, extendable)

class Replacement:
    """Truncated projective replacement R -> x: R^k is a direct sum of P_v
    recorded by its vertex list, differentials are kept both realized and as
    formal matrices of algebra elements, and cone(R -> x) is exact in degrees
    > the current floor.  Extending the floor reuses everything built."""

    def __init__(self, x: ComplexOfModules):
        self.x = x
        self.alg = x.alg
        self.hi = x.hi_term() if not x.is_zero_complex() else 0
        self.low = self.hi + 1
        self.verts: Dict[int, List[object]] = {}
        self.realized: Dict[int, Module] = {}
        self.rdiffs: Dict[int, ModuleMap] = {}
        self.formal: Dict[int, List[List[Element]]] = {}
        self.pi: Dict[int, ModuleMap] = {}
        self.exhausted: Optional[int] = None
        self._as_complex: Dict[int, ComplexOfModules] = {}

    def build_to(self, depth: int) -> None:
        if self.x.is_zero_complex():
            self.exhausted = self.low = min(self.low, depth)
            return
        while self.low > depth:
            if self.exhausted is not None:
                self.low = depth
                return
            self._build(self.low - 1)
            self.low -= 1

    def _build(self, k: int) -> None:
        alg = self.alg
        rk1 = self.realized.get(k + 1) or zero_module(alg)
        xk = self.x.term(k)
        dsum, injs, projs = direct_sum([rk1, xk])
        rk2 = self.realized.get(k + 2) or zero_module(alg)
        xk1 = self.x.term(k + 1)
        tsum, tinjs, _ = direct_sum([rk2, xk1])
        g = zero_map(dsum, tsum)
        dr = self.rdiffs.get(k + 1)
        if dr is not None and not dr.is_zero():
            g = g.add(tinjs[0].compose(dr.compose(projs[0])))
        pi = self.pi.get(k + 1)
        if pi is not None and not pi.is_zero():
            g = g.add(tinjs[1].compose(pi.compose(projs[0])))
        dx = self.x.diff(k)
        if not dx.is_zero():
            g = g.add(tinjs[1].compose(dx.compose(projs[1])))
        khat, incl = kernel_module(g)
        if khat.is_zero():
            self.verts[k] = []
            self.realized[k] = zero_module(alg)
            self.rdiffs[k] = zero_map(self.realized[k], rk1)
            self.formal[k] = []
            self.pi[k] = zero_map(self.realized[k], xk)
            if all(deg > k for deg in self.x.terms):
                self.exhausted = k
            return
        p, cov, vlist = projective_cover(khat)
        into_sum = incl.compose(cov)
        u = projs[0].compose(into_sum)
        v = projs[1].compose(into_sum)
        self.verts[k] = vlist
        self.realized[k] = p
        self.rdiffs[k] = u.neg()
        self.pi[k] = v
        self.formal[k] = _formal_from_realized(alg, self.rdiffs[k], vlist, self.verts.get(k + 1, []))

    def term(self, k: int) -> Module:
        return self.realized.get(k) or zero_module(self.alg)

    def as_complex(self, depth: int) -> ComplexOfModules:
        """Realized complex on degrees [depth, hi]."""
        if depth in self._as_complex:
            return self._as_complex[depth]
        self.build_to(depth)
        terms = {k: m for k, m in self.realized.items() if k >= depth and m.total_dim}
        diffs = {
            k: d for k, d in self.rdiffs.items()
            if k >= depth and k in terms and (k + 1) in terms and not d.is_zero()
        }
        out = ComplexOfModules(self.alg, terms, diffs, check=False)
        self._as_complex[depth] = out
        return out


def _formal_from_realized(alg, f: ModuleMap, src_verts, tgt_verts) -> List[List[Element]]:
    """Convert a realized map between sums of projectives into a matrix of
    algebra elements (rows: target summands, cols: source summands)."""
    if not src_verts or not tgt_verts:
        return []
    tgt_projs = [projective_module(alg, w) for w in tgt_verts]
    rows: List[List[Element]] = [[dict() for _ in src_verts] for _ in tgt_verts]
    for j, v in enumerate(src_verts):
        src_projs_before = [projective_module(alg, src_verts[t]) for t in range(j)]
        offset = sum(p.dims[v] for p in src_projs_before)
        # e_v is the first basis word of P_v at vertex v
        col_index = offset
        col = [f.mats[v][r][col_index] for r in range(f.target.dims[v])]
        pos = 0
        for i, w in enumerate(tgt_verts):
            pw = tgt_projs[i]
            for word in pw.word_basis[v]:
                c = col[pos]
                pos += 1
                if c:
                    rows[i][j][word] = rows[i][j].get(word, Q0) + c
    return rows


def replacement_of(x: ComplexOfModules, depth: int) -> Replacement:
    rep = getattr(x, "_rep", None)
    if rep is None:
        rep = Replacement(x)
        x._rep = rep
    rep.build_to(depth)
    return rep


# ---------------------------------------------------------------------------
# derived Hom via the Yoneda Hom complex

def _hom_blocks(rep: Replacement, y: ComplexOfModules, n: int, j_lo: int):
    """Coordinate blocks of Hom^n(R, y): (degree j, summand i, vertex, dim,
    offset), enumerated in a fixed order."""
    blocks = []
    off = 0
    for j in range(j_lo, rep.hi + 1):
        yterm = y.term(j + n)
        if yterm.total_dim == 0:
            continue
        for i, v in enumerate(rep.verts.get(j, [])):
            d = yterm.dims[v]
            if d:
                blocks.append((j, i, v, d, off))
                off += d
    return blocks, off


def _hom_differential(rep: Replacement, y: ComplexOfModules, n: int, j_lo: int):
    """Matrix of D^n: Hom^n -> Hom^(n+1), D(f) = d_y o f - (-1)^n f o d_R."""
    cols, ncols = _hom_blocks(rep, y, n, j_lo)
    rows, nrows = _hom_blocks(rep, y, n + 1, j_lo)
    row_pos = {(j, i): (off, d) for (j, i, v, d, off) in rows}
    mat = linalg.zeros(nrows, ncols)
    sgn = Q1 if n % 2 == 0 else -Q1
    for (j, i, v, d, off) in cols:
        # postcompose with d_y
        dy = y.diff(j + n)
        if not dy.is_zero() and (j, i) in row_pos:
            roff, rd = row_pos[(j, i)]
            block = dy.mats[v]
            for r in range(rd):
                for c in range(d):
                    mat[roff + r][c + off] += block[r][c]
        # precompose with d_R: f_(j) coordinates feed blocks at degree j-1
        fm = rep.formal.get(j - 1)
        if fm:
            yt = y.term(j + n)
            for i2 in range(len(rep.verts.get(j - 1, []))):
                if (j - 1, i2) not in row_pos:
                    continue
                el = fm[i][i2]
                if not el:
                    continue
                act = yt.element_action(el)
                roff, rd = row_pos[(j - 1, i2)]
                for r in range(rd):
                    for c in range(d):
                        mat[roff + r][off + c] -= sgn * act[r][c]
    return mat, ncols, nrows


def hom_table(x: ComplexOfModules, y: ComplexOfModules, n_lo: int, n_hi: int, *, extra_depth: int = 0) -> Dict[int, int]:
    """dim Hom_D(x, y[n]) for n in [n_lo, n_hi], computed in one pass.

    The projective truncation goes to (lowest degree of y) - n_hi - 2, one
    degree beyond what exactness requires; `extra_depth` pushes it further
    (the answer must not change -- exercised by tests).
    """
    if n_lo > n_hi:
        raise PreconditionError("empty degree range")
    out = {n: 0 for n in range(n_lo, n_hi + 1)}
    if x.is_zero_complex() or y.is_zero_complex():
        return out
    depth = y.lo_term() - n_hi - 2 - extra_depth
    rep = replacement_of(x, depth)
    j_lo = depth
    dims: Dict[int, int] = {}
    ranks: Dict[int, int] = {}
    for n in range(n_lo - 1, n_hi + 1):
        mat, ncols, _ = _hom_differential(rep, y, n, j_lo)
        dims[n] = ncols
        ranks[n] = linalg.rank(mat, ncols)
    for n in range(n_lo, n_hi + 1):
        out[n] = dims[n] - ranks[n] - ranks[n - 1]
        if out[n] < 0:
            raise InternalError("negative cohomology dimension in Hom complex")
    return out


def hom_db(x: ComplexOfModules, y: ComplexOfModules, n: int = 0) -> int:
    """dim Hom_D(x, y[n]), with a per-pair cache on x."""
    cache = getattr(x, "_hom_cache", None)
    if cache is None:
        cache = x._hom_cache = {}
    key = id(y)
    entry = cache.get(key)
    if entry is not None and n in entry[1]:
        return entry[1][n]
    table = hom_table(x, y, n, n)
    if entry is None:
        cache[key] = (y, dict(table))
    else:
        entry[1].update(table)
    return table[n]


def representing_chain_maps(x: ComplexOfModules, y: ComplexOfModules, n: int = 0,
                            depth: Optional[int] = None) -> Tuple[ComplexOfModules, List[ChainMap]]:
    """(R, maps): a realized projective replacement of x and chain maps
    R -> y[n] whose classes form a basis of Hom_D(x, y[n]).

    `depth` may push the replacement lower than Hom-exactness needs (callers
    that go on to cone and truncate want the extra margin); blocks below the
    default floor see only zero terms of y, so the answer is unchanged.
    """
    if x.is_zero_complex() or y.is_zero_complex():
        raise PreconditionError("representing maps need nonzero objects")
    default = y.lo_term() - n - 2
    depth = default if depth is None else min(depth, default)
    rep = replacement_of(x, depth)
    j_lo = depth
    mat_n, ncols, _ = _hom_differential(rep, y, n, j_lo)
    cocycles = linalg.nullspace(mat_n, ncols)
    # columns of D^(n-1) span the coboundaries inside Hom^n
    mat_prev, nprev, _ = _hom_differential(rep, y, n - 1, j_lo)
    img: List[List[Fraction]] = []
    for j in range(nprev):
        col = [mat_prev[r][j] for r in range(len(mat_prev))]
        if any(col):
            img.append(col)
    picked: List[List[Fraction]] = []
    space = [list(r) for r in img]
    cur = linalg.rank(space, ncols)
    for vec in cocycles:
        trial = space + [list(vec)]
        r2 = linalg.rank(trial, ncols)
        if r2 > cur:
            picked.append(list(vec))
            space = trial
            cur = r2
    rcx = rep.as_complex(depth)
    target = y.shift(n)
    blocks, _ = _hom_blocks(rep, y, n, j_lo)
    maps = [_realize_cocycle(rep, y, n, blocks, vec, rcx, target) for vec in picked]
    return rcx, maps


def _realize_cocycle(rep, y, n, blocks, vec, rcx, target) -> ChainMap:
    comps: Dict[int, ModuleMap] = {}
    by_degree: Dict[int, List[Tuple[int, object, List[Fraction]]]] = {}
    for (j, i, v, d, off) in blocks:
        by_degree.setdefault(j, []).append((i, v, vec[off: off + d]))
    for j, entries in by_degree.items():
        src = rep.term(j)
        tgt = y.term(j + n)
        mats = {t: linalg.zeros(tgt.dims[t], src.dims[t]) for t in rep.alg.vertices}
        summand_projs = [projective_module(rep.alg, w) for w in rep.verts[j]]
        for (i, v, mvec) in entries:
            if not any(mvec):
                continue
            pw = summand_projs[i]
            for t in rep.alg.vertices:
                col_off = sum(p.dims[t] for p in summand_projs[:i])
                for widx, word in enumerate(pw.word_basis[t]):
                    act = tgt.path_action(word)
                    for r in range(tgt.dims[t]):
                        val = sum(act[r][s] * mvec[s] for s in range(tgt.dims[v]))
                        if val:
                            mats[t][r][col_off + widx] += val
        comps[j] = ModuleMap(src, target.term(j), mats, check=False)
    return ChainMap(rcx, target, comps, check=False)


# ---------------------------------------------------------------------------
# chain-map spaces and isomorphism testing

def chain_map_space(x: ComplexOfModules, y: ComplexOfModules) -> List[ChainMap]:
    """Basis of degreewise maps commuting with arrows and differentials."""
    alg = x.alg
    degs = sorted(set(x.terms) | set(y.terms))
    offsets: Dict[Tuple[int, object], int] = {}
    total = 0
    for k in degs:
        for v in alg.vertices:
            offsets[(k, v)] = total
            total += y.term(k).dims[v] * x.term(k).dims[v]
    rows: List[List[Fraction]] = []

    def var(k, v, i, j):
        return offsets[(k, v)] + i * x.term(k).dims[v] + j

    for k in degs:
        xt, yt = x.term(k), y.term(k)
        for ar in alg.arrows:
            u, w = ar.source, ar.target
            A, B = xt.mat(ar.name), yt.mat(ar.name)
            for i in range(yt.dims[w]):
                for j in range(xt.dims[u]):
                    row = [Q0] * total
                    for t in range(xt.dims[w]):
                        row[var(k, w, i, t)] += A[t][j]
                    for s in range(yt.dims[u]):
                        row[var(k, u, s, j)] -= B[i][s]
                    if any(row):
                        rows.append(row)
        # chain squares: phi_(k+1) d_x = d_y phi_k
        dx, dy = x.diff(k), y.diff(k)
        if (k + 1) in degs:
            for v in alg.vertices:
                for i in range(y.term(k + 1).dims[v]):
                    for j in range(x.term(k).dims[v]):
                        row = [Q0] * total
                        for t in range(x.term(k + 1).dims[v]):
                            row[var(k + 1, v, i, t)] += dx.mats[v][t][j]
                        for s in range(y.term(k).dims[v]):
                            row[var(k, v, s, j)] -= dy.mats[v][i][s]
                        if any(row):
                            rows.append(row)
    basis = []
    for vec in linalg.nullspace(rows, total):
        comps = {}
        for k in degs:
            mats = {}
            for v in alg.vertices:
                m = linalg.zeros(y.term(k).dims[v], x.term(k).dims[v])
                for i in range(y.term(k).dims[v]):
                    for j in range(x.term(k).dims[v]):
                        m[i][j] = vec[var(k, v, i, j)]
                mats[v] = m
            comps[k] = ModuleMap(x.term(k), y.term(k), mats, check=False)
        basis.append(ChainMap(x, y, comps, check=False))
    return basis


def is_isomorphic_complexes(x: ComplexOfModules, y: ComplexOfModules, *, assume_minimal: bool = False) -> bool:
    """Exact-on-success isomorphism test: normalize both sides, then search
    the chain-map space for a degreewise invertible member."""
    if not assume_minimal:
        x = normal_form(x)
        y = normal_form(y)
    if x.is_zero_complex() or y.is_zero_complex():
        return x.is_zero_complex() and y.is_zero_complex()
    if x.support() != y.support():
        return False
    for k in x.support():
        if x.terms[k].dims != y.terms[k].dims:
            return False
    basis = chain_map_space(x, y)
    if not basis:
        return False
    rng = random.Random(4243)
    combos = [[1 if i == j else 0 for j in range(len(basis))] for i in range(len(basis))]
    combos += [[rng.randint(-9, 9) for _ in range(len(basis))] for _ in range(24)]
    if len(basis) <= 4:
        combos += [list(t) for t in itertools.product((-1, 0, 1, 2), repeat=len(basis))]
    for coef in combos:
        ok = True
        for k in x.support():
            for v in x.alg.vertices:
                if x.terms[k].dims[v] == 0:
                    continue
                acc = linalg.zeros(y.terms[k].dims[v], x.terms[k].dims[v])
                for c, b in zip(coef, basis):
                    if c:
                        acc = linalg.mat_add(acc, linalg.mat_scale(Fraction(c), b.component(k).mats[v]))
                if linalg.inverse(acc) is None:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            return True
    return False


# ---------------------------------------------------------------------------
# randomized complexes (for tests and verification suites)

def random_complex(alg: QuiverAlgebra, rng: random.Random, *, degrees=(-1, 0, 1), max_dim: int = 2, attempts: int = 200) -> ComplexOfModules:
    """Random bounded complex: random relation-satisfying terms and random
    differentials rejection-sampled against d^2 = 0.  May return stalks."""
    from .algebra import random_module

    for _ in range(attempts):
        terms = {}
        for k in degrees:
            if rng.random() < 0.55:
                try:
                    terms[k] = random_module(alg, rng, max_dim=max_dim, attempts=40)
                except BudgetError:
                    continue
        if not terms:
            continue
        diffs = {}
        ok = True
        for k in sorted(terms):
            if (k + 1) not in terms:
                continue
            basis = hom_module(terms[k], terms[k + 1])
            if not basis or rng.random() < 0.3:
                continue
            f = None
            for b in basis:
                c = rng.choice((-1, 0, 0, 1))
                if c:
                    sb = b.scale(Fraction(c))
                    f = sb if f is None else f.add(sb)
            if f is not None and not f.is_zero():
                diffs[k] = f
        for k in diffs:
            if (k + 1) in diffs and not diffs[k + 1].compose(diffs[k]).is_zero():
                ok = False
                break
        if not ok:
            continue
        return ComplexOfModules(alg, terms, diffs, check=False)
    raise BudgetError("could not sample a complex")


def has_no_negative_selfext(x: ComplexOfModules) -> bool:
    """True iff Hom_D(x, x[i]) = 0 for every i < 0.

    Only i in [a - b, -1] can be nonzero, where [a, b] are the cohomological
    bounds of x, so this is a finite scan.  Zero (or exact) objects pass
    vacuously.
    """
    if x.is_zero_complex():
        return True
    degs = [i for i in x.support() if not x.cohomology(i).is_zero()]
    if not degs:
        return True
    lo, hi = degs[0], degs[-1]
    if lo == hi:
        return True
    table = hom_table(x, x, lo - hi, -1)
    return all(v == 0 for v in table.values())
