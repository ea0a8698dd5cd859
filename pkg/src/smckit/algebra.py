"""Finite-dimensional path algebras with relations, their modules, and exact
Hom/cover/resolution machinery.

Composition is written left to right: ``p * q`` means "p then q", and a word
``(a, b)`` is the path that traverses ``a`` first.  A module is a
representation: one vector space per vertex and, for each arrow ``a: u -> w``,
a rational matrix of shape (dim at w) x (dim at u) acting on column vectors.
With these conventions ``Hom(P_i, M)`` is naturally ``M_i``.

The basis of an algebra is a set of "standard words" found by degreewise
saturation: at each length, candidate words (standard word + arrow) are reduced
against the span of (standard word) * (relation); pivots become reduction
rules, non-pivots become new standard words.  Saturation stops once no new
words appear and every pending relation product has been imposed; a configured
cap on the basis size guards against infinite-dimensional input.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from . import linalg
from .dynkin import DynkinDiagram
from .errors import BudgetError, InternalError, PreconditionError
from .linalg import Mat, Q0, Q1

# a word is (source_vertex, tuple_of_arrow_indices); an element is
# {word: Fraction}
Word = Tuple[object, Tuple[int, ...]]
Element = Dict[Word, Fraction]

MAX_BASIS = 10000
MAX_STAGE_CANDIDATES = 200000


class Arrow:
    def __init__(self, name: str, source, target):
        self.name = name
        self.source = source
        self.target = target

    def __repr__(self) -> str:
        return f"{self.name}: {self.source} -> {self.target}"


class QuiverAlgebra:
    """kQ / (relations), with a computed standard-word basis."""

    def __init__(
        self,
        vertices: Sequence,
        arrows: Sequence[Tuple[str, object, object]],
        relations: Sequence[Sequence[Tuple[object, Sequence[str]]]],
        *,
        max_basis: int = MAX_BASIS,
    ):
        self.vertices = list(vertices)
        if len(set(self.vertices)) != len(self.vertices):
            raise PreconditionError("repeated vertex label")
        self.arrows: List[Arrow] = []
        self.arrow_index: Dict[str, int] = {}
        vset = set(self.vertices)
        for (name, src, tgt) in arrows:
            if name in self.arrow_index:
                raise PreconditionError(f"repeated arrow name {name!r}")
            if src not in vset or tgt not in vset:
                raise PreconditionError(f"arrow {name!r} endpoint not a vertex")
            self.arrow_index[name] = len(self.arrows)
            self.arrows.append(Arrow(name, src, tgt))
        self.relations: List[Element] = [self._intern_relation(r) for r in relations]
        self._max_basis = max_basis
        self._saturate()

    # -- word plumbing --

    def word_source(self, w: Word):
        return w[0]

    def word_target(self, w: Word):
        return w[0] if not w[1] else self.arrows[w[1][-1]].target

    def word_str(self, w: Word) -> str:
        if not w[1]:
            return f"e_{w[0]}"
        return "".join(self.arrows[i].name for i in w[1])

    def idempotent_word(self, v) -> Word:
        return (v, ())

    def _intern_relation(self, terms) -> Element:
        el: Element = {}
        src = tgt = None
        for (coef, names) in terms:
            c = Fraction(coef)
            if not names or len(names) < 2:
                raise PreconditionError("relation paths must have length >= 2")
            idxs = []
            for nm in names:
                if nm not in self.arrow_index:
                    raise PreconditionError(f"unknown arrow {nm!r} in relation")
                idxs.append(self.arrow_index[nm])
            for i, j in zip(idxs, idxs[1:]):
                if self.arrows[i].target != self.arrows[j].source:
                    raise PreconditionError("relation path is not composable")
            w: Word = (self.arrows[idxs[0]].source, tuple(idxs))
            if src is None:
                src, tgt = self.word_source(w), self.word_target(w)
            elif (self.word_source(w), self.word_target(w)) != (src, tgt):
                raise PreconditionError("relation terms are not parallel")
            el[w] = el.get(w, Q0) + c
        return {w: c for w, c in el.items() if c}

    # -- saturation --

    def _saturate(self) -> None:
        rels = [dict(r) for r in self.relations if r]
        for _restart in range(64):
            derived = self._saturate_once(rels)
            if derived is None:
                return
            rels.append(derived)
        raise BudgetError("algebra saturation restarted too many times")

    def _saturate_once(self, rels: List[Element]) -> Optional[Element]:
        """One saturation pass.  Returns a newly-discovered relation (a combo
        of standard words found to lie in the ideal) if the pass must restart,
        else None on success, populating basis and reduction tables."""
        std_by_deg: List[List[Word]] = [[(v, ()) for v in self.vertices]]
        red: Dict[Tuple[Word, int], Element] = {}
        maxreldeg = max((max(len(w[1]) for w in r) for r in rels), default=2)

        def append_arrow(vec: Element, a: int, stage: int) -> Tuple[Element, Element]:
            """Split vec * arrow into (reduced std part, candidate part at `stage`)."""
            std_part: Element = {}
            cand_part: Element = {}
            for w, c in vec.items():
                if self.word_target(w) != self.arrows[a].source:
                    continue
                if len(w[1]) + 1 == stage:
                    key: Word = (w[0], w[1] + (a,))
                    cand_part[key] = cand_part.get(key, Q0) + c
                else:
                    for w2, c2 in red[(w, a)].items():
                        std_part[w2] = std_part.get(w2, Q0) + c * c2
            return (
                {w: c for w, c in std_part.items() if c},
                {w: c for w, c in cand_part.items() if c},
            )

        stage = 0
        while True:
            stage += 1
            prev = std_by_deg[stage - 1] if stage - 1 < len(std_by_deg) else []
            candidates: List[Word] = []
            cand_index: Dict[Word, int] = {}
            for s in prev:
                for a in range(len(self.arrows)):
                    if self.word_target(s) == self.arrows[a].source:
                        w: Word = (s[0], s[1] + (a,))
                        cand_index[w] = len(candidates)
                        candidates.append(w)
            if len(candidates) > MAX_STAGE_CANDIDATES:
                raise BudgetError("path space too large during saturation")

            # impose s * r for every relation r and standard word s with
            # len(s) + maxdeg(r) == stage
            lower_words = [w for deg in std_by_deg for w in deg]
            lower_index = {w: i for i, w in enumerate(lower_words)}
            rows: List[List[Fraction]] = []
            ncand = len(candidates)
            width = ncand + len(lower_words)
            for r in rels:
                m = max(len(w[1]) for w in r)
                sdeg = stage - m
                if sdeg < 0 or sdeg >= len(std_by_deg):
                    continue
                for s in std_by_deg[sdeg]:
                    rsrc = self.word_source(next(iter(r)))
                    if self.word_target(s) != rsrc:
                        continue
                    acc_std: Element = {}
                    acc_cand: Element = {}
                    for w, c in r.items():
                        vec: Element = {s: c}
                        cpart: Element = {}
                        for a in w[1]:
                            merged = dict(vec)
                            for k, v in cpart.items():
                                merged[k] = merged.get(k, Q0) + v
                            vec, cpart = append_arrow(merged, a, stage)
                        for k, v in vec.items():
                            acc_std[k] = acc_std.get(k, Q0) + v
                        for k, v in cpart.items():
                            acc_cand[k] = acc_cand.get(k, Q0) + v
                    row = [Q0] * width
                    nonzero = False
                    for k, v in acc_cand.items():
                        if v:
                            row[cand_index[k]] = v
                            nonzero = True
                    for k, v in acc_std.items():
                        if v:
                            row[ncand + lower_index[k]] = v
                            nonzero = True
                    if nonzero:
                        rows.append(row)

            rr, pivots = linalg.rref(rows, width)
            # rows whose pivot is a lower word: the ideal meets the supposed
            # basis below this degree; restart with the new relation
            for i, p in enumerate(pivots):
                if p >= ncand:
                    el: Element = {}
                    for j in range(ncand, width):
                        if rr[i][j]:
                            el[lower_words[j - ncand]] = rr[i][j]
                    if any(len(w[1]) == 0 for w in el):
                        raise InternalError(
                            "saturation found an idempotent combination in the ideal"
                        )
                    return el

            pivot_set = set(pivots)
            new_std = [w for i, w in enumerate(candidates) if i not in pivot_set]
            std_by_deg.append(new_std)
            total = sum(len(d) for d in std_by_deg)
            if total > self._max_basis:
                raise BudgetError(
                    f"basis exceeded cap ({self._max_basis}); algebra may be infinite-dimensional"
                )
            # reduction rules for pivot candidates
            for i, p in enumerate(pivots):
                w = candidates[p]
                el = {}
                for j in range(ncand):
                    if j != p and rr[i][j]:
                        el[candidates[j]] = -rr[i][j]
                for j in range(ncand, width):
                    if rr[i][j]:
                        el[lower_words[j - ncand]] = -rr[i][j]
                s, a = (w[0], w[1][:-1]), w[1][-1]
                red[(s, a)] = el
            for w in new_std:
                s, a = (w[0], w[1][:-1]), w[1][-1]
                red[(s, a)] = {w: Q1}

            max_std_len = max(i for i, d in enumerate(std_by_deg) if d)
            if not new_std and stage >= max_std_len + maxreldeg:
                break

        self.basis: List[Word] = [w for deg in std_by_deg for w in deg]
        self.basis_index: Dict[Word, int] = {w: i for i, w in enumerate(self.basis)}
        self._red = red
        self.dim = len(self.basis)

    # -- arithmetic on elements (dicts of standard words) --

    def idempotent(self, v) -> Element:
        return {(v, ()): Q1}

    def element_from_word(self, w: Word) -> Element:
        return {w: Q1}

    def append_reduce(self, vec: Element, a: int) -> Element:
        out: Element = {}
        for w, c in vec.items():
            if self.word_target(w) != self.arrows[a].source:
                continue
            rule = self._red.get((w, a))
            if rule is None:
                # beyond the deepest populated stage: the product is zero
                continue
            for w2, c2 in rule.items():
                out[w2] = out.get(w2, Q0) + c * c2
        return {w: c for w, c in out.items() if c}

    def multiply(self, x: Element, y: Element) -> Element:
        out: Element = {}
        for wy, cy in y.items():
            part: Element = {w: c * cy for w, c in x.items() if self.word_target(w) == wy[0]}
            for a in wy[1]:
                part = self.append_reduce(part, a)
                if not part:
                    break
            for w, c in part.items():
                out[w] = out.get(w, Q0) + c
        return {w: c for w, c in out.items() if c}

    def basis_words_from(self, v) -> List[Word]:
        return [w for w in self.basis if w[0] == v]

    def __repr__(self) -> str:
        return f"QuiverAlgebra(dim={self.dim}, vertices={self.vertices})"


# ---------------------------------------------------------------------------
# standard constructions

_EDGE_LETTERS = "abcdefghijklmn"


def preprojective_algebra(diagram: DynkinDiagram) -> QuiverAlgebra:
    """The preprojective algebra of an ADE diagram: doubled quiver, and at each
    vertex the signed sum of out-loops equals zero."""
    edges = diagram.edges
    if len(edges) > len(_EDGE_LETTERS):
        raise PreconditionError("diagram too large for edge naming")
    arrows: List[Tuple[str, object, object]] = []
    for k, (u, v) in enumerate(edges):
        letter = _EDGE_LETTERS[k]
        arrows.append((letter, u, v))
        arrows.append((letter + "*", v, u))
    relations = []
    for v in diagram.vertices:
        terms: List[Tuple[object, Sequence[str]]] = []
        for k, (s, t) in enumerate(edges):
            letter = _EDGE_LETTERS[k]
            if s == v:
                terms.append((1, [letter, letter + "*"]))
            if t == v:
                terms.append((-1, [letter + "*", letter]))
        if terms:
            relations.append(terms)
    return QuiverAlgebra(diagram.vertices, arrows, relations)


def corner_algebra(alg: QuiverAlgebra, deleted: Sequence) -> QuiverAlgebra:
    """e A e for e = sum of idempotents away from `deleted`, presented on its
    own quiver.  The presentation is rebuilt from the corner's multiplication
    and certified by a dimension match."""
    dset = set(deleted)
    if not dset:
        return alg
    if not dset.issubset(set(alg.vertices)):
        raise PreconditionError("deleted vertices not a subset")
    kept = [v for v in alg.vertices if v not in dset]
    if not kept:
        raise PreconditionError("cannot delete every vertex")

    corner_words = [
        w
        for w in alg.basis
        if alg.word_source(w) in kept and alg.word_target(w) in kept
    ]
    cdim = len(corner_words)
    word_pos = {w: i for i, w in enumerate(corner_words)}
    rad_words = [w for w in corner_words if w[1]]

    # rad^2 of the corner = span of pairwise products of radical words
    rad_index = {w: i for i, w in enumerate(rad_words)}
    sq_rows: List[List[Fraction]] = []
    for w1 in rad_words:
        for w2 in rad_words:
            if alg.word_target(w1) != alg.word_source(w2):
                continue
            prod = alg.multiply({w1: Q1}, {w2: Q1})
            if prod:
                row = [Q0] * len(rad_words)
                for w, c in prod.items():
                    row[rad_index[w]] = c
                sq_rows.append(row)
    _, sq_pivots = linalg.rref(sq_rows, len(rad_words))
    # generator words: radical words independent modulo rad^2: stack rad^2 rows
    # first, then candidate unit rows, and keep candidates that add new pivots
    gens: List[Word] = []
    rows = [r for r in sq_rows]
    cur_rank = len(sq_pivots)
    for w in rad_words:
        row = [Q0] * len(rad_words)
        row[rad_index[w]] = Q1
        test = rows + [row]
        r = linalg.rank(test, len(rad_words))
        if r > cur_rank:
            gens.append(w)
            rows = test
            cur_rank = r

    names: List[str] = []
    used = set()
    for w in gens:
        nm = "".join(alg.arrows[i].name for i in w[1])
        if nm in used:
            k = 0
            while f"g{k}" in used:
                k += 1
            nm = f"g{k}"
        used.add(nm)
        names.append(nm)
    gen_arrows = [
        (names[i], alg.word_source(w), alg.word_target(w)) for i, w in enumerate(gens)
    ]

    max_len = max((len(w[1]) for w in corner_words), default=0)
    for extra in (2, 4, 6):
        degree_cap = max_len + extra
        rels = _corner_relations(alg, kept, corner_words, word_pos, gens, names, degree_cap)
        rebuilt = QuiverAlgebra(kept, gen_arrows, rels)
        if rebuilt.dim == cdim:
            rebuilt.corner_parent_words = {
                names[i]: alg.word_str(w) for i, w in enumerate(gens)
            }
            return rebuilt
    raise InternalError(
        f"corner presentation mismatch: corner dim {cdim}, rebuilt dim {rebuilt.dim}"
    )


def _corner_relations(alg, kept, corner_words, word_pos, gens, names, degree_cap):
    """Kernel elements of the presentation map kQ' -> corner, degree by degree."""
    cdim = len(corner_words)
    rels: List[List[Tuple[Fraction, List[str]]]] = []
    # paths of the generator quiver as (list of gen indices)
    paths: List[List[int]] = [[i] for i in range(len(gens))]
    images: Dict[Tuple[int, ...], Element] = {
        (i,): {gens[i]: Q1} for i in range(len(gens))
    }
    for degree in range(2, degree_cap + 1):
        new_paths: List[List[int]] = []
        for pth in paths:
            last = gens[pth[-1]]
            for i, g in enumerate(gens):
                if alg.word_target(last) == alg.word_source(g):
                    np = pth + [i]
                    new_paths.append(np)
                    images[tuple(np)] = alg.multiply(images[tuple(pth)], {g: Q1})
        if len(new_paths) > MAX_STAGE_CANDIDATES:
            raise BudgetError("corner path enumeration too large")
        # kernel among {paths of length <= degree} per (src, tgt) block
        all_paths = [t for t in images if len(t) <= degree]
        by_block: Dict[Tuple[object, object], List[Tuple[int, ...]]] = {}
        for t in all_paths:
            s = alg.word_source(gens[t[0]])
            e = alg.word_target(gens[t[-1]])
            by_block.setdefault((s, e), []).append(t)
        for block, ts in by_block.items():
            if not any(len(t) == degree for t in ts):
                continue
            mat = []
            for t in ts:
                row = [Q0] * cdim
                for w, c in images[t].items():
                    row[word_pos[w]] = c
                mat.append(row)
            for v in linalg.nullspace(linalg.transpose(mat, cdim), len(ts)):
                if not any(c for t, c in zip(ts, v) if len(t) == degree):
                    continue  # consequence of lower degree, already recorded
                terms = [
                    (c, [names[i] for i in t]) for t, c in zip(ts, v) if c
                ]
                if terms and all(len(t) >= 2 for t, c in zip(ts, v) if c):
                    rels.append(terms)
        paths = new_paths
        if not paths or all(not images[tuple(q)] for q in paths):
            # every longer path factors through one that already maps to zero
            break
    return rels


# ---------------------------------------------------------------------------
# modules

class Module:
    """A representation: dims per vertex, one matrix per arrow
    (source coordinates -> target coordinates)."""

    def __init__(self, alg: QuiverAlgebra, dims: Dict, mats: Dict[str, Mat], *, check: bool = True):
        self.alg = alg
        self.dims = {v: int(dims.get(v, 0)) for v in alg.vertices}
        self.mats: Dict[str, Mat] = {}
        for ar in alg.arrows:
            m = mats.get(ar.name)
            rows, cols = self.dims[ar.target], self.dims[ar.source]
            if m is None:
                m = linalg.zeros(rows, cols)
            else:
                m = [[Fraction(x) for x in row] for row in m]
                if len(m) != rows or (m and len(m[0]) != cols):
                    raise PreconditionError(
                        f"arrow {ar.name!r} matrix has shape {len(m)}x{len(m[0]) if m else 0}, expected {rows}x{cols}"
                    )
            self.mats[ar.name] = m
        if check:
            bad = self._relation_defect()
            if bad is not None:
                raise PreconditionError(f"module violates relation #{bad}")

    def _relation_defect(self) -> Optional[int]:
        for k, rel in enumerate(self.alg.relations):
            acc = None
            for w, c in rel.items():
                m = linalg.mat_scale(c, self.path_action(w))
                acc = m if acc is None else linalg.mat_add(acc, m)
            if acc is not None and not linalg.is_zero(acc):
                return k
        return None

    def mat(self, arrow_name: str) -> Mat:
        return self.mats[arrow_name]

    def path_action(self, w: Word) -> Mat:
        src = self.alg.word_source(w)
        cur = linalg.identity(self.dims[src])
        pos = src
        for a in w[1]:
            ar = self.alg.arrows[a]
            if self.dims[pos] == 0 or self.dims[ar.target] == 0:
                # path passes through a zero coordinate space: the action is
                # zero, and the empty product would lose the column count
                tgt = self.alg.word_target(w)
                return linalg.zeros(self.dims[tgt], self.dims[src])
            cur = linalg.mat_mul(self.mat(ar.name), cur, inner=self.dims[pos])
            pos = ar.target
        return cur

    def element_action(self, el: Element) -> Mat:
        """Action of a uniform element (all words parallel)."""
        words = list(el)
        src = self.alg.word_source(words[0])
        tgt = self.alg.word_target(words[0])
        acc = linalg.zeros(self.dims[tgt], self.dims[src])
        for w, c in el.items():
            acc = linalg.mat_add(acc, linalg.mat_scale(c, self.path_action(w)))
        return acc

    @property
    def total_dim(self) -> int:
        return sum(self.dims.values())

    def is_zero(self) -> bool:
        return self.total_dim == 0

    def dim_vector(self) -> Tuple[int, ...]:
        return tuple(self.dims[v] for v in self.alg.vertices)

    def __repr__(self) -> str:
        return f"Module{self.dim_vector()}"


class ModuleMap:
    """A homomorphism of representations: one matrix per vertex."""

    def __init__(self, source: Module, target: Module, mats: Dict, *, check: bool = True):
        self.source = source
        self.target = target
        self.mats = {}
        for v in source.alg.vertices:
            m = mats.get(v)
            rows, cols = target.dims[v], source.dims[v]
            if m is None:
                m = linalg.zeros(rows, cols)
            elif check:
                # user-facing path: coerce entries; internal callers (compose,
                # cones, eliminations) already hold exact Fraction matrices
                m = [[Fraction(x) for x in row] for row in m]
            if len(m) != rows or (m and len(m[0]) != cols):
                raise PreconditionError(f"map matrix at vertex {v} has wrong shape")
            self.mats[v] = m
        if check and not self.commutes():
            raise PreconditionError("matrices do not commute with the arrow actions")

    def commutes(self) -> bool:
        for ar in self.source.alg.arrows:
            rows = self.target.dims[ar.target]
            cols = self.source.dims[ar.source]
            if rows == 0 or cols == 0:
                continue
            # inner dimensions differ per side; a zero inner space makes the
            # side the zero map (mat_mul cannot recover the shape there)
            k_l = self.source.dims[ar.target]
            lhs = (linalg.mat_mul(self.mats[ar.target], self.source.mat(ar.name), inner=k_l)
                   if k_l else linalg.zeros(rows, cols))
            k_r = self.target.dims[ar.source]
            rhs = (linalg.mat_mul(self.target.mat(ar.name), self.mats[ar.source], inner=k_r)
                   if k_r else linalg.zeros(rows, cols))
            if lhs != rhs:
                return False
        return True

    def is_zero(self) -> bool:
        return all(linalg.is_zero(m) for m in self.mats.values())

    def compose(self, first: "ModuleMap") -> "ModuleMap":
        """self o first."""
        if first.target is not self.source and first.target.dims != self.source.dims:
            raise PreconditionError("composition mismatch")
        mats = {}
        for v in self.source.alg.vertices:
            if self.source.dims[v] == 0:
                # composite through a zero space (mat_mul cannot recover n here)
                mats[v] = linalg.zeros(self.target.dims[v], first.source.dims[v])
            else:
                mats[v] = linalg.mat_mul(self.mats[v], first.mats[v], inner=self.source.dims[v])
        return ModuleMap(first.source, self.target, mats, check=False)

    def add(self, other: "ModuleMap") -> "ModuleMap":
        mats = {v: linalg.mat_add(self.mats[v], other.mats[v]) for v in self.mats}
        return ModuleMap(self.source, self.target, mats, check=False)

    def scale(self, c) -> "ModuleMap":
        c = Fraction(c)
        mats = {v: linalg.mat_scale(c, self.mats[v]) for v in self.mats}
        return ModuleMap(self.source, self.target, mats, check=False)

    def neg(self) -> "ModuleMap":
        return self.scale(-1)

    def total_rank(self) -> int:
        return sum(linalg.rank(self.mats[v], self.source.dims[v]) for v in self.mats)

    def __repr__(self) -> str:
        return f"ModuleMap({self.source!r} -> {self.target!r})"


def zero_module(alg: QuiverAlgebra) -> Module:
    return Module(alg, {}, {}, check=False)


def zero_map(source: Module, target: Module) -> ModuleMap:
    return ModuleMap(source, target, {}, check=False)


def identity_map(m: Module) -> ModuleMap:
    return ModuleMap(m, m, {v: linalg.identity(m.dims[v]) for v in m.dims}, check=False)


def simple_module(alg: QuiverAlgebra, v) -> Module:
    if v not in alg.vertices:
        raise PreconditionError(f"no vertex {v!r}")
    return Module(alg, {v: 1}, {}, check=False)


def projective_module(alg: QuiverAlgebra, v) -> Module:
    """P_v: basis = standard words starting at v; arrows act by appending.
    Instances are cached on the algebra (they are treated as immutable)."""
    cache = getattr(alg, "_proj_cache", None)
    if cache is None:
        cache = alg._proj_cache = {}
    if v in cache:
        return cache[v]
    words = alg.basis_words_from(v)
    by_vertex: Dict[object, List[Word]] = {u: [] for u in alg.vertices}
    for w in words:
        by_vertex[alg.word_target(w)].append(w)
    pos = {w: i for u in alg.vertices for i, w in enumerate(by_vertex[u])}
    dims = {u: len(by_vertex[u]) for u in alg.vertices}
    mats: Dict[str, Mat] = {}
    for a, ar in enumerate(alg.arrows):
        m = linalg.zeros(dims[ar.target], dims[ar.source])
        for w in by_vertex[ar.source]:
            for w2, c in alg.append_reduce({w: Q1}, a).items():
                m[pos[w2]][pos[w]] = c
        mats[ar.name] = m
    mod = Module(alg, dims, mats, check=False)
    mod.projective_vertex = v
    mod.word_basis = by_vertex
    cache[v] = mod
    return mod


def direct_sum(mods: Sequence[Module]) -> Tuple[Module, List[ModuleMap], List[ModuleMap]]:
    """(sum, injections, projections); the empty sum is the zero module."""
    if not mods:
        raise PreconditionError("direct_sum of nothing; use zero_module")
    alg = mods[0].alg
    dims = {v: sum(m.dims[v] for m in mods) for v in alg.vertices}
    mats = {
        ar.name: linalg.block_diag(
            [(m.mat(ar.name), m.dims[ar.target], m.dims[ar.source]) for m in mods]
        )
        for ar in alg.arrows
    }
    total = Module(alg, dims, mats, check=False)
    injs, projs = [], []
    for i, m in enumerate(mods):
        inj_mats, proj_mats = {}, {}
        for v in alg.vertices:
            off = sum(mm.dims[v] for mm in mods[:i])
            inj = linalg.zeros(dims[v], m.dims[v])
            prj = linalg.zeros(m.dims[v], dims[v])
            for r in range(m.dims[v]):
                inj[off + r][r] = Q1
                prj[r][off + r] = Q1
            inj_mats[v] = inj
            proj_mats[v] = prj
        injs.append(ModuleMap(m, total, inj_mats, check=False))
        projs.append(ModuleMap(total, m, proj_mats, check=False))
    return total, injs, projs


def hom_module(m: Module, n: Module) -> List[ModuleMap]:
    """Basis of Hom(m, n) by solving the commuting-square system exactly."""
    alg = m.alg
    offsets: Dict[object, int] = {}
    total = 0
    for v in alg.vertices:
        offsets[v] = total
        total += n.dims[v] * m.dims[v]
    rows: List[List[Fraction]] = []
    for ar in alg.arrows:
        u, w = ar.source, ar.target
        A, B = m.mat(ar.name), n.mat(ar.name)
        # phi_w A - B phi_u = 0 ; equations indexed by (i < n.dims[w], j < m.dims[u])
        for i in range(n.dims[w]):
            for j in range(m.dims[u]):
                row = [Q0] * total
                for t in range(m.dims[w]):
                    row[offsets[w] + i * m.dims[w] + t] += A[t][j]
                for s in range(n.dims[u]):
                    row[offsets[u] + s * m.dims[u] + j] -= B[i][s]
                rows.append(row)
    basis = []
    for vec in linalg.nullspace(rows, total):
        mats = {}
        for v in alg.vertices:
            mm = linalg.zeros(n.dims[v], m.dims[v])
            for i in range(n.dims[v]):
                for j in range(m.dims[v]):
                    mm[i][j] = vec[offsets[v] + i * m.dims[v] + j]
            mats[v] = mm
        basis.append(ModuleMap(m, n, mats, check=False))
    return basis


def hom_dim(m: Module, n: Module) -> int:
    return len(hom_module(m, n))


def kernel_module(f: ModuleMap) -> Tuple[Module, ModuleMap]:
    """(K, inclusion) with K_v = ker f_v and induced arrow actions."""
    alg = f.source.alg
    basis = {v: linalg.nullspace(f.mats[v], f.source.dims[v]) for v in alg.vertices}
    dims = {v: len(basis[v]) for v in alg.vertices}
    incl = {
        v: transpose_cols(basis[v], f.source.dims[v]) for v in alg.vertices
    }
    mats: Dict[str, Mat] = {}
    for ar in alg.arrows:
        u, w = ar.source, ar.target
        img = linalg.mat_mul(f.source.mat(ar.name), incl[u], inner=f.source.dims[u])
        m = linalg.zeros(dims[w], dims[u])
        for j in range(dims[u]):
            col = [img[i][j] for i in range(f.source.dims[w])]
            sol = linalg.solve(incl[w], col, dims[w])
            if sol is None:
                raise InternalError("kernel is not arrow-closed")
            for i in range(dims[w]):
                m[i][j] = sol[i]
        mats[ar.name] = m
    k = Module(alg, dims, mats, check=False)
    return k, ModuleMap(k, f.source, incl, check=False)


def cokernel_module(f: ModuleMap) -> Tuple[Module, ModuleMap, Dict]:
    """(Q, projection, section) with Q_v = target_v / im f_v.  The section is a
    raw per-vertex matrix dict (a vector-space splitting of the projection; it
    is generally not a module map)."""
    alg = f.target.alg
    n = f.target
    proj_mats: Dict[object, Mat] = {}
    sect_mats: Dict[object, Mat] = {}
    dims: Dict[object, int] = {}
    for v in alg.vertices:
        cols = [
            [f.mats[v][i][j] for i in range(n.dims[v])]
            for j in range(f.source.dims[v])
        ]
        space = [list(c) for c in cols]
        chosen: List[int] = []
        r = linalg.rank(transpose_cols(space, n.dims[v]) if space else [], len(space))
        for e in range(n.dims[v]):
            ev = [Q1 if i == e else Q0 for i in range(n.dims[v])]
            test = space + [ev]
            r2 = linalg.rank(transpose_cols(test, n.dims[v]), len(test))
            if r2 > r:
                chosen.append(e)
                space = test
                r = r2
        dims[v] = len(chosen)
        # T = [im basis | chosen std vectors]; projection = last rows of T^-1
        tmat = transpose_cols(
            cols + [[Q1 if i == e else Q0 for i in range(n.dims[v])] for e in chosen],
            n.dims[v],
        )
        pivots = linalg.column_space_pivots(tmat, len(cols) + len(chosen))
        keep = [
            j for j in pivots if j < len(cols)
        ] + [len(cols) + t for t in range(len(chosen))]
        square = [[tmat[i][j] for j in keep] for i in range(n.dims[v])]
        inv = linalg.inverse(square)
        if inv is None:
            raise InternalError("cokernel basis is singular")
        proj_mats[v] = inv[len(keep) - len(chosen):]
        sect_mats[v] = transpose_cols(
            [[Q1 if i == e else Q0 for i in range(n.dims[v])] for e in chosen],
            n.dims[v],
        )
    mats: Dict[str, Mat] = {}
    for ar in alg.arrows:
        u, w = ar.source, ar.target
        mats[ar.name] = linalg.mat_mul(
            proj_mats[w],
            linalg.mat_mul(n.mat(ar.name), sect_mats[u], inner=n.dims[u]),
            inner=n.dims[w],
        )
    q = Module(alg, dims, mats, check=False)
    return q, ModuleMap(n, q, proj_mats, check=False), sect_mats


def image_module(f: ModuleMap) -> Tuple[Module, ModuleMap]:
    """(I, inclusion into f.target) spanned by the columns of f."""
    alg = f.target.alg
    incl: Dict[object, Mat] = {}
    dims: Dict[object, int] = {}
    for v in alg.vertices:
        cols = [
            [f.mats[v][i][j] for i in range(f.target.dims[v])]
            for j in range(f.source.dims[v])
        ]
        mat = transpose_cols(cols, f.target.dims[v])
        pivots = linalg.column_space_pivots(mat, len(cols))
        incl[v] = [[mat[i][j] for j in pivots] for i in range(f.target.dims[v])]
        dims[v] = len(pivots)
    mats: Dict[str, Mat] = {}
    for ar in alg.arrows:
        u, w = ar.source, ar.target
        pushed = linalg.mat_mul(f.target.mat(ar.name), incl[u], inner=f.target.dims[u])
        m = linalg.zeros(dims[w], dims[u])
        for j in range(dims[u]):
            col = [pushed[i][j] for i in range(f.target.dims[w])]
            sol = linalg.solve(incl[w], col, dims[w])
            if sol is None:
                raise InternalError("image is not arrow-closed")
            for i in range(dims[w]):
                m[i][j] = sol[i]
        mats[ar.name] = m
    mod = Module(alg, dims, mats, check=False)
    return mod, ModuleMap(mod, f.target, incl, check=False)


def transpose_cols(cols: List[List[Fraction]], nrows: int) -> Mat:
    """Columns (as vectors) -> matrix."""
    return [[col[i] for col in cols] for i in range(nrows)]


def radical_dims(m: Module) -> Dict[object, int]:
    alg = m.alg
    out = {}
    for v in alg.vertices:
        cols: List[List[Fraction]] = []
        for ar in alg.arrows:
            if ar.target != v:
                continue
            mat = m.mat(ar.name)
            for j in range(m.dims[ar.source]):
                cols.append([mat[i][j] for i in range(m.dims[v])])
        out[v] = linalg.rank(transpose_cols(cols, m.dims[v]), len(cols)) if cols else 0
    return out


def top_generators(m: Module) -> List[Tuple[object, List[Fraction]]]:
    """Vectors lifting a basis of m / rad m, each supported at one vertex."""
    alg = m.alg
    gens = []
    for v in alg.vertices:
        cols: List[List[Fraction]] = []
        for ar in alg.arrows:
            if ar.target != v:
                continue
            mat = m.mat(ar.name)
            for j in range(m.dims[ar.source]):
                cols.append([mat[i][j] for i in range(m.dims[v])])
        space = list(cols)
        r = linalg.rank(transpose_cols(space, m.dims[v]), len(space)) if space else 0
        for e in range(m.dims[v]):
            ev = [Q1 if i == e else Q0 for i in range(m.dims[v])]
            r2 = linalg.rank(transpose_cols(space + [ev], m.dims[v]), len(space) + 1)
            if r2 > r:
                gens.append((v, ev))
                space.append(ev)
                r = r2
    return gens


def projective_cover(m: Module) -> Tuple[Module, ModuleMap, List[object]]:
    """(P, p, vertices) with P the sum of P_v over `vertices` and p minimal
    surjective; raises if m is zero."""
    if m.is_zero():
        raise PreconditionError("zero module has no projective cover here")
    alg = m.alg
    gens = top_generators(m)
    verts = [v for (v, _) in gens]
    projs = [projective_module(alg, v) for v in verts]
    total, injs, _ = direct_sum(projs) if projs else (zero_module(alg), [], [])
    comp_mats = {v: linalg.zeros(m.dims[v], total.dims[v]) for v in alg.vertices}
    p = ModuleMap(total, m, comp_mats, check=False)
    acc = p
    for (v, g), proj, inj in zip(gens, projs, injs):
        mats = {}
        for u in alg.vertices:
            cols = []
            for w in proj.word_basis[u]:
                act = m.path_action(w)
                cols.append([sum(act[i][j] * g[j] for j in range(m.dims[v])) for i in range(m.dims[u])])
            mats[u] = transpose_cols(cols, m.dims[u])
        comp = ModuleMap(proj, m, mats, check=False)
        acc = acc.add(comp.compose(_projection_of(inj)))
    p = acc
    if p.total_rank() != m.total_dim:
        raise InternalError("projective cover is not surjective")
    return total, p, verts


def _projection_of(inj: ModuleMap) -> ModuleMap:
    """The canonical projection matching a block injection (orthonormal columns)."""
    mats = {v: linalg.transpose(inj.mats[v], inj.source.dims[v]) for v in inj.mats}
    return ModuleMap(inj.target, inj.source, mats, check=False)


def truncated_resolution(m: Module, depth: int):
    """Minimal projective resolution truncated at `depth`: a complex
    P^{-depth} -> ... -> P^0 quasi-isomorphic to m in degrees > -depth."""
    from .derived import ComplexOfModules

    if m.is_zero():
        raise PreconditionError("zero module")
    if depth < 0:
        raise PreconditionError("depth must be >= 0")
    p0, eps, _ = projective_cover(m)
    terms = {0: p0}
    diffs = {}
    cur = eps
    for k in range(1, depth + 1):
        ker, incl = kernel_module(cur)
        if ker.is_zero():
            break
        pk, cov, _ = projective_cover(ker)
        terms[-k] = pk
        diffs[-k] = incl.compose(cov)
        cur = cov
    return ComplexOfModules(m.alg, terms, diffs)


# ---------------------------------------------------------------------------
# bricks and semibricks

def is_brick(m: Module) -> bool:
    if m.is_zero():
        return False
    return hom_dim(m, m) == 1


def is_semibrick(mods: Sequence[Module]) -> bool:
    for i, x in enumerate(mods):
        for j, y in enumerate(mods):
            d = hom_dim(x, y)
            if d != (1 if i == j else 0):
                return False
    return True


def _gl_order(d: int, p: int) -> int:
    out = 1
    for k in range(d):
        out *= p**d - p**k
    return out


def enumerate_bricks(
    alg: QuiverAlgebra,
    bound: Dict,
    p: int,
    *,
    budget: int = 10**7,
) -> List[Tuple[Tuple[int, ...], int]]:
    """Exhaustive brick census over F_p up to the componentwise `bound`:
    all arrow-matrix tuples satisfying the relations, endomorphism ring of
    dimension 1, counted up to simultaneous base change.  Returns
    (dim vector, iso-class count) pairs for nonempty classes."""
    if p < 2 or any(p % q == 0 for q in range(2, p)) and p != 2:
        raise PreconditionError("p must be prime")
    bounds = [int(bound.get(v, 0)) for v in alg.vertices]
    if any(b < 0 for b in bounds):
        raise PreconditionError("negative bound")
    # reduce relation coefficients mod p
    rels_p = []
    for rel in alg.relations:
        terms = []
        for w, c in rel.items():
            if c.denominator % p == 0:
                raise PreconditionError("relation coefficient not defined mod p")
            cp = (c.numerator * pow(c.denominator, p - 2, p)) % p
            if cp:
                terms.append((w, cp))
        rels_p.append(terms)

    out = []
    for dims_t in itertools.product(*(range(b + 1) for b in bounds)):
        if not any(dims_t):
            continue
        dims = dict(zip(alg.vertices, dims_t))
        shapes = [(dims[ar.target], dims[ar.source]) for ar in alg.arrows]
        entries = sum(r * c for r, c in shapes)
        if p**entries > budget:
            raise BudgetError(
                f"{p}^{entries} exceeds enumeration budget {budget} at dim vector {dims_t}"
            )
        nsol = 0
        for flat in itertools.product(range(p), repeat=entries):
            mats = []
            off = 0
            for (r, c) in shapes:
                mats.append([list(flat[off + i * c: off + (i + 1) * c]) for i in range(r)])
                off += r * c
            byname = {ar.name: mm for ar, mm in zip(alg.arrows, mats)}
            if not _relations_hold_p(alg, dims, byname, rels_p, p):
                continue
            if _end_dim_p(alg, dims, byname, p) == 1:
                nsol += 1
        if nsol:
            group = 1
            for d in dims_t:
                group *= _gl_order(d, p)
            if (nsol * (p - 1)) % group != 0:
                raise InternalError("orbit count is not integral")
            out.append((dims_t, nsol * (p - 1) // group))
    return sorted(out)


def _relations_hold_p(alg, dims, mats, rels_p, p) -> bool:
    for terms in rels_p:
        # terms are parallel paths: shared endpoints
        w0 = terms[0][0]
        src, tgt = alg.word_source(w0), alg.word_target(w0)
        if dims[src] == 0 or dims[tgt] == 0:
            continue
        acc = [[0] * dims[src] for _ in range(dims[tgt])]
        for w, cp in terms:
            cur = [[1 if i == j else 0 for j in range(dims[src])] for i in range(dims[src])]
            dead = False
            for a in w[1]:
                ar = alg.arrows[a]
                if dims[ar.target] == 0:
                    # the path acts through a zero space, so it contributes
                    # nothing (and fp_mat_mul would lose the column count)
                    dead = True
                    break
                cur = linalg.fp_mat_mul(mats[ar.name], cur, p)
            if dead:
                continue
            acc = [[(x + cp * y) % p for x, y in zip(r1, r2)] for r1, r2 in zip(acc, cur)]
        if any(x for row in acc for x in row):
            return False
    return True


def _end_dim_p(alg, dims, mats, p) -> int:
    offsets = {}
    total = 0
    for v in alg.vertices:
        offsets[v] = total
        total += dims[v] * dims[v]
    rows = []
    for ar in alg.arrows:
        u, w = ar.source, ar.target
        A = mats[ar.name]
        for i in range(dims[w]):
            for j in range(dims[u]):
                row = [0] * total
                for t in range(dims[w]):
                    row[offsets[w] + i * dims[w] + t] = (row[offsets[w] + i * dims[w] + t] + A[t][j]) % p
                for s in range(dims[u]):
                    row[offsets[u] + s * dims[u] + j] = (row[offsets[u] + s * dims[u] + j] - A[i][s]) % p
                rows.append(row)
    return linalg.fp_nullity(rows, total, p)


# ---------------------------------------------------------------------------
# randomized module generation (rejection-sampled against the relations)

def random_module(alg: QuiverAlgebra, rng, max_dim: int = 2, attempts: int = 500) -> Module:
    for _ in range(attempts):
        dims = {v: rng.randint(0, max_dim) for v in alg.vertices}
        if not any(dims.values()):
            continue
        mats = {
            ar.name: [
                [rng.choice((-1, 0, 1)) for _ in range(dims[ar.source])]
                for _ in range(dims[ar.target])
            ]
            for ar in alg.arrows
        }
        try:
            return Module(alg, dims, mats)
        except PreconditionError:
            continue
    raise BudgetError("could not sample a relation-satisfying module")


def is_isomorphic_modules(m: Module, n: Module, rng=None, tries: int = 12) -> bool:
    """Unit search in Hom(m, n): random rational combinations checked exactly,
    with a small deterministic fallback sweep."""
    if m.dims != n.dims:
        return False
    if m.total_dim == 0:
        return True
    basis = hom_module(m, n)
    if not basis:
        return False
    import random as _random

    rng = rng or _random.Random(11)
    combos: List[List[int]] = [
        [1 if i == j else 0 for j in range(len(basis))] for i in range(len(basis))
    ]
    combos += [
        [rng.randint(-9, 9) for _ in range(len(basis))] for _ in range(tries)
    ]
    if len(basis) <= 4:
        combos += [list(t) for t in itertools.product((-1, 0, 1, 2), repeat=len(basis))]
    for coef in combos:
        mats = {}
        ok = True
        for v in m.alg.vertices:
            acc = linalg.zeros(n.dims[v], m.dims[v])
            for c, b in zip(coef, basis):
                if c:
                    acc = linalg.mat_add(acc, linalg.mat_scale(Fraction(c), b.mats[v]))
            if linalg.inverse(acc) is None:
                ok = False
                break
            mats[v] = acc
        if ok:
            return True
    return False
