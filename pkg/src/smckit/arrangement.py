"""Central hyperplane arrangements dual to restricted roots: chambers, the
chamber graph, and its atoms (shortest positive paths, stored as endpoint
pairs).

Everything is exact: chamber membership is decided by Fourier-Motzkin
elimination over the rationals and every chamber carries an exact rational
interior witness.  Dimension is guarded at 4.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from .dynkin import RestrictedRoot
from .errors import BudgetError, InternalError, PreconditionError

Vec = Tuple[Fraction, ...]

MAX_DIM = 4
MAX_HYPERPLANES = 16


def _primitive(v: Sequence[int]) -> Tuple[int, ...]:
    g = 0
    for x in v:
        g = gcd(g, abs(x))
    if g == 0:
        raise PreconditionError("zero normal vector")
    w = [x // g for x in v]
    for x in w:
        if x:
            if x < 0:
                w = [-y for y in w]
            break
    return tuple(w)


def hyperplanes_from(restricted: Sequence[RestrictedRoot]) -> List[Tuple[int, ...]]:
    """Primitive canonical normals, deduplicated in first-seen order."""
    out: List[Tuple[int, ...]] = []
    seen = set()
    for r in restricted:
        n = _primitive(r.coords)
        if n not in seen:
            seen.add(n)
            out.append(n)
    return out


# ---------------------------------------------------------------------------
# Fourier-Motzkin elimination for strict homogeneous systems

def _fm_witness(ineqs: List[List[Fraction]], dim: int) -> Optional[List[Fraction]]:
    """A rational point with row . x > 0 for every row, or None."""
    rows = []
    for r in ineqs:
        if any(r):
            rows.append(list(r))
        else:
            return None  # 0 > 0
    if dim == 0:
        return []
    lower, upper, rest = [], [], []
    for r in rows:
        c = r[dim - 1]
        head = r[: dim - 1]
        if c > 0:
            lower.append([-x / c for x in head])   # x_d > f(x')
        elif c < 0:
            upper.append([-x / c for x in head])   # x_d < g(x')
        else:
            rest.append(head)
    reduced = [list(r) for r in rest]
    for f in lower:
        for g in upper:
            reduced.append([gi - fi for fi, gi in zip(f, g)])  # g - f > 0
    # dedupe to keep the quadratic growth in check
    uniq = []
    seen = set()
    for r in reduced:
        key = tuple(r)
        if key not in seen:
            seen.add(key)
            uniq.append(r)
    sub = _fm_witness(uniq, dim - 1)
    if sub is None:
        return None
    lb = max((sum(c * x for c, x in zip(f, sub)) for f in lower), default=None)
    ub = min((sum(c * x for c, x in zip(g, sub)) for g in upper), default=None)
    if lb is not None and ub is not None:
        if not lb < ub:
            raise InternalError("Fourier-Motzkin back-substitution found empty interval")
        last = (lb + ub) / 2
    elif lb is not None:
        last = lb + 1
    elif ub is not None:
        last = ub - 1
    else:
        last = Fraction(0)
    return sub + [last]


class Chamber:
    """Sign vector (+1/-1 per hyperplane) with an exact interior witness."""

    def __init__(self, signs: Tuple[int, ...], witness: Vec):
        self.signs = signs
        self.witness = witness

    @property
    def sign_string(self) -> str:
        return "".join("+" if s > 0 else "-" for s in self.signs)

    def __repr__(self) -> str:
        return f"Chamber({self.sign_string})"


class ChamberGraph:
    """Chambers of a central arrangement plus full-dimensional-facet adjacency."""

    def __init__(self, normals: Sequence[Tuple[int, ...]]):
        if not normals:
            raise PreconditionError("empty arrangement")
        dim = len(normals[0])
        if dim > MAX_DIM:
            raise PreconditionError(f"dimension {dim} exceeds the guard ({MAX_DIM})")
        if len(normals) > MAX_HYPERPLANES:
            raise BudgetError(f"{len(normals)} hyperplanes exceed the guard ({MAX_HYPERPLANES})")
        for n in normals:
            if len(n) != dim:
                raise PreconditionError("normals of mixed dimension")
            if not any(n):
                raise PreconditionError("zero normal vector")
        self.normals = [tuple(n) for n in normals]
        self.dim = dim
        self.chambers: List[Chamber] = []
        self._index: Dict[Tuple[int, ...], int] = {}
        self._enumerate_chambers()
        self.edges: List[Tuple[int, int, int, Vec]] = []
        self.adjacency: Dict[int, List[int]] = {i: [] for i in range(len(self.chambers))}
        self._build_edges()

    # -- construction --

    def _enumerate_chambers(self) -> None:
        m = len(self.normals)
        for mask in range(1 << m):
            signs = tuple(1 if not (mask >> k) & 1 else -1 for k in range(m))
            rows = [
                [Fraction(s * c) for c in n]
                for s, n in zip(signs, self.normals)
            ]
            w = _fm_witness(rows, self.dim)
            if w is not None:
                self._index[signs] = len(self.chambers)
                self.chambers.append(Chamber(signs, tuple(w)))

    def _facet_witness(self, signs: Tuple[int, ...], wall: int) -> Optional[Vec]:
        """Relative-interior point of the shared facet on `wall`, or None."""
        n = self.normals[wall]
        # eliminate one variable via n . x = 0
        piv = next(i for i, c in enumerate(n) if c)
        rows = []
        for k, (s, nk) in enumerate(zip(signs, self.normals)):
            if k == wall:
                continue
            r = [Fraction(s * c) for c in nk]
            # substitute x_piv = -(sum_{i != piv} n_i x_i)/n_piv
            coef = r[piv]
            r2 = [
                r[i] - coef * Fraction(n[i], n[piv])
                for i in range(self.dim)
                if i != piv
            ]
            rows.append(r2)
        sub = _fm_witness(rows, self.dim - 1)
        if sub is None:
            return None
        full = list(sub)
        x_piv = -sum(Fraction(n[i]) * v for i, v in zip(
            [i for i in range(self.dim) if i != piv], sub)) / n[piv]
        full.insert(piv, x_piv)
        return tuple(full)

    def _build_edges(self) -> None:
        for i, c in enumerate(self.chambers):
            for wall in range(len(self.normals)):
                flipped = list(c.signs)
                flipped[wall] = -flipped[wall]
                j = self._index.get(tuple(flipped))
                if j is None or j < i:
                    continue
                w = self._facet_witness(c.signs, wall)
                if w is not None:
                    self.edges.append((i, j, wall, w))
                    self.adjacency[i].append(j)
                    self.adjacency[j].append(i)

    # -- queries --

    def chamber_index(self, signs: Tuple[int, ...]) -> int:
        try:
            return self._index[tuple(signs)]
        except KeyError:
            raise PreconditionError(f"no chamber with signs {signs}") from None

    def separation_set(self, i: int, j: int) -> FrozenSet[int]:
        a, b = self.chambers[i], self.chambers[j]
        return frozenset(k for k, (s, t) in enumerate(zip(a.signs, b.signs)) if s != t)

    def opposite_chamber(self, i: int) -> int:
        flipped = tuple(-s for s in self.chambers[i].signs)
        j = self._index.get(flipped)
        if j is None:
            raise InternalError(f"chamber {i} has no opposite; central arrangement broken")
        return j

    def graph_distance(self, i: int, j: int) -> int:
        if i == j:
            return 0
        dist = {i: 0}
        queue = [i]
        while queue:
            nxt = []
            for u in queue:
                for v in self.adjacency[u]:
                    if v not in dist:
                        dist[v] = dist[u] + 1
                        if v == j:
                            return dist[v]
                        nxt.append(v)
            queue = nxt
        raise InternalError("chamber graph is disconnected")

    def is_reduced(self, path: Sequence[int]) -> bool:
        """A positive path (list of chamber indices) is reduced iff its length
        equals the separation number of its endpoints."""
        if not path:
            raise PreconditionError("empty path")
        for u, v in zip(path, path[1:]):
            if v not in self.adjacency[u]:
                raise PreconditionError(f"chambers {u} and {v} are not adjacent")
        return len(path) - 1 == len(self.separation_set(path[0], path[-1]))


class Atom:
    """The unique shortest positive path between two chambers, stored as its
    endpoints (source, target)."""

    def __init__(self, source: int, target: int):
        self.source = source
        self.target = target

    def __repr__(self) -> str:
        return f"Atom({self.source} -> {self.target})"

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Atom)
            and (self.source, self.target) == (other.source, other.target)
        )

    def __hash__(self) -> int:
        return hash((self.source, self.target))


def atoms_from(graph: ChamberGraph, source: int) -> List[Atom]:
    return [Atom(source, t) for t in range(len(graph.chambers))]


def atom_length(graph: ChamberGraph, atom: Atom) -> int:
    return len(graph.separation_set(atom.source, atom.target))


def atom_leq(graph: ChamberGraph, beta: Atom, alpha: Atom) -> bool:
    """beta <= alpha in the atom order: sep(s, t(beta)) contained in
    sep(s, t(alpha)).  Both atoms must share their source."""
    if beta.source != alpha.source:
        raise PreconditionError("atom order compares atoms with a common source")
    s = beta.source
    return graph.separation_set(s, beta.target) <= graph.separation_set(s, alpha.target)


def atom_leq_definitional(graph: ChamberGraph, beta: Atom, alpha: Atom) -> bool:
    """beta <= alpha iff some atom gamma composes with beta, reductions intact,
    to give alpha: |sep(s,t_beta)| + |sep(t_beta,t_alpha)| = |sep(s,t_alpha)|.
    Equivalent to `atom_leq` because sign vectors make sep(s,t_alpha) the
    symmetric difference of the other two separation sets, and a disjoint
    symmetric difference of this shape is exactly a containment."""
    if beta.source != alpha.source:
        raise PreconditionError("atom order compares atoms with a common source")
    s = beta.source
    a = len(graph.separation_set(s, beta.target))
    b = len(graph.separation_set(beta.target, alpha.target))
    c = len(graph.separation_set(s, alpha.target))
    return a + b == c


def longest_atom(graph: ChamberGraph, source: int) -> Atom:
    """The atom from `source` to its opposite; its length is the number of
    hyperplanes."""
    atom = Atom(source, graph.opposite_chamber(source))
    if atom_length(graph, atom) != len(graph.normals):
        raise InternalError("longest atom does not cross every hyperplane")
    return atom


# ---------------------------------------------------------------------------
# serialisation

def graph_to_json_obj(graph: ChamberGraph) -> dict:
    return {
        "chambers": [
            {
                "signs": c.sign_string,
                "witness": [str(x) for x in c.witness],
            }
            for c in graph.chambers
        ],
        "edges": [[i, j] for (i, j, _, _) in graph.edges],
    }


def graph_to_dot(graph: ChamberGraph) -> str:
    lines = ["graph chambers {"]
    for i, c in enumerate(graph.chambers):
        lines.append(f'  c{i} [label="{c.sign_string}"];')
    for (i, j, wall, _) in graph.edges:
        lines.append(f'  c{i} -- c{j} [label="H{wall}"];')
    lines.append("}")
    return "\n".join(lines)
