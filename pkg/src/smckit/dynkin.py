"""ADE diagrams, root systems, and coordinate-deletion restriction.

Node numbering convention (pinned; all fixtures depend on it):

* ``A_n``: the chain ``1 - 2 - ... - n``.
* ``D_n``: node 2 is the branch node, adjacent to 1, 3 and 4, and the tail
  continues ``4 - 5 - ... - n``::

      1         D4: 2 adjacent to 1, 3, 4
       \\
        2 - 4 - 5 - ... - n
       /
      3

* ``E_n`` (n = 6, 7, 8): the chain ``1 - 3 - 4 - 5 - ... - n`` with node 2
  attached to node 4.

Roots are integer coefficient vectors over the simple roots, as tuples indexed
by node (position 0 = node 1).  All arithmetic is exact.
"""

from __future__ import annotations

from typing import Dict, FrozenSet, List, Sequence, Tuple

from .errors import ParseError, PreconditionError

Root = Tuple[int, ...]


class DynkinDiagram:
    """A simply-laced diagram with the pinned numbering."""

    def __init__(self, family: str, rank: int):
        family = family.upper()
        if family == "A":
            if rank < 1:
                raise ParseError("A_n needs n >= 1")
            edges = [(i, i + 1) for i in range(1, rank)]
        elif family == "D":
            if rank < 4:
                raise ParseError("D_n needs n >= 4")
            edges = [(1, 2), (2, 3), (2, 4)] + [(i, i + 1) for i in range(4, rank)]
        elif family == "E":
            if rank not in (6, 7, 8):
                raise ParseError("E_n needs n in {6, 7, 8}")
            edges = [(1, 3), (3, 4), (2, 4)] + [(i, i + 1) for i in range(4, rank)]
        else:
            raise ParseError(f"unknown family {family!r} (expected A, D or E)")
        self.family = family
        self.rank = rank
        self.vertices: List[int] = list(range(1, rank + 1))
        self.edges: List[Tuple[int, int]] = [(min(e), max(e)) for e in edges]
        self._adj: Dict[int, FrozenSet[int]] = {
            v: frozenset(
                w for e in self.edges for w in e if v in e and w != v
            )
            for v in self.vertices
        }

    def __repr__(self) -> str:
        return f"{self.family}{self.rank}"

    def adjacent(self, i: int, j: int) -> bool:
        return j in self._adj[i]

    def cartan_matrix(self) -> List[List[int]]:
        n = self.rank
        c = [[0] * n for _ in range(n)]
        for i in range(n):
            c[i][i] = 2
        for (u, v) in self.edges:
            c[u - 1][v - 1] = -1
            c[v - 1][u - 1] = -1
        return c

    def simple_roots(self) -> List[Root]:
        n = self.rank
        return [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]

    def reflect(self, v: Root, i: int) -> Root:
        """Simple reflection s_i(v) = v - <v, alpha_i^vee> alpha_i (1-based i)."""
        c = self.cartan_matrix()
        pairing = sum(c[i - 1][j] * v[j] for j in range(self.rank))
        out = list(v)
        out[i - 1] -= pairing
        return tuple(out)

    def positive_roots(self) -> List[Root]:
        """Reflection closure of the simple roots, sorted by (height, coords)."""
        found = set(self.simple_roots())
        frontier = list(found)
        while frontier:
            nxt: List[Root] = []
            for r in frontier:
                for i in self.vertices:
                    s = self.reflect(r, i)
                    if all(x >= 0 for x in s) and any(s) and s not in found:
                        found.add(s)
                        nxt.append(s)
            frontier = nxt
        return sorted(found, key=lambda r: (sum(r), r))

    def braid_check(self, i: int, j: int) -> bool:
        """Verify the braid relation between s_i and s_j on the root lattice."""
        if i == j:
            raise PreconditionError("braid_check needs two distinct nodes")
        si = _reflection_matrix(self, i)
        sj = _reflection_matrix(self, j)
        if self.adjacent(i, j):
            lhs = _mul(_mul(si, sj), si)
            rhs = _mul(_mul(sj, si), sj)
        else:
            lhs = _mul(si, sj)
            rhs = _mul(sj, si)
        return lhs == rhs


def _reflection_matrix(d: DynkinDiagram, i: int) -> List[List[int]]:
    n = d.rank
    cols = []
    for j in range(n):
        e = tuple(1 if t == j else 0 for t in range(n))
        cols.append(d.reflect(e, i))
    return [[cols[j][r] for j in range(n)] for r in range(n)]


def _mul(a: List[List[int]], b: List[List[int]]) -> List[List[int]]:
    n = len(a)
    return [
        [sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)]
        for i in range(n)
    ]


class RestrictedRoot:
    """A nonzero projected root with one witness positive root."""

    def __init__(self, coords: Tuple[int, ...], witness: Root):
        self.coords = coords
        self.witness = witness

    def __repr__(self) -> str:
        return "".join(str(c) for c in self.coords)

    def __eq__(self, other) -> bool:
        return isinstance(other, RestrictedRoot) and self.coords == other.coords

    def __hash__(self) -> int:
        return hash(self.coords)


def restrict_roots(diagram: DynkinDiagram, deleted: Sequence[int]) -> List[RestrictedRoot]:
    """Nonzero images of the positive roots under deletion of the coordinates
    in `deleted`; kept coordinates stay in ascending node order.  Deduplicated,
    first witness kept, ordered by first appearance in the sorted root list."""
    dset = set(deleted)
    if not dset.issubset(set(diagram.vertices)):
        raise PreconditionError(f"deleted nodes {sorted(dset)} not a subset of {diagram!r}")
    if dset == set(diagram.vertices):
        raise PreconditionError("cannot delete every node")
    kept = [v for v in diagram.vertices if v not in dset]
    seen: Dict[Tuple[int, ...], RestrictedRoot] = {}
    for root in diagram.positive_roots():
        coords = tuple(root[v - 1] for v in kept)
        if not any(coords):
            continue
        if coords not in seen:
            seen[coords] = RestrictedRoot(coords, root)
    return list(seen.values())


def primitive_restricted_roots(restricted: Sequence[RestrictedRoot]) -> List[RestrictedRoot]:
    """Those restricted roots that are not an integer multiple (>= 2) of another."""
    coords = {r.coords for r in restricted}
    out = []
    for r in restricted:
        multiple = False
        for s in coords:
            if s == r.coords:
                continue
            ks = {c // d for c, d in zip(r.coords, s) if d} if all(
                (d == 0) == (c == 0) for c, d in zip(r.coords, s)
            ) else set()
            if len(ks) == 1:
                k = ks.pop()
                if k >= 2 and all(c == k * d for c, d in zip(r.coords, s)):
                    multiple = True
                    break
        if not multiple:
            out.append(r)
    return out


def parse_dynkin(text: str) -> Tuple[DynkinDiagram, List[int]]:
    """Parse the grammar ``<family><rank>[:I=<comma list>]``, e.g. ``D5:I=1,3,5``.

    A bare ``A2`` means I is empty; ``A2:I=`` is the same thing spelled out.
    """
    text = text.strip()
    head, sep, tail = text.partition(":")
    if not head or not head[0].isalpha():
        raise ParseError(f"bad Dynkin string {text!r}")
    family, digits = head[0], head[1:]
    if not digits.isdigit():
        raise ParseError(f"bad rank in Dynkin string {text!r}")
    diagram = DynkinDiagram(family, int(digits))
    deleted: List[int] = []
    if sep:
        if not tail.startswith("I="):
            raise ParseError(f"expected ':I=...' in {text!r}")
        body = tail[2:].strip()
        if body:
            try:
                deleted = [int(x) for x in body.split(",")]
            except ValueError as exc:
                raise ParseError(f"bad node list in {text!r}") from exc
    if len(set(deleted)) != len(deleted):
        raise ParseError(f"repeated node in {text!r}")
    for v in deleted:
        if v not in diagram.vertices:
            raise ParseError(f"node {v} out of range in {text!r}")
    return diagram, deleted
